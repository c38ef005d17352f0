#pragma once

#include <functional>
#include <vector>

#include "spinlab/lax.hpp"

namespace spinlab {

// Increasing 1-based site tuples of length M in colex order.
std::vector<std::vector<int>> site_tuples(int L, int M);
// psibar_{n_1} ... psibar_{n_M} |0>, as (sign, basis index)
std::pair<int, std::uint64_t> ordered_creation(int L, const std::vector<int>& sites);

struct MagnonAmplitudes {
    int L = 0, M = 0;
    std::vector<std::vector<int>> sites;  // colex
    std::vector<cplx> amp;

    State to_state() const;
    static MagnonAmplitudes from_state(const State& v, int M);
};

// B(lam_1) ... B(lam_M) |0>, lam_M applied first
State bethe_vector_algebraic(const Model& m, const std::vector<cplx>& roots);

// explicit double sums over site tuples and root permutations
State bethe_vector_coordinate_xxx(int L, const std::vector<cplx>& roots);
State bethe_vector_coordinate_xxz(int L, cplx q, const std::vector<cplx>& roots);
// site-dependent sum with one-site B operators (sigma^- for XXX, (q - 1/q) sigma^- for XXZ)
State bethe_vector_inhomogeneous(const Model& m, const std::vector<cplx>& roots);

// 0 < cuts[0] < ... < L; component c covers sites cuts[c-1]+1 .. cuts[c]
struct ComponentSplit {
    std::vector<int> cuts;
    void validate(int L) const;
    int components() const { return static_cast<int>(cuts.size()) + 1; }
    std::pair<int, int> range(int c, int L) const;  // 0-based component
};

struct DecompositionResult {
    State lhs, rhs;
    double residual = 0.0;  // max |lhs - rhs| / max(1, max |lhs|)
};
DecompositionResult component_decomposition(const Model& m, const std::vector<cplx>& roots,
                                            const ComponentSplit& split);
double component_decomposition_check(const Model& m, const std::vector<cplx>& roots,
                                     const ComponentSplit& split);

// Nearest-neighbour two-site operators written in fermions, evaluated on two sites.
Mat4 fermion_permutation();
Mat4 fermion_rhat(const Model& m, cplx lam);  // XXX: lam P + 1; XXZ: rescaled baxterized Hecke form
// X(lam) = Rhat_12 ... Rhat_{L-1,L} P_{L-1,L} ... P_12
State x_operator_apply(const Model& m, cplx lam, const State& v);
State fermionic_B_apply(const Model& m, cplx lam, const State& v);
// fermionic XXZ B over the twisted sweep B: sqrt(lam)^(L-1)
cplx fermionic_xxz_scale(int L, cplx lam);
State fermionic_bethe_vector(const Model& m, const std::vector<cplx>& roots);

// Coordinate amplitudes from the adjacent-transposition ratios; same rule for the polaron
// and the XXZ coordinate equations, only their on-shell conditions differ.
cplx transposition_ratio(cplx q, cplx x_left, cplx x_right);
// A of id o pi_{w_1} o pi_{w_2} o ..., letters 1-based
cplx amplitude_along_word(cplx q, const std::vector<cplx>& X, const std::vector<int>& word);
// A for every permutation (lexicographic), via bubble-sort words
std::vector<std::pair<std::vector<int>, cplx>> permutation_amplitudes(cplx q,
                                                                      const std::vector<cplx>& X);
MagnonAmplitudes polaron_coordinate_vector(int L, cplx q, const std::vector<cplx>& X);
MagnonAmplitudes xxz_coordinate_vector_via_amplitudes(int L, cplx q, const std::vector<cplx>& X);

// nonzero amplitudes outside the M-down sector
double off_sector_weight(const State& v, int M);

}  // namespace spinlab
