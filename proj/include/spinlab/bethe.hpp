#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "spinlab/lax.hpp"

namespace spinlab {

// which set of Bethe equations; roots are lambda for xxx/xxz, X for the coordinate forms
enum class Equations { xxx, xxz, polaron, xxz_coordinate };

struct BetheSystem {
    Equations eq = Equations::xxx;
    int L = 2;
    cplx q = 1.0;

    static BetheSystem xxx(int L) { return {Equations::xxx, L, 1.0}; }
    static BetheSystem xxz(int L, cplx q) { return {Equations::xxz, L, q}; }
    static BetheSystem polaron(int L, cplx q) { return {Equations::polaron, L, q}; }
    static BetheSystem xxz_coordinate(int L, cplx q) { return {Equations::xxz_coordinate, L, q}; }

    Model model() const;  // the transfer-matrix model (xxx/xxz only)
};

std::string to_string(Equations e);
Equations equations_from_string(const std::string& s);

struct BetheRootSet {
    BetheSystem sys;
    std::vector<cplx> roots;  // sorted by (re, im)
    double residual = 0.0;
    cplx energy = 0.0;
    std::string provenance;
    int M() const { return static_cast<int>(roots.size()); }
};

struct SolveConfig {
    int starts = 200;
    int max_iter = 80;
    int max_halvings = 12;     // backtracking line search: step 1, 1/2, ... 2^-max_halvings
    double cloud = 0.7;        // Gaussian start spread, relative to the center scale
    double dedupe_tol = 1e-7;
    double accept = 1e-10;
    double distinct = 1e-6;
    std::uint64_t seed = 1;

    void validate() const;
};

// polynomial-cleared equations written as lhs_k - rhs_k
struct ClearedSides {
    std::vector<cplx> lhs, rhs;
};
ClearedSides bethe_sides(const BetheSystem& s, const std::vector<cplx>& roots);
std::vector<cplx> bethe_residual(const BetheSystem& s, const std::vector<cplx>& roots);
// max_k |lhs_k - rhs_k| / (|lhs_k| + |rhs_k|)
double normalized_residual(const BetheSystem& s, const std::vector<cplx>& roots);

// throws std::domain_error if a root sits where the uncleared equations are singular
void check_root_domain(const BetheSystem& s, const std::vector<cplx>& roots, double tol = 1e-8);

// alpha prod f(lam_i, lam) + delta prod f(lam, lam_i)
cplx lambda_eigenvalue(const Model& m, cplx lam, const std::vector<cplx>& roots);

cplx polaron_energy(cplx q, const std::vector<cplx>& X);
cplx xxz_to_polaron_map(cplx q, cplx lam);
cplx polaron_to_xxz_map(cplx q, cplx X);

// eigenvalue of the chain Hamiltonian the equations belong to: S.S sum (xxx), the
// closed Hecke sum (xxz, xxz_coordinate), the fermionic polaron Hamiltonian (polaron)
cplx bethe_energy(const BetheSystem& s, const std::vector<cplx>& roots);

std::vector<cplx> canonical_order(std::vector<cplx> roots);
std::vector<cplx> fingerprint(const std::vector<cplx>& roots);  // elementary symmetric e_1..e_M
bool same_fingerprint(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol);

struct NewtonResult {
    std::vector<cplx> roots;
    double residual = 1.0;
    int iterations = 0;
    bool converged = false;
};
NewtonResult newton(const BetheSystem& s, std::vector<cplx> start, const SolveConfig& cfg);

struct SolveResult {
    std::vector<BetheRootSet> sets;
    int converged_starts = 0;
    int rejected_domain = 0;
    int rejected_degenerate = 0;
    std::string diagnostic;  // nonempty when nothing converged
};
SolveResult solve_bethe(const BetheSystem& s, int M, const SolveConfig& cfg);

}  // namespace spinlab
