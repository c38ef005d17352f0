#pragma once

#include <functional>
#include <vector>

#include "spinlab/hilbert.hpp"

namespace spinlab {

enum class Family { XXX, XXZ };

// XXX spectral parameters shift additively per site, XXZ multiplicatively.
struct Model {
    Family family = Family::XXX;
    int L = 2;
    cplx q = 1.0;
    std::vector<cplx> xi;  // empty means homogeneous

    static Model xxx(int L);
    static Model xxz(int L, cplx q);

    cplx site_arg(cplx lam, int k) const;
    bool homogeneous() const { return xi.empty(); }
};

// throws std::domain_error when q is zero or too close to a root of unity
void validate(const Model& m);
void check_q(cplx q, int order);

// principal branch, cut on the negative real axis
cplx sqrt_p(cplx z);

Mat4 r_xxx(cplx d);
Mat4 rhat_q(cplx q);           // matrix-unit form
Mat4 rhat_q_pauli(cplx q);     // Pauli-matrix form with constant (3q - 1/q)/4
Mat4 rhat_baxter(cplx mu, cplx q);
Mat4 r_xxz(cplx lam, cplx q);  // untwisted: rhat_baxter * P
Mat4 r_xxz_twisted(cplx lam, cplx q);

// Lax operator on aux (x) site with index 2*aux + spin
Mat4 lax(const Model& m, cplx arg);

// vacuum eigenvalues of one site
cplx a_fn(const Model& m, cplx arg);
cplx d_fn(const Model& m, cplx arg);
// exchange coefficients of the global commutation relations
cplx f_fn(const Model& m, cplx lam, cplx mu);
cplx g_fn(const Model& m, cplx lam, cplx mu);

enum class YbeForm { vertex, braid };
using RFamily = std::function<Mat4(cplx)>;

double ybe_vertex_residual(const RFamily& R, cplx lam, cplx mu, bool multiplicative);
double ybe_braid_residual(const RFamily& R, cplx lam, cplx mu, bool multiplicative);
double check_ybe(YbeForm form, const Model& m, cplx lam, cplx mu);

enum class Entry { A, B, C, D };

// monodromy entry acting on v, sweeping sites last..first (site `last` innermost)
State monodromy_apply(const Model& m, Entry e, cplx lam, const State& v);
State monodromy_apply_range(const Model& m, Entry e, cplx lam, const State& v, int first, int last);
State transfer_apply(const Model& m, cplx lam, const State& v);

// XXX: sum of S.S with periodic wrap. XXZ: sum of Hecke generators including
// the (L,1) term, no constant shift.
State hamiltonian_apply(const Model& m, const State& v);

// (2 * 2^L)-square matrix, aux index most significant
MatX dense_monodromy(const Model& m, cplx lam);
MatX dense_transfer(const Model& m, cplx lam);

// residual of R T_a T_b = T_b T_a R on V_a (x) V_b (x) chain
double fcr_residual(const Model& m, cplx lam, cplx mu);

// point where the XXX Lax operator reduces to the permutation
inline constexpr double xxx_shift_point = 0.0;

cplx eigenvalue_xxx(int L, cplx lam, const std::vector<cplx>& roots);
cplx eigenvalue_xxx_derivative(int L, cplx lam, const std::vector<cplx>& roots);
// (1/2) d/dlam ln Lambda at the shift point, minus L/4
cplx lambda_derivative_energy(const Model& m, const std::vector<cplx>& roots);

}  // namespace spinlab
