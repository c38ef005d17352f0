#pragma once
// Reference constructions used only by tests: explicit Kronecker products and
// dense eigen-solves, kept independent of the sweep/bit-twiddling code paths.

#include <algorithm>
#include <complex>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "spinlab/hilbert.hpp"

namespace oracle {

using spinlab::cplx;
using spinlab::Mat2;
using spinlab::Mat4;
using spinlab::MatX;

inline MatX kron(const MatX& a, const MatX& b) { return Eigen::kroneckerProduct(a, b).eval(); }

// m on site k of an L-site chain, site 1 = leftmost factor
inline MatX site(int L, const Mat2& m, int k)
{
    MatX out = MatX::Identity(1, 1);
    for (int j = 1; j <= L; ++j) out = kron(out, j == k ? MatX(m) : MatX(MatX::Identity(2, 2)));
    return out;
}

inline std::vector<Mat2> pauli_basis()
{
    Mat2 i = Mat2::Identity(), x, y, z;
    x << 0, 1, 1, 0;
    y << 0, cplx(0, -1), cplx(0, 1), 0;
    z << 1, 0, 0, -1;
    return {i, x, y, z};
}

// two-site operator through its Pauli decomposition; any pair of distinct sites
inline MatX pair(int L, const Mat4& m, int k1, int k2)
{
    const auto P = pauli_basis();
    const auto n = static_cast<Eigen::Index>(1) << L;
    MatX out = MatX::Zero(n, n);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const MatX ab = Eigen::kroneckerProduct(MatX(P[a]), MatX(P[b])).eval();
            const cplx c = (ab.adjoint() * MatX(m)).trace() / 4.0;
            if (std::abs(c) < 1e-15) continue;
            out += c * site(L, P[a], k1) * site(L, P[b], k2);
        }
    return out;
}

inline MatX lower_op() { Mat2 m; m << 0, 0, 1, 0; return m; }
inline MatX raise_op() { Mat2 m; m << 0, 1, 0, 0; return m; }

// Jordan-Wigner modes as explicit strings of sigma^z
inline MatX jw(int L, int k, bool creator)
{
    const auto P = pauli_basis();
    MatX out = MatX::Identity(1, 1);
    for (int j = 1; j <= L; ++j) {
        MatX f = MatX::Identity(2, 2);
        if (j < k) f = P[3];
        if (j == k) f = creator ? lower_op() : raise_op();
        out = kron(out, f);
    }
    return out;
}

inline std::vector<cplx> sorted_eigs(const MatX& m)
{
    Eigen::ComplexEigenSolver<MatX> es(m, false);
    std::vector<cplx> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        if (std::abs(a.real() - b.real()) > 1e-9) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return v;
}

// distance from x to the nearest entry of a list
inline double nearest(const std::vector<cplx>& list, cplx x)
{
    double best = 1e300;
    for (cplx y : list) best = std::min(best, std::abs(x - y));
    return best;
}

// multiset distance after sorting both lists the same way
inline double multiset_gap(std::vector<cplx> a, std::vector<cplx> b)
{
    if (a.size() != b.size()) return 1e300;
    auto key = [](cplx x, cplx y) {
        if (std::abs(x.real() - y.real()) > 1e-7) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    double g = 0;
    for (std::size_t i = 0; i < a.size(); ++i) g = std::max(g, std::abs(a[i] - b[i]));
    return g;
}

inline double max_entry(const MatX& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracle

namespace oracle {

// basis indices with exactly M down spins, in increasing order
inline std::vector<Eigen::Index> sector_indices(int L, int M)
{
    std::vector<Eigen::Index> out;
    for (Eigen::Index b = 0; b < (Eigen::Index(1) << L); ++b)
        if (__builtin_popcountll(static_cast<unsigned long long>(b)) == M) out.push_back(b);
    return out;
}

inline MatX sector(const MatX& H, int L, int M)
{
    const auto idx = sector_indices(L, M);
    const auto n = static_cast<Eigen::Index>(idx.size());
    MatX out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) out(i, j) = H(idx[i], idx[j]);
    return out;
}

inline MatX heisenberg(int L)
{
    const auto P = pauli_basis();
    const auto n = Eigen::Index(1) << L;
    MatX H = MatX::Zero(n, n);
    for (int k = 1; k <= L; ++k)
        for (int a = 1; a <= 3; ++a) H += 0.25 * site(L, P[a], k) * site(L, P[a], k % L + 1);
    return H;
}

// closed Hecke chain from the matrix-unit form of the generator
inline MatX hecke_chain(int L, cplx q)
{
    Mat4 r = Mat4::Zero();
    r(0, 0) = r(3, 3) = q;
    r(1, 2) = r(2, 1) = 1.0;
    r(1, 1) = q - 1.0 / q;
    const auto n = Eigen::Index(1) << L;
    MatX H = MatX::Zero(n, n);
    for (int k = 1; k <= L; ++k) H += pair(L, r, k, k % L + 1);
    return H;
}

// fermionic hopping with nearest-neighbour density interaction, periodic in the fermions
inline MatX polaron_hamiltonian(int L, cplx q)
{
    const auto n = Eigen::Index(1) << L;
    const cplx qb = q + 1.0 / q;
    MatX H = MatX::Zero(n, n);
    for (int k = 1; k <= L; ++k) {
        const int k1 = k % L + 1;
        const MatX nk = jw(L, k, true) * jw(L, k, false), nk1 = jw(L, k1, true) * jw(L, k1, false);
        H += jw(L, k1, true) * jw(L, k, false) + jw(L, k, true) * jw(L, k1, false) + qb * nk * nk1 - qb * nk;
    }
    return H;
}

}  // namespace oracle
