#include "spinlab/lax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spinlab {

Model Model::xxx(int L)
{
    Model m;
    m.family = Family::XXX;
    m.L = L;
    return m;
}

Model Model::xxz(int L, cplx q)
{
    Model m;
    m.family = Family::XXZ;
    m.L = L;
    m.q = q;
    return m;
}

cplx Model::site_arg(cplx lam, int k) const
{
    if (xi.empty()) return lam;
    return family == Family::XXX ? lam + xi[k - 1] : lam * xi[k - 1];
}

void check_q(cplx q, int order)
{
    if (std::abs(q) < 1e-12) throw std::domain_error("deformation parameter q must be nonzero");
    cplx p = 1.0;
    for (int m = 1; m <= order; ++m) {
        p *= q * q;
        if (std::abs(p - 1.0) <= 1e-6)
            throw std::domain_error("q is within 1e-6 of a root of unity (q^" + std::to_string(2 * m) +
                                    " = 1)");
    }
}

void validate(const Model& m)
{
    if (m.L < 2 || m.L > max_sites) throw std::invalid_argument("chain length outside 2..16");
    if (!m.xi.empty() && static_cast<int>(m.xi.size()) != m.L)
        throw std::invalid_argument("need one inhomogeneity per site");
    if (m.family == Family::XXZ) check_q(m.q, m.L);
}

cplx sqrt_p(cplx z) { return std::sqrt(z); }

Mat4 r_xxx(cplx d)
{
    Mat4 r = Mat4::Zero();
    r(0, 0) = r(3, 3) = d + 1.0;
    r(1, 1) = r(2, 2) = d;
    r(1, 2) = r(2, 1) = 1.0;
    return r;
}

Mat4 rhat_q(cplx q)
{
    // q e_ii(x)e_ii + e_ij(x)e_ji + (q - 1/q) e_00(x)e_11
    Mat4 r = Mat4::Zero();
    r(0, 0) = r(3, 3) = q;
    r(1, 2) = r(2, 1) = 1.0;
    r(1, 1) = q - 1.0 / q;
    return r;
}

Mat4 rhat_q_pauli(cplx q)
{
    using namespace pauli;
    const cplx qi = 1.0 / q;
    return 0.5 * (kron(x(), x()) + kron(y(), y()) + 0.5 * (q + qi) * kron(z(), z())) +
           0.25 * (q - qi) * (kron(z(), id()) - kron(id(), z())) + 0.25 * (3.0 * q - qi) * kron(id(), id());
}

Mat4 rhat_baxter(cplx mu, cplx q)
{
    if (mu == 0.0) throw std::domain_error("spectral parameter must be nonzero");
    const cplx s = sqrt_p(mu);
    return (1.0 / s - s) * rhat_q(q) + s * (q - 1.0 / q) * Mat4::Identity();
}

Mat4 r_xxz(cplx lam, cplx q) { return rhat_baxter(lam, q) * permutation(); }

Mat4 r_xxz_twisted(cplx lam, cplx q)
{
    // conjugate the first factor by lam^U, U = diag(1/4, -1/4)
    const cplx t = sqrt_p(sqrt_p(lam));  // lam^{1/4}
    Mat2 u = Mat2::Zero(), ui = Mat2::Zero();
    u(0, 0) = t;
    u(1, 1) = 1.0 / t;
    ui(0, 0) = 1.0 / t;
    ui(1, 1) = t;
    return kron(u, Mat2::Identity()) * r_xxz(lam, q) * kron(ui, Mat2::Identity());
}

Mat4 lax(const Model& m, cplx arg)
{
    if (m.family == Family::XXX) return r_xxx(arg);
    return r_xxz_twisted(arg, m.q);
}

cplx a_fn(const Model& m, cplx arg)
{
    if (m.family == Family::XXX) return arg + 1.0;
    const cplx s = sqrt_p(arg);
    return m.q / s - s / m.q;
}

cplx d_fn(const Model& m, cplx arg)
{
    if (m.family == Family::XXX) return arg;
    const cplx s = sqrt_p(arg);
    return 1.0 / s - s;
}

cplx f_fn(const Model& m, cplx lam, cplx mu)
{
    if (m.family == Family::XXX) return (lam - mu + 1.0) / (lam - mu);
    return (mu * m.q - lam / m.q) / (mu - lam);
}

cplx g_fn(const Model& m, cplx lam, cplx mu)
{
    if (m.family == Family::XXX) return 1.0 / (lam - mu);
    return sqrt_p(lam) * sqrt_p(mu) * (m.q - 1.0 / m.q) / (mu - lam);
}

namespace {

using Mat8 = Eigen::Matrix<cplx, 8, 8>;

Mat8 on12(const Mat4& r)
{
    Mat8 out = Mat8::Zero();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int c = 0; c < 2; ++c) out(2 * i + c, 2 * j + c) = r(i, j);
    return out;
}

Mat8 on23(const Mat4& r)
{
    Mat8 out = Mat8::Zero();
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out(4 * a + i, 4 * a + j) = r(i, j);
    return out;
}

Mat8 on13(const Mat4& r)
{
    const Mat8 p23 = on23(permutation());
    return p23 * on12(r) * p23;
}

double rel(const Mat8& lhs, const Mat8& rhs)
{
    return (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, lhs.cwiseAbs().maxCoeff());
}

}  // namespace

double ybe_vertex_residual(const RFamily& R, cplx x, cplx y, bool multiplicative)
{
    const cplx xy = multiplicative ? x * y : x + y;
    const Mat8 lhs = on12(R(x)) * on13(R(xy)) * on23(R(y));
    const Mat8 rhs = on23(R(y)) * on13(R(xy)) * on12(R(x));
    return rel(lhs, rhs);
}

double ybe_braid_residual(const RFamily& R, cplx x, cplx y, bool multiplicative)
{
    const cplx xy = multiplicative ? x * y : x + y;
    const Mat8 lhs = on12(R(x)) * on23(R(xy)) * on12(R(y));
    const Mat8 rhs = on23(R(y)) * on12(R(xy)) * on23(R(x));
    return rel(lhs, rhs);
}

double check_ybe(YbeForm form, const Model& m, cplx lam, cplx mu)
{
    validate(m);
    if (m.family == Family::XXX) {
        if (form == YbeForm::vertex) return ybe_vertex_residual(r_xxx, lam - mu, mu, false);
        const Mat4 P = permutation();
        return ybe_braid_residual([&](cplx u) { Mat4 r = r_xxx(u) * P; return r; }, lam, mu, false);
    }
    if (lam == 0.0 || mu == 0.0) throw std::domain_error("XXZ spectral parameters must be nonzero");
    const cplx q = m.q;
    if (form == YbeForm::vertex)
        return ybe_vertex_residual([q](cplx u) { return r_xxz_twisted(u, q); }, lam, mu, true);
    return ybe_braid_residual([q](cplx u) { return rhat_baxter(u, q); }, lam, mu, true);
}

static void check_arg(const Model& m, cplx lam)
{
    if (m.family == Family::XXZ && lam == 0.0) throw std::domain_error("XXZ spectral parameter must be nonzero");
}

State monodromy_apply_range(const Model& m, Entry e, cplx lam, const State& v, int first, int last)
{
    if (v.L != m.L) throw std::invalid_argument("state length does not match the model");
    if (first < 1 || last > m.L || first > last) throw std::invalid_argument("bad site range");
    check_arg(m, lam);
    const int row = (e == Entry::A || e == Entry::B) ? 0 : 1;
    const int col = (e == Entry::A || e == Entry::C) ? 0 : 1;
    State w[2] = {State(v.L), State(v.L)};
    w[col] = v;
    for (int k = last; k >= first; --k) {
        const cplx arg = m.site_arg(lam, k);
        check_arg(m, arg);
        const Mat4 lx = lax(m, arg);
        State nw[2] = {State(v.L), State(v.L)};
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const Mat2 blk = lx.block<2, 2>(2 * a, 2 * b);
                if (blk.cwiseAbs().maxCoeff() == 0.0) continue;
                nw[a] += apply_site(blk, k, w[b]);
            }
        w[0] = std::move(nw[0]);
        w[1] = std::move(nw[1]);
    }
    return w[row];
}

State monodromy_apply(const Model& m, Entry e, cplx lam, const State& v)
{
    return monodromy_apply_range(m, e, lam, v, 1, m.L);
}

State transfer_apply(const Model& m, cplx lam, const State& v)
{
    return monodromy_apply(m, Entry::A, lam, v) + monodromy_apply(m, Entry::D, lam, v);
}

State hamiltonian_apply(const Model& m, const State& v)
{
    if (v.L != m.L) throw std::invalid_argument("state length does not match the model");
    State out(v.L);
    if (m.family == Family::XXX) {
        const Mat4 h = 0.5 * permutation() - 0.25 * Mat4::Identity();
        for (int k = 1; k <= m.L; ++k) out += apply_pair(h, k, k == m.L ? 1 : k + 1, v);
    } else {
        const Mat4 r = rhat_q(m.q);
        for (int k = 1; k <= m.L; ++k) out += apply_pair(r, k, k == m.L ? 1 : k + 1, v);
    }
    return out;
}

MatX dense_monodromy(const Model& m, cplx lam)
{
    validate(m);
    const auto n = static_cast<Eigen::Index>(std::size_t{1} << m.L);
    MatX T(2 * n, 2 * n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const State e = basis_state(m.L, std::uint64_t(c));
        T.block(0, c, n, 1) = to_eigen(monodromy_apply(m, Entry::A, lam, e));
        T.block(n, c, n, 1) = to_eigen(monodromy_apply(m, Entry::C, lam, e));
        T.block(0, n + c, n, 1) = to_eigen(monodromy_apply(m, Entry::B, lam, e));
        T.block(n, n + c, n, 1) = to_eigen(monodromy_apply(m, Entry::D, lam, e));
    }
    return T;
}

MatX dense_transfer(const Model& m, cplx lam)
{
    validate(m);
    return dense(m.L, [&](const State& v) { return transfer_apply(m, lam, v); });
}

double fcr_residual(const Model& m, cplx lam, cplx mu)
{
    validate(m);
    const auto n = static_cast<Eigen::Index>(std::size_t{1} << m.L);
    Mat4 R;
    MatX Ta, Tb;
    if (m.family == Family::XXX) {
        R = r_xxx(lam - mu);
        Ta = dense_monodromy(m, lam);
        Tb = dense_monodromy(m, mu);
    } else {
        R = r_xxz_twisted(lam, m.q);
        Ta = dense_monodromy(m, lam * mu);
        Tb = dense_monodromy(m, mu);
    }
    // index on V_a (x) V_b (x) H is (2a + b) n + h
    const Eigen::Index N = 4 * n;
    MatX A = MatX::Zero(N, N), B = MatX::Zero(N, N), RR = MatX::Zero(N, N);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int a2 = 0; a2 < 2; ++a2)
                for (int b2 = 0; b2 < 2; ++b2) {
                    const Eigen::Index r0 = (2 * a + b) * n, c0 = (2 * a2 + b2) * n;
                    if (b == b2) A.block(r0, c0, n, n) = Ta.block(a * n, a2 * n, n, n);
                    if (a == a2) B.block(r0, c0, n, n) = Tb.block(b * n, b2 * n, n, n);
                    RR.block(r0, c0, n, n) = R(2 * a + b, 2 * a2 + b2) * MatX::Identity(n, n);
                }
    const MatX lhs = RR * A * B;
    const MatX rhs = B * A * RR;
    return (lhs - rhs).cwiseAbs().maxCoeff() / std::max(1.0, lhs.cwiseAbs().maxCoeff());
}

namespace {

// value and derivative of prod_i (num_i(lam) / den_i(lam)) with linear factors
struct Dual1 {
    cplx v, d;
};

Dual1 mul(Dual1 a, Dual1 b) { return {a.v * b.v, a.v * b.d + a.d * b.v}; }
Dual1 div(Dual1 a, Dual1 b) { return {a.v / b.v, (a.d * b.v - a.v * b.d) / (b.v * b.v)}; }

Dual1 lambda_xxx(int L, cplx lam, const std::vector<cplx>& roots)
{
    const Dual1 x{lam, 1.0};
    Dual1 a{1.0, 0.0}, d{1.0, 0.0};
    for (int k = 0; k < L; ++k) {
        a = mul(a, {lam + 1.0, 1.0});
        d = mul(d, x);
    }
    for (cplx r : roots) {
        a = mul(a, div({r - lam + 1.0, -1.0}, {r - lam, -1.0}));
        d = mul(d, div({lam - r + 1.0, 1.0}, {lam - r, 1.0}));
    }
    return {a.v + d.v, a.d + d.d};
}

void check_poles(cplx lam, const std::vector<cplx>& roots)
{
    for (cplx r : roots)
        if (std::abs(r - lam) < 1e-12)
            throw std::domain_error("evaluation at Bethe root - use limit check instead");
}

}  // namespace

cplx eigenvalue_xxx(int L, cplx lam, const std::vector<cplx>& roots)
{
    check_poles(lam, roots);
    return lambda_xxx(L, lam, roots).v;
}

cplx eigenvalue_xxx_derivative(int L, cplx lam, const std::vector<cplx>& roots)
{
    check_poles(lam, roots);
    return lambda_xxx(L, lam, roots).d;
}

cplx lambda_derivative_energy(const Model& m, const std::vector<cplx>& roots)
{
    if (m.family != Family::XXX) throw std::invalid_argument("log-derivative energy is defined for XXX");
    const cplx x0 = xxx_shift_point;
    for (cplx r : roots)
        if (std::abs(r - x0) < 1e-12 || std::abs(r - x0 + 1.0) < 1e-12)
            throw std::domain_error("singular root configuration");
    const Dual1 t = lambda_xxx(m.L, x0, roots);
    if (std::abs(t.v) < 1e-300) throw std::domain_error("singular root configuration");
    return 0.5 * t.d / t.v - 0.25 * double(m.L);
}

}  // namespace spinlab
