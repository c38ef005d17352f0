#include "spinlab/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace spinlab {

State::State(int sites) : L(sites), amp(std::size_t{1} << sites, cplx{0.0, 0.0}) {}

State& State::operator+=(const State& o)
{
    if (o.L != L) throw std::invalid_argument("state length mismatch");
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] += o.amp[i];
    return *this;
}

State& State::operator-=(const State& o)
{
    if (o.L != L) throw std::invalid_argument("state length mismatch");
    for (std::size_t i = 0; i < amp.size(); ++i) amp[i] -= o.amp[i];
    return *this;
}

State& State::operator*=(cplx s)
{
    for (auto& a : amp) a *= s;
    return *this;
}

State operator+(State a, const State& b) { return a += b; }
State operator-(State a, const State& b) { return a -= b; }
State operator*(cplx s, State a) { return a *= s; }

void check_length(int L)
{
    if (L < 1 || L > max_sites)
        throw std::invalid_argument("chain length " + std::to_string(L) + " outside 1.." +
                                    std::to_string(max_sites));
}

State vacuum(int L)
{
    check_length(L);
    State v(L);
    v[0] = 1.0;
    return v;
}

State basis_state(int L, std::uint64_t index)
{
    check_length(L);
    State v(L);
    if (index >= v.dim()) throw std::invalid_argument("basis index out of range");
    v[index] = 1.0;
    return v;
}

State random_state(int L, std::mt19937_64& rng)
{
    check_length(L);
    std::normal_distribution<double> g(0.0, 1.0);
    State v(L);
    for (auto& a : v.amp) a = cplx(g(rng), g(rng));
    return v;
}

int popcount(std::uint64_t b) { return std::popcount(b); }

std::uint64_t sites_to_index(int L, const std::vector<int>& sites)
{
    std::uint64_t idx = 0;
    for (int k : sites) {
        if (k < 1 || k > L) throw std::invalid_argument("site out of range");
        idx |= site_bit(L, k);
    }
    return idx;
}

std::vector<int> index_to_sites(int L, std::uint64_t index)
{
    std::vector<int> out;
    for (int k = 1; k <= L; ++k)
        if (index & site_bit(L, k)) out.push_back(k);
    return out;
}

static void check_site(int L, int k)
{
    if (k < 1 || k > L)
        throw std::invalid_argument("site " + std::to_string(k) + " outside 1.." +
                                    std::to_string(L));
}

State apply_site(const Mat2& m, int k, const State& v)
{
    check_site(v.L, k);
    State out(v.L);
    const std::uint64_t bit = site_bit(v.L, k);
    for (std::uint64_t b = 0; b < v.dim(); ++b) {
        const cplx x = v[b];
        if (x == 0.0) continue;
        const int s = (b & bit) ? 1 : 0;
        const std::uint64_t base = b & ~bit;
        out[base] += m(0, s) * x;
        out[base | bit] += m(1, s) * x;
    }
    return out;
}

State apply_pair(const Mat4& m, int k1, int k2, const State& v)
{
    check_site(v.L, k1);
    check_site(v.L, k2);
    if (k1 == k2) throw std::invalid_argument("two-site operator needs distinct sites");
    const bool neighbours = (k2 == k1 + 1) || (k1 == v.L && k2 == 1);
    if (!neighbours) throw std::invalid_argument("two-site operator must act on (k,k+1) or (L,1)");
    State out(v.L);
    const std::uint64_t b1 = site_bit(v.L, k1), b2 = site_bit(v.L, k2);
    for (std::uint64_t b = 0; b < v.dim(); ++b) {
        const cplx x = v[b];
        if (x == 0.0) continue;
        const int in = ((b & b1) ? 2 : 0) | ((b & b2) ? 1 : 0);
        const std::uint64_t base = b & ~(b1 | b2);
        for (int o = 0; o < 4; ++o) {
            const cplx c = m(o, in);
            if (c == 0.0) continue;
            out[base | ((o & 2) ? b1 : 0) | ((o & 1) ? b2 : 0)] += c * x;
        }
    }
    return out;
}

State apply_local(const LocalOp& op, const State& v)
{
    if (op.sites.size() == 1) {
        if (op.m.rows() != 2 || op.m.cols() != 2)
            throw std::invalid_argument("single-site operator needs a 2x2 matrix");
        return apply_site(Mat2(op.m), op.sites[0], v);
    }
    if (op.sites.size() == 2) {
        if (op.m.rows() != 4 || op.m.cols() != 4)
            throw std::invalid_argument("two-site operator needs a 4x4 matrix");
        return apply_pair(Mat4(op.m), op.sites[0], op.sites[1], v);
    }
    throw std::invalid_argument("local operators act on one or two sites");
}

std::optional<std::pair<int, std::uint64_t>> fermion_on_index(Mode kind, int k, int L,
                                                               std::uint64_t index)
{
    const std::uint64_t bit = site_bit(L, k);
    const bool down = index & bit;
    if ((kind == Mode::create) == down) return std::nullopt;
    // sites 1..k-1 occupy the bits above position L-k
    const std::uint64_t full = (L == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << L) - 1);
    const std::uint64_t above = full & ~((bit << 1) - 1);
    const int sign = (popcount(index & above) % 2) ? -1 : 1;
    return std::make_pair(sign, index ^ bit);
}

State apply_fermion(const FermionMode& mode, const State& v)
{
    check_site(v.L, mode.site);
    State out(v.L);
    for (std::uint64_t b = 0; b < v.dim(); ++b) {
        if (v[b] == 0.0) continue;
        if (auto r = fermion_on_index(mode.kind, mode.site, v.L, b))
            out[r->second] += double(r->first) * v[b];
    }
    return out;
}

State psi(int k, const State& v) { return apply_fermion({k, Mode::annihilate}, v); }
State psibar(int k, const State& v) { return apply_fermion({k, Mode::create}, v); }
State occupation(int k, const State& v) { return psibar(k, psi(k, v)); }

static void check_same(const State& u, const State& v)
{
    if (u.L != v.L || u.dim() != v.dim()) throw std::invalid_argument("basis mismatch");
}

cplx inner(const State& u, const State& v)
{
    check_same(u, v);
    cplx s = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) s += std::conj(u[i]) * v[i];
    return s;
}

double norm(const State& v) { return std::sqrt(std::max(0.0, inner(v, v).real())); }

double collinearity(const State& u, const State& v)
{
    const double nu = norm(u), nv = norm(v);
    if (nu < 1e-14 || nv < 1e-14) return 0.0;
    return std::min(1.0, std::abs(inner(u, v)) / (nu * nv));
}

double max_abs(const State& v)
{
    double m = 0.0;
    for (const auto& a : v.amp) m = std::max(m, std::abs(a));
    return m;
}

double max_abs_diff(const State& u, const State& v)
{
    check_same(u, v);
    double m = 0.0;
    for (std::size_t i = 0; i < u.dim(); ++i) m = std::max(m, std::abs(u[i] - v[i]));
    return m;
}

VecX to_eigen(const State& v)
{
    VecX out(static_cast<Eigen::Index>(v.dim()));
    for (std::size_t i = 0; i < v.dim(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
    return out;
}

State from_eigen(int L, const VecX& v)
{
    State out(L);
    if (static_cast<std::size_t>(v.size()) != out.dim()) throw std::invalid_argument("size mismatch");
    for (std::size_t i = 0; i < out.dim(); ++i) out[i] = v(static_cast<Eigen::Index>(i));
    return out;
}

MatX dense(int L, const Operator& op)
{
    check_length(L);
    const auto n = static_cast<Eigen::Index>(std::size_t{1} << L);
    MatX m(n, n);
    for (Eigen::Index c = 0; c < n; ++c) m.col(c) = to_eigen(op(basis_state(L, std::uint64_t(c))));
    return m;
}

namespace pauli {
Mat2 id() { return Mat2::Identity(); }
Mat2 x()
{
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}
Mat2 y()
{
    Mat2 m;
    m << 0, cplx(0, -1), cplx(0, 1), 0;
    return m;
}
Mat2 z()
{
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}
Mat2 lower() { return 0.5 * (x() - cplx(0, 1) * y()); }
Mat2 raise() { return 0.5 * (x() + cplx(0, 1) * y()); }
}  // namespace pauli

Mat4 kron(const Mat2& a, const Mat2& b)
{
    Mat4 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

Mat4 permutation()
{
    using namespace pauli;
    return 0.5 * (kron(id(), id()) + kron(x(), x()) + kron(y(), y()) + kron(z(), z()));
}

double Report::worst() const
{
    double m = 0.0;
    for (const auto& r : rows) m = std::max(m, r.value);
    return m;
}

namespace {

double max_entry(const MatX& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

MatX site_matrix(int L, const Mat2& m, int k)
{
    return dense(L, [&](const State& v) { return apply_site(m, k, v); });
}

}  // namespace

Report verify_fermion_identities(int L, std::uint64_t seed, bool swap_in_commutator)
{
    if (L < 2 || L > 8) throw std::invalid_argument("fermion identity suite needs 2 <= L <= 8");
    const auto n = static_cast<Eigen::Index>(std::size_t{1} << L);
    const MatX I = MatX::Identity(n, n);

    std::vector<MatX> a(L + 1), c(L + 1), N(L + 1);
    for (int k = 1; k <= L; ++k) {
        a[k] = dense(L, [k](const State& v) { return psi(k, v); });
        c[k] = dense(L, [k](const State& v) { return psibar(k, v); });
        N[k] = c[k] * a[k];
    }

    double r1 = 0, r2 = 0, r3 = 0, r4 = 0, rp = 0, ac = 0, nil = 0;
    for (int k = 1; k <= L; ++k) {
        const MatX sz = site_matrix(L, pauli::z(), k);
        const MatX comm = swap_in_commutator ? MatX(c[k] * a[k] - a[k] * c[k])
                                             : MatX(a[k] * c[k] - c[k] * a[k]);
        r3 = std::max(r3, max_entry(comm - sz));
        nil = std::max({nil, max_entry(a[k] * a[k]), max_entry(c[k] * c[k])});
        if (k == L) continue;
        const MatX xx = site_matrix(L, pauli::x(), k) * site_matrix(L, pauli::x(), k + 1);
        const MatX yy = site_matrix(L, pauli::y(), k) * site_matrix(L, pauli::y(), k + 1);
        const MatX zz = sz * site_matrix(L, pauli::z(), k + 1);
        const MatX hop = c[k + 1] * a[k] + c[k] * a[k + 1];
        const MatX pairs = c[k] * c[k + 1] + a[k + 1] * a[k];
        r1 = std::max(r1, max_entry(hop + pairs - xx));
        r2 = std::max(r2, max_entry(hop - pairs - yy));
        r4 = std::max(r4, max_entry((I - 2.0 * N[k]) * (I - 2.0 * N[k + 1]) - zz));
        const MatX perm_f = I + hop - N[k] - N[k + 1] + 2.0 * N[k] * N[k + 1];
        const Mat4 P = permutation();
        const MatX perm_s = dense(L, [&](const State& v) { return apply_pair(P, k, k + 1, v); });
        rp = std::max(rp, max_entry(perm_f - perm_s));
    }
    for (int i = 1; i <= L; ++i)
        for (int j = 1; j <= L; ++j) {
            const MatX cross = c[i] * a[j] + a[j] * c[i] - (i == j ? I : MatX::Zero(n, n));
            ac = std::max({ac, max_entry(cross), max_entry(a[i] * a[j] + a[j] * a[i]),
                           max_entry(c[i] * c[j] + c[j] * c[i])});
        }

    // probe vectors: hopping built from mode actions versus the spin form, vector by vector
    std::mt19937_64 rng(seed);
    double probe = 0.0;
    for (int t = 0; t < 4; ++t) {
        const State v = random_state(L, rng);
        for (int k = 1; k < L; ++k) {
            State lhs = psibar(k + 1, psi(k, v)) + psibar(k, psi(k + 1, v)) +
                        psibar(k, psibar(k + 1, v)) + psi(k + 1, psi(k, v));
            State rhs = apply_site(pauli::x(), k, apply_site(pauli::x(), k + 1, v));
            probe = std::max(probe, max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(v)));
        }
    }

    Report rep;
    rep.add("hopping_plus_pairs_is_xx", r1);
    rep.add("hopping_minus_pairs_is_yy", r2);
    rep.add("commutator_is_z", r3);
    rep.add("density_product_is_zz", r4);
    rep.add("permutation_from_modes", rp);
    rep.add("anticommutators", ac);
    rep.add("nilpotency", nil);
    rep.add("probe_vectors_xx", probe);
    return rep;
}

}  // namespace spinlab
