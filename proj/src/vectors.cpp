#include "spinlab/vectors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spinlab {

namespace {

void check_distinct(const std::vector<cplx>& roots)
{
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < 1e-12)
                throw std::domain_error("coinciding roots");
}

void check_away(cplx z, cplx bad, const char* what)
{
    if (std::abs(z - bad) < 1e-12) throw std::domain_error(what);
}

std::vector<int> identity_perm(int M)
{
    std::vector<int> p(M);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

// Sum over tuples and permutations of pair(p_i, p_j) * prod site_weight(p_i, n_i).
template <class Pair, class Site>
MagnonAmplitudes permutation_sum(int L, int M, Pair pair, Site site_weight)
{
    MagnonAmplitudes out;
    out.L = L;
    out.M = M;
    out.sites = site_tuples(L, M);
    out.amp.assign(out.sites.size(), 0.0);
    for (std::size_t t = 0; t < out.sites.size(); ++t) {
        const auto& n = out.sites[t];
        auto p = identity_perm(M);
        cplx sum = 0.0;
        do {
            cplx term = 1.0;
            for (int i = 0; i < M; ++i)
                for (int j = i + 1; j < M; ++j) term *= pair(p[i], p[j]);
            for (int i = 0; i < M; ++i) term *= site_weight(p[i], n[i]);
            sum += term;
        } while (std::next_permutation(p.begin(), p.end()));
        out.amp[t] = sum;
    }
    return out;
}

}  // namespace

std::vector<std::vector<int>> site_tuples(int L, int M)
{
    if (M < 0 || M > L) throw std::invalid_argument("magnon number out of range");
    std::vector<std::vector<int>> out;
    std::vector<int> t(M);
    std::iota(t.begin(), t.end(), 1);
    while (true) {
        out.push_back(t);
        // colex successor: bump the lowest position that can move
        int i = 0;
        while (i < M && t[i] + 1 == (i + 1 < M ? t[i + 1] : L + 1)) ++i;
        if (i == M) break;
        ++t[i];
        for (int j = 0; j < i; ++j) t[j] = j + 1;
    }
    return out;
}

std::pair<int, std::uint64_t> ordered_creation(int L, const std::vector<int>& sites)
{
    int sign = 1;
    std::uint64_t idx = 0;
    for (auto it = sites.rbegin(); it != sites.rend(); ++it) {
        auto r = fermion_on_index(Mode::create, *it, L, idx);
        if (!r) throw std::invalid_argument("repeated site in creation string");
        sign *= r->first;
        idx = r->second;
    }
    return {sign, idx};
}

State MagnonAmplitudes::to_state() const
{
    State v(L);
    for (std::size_t t = 0; t < sites.size(); ++t) {
        auto [sign, idx] = ordered_creation(L, sites[t]);
        v[idx] += double(sign) * amp[t];
    }
    return v;
}

MagnonAmplitudes MagnonAmplitudes::from_state(const State& v, int M)
{
    MagnonAmplitudes out;
    out.L = v.L;
    out.M = M;
    out.sites = site_tuples(v.L, M);
    for (const auto& n : out.sites) {
        auto [sign, idx] = ordered_creation(v.L, n);
        out.amp.push_back(double(sign) * v[idx]);
    }
    return out;
}

State bethe_vector_algebraic(const Model& m, const std::vector<cplx>& roots)
{
    validate(m);
    State v = vacuum(m.L);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it)
        v = monodromy_apply(m, Entry::B, *it, v);
    return v;
}

State bethe_vector_coordinate_xxx(int L, const std::vector<cplx>& roots)
{
    check_length(L);
    check_distinct(roots);
    for (cplx r : roots) {
        check_away(r, 0.0, "root at 0");
        check_away(r, -1.0, "root at -1");
    }
    const int M = static_cast<int>(roots.size());
    std::vector<cplx> bracket;
    cplx norm = 1.0;
    for (cplx r : roots) {
        bracket.push_back((r + 1.0) / r);
        norm *= std::pow(r, L) / (r + 1.0);
    }
    auto c = permutation_sum(
        L, M,
        [&](int i, int j) { return (roots[i] - roots[j] + 1.0) / (roots[i] - roots[j]); },
        [&](int i, int n) { return std::pow(bracket[i], n); });
    return norm * c.to_state();
}

State bethe_vector_coordinate_xxz(int L, cplx q, const std::vector<cplx>& roots)
{
    check_length(L);
    check_q(q, 2);
    check_distinct(roots);
    for (cplx r : roots) {
        check_away(r, 1.0, "root at 1");
        check_away(r, q * q, "root at q^2");
    }
    const int M = static_cast<int>(roots.size());
    std::vector<cplx> bracket;
    cplx norm = 1.0;
    for (cplx r : roots) {
        bracket.push_back((q - r / q) / (1.0 - r));
        norm *= (q - 1.0 / q) * std::pow(1.0 - r, L) / (q - r / q);
    }
    auto c = permutation_sum(
        L, M,
        [&](int i, int j) { return (roots[i] / q - roots[j] * q) / (roots[i] - roots[j]); },
        [&](int i, int n) { return std::pow(bracket[i], n); });
    return norm * c.to_state();
}

State bethe_vector_inhomogeneous(const Model& m, const std::vector<cplx>& roots)
{
    validate(m);
    check_distinct(roots);
    const int L = m.L, M = static_cast<int>(roots.size());
    // a and d at every (root, site)
    std::vector<std::vector<cplx>> a(M, std::vector<cplx>(L + 1)), d = a;
    cplx norm = 1.0;
    for (int j = 0; j < M; ++j)
        for (int i = 1; i <= L; ++i) {
            const cplx arg = m.site_arg(roots[j], i);
            a[j][i] = a_fn(m, arg);
            d[j][i] = d_fn(m, arg);
            if (std::abs(a[j][i]) < 1e-300 || std::abs(d[j][i]) < 1e-300)
                throw std::domain_error("singular shifted argument");
            norm *= d[j][i];
        }
    const cplx one_site = m.family == Family::XXX ? cplx(1.0) : m.q - 1.0 / m.q;
    auto c = permutation_sum(
        L, M, [&](int i, int j) { return f_fn(m, roots[i], roots[j]); },
        [&](int j, int n) {
            cplx w = 1.0 / a[j][n];
            for (int i = 1; i <= n; ++i) w *= a[j][i] / d[j][i];
            return w;
        });
    return norm * std::pow(one_site, M) * c.to_state();
}

void ComponentSplit::validate(int L) const
{
    int prev = 0;
    for (int c : cuts) {
        if (c <= prev || c >= L) throw std::invalid_argument("cuts must increase strictly inside (0, L)");
        prev = c;
    }
}

std::pair<int, int> ComponentSplit::range(int c, int L) const
{
    const int first = c == 0 ? 1 : cuts[c - 1] + 1;
    const int last = c == static_cast<int>(cuts.size()) ? L : cuts[c];
    return {first, last};
}

DecompositionResult component_decomposition(const Model& m, const std::vector<cplx>& roots,
                                            const ComponentSplit& split)
{
    validate(m);
    split.validate(m.L);
    check_distinct(roots);
    const int M = static_cast<int>(roots.size()), N = split.components();

    // vacuum eigenvalues of A and D on each component
    std::vector<std::vector<cplx>> alpha(M, std::vector<cplx>(N, 1.0)), delta = alpha;
    for (int k = 0; k < M; ++k)
        for (int c = 0; c < N; ++c) {
            auto [first, last] = split.range(c, m.L);
            for (int i = first; i <= last; ++i) {
                alpha[k][c] *= a_fn(m, m.site_arg(roots[k], i));
                delta[k][c] *= d_fn(m, m.site_arg(roots[k], i));
            }
        }

    DecompositionResult out;
    out.lhs = bethe_vector_algebraic(m, roots);
    out.rhs = State(m.L);
    std::vector<int> comp(M, 0);
    while (true) {
        cplx w = 1.0;
        for (int k = 0; k < M; ++k) {
            for (int c = 0; c < comp[k]; ++c) w *= alpha[k][c];
            for (int c = comp[k] + 1; c < N; ++c) w *= delta[k][c];
            for (int l = 0; l < M; ++l)
                if (comp[k] < comp[l]) w *= f_fn(m, roots[k], roots[l]);
        }
        State v = vacuum(m.L);
        for (int k = M - 1; k >= 0; --k) {
            auto [first, last] = split.range(comp[k], m.L);
            v = monodromy_apply_range(m, Entry::B, roots[k], v, first, last);
        }
        out.rhs += w * v;

        int k = 0;
        while (k < M && comp[k] == N - 1) comp[k++] = 0;
        if (k == M) break;
        ++comp[k];
    }
    out.residual = max_abs_diff(out.lhs, out.rhs) / std::max(1.0, max_abs(out.lhs));
    return out;
}

double component_decomposition_check(const Model& m, const std::vector<cplx>& roots,
                                     const ComponentSplit& split)
{
    return component_decomposition(m, roots, split).residual;
}

namespace {

// two-site operator from a fermionic expression on a 2-site chain
Mat4 two_site(const Operator& op)
{
    return dense(2, op);
}

State hop(const State& v)  // psibar_2 psi_1 + psibar_1 psi_2
{
    return psibar(2, psi(1, v)) + psibar(1, psi(2, v));
}

}  // namespace

Mat4 fermion_permutation()
{
    return two_site([](const State& v) {
        return v + hop(v) - occupation(1, v) - occupation(2, v) +
               2.0 * occupation(1, occupation(2, v));
    });
}

Mat4 fermion_rhat(const Model& m, cplx lam)
{
    if (m.family == Family::XXX) return lam * fermion_permutation() + Mat4::Identity();
    const cplx q = m.q, qbar = q + 1.0 / q;
    return two_site([&](const State& v) {
        State inner_part = hop(v) - q * occupation(1, v) - (1.0 / q) * occupation(2, v) +
                           qbar * occupation(1, occupation(2, v));
        return (1.0 - lam) * inner_part + (q - lam / q) * v;
    });
}

State x_operator_apply(const Model& m, cplx lam, const State& v)
{
    const Mat4 P = fermion_permutation(), R = fermion_rhat(m, lam);
    State w = v;
    for (int k = 1; k < m.L; ++k) w = apply_pair(P, k, k + 1, w);
    for (int k = m.L - 1; k >= 1; --k) w = apply_pair(R, k, k + 1, w);
    return w;
}

State fermionic_B_apply(const Model& m, cplx lam, const State& v)
{
    validate(m);
    if (v.L != m.L) throw std::invalid_argument("state length does not match the model");
    if (!m.homogeneous()) throw std::invalid_argument("fermionic B is built for the homogeneous chain");
    const State t = x_operator_apply(m, lam, psibar(1, v));
    const State u = psibar(1, x_operator_apply(m, lam, occupation(1, v)));
    if (m.family == Family::XXX) return (lam + 1.0) * t - lam * occupation(1, t) + lam * u;
    const cplx q = m.q;
    return (q - lam / q) * t - ((1.0 - lam) / q) * occupation(1, t) + (1.0 - lam) * u;
}

cplx fermionic_xxz_scale(int L, cplx lam)
{
    return std::pow(sqrt_p(lam), L - 1);
}

State fermionic_bethe_vector(const Model& m, const std::vector<cplx>& roots)
{
    State v = vacuum(m.L);
    for (auto it = roots.rbegin(); it != roots.rend(); ++it) v = fermionic_B_apply(m, *it, v);
    return v;
}

cplx transposition_ratio(cplx q, cplx x_left, cplx x_right)
{
    const cplx qbar = q + 1.0 / q;
    const cplx num = x_left * x_right - qbar * x_right + 1.0;
    const cplx den = x_left * x_right - qbar * x_left + 1.0;
    if (std::abs(den) < 1e-13 * (1.0 + std::abs(num)))
        throw std::domain_error("singular amplitude configuration");
    return -num / den;
}

cplx amplitude_along_word(cplx q, const std::vector<cplx>& X, const std::vector<int>& word)
{
    const int M = static_cast<int>(X.size());
    auto sigma = identity_perm(M);
    cplx A = 1.0;
    for (int k : word) {
        if (k < 1 || k >= M) throw std::invalid_argument("transposition index out of range");
        A *= transposition_ratio(q, X[sigma[k - 1]], X[sigma[k]]);
        std::swap(sigma[k - 1], sigma[k]);
    }
    return A;
}

std::vector<std::pair<std::vector<int>, cplx>> permutation_amplitudes(cplx q,
                                                                      const std::vector<cplx>& X)
{
    check_distinct(X);
    for (cplx x : X) check_away(x, 0.0, "zero coordinate root");
    std::vector<std::pair<std::vector<int>, cplx>> out;
    auto p = identity_perm(static_cast<int>(X.size()));
    do {
        // bubble-sort p back to the identity; the reversed swaps spell p from the identity
        auto s = p;
        std::vector<int> word;
        for (std::size_t pass = 0; pass < s.size(); ++pass)
            for (std::size_t j = 0; j + 1 < s.size(); ++j)
                if (s[j] > s[j + 1]) {
                    std::swap(s[j], s[j + 1]);
                    word.push_back(static_cast<int>(j) + 1);
                }
        std::reverse(word.begin(), word.end());
        out.emplace_back(p, amplitude_along_word(q, X, word));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

MagnonAmplitudes polaron_coordinate_vector(int L, cplx q, const std::vector<cplx>& X)
{
    check_length(L);
    const auto A = permutation_amplitudes(q, X);
    MagnonAmplitudes out;
    out.L = L;
    out.M = static_cast<int>(X.size());
    out.sites = site_tuples(L, out.M);
    for (const auto& n : out.sites) {
        cplx c = 0.0;
        for (const auto& [sigma, amp] : A) {
            cplx term = amp;
            for (int i = 0; i < out.M; ++i) term *= std::pow(X[sigma[i]], n[i]);
            c += term;
        }
        out.amp.push_back(c);
    }
    return out;
}

MagnonAmplitudes xxz_coordinate_vector_via_amplitudes(int L, cplx q, const std::vector<cplx>& X)
{
    return polaron_coordinate_vector(L, q, X);
}

double off_sector_weight(const State& v, int M)
{
    double w = 0.0;
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (popcount(i) != M) w = std::max(w, std::abs(v[i]));
    return w;
}

}  // namespace spinlab
