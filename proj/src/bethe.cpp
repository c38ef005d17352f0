#include "spinlab/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include <Eigen/LU>

namespace spinlab {

Model BetheSystem::model() const
{
    switch (eq) {
    case Equations::xxx: return Model::xxx(L);
    case Equations::xxz: return Model::xxz(L, q);
    default: throw std::invalid_argument("coordinate Bethe equations have no transfer-matrix model");
    }
}

std::string to_string(Equations e)
{
    switch (e) {
    case Equations::xxx: return "xxx";
    case Equations::xxz: return "xxz";
    case Equations::polaron: return "polaron";
    case Equations::xxz_coordinate: return "xxz-coordinate";
    }
    return "?";
}

Equations equations_from_string(const std::string& s)
{
    if (s == "xxx") return Equations::xxx;
    if (s == "xxz") return Equations::xxz;
    if (s == "polaron") return Equations::polaron;
    if (s == "xxz-coordinate") return Equations::xxz_coordinate;
    throw std::invalid_argument("unknown model '" + s + "' (xxx, xxz, polaron, xxz-coordinate)");
}

void SolveConfig::validate() const
{
    if (starts < 1 || max_iter < 1 || max_halvings < 0) throw std::invalid_argument("solver counts must be positive");
    if (!(cloud > 0 && dedupe_tol > 0 && accept > 0 && distinct > 0))
        throw std::invalid_argument("solver tolerances must be positive");
}

namespace {

// forward-mode value + gradient
struct Jet {
    cplx v;
    std::vector<cplx> d;
};

Jet operator-(Jet a, const Jet& b)
{
    a.v -= b.v;
    for (std::size_t i = 0; i < a.d.size(); ++i) a.d[i] -= b.d[i];
    return a;
}
Jet operator-(Jet a)
{
    a.v = -a.v;
    for (auto& x : a.d) x = -x;
    return a;
}
Jet operator*(const Jet& a, const Jet& b)
{
    Jet r{a.v * b.v, std::vector<cplx>(a.d.size())};
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.v * b.d[i] + a.d[i] * b.v;
    return r;
}
Jet operator*(cplx c, Jet a)
{
    a.v *= c;
    for (auto& x : a.d) x *= c;
    return a;
}
Jet operator*(Jet a, cplx c) { return c * a; }
Jet operator+(Jet a, cplx c)
{
    a.v += c;
    return a;
}
Jet operator-(Jet a, cplx c) { return a + (-c); }
Jet operator-(cplx c, const Jet& a) { return -a + c; }

Jet ipow(const Jet& a, int n)
{
    Jet r{std::pow(a.v, n), a.d};
    const cplx f = n == 0 ? cplx(0.0) : double(n) * std::pow(a.v, n - 1);
    for (auto& x : r.d) x *= f;
    return r;
}
cplx ipow(cplx a, int n) { return std::pow(a, n); }

cplx unit_like(cplx) { return 1.0; }
Jet unit_like(const Jet& p) { return {1.0, std::vector<cplx>(p.d.size())}; }

template <class T>
void sides(const BetheSystem& s, const std::vector<T>& x, std::vector<T>& lhs, std::vector<T>& rhs)
{
    const int M = static_cast<int>(x.size());
    const int L = s.L;
    const cplx one = 1.0, q = s.q, qi = 1.0 / s.q, qb = s.q + 1.0 / s.q;
    lhs.clear();
    rhs.clear();
    for (int k = 0; k < M; ++k) {
        const T& a = x[k];
        T l = unit_like(a), r = unit_like(a);
        switch (s.eq) {
        case Equations::xxx:
            l = ipow(a + one, L);
            r = -ipow(a, L);
            for (int j = 0; j < M; ++j) {
                l = l * (a - x[j] - one);
                r = r * (a - x[j] + one);
            }
            break;
        case Equations::xxz:
            l = ipow(q - a * qi, L);
            r = ipow(one - a, L);
            for (int j = 0; j < M; ++j) {
                if (j == k) continue;
                l = l * (a * q - x[j] * qi);
                r = r * (a * qi - x[j] * q);
            }
            break;
        case Equations::polaron:
        case Equations::xxz_coordinate:
            l = ipow(a, L);
            for (int j = 0; j < M; ++j) {
                if (j == k) continue;
                l = l * (a * x[j] - x[j] * qb + one);
                r = r * (a * x[j] - a * qb + one);
            }
            if (s.eq == Equations::xxz_coordinate && M % 2 == 0) r = -r;
            break;
        }
        lhs.push_back(l);
        rhs.push_back(r);
    }
}

void check_system(const BetheSystem& s)
{
    if (s.L < 1 || s.L > max_sites) throw std::invalid_argument("chain length outside 1..16");
    if (s.eq != Equations::xxx) check_q(s.q, 1);
}

}  // namespace

ClearedSides bethe_sides(const BetheSystem& s, const std::vector<cplx>& roots)
{
    check_system(s);
    ClearedSides out;
    sides(s, roots, out.lhs, out.rhs);
    return out;
}

std::vector<cplx> bethe_residual(const BetheSystem& s, const std::vector<cplx>& roots)
{
    const ClearedSides c = bethe_sides(s, roots);
    std::vector<cplx> f(c.lhs.size());
    for (std::size_t k = 0; k < f.size(); ++k) f[k] = c.lhs[k] - c.rhs[k];
    return f;
}

double normalized_residual(const BetheSystem& s, const std::vector<cplx>& roots)
{
    const ClearedSides c = bethe_sides(s, roots);
    double worst = 0;
    for (std::size_t k = 0; k < c.lhs.size(); ++k) {
        const double scale = std::abs(c.lhs[k]) + std::abs(c.rhs[k]);
        const double f = std::abs(c.lhs[k] - c.rhs[k]);
        worst = std::max(worst, scale > 0 ? f / scale : 1.0);  // 0 = 0 carries no information
    }
    return worst;
}

void check_root_domain(const BetheSystem& s, const std::vector<cplx>& x, double tol)
{
    const cplx q = s.q, qi = 1.0 / s.q, qb = s.q + 1.0 / s.q;
    auto near = [tol](cplx a, cplx b) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); };
    const std::size_t M = x.size();
    for (std::size_t k = 0; k < M; ++k) {
        if (!std::isfinite(x[k].real()) || !std::isfinite(x[k].imag()))
            throw std::domain_error("non-finite root");
        switch (s.eq) {
        case Equations::xxx:
            if (near(x[k], 0.0) || near(x[k], -1.0)) throw std::domain_error("XXX root at 0 or -1");
            for (std::size_t j = 0; j < M; ++j)
                if (j != k && near(x[k] - x[j], 1.0)) throw std::domain_error("XXX roots differ by exactly 1");
            break;
        case Equations::xxz:
            if (near(x[k], 0.0) || near(x[k], 1.0) || near(x[k], q * q))
                throw std::domain_error("XXZ root at 0, 1 or q^2");
            for (std::size_t j = 0; j < M; ++j)
                if (j != k && near(x[k] * q, x[j] * qi)) throw std::domain_error("XXZ roots in ratio q^-2");
            break;
        default:
            if (near(x[k], 0.0)) throw std::domain_error("coordinate root at 0");
            for (std::size_t j = 0; j < M; ++j)
                if (j != k && std::abs(x[k] * x[j] - qb * x[j] + 1.0) <= tol * (1.0 + std::abs(x[k] * x[j])))
                    throw std::domain_error("vanishing scattering denominator");
        }
    }
}

cplx lambda_eigenvalue(const Model& m, cplx lam, const std::vector<cplx>& roots)
{
    validate(m);
    for (cplx r : roots)
        if (std::abs(r - lam) < 1e-12) throw std::domain_error("evaluation at Bethe root - use limit check instead");
    cplx alpha = 1.0, delta = 1.0;
    for (int k = 1; k <= m.L; ++k) {
        alpha *= a_fn(m, m.site_arg(lam, k));
        delta *= d_fn(m, m.site_arg(lam, k));
    }
    for (cplx r : roots) {
        alpha *= f_fn(m, r, lam);
        delta *= f_fn(m, lam, r);
    }
    return alpha + delta;
}

cplx polaron_energy(cplx q, const std::vector<cplx>& X)
{
    cplx e = 0.0;
    for (cplx x : X) {
        if (std::abs(x) < 1e-300) throw std::domain_error("zero root");
        e += x + 1.0 / x - (q + 1.0 / q);
    }
    return e;
}

cplx xxz_to_polaron_map(cplx q, cplx lam)
{
    if (std::abs(1.0 - lam) < 1e-14) throw std::domain_error("lam = 1 has no image");
    return (q - lam / q) / (1.0 - lam);
}

cplx polaron_to_xxz_map(cplx q, cplx X)
{
    if (std::abs(1.0 / q - X) < 1e-14) throw std::domain_error("X = 1/q has no preimage");
    return (q - X) / (1.0 / q - X);
}

cplx bethe_energy(const BetheSystem& s, const std::vector<cplx>& roots)
{
    switch (s.eq) {
    case Equations::xxx: return lambda_derivative_energy(Model::xxx(s.L), roots);
    case Equations::xxz: {
        std::vector<cplx> X;
        for (cplx l : roots) X.push_back(xxz_to_polaron_map(s.q, l));
        return s.q * double(s.L) + polaron_energy(s.q, X);
    }
    case Equations::xxz_coordinate: return s.q * double(s.L) + polaron_energy(s.q, roots);
    case Equations::polaron: return polaron_energy(s.q, roots);
    }
    return 0.0;
}

std::vector<cplx> canonical_order(std::vector<cplx> roots)
{
    std::sort(roots.begin(), roots.end(), [](cplx a, cplx b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return roots;
}

std::vector<cplx> fingerprint(const std::vector<cplx>& roots)
{
    std::vector<cplx> e(roots.size() + 1, 0.0);
    e[0] = 1.0;
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * roots[i];
    e.erase(e.begin());
    return e;
}

bool same_fingerprint(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol)
{
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol * std::max(1.0, std::abs(a[i]))) return false;
    return true;
}

NewtonResult newton(const BetheSystem& s, std::vector<cplx> x, const SolveConfig& cfg)
{
    check_system(s);
    const int M = static_cast<int>(x.size());
    NewtonResult out;
    auto merit = [&](const std::vector<cplx>& y) {
        double m = 0;
        for (cplx f : bethe_residual(s, y)) m += std::norm(f);
        return m;
    };
    double cur = merit(x);
    for (int it = 0; it < cfg.max_iter; ++it) {
        out.iterations = it + 1;
        std::vector<Jet> jx;
        for (int i = 0; i < M; ++i) {
            Jet j{x[i], std::vector<cplx>(M)};
            j.d[i] = 1.0;
            jx.push_back(std::move(j));
        }
        std::vector<Jet> l, r;
        sides(s, jx, l, r);
        Eigen::MatrixXcd J(M, M);
        Eigen::VectorXcd F(M);
        for (int k = 0; k < M; ++k) {
            const Jet f = l[k] - r[k];
            F(k) = f.v;
            for (int i = 0; i < M; ++i) J(k, i) = f.d[i];
        }
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(J);
        if (!(lu.rcond() > 1e-15)) break;  // singular Jacobian: abandon this start
        const Eigen::VectorXcd step = lu.solve(-F);
        double t = 1.0;
        std::vector<cplx> trial(M);
        double next = cur;
        bool moved = false;
        for (int h = 0; h <= cfg.max_halvings; ++h, t *= 0.5) {
            for (int i = 0; i < M; ++i) trial[i] = x[i] + t * step(i);
            next = merit(trial);
            if (std::isfinite(next) && next < cur) {
                moved = true;
                break;
            }
        }
        if (!moved) break;
        double dx = 0, sx = 0;
        for (int i = 0; i < M; ++i) {
            dx = std::max(dx, std::abs(trial[i] - x[i]));
            sx = std::max(sx, std::abs(trial[i]));
        }
        x = trial;
        cur = next;
        if (sx > 1e8) break;
        if (dx <= 1e-15 * (1.0 + sx) || normalized_residual(s, x) < 1e-15) break;
    }
    out.roots = x;
    out.residual = normalized_residual(s, x);
    out.converged = std::isfinite(out.residual) && out.residual < cfg.accept;
    return out;
}

namespace {

std::vector<std::pair<cplx, double>> start_centers(const BetheSystem& s)
{
    // (center, spread scale)
    std::vector<std::pair<cplx, double>> c;
    const double tau = 2.0 * M_PI;
    switch (s.eq) {
    case Equations::xxx:
        for (int k = 1; k < s.L; ++k) {
            const cplx z = 1.0 / (std::polar(1.0, tau * k / s.L) - 1.0);
            c.push_back({z, 1.0 + std::abs(z)});
        }
        break;
    case Equations::xxz:
        for (int k = 0; k < s.L; ++k) {
            const cplx z = polaron_to_xxz_map(s.q, std::polar(1.0, tau * k / s.L));
            c.push_back({z, std::abs(z)});
        }
        for (int n : {-2, -1, 2}) c.push_back({std::pow(s.q, 2 * n), std::abs(std::pow(s.q, 2 * n))});
        break;
    default:
        for (int k = 0; k < s.L; ++k) c.push_back({std::polar(1.0, tau * (k + 0.5 * (k % 2)) / s.L), 1.0});
        for (int k = 0; k < s.L; ++k) c.push_back({std::polar(1.0, tau * k / s.L), 1.0});
    }
    return c;
}

}  // namespace

SolveResult solve_bethe(const BetheSystem& s, int M, const SolveConfig& cfg)
{
    check_system(s);
    cfg.validate();
    if (M < 1 || M > s.L) throw std::invalid_argument("magnon count outside 1..L");
    SolveResult res;
    const auto centers = start_centers(s);
    for (int start = 0; start < cfg.starts; ++start) {
        std::seed_seq seq{std::uint32_t(cfg.seed & 0xffffffffu), std::uint32_t(cfg.seed >> 32),
                          std::uint32_t(start)};
        std::mt19937_64 rng(seq);
        std::vector<std::size_t> idx(centers.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::normal_distribution<double> gauss(0.0, 1.0);
        std::vector<cplx> x0(M);
        for (int i = 0; i < M; ++i) {
            const auto& [z, scale] = centers[idx[i % idx.size()]];
            const double w = cfg.cloud * scale;
            x0[i] = z + cplx(w * gauss(rng), w * gauss(rng));
        }
        NewtonResult nr = newton(s, x0, cfg);
        if (!nr.converged) continue;
        ++res.converged_starts;
        std::vector<cplx> roots = canonical_order(nr.roots);
        bool degenerate = false;
        for (int i = 0; i < M; ++i)
            for (int j = i + 1; j < M; ++j)
                if (std::abs(roots[i] - roots[j]) <= cfg.distinct) degenerate = true;
        if (degenerate) {
            ++res.rejected_degenerate;
            continue;
        }
        try {
            check_root_domain(s, roots);
        } catch (const std::domain_error&) {
            ++res.rejected_domain;
            continue;
        }
        const auto fp = fingerprint(roots);
        bool seen = false;
        for (const auto& r : res.sets) seen = seen || same_fingerprint(fingerprint(r.roots), fp, cfg.dedupe_tol);
        if (seen) continue;
        BetheRootSet set;
        set.sys = s;
        set.roots = roots;
        set.residual = nr.residual;
        set.energy = bethe_energy(s, roots);
        set.provenance = "seed " + std::to_string(cfg.seed) + " start " + std::to_string(start);
        res.sets.push_back(std::move(set));
    }
    std::stable_sort(res.sets.begin(), res.sets.end(),
                     [](const BetheRootSet& a, const BetheRootSet& b) { return a.residual < b.residual; });
    if (res.sets.empty())
        res.diagnostic = "no start converged to an admissible root set (" + std::to_string(res.converged_starts) +
                         " converged, " + std::to_string(res.rejected_domain) + " outside the domain, " +
                         std::to_string(res.rejected_degenerate) + " degenerate)";
    return res;
}

}  // namespace spinlab
