#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace spinlab::suites {

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const std::vector<cplx>& v)
{
    json a = json::array();
    for (cplx z : v) a.push_back(to_json(z));
    return a;
}

cplx parse_complex(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw std::invalid_argument("empty complex number");
    auto number = [&](const std::string& t) {
        std::size_t used = 0;
        const double v = std::stod(t, &used);
        if (used != t.size()) throw std::invalid_argument("bad complex number: " + text);
        return v;
    };
    try {
        if (const auto comma = s.find(','); comma != std::string::npos)
            return {number(s.substr(0, comma)), number(s.substr(comma + 1))};
        if (s.back() != 'i' && s.back() != 'j') return number(s);
        s.pop_back();
        // split before the sign that starts the imaginary part (not an exponent sign)
        std::size_t split = 0;
        for (std::size_t k = s.size(); k-- > 1;)
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                split = k;
                break;
            }
        const std::string re = s.substr(0, split), im = s.substr(split);
        const double imv = im.empty() || im == "+" ? 1.0 : im == "-" ? -1.0 : number(im);
        return {re.empty() ? 0.0 : number(re), imv};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad complex number: " + text);
    }
}

double Outcome::worst() const
{
    double w = 0.0;
    for (const auto& c : report.at("checks"))
        if (c.value("counted", true)) w = std::max(w, c.at("value").get<double>());
    return w;
}

namespace {

struct Builder {
    std::string name;
    double tol;
    json checks = json::array();
    bool ok = true;

    void add(const std::string& n, double v) { add(n, v, tol); }
    void add(const std::string& n, double v, double t)
    {
        checks.push_back({{"name", n}, {"value", v}, {"tolerance", t}});
        ok = ok && v < t;
    }
    // negative control: must stay above the floor
    void control(const std::string& n, double v, double floor)
    {
        checks.push_back({{"name", n}, {"value", v}, {"must_exceed", floor}, {"counted", false}});
        ok = ok && v > floor;
    }
    void require(const std::string& n, bool cond)
    {
        checks.push_back({{"name", n}, {"value", cond ? 0.0 : 1.0}, {"tolerance", 0.5}});
        ok = ok && cond;
    }
    Outcome done(json extra = json::object()) const
    {
        json r = {{"suite", name}, {"tolerance", tol}, {"pass", ok}, {"checks", checks}};
        for (auto it = extra.begin(); it != extra.end(); ++it) r[it.key()] = it.value();
        return {r};
    }
};

cplx random_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> r(0.5, 2.0), a(-2.5, 2.5);
    return std::polar(r(rng), a(rng));
}

// products of two such points stay off the square-root cut
cplx right_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> r(0.5, 2.0), a(-1.5, 1.5);
    return std::polar(r(rng), a(rng));
}

// additive XXX parameters at the scale of the Lax constant term: tau(lam) grows like |lam + 1|^L
cplx unit_disc_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> r(0.25, 1.0), a(-M_PI, M_PI);
    return std::polar(r(rng), a(rng));
}

std::vector<cplx> random_roots(std::mt19937_64& rng, int M)
{
    std::uniform_real_distribution<double> r(0.3, 1.6), a(-1.4, 1.4);
    std::vector<cplx> out;
    for (int i = 0; i < M; ++i) out.push_back(std::polar(r(rng), a(rng)));
    return out;
}

Model make_model(Family f, int L, cplx q)
{
    Model m = f == Family::XXX ? Model::xxx(L) : Model::xxz(L, q);
    validate(m);
    return m;
}

std::string family_name(Family f) { return f == Family::XXX ? "xxx" : "xxz"; }

double rel(const State& a, const State& b) { return max_abs_diff(a, b) / std::max(1.0, max_abs(a)); }

std::vector<cplx> sorted(std::vector<cplx> v)
{
    std::sort(v.begin(), v.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return v;
}

std::vector<cplx> eigenvalues(const MatX& H)
{
    if (H.rows() == 0) return {};
    Eigen::ComplexEigenSolver<MatX> es(H, false);
    return sorted({es.eigenvalues().begin(), es.eigenvalues().end()});
}

MatX sector_matrix(const Operator& op, int L, int M)
{
    const auto basis = sector_basis(L, M);
    const auto n = static_cast<Eigen::Index>(basis.size());
    MatX H(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const State w = op(basis_state(L, basis[c]));
        for (Eigen::Index r = 0; r < n; ++r) H(r, c) = w[basis[r]];
    }
    return H;
}

double nearest(const std::vector<cplx>& list, cplx x)
{
    double best = INFINITY;
    for (cplx y : list) best = std::min(best, std::abs(x - y));
    return best;
}

// coefficient matrices of a degree-deg matrix polynomial, interpolated on roots of unity
std::vector<MatX> interpolate(const std::function<MatX(cplx)>& f, int deg)
{
    const int n = deg + 1;
    MatX V(n, n);
    std::vector<MatX> vals;
    for (int j = 0; j < n; ++j) {
        const cplx x = std::polar(1.0, 2.0 * M_PI * j / n);
        for (int k = 0; k < n; ++k) V(j, k) = std::pow(x, k);
        vals.push_back(f(x));
    }
    const MatX Vi = V.inverse();
    std::vector<MatX> c(n, MatX::Zero(vals[0].rows(), vals[0].cols()));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[k] += Vi(k, j) * vals[j];
    return c;
}

// greedy nearest matching; infinite when the sizes differ
double multiset_gap(const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    if (a.size() != b.size()) return INFINITY;
    std::vector<bool> used(b.size(), false);
    double w = 0.0;
    for (cplx x : a) {
        std::size_t best = 0;
        double d = INFINITY;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && std::abs(x - b[j]) < d) d = std::abs(x - b[j]), best = j;
        used[best] = true;
        w = std::max(w, d);
    }
    return w;
}

}  // namespace

Outcome ybe(Family f, cplx q, int trials, std::uint64_t seed, double tol)
{
    const Model m = make_model(f, 3, q);
    std::mt19937_64 rng(seed);
    double vertex = 0.0, braid = 0.0;
    for (int t = 0; t < trials; ++t) {
        const cplx lam = random_point(rng), mu = random_point(rng);
        braid = std::max(braid, check_ybe(YbeForm::braid, m, lam, mu));
        if (f == Family::XXX)
            vertex = std::max(vertex, check_ybe(YbeForm::vertex, m, lam, mu));
        else
            vertex = std::max(vertex, check_ybe(YbeForm::vertex, m, right_point(rng), right_point(rng)));
    }
    Builder b{"ybe", tol};
    b.add("vertex form", vertex);
    b.add("braid form", braid);
    return b.done({{"model", family_name(f)}, {"q", to_json(q)}, {"trials", trials}, {"seed", seed}});
}

Outcome transfer(Family f, cplx q, int max_L, int pairs, std::uint64_t seed, double tol)
{
    std::mt19937_64 rng(seed);
    double fcr = 0.0, comm = 0.0;
    for (int L = 2; L <= std::min(max_L, 4); ++L) {
        const Model m = make_model(f, L, q);
        const cplx lam = f == Family::XXX ? random_point(rng) : right_point(rng);
        const cplx mu = f == Family::XXX ? random_point(rng) : right_point(rng);
        fcr = std::max(fcr, fcr_residual(m, lam, mu));
    }
    for (int L = 2; L <= max_L; ++L) {
        const Model m = make_model(f, L, q);
        for (int t = 0; t < pairs; ++t) {
            const cplx lam = f == Family::XXX ? unit_disc_point(rng) : random_point(rng);
            const cplx mu = f == Family::XXX ? unit_disc_point(rng) : random_point(rng);
            const State v = random_state(L, rng);
            const State c = transfer_apply(m, lam, transfer_apply(m, mu, v)) -
                            transfer_apply(m, mu, transfer_apply(m, lam, v));
            comm = std::max(comm, norm(c) / norm(v));
        }
    }
    Builder b{"transfer", tol};
    b.add("fundamental commutation relation", fcr);
    b.add("transfer matrices commute", comm);
    return b.done({{"model", family_name(f)}, {"q", to_json(q)}, {"max_L", max_L}, {"pairs", pairs}, {"seed", seed}});
}

Outcome log_derivative(int L, double tol)
{
    const Model m = Model::xxx(L);
    const auto c = interpolate([&](cplx x) { return dense_transfer(m, x); }, L);
    const auto n = c[0].rows();
    const MatX from_tau = 0.5 * c[1] * c[0].inverse() - 0.25 * L * MatX::Identity(n, n);
    const MatX H = dense(L, [&](const State& v) { return hamiltonian_apply(m, v); });
    Builder b{"log-derivative", tol};
    b.add("spectrum of (1/2) dtau tau^-1 - L/4 vs S.S sum", multiset_gap(eigenvalues(from_tau), eigenvalues(H)));
    return b.done({{"L", L}});
}

Outcome fermion(int max_L, std::uint64_t seed, double tol)
{
    Builder b{"fermion", tol};
    for (int L = 2; L <= max_L; ++L) {
        const Report r = verify_fermion_identities(L, seed + std::uint64_t(L));
        for (const auto& row : r.rows) b.add("L=" + std::to_string(L) + " " + row.name, row.value);
    }
    return b.done({{"max_L", max_L}, {"seed", seed}});
}

Outcome vectors(cplx q, int max_L, int max_M, std::uint64_t seed, double tol)
{
    std::mt19937_64 rng(seed);
    double xc = 0, xf = 0, xs = 0, zc = 0, zf = 0, zs = 0, off = 0;
    int cases = 0;
    for (int L = 2; L <= max_L; ++L)
        for (int M = 1; M <= std::min(L, max_M); ++M)
            for (int rep = 0; rep < 3; ++rep) {
                const auto roots = random_roots(rng, M);
                const Model mx = Model::xxx(L);
                const State alg = bethe_vector_algebraic(mx, roots);
                xc = std::max(xc, rel(alg, bethe_vector_coordinate_xxx(L, roots)));
                xf = std::max(xf, rel(alg, fermionic_bethe_vector(mx, roots)));
                xs = std::max(xs, rel(alg, bethe_vector_inhomogeneous(mx, roots)));
                off = std::max(off, off_sector_weight(alg, M));

                const Model mz = make_model(Family::XXZ, L, q);
                const State sweep = bethe_vector_algebraic(mz, roots);
                cplx scale = 1.0;
                for (cplx r : roots) scale *= fermionic_xxz_scale(L, r);
                const State rescaled = scale * sweep;
                zc = std::max(zc, rel(rescaled, bethe_vector_coordinate_xxz(L, q, roots)));
                zf = std::max(zf, rel(rescaled, fermionic_bethe_vector(mz, roots)));
                zs = std::max(zs, rel(sweep, bethe_vector_inhomogeneous(mz, roots)));
                off = std::max(off, off_sector_weight(sweep, M));
                ++cases;
            }
    Builder b{"vectors", tol};
    b.add("xxx coordinate sum vs algebraic", xc);
    b.add("xxx fermionic vs algebraic", xf);
    b.add("xxx site-resolved sum vs algebraic", xs);
    b.add("xxz coordinate sum vs rescaled algebraic", zc);
    b.add("xxz fermionic vs rescaled algebraic", zf);
    b.add("xxz site-resolved sum vs algebraic", zs);
    b.add("weight outside the M sector", off);
    return b.done({{"q", to_json(q)}, {"max_L", max_L}, {"max_M", max_M}, {"cases", cases}, {"seed", seed}});
}

Outcome decomposition(int L, int M, int trials, cplx q, std::uint64_t seed, double tol)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> count(1, L - 1);
    double wx = 0.0, wz = 0.0;
    json splits = json::array();
    for (int t = 0; t < trials; ++t) {
        std::vector<int> sites(L - 1);
        for (int k = 0; k < L - 1; ++k) sites[k] = k + 1;
        std::shuffle(sites.begin(), sites.end(), rng);
        std::vector<int> cuts(sites.begin(), sites.begin() + count(rng));
        std::sort(cuts.begin(), cuts.end());
        const ComponentSplit split{cuts};
        const auto roots = random_roots(rng, M);
        wx = std::max(wx, component_decomposition_check(Model::xxx(L), roots, split));
        wz = std::max(wz, component_decomposition_check(make_model(Family::XXZ, L, q), roots, split));
        splits.push_back(cuts);
    }
    Builder b{"decomposition", tol};
    b.add("xxx component product vs Bethe vector", wx);
    b.add("xxz component product vs Bethe vector", wz);
    return b.done({{"L", L}, {"M", M}, {"q", to_json(q)}, {"cuts", splits}, {"seed", seed}});
}

Outcome bethe(const BetheSystem& s, int M, const SolveConfig& cfg, const BetheCheck& chk)
{
    const int L = s.L;
    Operator H;
    switch (s.eq) {
    case Equations::xxx: H = [L](const State& v) { return hamiltonian_apply(Model::xxx(L), v); }; break;
    case Equations::xxz:
    case Equations::xxz_coordinate: {
        const Model m = make_model(Family::XXZ, L, s.q);
        H = [m](const State& v) { return hamiltonian_apply(m, v); };
        break;
    }
    case Equations::polaron: H = [L, q = s.q](const State& v) { return polaron_hamiltonian_apply(L, q, v); }; break;
    }
    auto vector_of = [&](const std::vector<cplx>& roots) -> State {
        switch (s.eq) {
        case Equations::xxx:
        case Equations::xxz: return bethe_vector_algebraic(s.model(), roots);
        case Equations::polaron: return polaron_coordinate_vector(L, s.q, roots).to_state();
        case Equations::xxz_coordinate: return xxz_coordinate_vector_via_amplitudes(L, s.q, roots).to_state();
        }
        return State(L);
    };

    const SolveResult res = solve_bethe(s, M, cfg);
    const bool with_ed = sector_basis(L, M).size() <= 1024;
    const auto ed = with_ed ? eigenvalues(sector_matrix(H, L, M)) : std::vector<cplx>{};

    Builder b{"bethe", chk.residual_tol};
    double worst_res = 0, worst_ed = 0, worst_vec = 0;
    int null_vectors = 0;
    json sets = json::array();
    for (const auto& set : res.sets) {
        json js = {{"roots", to_json(set.roots)}, {"residual", set.residual}, {"energy", to_json(set.energy)}};
        worst_res = std::max(worst_res, set.residual);
        if (with_ed) {
            const double d = nearest(ed, set.energy);
            js["ed_distance"] = d;
            worst_ed = std::max(worst_ed, d);
        }
        try {
            const State v = vector_of(set.roots);
            const double nv = norm(v);
            js["vector_norm"] = nv;
            if (nv < 1e-8) {
                ++null_vectors;  // vanishing Bethe vector: no eigenvector to test
            } else {
                const double e = norm(H(v) - set.energy * v) / nv;
                js["eigen_residual"] = e;
                worst_vec = std::max(worst_vec, e);
            }
        } catch (const std::domain_error& ex) {
            js["vector_error"] = ex.what();
            ++null_vectors;
        }
        sets.push_back(js);
    }
    b.require("solver returned root sets", !res.sets.empty());
    b.add("max Bethe residual", worst_res, chk.residual_tol);
    if (with_ed) b.add("max distance of energy to the ED sector spectrum", worst_ed, chk.energy_tol);
    b.add("max eigenvector residual", worst_vec, chk.eigen_tol);
    if (s.eq == Equations::polaron && M == 1) {
        double w = 0.0;
        for (int k = 0; k < L; ++k) {
            double best = INFINITY;
            for (const auto& set : res.sets) best = std::min(best, std::abs(set.roots[0] - std::polar(1.0, 2 * M_PI * k / L)));
            w = std::max(w, best);
        }
        b.add("one-magnon roots vs L-th roots of unity", w, 1e-12);
    }
    json extra = {{"model", to_string(s.eq)},
                  {"L", L},
                  {"M", M},
                  {"q", to_json(s.q)},
                  {"seed", cfg.seed},
                  {"starts", cfg.starts},
                  {"converged_starts", res.converged_starts},
                  {"vanishing_vectors", null_vectors},
                  {"sets", sets}};
    if (!res.diagnostic.empty()) extra["diagnostic"] = res.diagnostic;
    return b.done(extra);
}

Outcome compare(int L, cplx q, double tol)
{
    const ComparisonReport r = compare_models(L, q, tol);
    json sectors = json::array();
    Builder b{"compare", 0.5};
    for (const auto& s : r.sectors) {
        sectors.push_back({{"M", s.M},
                           {"equal", s.equal},
                           {"polaron", to_json(s.polaron)},
                           {"xxz", to_json(s.xxz)},
                           {"diff", {{"only_polaron", to_json(s.diff.only_a)}, {"only_xxz", to_json(s.diff.only_b)}}}});
        if (s.M % 2) b.require("odd sector M=" + std::to_string(s.M) + " equal", s.equal);
    }
    Outcome o = b.done();
    o.report["L"] = L;
    o.report["q"] = to_json(q);
    o.report["multiset_tolerance"] = tol;
    o.report["sectors"] = sectors;
    return o;
}

Outcome hecke(int n, cplx q, const std::optional<YoungDiagram>& only, double tol)
{
    if (n < 2 || n > max_hecke_n) throw std::domain_error("n outside the printed catalog 2..13");
    if (only && only->n() != n) throw std::domain_error("diagram " + only->label() + " does not have n boxes");
    std::vector<YoungDiagram> diagrams;
    if (only)
        diagrams.push_back(*only);
    else if (n <= 6)
        diagrams = diagrams_of_size(n);
    else
        diagrams.push_back({{n - 2, 2}});

    Builder b{"hecke", tol};
    json out = json::array();
    for (const auto& d : diagrams) {
        const bool two_row = n >= 4 && d.height() == 2 && d.rows[1] == 2;
        if (n > 6 && !two_row) throw std::domain_error("no printed factor for " + d.label() + " at n > 6");
        const auto eigs = charpoly_eigs(d, q);
        json residuals = json::object();
        if (n <= 6) {
            const PaperFactor& own = paper_factor(d.label());
            double w = 0.0, wid = 0.0;
            for (cplx x : eigs) {
                w = std::max(w, own.eval(q, x).relative());
                wid = std::max(wid, identity_eval(n, q, x).relative());
            }
            residuals[d.label()] = w;
            residuals["identity n=" + std::to_string(n)] = wid;
            b.add(d.label() + " own factor", w);
            b.add(d.label() + " product identity", wid);
        }
        json entry = {{"diagram", d.label()}, {"dim", eigs.size()}, {"eigenvalues", to_json(eigs)}};
        if (two_row) {
            const TwoRowReport r = verify_conjecture_two_row(n, q);
            residuals[short_label(n) + " x long"] = r.eigen_residual;
            b.add(d.label() + " short x long", r.eigen_residual);
            b.require(d.label() + " degrees", r.degrees_ok);
            entry["short_degree"] = r.short_degree;
            entry["long_degree"] = r.long_degree;
            entry["short_roots"] = r.short_roots;
            entry["charpoly_residual"] = r.charpoly_residual;
        }
        entry["factor_residuals"] = residuals;
        out.push_back(entry);
    }
    return b.done({{"n", n}, {"q", to_json(q)}, {"irreps", out}});
}

Outcome hecke_spectra(cplx q, double tol)
{
    Builder b{"hecke-spectra", tol};
    const cplx half = 0.5 * (q + 1.0 / q);
    int zeros = 0;
    for (cplx x : charpoly_eigs(YoungDiagram::parse("(3,1^2)"), q)) zeros += std::abs(x) < 1e-9;
    b.require("n=5: eigenvalue 0 twice in (3,1^2)", zeros == 2);
    int plus = 0, minus = 0;
    for (const auto& d : diagrams_of_size(6))
        for (cplx x : charpoly_eigs(d, q)) {
            plus += std::abs(x - half) < 1e-9;
            minus += std::abs(x + half) < 1e-9;
        }
    b.require("n=6: +qbar/2 three times", plus == 3);
    b.require("n=6: -qbar/2 three times", minus == 3);
    double dual = 0.0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& d : diagrams_of_size(n)) {
            auto neg = charpoly_eigs(d.dual(), q);
            for (auto& x : neg) x = -x;
            dual = std::max(dual, multiset_gap(charpoly_eigs(d, q), neg));
        }
    b.add("Spec(dual) = -Spec, n <= 6", dual);
    return b.done({{"q", to_json(q)}, {"zeros_in_(3,1^2)", zeros}, {"plus_half_qbar", plus}, {"minus_half_qbar", minus}});
}

Outcome hecke_algebra(int max_n, cplx q, double tol)
{
    Builder b{"hecke-algebra", tol};
    double jm = 0.0;
    for (int n = 2; n <= max_n; ++n)
        for (const auto& d : diagrams_of_size(n)) {
            const IrrepMatrices ir = build_irrep(d, q);
            for (const auto& row : verify_algebra(ir).rows)
                if (row.name != "jucys-murphy diagonal") b.add(d.label() + " " + row.name, row.value);
            jm = std::max(jm, jucys_murphy_residual(ir));
        }
    b.add("jucys-murphy images diagonal with contents", jm);
    if (max_n >= 5) {
        b.control("temperley-lieb on (3,1^2) (three rows, must fail)",
                  temperley_lieb_residual(build_irrep(YoungDiagram::parse("(3,1^2)"), q)), 1e-2);
        b.control("temperley-lieb on (2^2,1) (three rows, must fail)",
                  temperley_lieb_residual(build_irrep(YoungDiagram::parse("(2^2,1)"), q)), 1e-2);
    }
    return b.done({{"max_n", max_n}, {"q", to_json(q)}});
}

Outcome two_row(int n_lo, int n_hi, cplx q, double tol)
{
    Builder b{"two-row", tol};
    json rows = json::array();
    for (int n = n_lo; n <= n_hi; ++n) {
        const TwoRowReport r = verify_conjecture_two_row(n, q);
        const std::string tag = "n=" + std::to_string(n);
        b.add(tag + " eigenvalues annihilate short x long", r.eigen_residual);
        b.require(tag + " degrees p_{n-1} + p_n = n(n-3)/2", r.degrees_ok);
        json structure = json::object();
        for (const auto& s : r.structure.rows) structure[s.name] = s.value;
        rows.push_back({{"n", n},
                        {"dim", r.dim},
                        {"short_degree", r.short_degree},
                        {"long_degree", r.long_degree},
                        {"eigen_residual", r.eigen_residual},
                        {"charpoly_residual", r.charpoly_residual},
                        {"short_roots", r.short_roots},
                        {"structure", structure}});
    }
    return b.done({{"q", to_json(q)}, {"cases", rows}});
}

json spectrum(ChainModel m, int L, cplx q, int M)
{
    json sectors = json::array();
    for (int k = 0; k <= L; ++k) {
        if (M >= 0 && k != M) continue;
        sectors.push_back({{"M", k}, {"eigenvalues", to_json(sector_spectrum(m, L, q, k).eigenvalues)}});
    }
    return {{"model", to_string(m)}, {"L", L}, {"q", to_json(q)}, {"sectors", sectors}};
}

}  // namespace spinlab::suites
