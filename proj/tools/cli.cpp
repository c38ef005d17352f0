#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "suites.hpp"

namespace spinlab {

namespace {

using suites::json;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Params {
    std::string model = "xxx", q = "1.3", diagram, roots, form = "algebraic", out, format = "json";
    int L = 4, M = 1, n = 6, trials = 100, starts = 200, sector = -1;
    std::uint64_t seed = 1;
    double tol = 0.0;
    std::string suite;
};

using Table = std::vector<std::vector<std::string>>;

std::string num(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// real parts only; counts entries whose imaginary part would be dropped
struct CsvBuilder {
    Table rows;
    int lossy = 0;
    std::string re(const json& z)
    {
        if (std::abs(z[1].get<double>()) > 1e-9) ++lossy;
        return num(z[0].get<double>());
    }
};

std::vector<cplx> parse_roots(const std::string& text)
{
    std::vector<cplx> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';'))
        if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(suites::parse_complex(item));
    return out;
}

std::uint64_t binomial(int n, int k)
{
    std::uint64_t c = 1;
    for (int i = 1; i <= k; ++i) c = c * std::uint64_t(n - k + i) / std::uint64_t(i);
    return c;
}

Family family_of(const std::string& model)
{
    if (model == "xxx") return Family::XXX;
    if (model == "xxz") return Family::XXZ;
    throw UsageError("model must be xxx or xxz for this suite, got '" + model + "'");
}

class Runner {
public:
    Runner(CLI::App& app, Params& p, std::ostream& out, std::ostream& err) : app_(app), p_(p), out_(out), err_(err) {}

    int verify()
    {
        const std::string& s = p_.suite;
        const cplx q = suites::parse_complex(p_.q);
        suites::Outcome o;
        if (s == "ybe")
            o = suites::ybe(family_of(p_.model), q, p_.trials, p_.seed, tol(1e-12));
        else if (s == "fcr")
            o = suites::transfer(family_of(p_.model), q, given("--L") ? p_.L : 8, given("--trials") ? p_.trials : 20,
                                 p_.seed, tol(1e-10));
        else if (s == "fermion")
            o = suites::fermion(given("--L") ? p_.L : 6, p_.seed, tol(1e-12));
        else if (s == "vectors")
            o = suites::vectors(q, given("--L") ? p_.L : 6, given("--M") ? p_.M : 3, p_.seed, tol(1e-10));
        else if (s == "decomposition")
            o = suites::decomposition(given("--L") ? p_.L : 6, given("--M") ? p_.M : 2,
                                      given("--trials") ? p_.trials : 10, q, p_.seed, tol(1e-10));
        else if (s == "log-derivative")
            o = suites::log_derivative(p_.L, tol(1e-9));
        else if (s == "hecke-algebra")
            o = suites::hecke_algebra(p_.n, q, tol(1e-10));
        else if (s == "hecke-spectra")
            o = suites::hecke_spectra(q, tol(1e-9));
        else if (s == "two-row")
            o = suites::two_row(4, given("--n") ? p_.n : 13, q, tol(1e-6));
        else
            throw UsageError("unknown suite '" + s + "'");

        CsvBuilder csv;
        csv.rows.push_back({"check", "value", "tolerance"});
        for (const auto& c : o.report["checks"])
            csv.rows.push_back({c["name"], num(c["value"]), c.contains("tolerance") ? num(c["tolerance"]) : ""});
        return finish(o.report, csv, o.pass());
    }

    int bethe()
    {
        const Equations eq = equations_from_string(p_.model);
        const cplx q = eq == Equations::xxx ? cplx(1.0) : suites::parse_complex(p_.q);
        const BetheSystem sys{eq, p_.L, q};
        if (eq != Equations::xxx) check_q(q, p_.L);
        if (p_.M < 1 || p_.M > p_.L) throw UsageError("M must lie in 1..L");
        SolveConfig cfg;
        cfg.starts = p_.starts;
        cfg.seed = p_.seed;
        suites::BetheCheck chk;
        if (p_.tol > 0) chk.residual_tol = p_.tol;
        const suites::Outcome o = suites::bethe(sys, p_.M, cfg, chk);
        if (o.report["sets"].empty())
            err_ << "no root set converged"
                 << (o.report.contains("diagnostic") ? ": " + o.report["diagnostic"].get<std::string>() : "") << "\n";

        CsvBuilder csv;
        csv.rows.push_back({"set", "root", "root_re", "energy_re", "residual"});
        int k = 0;
        for (const auto& set : o.report["sets"]) {
            int r = 0;
            for (const auto& z : set["roots"])
                csv.rows.push_back({std::to_string(k), std::to_string(r++), csv.re(z), csv.re(set["energy"]),
                                    num(set["residual"])});
            ++k;
        }
        return finish(o.report, csv, o.pass());
    }

    int spectrum()
    {
        const ChainModel m = chain_model_from_string(p_.model == "xxx" && !given("--model") ? "polaron" : p_.model);
        const cplx q = suites::parse_complex(p_.q);
        if (q == 0.0) throw std::domain_error("q = 0");
        if (p_.L < 2 || p_.L > max_sites) throw UsageError("L must lie in 2.." + std::to_string(max_sites));
        int M = given("--sector") ? p_.sector : given("--M") ? p_.M : -1;
        if ((given("--sector") || given("--M")) && (M < 0 || M > p_.L))
            throw UsageError("sector M=" + std::to_string(M) + " outside 0..L");
        for (int k = 0; k <= p_.L; ++k)
            if ((M < 0 || k == M) && binomial(p_.L, k) > max_sector_dim) {
                err_ << "sector M=" << k << " has dimension " << binomial(p_.L, k) << " > " << max_sector_dim << "\n";
                return 1;
            }
        const json r = suites::spectrum(m, p_.L, q, M);
        CsvBuilder csv;
        csv.rows.push_back({"M", "index", "eigenvalue_re"});
        for (const auto& s : r["sectors"]) {
            int i = 0;
            for (const auto& z : s["eigenvalues"]) csv.rows.push_back({num(s["M"]), std::to_string(i++), csv.re(z)});
        }
        return finish(r, csv, true);
    }

    int vector()
    {
        const Equations eq = equations_from_string(p_.model);
        const auto roots = parse_roots(p_.roots);
        const int M = static_cast<int>(roots.size());
        if (M > p_.L) throw UsageError("more roots than sites");
        const cplx q = eq == Equations::xxx ? cplx(1.0) : suites::parse_complex(p_.q);
        State v;
        const std::string& f = p_.form;
        if (eq == Equations::polaron)
            v = polaron_coordinate_vector(p_.L, q, roots).to_state();
        else if (eq == Equations::xxz_coordinate)
            v = xxz_coordinate_vector_via_amplitudes(p_.L, q, roots).to_state();
        else {
            const Model m = eq == Equations::xxx ? Model::xxx(p_.L) : Model::xxz(p_.L, q);
            validate(m);
            if (f == "algebraic")
                v = bethe_vector_algebraic(m, roots);
            else if (f == "coordinate")
                v = eq == Equations::xxx ? bethe_vector_coordinate_xxx(p_.L, roots)
                                         : bethe_vector_coordinate_xxz(p_.L, q, roots);
            else if (f == "fermionic")
                v = fermionic_bethe_vector(m, roots);
            else if (f == "inhomogeneous")
                v = bethe_vector_inhomogeneous(m, roots);
            else
                throw UsageError("unknown form '" + f + "' (algebraic, coordinate, fermionic, inhomogeneous)");
        }
        json entries = json::array();
        CsvBuilder csv;
        csv.rows.push_back({"sites", "re", "im"});
        for (std::uint64_t idx : sector_basis(p_.L, M)) {
            const auto sites = index_to_sites(p_.L, idx);
            entries.push_back({{"sites", sites}, {"re", v[idx].real()}, {"im", v[idx].imag()}});
            std::string label;
            for (int s : sites) label += (label.empty() ? "" : " ") + std::to_string(s);
            csv.rows.push_back({label, num(v[idx].real()), num(v[idx].imag())});
        }
        json r = {{"model", p_.model}, {"form", eq == Equations::xxx || eq == Equations::xxz ? f : "coordinate"},
                  {"L", p_.L}, {"M", M}, {"q", suites::to_json(q)}, {"roots", suites::to_json(roots)},
                  {"off_sector_weight", off_sector_weight(v, M)}, {"entries", entries}};
        return finish(r, csv, true);
    }

    int compare()
    {
        const suites::Outcome o = suites::compare(p_.L, suites::parse_complex(p_.q), tol(1e-9));
        CsvBuilder csv;
        csv.rows.push_back({"M", "equal", "model", "index", "eigenvalue_re"});
        for (const auto& s : o.report["sectors"])
            for (const char* model : {"polaron", "xxz"}) {
                int i = 0;
                for (const auto& z : s[model])
                    csv.rows.push_back({num(s["M"]), s["equal"].get<bool>() ? "1" : "0", model, std::to_string(i++),
                                        csv.re(z)});
            }
        return finish(o.report, csv, o.pass());
    }

    int hecke()
    {
        std::optional<YoungDiagram> d;
        if (!p_.diagram.empty()) d = YoungDiagram::parse(p_.diagram);
        const suites::Outcome o = suites::hecke(p_.n, suites::parse_complex(p_.q), d, tol(1e-6));
        CsvBuilder csv;
        csv.rows.push_back({"diagram", "index", "eigenvalue_re"});
        for (const auto& ir : o.report["irreps"]) {
            int i = 0;
            for (const auto& z : ir["eigenvalues"]) csv.rows.push_back({ir["diagram"], std::to_string(i++), csv.re(z)});
        }
        return finish(o.report, csv, o.pass());
    }

private:
    bool given(const std::string& opt) const { return app_.count(opt) > 0; }
    double tol(double fallback) const { return p_.tol > 0 ? p_.tol : fallback; }

    int finish(const json& report, CsvBuilder& csv, bool pass)
    {
        std::string text;
        if (p_.format == "csv") {
            if (csv.lossy)
                err_ << "warning: " << csv.lossy << " values have imaginary part above 1e-9; csv keeps real parts only\n";
            for (const auto& row : csv.rows) {
                for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + row[i];
                text += "\n";
            }
        } else {
            text = report.dump(2) + "\n";
        }
        if (p_.out.empty()) {
            out_ << text;
        } else {
            std::ofstream f(p_.out, std::ios::binary);
            if (!f) throw std::runtime_error("cannot write " + p_.out);
            f << text;
        }
        if (!pass) err_ << "checks failed\n";
        return pass ? 0 : 1;
    }

    CLI::App& app_;
    Params& p_;
    std::ostream& out_;
    std::ostream& err_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Params p;
    CLI::App app{"Bethe ansatz, fermionic chains and Hecke algebra verification", "spinlab"};
    app.require_subcommand(1);
    app.set_config("--config", "", "flat key = value file mirroring the long flags");
    app.add_option("--model", p.model, "xxx | xxz | polaron | xxz-coordinate | xxz-closed");
    app.add_option("--L", p.L, "number of sites");
    app.add_option("--M", p.M, "number of magnons");
    app.add_option("--q", p.q, "deformation parameter, e.g. 1.3 or 0.7+0.2i");
    app.add_option("--n", p.n, "Hecke algebra rank");
    app.add_option("--diagram", p.diagram, "Young diagram, e.g. 8,2 or (3,1^2)");
    app.add_option("--trials", p.trials, "random trials");
    app.add_option("--starts", p.starts, "Newton starts");
    app.add_option("--sector", p.sector, "restrict to one magnon sector");
    app.add_option("--roots", p.roots, "semicolon-separated complex roots");
    app.add_option("--form", p.form, "algebraic | coordinate | fermionic | inhomogeneous");
    app.add_option("--seed", p.seed, "random seed");
    app.add_option("--tol", p.tol, "tolerance override");
    app.add_option("--out", p.out, "output file (default stdout)");
    app.add_option("--format", p.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    Runner run(app, p, out, err);
    std::function<int()> action;
    auto sub = [&](const char* name, const char* help, int (Runner::*fn)()) {
        CLI::App* s = app.add_subcommand(name, help)->fallthrough();
        s->callback([&action, &run, fn] { action = [&run, fn] { return (run.*fn)(); }; });
        return s;
    };
    sub("verify", "run an invariant suite", &Runner::verify)
        ->add_option("suite", p.suite,
                     "ybe | fcr | fermion | hecke-algebra | vectors | decomposition | log-derivative | hecke-spectra | two-row")
        ->required();
    sub("bethe", "solve and verify Bethe equations", &Runner::bethe);
    sub("spectrum", "sector-resolved exact spectrum of a closed chain", &Runner::spectrum);
    sub("vector", "Bethe vector amplitudes for given roots", &Runner::vector);
    sub("compare", "polaron vs closed XXZ spectra per sector", &Runner::compare);
    sub("hecke", "irrep spectra against the printed characteristic factors", &Runner::hecke);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace spinlab
