#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "spinlab/bethe.hpp"
#include "spinlab/hecke.hpp"
#include "spinlab/polaron.hpp"
#include "spinlab/vectors.hpp"

namespace spinlab::suites {

using json = nlohmann::ordered_json;

json to_json(cplx z);  // [re, im]
json to_json(const std::vector<cplx>& v);
cplx parse_complex(const std::string& s);  // "1.3", "0.7+0.2i", "-2i", "i", "0.7,0.2"

// every suite reports {suite, tolerance, pass, checks: [{name, value}], ...}
struct Outcome {
    json report;
    bool pass() const { return report.at("pass").get<bool>(); }
    double worst() const;
};

Outcome ybe(Family f, cplx q, int trials, std::uint64_t seed, double tol = 1e-12);
// FCR for L = 2..4, [tau(lam), tau(mu)] on random states for L = 2..max_L
Outcome transfer(Family f, cplx q, int max_L, int pairs, std::uint64_t seed, double tol = 1e-10);
// spectrum of (1/2) tau'(0) tau(0)^{-1} - L/4 against the S.S sum (XXX)
Outcome log_derivative(int L, double tol = 1e-9);
Outcome fermion(int max_L, std::uint64_t seed, double tol = 1e-12);
// algebraic sweep, coordinate sum, fermionic and site-resolved forms, off-shell roots
Outcome vectors(cplx q, int max_L, int max_M, std::uint64_t seed, double tol = 1e-10);
Outcome decomposition(int L, int M, int trials, cplx q, std::uint64_t seed, double tol = 1e-10);

struct BetheCheck {
    double residual_tol = 1e-10, energy_tol = 1e-7, eigen_tol = 1e-8;
};
Outcome bethe(const BetheSystem& s, int M, const SolveConfig& cfg, const BetheCheck& chk = {});

Outcome compare(int L, cplx q, double tol = 1e-9);

// n <= 6: every printed irrep factor and the product identity; n = 7..13: the (n-2,2) factors
Outcome hecke(int n, cplx q, const std::optional<YoungDiagram>& only = std::nullopt, double tol = 1e-6);
// spectral multiplicities and dual symmetry quoted for n = 5, 6
Outcome hecke_spectra(cplx q, double tol = 1e-9);
Outcome hecke_algebra(int max_n, cplx q, double tol = 1e-10);
Outcome two_row(int n_lo, int n_hi, cplx q, double tol = 1e-6);

// sector spectra of a closed chain; M < 0 means all sectors
json spectrum(ChainModel m, int L, cplx q, int M);

}  // namespace spinlab::suites
