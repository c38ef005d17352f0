#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spinlab/hilbert.hpp"

namespace spinlab {

inline constexpr int max_hecke_n = 13;

struct YoungDiagram {
    std::vector<int> rows;  // weakly decreasing, positive

    static YoungDiagram parse(const std::string& s);  // "(3,1^2)", "3,1,1", "(2^3)"
    void validate() const;
    int n() const;
    int height() const { return static_cast<int>(rows.size()); }
    YoungDiagram dual() const;
    std::string label() const;  // compressed, e.g. "(3,1^2)"
    bool operator==(const YoungDiagram& o) const { return rows == o.rows; }
};

// all diagrams with n boxes, reverse lexicographic ((n) first)
std::vector<YoungDiagram> diagrams_of_size(int n);
std::uint64_t hook_dimension(const YoungDiagram& d);

struct StandardTableau {
    YoungDiagram shape;
    std::vector<int> row, col;  // 0-based position of entry j at index j-1

    int content_exponent(int j) const { return col[j - 1] - row[j - 1]; }
    std::vector<std::vector<int>> filling() const;
    bool is_standard() const;
    StandardTableau swapped(int m) const;  // exchange entries m and m+1
};

// ordered lexicographically by the row sequence of entries 1..n
std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& d);

struct IrrepMatrices {
    YoungDiagram shape;
    cplx q = 1.0;
    std::vector<StandardTableau> basis;
    std::vector<MatX> s;  // s_1..s_{n-1} at index 0..n-2
    MatX H;

    int dim() const { return static_cast<int>(basis.size()); }
    MatX T(int k) const;  // s_k + (q - 1/q)/2, 1-based
    MatX baxterized(int k, cplx sqrt_x) const;  // x^{-1/2} T_k - x^{1/2} T_k^{-1}
};

// throws std::domain_error when |q^{2m} - 1| <= 1e-6 for some m <= n
IrrepMatrices build_irrep(const YoungDiagram& d, cplx q);

double jucys_murphy_residual(const IrrepMatrices& ir);
double temperley_lieb_residual(const IrrepMatrices& ir);
Report verify_algebra(const IrrepMatrices& ir);

std::vector<cplx> charpoly_eigs(const IrrepMatrices& ir);
std::vector<cplx> charpoly_eigs(const YoungDiagram& d, cplx q);

// 2 cos(pi m / n) - (q + 1/q), m = 1..n-1
std::vector<cplx> spectrum_hook_chain(int n, cplx q);
// H = sum s_k exceeds sum (T_k - q) by (n - 1)(q + 1/q)/2
cplx hook_chain_offset(int n, cplx q);

// Polynomials in two shifted variables Z = x - a v, Y = x - b v with v = (q + 1/q)/2.
class ZYPoly {
public:
    using Key = std::pair<int, int>;  // (power of Z, power of Y)

    ZYPoly() = default;
    ZYPoly(double c);
    ZYPoly(cplx c);
    static ZYPoly Z();
    static ZYPoly Y();

    friend ZYPoly operator+(const ZYPoly& a, const ZYPoly& b);
    friend ZYPoly operator-(const ZYPoly& a, const ZYPoly& b);
    friend ZYPoly operator*(const ZYPoly& a, const ZYPoly& b);
    ZYPoly operator-() const;
    ZYPoly pow(int k) const;
    ZYPoly reflected() const;  // every variable -> minus itself

    const std::map<Key, cplx>& terms() const { return c_; }
    cplx coeff(int i, int j) const;
    int total_degree() const;
    // homogeneous part of the lowest total degree
    ZYPoly lowest_part() const;
    // sum of coefficients of the top total degree (the x^degree coefficient)
    cplx leading() const;

private:
    std::map<Key, cplx> c_;
};

struct FactorValue {
    cplx value = 0.0;
    double scale = 0.0;  // sum of |term| before cancellation
    // floored at 1: near x = 0 every term of a factor without constant term vanishes
    double relative() const { return std::abs(value) / std::max(1.0, scale); }
};

struct PaperFactor {
    std::string label;
    int n = 0;
    std::string diagram;  // irrep the factor belongs to ("" for alternative forms)
    double z_shift = 0.0, y_shift = 0.0;  // Z = x - z_shift v, Y = x - y_shift v
    std::function<ZYPoly(cplx qbar)> build;

    ZYPoly poly(cplx q) const;
    int degree() const;
    FactorValue eval(cplx q, cplx x) const;
};

const std::vector<PaperFactor>& paper_catalog();
const PaperFactor& paper_factor(const std::string& label);
cplx paper_factor_eval(const std::string& label, cplx q, cplx x);
// factors that together form the characteristic identity for n (one per irrep, n <= 6)
std::vector<const PaperFactor*> identity_factors(int n);
FactorValue identity_eval(int n, cplx q, cplx x);

int two_row_short_degree(int n);  // p_{n-1}
int two_row_long_degree(int n);   // p_n
int p_degree(int n);
int k_index(int n);
int k_bar_index(int n);
std::string short_label(int n);  // "(n-2,2) short"
std::string long_label(int n);

struct TwoRowReport {
    int n = 0;
    cplx q = 1.0;
    int dim = 0;
    int short_degree = 0, long_degree = 0;
    bool degrees_ok = false;      // printed degrees = p_{n-1}, p_n and sum = n(n-3)/2
    double eigen_residual = 0.0;  // max over eigenvalues of |short long| / scale
    double charpoly_residual = 0.0;  // det(z - H) vs short(z) long(z) at sample points
    int short_roots = 0;          // eigenvalues annihilating the short factor
    Report structure;             // leading and trailing series coefficients
};
TwoRowReport verify_conjecture_two_row(int n, cplx q);

struct IdentityRow {
    YoungDiagram diagram;
    std::vector<cplx> eigenvalues;
    double identity_residual = 0.0;  // full product for n, worst eigenvalue
    int own_factor_misses = 0;       // eigenvalues not annihilated by the irrep's own factor
};
std::vector<IdentityRow> verify_characteristic_identity(int n, cplx q, double tol = 1e-6);

}  // namespace spinlab
