#include "spinlab/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace spinlab {

// ---------------------------------------------------------------- diagrams

YoungDiagram YoungDiagram::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s += c;
    YoungDiagram d;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw std::invalid_argument("bad diagram: " + text);
        const auto caret = part.find('^');
        std::size_t used = 0;
        const int len = std::stoi(part.substr(0, caret), &used);
        int times = 1;
        if (caret != std::string::npos) times = std::stoi(part.substr(caret + 1));
        if (times < 1) throw std::invalid_argument("bad diagram: " + text);
        for (int i = 0; i < times; ++i) d.rows.push_back(len);
    }
    d.validate();
    return d;
}

void YoungDiagram::validate() const
{
    if (rows.empty()) throw std::invalid_argument("empty diagram");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 1) throw std::invalid_argument("row lengths must be positive");
        if (i && rows[i] > rows[i - 1]) throw std::invalid_argument("row lengths must not increase");
    }
    if (n() > max_hecke_n) throw std::invalid_argument("diagram larger than 13 boxes");
}

int YoungDiagram::n() const { return std::accumulate(rows.begin(), rows.end(), 0); }

YoungDiagram YoungDiagram::dual() const
{
    YoungDiagram d;
    for (int c = 0; c < rows[0]; ++c) {
        int h = 0;
        for (int r : rows)
            if (r > c) ++h;
        d.rows.push_back(h);
    }
    return d;
}

std::string YoungDiagram::label() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < rows.size();) {
        std::size_t j = i;
        while (j < rows.size() && rows[j] == rows[i]) ++j;
        if (i) out += ",";
        out += std::to_string(rows[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + ")";
}

std::vector<YoungDiagram> diagrams_of_size(int n)
{
    if (n < 1 || n > max_hecke_n) throw std::invalid_argument("n out of range");
    std::vector<YoungDiagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back({cur});
            return;
        }
        for (int r = std::min(left, cap); r >= 1; --r) {
            cur.push_back(r);
            rec(left - r, r);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::uint64_t hook_dimension(const YoungDiagram& d)
{
    d.validate();
    const YoungDiagram t = d.dual();
    std::uint64_t num = 1;
    for (int k = 2; k <= d.n(); ++k) num *= std::uint64_t(k);
    std::uint64_t den = 1;
    for (int r = 0; r < d.height(); ++r)
        for (int c = 0; c < d.rows[r]; ++c) den *= std::uint64_t((d.rows[r] - c) + (t.rows[c] - r) - 1);
    return num / den;
}

// ---------------------------------------------------------------- tableaux

std::vector<std::vector<int>> StandardTableau::filling() const
{
    std::vector<std::vector<int>> f;
    for (int r : shape.rows) f.emplace_back(r, 0);
    for (std::size_t j = 0; j < row.size(); ++j) f[row[j]][col[j]] = int(j) + 1;
    return f;
}

bool StandardTableau::is_standard() const
{
    const auto f = filling();
    for (std::size_t r = 0; r < f.size(); ++r)
        for (std::size_t c = 0; c < f[r].size(); ++c) {
            if (f[r][c] == 0) return false;
            if (c && f[r][c] < f[r][c - 1]) return false;
            if (r && f[r][c] < f[r - 1][c]) return false;
        }
    return true;
}

StandardTableau StandardTableau::swapped(int m) const
{
    StandardTableau t = *this;
    std::swap(t.row[m - 1], t.row[m]);
    std::swap(t.col[m - 1], t.col[m]);
    return t;
}

std::vector<StandardTableau> enumerate_standard_tableaux(const YoungDiagram& d)
{
    d.validate();
    std::vector<StandardTableau> out;
    std::vector<int> len(d.rows.size(), 0);
    StandardTableau cur{d, {}, {}};
    std::function<void()> rec = [&]() {
        if (int(cur.row.size()) == d.n()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < d.rows.size(); ++r) {
            if (len[r] == d.rows[r] || (r && len[r - 1] <= len[r])) continue;
            cur.row.push_back(int(r));
            cur.col.push_back(len[r]++);
            rec();
            --len[r];
            cur.row.pop_back();
            cur.col.pop_back();
        }
    };
    rec();
    return out;
}

// ---------------------------------------------------------------- irreps

MatX IrrepMatrices::T(int k) const
{
    return s.at(k - 1) + (0.5 * (q - 1.0 / q)) * MatX::Identity(dim(), dim());
}

MatX IrrepMatrices::baxterized(int k, cplx sqrt_x) const
{
    const MatX t = T(k);
    const MatX tinv = t - (q - 1.0 / q) * MatX::Identity(dim(), dim());
    return t / sqrt_x - sqrt_x * tinv;
}

IrrepMatrices build_irrep(const YoungDiagram& d, cplx q)
{
    d.validate();
    const int n = d.n();
    for (int m = 1; m <= n; ++m)
        if (std::abs(std::pow(q, 2 * m) - 1.0) <= 1e-6)
            throw std::domain_error("q too close to a root of unity for this diagram");

    IrrepMatrices ir;
    ir.shape = d;
    ir.q = q;
    ir.basis = enumerate_standard_tableaux(d);
    const int dim = ir.dim();
    std::map<std::pair<std::vector<int>, std::vector<int>>, int> index;
    for (int a = 0; a < dim; ++a) index[{ir.basis[a].row, ir.basis[a].col}] = a;

    const cplx lam = q - 1.0 / q;
    auto content = [&](const StandardTableau& t, int j) { return std::pow(q, 2 * t.content_exponent(j)); };
    for (int m = 1; m < n; ++m) {
        MatX s = MatX::Zero(dim, dim);
        for (int a = 0; a < dim; ++a) {
            const StandardTableau& t = ir.basis[a];
            const cplx ym = content(t, m), yn = content(t, m + 1);
            if (std::abs(yn - ym) < 1e-300) throw std::domain_error("zero content denominator");
            s(a, a) = 0.5 * lam * (yn + ym) / (yn - ym);
            const StandardTableau u = t.swapped(m);
            if (!u.is_standard()) continue;
            const int b = index.at({u.row, u.col});
            if (t.content_exponent(m) > t.content_exponent(m + 1))
                s(b, a) = 1.0;
            else
                s(b, a) = (q * yn - ym / q) * (yn / q - q * ym) / ((yn - ym) * (yn - ym));
        }
        ir.s.push_back(std::move(s));
    }
    ir.H = MatX::Zero(dim, dim);
    for (const auto& s : ir.s) ir.H += s;
    return ir;
}

namespace {

double max_entry(const MatX& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

double rel_gap(const MatX& a, const MatX& b)
{
    return max_entry(a - b) / std::max(1.0, std::max(max_entry(a), max_entry(b)));
}

}  // namespace

double jucys_murphy_residual(const IrrepMatrices& ir)
{
    const int n = ir.shape.n(), dim = ir.dim();
    MatX y = MatX::Identity(dim, dim);
    double worst = 0.0;
    for (int j = 1; j <= n; ++j) {
        if (j > 1) y = ir.T(j - 1) * y * ir.T(j - 1);
        MatX expect = MatX::Zero(dim, dim);
        for (int a = 0; a < dim; ++a) expect(a, a) = std::pow(ir.q, 2 * ir.basis[a].content_exponent(j));
        worst = std::max(worst, rel_gap(y, expect));
    }
    return worst;
}

double temperley_lieb_residual(const IrrepMatrices& ir)
{
    const int n = ir.shape.n();
    const cplx q = ir.q;
    double worst = 0.0;
    for (int k = 1; k < n; ++k) {
        const MatX a = ir.baxterized(k, q);
        for (int l : {k - 1, k + 1}) {
            if (l < 1 || l >= n) continue;
            const MatX b = ir.baxterized(l, q * q);
            const double scale = std::max(1.0, max_entry(a) * max_entry(a) * max_entry(b));
            worst = std::max(worst, max_entry(a * b * a) / scale);
        }
    }
    return worst;
}

Report verify_algebra(const IrrepMatrices& ir)
{
    const int n = ir.shape.n(), dim = ir.dim();
    const cplx q = ir.q, lam = q - 1.0 / q, qbar = q + 1.0 / q;
    const MatX I = MatX::Identity(dim, dim);
    double quad = 0, ssq = 0, braid = 0, far = 0;
    for (int k = 1; k < n; ++k) {
        const MatX t = ir.T(k);
        quad = std::max(quad, rel_gap(t * t, lam * t + I));
        ssq = std::max(ssq, rel_gap(ir.s[k - 1] * ir.s[k - 1], 0.25 * qbar * qbar * I));
        if (k + 1 < n) {
            const MatX u = ir.T(k + 1);
            braid = std::max(braid, rel_gap(t * u * t, u * t * u));
        }
        for (int l = k + 2; l < n; ++l) {
            const MatX u = ir.T(l);
            far = std::max(far, rel_gap(t * u, u * t));
        }
    }
    // longest element (T_1..T_{n-1})(T_1..T_{n-2})...(T_1)
    MatX j = I;
    for (int top = n - 1; top >= 1; --top)
        for (int k = 1; k <= top; ++k) j = j * ir.T(k);
    double reflect = 0;
    for (int i = 1; i < n; ++i) reflect = std::max(reflect, rel_gap(ir.T(i) * j, j * ir.T(n - i)));

    Report r;
    r.add("hecke quadratic", quad);
    r.add("s squared", ssq);
    r.add("braid", braid);
    r.add("far commutation", far);
    r.add("longest element commutes with H", rel_gap(j * ir.H, ir.H * j));
    r.add("longest element reflects generators", reflect);
    r.add("jucys-murphy diagonal", jucys_murphy_residual(ir));
    if (ir.shape.height() <= 2) r.add("temperley-lieb", temperley_lieb_residual(ir));
    return r;
}

std::vector<cplx> charpoly_eigs(const IrrepMatrices& ir)
{
    if (ir.dim() > 100) throw std::invalid_argument("irrep dimension above 100");
    Eigen::ComplexEigenSolver<MatX> es(ir.H, false);
    std::vector<cplx> out(es.eigenvalues().begin(), es.eigenvalues().end());
    std::sort(out.begin(), out.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

std::vector<cplx> charpoly_eigs(const YoungDiagram& d, cplx q)
{
    return charpoly_eigs(build_irrep(d, q));
}

std::vector<cplx> spectrum_hook_chain(int n, cplx q)
{
    if (n < 2) throw std::invalid_argument("n >= 2 required");
    std::vector<cplx> out;
    for (int m = 1; m < n; ++m) out.push_back(2 * std::cos(M_PI * m / n) - (q + 1.0 / q));
    return out;
}

cplx hook_chain_offset(int n, cplx q) { return 0.5 * double(n - 1) * (q + 1.0 / q); }

// ---------------------------------------------------------------- polynomials

ZYPoly::ZYPoly(double c) : ZYPoly(cplx(c)) {}

ZYPoly::ZYPoly(cplx c)
{
    if (c != 0.0) c_[{0, 0}] = c;
}

ZYPoly ZYPoly::Z()
{
    ZYPoly p;
    p.c_[{1, 0}] = 1.0;
    return p;
}

ZYPoly ZYPoly::Y()
{
    ZYPoly p;
    p.c_[{0, 1}] = 1.0;
    return p;
}

ZYPoly operator+(const ZYPoly& a, const ZYPoly& b)
{
    ZYPoly r = a;
    for (const auto& [k, v] : b.c_) r.c_[k] += v;
    return r;
}

ZYPoly operator-(const ZYPoly& a, const ZYPoly& b) { return a + (-b); }

ZYPoly operator*(const ZYPoly& a, const ZYPoly& b)
{
    ZYPoly r;
    for (const auto& [ka, va] : a.c_)
        for (const auto& [kb, vb] : b.c_) r.c_[{ka.first + kb.first, ka.second + kb.second}] += va * vb;
    return r;
}

ZYPoly ZYPoly::operator-() const
{
    ZYPoly r = *this;
    for (auto& kv : r.c_) kv.second = -kv.second;
    return r;
}

ZYPoly ZYPoly::pow(int k) const
{
    ZYPoly r(1.0);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

ZYPoly ZYPoly::reflected() const
{
    ZYPoly r = *this;
    for (auto& [k, v] : r.c_)
        if ((k.first + k.second) % 2) v = -v;
    return r;
}

cplx ZYPoly::coeff(int i, int j) const
{
    auto it = c_.find({i, j});
    return it == c_.end() ? cplx(0.0) : it->second;
}

int ZYPoly::total_degree() const
{
    for (int d = 200; d >= 0; --d) {
        cplx s = 0.0;
        bool any = false;
        for (const auto& [k, v] : c_)
            if (k.first + k.second == d) {
                s += v;
                any = true;
            }
        if (any && std::abs(s) > 1e-9) return d;
    }
    return 0;
}

cplx ZYPoly::leading() const
{
    const int d = total_degree();
    cplx s = 0.0;
    for (const auto& [k, v] : c_)
        if (k.first + k.second == d) s += v;
    return s;
}

ZYPoly ZYPoly::lowest_part() const
{
    int low = 1 << 20;
    for (const auto& [k, v] : c_)
        if (std::abs(v) > 1e-12) low = std::min(low, k.first + k.second);
    ZYPoly r;
    for (const auto& [k, v] : c_)
        if (k.first + k.second == low && std::abs(v) > 1e-12) r.c_[k] = v;
    return r;
}

ZYPoly PaperFactor::poly(cplx q) const { return build(q + 1.0 / q); }

int PaperFactor::degree() const { return poly(1.3).total_degree(); }

FactorValue PaperFactor::eval(cplx q, cplx x) const
{
    const cplx v = 0.5 * (q + 1.0 / q);
    const cplx z = x - z_shift * v, y = x - y_shift * v;
    FactorValue f;
    const ZYPoly p = poly(q);
    for (const auto& [k, c] : p.terms()) {
        const cplx t = c * std::pow(z, k.first) * std::pow(y, k.second);
        f.value += t;
        f.scale += std::abs(t);
    }
    return f;
}

// ---------------------------------------------------------------- catalog

namespace {

std::vector<PaperFactor> make_catalog()
{
    const ZYPoly Z = ZYPoly::Z(), Y = ZYPoly::Y(), x = Z;
    auto z = [Z](int k) { return Z.pow(k); };
    auto y = [Y](int k) { return Y.pow(k); };
    const double r5 = std::sqrt(5.0), r3 = std::sqrt(3.0);
    std::vector<PaperFactor> c;
    auto plain = [&](std::string label, int n, std::string diagram, std::function<ZYPoly(cplx)> f) {
        c.push_back({std::move(label), n, std::move(diagram), 0.0, 0.0, std::move(f)});
    };

    // n = 2 .. 4
    plain("(2)", 2, "(2)", [=](cplx qb) { return x - 0.5 * qb; });
    plain("(1^2)", 2, "(1^2)", [=](cplx qb) { return x + 0.5 * qb; });
    plain("(3)", 3, "(3)", [=](cplx qb) { return x - qb; });
    plain("(1^3)", 3, "(1^3)", [=](cplx qb) { return x + qb; });
    plain("(2,1)", 3, "(2,1)", [=](cplx) { return (x - 1.0) * (x + 1.0); });
    plain("(4)", 4, "(4)", [=](cplx qb) { return x - 1.5 * qb; });
    plain("(1^4)", 4, "(1^4)", [=](cplx qb) { return x + 1.5 * qb; });
    plain("(3,1)", 4, "(3,1)", [=](cplx qb) {
        const ZYPoly w = x - 0.5 * qb;
        return w * (w.pow(2) - 2.0);
    });
    plain("(2,1^2)", 4, "(2,1^2)", [=](cplx qb) {
        const ZYPoly w = x + 0.5 * qb;
        return w * (w.pow(2) - 2.0);
    });
    plain("(2^2)", 4, "(2^2)", [=](cplx qb) { return x.pow(2) - 0.25 * qb * qb - 2.0; });

    // n = 5
    plain("(5)", 5, "(5)", [=](cplx qb) { return x - 2.0 * qb; });
    plain("(1^5)", 5, "(1^5)", [=](cplx qb) { return x + 2.0 * qb; });
    plain("(3,1^2)", 5, "(3,1^2)", [=](cplx) { return x * (x.pow(2) - 1.0) * (x.pow(2) - 5.0); });
    auto golden = [=](const ZYPoly& w) {
        return (w.pow(2) - (r5 - 1) * (r5 - 1) / 4) * (w.pow(2) - (r5 + 1) * (r5 + 1) / 4);
    };
    plain("(2,1^3)", 5, "(2,1^3)", [=](cplx qb) { return golden(x + qb); });
    plain("(4,1)", 5, "(4,1)", [=](cplx qb) { return golden(x - qb); });
    plain("(2^2,1)", 5, "(2^2,1)", [=](cplx qb) {
        return (x.pow(2) + qb * x - 1.0) * (x.pow(3) + qb * x.pow(2) - 5.0 * x - 2.0 * qb);
    });
    plain("(3,2)", 5, "(3,2)", [=](cplx qb) {
        return (x.pow(2) - qb * x - 1.0) * (x.pow(3) - qb * x.pow(2) - 5.0 * x + 2.0 * qb);
    });

    // n = 6
    plain("(6)", 6, "(6)", [=](cplx qb) { return x - 2.5 * qb; });
    plain("(1^6)", 6, "(1^6)", [=](cplx qb) { return x + 2.5 * qb; });
    auto hook3 = [=](const ZYPoly& w) { return w * (w.pow(2) - 1.0) * (w.pow(2) - 3.0); };
    plain("(2,1^4)", 6, "(2,1^4)", [=](cplx qb) { return hook3(x + 1.5 * qb); });
    plain("(5,1)", 6, "(5,1)", [=](cplx qb) { return hook3(x - 1.5 * qb); });
    auto hook5 = [=](const ZYPoly& w) {
        return hook3(w) * (w.pow(2) - (r3 + 1) * (r3 + 1)) * (w.pow(2) - (r3 - 1) * (r3 - 1));
    };
    plain("(3,1^3)", 6, "(3,1^3)", [=](cplx qb) { return hook5(x + 0.5 * qb); });
    plain("(4,1^2)", 6, "(4,1^2)", [=](cplx qb) { return hook5(x - 0.5 * qb); });

    auto f42 = [=](cplx qb) {
        const ZYPoly a = 3.0 * std::pow(qb, 3) - 20.0 * qb + (24.0 - 14.0 * qb * qb) * x +
                         20.0 * qb * x.pow(2) - 8.0 * x.pow(3);
        const ZYPoly b =
            9.0 * std::pow(qb, 6) - 228.0 * std::pow(qb, 4) + 512.0 * qb * qb - 256.0 -
            (1408.0 * qb - 1280.0 * std::pow(qb, 3) + 84.0 * std::pow(qb, 5)) * x +
            (768.0 - 2528.0 * qb * qb + 316.0 * std::pow(qb, 4)) * x.pow(2) +
            (2048.0 * qb - 608.0 * std::pow(qb, 3)) * x.pow(3) + (624.0 * qb * qb - 576.0) * x.pow(4) -
            320.0 * qb * x.pow(5) + 64.0 * x.pow(6);
        return a * b;
    };
    auto f222 = [=](cplx qb) {
        return 3.0 * std::pow(qb, 4) + 16.0 * qb * qb - 64.0 + (8.0 * std::pow(qb, 3) + 160.0 * qb) * x +
               (-8.0 * qb * qb + 128.0) * x.pow(2) - 32.0 * qb * x.pow(3) - 16.0 * x.pow(4);
    };
    auto f321 = [=](cplx qb) {
        return std::pow(qb, 8) + 16.0 * std::pow(qb, 4) - 256.0 * qb * qb - 256.0 +
               (2560.0 + 1024.0 * qb * qb + 64.0 * std::pow(qb, 4)) * x -
               (5120.0 + 1152.0 * qb * qb + 192.0 * std::pow(qb, 4) + 16.0 * std::pow(qb, 6)) * x.pow(2) -
               (2048.0 + 512.0 * qb * qb) * x.pow(3) +
               (8448.0 + 1536.0 * qb * qb + 96.0 * std::pow(qb, 4)) * x.pow(4) + 1024.0 * x.pow(5) -
               (3072.0 + 256.0 * qb * qb) * x.pow(6) + 256.0 * x.pow(8);
    };
    plain("(4,2)", 6, "(4,2)", f42);
    plain("(2^2,1^2)", 6, "(2^2,1^2)", [=](cplx qb) { return f42(qb).reflected(); });
    // the order-72 identity drops the repeated -qbar/2 from this factor; the complete
    // factor is the H -> -H image of the (3^2) identity
    plain("(2^3)", 6, "(2^3)", [=](cplx qb) { return (x + 0.5 * qb) * f222(qb); });
    plain("(2^3) reduced", 6, "", f222);
    plain("(3^2)", 6, "(3^2)", [=](cplx qb) {
        return (x - 0.5 * qb) *
               (3.0 * std::pow(qb, 4) + 16.0 * qb * qb - 64.0 - (8.0 * std::pow(qb, 3) + 160.0 * qb) * x +
                (-8.0 * qb * qb + 128.0) * x.pow(2) + 32.0 * qb * x.pow(3) - 16.0 * x.pow(4));
    });
    plain("(3,2,1)", 6, "(3,2,1)", [=](cplx qb) { return f321(qb) * f321(qb).reflected(); });

    // alternative printed forms of the same factors
    plain("(3,2,1) half", 6, "", f321);
    plain("(3,2,1) concise", 6, "", [=](cplx qb) {
        const cplx v = 0.5 * qb;
        auto p = [&](int k) { return std::pow(v, k); };
        return p(8) + p(4) - 4.0 * p(2) - 1.0 + 10.0 * x + 16.0 * x * p(2) + 4.0 * x * p(4) - 20.0 * x.pow(2) -
               18.0 * x.pow(2) * p(2) - 12.0 * x.pow(2) * p(4) - 4.0 * x.pow(2) * p(6) - 8.0 * x.pow(3) -
               8.0 * x.pow(3) * p(2) + 33.0 * x.pow(4) + 24.0 * x.pow(4) * p(2) + 6.0 * x.pow(4) * p(4) +
               4.0 * x.pow(5) - 12.0 * x.pow(6) - 4.0 * x.pow(6) * p(2) + x.pow(8);
    });
    c.push_back({"(3,2,1) concise ZY", 6, "", -1.0, 1.0, [=](cplx) {
                     const ZYPoly X = 0.5 * (Z + Y);
                     return z(4) * y(4) - z(2) * y(2) * (6.0 * X + 1.0) * (2.0 * X - 1.0) +
                            (4.0 * Z * Y + (4.0 * X.pow(2) + 6.0 * X - 1.0)) * (2.0 * X - 1.0).pow(2);
                 }});
    plain("(4,2) short x-form", 6, "", [=](cplx qb) {
        const cplx v = 0.5 * qb;
        return -3.0 * std::pow(v, 3) + 5.0 * v + (7.0 * v * v - 3.0) * x - 5.0 * v * x.pow(2) + x.pow(3);
    });
    plain("(4,2) long x-form", 6, "", [=](cplx qb) {
        const cplx v = 0.5 * qb;
        auto p = [&](int k) { return std::pow(v, k); };
        return 9.0 * p(6) - 57.0 * p(4) + 32.0 * p(2) - 4.0 + (-44.0 * v + 160.0 * p(3) - 42.0 * p(5)) * x +
               (12.0 - 158.0 * p(2) + 79.0 * p(4)) * x.pow(2) + (64.0 * v - 76.0 * p(3)) * x.pow(3) +
               (39.0 * p(2) - 9.0) * x.pow(4) - 10.0 * v * x.pow(5) + x.pow(6);
    });

    // two-row (n-2, 2) factors in Z = x - (n-5) v, Y = x - (n-3) v
    auto two_row = [&](int n, std::function<ZYPoly()> shortf, std::function<ZYPoly()> longf) {
        const double zs = n - 5, ys = n - 3;
        c.push_back({short_label(n), n, "", zs, ys, [shortf](cplx) { return shortf(); }});
        c.push_back({long_label(n), n, "", zs, ys, [longf](cplx) { return longf(); }});
    };
    two_row(4, [] { return ZYPoly(1.0); }, [=] { return Y * Z - 2.0; });
    two_row(5, [=] { return Y * Z - 1.0; }, [=] { return Y * z(2) - (2.0 * Y + 3.0 * Z); });
    two_row(6, [=] { return Y * z(2) - (Y + 2.0 * Z); },
            [=] { return y(2) * z(4) - (5.0 * Y + 4.0 * Z) * Y * z(2) + 2.0 * (5.0 * Y + Z) * Z - 4.0; });
    two_row(7, [=] { return z(4) * y(2) - 3.0 * z(2) * Y * (Y + Z) + Z * (Z + 4.0 * Y) - 1.0; },
            [=] {
                return z(6) * y(2) - (9.0 * Y + 5.0 * Z) * z(4) * Y + z(2) * (Z + 6.0 * Y) * (5.0 * Z + 2.0 * Y) -
                       (5.0 * Z + 2.0 * Y).pow(2);
            });
    two_row(8,
            [=] {
                return z(6) * y(2) - 2.0 * z(4) * Y * (3.0 * Y + 2.0 * Z) + z(2) * (Z + 5.0 * Y) * (3.0 * Z + Y) -
                       (3.0 * Z + Y).pow(2);
            },
            [=] {
                const ZYPoly s = 9.0 * z(2) + 68.0 * Z * Y + 49.0 * y(2);
                return y(3) * z(9) - z(7) * y(2) * (14.0 * Y + 6.0 * Z) + z(5) * Y * s -
                       z(3) * (2.0 * z(3) + 85.0 * z(2) * Y + 168.0 * Z * y(2) + 49.0 * y(3)) + 2.0 * z(2) * s -
                       8.0 * Z * (7.0 * Y + 3.0 * Z) + 8.0;
            });
    two_row(9,
            [=] {
                const ZYPoly s = 8.0 * y(2) + 13.0 * Z * Y + 2.0 * z(2);
                return y(3) * z(9) - 5.0 * y(2) * z(7) * (2.0 * Y + Z) + 3.0 * Y * z(5) * s -
                       z(3) * (16.0 * y(3) + 64.0 * Z * y(2) + 38.0 * z(2) * Y + z(3)) + 3.0 * z(2) * s -
                       5.0 * Z * (2.0 * Y + Z) + 1.0;
            },
            [=] {
                const ZYPoly s = 126.0 * y(2) + 121.0 * Z * Y + 14.0 * z(2), w = 2.0 * Y + 7.0 * Z;
                return y(3) * z(12) - y(2) * z(10) * (20.0 * Y + 7.0 * Z) + Y * z(8) * s -
                       z(6) * (304.0 * y(3) + 620.0 * Z * y(2) + 212.0 * z(2) * Y + 7.0 * z(3)) + z(4) * w * s -
                       z(2) * w.pow(2) * (20.0 * Y + 7.0 * Z) + w.pow(3);
            });
    two_row(10,
            [=] {
                const ZYPoly s = 69.0 * y(2) + 76.0 * Z * Y + 10.0 * z(2), w = Y + 4.0 * Z;
                return z(12) * y(3) - 3.0 * z(10) * y(2) * (5.0 * Y + 2.0 * Z) + z(8) * Y * s -
                       z(6) * (119.0 * y(3) + 278.0 * Z * y(2) + 109.0 * z(2) * Y + 4.0 * z(3)) + z(4) * w * s -
                       3.0 * z(2) * (5.0 * Y + 2.0 * Z) * w.pow(2) + w.pow(3);
            },
            [=] {
                return z(16) * y(4) - z(14) * y(3) * (27.0 * Y + 8.0 * Z) +
                       z(12) * y(2) * (261.0 * y(2) + 194.0 * Z * Y + 20.0 * z(2)) -
                       z(10) * Y * (1143.0 * y(3) + 1632.0 * Z * y(2) + 439.0 * z(2) * Y + 16.0 * z(3)) +
                       z(8) * (2349.0 * y(4) + 5982.0 * Z * y(3) + 3216.0 * z(2) * y(2) + 326.0 * z(3) * Y +
                               2.0 * z(4)) -
                       z(6) * (2187.0 * y(4) + 9720.0 * Z * y(3) + 9812.0 * z(2) * y(2) + 2124.0 * z(3) * Y +
                               40.0 * z(4)) +
                       3.0 * z(4) *
                           (243.0 * y(4) + 2214.0 * Z * y(3) + 4098.0 * z(2) * y(2) + 1816.0 * z(3) * Y +
                            84.0 * z(4)) -
                       2.0 * z(3) * (729.0 * y(3) + 3033.0 * Z * y(2) + 2584.0 * z(2) * Y + 304.0 * z(3)) +
                       36.0 * z(2) * (27.0 * y(2) + 54.0 * Z * Y + 14.0 * z(2)) - 80.0 * Z * (3.0 * Y + 2.0 * Z) +
                       16.0;
            });
    two_row(11,
            [=] {
                return z(16) * y(4) - 7.0 * z(14) * y(3) * (3.0 * Y + Z) +
                       5.0 * z(12) * y(2) * (31.0 * y(2) + 26.0 * Z * Y + 3.0 * z(2)) -
                       z(10) * Y * (510.0 * y(3) + 822.0 * Z * y(2) + 249.0 * z(2) * Y + 10.0 * z(3)) +
                       z(8) * (775.0 * y(4) + 2228.0 * Z * y(3) + 1351.0 * z(2) * y(2) + 153.0 * z(3) * Y + z(4)) -
                       z(6) * (525.0 * y(4) + 2635.0 * Z * y(3) + 3002.0 * z(2) * y(2) + 730.0 * z(3) * Y +
                               15.0 * z(4)) +
                       z(4) * (125.0 * y(4) + 1290.0 * Z * y(3) + 2697.0 * z(2) * y(2) + 1346.0 * z(3) * Y +
                               69.0 * z(4)) -
                       z(3) * (200.0 * y(3) + 941.0 * Z * y(2) + 904.0 * z(2) * Y + 119.0 * z(3)) +
                       3.0 * z(2) * (35.0 * y(2) + 79.0 * Z * Y + 23.0 * z(2)) - 5.0 * Z * (4.0 * Y + 3.0 * Z) + 1.0;
            },
            [=] {
                const ZYPoly w = 2.0 * Y + 9.0 * Z;
                return z(20) * y(4) - z(18) * y(3) * (35.0 * Y + 9.0 * Z) +
                       z(16) * y(2) * (475.0 * y(2) + 290.0 * Z * Y + 27.0 * z(2)) -
                       z(14) * Y * (3230.0 * y(3) + 3558.0 * Z * y(2) + 805.0 * z(2) * Y + 30.0 * z(3)) +
                       z(12) * (11875.0 * y(4) + 21404.0 * Z * y(3) + 8949.0 * z(2) * y(2) + 839.0 * z(3) * Y +
                                9.0 * z(4)) -
                       z(10) * (23883.0 * y(4) + 67717.0 * Z * y(3) + 47590.0 * z(2) * y(2) + 8550.0 * z(3) * Y +
                                243.0 * z(4)) +
                       z(8) * (25365.0 * y(4) + 113066.0 * Z * y(3) + 128825.0 * z(2) * y(2) +
                               40518.0 * z(3) * Y + 2349.0 * z(4)) -
                       z(6) * w * (6650.0 * y(3) + 17345.0 * Z * y(2) + 10194.0 * z(2) * Y + 1143.0 * z(3)) +
                       z(4) * w.pow(2) * (855.0 * y(2) + 1183.0 * Z * Y + 261.0 * z(2)) -
                       z(2) * w.pow(3) * (50.0 * Y + 27.0 * Z) + w.pow(4);
            });
    two_row(12,
            [=] {
                const ZYPoly w = Y + 5.0 * Z;
                return z(20) * y(4) - 4.0 * z(18) * y(3) * (7.0 * Y + 2.0 * Z) +
                       3.0 * z(16) * y(2) * (100.0 * y(2) + 68.0 * Z * Y + 7.0 * z(2)) -
                       z(14) * Y * (1591.0 * y(3) + 1954.0 * Z * y(2) + 491.0 * z(2) * Y + 20.0 * z(3)) +
                       z(12) * (4508.0 * y(4) + 9064.0 * Z * y(3) + 4218.0 * z(2) * y(2) + 436.0 * z(3) * Y +
                                5.0 * z(4)) -
                       z(10) * (6907.0 * y(4) + 21850.0 * Z * y(3) + 17112.0 * z(2) * y(2) + 3406.0 * z(3) * Y +
                                105.0 * z(4)) +
                       z(8) * (5527.0 * y(4) + 27480.0 * Z * y(3) + 34909.0 * z(2) * y(2) + 12200.0 * z(3) * Y +
                               775.0 * z(4)) -
                       2.0 * z(6) * w * (1082.0 * y(3) + 3150.0 * Z * y(2) + 2061.0 * z(2) * Y + 255.0 * z(3)) +
                       z(4) * w.pow(2) * (411.0 * y(2) + 634.0 * Z * Y + 155.0 * z(2)) -
                       7.0 * z(2) * (5.0 * Y + 3.0 * Z) * w.pow(3) + w.pow(4);
            },
            [=] {
                return z(25) * y(5) - 2.0 * z(23) * y(4) * (22.0 * Y + 5.0 * Z) +
                       z(21) * y(3) * (792.0 * y(2) + 412.0 * Z * Y + 35.0 * z(2)) -
                       z(19) * y(2) * (7623.0 * y(3) + 6866.0 * Z * y(2) + 1355.0 * z(2) * Y + 50.0 * z(3)) +
                       z(17) * Y *
                           (43076.0 * y(4) + 60390.0 * Z * y(3) + 20954.0 * z(2) * y(2) + 1834.0 * z(3) * Y +
                            25.0 * z(4)) -
                       z(15) * (147983.0 * y(5) + 307010.0 * Z * y(4) + 168558.0 * z(2) * y(3) +
                                26510.0 * z(3) * y(2) + 883.0 * z(4) * Y + 2.0 * z(5)) +
                       z(13) * (310123.0 * y(5) + 930974.0 * Z * y(4) + 770091.0 * z(2) * y(3) +
                                196172.0 * z(3) * y(2) + 12139.0 * z(4) * Y + 70.0 * z(5)) -
                       2.0 * z(11) *
                           (194326.0 * y(5) + 840587.0 * Z * y(4) + 1026993.0 * z(2) * y(3) +
                            404211.0 * z(3) * y(2) + 42041.0 * z(4) * Y + 475.0 * z(5)) +
                       z(9) * (278179.0 * y(5) + 1759824.0 * Z * y(4) + 3173478.0 * z(2) * y(3) +
                               1898244.0 * z(3) * y(2) + 317599.0 * z(4) * Y + 6460.0 * z(5)) -
                       z(7) * (102487.0 * y(5) + 1011560.0 * Z * y(4) + 2742586.0 * z(2) * y(3) +
                               2500438.0 * z(3) * y(2) + 665275.0 * z(4) * Y + 23750.0 * z(5)) +
                       z(5) * (14641.0 * y(5) + 284834.0 * Z * y(4) + 1251866.0 * z(2) * y(3) +
                               1769240.0 * z(3) * y(2) + 753437.0 * z(4) * Y + 47766.0 * z(5)) -
                       2.0 * z(4) *
                           (14641.0 * y(4) + 135520.0 * Z * y(3) + 320474.0 * z(2) * y(2) + 219128.0 * z(3) * Y +
                            25365.0 * z(4)) +
                       8.0 * z(3) * (2662.0 * y(3) + 13673.0 * Z * y(2) + 16106.0 * z(2) * Y + 3325.0 * z(3)) -
                       8.0 * z(2) * (847.0 * y(2) + 2222.0 * Z * Y + 855.0 * z(2)) +
                       80.0 * Z * (11.0 * Y + 10.0 * Z) - 32.0;
            });
    two_row(13,
            [=] {
                return y(5) * z(25) - 9.0 * y(4) * (4.0 * Y + Z) * z(23) +
                       7.0 * y(3) * (75.0 * y(2) + 43.0 * Z * Y + 4.0 * z(2)) * z(21) -
                       y(2) * (4056.0 * y(3) + 4031.0 * Z * y(2) + 874.0 * z(2) * Y + 35.0 * z(3)) * z(19) +
                       Y * (18231.0 * y(4) + 28222.0 * Z * y(3) + 10781.0 * z(2) * y(2) + 1030.0 * z(3) * Y +
                            15.0 * z(4)) *
                           z(17) -
                       (49380.0 * y(5) + 113163.0 * Z * y(4) + 68496.0 * z(2) * y(3) + 11805.0 * z(3) * y(2) +
                        424.0 * z(4) * Y + z(5)) *
                           z(15) +
                       (80891.0 * y(5) + 268257.0 * Z * y(4) + 244835.0 * z(2) * y(3) + 68531.0 * z(3) * y(2) +
                        4605.0 * z(4) * Y + 28.0 * z(5)) *
                           z(13) -
                       (78576.0 * y(5) + 375429.0 * Z * y(4) + 506270.0 * z(2) * y(3) + 219334.0 * z(3) * y(2) +
                        24905.0 * z(4) * Y + 300.0 * z(5)) *
                           z(11) +
                       (43200.0 * y(5) + 301984.0 * Z * y(4) + 601090.0 * z(2) * y(3) + 396150.0 * z(3) * y(2) +
                        72634.0 * z(4) * Y + 1591.0 * z(5)) *
                           z(9) -
                       2.0 *
                           (6048.0 * y(5) + 66096.0 * Z * y(4) + 197920.0 * z(2) * y(3) + 198881.0 * z(3) * y(2) +
                            58122.0 * z(4) * Y + 2254.0 * z(5)) *
                           z(7) +
                       (1296.0 * y(5) + 28080.0 * Z * y(4) + 136554.0 * z(2) * y(3) + 212848.0 * z(3) * y(2) +
                        99644.0 * z(4) * Y + 6907.0 * z(5)) *
                           z(5) -
                       (2160.0 * y(4) + 22176.0 * Z * y(3) + 57906.0 * z(2) * y(2) + 43570.0 * z(3) * Y +
                        5527.0 * z(4)) *
                           z(4) +
                       (1296.0 * y(3) + 7360.0 * Z * y(2) + 9551.0 * z(2) * Y + 2164.0 * z(3)) * z(3) -
                       3.0 * (112.0 * y(2) + 324.0 * Z * Y + 137.0 * z(2)) * z(2) + 35.0 * (Y + Z) * Z - 1.0;
            },
            [=] {
                const ZYPoly w = 2.0 * Y + 11.0 * Z;
                return y(5) * z(30) - y(4) * (54.0 * Y + 11.0 * Z) * z(28) +
                       y(3) * (1239.0 * y(2) + 563.0 * Z * Y + 44.0 * z(2)) * z(26) -
                       y(2) * (15894.0 * y(3) + 12153.0 * Z * y(2) + 2140.0 * z(2) * Y + 77.0 * z(3)) * z(24) +
                       Y *
                           (126279.0 * y(4) + 145446.0 * Z * y(3) + 43545.0 * z(2) * y(2) + 3578.0 * z(3) * Y +
                            55.0 * z(4)) *
                           z(22) -
                       (650946.0 * y(5) + 1067749.0 * Z * y(4) + 486798.0 * z(2) * y(3) + 68967.0 * z(3) * y(2) +
                        2466.0 * z(4) * Y + 11.0 * z(5)) *
                           z(20) +
                       (2219569.0 * y(5) + 5028863.0 * Z * y(4) + 3303181.0 * z(2) * y(3) +
                        723221.0 * z(3) * y(2) + 45485.0 * z(4) * Y + 484.0 * z(5)) *
                           z(18) -
                       (5017266.0 * y(5) + 15459111.0 * Z * y(4) + 14203130.0 * z(2) * y(3) +
                        4550870.0 * z(3) * y(2) + 451913.0 * z(4) * Y + 8712.0 * z(5)) *
                           z(16) +
                       (7433784.0 * y(5) + 30999936.0 * Z * y(4) + 39276278.0 * z(2) * y(3) +
                        17901642.0 * z(3) * y(2) + 2662000.0 * z(4) * Y + 83853.0 * z(5)) *
                           z(14) -
                       2.0 *
                           (3523048.0 * y(5) + 19967988.0 * Z * y(4) + 34790550.0 * z(2) * y(3) +
                            22275099.0 * z(3) * y(2) + 4830078.0 * z(4) * Y + 236918.0 * z(5)) *
                           z(12) +
                       (4121784.0 * y(5) + 32057560.0 * Z * y(4) + 77399690.0 * z(2) * y(3) +
                        69595592.0 * z(3) * y(2) + 21779274.0 * z(4) * Y + 1627813.0 * z(5)) *
                           z(10) -
                       w *
                           (715128.0 * y(4) + 3714176.0 * Z * y(3) + 5556166.0 * z(2) * y(2) +
                            2682086.0 * z(3) * Y + 310123.0 * z(4)) *
                           z(8) +
                       w.pow(2) * (71532.0 * y(3) + 233700.0 * Z * y(2) + 191279.0 * z(2) * Y + 35332.0 * z(3)) *
                           z(6) -
                       w.pow(3) * (3924.0 * y(2) + 7128.0 * Z * Y + 2299.0 * z(2)) * z(4) +
                       7.0 * w.pow(4) * (15.0 * Y + 11.0 * Z) * z(2) - w.pow(5);
            });
    return c;
}

}  // namespace

const std::vector<PaperFactor>& paper_catalog()
{
    static const std::vector<PaperFactor> catalog = make_catalog();
    return catalog;
}

const PaperFactor& paper_factor(const std::string& label)
{
    for (const auto& f : paper_catalog())
        if (f.label == label) return f;
    throw std::invalid_argument("unknown factor label: " + label);
}

cplx paper_factor_eval(const std::string& label, cplx q, cplx x) { return paper_factor(label).eval(q, x).value; }

std::vector<const PaperFactor*> identity_factors(int n)
{
    std::vector<const PaperFactor*> out;
    for (const auto& f : paper_catalog())
        if (f.n == n && !f.diagram.empty()) out.push_back(&f);
    if (out.empty()) throw std::invalid_argument("no printed characteristic identity for this n");
    return out;
}

FactorValue identity_eval(int n, cplx q, cplx x)
{
    FactorValue r{1.0, 1.0};
    for (const PaperFactor* f : identity_factors(n)) {
        const FactorValue v = f->eval(q, x);
        r.value *= v.value;
        r.scale *= v.scale;
    }
    return r;
}

// ---------------------------------------------------------------- two-row conjecture

int p_degree(int n) { return ((n % 2 ? -6 : 0) - 4 * n + 2 * n * n) / 8; }
int k_index(int n) { return n / 2 - 1; }
int k_bar_index(int n) { return ((n % 2 ? -1 : 1) + 7 - 8 * n + 2 * n * n) / 8; }
int two_row_short_degree(int n) { return p_degree(n - 1); }
int two_row_long_degree(int n) { return p_degree(n); }
std::string short_label(int n) { return "(" + std::to_string(n - 2) + ",2) short"; }
std::string long_label(int n) { return "(" + std::to_string(n - 2) + ",2) long"; }

namespace {

double poly_gap(const ZYPoly& a, const ZYPoly& b)
{
    const ZYPoly d = a - b;
    double m = 0.0;
    for (const auto& kv : d.terms()) m = std::max(m, std::abs(kv.second));
    return m;
}

struct SeriesTerm {
    const char* name;
    int dz, dy;  // Z^{-dz} Y^{-dy} relative to the leading monomial
    double coeff;
};

// leading series coefficients and the lowest-degree closing term of a printed factor
void structure_rows(Report& r, const std::string& name, const ZYPoly& p, int kbar, int k,
                    const std::vector<SeriesTerm>& series, const ZYPoly& closing)
{
    r.add(name + " leading", std::abs(p.coeff(kbar, k) - 1.0));
    // series monomials at or below the closing degree mix with the closing term
    const int floor_degree = closing.total_degree();
    for (const auto& t : series)
        if (kbar >= t.dz && k >= t.dy && kbar + k - t.dz - t.dy > floor_degree) r.add(name + " " + t.name, std::abs(p.coeff(kbar - t.dz, k - t.dy) - t.coeff));
    r.add(name + " closing term", poly_gap(p.lowest_part(), closing));
}

}  // namespace

TwoRowReport verify_conjecture_two_row(int n, cplx q)
{
    if (n < 4 || n > 13) throw std::invalid_argument("two-row catalog covers 4 <= n <= 13");
    TwoRowReport r;
    r.n = n;
    r.q = q;
    const PaperFactor& sf = paper_factor(short_label(n));
    const PaperFactor& lf = paper_factor(long_label(n));
    const IrrepMatrices ir = build_irrep({{n - 2, 2}}, q);
    r.dim = ir.dim();
    r.short_degree = sf.degree();
    r.long_degree = lf.degree();
    r.degrees_ok = r.short_degree == p_degree(n - 1) && r.long_degree == p_degree(n) &&
                   p_degree(n - 1) + p_degree(n) == n * (n - 3) / 2 && r.dim == n * (n - 3) / 2;

    const auto eigs = charpoly_eigs(ir);
    for (cplx x : eigs) {
        const FactorValue a = sf.eval(q, x), b = lf.eval(q, x);
        r.eigen_residual = std::max(r.eigen_residual, std::abs(a.value * b.value) / std::max(1.0, a.scale * b.scale));
        if (a.relative() < b.relative()) ++r.short_roots;
    }

    // det(z - H) against the printed product away from the spectrum
    cplx center = 0.0;
    for (cplx e : eigs) center += e;
    center /= double(eigs.size());
    double radius = 1.0;
    for (cplx e : eigs) radius = std::max(radius, 1.5 * std::abs(e - center));
    const cplx lead = sf.poly(q).leading() * lf.poly(q).leading();
    for (int k = 0; k < 8; ++k) {
        const cplx zpt = center + std::polar(radius, 2 * M_PI * (k + 0.25) / 8);
        cplx det = 1.0;
        for (cplx e : eigs) det *= zpt - e;
        const cplx printed = sf.eval(q, zpt).value * lf.eval(q, zpt).value / lead;
        r.charpoly_residual = std::max(r.charpoly_residual, std::abs(det - printed) / std::abs(det));
    }

    const ZYPoly Z = ZYPoly::Z(), Y = ZYPoly::Y();
    const int ks = k_index(n - 1), kl = k_index(n);
    const ZYPoly short_close = n % 2 == 0 ? (((n - 2) / 4) % 2 ? -1.0 : 1.0) * ((n / 2.0 - 1) * Z + Y).pow(ks)
                                          : ZYPoly(((n - 1) / 4) % 2 ? -1.0 : 1.0);
    const ZYPoly long_close = n % 2 ? ZYPoly(((n - 1) / 4) % 2 ? -1.0 : 1.0) * ((n - 2.0) * Z + 2.0 * Y).pow(kl)
                                    : ZYPoly(((n / 4) % 2 ? -1.0 : 1.0) * std::pow(2.0, kl));
    const double m = n;
    const std::vector<SeriesTerm> short_series = {
        {"Z^-1 Y^-1", 1, 1, -(m - 4)},
        {"Z^-2", 2, 0, -(m - 4) * (m - 5) / 2},
        {"Z^-2 Y^-2", 2, 2, (m - 5) * (m - 6) / 2},
        {"Z^-3 Y^-1", 3, 1, (m - 6) * (m * m - 7 * m + 8) / 2},
        {"Z^-4", 4, 0, (m - 6) * (m - 7) * (m * m - 5 * m - 4) / 8},
        {"Z^-3 Y^-3", 3, 3, -(m - 6) * (m - 7) * (m - 8) / 6},
        {"Z^-4 Y^-2", 4, 2, -(std::pow(m, 4) - 20 * std::pow(m, 3) + 137 * m * m - 338 * m + 116) / 4},
    };
    const std::vector<SeriesTerm> long_series = {
        {"Z^-1 Y^-1", 1, 1, -(m - 2)},
        {"Z^-2", 2, 0, -(m - 1) * (m - 4) / 2},
        {"Z^-2 Y^-2", 2, 2, (m - 2) * (m - 5) / 2},
        {"Z^-3 Y^-1", 3, 1, (m - 4) * (m - 5) * (m + 9) / 3 + (m - 6) * (m - 7) * (m - 8) / 6},
        {"Z^-4", 4, 0, (m - 6) * (m - 1) * (m * m - 3 * m - 12) / 8},
        {"Z^-3 Y^-3", 3, 3, -(m - 2) * (m - 6) * (m - 7) / 6},
        {"Z^-4 Y^-2", 4, 2, -(std::pow(m, 4) - 12 * std::pow(m, 3) + 37 * m * m + 18 * m - 124) / 4},
        {"Z^-5 Y^-1", 5, 1,
         -(std::pow(m, 5) - 12 * std::pow(m, 4) + 23 * std::pow(m, 3) + 128 * m * m - 252 * m - 224) / 8},
    };
    structure_rows(r.structure, "short", sf.poly(q), k_bar_index(n - 1), ks, short_series, short_close);
    structure_rows(r.structure, "long", lf.poly(q), k_bar_index(n), kl, long_series, long_close);
    return r;
}

std::vector<IdentityRow> verify_characteristic_identity(int n, cplx q, double tol)
{
    std::vector<IdentityRow> out;
    for (const auto& d : diagrams_of_size(n)) {
        IdentityRow row;
        row.diagram = d;
        row.eigenvalues = charpoly_eigs(d, q);
        const PaperFactor& own = paper_factor(d.label());
        for (cplx x : row.eigenvalues) {
            row.identity_residual = std::max(row.identity_residual, identity_eval(n, q, x).relative());
            if (own.eval(q, x).relative() > tol) ++row.own_factor_misses;
        }
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace spinlab
