#include "spinlab/polaron.hpp"

#include <algorithm>
#include <stdexcept>

#include "spinlab/lax.hpp"

namespace spinlab {

std::string to_string(ChainModel m)
{
    return m == ChainModel::polaron ? "polaron" : "xxz";
}

ChainModel chain_model_from_string(const std::string& s)
{
    if (s == "polaron") return ChainModel::polaron;
    if (s == "xxz" || s == "xxz-closed") return ChainModel::xxz_closed;
    throw std::invalid_argument("unknown chain model: " + s);
}

State polaron_hamiltonian_apply(int L, cplx q, const State& v)
{
    if (v.L != L) throw std::invalid_argument("state length does not match the chain");
    if (q == 0.0) throw std::domain_error("q = 0");
    const cplx qbar = q + 1.0 / q;
    State out(L);
    for (int k = 1; k <= L; ++k) {
        const int n = k == L ? 1 : k + 1;
        out += psibar(n, psi(k, v));
        out += psibar(k, psi(n, v));
        out += qbar * occupation(k, occupation(n, v));
        out -= qbar * occupation(k, v);
    }
    return out;
}

State xxz_closed_apply(int L, cplx q, const State& v)
{
    if (v.L != L) throw std::invalid_argument("state length does not match the chain");
    if (q == 0.0) throw std::domain_error("q = 0");
    const Mat4 r = rhat_q(q);
    State out(L);
    for (int k = 1; k <= L; ++k) out += apply_pair(r, k, k == L ? 1 : k + 1, v);
    out -= (q * double(L)) * v;
    return out;
}

State chain_apply(ChainModel m, int L, cplx q, const State& v)
{
    return m == ChainModel::polaron ? polaron_hamiltonian_apply(L, q, v) : xxz_closed_apply(L, q, v);
}

std::vector<std::uint64_t> sector_basis(int L, int M)
{
    check_length(L);
    if (M < 0 || M > L) throw std::invalid_argument("magnon number out of range");
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << L); ++i)
        if (popcount(i) == M) out.push_back(i);
    return out;
}

MatX sector_block(ChainModel m, int L, cplx q, int M)
{
    const auto basis = sector_basis(L, M);
    if (basis.size() > max_sector_dim) throw std::invalid_argument("sector too large");
    const auto n = static_cast<Eigen::Index>(basis.size());
    MatX H(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const State w = chain_apply(m, L, q, basis_state(L, basis[c]));
        for (Eigen::Index r = 0; r < n; ++r) H(r, c) = w[basis[r]];
    }
    return H;
}

SectorSpectrum sector_spectrum(ChainModel m, int L, cplx q, int M)
{
    SectorSpectrum s{m, L, M, q, {}};
    const MatX H = sector_block(m, L, q, M);
    if (q.imag() == 0.0) {
        Eigen::SelfAdjointEigenSolver<MatX> es(H, Eigen::EigenvaluesOnly);
        for (double e : es.eigenvalues()) s.eigenvalues.emplace_back(e, 0.0);
    } else {
        Eigen::ComplexEigenSolver<MatX> es(H, false);
        for (cplx e : es.eigenvalues()) s.eigenvalues.push_back(e);
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return s;
}

MultisetDiff multiset_difference(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol)
{
    MultisetDiff d;
    std::vector<bool> used(b.size(), false);
    for (cplx x : a) {
        std::size_t best = b.size();
        double gap = tol;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!used[j] && std::abs(x - b[j]) <= gap) {
                gap = std::abs(x - b[j]);
                best = j;
            }
        if (best == b.size())
            d.only_a.push_back(x);
        else
            used[best] = true;
    }
    for (std::size_t j = 0; j < b.size(); ++j)
        if (!used[j]) d.only_b.push_back(b[j]);
    return d;
}

bool ComparisonReport::odd_sectors_equal() const
{
    return std::all_of(sectors.begin(), sectors.end(),
                       [](const SectorComparison& s) { return s.M % 2 == 0 || s.equal; });
}

ComparisonReport compare_models(int L, cplx q, double tol)
{
    if (L > 12) throw std::invalid_argument("comparison limited to L <= 12");
    ComparisonReport r{L, q, tol, {}};
    for (int M = 0; M <= L; ++M) {
        SectorComparison s;
        s.M = M;
        s.polaron = sector_spectrum(ChainModel::polaron, L, q, M).eigenvalues;
        s.xxz = sector_spectrum(ChainModel::xxz_closed, L, q, M).eigenvalues;
        s.diff = multiset_difference(s.polaron, s.xxz, tol);
        s.equal = s.diff.equal();
        r.sectors.push_back(std::move(s));
    }
    return r;
}

}  // namespace spinlab
