#pragma once

#include <string>
#include <vector>

#include "spinlab/hilbert.hpp"

namespace spinlab {

enum class ChainModel { polaron, xxz_closed };
std::string to_string(ChainModel m);
ChainModel chain_model_from_string(const std::string& s);

// hopping and density terms over the closed fermionic chain, minus (q + 1/q) N
State polaron_hamiltonian_apply(int L, cplx q, const State& v);
// closed Hecke chain with a spin-local wrap term, minus qL
State xxz_closed_apply(int L, cplx q, const State& v);
State chain_apply(ChainModel m, int L, cplx q, const State& v);

inline constexpr std::size_t max_sector_dim = 4096;

std::vector<std::uint64_t> sector_basis(int L, int M);  // increasing basis indices
MatX sector_block(ChainModel m, int L, cplx q, int M);

struct SectorSpectrum {
    ChainModel model = ChainModel::polaron;
    int L = 0, M = 0;
    cplx q = 1.0;
    std::vector<cplx> eigenvalues;  // sorted by (re, im)
};
SectorSpectrum sector_spectrum(ChainModel m, int L, cplx q, int M);

struct MultisetDiff {
    std::vector<cplx> only_a, only_b;
    bool equal() const { return only_a.empty() && only_b.empty(); }
};
MultisetDiff multiset_difference(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol);

struct SectorComparison {
    int M = 0;
    bool equal = false;
    std::vector<cplx> polaron, xxz;
    MultisetDiff diff;
};

struct ComparisonReport {
    int L = 0;
    cplx q = 1.0;
    double tol = 1e-9;
    std::vector<SectorComparison> sectors;
    bool odd_sectors_equal() const;
};
ComparisonReport compare_models(int L, cplx q, double tol = 1e-9);

}  // namespace spinlab
