#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace spinlab {

using cplx = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;
using VecX = Eigen::VectorXcd;

inline constexpr int max_sites = 16;

// Amplitudes over the 2^L computational basis. Site k (1-based) is bit L-k,
// bit value 0 = spin up |0>, 1 = spin down.
struct State {
    int L = 0;
    std::vector<cplx> amp;

    State() = default;
    explicit State(int sites);

    std::size_t dim() const { return amp.size(); }
    cplx& operator[](std::size_t i) { return amp[i]; }
    const cplx& operator[](std::size_t i) const { return amp[i]; }

    State& operator+=(const State& o);
    State& operator-=(const State& o);
    State& operator*=(cplx s);
};

State operator+(State a, const State& b);
State operator-(State a, const State& b);
State operator*(cplx s, State a);

void check_length(int L);
State vacuum(int L);
State basis_state(int L, std::uint64_t index);
State random_state(int L, std::mt19937_64& rng);

inline std::uint64_t site_bit(int L, int k) { return std::uint64_t{1} << (L - k); }
int popcount(std::uint64_t b);
// basis index with down spins exactly on the listed sites
std::uint64_t sites_to_index(int L, const std::vector<int>& sites);
std::vector<int> index_to_sites(int L, std::uint64_t index);

// Two-site matrices use the first tensor factor for the first listed site.
struct LocalOp {
    std::vector<int> sites;
    MatX m;
};

State apply_local(const LocalOp& op, const State& v);
State apply_site(const Mat2& m, int k, const State& v);
State apply_pair(const Mat4& m, int k1, int k2, const State& v);

enum class Mode { annihilate, create };

struct FermionMode {
    int site;
    Mode kind;
};

// Action on a single basis index: sign and image, or nothing when annihilated.
std::optional<std::pair<int, std::uint64_t>> fermion_on_index(Mode kind, int k, int L,
                                                               std::uint64_t index);
State apply_fermion(const FermionMode& mode, const State& v);
State psi(int k, const State& v);     // annihilator
State psibar(int k, const State& v);  // creator
State occupation(int k, const State& v);

cplx inner(const State& u, const State& v);
double norm(const State& v);
double collinearity(const State& u, const State& v);
double max_abs(const State& v);
double max_abs_diff(const State& u, const State& v);

using Operator = std::function<State(const State&)>;
MatX dense(int L, const Operator& op);
VecX to_eigen(const State& v);
State from_eigen(int L, const VecX& v);

namespace pauli {
Mat2 id();
Mat2 x();
Mat2 y();
Mat2 z();
Mat2 lower();  // sigma^- : up -> down
Mat2 raise();  // sigma^+ : down -> up
}  // namespace pauli

Mat4 kron(const Mat2& a, const Mat2& b);
Mat4 permutation();

struct Residual {
    std::string name;
    double value;
};

struct Report {
    std::vector<Residual> rows;
    double worst() const;
    void add(std::string name, double value) { rows.push_back({std::move(name), value}); }
};

// swap_in_commutator exchanges psi and psibar in the [psi_k, psibar_k] check
// (the identity must then fail; used to test the test).
Report verify_fermion_identities(int L, std::uint64_t seed, bool swap_in_commutator = false);

}  // namespace spinlab
