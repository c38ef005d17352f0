#include "doctest.h"

#include "oracle.hpp"
#include "spinlab/hilbert.hpp"

using namespace spinlab;

TEST_CASE("identity on a site leaves the state alone")
{
    std::mt19937_64 rng(3);
    const State v = random_state(5, rng);
    for (int k = 1; k <= 5; ++k) CHECK(max_abs_diff(apply_site(Mat2::Identity(), k, v), v) == 0.0);
}

TEST_CASE("permutation swaps the two factors")
{
    const int L = 4;
    const State down_up = basis_state(L, sites_to_index(L, {1}));
    const State r = apply_pair(permutation(), 1, 2, down_up);
    CHECK(std::abs(r[sites_to_index(L, {2})] - 1.0) < 1e-15);
    CHECK(norm(r) == doctest::Approx(1.0));

    std::mt19937_64 rng(11);
    const State v = random_state(L, rng);
    for (int k = 1; k < L; ++k)
        CHECK(max_abs_diff(apply_pair(permutation(), k, k + 1, apply_pair(permutation(), k, k + 1, v)), v) <
              1e-14);
    CHECK(oracle::max_entry(MatX(permutation() * permutation()) - MatX::Identity(4, 4)) < 1e-15);
}

TEST_CASE("two-site action matches the Pauli-decomposition oracle, wrap pair included")
{
    const int L = 4;
    std::mt19937_64 rng(5);
    Mat4 m = Mat4::Random();
    for (auto [k1, k2] : std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}, {4, 1}}) {
        const MatX got = dense(L, [&](const State& v) { return apply_pair(m, k1, k2, v); });
        CHECK(oracle::max_entry(got - oracle::pair(L, m, k1, k2)) < 1e-13);
    }
    for (int k = 1; k <= L; ++k) {
        const MatX got = dense(L, [&](const State& v) { return apply_site(pauli::y(), k, v); });
        CHECK(oracle::max_entry(got - oracle::site(L, pauli::y(), k)) < 1e-15);
    }
}

TEST_CASE("apply_local is linear and checks its input")
{
    const int L = 5;
    std::mt19937_64 rng(17);
    const State u = random_state(L, rng), v = random_state(L, rng);
    const cplx al(0.3, -1.2), be(-0.7, 0.4);
    const LocalOp op{{2, 3}, MatX(Mat4::Random())};
    const State lhs = apply_local(op, al * u + be * v);
    const State rhs = al * apply_local(op, u) + be * apply_local(op, v);
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);

    CHECK_THROWS_AS(apply_local({{6}, MatX(Mat2::Identity())}, u), std::invalid_argument);
    CHECK_THROWS_AS(apply_local({{0}, MatX(Mat2::Identity())}, u), std::invalid_argument);
    CHECK_THROWS_AS(apply_local({{1, 2}, MatX(Mat2::Identity())}, u), std::invalid_argument);
    CHECK_THROWS_AS(apply_local({{1}, MatX(Mat4::Identity())}, u), std::invalid_argument);
    CHECK_THROWS_AS(apply_local({{1, 3}, MatX(Mat4::Identity())}, u), std::invalid_argument);
}

TEST_CASE("fermion modes on the vacuum")
{
    const int L = 4;
    const State vac = vacuum(L);
    const State one = psibar(1, vac);
    CHECK(std::abs(one[sites_to_index(L, {1})] - 1.0) < 1e-15);
    CHECK(norm(one) == doctest::Approx(1.0));
    for (int k = 1; k <= L; ++k) CHECK(max_abs(psi(k, vac)) == 0.0);
    const State anti = psibar(2, psibar(1, vac)) + psibar(1, psibar(2, vac));
    CHECK(max_abs(anti) == 0.0);
    CHECK_THROWS_AS(psi(5, vac), std::invalid_argument);
    CHECK_THROWS_AS(psibar(0, vac), std::invalid_argument);
}

TEST_CASE("ordered creators give +1 on the vacuum")
{
    const int L = 6;
    State v = vacuum(L);
    for (int k : {5, 3, 2}) v = psibar(k, v);  // psibar_2 psibar_3 psibar_5 |0>
    CHECK(std::abs(v[sites_to_index(L, {2, 3, 5})] - 1.0) < 1e-15);
}

TEST_CASE("mode matrices agree with explicit sigma^z strings")
{
    for (int L : {2, 3, 5}) {
        for (int k = 1; k <= L; ++k) {
            const MatX c = dense(L, [k](const State& v) { return psibar(k, v); });
            const MatX a = dense(L, [k](const State& v) { return psi(k, v); });
            CHECK(oracle::max_entry(c - oracle::jw(L, k, true)) == 0.0);
            CHECK(oracle::max_entry(a - oracle::jw(L, k, false)) == 0.0);
        }
    }
}

TEST_CASE("nilpotency and anticommutators on every basis state")
{
    for (int L = 2; L <= 6; ++L) {
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << L); ++b) {
            const State e = basis_state(L, b);
            for (int i = 1; i <= L; ++i) {
                CHECK(max_abs(psi(i, psi(i, e))) == 0.0);
                CHECK(max_abs(psibar(i, psibar(i, e))) == 0.0);
                for (int j = 1; j <= L; ++j) {
                    State cross = psibar(i, psi(j, e)) + psi(j, psibar(i, e));
                    if (i == j) cross -= e;
                    CHECK(max_abs(cross) == 0.0);
                    CHECK(max_abs(psi(i, psi(j, e)) + psi(j, psi(i, e))) == 0.0);
                    CHECK(max_abs(psibar(i, psibar(j, e)) + psibar(j, psibar(i, e))) == 0.0);
                }
            }
        }
    }
}

TEST_CASE("identity suite")
{
    const Report r2 = verify_fermion_identities(2, 1);
    for (const auto& row : r2.rows) CHECK_MESSAGE(row.value < 1e-13, row.name);
    const Report r6 = verify_fermion_identities(6, 42);
    for (const auto& row : r6.rows) CHECK_MESSAGE(row.value < 1e-12, row.name);
    CHECK(r6.rows.size() == 8);

    const Report broken = verify_fermion_identities(2, 1, true);
    double comm = 0;
    for (const auto& row : broken.rows)
        if (row.name == "commutator_is_z") comm = row.value;
    CHECK(comm > 0.5);
    CHECK_THROWS_AS(verify_fermion_identities(9, 1), std::invalid_argument);
}

TEST_CASE("inner product and collinearity")
{
    const int L = 3;
    CHECK(inner(basis_state(L, 0), basis_state(L, 0)) == cplx(1.0));
    CHECK(collinearity(basis_state(L, 0), basis_state(L, 1)) == 0.0);
    std::mt19937_64 rng(9);
    const State v = random_state(L, rng);
    CHECK(collinearity(v, cplx(-2.3, 0.7) * v) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(collinearity(State(L), v) == 0.0);
    CHECK_THROWS_AS(inner(vacuum(2), vacuum(3)), std::invalid_argument);
}
