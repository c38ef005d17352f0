#include "doctest.h"

#include <random>

#include "oracle.hpp"
#include "spinlab/lax.hpp"

using namespace spinlab;

namespace {

cplx random_point(std::mt19937_64& rng)
{
    // off the negative real axis, modulus in [0.5, 2]
    std::uniform_real_distribution<double> r(0.5, 2.0), a(-2.5, 2.5);
    return std::polar(r(rng), a(rng));
}

// right half-plane, so products of two points stay off the square-root cut
cplx right_point(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> r(0.5, 2.0), a(-1.5, 1.5);
    return std::polar(r(rng), a(rng));
}

Mat4 printed_twisted(cplx lam, cplx q)
{
    const cplx s = std::sqrt(lam), qq = q - 1.0 / q;
    Mat4 m = Mat4::Zero();
    m(0, 0) = m(3, 3) = q / s - s / q;
    m(1, 1) = m(2, 2) = 1.0 / s - s;
    m(1, 2) = m(2, 1) = qq;
    return m;
}

// T = L_{a,1} ... L_{a,L} on aux (x) chain, aux as an extra leading site
MatX kron_monodromy(const Model& m, cplx lam)
{
    const int n = m.L + 1;
    MatX T = MatX::Identity(MatX::Index(1) << n, MatX::Index(1) << n);
    for (int k = 1; k <= m.L; ++k) T = T * oracle::pair(n, lax(m, m.site_arg(lam, k)), 1, k + 1);
    return T;
}

// coefficient matrices of a degree-deg matrix polynomial from exact interpolation
std::vector<MatX> fit_poly(const std::function<MatX(cplx)>& f, int deg)
{
    const int n = deg + 1;
    MatX V(n, n);
    std::vector<MatX> vals;
    for (int j = 0; j < n; ++j) {
        const cplx x = std::polar(1.0, 2.0 * M_PI * j / n);  // roots of unity keep V well conditioned
        for (int k = 0; k < n; ++k) V(j, k) = std::pow(x, k);
        vals.push_back(f(x));
    }
    const MatX Vi = V.inverse();
    std::vector<MatX> c(n, MatX::Zero(vals[0].rows(), vals[0].cols()));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[k] += Vi(k, j) * vals[j];
    return c;
}

}  // namespace

TEST_CASE("XXX R-matrix values")
{
    CHECK(oracle::max_entry(MatX(r_xxx(0.0) - permutation())) == 0.0);
    Mat4 want;
    want << 2, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 2;
    CHECK(oracle::max_entry(MatX(r_xxx(1.0) - want)) == 0.0);
}

TEST_CASE("Hecke R-hat")
{
    CHECK(oracle::max_entry(MatX(rhat_q(1.0) - permutation())) < 1e-15);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        const cplx q = random_point(rng);
        const Mat4 r = rhat_q(q);
        const Mat4 hecke = r * r - (q - 1.0 / q) * r - Mat4::Identity();
        CHECK(oracle::max_entry(MatX(hecke)) < 1e-13);
        CHECK(oracle::max_entry(MatX(rhat_q_pauli(q) - r)) < 1e-14);
    }
    CHECK(oracle::max_entry(MatX(rhat_q_pauli(1.0) - permutation())) < 1e-15);
    const auto ev = oracle::sorted_eigs(MatX(rhat_q(1.3)));
    const std::vector<cplx> want = {-1.0 / 1.3, 1.3, 1.3, 1.3};
    CHECK(oracle::multiset_gap(ev, want) < 1e-12);
}

TEST_CASE("twisted XXZ matrix matches the symmetric closed form")
{
    std::mt19937_64 rng(8);
    for (int t = 0; t < 20; ++t) {
        const cplx lam = random_point(rng), q = random_point(rng);
        CHECK(oracle::max_entry(MatX(r_xxz_twisted(lam, q) - printed_twisted(lam, q))) < 1e-13);
    }
    const cplx q = 1.3;
    const Mat4 at1 = r_xxz_twisted(1.0, q);
    CHECK(std::abs(at1(1, 1)) < 1e-15);
    CHECK(std::abs(at1(1, 2) - (q - 1.0 / q)) < 1e-15);
    CHECK(std::abs(at1(0, 0) - (q - 1.0 / q)) < 1e-15);
    const Mat4 atq2 = r_xxz_twisted(q * q, q);
    const cplx det = atq2(1, 1) * atq2(2, 2) - atq2(1, 2) * atq2(2, 1);
    CHECK(std::abs(det) < 1e-13);
    CHECK_THROWS_AS(r_xxz_twisted(0.0, q), std::domain_error);
}

TEST_CASE("Yang-Baxter equation in both forms")
{
    std::mt19937_64 rng(21);
    const Model xxx = Model::xxx(3);
    for (int t = 0; t < 100; ++t) {
        const cplx lam = random_point(rng), mu = random_point(rng);
        CHECK(check_ybe(YbeForm::vertex, xxx, lam, mu) < 1e-12);
        CHECK(check_ybe(YbeForm::braid, xxx, lam, mu) < 1e-12);
        const Model xxz = Model::xxz(3, random_point(rng));
        CHECK(check_ybe(YbeForm::braid, xxz, lam, mu) < 1e-12);
        const cplx x = right_point(rng), y = right_point(rng);
        CHECK(check_ybe(YbeForm::vertex, xxz, x, y) < 1e-12);
        // untwisted vertex form holds as well
        const cplx q = xxz.q;
        CHECK(ybe_vertex_residual([q](cplx u) { return r_xxz(u, q); }, lam, mu, true) < 1e-12);
    }
    CHECK_THROWS_AS(check_ybe(YbeForm::braid, Model::xxz(3, 1.3), 0.0, 1.0), std::domain_error);
}

TEST_CASE("twisted vertex form needs sqrt(lam mu) = sqrt(lam) sqrt(mu)")
{
    // the product wraps past the cut; the untwisted matrix only changes sign, the twisted one does not
    const cplx lam = std::polar(1.2, 2.0), mu = std::polar(0.9, 2.0), q(1.3, 0.0);
    CHECK(check_ybe(YbeForm::vertex, Model::xxz(3, q), lam, mu) > 1e-3);
    CHECK(ybe_vertex_residual([q](cplx u) { return r_xxz(u, q); }, lam, mu, true) < 1e-12);
    CHECK(check_ybe(YbeForm::braid, Model::xxz(3, q), lam, mu) < 1e-12);
}

TEST_CASE("broken R-matrix is caught")
{
    const RFamily bad = [](cplx u) {
        Mat4 r = r_xxx(u);
        r(1, 2) += 0.01;
        return r;
    };
    CHECK(ybe_vertex_residual(bad, cplx(0.3, 0.2), cplx(-0.7, 0.5), false) >= 1e-3);
}

TEST_CASE("monodromy sweep agrees with the Kronecker product")
{
    std::mt19937_64 rng(13);
    for (int L : {2, 3}) {
        const cplx lam = random_point(rng);
        Model xxx = Model::xxx(L);
        CHECK(oracle::max_entry(dense_monodromy(xxx, lam) - kron_monodromy(xxx, lam)) < 1e-13);
        Model xxz = Model::xxz(L, 1.3);
        CHECK(oracle::max_entry(dense_monodromy(xxz, lam) - kron_monodromy(xxz, lam)) < 1e-13);
        for (int k = 0; k < L; ++k) {
            xxx.xi.push_back(random_point(rng));
            xxz.xi.push_back(random_point(rng));
        }
        CHECK(oracle::max_entry(dense_monodromy(xxx, lam) - kron_monodromy(xxx, lam)) < 1e-12);
        CHECK(oracle::max_entry(dense_monodromy(xxz, lam) - kron_monodromy(xxz, lam)) < 1e-12);
    }
}

TEST_CASE("twist only rescales B and C")
{
    // untwisted monodromy through the untwisted R, compared entry by entry
    const int L = 3;
    const cplx q(1.1, 0.3), lam(0.8, 0.6);
    const int n = L + 1;
    MatX T = MatX::Identity(16, 16);
    for (int k = 1; k <= L; ++k) T = T * oracle::pair(n, r_xxz(lam, q), 1, k + 1);
    const MatX Tt = dense_monodromy(Model::xxz(L, q), lam);
    const cplx s = std::sqrt(lam);
    CHECK(oracle::max_entry(Tt.block(0, 0, 8, 8) - T.block(0, 0, 8, 8)) < 1e-13);
    CHECK(oracle::max_entry(Tt.block(0, 8, 8, 8) - s * T.block(0, 8, 8, 8)) < 1e-13);
    CHECK(oracle::max_entry(Tt.block(8, 0, 8, 8) - T.block(8, 0, 8, 8) / s) < 1e-13);
    CHECK(oracle::max_entry(Tt.block(8, 8, 8, 8) - T.block(8, 8, 8, 8)) < 1e-13);
}

TEST_CASE("neutral inhomogeneities reproduce the homogeneous chain")
{
    std::mt19937_64 rng(2);
    for (Model m : {Model::xxx(5), Model::xxz(5, cplx(1.3, 0.1))}) {
        const State v = random_state(5, rng);
        const cplx lam = random_point(rng);
        Model mi = m;
        mi.xi.assign(5, m.family == Family::XXX ? cplx(0.0) : cplx(1.0));
        for (Entry e : {Entry::A, Entry::B, Entry::C, Entry::D})
            CHECK(max_abs_diff(monodromy_apply(m, e, lam, v), monodromy_apply(mi, e, lam, v)) == 0.0);
    }
}

TEST_CASE("pseudovacuum actions")
{
    std::mt19937_64 rng(31);
    for (int L : {2, 4, 6}) {
        const State vac = vacuum(L);
        const cplx lam = random_point(rng);
        const Model xxx = Model::xxx(L);
        const Model xxz = Model::xxz(L, 1.3);
        const cplx s = std::sqrt(lam), q = 1.3;
        CHECK(max_abs_diff(monodromy_apply(xxx, Entry::A, lam, vac), std::pow(lam + 1.0, L) * vac) < 1e-12);
        CHECK(max_abs_diff(monodromy_apply(xxx, Entry::D, lam, vac), std::pow(lam, L) * vac) < 1e-12);
        CHECK(max_abs(monodromy_apply(xxx, Entry::C, lam, vac)) == 0.0);
        CHECK(max_abs(monodromy_apply(xxz, Entry::C, lam, vac)) == 0.0);
        CHECK(max_abs_diff(monodromy_apply(xxz, Entry::D, lam, vac), std::pow(1.0 / s - s, L) * vac) < 1e-12);
        CHECK(max_abs_diff(monodromy_apply(xxz, Entry::A, lam, vac), std::pow(q / s - s / q, L) * vac) < 1e-12);
        const cplx tr = std::pow(a_fn(xxz, lam), L) + std::pow(d_fn(xxz, lam), L);
        CHECK(max_abs_diff(transfer_apply(xxz, lam, vac), tr * vac) < 1e-12);
    }
    CHECK_THROWS_AS(monodromy_apply(Model::xxz(2, 1.3), Entry::A, 0.0, vacuum(2)), std::domain_error);
    CHECK_THROWS_AS(monodromy_apply(Model::xxx(3), Entry::A, 1.0, vacuum(2)), std::invalid_argument);
}

TEST_CASE("transfer matrices commute")
{
    std::mt19937_64 rng(77);
    for (int L = 2; L <= 8; ++L) {
        for (Model m : {Model::xxx(L), Model::xxz(L, cplx(1.3, 0.2))}) {
            const State v = random_state(L, rng);
            for (int t = 0; t < 3; ++t) {
                const cplx lam = random_point(rng), mu = random_point(rng);
                const State ab = transfer_apply(m, lam, transfer_apply(m, mu, v));
                const State ba = transfer_apply(m, mu, transfer_apply(m, lam, v));
                CHECK(max_abs_diff(ab, ba) / std::max(1.0, max_abs(ab)) < 1e-10);
            }
        }
    }
}

TEST_CASE("L=2 transfer matrix from explicit Lax products")
{
    const cplx lam(0.4, -0.3);
    const Model m = Model::xxx(2);
    const MatX T = kron_monodromy(m, lam);  // 8x8, aux first
    const MatX tau = T.block(0, 0, 4, 4) + T.block(4, 4, 4, 4);
    CHECK(oracle::max_entry(dense_transfer(m, lam) - tau) < 1e-14);
}

TEST_CASE("fundamental commutation relation")
{
    std::mt19937_64 rng(5);
    for (int L = 2; L <= 4; ++L) {
        const cplx lam = random_point(rng), mu = random_point(rng);
        CHECK(fcr_residual(Model::xxx(L), lam, mu) < 1e-10);
        CHECK(fcr_residual(Model::xxz(L, cplx(0.9, 0.3)), right_point(rng), right_point(rng)) < 1e-10);
        Model inh = Model::xxx(L);
        for (int k = 0; k < L; ++k) inh.xi.push_back(random_point(rng));
        CHECK(fcr_residual(inh, lam, mu) < 1e-10);
    }
}

TEST_CASE("transfer matrix polynomial structure")
{
    const int L = 4;
    const Model m = Model::xxx(L);
    const auto c = fit_poly([&](cplx x) { return dense_transfer(m, x); }, L);
    const MatX id = MatX::Identity(16, 16);
    CHECK(oracle::max_entry(c[L] - 2.0 * id) < 1e-11);
    // 2 (lam + 1/2)^L has lam^{L-1} coefficient L; the remainder has none
    CHECK(oracle::max_entry(c[L - 1] - double(L) * id) < 1e-11);
    // the lower coefficients commute pairwise
    for (int j = 0; j < 3; ++j)
        for (int k = j + 1; k < 3; ++k) CHECK(oracle::max_entry(c[j] * c[k] - c[k] * c[j]) < 1e-9);
}

TEST_CASE("Hamiltonian from the log-derivative of the transfer matrix")
{
    const int L = 4;
    const Model m = Model::xxx(L);
    const auto c = fit_poly([&](cplx x) { return dense_transfer(m, x); }, L);
    const MatX at0 = c[0], d0 = c[1];
    const MatX from_tau = 0.5 * d0 * at0.inverse() - 0.25 * L * MatX::Identity(16, 16);
    const MatX H = dense(L, [&](const State& v) { return hamiltonian_apply(m, v); });
    CHECK(oracle::max_entry(from_tau - H) < 1e-10);

    // at the shift point the transfer matrix is the cyclic shift
    const MatX shift = dense_transfer(m, xxx_shift_point);
    CHECK(oracle::max_entry(shift * shift.adjoint() - MatX::Identity(16, 16)) < 1e-14);

    const auto e1 = oracle::sorted_eigs(from_tau), e2 = oracle::sorted_eigs(H);
    CHECK(oracle::multiset_gap(e1, e2) < 1e-9);
}

TEST_CASE("Hamiltonian on the vacuum")
{
    for (int L : {3, 6}) {
        const State vac = vacuum(L);
        CHECK(max_abs_diff(hamiltonian_apply(Model::xxx(L), vac), (L / 4.0) * vac) < 1e-14);
        CHECK(max_abs_diff(hamiltonian_apply(Model::xxz(L, 1.3), vac), (1.3 * L) * vac) < 1e-13);
    }
    // S.S on a pair through the Pauli oracle
    const int L = 3;
    MatX H = MatX::Zero(8, 8);
    for (int k = 1; k <= L; ++k)
        for (const Mat2& s : {pauli::x(), pauli::y(), pauli::z()})
            H += 0.25 * oracle::site(L, s, k) * oracle::site(L, s, k % L + 1);
    const MatX got = dense(L, [&](const State& v) { return hamiltonian_apply(Model::xxx(L), v); });
    CHECK(oracle::max_entry(got - H) < 1e-14);
}

TEST_CASE("log-derivative energy")
{
    CHECK(std::abs(lambda_derivative_energy(Model::xxx(6), {}) - 1.5) < 1e-14);
    CHECK_THROWS_AS(lambda_derivative_energy(Model::xxx(2), {cplx(0.0)}), std::domain_error);
    CHECK_THROWS_AS(lambda_derivative_energy(Model::xxx(2), {cplx(-1.0)}), std::domain_error);
    CHECK_THROWS_AS(lambda_derivative_energy(Model::xxz(2, 1.3), {}), std::invalid_argument);

    // L=4, M=1 roots 1/(w-1), w a nontrivial fourth root of unity
    const int L = 4;
    const MatX H = dense(L, [&](const State& v) { return hamiltonian_apply(Model::xxx(L), v); });
    const auto spec = oracle::sorted_eigs(H);
    for (int k = 1; k < L; ++k) {
        const cplx root = 1.0 / (std::polar(1.0, 2.0 * M_PI * k / L) - 1.0);
        CHECK(oracle::nearest(spec, lambda_derivative_energy(Model::xxx(L), {root})) < 1e-9);
    }
}

TEST_CASE("eigenvalue closed form")
{
    const cplx lam(0.3, 0.4);
    CHECK(std::abs(eigenvalue_xxx(3, lam, {}) - (std::pow(lam + 1.0, 3) + std::pow(lam, 3))) < 1e-14);
    CHECK_THROWS_AS(eigenvalue_xxx(3, 0.5, {cplx(0.5)}), std::domain_error);
    const double h = 1e-6;
    const cplx fd = (eigenvalue_xxx(4, lam + h, {cplx(0.1, 1.0)}) - eigenvalue_xxx(4, lam - h, {cplx(0.1, 1.0)})) /
                    (2 * h);
    CHECK(std::abs(fd - eigenvalue_xxx_derivative(4, lam, {cplx(0.1, 1.0)})) < 1e-7);
}

TEST_CASE("model validation")
{
    CHECK_THROWS_AS(validate(Model::xxz(4, 0.0)), std::domain_error);
    CHECK_THROWS_AS(validate(Model::xxz(4, std::polar(1.0, M_PI / 3))), std::domain_error);
    CHECK_NOTHROW(validate(Model::xxz(4, 1.3)));
    CHECK_THROWS_AS(validate(Model::xxx(1)), std::invalid_argument);
    CHECK_THROWS_AS(validate(Model::xxx(17)), std::invalid_argument);
}
