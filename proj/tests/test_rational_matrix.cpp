#include <doctest.h>

#include "generators.hpp"
#include "msk/rational_matrix.hpp"

using namespace msk;
using testgen::Rng;

namespace {

RationalMatrix diag2(const RationalFunction& a, const RationalFunction& b) {
    RationalMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(1, 1) = b;
    return m;
}

RationalMatrix column_1z() {
    const double s = 1.0 / std::sqrt(2.0);
    RationalMatrix m(2, 1);
    m.at(0, 0) = RationalFunction::constant(Complex(s));
    m.at(1, 0) = RationalFunction::variable() * Complex(s);
    return m;
}

}  // namespace

TEST_CASE("minors of diag(z, z)") {
    RationalMatrix m = diag2(RationalFunction::variable(), RationalFunction::variable());
    auto m2 = m.minors(2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0].num().degree() == 2);
    auto m1 = m.minors(1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[1].is_zero());
    CHECK(m1[2].is_zero());
    auto m0 = m.minors(0);
    REQUIRE(m0.size() == 1);
    CHECK(std::abs(m0[0](Complex(0.3)) - Complex(1.0)) < 1e-14);
}

TEST_CASE("para_conjugate of matrices") {
    RationalMatrix z(1, 1);
    z.at(0, 0) = RationalFunction::variable();
    RationalMatrix pz = z.para_conjugate();
    CHECK(std::abs(pz.at(0, 0)(Complex(2.0)) - Complex(0.5)) < 1e-12);

    MatrixXcd c(2, 2);
    c << Complex(1.0, 2.0), Complex(0.0, -1.0), Complex(3.0), Complex(0.5, 0.5);
    RationalMatrix cm = RationalMatrix::from_constant(c);
    CHECK((cm.para_conjugate().eval(Complex(0.7)) - c.adjoint()).norm() < 1e-12);

    RationalMatrix col = column_1z();
    RationalMatrix pc = col.para_conjugate();
    CHECK(pc.rows() == 1);
    CHECK(pc.cols() == 2);
    for (Complex w : circle_grid(64))
        CHECK((pc.eval(w) - col.eval(w).adjoint()).norm() < 1e-10);
    // involution
    CHECK(grid_sup_distance(pc.para_conjugate(), col) < 1e-10);
}

TEST_CASE("check_inner certificates") {
    RationalMatrix good = diag2(RationalFunction::variable(),
                                BlaschkeProduct::factor(Complex(0.4, 0.2)).to_rational());
    InnerCertificate c1 = check_inner(good);
    CHECK(c1.algebraic_pass);
    CHECK(c1.two_sided);
    CHECK(c1.grid_residual < 1e-9);

    InnerCertificate c2 = check_inner(column_1z());
    CHECK(c2.algebraic_pass);
    CHECK(!c2.two_sided);

    RationalMatrix bad(2, 1);
    bad.at(0, 0) = RationalFunction::one();
    bad.at(1, 0) = RationalFunction::one();
    InnerCertificate c3 = check_inner(bad);
    CHECK(!c3.algebraic_pass);
}

TEST_CASE("check_inner is invariant under constant unitaries") {
    Rng rng(201);
    RationalMatrix delta = testgen::random_potapov_inner(rng, 2, 3);
    InnerCertificate base = check_inner(delta);
    MatrixXcd u = testgen::random_unitary(rng, 2), v = testgen::random_unitary(rng, 2);
    InnerCertificate moved = check_inner(u * delta * v);
    CHECK(base.algebraic_pass == moved.algebraic_pass);
    CHECK(base.two_sided == moved.two_sided);
}

TEST_CASE("complementing_infimum") {
    CHECK(complementing_infimum(RationalMatrix::identity(2)) == doctest::Approx(1.0));
    RationalMatrix zz = diag2(RationalFunction::variable(), RationalFunction::variable());
    CHECK(complementing_infimum(zz) == doctest::Approx(1.0));
    RationalMatrix zm1(1, 1);
    zm1.at(0, 0) = RationalFunction(Polynomial(std::vector<Complex>{Complex(-1.0), Complex(1.0)}),
                                    {});
    CHECK(complementing_infimum(zm1) < 0.05);

    Rng rng(202);
    RationalMatrix inner = testgen::random_potapov_inner(rng, 3, 4);
    CHECK(complementing_infimum(inner) >= 1.0 - 1e-6);
}

TEST_CASE("fourier_block_coeffs on worked examples") {
    RationalMatrix z(1, 1);
    z.at(0, 0) = RationalFunction::variable();
    auto bc = fourier_block_coeffs(z, -2, 3);
    for (int k = -2; k <= 3; ++k)
        CHECK(std::abs(bc.at(k)(0, 0) - (k == 1 ? Complex(1.0) : Complex(0.0))) < 1e-13);

    // 1/(1 - z/2): coefficients 2^{-k} for k >= 0
    RationalMatrix g(1, 1);
    g.at(0, 0) = RationalFunction::from_num_den(
        Polynomial::one(), Polynomial(std::vector<Complex>{Complex(1.0), Complex(-0.5)}));
    auto gc = fourier_block_coeffs(g, -2, 6);
    for (int k = -2; k <= 6; ++k) {
        Complex want = k >= 0 ? Complex(std::pow(2.0, -k)) : Complex(0.0);
        CHECK(std::abs(gc.at(k)(0, 0) - want) < 1e-12);
    }

    RationalMatrix invz(1, 1);
    invz.at(0, 0) = RationalFunction::variable().para_conjugate();
    auto ic = fourier_block_coeffs(invz, -3, 2);
    for (int k = -3; k <= 2; ++k)
        CHECK(std::abs(ic.at(k)(0, 0) - (k == -1 ? Complex(1.0) : Complex(0.0))) < 1e-13);
}

TEST_CASE("fourier coefficients of the para-conjugate are adjoints") {
    Rng rng(203);
    RationalMatrix m = testgen::random_hinf(rng, 2, 2, 2, 1);
    RationalMatrix pc = m.para_conjugate();
    auto a = fourier_block_coeffs(m, -4, 4);
    auto b = fourier_block_coeffs(pc, -4, 4);
    for (int k = -4; k <= 4; ++k)
        CHECK((b.at(k) - a.at(-k).adjoint()).norm() < 1e-9 * (1.0 + a.at(-k).norm()));
}

TEST_CASE("truncated operators") {
    // analytic symbol: hankel section vanishes
    Rng rng(204);
    RationalMatrix analytic = testgen::random_hinf(rng, 2, 2, 2, 1);
    CHECK(truncated_operator(analytic, 6, SectionKind::hankel).norm() < 1e-10);

    // 1/z: toeplitz section is the backward shift with a one-dimensional kernel
    RationalMatrix invz(1, 1);
    invz.at(0, 0) = RationalFunction::variable().para_conjugate();
    MatrixXcd t = truncated_operator(invz, 3, SectionKind::toeplitz);
    CHECK(std::abs(t(0, 1) - Complex(1.0)) < 1e-13);
    CHECK(std::abs(t(1, 2) - Complex(1.0)) < 1e-13);
    CHECK(std::abs(t(0, 0)) < 1e-13);
    CHECK(t.rows() - numeric_rank(t) == 1);
    MatrixXcd t8 = truncated_operator(invz, 8, SectionKind::toeplitz);
    CHECK(t8.rows() - numeric_rank(t8) == 1);

    // conj(b_alpha): rank-one hankel at every size
    RationalMatrix cb(1, 1);
    cb.at(0, 0) = BlaschkeProduct::factor(Complex(0.45, -0.2)).to_rational().para_conjugate();
    for (int N : {1, 3, 7})
        CHECK(numeric_rank(truncated_operator(cb, N, SectionKind::hankel)) == 1);
}

TEST_CASE("hankel rank stabilizes at the Blaschke degree") {
    Rng rng(205);
    for (int it = 0; it < 5; ++it) {
        BlaschkeProduct b = testgen::random_blaschke(rng, rng.integer(1, 4));
        RationalMatrix pc(1, 1);
        pc.at(0, 0) = b.to_rational().para_conjugate();
        StabilizedRank r = stabilized_hankel_rank(pc, 4 * b.degree());
        CHECK(r.stabilized);
        CHECK(r.rank == b.degree());
    }
}

TEST_CASE("h2 inner products") {
    Complex a(0.3, 0.1), b(-0.2, 0.4);
    RationalMatrix ka(1, 1), kb(1, 1);
    ka.at(0, 0) = RationalFunction::szego_kernel(a);
    kb.at(0, 0) = RationalFunction::szego_kernel(b);
    Complex want = Complex(1.0) / (Complex(1.0) - std::conj(a) * b);
    CHECK(std::abs(h2_inner_product(ka, kb) - want) < 1e-12);

    RationalMatrix z(1, 1), z2(1, 1);
    z.at(0, 0) = RationalFunction::variable();
    z2.at(0, 0) = RationalFunction::variable() * RationalFunction::variable();
    CHECK(std::abs(h2_inner_product(z, z2)) < 1e-13);
    CHECK(std::abs(h2_inner_product(z, z) - Complex(1.0)) < 1e-13);
}

TEST_CASE("reproducing identity <f, k_b e> = <f(b), e>") {
    Rng rng(206);
    RationalMatrix f = testgen::random_hinf(rng, 3, 1, 3, 1);
    Complex b(0.35, -0.25);
    for (int i = 0; i < 3; ++i) {
        RationalMatrix ke(3, 1);
        ke.at(i, 0) = RationalFunction::szego_kernel(b);
        Complex got = h2_inner_product(f, ke);
        Complex want = f.eval(b)(i, 0);
        CHECK(std::abs(got - want) < 1e-10 * (1.0 + std::abs(want)));
    }
}

TEST_CASE("fourier coefficients decay with the pole radii") {
    Rng rng(208);
    RationalMatrix m = testgen::random_hinf(rng, 2, 2, 2, 2);
    double rho = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (const auto& [p, mm] : m.at(i, j).poles())
                rho = std::max(rho, 1.0 / std::abs(p));
    auto bc = fourier_block_coeffs(m, 0, 40);
    // fit C from the head, check the tail loosely against C rho^k
    double C = 0.0;
    for (int k = 0; k <= 10; ++k) C = std::max(C, bc.at(k).norm() / std::pow(rho, k));
    for (int k = 11; k <= 40; ++k)
        CHECK(bc.at(k).norm() <= 10.0 * C * std::pow(rho, k) + 1e-12);
}

TEST_CASE("determinant and inverse of rational matrices") {
    Rng rng(207);
    RationalMatrix m = testgen::random_potapov_inner(rng, 3, 3);
    RationalMatrix inv = m.inverse();
    CHECK(grid_sup_distance(m * inv, RationalMatrix::identity(3)) < 1e-8);
    // two-sided inner: inverse equals the para-conjugate
    CHECK(grid_sup_distance(inv, m.para_conjugate()) < 1e-8);
}

TEST_CASE("determinant beyond the Laplace size uses elimination") {
    Rng rng(209);
    const int n = 7;
    RationalMatrix t(n, n);
    RationalFunction want = RationalFunction::one();
    for (int i = 0; i < n; ++i) {
        RationalFunction d =
            i % 2 ? testgen::random_hinf(rng, 1, 1, 1, 1).at(0, 0) +
                        RationalFunction::constant(Complex(2.0))
                  : BlaschkeProduct::factor(rng.disk_point(0.6)).to_rational();
        t.at(i, i) = d;
        want = want * d;
        for (int j = i + 1; j < n; ++j) t.at(i, j) = testgen::random_hinf(rng, 1, 1, 1, 1).at(0, 0);
    }
    RationalFunction got = t.det();
    double err = 0.0;
    for (Complex z : circle_grid(64)) err = std::max(err, std::abs(got(z) - want(z)));
    CHECK(err < 1e-8);
}
