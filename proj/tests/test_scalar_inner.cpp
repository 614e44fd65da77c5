#include <doctest.h>

#include "generators.hpp"
#include "msk/blaschke.hpp"
#include "msk/rational_matrix.hpp"

using namespace msk;
using testgen::Rng;

namespace {

double grid_sup(const RationalFunction& f) {
    double s = 0.0;
    for (Complex z : circle_grid()) s = std::max(s, std::abs(f(z)));
    return s;
}

RationalFunction rf(std::initializer_list<Complex> num, std::initializer_list<Complex> den) {
    return RationalFunction::from_num_den(Polynomial(std::vector<Complex>(num)),
                                          Polynomial(std::vector<Complex>(den)));
}

}  // namespace

TEST_CASE("polynomial roots with multiplicity") {
    Polynomial p = Polynomial::from_roots(Complex(2.0), {Complex(0.5), Complex(0.5),
                                                         Complex(-0.3, 0.1)});
    auto roots = p.roots_clustered();
    REQUIRE(roots.size() == 2);
    bool found_double = false, found_single = false;
    for (const auto& [r, m] : roots) {
        if (m == 2) {
            CHECK(std::abs(r - Complex(0.5)) < 1e-7);
            found_double = true;
        }
        if (m == 1) {
            CHECK(std::abs(r - Complex(-0.3, 0.1)) < 1e-9);
            found_single = true;
        }
    }
    CHECK(found_double);
    CHECK(found_single);
}

TEST_CASE("polynomial roots: higher multiplicities survive clustering") {
    Polynomial p = Polynomial::from_roots(Complex(1.0), {Complex(0.4, -0.2), Complex(0.4, -0.2),
                                                         Complex(0.4, -0.2), Complex(-0.6)});
    auto roots = p.roots_clustered();
    int total = 0;
    for (const auto& [r, m] : roots) total += m;
    CHECK(total == 4);
    REQUIRE(roots.size() == 2);
}

TEST_CASE("para_conjugate maps z to 1/z and constants to conjugates") {
    RationalFunction z = RationalFunction::variable();
    RationalFunction pz = z.para_conjugate();
    CHECK(std::abs(pz(Complex(2.0)) - Complex(0.5)) < 1e-12);
    RationalFunction c = RationalFunction::constant(Complex(1.0, -2.0));
    CHECK(std::abs(c.para_conjugate()(Complex(0.3)) - Complex(1.0, 2.0)) < 1e-12);
}

TEST_CASE("para_conjugate equals conj on the circle and is an involution") {
    // (z - 1/2)/(1 - z/2)
    RationalFunction r = rf({Complex(-0.5), Complex(1.0)}, {Complex(1.0), Complex(-0.5)});
    RationalFunction pc = r.para_conjugate();
    for (Complex z : circle_grid()) {
        CHECK(std::abs(pc(z) - std::conj(r(z))) <= 1e-9 * (1.0 + std::abs(r(z))));
    }
    RationalFunction back = pc.para_conjugate();
    CHECK(grid_sup(back - r) < 1e-9);

    Rng rng(101);
    for (int it = 0; it < 10; ++it) {
        auto num = Polynomial::from_roots(rng.gaussian(), {rng.disk_point(0.9), rng.gaussian()});
        RationalFunction f(num, {{Complex(1.0) / std::conj(rng.disk_point(0.6)), 1}});
        RationalFunction inv = f.para_conjugate().para_conjugate();
        CHECK(grid_sup(inv - f) < 1e-8 * (1.0 + grid_sup(f)));
    }
}

TEST_CASE("inner_lattice on monomials and separated factors") {
    auto r1 = inner_lattice(BlaschkeProduct::monomial(2), BlaschkeProduct::monomial(3));
    CHECK(r1.gcd.same_zeros(BlaschkeProduct::monomial(2)));
    CHECK(r1.lcm.same_zeros(BlaschkeProduct::monomial(3)));
    CHECK(!r1.coprime);

    BlaschkeProduct ba = BlaschkeProduct::factor(Complex(0.4, 0.1));
    BlaschkeProduct bb = BlaschkeProduct::factor(Complex(-0.2, 0.3));
    auto r2 = inner_lattice(ba, bb);
    CHECK(r2.gcd.degree() == 0);
    CHECK(r2.lcm.same_zeros(ba * bb));
    CHECK(r2.coprime);

    auto r3 = inner_lattice(BlaschkeProduct::monomial(1) * ba, BlaschkeProduct::monomial(2));
    CHECK(r3.gcd.same_zeros(BlaschkeProduct::monomial(1)));
    CHECK(r3.lcm.same_zeros(BlaschkeProduct::monomial(2) * ba));
}

TEST_CASE("inner_lattice identities") {
    Rng rng(102);
    for (int it = 0; it < 20; ++it) {
        BlaschkeProduct b1 = testgen::random_blaschke(rng, rng.integer(0, 4));
        BlaschkeProduct b2 = testgen::random_blaschke(rng, rng.integer(0, 4));
        auto r = inner_lattice(b1, b2);
        CHECK(r.gcd.degree() + r.lcm.degree() == b1.degree() + b2.degree());
        CHECK((r.gcd * r.lcm).same_zeros(b1 * b2));
        auto rr = inner_lattice(b1, b1);
        CHECK(rr.gcd.same_zeros(b1));
        auto r1 = inner_lattice(b1, BlaschkeProduct());
        CHECK(r1.gcd.degree() == 0);
        CHECK(r1.lcm.same_zeros(b1));
    }
}

TEST_CASE("inner_lattice reports the undecidable band") {
    Complex a(0.3, 0.2);
    BlaschkeProduct b1 = BlaschkeProduct::factor(a);
    BlaschkeProduct b2 = BlaschkeProduct::factor(a + Complex(3e-9, 0.0));
    CHECK_THROWS_AS((void)inner_lattice(b1, b2), Error);
}

TEST_CASE("inner_outer_scalar on worked examples") {
    // f = z (2 - z)
    RationalFunction f1 = rf({Complex(0.0), Complex(2.0), Complex(-1.0)}, {Complex(1.0)});
    auto io1 = inner_outer_scalar(f1);
    CHECK(io1.inner.same_zeros(BlaschkeProduct::monomial(1)));
    CHECK(grid_sup(io1.outer - rf({Complex(2.0), Complex(-1.0)}, {Complex(1.0)})) < 1e-9);

    auto io2 = inner_outer_scalar(BlaschkeProduct::factor(Complex(0.5)).to_rational());
    CHECK(io2.inner.same_zeros(BlaschkeProduct::factor(Complex(0.5))));
    CHECK(io2.outer.is_constant());

    // f = z - 1/2: inner b_{1/2}, outer -(z-2)/2 up to a unimodular constant
    RationalFunction f3 = rf({Complex(-0.5), Complex(1.0)}, {Complex(1.0)});
    auto io3 = inner_outer_scalar(f3);
    CHECK(io3.inner.same_zeros(BlaschkeProduct::factor(Complex(0.5))));
    for (Complex z : circle_grid())
        CHECK(std::abs(std::abs(io3.outer(z)) - std::abs(f3(z))) <=
              1e-9 * (1.0 + std::abs(f3(z))));
    // reassembly
    CHECK(grid_sup(io3.inner.to_rational() * io3.outer - f3) < 1e-9);

    // pole in the disk is rejected
    RationalFunction bad = rf({Complex(1.0)}, {Complex(-0.5), Complex(1.0)});
    CHECK_THROWS_AS((void)inner_outer_scalar(bad), Error);

    // boundary zero stays with the outer part, flagged
    RationalFunction f4 = rf({Complex(-1.0), Complex(1.0)}, {Complex(1.0)});
    auto io4 = inner_outer_scalar(f4);
    CHECK(io4.boundary_zero);
    CHECK(io4.inner.degree() == 0);
}

TEST_CASE("inner_outer_scalar reassembly property") {
    Rng rng(103);
    for (int it = 0; it < 25; ++it) {
        std::vector<Complex> roots;
        int nin = rng.integer(0, 3), nout = rng.integer(0, 3);
        for (int i = 0; i < nin; ++i) roots.push_back(rng.disk_point(0.8));
        for (int i = 0; i < nout; ++i) {
            double r = rng.uniform(1.4, 3.0), t = rng.uniform(0.0, 2.0 * M_PI);
            roots.emplace_back(r * std::cos(t), r * std::sin(t));
        }
        RationalFunction f(Polynomial::from_roots(rng.gaussian() + Complex(2.0), roots),
                           {{Complex(2.5, 1.0), 1}});
        auto io = inner_outer_scalar(f);
        CHECK(io.inner.degree() == nin);
        CHECK(grid_sup(io.inner.to_rational() * io.outer - f) <= 1e-9 * (1.0 + grid_sup(f)));
        for (const auto& [z, m] : io.outer.zeros()) CHECK(std::abs(z) > 1.0 - 1e-6);
    }
}

TEST_CASE("spectral_factor_scalar on worked examples") {
    auto r1 = spectral_factor_scalar(RationalFunction::constant(Complex(4.0)));
    CHECK(std::abs(r1.outer(Complex(0.2)) - Complex(2.0)) < 1e-10);

    // R = 5 + 2z + 2/z = (2+z)(2+1/z)
    RationalFunction R2 = rf({Complex(2.0), Complex(5.0), Complex(2.0)},
                             {Complex(0.0), Complex(1.0)});
    auto r2 = spectral_factor_scalar(R2);
    CHECK(!r2.boundary_zero);
    CHECK(grid_sup(r2.outer - rf({Complex(2.0), Complex(1.0)}, {Complex(1.0)})) < 1e-8);

    // R = 2 + z + 1/z = (1+z)(1+1/z), boundary zero
    RationalFunction R3 = rf({Complex(1.0), Complex(2.0), Complex(1.0)},
                             {Complex(0.0), Complex(1.0)});
    auto r3 = spectral_factor_scalar(R3);
    CHECK(r3.boundary_zero);
    CHECK(grid_sup(r3.outer - rf({Complex(1.0), Complex(1.0)}, {Complex(1.0)})) < 1e-7);

    RationalFunction neg = RationalFunction::constant(Complex(-1.0));
    CHECK_THROWS_AS((void)spectral_factor_scalar(neg), Error);
}

TEST_CASE("spectral_factor_scalar: 200 random nonnegative trig rationals") {
    Rng rng(104);
    for (int it = 0; it < 200; ++it) {
        int deg = rng.integer(0, 4);  // |q|^2 has trig degree up to 8 on the circle
        std::vector<Complex> c(static_cast<size_t>(deg) + 1);
        for (auto& x : c) x = rng.gaussian();
        if (std::abs(c.back()) < 0.1) c.back() += Complex(0.5);
        RationalFunction q(Polynomial(std::move(c)), {});
        RationalFunction R = q * q.para_conjugate();
        auto sf = spectral_factor_scalar(R);
        // outer: no roots in the open disk
        for (const auto& [z, m] : sf.outer.zeros()) CHECK(std::abs(z) > 1.0 - 1e-6);
        double resid = 0.0, scale = 0.0;
        for (Complex z : circle_grid(128)) {
            Complex v = sf.outer(z);
            resid = std::max(resid, std::abs(v * std::conj(v) - R(z)));
            scale = std::max(scale, std::abs(R(z)));
        }
        CHECK(resid <= 1e-8 * (1.0 + scale));
    }
}

TEST_CASE("bt_decompose on worked examples") {
    auto d1 = bt_decompose(RationalFunction::variable());
    CHECK(d1.theta.same_zeros(BlaschkeProduct::monomial(1)));
    CHECK(grid_sup(d1.a - RationalFunction::one()) < 1e-10);

    auto d2 = bt_decompose(RationalFunction::variable().para_conjugate());  // 1/z
    CHECK(d2.theta.degree() == 0);
    CHECK(grid_sup(d2.a - RationalFunction::variable()) < 1e-10);

    Complex alpha(0.3, -0.4);
    RationalFunction zba =
        RationalFunction::variable() * BlaschkeProduct::factor(alpha).to_rational();
    auto d3 = bt_decompose(zba);
    CHECK(d3.theta.same_zeros(BlaschkeProduct::monomial(1) * BlaschkeProduct::factor(alpha)));
    CHECK(d3.a.is_constant());

    RationalFunction circle_pole = rf({Complex(1.0)}, {Complex(-1.0), Complex(1.0)});
    CHECK_THROWS_AS((void)bt_decompose(circle_pole), Error);
}

TEST_CASE("bt_decompose reconstruction and coprimality") {
    Rng rng(105);
    for (int it = 0; it < 20; ++it) {
        // random L-infinity admissible rational: zeros and poles off the circle
        std::vector<Complex> zeros;
        for (int i = 0, n = rng.integer(0, 2); i < n; ++i) zeros.push_back(rng.disk_point(0.7));
        for (int i = 0, n = rng.integer(0, 2); i < n; ++i)
            zeros.push_back(rng.gaussian() + Complex(2.5));
        std::vector<std::pair<Complex, int>> poles;
        if (rng.integer(0, 1)) poles.push_back({rng.disk_point(0.6), 1});
        poles.push_back({rng.gaussian() + Complex(3.0, 1.0), 1});
        RationalFunction phi(Polynomial::from_roots(rng.gaussian() + Complex(1.5), zeros), poles);
        auto d = bt_decompose(phi);
        CHECK(d.a.analytic_in_closed_disk());
        double resid = 0.0, scale = 0.0;
        for (Complex z : circle_grid()) {
            resid = std::max(resid, std::abs(d.theta(z) * std::conj(d.a(z)) - phi(z)));
            scale = std::max(scale, std::abs(phi(z)));
        }
        CHECK(resid <= 1e-8 * (1.0 + scale));
        // theta and the inner part of a share no zero
        auto lat = inner_lattice(d.theta, inner_outer_scalar(d.a).inner);
        CHECK(lat.coprime);
    }
}

TEST_CASE("spectrum of finite Blaschke products") {
    CHECK(spectrum_inner(BlaschkeProduct::monomial(3)) == std::vector<Complex>{Complex(0.0)});
    Complex a(0.2, 0.1), b(-0.5, 0.0);
    auto spec = spectrum_inner(BlaschkeProduct::factor(a) * BlaschkeProduct::factor(b));
    CHECK(spec.size() == 2);
    CHECK(spectrum_inner(BlaschkeProduct()).empty());
}
