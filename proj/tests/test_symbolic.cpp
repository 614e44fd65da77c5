#include <doctest.h>

#include "generators.hpp"
#include "msk/json_io.hpp"
#include "msk/symbolic.hpp"

using namespace msk;

namespace {

RationalFunction z() { return RationalFunction::variable(); }
RationalFunction one_rf() { return RationalFunction::one(); }
RationalFunction c(double re) { return RationalFunction::constant(Complex(re)); }

SymbolicEntry opq(const char* name, FactorKind k = FactorKind::Sym,
                  RationalFunction coef = RationalFunction::one()) {
    return SymbolicEntry::opaque(name, k, std::move(coef));
}

// Phi = [z, z a; 1, -a], the 2x2 symbol with kernel (1/sqrt2)[z; 1] H^2
SymbolicMatrix phi_ex8712() {
    SymbolicMatrix phi(2, 2);
    phi.at(0, 0) = SymbolicEntry(z());
    phi.at(0, 1) = opq("a", FactorKind::Sym, z());
    phi.at(1, 0) = SymbolicEntry(one_rf());
    phi.at(1, 1) = opq("a", FactorKind::Sym, c(-1.0));
    return phi;
}

RationalMatrix delta_ex8712() {
    const double s = 1.0 / std::sqrt(2.0);
    RationalMatrix d(2, 1);
    d.at(0, 0) = z() * Complex(s);
    d.at(1, 0) = c(s);
    return d;
}

}  // namespace

TEST_CASE("sym_analytic_check") {
    CHECK(sym_analytic_check(opq("u")) == Tri::Yes);
    CHECK(sym_analytic_check(opq("u", FactorKind::ConjSym)) == Tri::No);

    // (conj(z) z - 1) conj(u) simplifies to zero on the circle: the
    // coefficient z~ z - 1 is identically zero as a rational function
    RationalFunction vanish = z().para_conjugate() * z() - one_rf();
    SymbolicEntry e = opq("u", FactorKind::ConjSym, vanish);
    CHECK(e.is_zero());
    CHECK(sym_analytic_check(e) == Tri::Yes);

    // non-analytic rational coefficient on an opaque factor: unknown
    RationalFunction pole_inside(Polynomial::one(), {{Complex(0.3, 0.0), 1}});
    CHECK(sym_analytic_check(opq("u", FactorKind::Sym, pole_inside)) == Tri::Unknown);
    // non-analytic pure rational part: no
    CHECK(sym_analytic_check(SymbolicEntry(pole_inside)) == Tri::No);
}

TEST_CASE("simplification is confluent and cancels conjugate pairs") {
    SymbolicEntry e = opq("a", FactorKind::ConjSym, z()) + opq("a", FactorKind::ConjSym, -z());
    CHECK(e.is_zero());
    SymbolicEntry f = opq("a") + SymbolicEntry(z()) + opq("a", FactorKind::Sym, c(-1.0));
    SymbolicEntry g = f;
    g.simplify();
    CHECK(g.terms().size() == f.terms().size());
    // a - a cancels, z stays
    CHECK(f.terms().size() == 1);
    CHECK(f.terms()[0].kind == FactorKind::One);
}

TEST_CASE("products forming u*conj(u) are rejected") {
    SymbolicEntry u = opq("u");
    SymbolicEntry cu = opq("u", FactorKind::ConjSym);
    CHECK_THROWS_AS((void)(u * cu), Error);
    // zero coefficients kill the product before the check
    SymbolicEntry zero_u = opq("u", FactorKind::Sym, RationalFunction());
    CHECK((zero_u * cu).is_zero());
}

TEST_CASE("verify_subspace_inclusion on the opaque 2x2 example") {
    CHECK(verify_subspace_inclusion(delta_ex8712(), phi_ex8712()) == Verdict::Pass);

    // rational Phi with Delta from its own kernel passes by construction
    testgen::Rng rng(501);
    auto inst = testgen::random_dss_instance(rng, 2, 2, 2);
    CHECK(verify_subspace_inclusion(inst.theta, SymbolicMatrix::from_rational(inst.phi)) ==
          Verdict::Pass);

    // Phi = [u] against Delta = [1] fails: the adjoint side carries conj(u)
    SymbolicMatrix bad(1, 1);
    bad.at(0, 0) = opq("u");
    CHECK(verify_subspace_inclusion(RationalMatrix::identity(1), bad) == Verdict::Fail);
}

TEST_CASE("subspace inclusion is sound on constructed instances") {
    // Phi = Delta A~ + B with Delta~ B = 0 must pass
    testgen::Rng rng(502);
    RationalMatrix delta = delta_ex8712();
    SymbolicMatrix A(2, 1);
    A.at(0, 0) = SymbolicEntry(testgen::random_hinf(rng, 1, 1, 2, 1).at(0, 0));
    A.at(1, 0) = opq("w", FactorKind::Sym, c(0.7));
    // B = Delta_c column times opaque row; Delta_c = (1/sqrt2)[z; -1] here
    const double s = 1.0 / std::sqrt(2.0);
    SymbolicMatrix B(2, 2);
    B.at(0, 0) = opq("v", FactorKind::Sym, z() * Complex(s));
    B.at(1, 0) = opq("v", FactorKind::Sym, c(-s));
    SymbolicMatrix phi = SymbolicMatrix::from_rational(delta) * A.para_conjugate() + B;
    CHECK(verify_subspace_inclusion(delta, phi) == Verdict::Pass);
}

TEST_CASE("nc_structured reproduces the worked cases") {
    Declarations decl;
    decl.symbols = {{"f", true}, {"g", true}, {"a", true}, {"b", true}};
    decl.inner_columns = {{0, {"f", "g"}, true}};

    SymbolicMatrix phi(3, 3);
    phi.at(0, 0) = opq("f");
    phi.at(0, 1) = opq("f");
    phi.at(1, 0) = opq("g");
    phi.at(1, 1) = opq("g");

    std::vector<NcBlock> structure{
        {NcBlock::Kind::DeclaredColumn, {0, 1}, {0, 1}},
        {NcBlock::Kind::ConjOpaque, {2}, {2}},
    };

    SUBCASE("case 1: corner not of bounded type") {
        phi.at(2, 2) = opq("a");
        NcResult r = nc_structured(phi, structure, decl);
        REQUIRE(r.nc.has_value());
        CHECK(*r.nc == 1);
    }

    SUBCASE("case 2: corner theta conj(b)") {
        RationalFunction theta = BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational();
        phi.at(2, 2) = opq("b", FactorKind::ConjSym, theta);
        structure[1].kind = NcBlock::Kind::ThetaConjScalar;
        NcResult r = nc_structured(phi, structure, decl);
        REQUIRE(r.nc.has_value());
        CHECK(*r.nc == 2);
        REQUIRE(r.theta.has_value());
        CHECK(r.theta->cols() == 2);
        // blockdiag([f; g], theta): the scalar block carries theta
        CHECK(r.theta->at(2, 1).is_rational());
    }
}

TEST_CASE("nc_structured on fully rational input gives the row dimension") {
    testgen::Rng rng(503);
    RationalMatrix delta = testgen::random_potapov_inner(rng, 3, 3);
    SymbolicMatrix phi = SymbolicMatrix::from_rational(delta);
    std::vector<NcBlock> structure{{NcBlock::Kind::Rational, {0, 1, 2}, {0, 1, 2}}};
    NcResult r = nc_structured(phi, structure, {});
    REQUIRE(r.nc.has_value());
    CHECK(*r.nc == 3);
}

TEST_CASE("verify_canonical on the first decomposition example") {
    // Phi = diag(theta1, theta2, a), Delta = [theta1 0; 0 theta2; 0 0],
    // A = [1 0; 0 1; 0 0], B = e_33 a
    RationalFunction t1 = z();
    RationalFunction t2 = BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational();
    SymbolicMatrix phi(3, 3);
    phi.at(0, 0) = SymbolicEntry(t1);
    phi.at(1, 1) = SymbolicEntry(t2);
    phi.at(2, 2) = opq("a");
    SymbolicMatrix delta(3, 2);
    delta.at(0, 0) = SymbolicEntry(t1);
    delta.at(1, 1) = SymbolicEntry(t2);
    SymbolicMatrix a(3, 2);
    a.at(0, 0) = SymbolicEntry(one_rf());
    a.at(1, 1) = SymbolicEntry(one_rf());
    SymbolicMatrix b(3, 3);
    b.at(2, 2) = opq("a");
    Declarations decl;
    decl.symbols = {{"a", true}};
    std::vector<NcBlock> structure{
        {NcBlock::Kind::Rational, {0, 1}, {0, 1}},
        {NcBlock::Kind::ConjOpaque, {2}, {2}},
    };
    CanonicalVerdicts v = verify_canonical(phi, delta, a, b, decl, &structure);
    CHECK(v.inner == Verdict::Pass);
    CHECK(v.coprime == Verdict::Pass);
    CHECK(!v.coprime_assumed);  // A is rational: the engine decided
    CHECK(v.delta_star_b == Verdict::Pass);
    CHECK(v.reconstruction == Verdict::Pass);
    CHECK(v.nc_bound == Verdict::Pass);
    CHECK(v.overall() == Verdict::Pass);
    CHECK(v.kernel_conclusion);
}

TEST_CASE("verify_canonical flags a wrong B") {
    RationalFunction t1 = z();
    SymbolicMatrix phi(2, 2);
    phi.at(0, 0) = SymbolicEntry(t1);
    phi.at(1, 1) = opq("a");
    SymbolicMatrix delta(2, 1);
    delta.at(0, 0) = SymbolicEntry(t1);
    SymbolicMatrix a(2, 1);
    a.at(0, 0) = SymbolicEntry(one_rf());
    SymbolicMatrix b(2, 2);
    b.at(0, 0) = SymbolicEntry(one_rf());  // Delta~ B != 0
    b.at(1, 1) = opq("a");
    CanonicalVerdicts v = verify_canonical(phi, delta, a, b, {}, nullptr);
    CHECK(v.delta_star_b == Verdict::Fail);
    CHECK(v.overall() == Verdict::Fail);
}

TEST_CASE("json encodings survive a round trip") {
    testgen::Rng rng(504);
    RationalMatrix m = testgen::random_hinf(rng, 2, 3, 2, 2);
    RationalMatrix back = matrix_from_json(to_json(m));
    CHECK(grid_sup_distance(back, m) < 1e-8);

    BlaschkeProduct bp = testgen::random_blaschke(rng, 4);
    BlaschkeProduct bb = blaschke_from_json(to_json(bp));
    CHECK(bb.same_zeros(bp));
    CHECK(std::abs(bb.constant() - bp.constant()) < 1e-10);

    SymbolicMatrix sm(1, 2);
    sm.at(0, 0) = SymbolicEntry::opaque("a", FactorKind::ConjSym,
                                        BlaschkeProduct::factor(Complex(0.3, 0.1)).to_rational());
    sm.at(0, 1) = SymbolicEntry(RationalFunction::variable());
    SymbolicMatrix sback = symbolic_matrix_from_json(to_json(sm));
    CHECK(sback.at(0, 0).terms().size() == 1);
    CHECK(sback.at(0, 0).terms()[0].kind == FactorKind::ConjSym);
    CHECK(sback.at(0, 0).terms()[0].sym == "a");
    CHECK((sback - sm).is_zero());
}

TEST_CASE("verify_canonical with declared opaque columns (second example)") {
    RationalFunction theta = BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational();
    SymbolicMatrix phi(3, 3);
    phi.at(0, 0) = opq("f");
    phi.at(0, 1) = opq("f");
    phi.at(1, 0) = opq("g");
    phi.at(1, 1) = opq("g");
    phi.at(2, 2) = opq("a", FactorKind::ConjSym, theta);
    SymbolicMatrix delta(3, 2);
    delta.at(0, 0) = opq("f");
    delta.at(1, 0) = opq("g");
    delta.at(2, 1) = SymbolicEntry(theta);
    SymbolicMatrix a(3, 2);
    a.at(0, 0) = SymbolicEntry(one_rf());
    a.at(1, 0) = SymbolicEntry(one_rf());
    a.at(2, 1) = opq("a");
    SymbolicMatrix b(3, 3);
    Declarations decl;
    decl.symbols = {{"f", true}, {"g", true}, {"a", true}};
    decl.inner_columns = {{0, {"f", "g"}, true}};
    decl.coprime_witness = "tilde(theta) and tilde(a) are coprime";
    std::vector<NcBlock> structure{
        {NcBlock::Kind::DeclaredColumn, {0, 1}, {0, 1}},
        {NcBlock::Kind::ThetaConjScalar, {2}, {2}},
    };
    CanonicalVerdicts v = verify_canonical(phi, delta, a, b, decl, &structure);
    CHECK(v.inner == Verdict::Pass);
    CHECK(v.coprime == Verdict::Pass);
    CHECK(v.coprime_assumed);
    CHECK(v.delta_star_b == Verdict::Pass);
    CHECK(v.reconstruction == Verdict::Pass);
    CHECK(v.nc_bound == Verdict::Pass);
    CHECK(v.overall() == Verdict::Pass);
    CHECK(!v.assumptions.empty());
}
