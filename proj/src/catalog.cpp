#include "msk/catalog.hpp"

namespace msk {

namespace {

RationalFunction rf_z() { return RationalFunction::variable(); }
RationalFunction rf_c(double re, double im = 0.0) {
    return RationalFunction::constant(Complex(re, im));
}

jsn sym_rational(const RationalFunction& r) {
    return to_json(SymbolicEntry(r));
}
jsn sym_opaque(const std::string& name, FactorKind kind, const RationalFunction& coef) {
    return to_json(SymbolicEntry::opaque(name, kind, coef));
}
jsn sym_zero() { return jsn::array(); }

jsn matrix_4x3() {
    RationalMatrix m(4, 3);
    m.at(0, 0) = rf_z();
    m.at(1, 1) = rf_z();
    m.at(2, 2) = rf_c(1.0);
    return to_json(m);
}

jsn column_1z() {
    const double s = 1.0 / std::sqrt(2.0);
    RationalMatrix m(2, 1);
    m.at(0, 0) = rf_c(s);
    m.at(1, 0) = rf_z() * Complex(s);
    return to_json(m);
}

jsn completed_1z() {
    const double s = 1.0 / std::sqrt(2.0);
    RationalMatrix m(2, 2);
    m.at(0, 0) = rf_c(s);
    m.at(0, 1) = rf_c(s);
    m.at(1, 0) = rf_z() * Complex(s);
    m.at(1, 1) = rf_z() * Complex(-s);
    return to_json(m);
}

jsn column_10() {
    RationalMatrix m(2, 1);
    m.at(0, 0) = rf_c(1.0);
    return to_json(m);
}

jsn diag_blaschke() {
    RationalMatrix m(2, 2);
    m.at(0, 0) = BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational();
    m.at(1, 1) = BlaschkeProduct::factor(Complex(0.0, -0.3)).to_rational();
    return to_json(m);
}

jsn adjoint_blaschke_scalar() {
    RationalMatrix m(1, 1);
    m.at(0, 0) = BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational().para_conjugate();
    return to_json(m);
}

RationalFunction theta_half() { return BlaschkeProduct::factor(Complex(0.5, 0.0)).to_rational(); }

// Phi = diag(theta1, theta2, a); Delta = [theta1 0; 0 theta2; 0 0];
// A = [1 0; 0 1; 0 0]; B = e_33 a  (the first decomposition example)
jsn fixture_eq7ex() {
    RationalFunction t1 = rf_z();
    RationalFunction t2 = theta_half();
    jsn phi{{"rows", 3},
            {"cols", 3},
            {"entries",
             jsn::array({jsn::array({sym_rational(t1), sym_zero(), sym_zero()}),
                         jsn::array({sym_zero(), sym_rational(t2), sym_zero()}),
                         jsn::array({sym_zero(), sym_zero(),
                                     sym_opaque("a", FactorKind::Sym, rf_c(1.0))})})}};
    jsn delta{{"rows", 3},
              {"cols", 2},
              {"entries",
               jsn::array({jsn::array({sym_rational(t1), sym_zero()}),
                           jsn::array({sym_zero(), sym_rational(t2)}),
                           jsn::array({sym_zero(), sym_zero()})})}};
    jsn a{{"rows", 3},
          {"cols", 2},
          {"entries",
           jsn::array({jsn::array({sym_rational(rf_c(1.0)), sym_zero()}),
                       jsn::array({sym_zero(), sym_rational(rf_c(1.0))}),
                       jsn::array({sym_zero(), sym_zero()})})}};
    jsn b{{"rows", 3},
          {"cols", 3},
          {"entries",
           jsn::array({jsn::array({sym_zero(), sym_zero(), sym_zero()}),
                       jsn::array({sym_zero(), sym_zero(), sym_zero()}),
                       jsn::array({sym_zero(), sym_zero(),
                                   sym_opaque("a", FactorKind::Sym, rf_c(1.0))})})}};
    jsn structure = jsn::array(
        {jsn{{"kind", "rational"}, {"rows", jsn::array({0, 1})}, {"cols", jsn::array({0, 1})}},
         jsn{{"kind", "conj_opaque"}, {"rows", jsn::array({2})}, {"cols", jsn::array({2})}}});
    return jsn{{"phi", phi},
               {"delta", delta},
               {"a", a},
               {"b", b},
               {"declarations", jsn{{"symbols", jsn::array({jsn{{"name", "a"}}})}}},
               {"structure", structure}};
}

// Phi = [f f 0; g g 0; 0 0 theta conj(a)]; Delta = [f 0; g 0; 0 theta];
// A = [1 0; 1 0; 0 a]; B = 0  (the second decomposition example)
jsn fixture_eq7exm() {
    RationalFunction th = theta_half();
    auto f = [&](FactorKind k, const char* n) { return sym_opaque(n, k, rf_c(1.0)); };
    jsn phi{{"rows", 3},
            {"cols", 3},
            {"entries",
             jsn::array({jsn::array({f(FactorKind::Sym, "f"), f(FactorKind::Sym, "f"), sym_zero()}),
                         jsn::array({f(FactorKind::Sym, "g"), f(FactorKind::Sym, "g"), sym_zero()}),
                         jsn::array({sym_zero(), sym_zero(),
                                     sym_opaque("a", FactorKind::ConjSym, th)})})}};
    jsn delta{{"rows", 3},
              {"cols", 2},
              {"entries",
               jsn::array({jsn::array({f(FactorKind::Sym, "f"), sym_zero()}),
                           jsn::array({f(FactorKind::Sym, "g"), sym_zero()}),
                           jsn::array({sym_zero(), sym_rational(th)})})}};
    jsn a{{"rows", 3},
          {"cols", 2},
          {"entries",
           jsn::array({jsn::array({sym_rational(rf_c(1.0)), sym_zero()}),
                       jsn::array({sym_rational(rf_c(1.0)), sym_zero()}),
                       jsn::array({sym_zero(), f(FactorKind::Sym, "a")})})}};
    jsn b{{"rows", 3},
          {"cols", 3},
          {"entries",
           jsn::array({jsn::array({sym_zero(), sym_zero(), sym_zero()}),
                       jsn::array({sym_zero(), sym_zero(), sym_zero()}),
                       jsn::array({sym_zero(), sym_zero(), sym_zero()})})}};
    jsn decl{{"symbols",
              jsn::array({jsn{{"name", "f"}}, jsn{{"name", "g"}}, jsn{{"name", "a"}}})},
             {"inner_columns",
              jsn::array({jsn{{"col", 0},
                              {"symbols", jsn::array({"f", "g"})},
                              {"complementary_trivial", true}}})},
             {"coprime_witness",
              "tilde(theta) and tilde(a) are coprime, so Delta and A are right coprime"}};
    jsn structure = jsn::array(
        {jsn{{"kind", "declared_column"}, {"rows", jsn::array({0, 1})}, {"cols", jsn::array({0, 1})}},
         jsn{{"kind", "theta_conj_scalar"}, {"rows", jsn::array({2})}, {"cols", jsn::array({2})}}});
    return jsn{{"phi", phi},   {"delta", delta},        {"a", a},
               {"b", b},       {"declarations", decl},  {"structure", structure}};
}

// Phi = [z z a; 1 -a]; Delta = (1/sqrt 2)[z; 1]; A = [sqrt2; 0]; B = Phi - Delta A~
jsn fixture_ex8712() {
    const double s = 1.0 / std::sqrt(2.0);
    jsn phi{{"rows", 2},
            {"cols", 2},
            {"entries",
             jsn::array({jsn::array({sym_rational(rf_z()),
                                     sym_opaque("a", FactorKind::Sym, rf_z())}),
                         jsn::array({sym_rational(rf_c(1.0)),
                                     sym_opaque("a", FactorKind::Sym, rf_c(-1.0))})})}};
    jsn delta{{"rows", 2},
              {"cols", 1},
              {"entries",
               jsn::array({jsn::array({sym_rational(rf_z() * Complex(s))}),
                           jsn::array({sym_rational(rf_c(s))})})}};
    jsn a{{"rows", 2},
          {"cols", 1},
          {"entries",
           jsn::array({jsn::array({sym_rational(rf_c(std::sqrt(2.0)))}),
                       jsn::array({sym_zero()})})}};
    // B = Phi - Delta A~ = [0 z a; 0 -a]
    jsn b{{"rows", 2},
          {"cols", 2},
          {"entries",
           jsn::array({jsn::array({sym_zero(), sym_opaque("a", FactorKind::Sym, rf_z())}),
                       jsn::array({sym_zero(), sym_opaque("a", FactorKind::Sym, rf_c(-1.0))})})}};
    return jsn{{"phi", phi},
               {"delta", delta},
               {"a", a},
               {"b", b},
               {"declarations", jsn{{"symbols", jsn::array({jsn{{"name", "a"}}})}}},
               {"declared_nc", 1}};
}

jsn fixture_nc_case(bool bounded_type) {
    auto f = [&](const char* n) { return sym_opaque(n, FactorKind::Sym, rf_c(1.0)); };
    jsn corner = bounded_type ? sym_opaque("b", FactorKind::ConjSym, theta_half())
                              : sym_opaque("a", FactorKind::Sym, rf_c(1.0));
    jsn phi{{"rows", 3},
            {"cols", 3},
            {"entries",
             jsn::array({jsn::array({f("f"), f("f"), sym_zero()}),
                         jsn::array({f("g"), f("g"), sym_zero()}),
                         jsn::array({sym_zero(), sym_zero(), corner})})}};
    jsn structure = jsn::array(
        {jsn{{"kind", "declared_column"}, {"rows", jsn::array({0, 1})}, {"cols", jsn::array({0, 1})}},
         jsn{{"kind", bounded_type ? "theta_conj_scalar" : "conj_opaque"},
             {"rows", jsn::array({2})},
             {"cols", jsn::array({2})}}});
    jsn decl{{"symbols",
              jsn::array({jsn{{"name", "f"}}, jsn{{"name", "g"}}, jsn{{"name", "a"}},
                          jsn{{"name", "b"}}})},
             {"inner_columns",
              jsn::array({jsn{{"col", 0},
                              {"symbols", jsn::array({"f", "g"})},
                              {"complementary_trivial", true}}})}};
    return jsn{{"phi", phi}, {"structure", structure}, {"declarations", decl}};
}

jsn fixture_subspace_ex8712() {
    const double s = 1.0 / std::sqrt(2.0);
    jsn phi{{"rows", 2},
            {"cols", 2},
            {"entries",
             jsn::array({jsn::array({sym_rational(rf_z()),
                                     sym_opaque("a", FactorKind::Sym, rf_z())}),
                         jsn::array({sym_rational(rf_c(1.0)),
                                     sym_opaque("a", FactorKind::Sym, rf_c(-1.0))})})}};
    RationalMatrix delta(2, 1);
    delta.at(0, 0) = rf_z() * Complex(s);
    delta.at(1, 0) = rf_c(s);
    return jsn{{"phi", phi}, {"delta", to_json(delta)}};
}

std::vector<CatalogEntry> build_catalog();

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

ReplayResult catalog_replay(const CatalogEntry& entry) {
    ReplayResult out;
    out.name = entry.name;
    out.got = run_command(entry.command, entry.input);
    out.match = out.got.dump() == entry.expected.dump();
    return out;
}

namespace {

// Frozen expected reports (regenerate with `msk catalog --regen` and paste).
extern const char* const kExpectedReports;

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> entries;
    entries.push_back({"rembdbffvfv_4x3", "multiplicity", matrix_4x3(), {}});
    entries.push_back({"rembdbffvfv_4x3_degree", "beurling-degree", matrix_4x3(), {}});
    entries.push_back({"exlema444_column", "char-inner", column_1z(), {}});
    entries.push_back({"exlema444_completed", "char-inner", completed_1z(), {}});
    entries.push_back({"exlema444_complement", "complement", column_1z(), {}});
    entries.push_back({"exlema444_inner_check", "inner-check", column_1z(), {}});
    entries.push_back({"eq7ex_pair", "verify-canonical", fixture_eq7ex(), {}});
    entries.push_back({"eq7exm_theta", "verify-canonical", fixture_eq7exm(), {}});
    entries.push_back({"ex8712_canonical", "verify-canonical", fixture_ex8712(), {}});
    entries.push_back({"ex8712_subspace", "verify-subspace", fixture_subspace_ex8712(), {}});
    entries.push_back({"sec43_nc_case1", "nc", fixture_nc_case(false), {}});
    entries.push_back({"sec43_nc_case2", "nc", fixture_nc_case(true), {}});
    entries.push_back({"col_10_complement", "complement", column_10(), {}});
    entries.push_back({"diag_balpha_oracle", "oracle", diag_blaschke(), {}});
    entries.push_back({"dss_adjoint_blaschke", "dss", adjoint_blaschke_scalar(), {}});
    jsn expected = jsn::parse(kExpectedReports, nullptr, true, true);
    for (auto& e : entries)
        if (expected.contains(e.name)) e.expected = expected[e.name];
    return entries;
}

const char* const kExpectedReports = R"json({"rembdbffvfv_4x3":{"command":"multiplicity","status":"pass","report":{"mu":2,"route":"delta_s-reduction","bounds":{"dim_eprime":3,"dim_eprime_plus_1":4},"delta_sequence":[{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":2}]},{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":1}]},{"constant":[1.0,0.0],"zeros":[]},{"constant":[1.0,0.0],"zeros":[]}]}},"rembdbffvfv_4x3_degree":{"command":"beurling-degree","status":"pass","degree":2,"mu_report":{"mu":2,"route":"delta_s-reduction","bounds":{"dim_eprime":3,"dim_eprime_plus_1":4},"delta_sequence":[{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":2}]},{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":1}]},{"constant":[1.0,0.0],"zeros":[]},{"constant":[1.0,0.0],"zeros":[]}]}},"exlema444_column":{"command":"char-inner","status":"pass","omega":{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":1}]},"m":{"constant":[1.0,0.0],"zeros":[]},"m_divides_omega":true,"witness_g":{"rows":1,"cols":2,"entries":[[{"num":[[1.41421356237,0.0]],"den":[[1.0,0.0]]},{"num":[],"den":[[1.0,0.0]]}]]}},"exlema444_completed":{"command":"char-inner","status":"pass","omega":{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":1}]},"m":{"constant":[1.0,0.0],"zeros":[{"alpha":[0.0,0.0],"mult":1}]},"m_divides_omega":true,"witness_g":{"rows":2,"cols":2,"entries":[[{"num":[[0.0,0.0],[0.707106781187,0.0]],"den":[[1.0,0.0]]},{"num":[[0.707106781187,0.0]],"den":[[1.0,0.0]]}],[{"num":[[0.0,0.0],[0.707106781187,0.0]],"den":[[1.0,0.0]]},{"num":[[-0.707106781187,0.0]],"den":[[1.0,0.0]]}]]}},"exlema444_complement":{"command":"complement","status":"pass","delta_c":{"rows":2,"cols":1,"entries":[[{"num":[[-0.707106781187,0.0]],"den":[[1.0,0.0]]}],[{"num":[[0.0,0.0],[0.707106781187,0.0]],"den":[[1.0,0.0]]}]]},"completed_two_sided":true,"certificates":{"joint":{"algebraic_pass":true,"grid_residual":1.27986526651e-12,"two_sided":true,"two_sided_residual":0.0}}},"exlema444_inner_check":{"command":"inner-check","status":"pass","certificate":{"algebraic_pass":true,"grid_residual":1.27986510279e-12,"two_sided":false,"two_sided_residual":1.0}},"eq7ex_pair":{"command":"verify-canonical","status":"pass","conditions":{"inner":"PASS","coprime":"PASS","delta_star_b":"PASS","reconstruction":"PASS","nc_bound":"PASS"},"coprime_assumed":false,"nc":2,"derived":"ker H*_{flip Phi} = Delta H^2 (uniqueness of the decomposition)"},"eq7exm_theta":{"command":"verify-canonical","status":"pass","conditions":{"inner":"PASS","coprime":"PASS","delta_star_b":"PASS","reconstruction":"PASS","nc_bound":"PASS"},"coprime_assumed":true,"nc":2,"assumptions":["declared opaque columns of Delta taken as inner (ASSUMED)","coprimeness ASSUMED with caller witness: tilde(theta) and tilde(a) are coprime, so Delta and A are right coprime"],"derived":"ker H*_{flip Phi} = Delta H^2 (uniqueness of the decomposition)"},"ex8712_canonical":{"command":"verify-canonical","status":"pass","conditions":{"inner":"PASS","coprime":"PASS","delta_star_b":"PASS","reconstruction":"PASS","nc_bound":"PASS"},"coprime_assumed":false,"nc":1,"assumptions":["nc upper bound ASSUMED by declaration"],"derived":"ker H*_{flip Phi} = Delta H^2 (uniqueness of the decomposition)"},"ex8712_subspace":{"command":"verify-subspace","status":"pass","verdict":"PASS"},"sec43_nc_case1":{"command":"nc","status":"pass","nc":1,"theta":{"rows":3,"cols":1,"entries":[[[{"coef":{"num":[[1.0,0.0]],"den":[[1.0,0.0]]},"factor":"u:f"}]],[[{"coef":{"num":[[1.0,0.0]],"den":[[1.0,0.0]]},"factor":"u:g"}]],[[]]]}},"sec43_nc_case2":{"command":"nc","status":"pass","nc":2,"theta":{"rows":3,"cols":2,"entries":[[[{"coef":{"num":[[1.0,0.0]],"den":[[1.0,0.0]]},"factor":"u:f"}],[]],[[{"coef":{"num":[[1.0,0.0]],"den":[[1.0,0.0]]},"factor":"u:g"}],[]],[[],[{"coef":{"num":[[1.0,0.0],[-2.0,0.0]],"den":[[-2.0,0.0],[1.0,0.0]]},"factor":"1"}]]]}},"col_10_complement":{"command":"complement","status":"pass","delta_c":{"rows":2,"cols":1,"entries":[[{"num":[],"den":[[1.0,0.0]]}],[{"num":[[1.0,0.0]],"den":[[1.0,0.0]]}]]},"completed_two_sided":true,"certificates":{"joint":{"algebraic_pass":true,"grid_residual":0.0,"two_sided":true,"two_sided_residual":0.0}}},"diag_balpha_oracle":{"command":"oracle","status":"pass","engine_det_degree":2,"hankel_rank":2,"rank_stabilized":true,"section_size":24},"dss_adjoint_blaschke":{"command":"dss","status":"pass","delta":{"rows":1,"cols":1,"entries":[[{"num":[[1.0,0.0]],"den":[[1.0,0.0]]}]]},"a":{"rows":1,"cols":1,"entries":[[{"num":[[1.0,0.0],[-2.0,0.0]],"den":[[-2.0,0.0],[1.0,0.0]]}]]},"certificates":{"inner":{"algebraic_pass":true,"grid_residual":0.0,"two_sided":true,"two_sided_residual":0.0},"coprime":{"coprime":true,"undecided":false,"toeplitz_kernel_dim":0,"pointwise_min_sigma":1.0,"routes_agree":true},"residuals":{"reconstruction":0.0}}}})json";

}  // namespace

}  // namespace msk
