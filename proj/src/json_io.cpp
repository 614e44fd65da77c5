#include "msk/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace msk {

double round12(double x) {
    if (x == 0.0) return 0.0;  // also normalizes -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

jsn complex_to_json(Complex c) { return jsn::array({round12(c.real()), round12(c.imag())}); }

Complex complex_from_json(const jsn& j) {
    if (j.is_number()) return Complex(j.get<double>(), 0.0);
    if (!j.is_array() || j.size() != 2)
        throw Error(Errc::ParseError, "complex value must be [re, im]");
    return Complex(j[0].get<double>(), j[1].get<double>());
}

jsn to_json(const Polynomial& p) {
    jsn arr = jsn::array();
    for (int k = 0; k <= p.degree(); ++k) arr.push_back(complex_to_json(p.coeff(k)));
    return arr;
}

Polynomial polynomial_from_json(const jsn& j) {
    if (!j.is_array()) throw Error(Errc::ParseError, "polynomial must be an array of [re, im]");
    std::vector<Complex> c;
    c.reserve(j.size());
    for (const auto& x : j) c.push_back(complex_from_json(x));
    return Polynomial(std::move(c));
}

jsn to_json(const RationalFunction& r) {
    return jsn{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

RationalFunction rational_from_json(const jsn& j) {
    if (j.is_array() || j.is_number()) {
        // bare polynomial or scalar shorthand
        if (j.is_number()) return RationalFunction::constant(Complex(j.get<double>(), 0.0));
        return RationalFunction(polynomial_from_json(j), {});
    }
    if (!j.contains("num") || !j.contains("den"))
        throw Error(Errc::ParseError, "rational needs num and den");
    return RationalFunction::from_num_den(polynomial_from_json(j["num"]), polynomial_from_json(j["den"]));
}

jsn to_json(const BlaschkeProduct& b) {
    jsn zeros = jsn::array();
    for (const auto& [a, m] : b.zeros())
        zeros.push_back(jsn{{"alpha", complex_to_json(a)}, {"mult", m}});
    return jsn{{"constant", complex_to_json(b.constant())}, {"zeros", zeros}};
}

BlaschkeProduct blaschke_from_json(const jsn& j) {
    Complex c(1.0, 0.0);
    if (j.contains("constant")) c = complex_from_json(j["constant"]);
    std::vector<std::pair<Complex, int>> zeros;
    if (j.contains("zeros"))
        for (const auto& z : j["zeros"])
            zeros.emplace_back(complex_from_json(z.at("alpha")), z.value("mult", 1));
    return BlaschkeProduct(c, std::move(zeros));
}

jsn to_json(const RationalMatrix& m) {
    jsn entries = jsn::array();
    for (int i = 0; i < m.rows(); ++i) {
        jsn row = jsn::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(row);
    }
    return jsn{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

RationalMatrix matrix_from_json(const jsn& j) {
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw Error(Errc::ParseError, "matrix needs rows, cols, entries");
    int rows = j["rows"].get<int>(), cols = j["cols"].get<int>();
    RationalMatrix m(rows, cols);
    const auto& entries = j["entries"];
    if (static_cast<int>(entries.size()) != rows)
        throw Error(Errc::ParseError, "entry row count mismatch");
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[i].size()) != cols)
            throw Error(Errc::ParseError, "entry column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(i, c) = rational_from_json(entries[i][c]);
    }
    return m;
}

jsn to_json(const SymbolicEntry& e) {
    jsn arr = jsn::array();
    for (const auto& t : e.terms()) {
        std::string factor = "1";
        if (t.kind == FactorKind::Sym) factor = "u:" + t.sym;
        if (t.kind == FactorKind::ConjSym) factor = "conj:" + t.sym;
        arr.push_back(jsn{{"coef", to_json(t.coef)}, {"factor", factor}});
    }
    return arr;
}

SymbolicEntry symbolic_entry_from_json(const jsn& j) {
    std::vector<SymTerm> terms;
    for (const auto& t : j) {
        SymTerm term;
        term.coef = rational_from_json(t.at("coef"));
        std::string f = t.value("factor", "1");
        if (f == "1") {
            term.kind = FactorKind::One;
        } else if (f.rfind("u:", 0) == 0) {
            term.kind = FactorKind::Sym;
            term.sym = f.substr(2);
        } else if (f.rfind("conj:", 0) == 0) {
            term.kind = FactorKind::ConjSym;
            term.sym = f.substr(5);
        } else {
            throw Error(Errc::ParseError, "unknown symbolic factor " + f);
        }
        terms.push_back(std::move(term));
    }
    return SymbolicEntry(std::move(terms));
}

jsn to_json(const SymbolicMatrix& m) {
    jsn entries = jsn::array();
    for (int i = 0; i < m.rows(); ++i) {
        jsn row = jsn::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
        entries.push_back(row);
    }
    return jsn{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

SymbolicMatrix symbolic_matrix_from_json(const jsn& j) {
    int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
    SymbolicMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) m.at(i, c) = symbolic_entry_from_json(entries[i][c]);
    return m;
}

Declarations declarations_from_json(const jsn& j) {
    Declarations d;
    if (j.contains("symbols"))
        for (const auto& s : j["symbols"])
            d.symbols.push_back({s.at("name").get<std::string>(), s.value("in_hinf", true)});
    if (j.contains("inner_columns"))
        for (const auto& c : j["inner_columns"]) {
            DeclaredInnerColumn col;
            col.col = c.at("col").get<int>();
            if (c.contains("symbols"))
                for (const auto& s : c["symbols"]) col.symbols.push_back(s.get<std::string>());
            col.complementary_trivial = c.value("complementary_trivial", true);
            d.inner_columns.push_back(std::move(col));
        }
    if (j.contains("coprime_witness")) d.coprime_witness = j["coprime_witness"].get<std::string>();
    return d;
}

std::vector<NcBlock> structure_from_json(const jsn& j) {
    std::vector<NcBlock> out;
    for (const auto& b : j) {
        NcBlock blk;
        std::string kind = b.at("kind").get<std::string>();
        if (kind == "rational")
            blk.kind = NcBlock::Kind::Rational;
        else if (kind == "theta_conj_scalar")
            blk.kind = NcBlock::Kind::ThetaConjScalar;
        else if (kind == "conj_opaque")
            blk.kind = NcBlock::Kind::ConjOpaque;
        else if (kind == "declared_column")
            blk.kind = NcBlock::Kind::DeclaredColumn;
        else
            throw Error(Errc::ParseError, "unknown block kind " + kind);
        for (const auto& r : b.at("rows")) blk.block_rows.push_back(r.get<int>());
        for (const auto& c : b.at("cols")) blk.block_cols.push_back(c.get<int>());
        out.push_back(std::move(blk));
    }
    return out;
}

jsn to_json(const InnerCertificate& c) {
    return jsn{{"algebraic_pass", c.algebraic_pass},
               {"grid_residual", round12(c.grid_residual)},
               {"two_sided", c.two_sided},
               {"two_sided_residual", round12(c.two_sided_residual)}};
}

jsn to_json(const CoprimeCertificate& c) {
    return jsn{{"coprime", c.coprime},
               {"undecided", c.undecided},
               {"toeplitz_kernel_dim", c.toeplitz_kernel_dim},
               {"pointwise_min_sigma", round12(c.pointwise_min_sigma)},
               {"routes_agree", c.routes_agree}};
}

jsn to_json(const DeltaSequence& s) {
    jsn arr = jsn::array();
    for (const auto& b : s.delta) arr.push_back(to_json(b));
    return arr;
}

jsn to_json(const MultiplicityReport& r) {
    jsn out{{"mu", r.mu},
            {"route", route_name(r.route)},
            {"bounds", jsn{{"dim_eprime", r.dim_eprime}, {"dim_eprime_plus_1", r.dim_eprime + 1}}},
            {"delta_sequence", to_json(r.seq)}};
    if (r.zero_space) out["note"] = r.note;
    return out;
}

std::string section_to_csv(const MatrixXcd& m) {
    std::ostringstream os;
    for (long i = 0; i < m.rows(); ++i) {
        for (long j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            char buf[80];
            std::snprintf(buf, sizeof buf, "%.12g,%.12g", round12(m(i, j).real()),
                          round12(m(i, j).imag()));
            os << buf;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace msk
