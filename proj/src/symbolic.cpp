#include "msk/symbolic.hpp"

#include <algorithm>

#include "msk/beurling.hpp"
#include "msk/blaschke.hpp"

namespace msk {

SymbolicEntry::SymbolicEntry(RationalFunction r) {
    if (!r.is_zero()) terms_.push_back({std::move(r), FactorKind::One, ""});
}

SymbolicEntry::SymbolicEntry(std::vector<SymTerm> terms) : terms_(std::move(terms)) { simplify(); }

SymbolicEntry SymbolicEntry::opaque(const std::string& name, FactorKind kind,
                                    RationalFunction coef) {
    SymbolicEntry e;
    e.terms_.push_back({std::move(coef), kind, name});
    e.simplify();
    return e;
}

bool SymbolicEntry::is_rational() const {
    for (const auto& t : terms_)
        if (t.kind != FactorKind::One) return false;
    return true;
}

RationalFunction SymbolicEntry::rational_part() const {
    for (const auto& t : terms_)
        if (t.kind == FactorKind::One) return t.coef;
    return RationalFunction();
}

void SymbolicEntry::simplify() {
    std::vector<SymTerm> out;
    for (auto& t : terms_) {
        if (t.coef.is_zero(1e-12)) continue;
        bool merged = false;
        for (auto& o : out) {
            if (o.kind == t.kind && o.sym == t.sym) {
                o.coef = o.coef + t.coef;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(t));
    }
    // drop terms whose coefficients cancelled out
    std::vector<SymTerm> kept;
    for (auto& t : out)
        if (!t.coef.is_zero(1e-12)) kept.push_back(std::move(t));
    std::sort(kept.begin(), kept.end(), [](const SymTerm& a, const SymTerm& b) {
        if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        return a.sym < b.sym;
    });
    terms_ = std::move(kept);
}

SymbolicEntry SymbolicEntry::operator+(const SymbolicEntry& o) const {
    std::vector<SymTerm> terms = terms_;
    terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
    return SymbolicEntry(std::move(terms));
}

SymbolicEntry SymbolicEntry::operator-() const {
    std::vector<SymTerm> terms = terms_;
    for (auto& t : terms) t.coef = -t.coef;
    return SymbolicEntry(std::move(terms));
}

SymbolicEntry SymbolicEntry::operator-(const SymbolicEntry& o) const { return *this + (-o); }

SymbolicEntry SymbolicEntry::operator*(const SymbolicEntry& o) const {
    std::vector<SymTerm> terms;
    for (const auto& a : terms_) {
        for (const auto& b : o.terms_) {
            RationalFunction coef = a.coef * b.coef;
            if (coef.is_zero(1e-12)) continue;
            if (a.kind == FactorKind::One) {
                terms.push_back({std::move(coef), b.kind, b.sym});
            } else if (b.kind == FactorKind::One) {
                terms.push_back({std::move(coef), a.kind, a.sym});
            } else {
                throw Error(Errc::StructureNotSupported,
                            "product of opaque factors " + a.sym + " and " + b.sym +
                                " is outside the term language");
            }
        }
    }
    return SymbolicEntry(std::move(terms));
}

SymbolicEntry SymbolicEntry::operator*(const RationalFunction& r) const {
    std::vector<SymTerm> terms = terms_;
    for (auto& t : terms) t.coef = t.coef * r;
    return SymbolicEntry(std::move(terms));
}

SymbolicEntry SymbolicEntry::para_conjugate() const {
    std::vector<SymTerm> terms = terms_;
    for (auto& t : terms) {
        t.coef = t.coef.para_conjugate();
        if (t.kind == FactorKind::Sym)
            t.kind = FactorKind::ConjSym;
        else if (t.kind == FactorKind::ConjSym)
            t.kind = FactorKind::Sym;
    }
    return SymbolicEntry(std::move(terms));
}

SymbolicMatrix::SymbolicMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

SymbolicMatrix SymbolicMatrix::from_rational(const RationalMatrix& m) {
    SymbolicMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.at(i, j) = SymbolicEntry(m.at(i, j));
    return out;
}

bool SymbolicMatrix::is_rational() const {
    for (const auto& e : e_)
        if (!e.is_rational()) return false;
    return true;
}

RationalMatrix SymbolicMatrix::rational_part() const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).rational_part();
    return out;
}

SymbolicMatrix SymbolicMatrix::operator+(const SymbolicMatrix& o) const {
    SymbolicMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

SymbolicMatrix SymbolicMatrix::operator-(const SymbolicMatrix& o) const {
    SymbolicMatrix out(rows_, cols_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

SymbolicMatrix SymbolicMatrix::operator*(const SymbolicMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::ParseError, "symbolic shape mismatch");
    SymbolicMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            SymbolicEntry acc;
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

SymbolicMatrix SymbolicMatrix::para_conjugate() const {
    SymbolicMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).para_conjugate();
    return out;
}

bool SymbolicMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

SymbolicMatrix SymbolicMatrix::submatrix(const std::vector<int>& rows,
                                         const std::vector<int>& cols) const {
    SymbolicMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

Tri sym_analytic_check(const SymbolicEntry& e) {
    bool unknown = false;
    for (const auto& t : e.terms()) {
        switch (t.kind) {
            case FactorKind::ConjSym:
                return Tri::No;  // conj(u) is not of bounded type, a fortiori not H^2
            case FactorKind::One:
                if (!t.coef.analytic_in_closed_disk()) return Tri::No;
                break;
            case FactorKind::Sym:
                if (!t.coef.analytic_in_closed_disk()) unknown = true;
                break;
        }
    }
    return unknown ? Tri::Unknown : Tri::Yes;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

Verdict verify_subspace_inclusion(const RationalMatrix& delta, const SymbolicMatrix& phi) {
    if (phi.rows() != delta.rows()) throw Error(Errc::ParseError, "shape mismatch");
    SymbolicMatrix prod = phi.para_conjugate() * SymbolicMatrix::from_rational(delta);
    bool unknown = false;
    for (int i = 0; i < prod.rows(); ++i)
        for (int j = 0; j < prod.cols(); ++j) {
            switch (sym_analytic_check(prod.at(i, j))) {
                case Tri::No: return Verdict::Fail;
                case Tri::Unknown: unknown = true; break;
                case Tri::Yes: break;
            }
        }
    return unknown ? Verdict::Undecided : Verdict::Pass;
}

namespace {

const DeclaredInnerColumn* find_declared(const Declarations& decl, int col) {
    for (const auto& d : decl.inner_columns)
        if (d.col == col) return &d;
    return nullptr;
}

bool column_is_rational(const SymbolicMatrix& m, int col) {
    for (int i = 0; i < m.rows(); ++i)
        if (!m.at(i, col).is_rational()) return false;
    return true;
}

}  // namespace

NcResult nc_structured(const SymbolicMatrix& phi, const std::vector<NcBlock>& structure,
                       const Declarations& decl) {
    NcResult out;
    int total = 0;
    std::vector<SymbolicMatrix> theta_blocks;
    std::vector<std::vector<int>> theta_rows;
    for (const auto& blk : structure) {
        SymbolicMatrix sub = phi.submatrix(blk.block_rows, blk.block_cols);
        switch (blk.kind) {
            case NcBlock::Kind::Rational: {
                if (!sub.is_rational())
                    throw Error(Errc::StructureNotSupported,
                                "block declared rational has opaque entries");
                RationalMatrix r = sub.rational_part();
                RationalMatrix theta = adjoint_hankel_kernel_inner(r);
                total += theta.cols();  // square: ambient row dimension
                theta_blocks.push_back(SymbolicMatrix::from_rational(theta));
                theta_rows.push_back(blk.block_rows);
                break;
            }
            case NcBlock::Kind::ThetaConjScalar: {
                if (blk.block_rows.size() != 1 || blk.block_cols.size() != 1)
                    throw Error(Errc::StructureNotSupported, "scalar block must be 1x1");
                const SymbolicEntry& e = sub.at(0, 0);
                BlaschkeProduct theta;
                bool found = false;
                for (const auto& t : e.terms()) {
                    if (t.kind == FactorKind::ConjSym || t.kind == FactorKind::One) {
                        // inner part of the rational coefficient is the block theta
                        theta = inner_outer_scalar(t.coef).inner;
                        found = true;
                    }
                }
                if (!found)
                    throw Error(Errc::StructureNotSupported, "no usable scalar coefficient");
                total += 1;
                theta_blocks.push_back(
                    SymbolicMatrix::from_rational(RationalMatrix::scalar(theta.to_rational())));
                theta_rows.push_back(blk.block_rows);
                break;
            }
            case NcBlock::Kind::ConjOpaque: {
                // kernel of a conj(u) scalar Hankel is trivial
                total += 0;
                break;
            }
            case NcBlock::Kind::DeclaredColumn: {
                if (blk.block_cols.empty())
                    throw Error(Errc::StructureNotSupported, "declared column block is empty");
                const DeclaredInnerColumn* d = find_declared(decl, blk.block_cols.front());
                if (!d || !d->complementary_trivial) {
                    out.nc = std::nullopt;
                    return out;
                }
                total += 1;  // one generator per declared column
                SymbolicMatrix colblk(static_cast<int>(blk.block_rows.size()), 1);
                for (size_t i = 0; i < blk.block_rows.size(); ++i)
                    colblk.at(static_cast<int>(i), 0) =
                        phi.at(blk.block_rows[i], blk.block_cols.front());
                theta_blocks.push_back(colblk);
                theta_rows.push_back(blk.block_rows);
                break;
            }
        }
    }
    out.nc = total;
    if (!theta_blocks.empty()) {
        int cols = 0;
        for (const auto& b : theta_blocks) cols += b.cols();
        SymbolicMatrix theta(phi.rows(), cols);
        int c0 = 0;
        for (size_t b = 0; b < theta_blocks.size(); ++b) {
            for (int i = 0; i < theta_blocks[b].rows(); ++i)
                for (int j = 0; j < theta_blocks[b].cols(); ++j)
                    theta.at(theta_rows[b][i], c0 + j) = theta_blocks[b].at(i, j);
            c0 += theta_blocks[b].cols();
        }
        out.theta = theta;
    }
    return out;
}

Verdict CanonicalVerdicts::overall() const {
    Verdict parts[] = {inner, coprime, delta_star_b, reconstruction, nc_bound};
    bool undecided = false;
    for (Verdict v : parts) {
        if (v == Verdict::Fail) return Verdict::Fail;
        if (v == Verdict::Undecided) undecided = true;
    }
    return undecided ? Verdict::Undecided : Verdict::Pass;
}

CanonicalVerdicts verify_canonical(const SymbolicMatrix& phi, const SymbolicMatrix& delta,
                                   const SymbolicMatrix& a, const SymbolicMatrix& b,
                                   const Declarations& decl,
                                   const std::vector<NcBlock>* structure) {
    CanonicalVerdicts out;
    const int r = delta.cols();

    // (i) Delta inner: rational part checked exactly, declared opaque
    // columns taken on assertion
    std::vector<int> rational_cols, opaque_cols;
    for (int j = 0; j < r; ++j)
        (column_is_rational(delta, j) ? rational_cols : opaque_cols).push_back(j);
    bool inner_ok = true, inner_assumed = false;
    for (int j : opaque_cols) {
        if (!find_declared(decl, j)) {
            inner_ok = false;
            break;
        }
        inner_assumed = true;
    }
    if (inner_ok && !rational_cols.empty()) {
        std::vector<int> all_rows(delta.rows());
        for (int i = 0; i < delta.rows(); ++i) all_rows[i] = i;
        RationalMatrix sub = delta.submatrix(all_rows, rational_cols).rational_part();
        InnerCertificate cert = check_inner(sub);
        if (!cert.algebraic_pass) inner_ok = false;
        // rational x opaque cross-Gram entries must vanish structurally
        if (inner_ok) {
            for (int jr : rational_cols)
                for (int jo : opaque_cols) {
                    SymbolicEntry acc;
                    for (int i = 0; i < delta.rows(); ++i)
                        acc = acc + delta.at(i, jr).para_conjugate() * delta.at(i, jo);
                    if (!acc.is_zero()) inner_ok = false;
                }
        }
    }
    out.inner = inner_ok ? Verdict::Pass : Verdict::Fail;
    if (inner_assumed && inner_ok)
        out.assumptions.push_back("declared opaque columns of Delta taken as inner (ASSUMED)");

    // (iii) Delta~ B = 0 symbolically
    SymbolicMatrix dtb = delta.para_conjugate() * b;
    out.delta_star_b = dtb.is_zero() ? Verdict::Pass : Verdict::Fail;

    // reconstruction Phi - (Delta A~ + B) = 0
    SymbolicMatrix recon = phi - (delta * a.para_conjugate() + b);
    out.reconstruction = recon.is_zero() ? Verdict::Pass : Verdict::Fail;

    // (ii) right coprimeness
    if (delta.is_rational() && a.is_rational()) {
        CoprimeCertificate cc = right_coprime(delta.rational_part(), a.rational_part());
        out.coprime = cc.undecided ? Verdict::Undecided
                                   : (cc.coprime ? Verdict::Pass : Verdict::Fail);
    } else if (decl.coprime_witness) {
        out.coprime = Verdict::Pass;
        out.coprime_assumed = true;
        out.assumptions.push_back("coprimeness ASSUMED with caller witness: " +
                                  *decl.coprime_witness);
    } else {
        out.coprime = Verdict::Undecided;
    }

    // (iv) nc bound via the structured computation when available
    if (structure) {
        NcResult nc = nc_structured(phi, *structure, decl);
        if (nc.nc) {
            out.nc_value = nc.nc;
            out.nc_bound = (*nc.nc <= r) ? Verdict::Pass : Verdict::Fail;
        }
    }
    out.kernel_conclusion = out.overall() == Verdict::Pass;
    return out;
}

}  // namespace msk
