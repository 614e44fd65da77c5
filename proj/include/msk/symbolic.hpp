#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msk/rational_matrix.hpp"

namespace msk {

/// Opaque H^infty symbol whose conjugate is not of bounded type.
struct OpaqueSymbol {
    std::string name;
    bool in_hinfinity = true;
};

enum class FactorKind { One, Sym, ConjSym };

struct SymTerm {
    RationalFunction coef;
    FactorKind kind = FactorKind::One;
    std::string sym;  // empty for One
};

/// Sum of rational x {1, u, conj(u)} terms; simplification uses rational
/// identities only (conj(z) = 1/z on the circle lives in the coefficients).
class SymbolicEntry {
public:
    SymbolicEntry() = default;
    explicit SymbolicEntry(RationalFunction r);
    explicit SymbolicEntry(std::vector<SymTerm> terms);
    static SymbolicEntry opaque(const std::string& name, FactorKind kind = FactorKind::Sym,
                                RationalFunction coef = RationalFunction::one());

    const std::vector<SymTerm>& terms() const { return terms_; }
    bool is_rational() const;
    bool is_zero() const { return terms_.empty(); }
    RationalFunction rational_part() const;  // the One-term coefficient

    SymbolicEntry operator+(const SymbolicEntry& o) const;
    SymbolicEntry operator-(const SymbolicEntry& o) const;
    /// StructureNotSupported when a nonzero u * v or u * conj(v) product forms.
    SymbolicEntry operator*(const SymbolicEntry& o) const;
    SymbolicEntry operator*(const RationalFunction& r) const;
    SymbolicEntry operator-() const;
    /// termwise: coef -> coef~, u <-> conj(u)
    SymbolicEntry para_conjugate() const;

    void simplify();

private:
    std::vector<SymTerm> terms_;
};

class SymbolicMatrix {
public:
    SymbolicMatrix() : rows_(0), cols_(0) {}
    SymbolicMatrix(int rows, int cols);
    static SymbolicMatrix from_rational(const RationalMatrix& m);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    SymbolicEntry& at(int i, int j) { return e_[i * cols_ + j]; }
    const SymbolicEntry& at(int i, int j) const { return e_[i * cols_ + j]; }

    bool is_rational() const;
    RationalMatrix rational_part() const;

    SymbolicMatrix operator+(const SymbolicMatrix& o) const;
    SymbolicMatrix operator-(const SymbolicMatrix& o) const;
    SymbolicMatrix operator*(const SymbolicMatrix& o) const;
    SymbolicMatrix para_conjugate() const;
    bool is_zero() const;

    SymbolicMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;

private:
    int rows_, cols_;
    std::vector<SymbolicEntry> e_;
};

enum class Tri { Yes, No, Unknown };

/// Conservative analyticity: yes when all coefficients are analytic and no
/// conj(u) survives; no when a nonzero conj(u) term or non-analytic rational
/// part survives; unknown otherwise.
Tri sym_analytic_check(const SymbolicEntry& e);

enum class Verdict { Pass, Fail, Undecided };

const char* verdict_name(Verdict v);

/// Certifies Delta H^2 subset of ker H*_{flip(Phi)} by checking that every
/// entry of Phi~ Delta is analytic.
Verdict verify_subspace_inclusion(const RationalMatrix& delta, const SymbolicMatrix& phi);

/// Caller-asserted facts about opaque column blocks of Delta (mirrors the
/// declared [f; g]-type columns: inner, complementary factor zero).
struct DeclaredInnerColumn {
    int col = 0;                       // column index of Delta
    std::vector<std::string> symbols;  // opaque symbols appearing in the column
    bool complementary_trivial = true;
};

struct Declarations {
    std::vector<OpaqueSymbol> symbols;
    std::vector<DeclaredInnerColumn> inner_columns;
    /// declared right-coprimeness witness note ("Delta~H^2 v A~H^2 = H^2")
    std::optional<std::string> coprime_witness;
};

/// Structured block description for the nc computation.
struct NcBlock {
    enum class Kind { Rational, ThetaConjScalar, ConjOpaque, DeclaredColumn } kind;
    std::vector<int> block_rows;
    std::vector<int> block_cols;
};

struct NcResult {
    std::optional<int> nc;
    std::optional<SymbolicMatrix> theta;  // blockwise kernel inner, when assembled
};

NcResult nc_structured(const SymbolicMatrix& phi, const std::vector<NcBlock>& structure,
                       const Declarations& decl);

struct CanonicalVerdicts {
    Verdict inner = Verdict::Undecided;           // (i)
    Verdict coprime = Verdict::Undecided;         // (ii)
    bool coprime_assumed = false;
    Verdict delta_star_b = Verdict::Undecided;    // (iii)
    Verdict reconstruction = Verdict::Undecided;  // Phi = Delta A~ + B
    Verdict nc_bound = Verdict::Undecided;        // (iv)
    std::optional<int> nc_value;
    bool kernel_conclusion = false;  // PASS => ker H*_{flip Phi} = Delta H^2
    Verdict overall() const;
    std::vector<std::string> assumptions;
};

CanonicalVerdicts verify_canonical(const SymbolicMatrix& phi, const SymbolicMatrix& delta,
                                   const SymbolicMatrix& a, const SymbolicMatrix& b,
                                   const Declarations& decl,
                                   const std::vector<NcBlock>* structure = nullptr);

}  // namespace msk
