#pragma once

#include <Eigen/Dense>
#include <vector>

#include "msk/rational.hpp"

namespace msk {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

/// Matrix of rational functions, row major.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(int rows, int cols);

    static RationalMatrix identity(int n);
    static RationalMatrix zero(int rows, int cols) { return RationalMatrix(rows, cols); }
    static RationalMatrix from_constant(const MatrixXcd& c);
    static RationalMatrix scalar(const RationalFunction& r);  // 1x1

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    RationalFunction& at(int i, int j) { return e_[i * cols_ + j]; }
    const RationalFunction& at(int i, int j) const { return e_[i * cols_ + j]; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalFunction& s) const;
    RationalMatrix operator*(Complex s) const;
    RationalMatrix operator*(const MatrixXcd& c) const;  // right constant
    friend RationalMatrix operator*(const MatrixXcd& c, const RationalMatrix& m);

    RationalMatrix transpose() const;
    /// M~(z) = M(1/conj z)^*: entrywise para-conjugate of the transpose.
    RationalMatrix para_conjugate() const;
    /// M^tilde(z) = M(conj z)^*: coefficient-conjugate transpose (analytic when M is).
    RationalMatrix tilde() const;
    /// M(1/z): boundary values of the flip M(conj z).
    RationalMatrix breve_symbol() const;

    MatrixXcd eval(Complex z) const;

    bool is_zero(double rel = 0.0) const;
    bool analytic_in_closed_disk(double margin = -1.0) const;
    bool linf_admissible() const;
    int max_entry_degree() const;

    RationalFunction det() const;  // Laplace expansion (small sizes)
    /// all k x k minor determinants, rows-major over C(rows,k) x C(cols,k)
    std::vector<RationalFunction> minors(int k) const;
    RationalMatrix inverse() const;  // adjugate / det

    RationalMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
    RationalMatrix col(int j) const;
    static RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
    static RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);
    static RationalMatrix block_diag(const RationalMatrix& a, const RationalMatrix& b);

private:
    int rows_, cols_;
    std::vector<RationalFunction> e_;
};

struct InnerCertificate {
    bool algebraic_pass = false;
    double grid_residual = 0.0;
    bool two_sided = false;
    double two_sided_residual = 0.0;
};

/// Delta~ Delta = I test, algebraic (after reduction) and on the grid;
/// two_sided additionally tests Delta Delta~ = I.
InnerCertificate check_inner(const RationalMatrix& delta);

/// min over the grid of the smallest singular value of Psi(z).
double complementing_infimum(const RationalMatrix& psi);

struct BlockCoefficients {
    int k_lo = 0, k_hi = -1;
    std::vector<MatrixXcd> coeff;
    const MatrixXcd& at(int k) const { return coeff[k - k_lo]; }
};

BlockCoefficients fourier_block_coeffs(const RationalMatrix& m, int k_lo, int k_hi);

enum class SectionKind { hankel, toeplitz };

/// Finite sections in the monomial basis: hankel block (i,j) = F(-i-j-1),
/// toeplitz block (i,j) = F(i-j), i,j in [0,N).
MatrixXcd truncated_operator(const RationalMatrix& phi, int N, SectionKind kind);

int numeric_rank(const MatrixXcd& m, double rel_threshold = 0.0);
/// Hankel section rank at sizes N and N+right-step agree -> stabilized.
struct StabilizedRank {
    int rank = 0;
    bool stabilized = false;
};
StabilizedRank stabilized_hankel_rank(const RationalMatrix& phi, int N);

/// H^2 inner product of two n x 1 columns with entries analytic in the
/// closed disk; exact residue computation.
Complex h2_inner_product(const RationalMatrix& f, const RationalMatrix& g);

std::vector<Complex> circle_grid(int size = 0);

double grid_sup_distance(const RationalMatrix& a, const RationalMatrix& b);

struct Alignment {
    MatrixXcd unitary;      // right factor U with got*U ~ want
    double sup_error = 0.0; // grid sup of got*U - want
};

/// Best constant right unitary aligning two matrices equal up to that
/// freedom (inner functions from different normalizations).
Alignment align_right_unitary(const RationalMatrix& got, const RationalMatrix& want);

}  // namespace msk
