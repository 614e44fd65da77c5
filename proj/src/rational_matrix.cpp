#include "msk/rational_matrix.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <climits>
#include <cmath>

namespace msk {

std::vector<Complex> circle_grid(int size) {
    if (size <= 0) size = tol().grid_size;
    std::vector<Complex> g;
    g.reserve(size);
    for (int k = 0; k < size; ++k) {
        double t = 2.0 * M_PI * k / size;
        g.emplace_back(std::cos(t), std::sin(t));
    }
    return g;
}

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction::one();
    return m;
}

RationalMatrix RationalMatrix::from_constant(const MatrixXcd& c) {
    RationalMatrix m(static_cast<int>(c.rows()), static_cast<int>(c.cols()));
    for (int i = 0; i < m.rows_; ++i)
        for (int j = 0; j < m.cols_; ++j) m.at(i, j) = RationalFunction::constant(c(i, j));
    return m;
}

RationalMatrix RationalMatrix::scalar(const RationalFunction& r) {
    RationalMatrix m(1, 1);
    m.at(0, 0) = r;
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) throw Error(Errc::ParseError, "matrix shape mismatch in product");
    RationalMatrix out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < o.cols_; ++j) {
            RationalFunction acc;
            for (int k = 0; k < cols_; ++k) acc = acc + at(i, k) * o.at(k, j);
            out.at(i, j) = acc;
        }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.e_[i] = e_[i] + o.e_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.e_[i] = e_[i] - o.e_[i];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalFunction& s) const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.e_[i] = e_[i] * s;
    return out;
}

RationalMatrix RationalMatrix::operator*(Complex s) const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_ * cols_; ++i) out.e_[i] = e_[i] * s;
    return out;
}

RationalMatrix RationalMatrix::operator*(const MatrixXcd& c) const {
    return *this * RationalMatrix::from_constant(c);
}

RationalMatrix operator*(const MatrixXcd& c, const RationalMatrix& m) {
    return RationalMatrix::from_constant(c) * m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

RationalMatrix RationalMatrix::para_conjugate() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).para_conjugate();
    return out;
}

RationalMatrix RationalMatrix::tilde() const {
    RationalMatrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j).tilde_scalar();
    return out;
}

RationalMatrix RationalMatrix::breve_symbol() const {
    RationalMatrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j).breve_symbol();
    return out;
}

MatrixXcd RationalMatrix::eval(Complex z) const {
    MatrixXcd m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = at(i, j)(z);
    return m;
}

bool RationalMatrix::is_zero(double rel) const {
    for (const auto& e : e_)
        if (!e.is_zero(rel)) return false;
    return true;
}

bool RationalMatrix::analytic_in_closed_disk(double margin) const {
    for (const auto& e : e_)
        if (!e.analytic_in_closed_disk(margin)) return false;
    return true;
}

bool RationalMatrix::linf_admissible() const {
    for (const auto& e : e_)
        if (!e.linf_admissible()) return false;
    return true;
}

int RationalMatrix::max_entry_degree() const {
    int d = 0;
    for (const auto& e : e_) d = std::max({d, e.num().degree(), e.den_degree()});
    return d;
}

namespace {

void enumerate_subsets(int n, int k, std::vector<std::vector<int>>& out) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k == 0) {
        out.push_back({});
        return;
    }
    while (true) {
        out.push_back(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

RationalFunction det_laplace(const RationalMatrix& m) {
    const int n = m.rows();
    if (n == 0) return RationalFunction::one();
    if (n == 1) return m.at(0, 0);
    if (n == 2) return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0);
    RationalFunction acc;
    std::vector<int> rest;
    for (int i = 1; i < n; ++i) rest.push_back(i);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        std::vector<int> sub_cols;
        for (int c = 0; c < n; ++c)
            if (c != j) sub_cols.push_back(c);
        RationalFunction cof = m.at(0, j) * det_laplace(m.submatrix(rest, sub_cols));
        acc = (j % 2 == 0) ? acc + cof : acc - cof;
    }
    return acc;
}

// Gaussian elimination on rationals, pivoting by lowest total degree;
// Laplace is exact but factorial beyond desk sizes.
RationalFunction det_lu(RationalMatrix m) {
    const int n = m.rows();
    RationalFunction det = RationalFunction::one();
    for (int k = 0; k < n; ++k) {
        int pivot = -1, best = INT_MAX;
        for (int i = k; i < n; ++i) {
            const RationalFunction& e = m.at(i, k);
            if (e.is_zero(1e-12)) continue;
            int deg = e.num().degree() + e.den_degree();
            if (deg < best) {
                best = deg;
                pivot = i;
            }
        }
        if (pivot < 0) return RationalFunction();
        if (pivot != k) {
            for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            det = -det;
        }
        det = det * m.at(k, k);
        RationalFunction inv = m.at(k, k).reciprocal();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero(1e-12)) continue;
            RationalFunction f = m.at(i, k) * inv;
            for (int j = k + 1; j < n; ++j)
                m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return det;
}

}  // namespace

RationalFunction RationalMatrix::det() const {
    if (rows_ != cols_) throw Error(Errc::ParseError, "determinant of a non-square matrix");
    if (rows_ <= 6) return det_laplace(*this);
    return det_lu(*this);
}

std::vector<RationalFunction> RationalMatrix::minors(int k) const {
    if (k < 0 || k > std::min(rows_, cols_))
        throw Error(Errc::ParseError, "minor order out of range");
    std::vector<RationalFunction> out;
    if (k == 0) {
        out.push_back(RationalFunction::one());
        return out;
    }
    std::vector<std::vector<int>> rsel, csel;
    enumerate_subsets(rows_, k, rsel);
    enumerate_subsets(cols_, k, csel);
    out.reserve(rsel.size() * csel.size());
    for (const auto& r : rsel)
        for (const auto& c : csel) out.push_back(submatrix(r, c).det());
    return out;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows_ != cols_) throw Error(Errc::ParseError, "inverse of a non-square matrix");
    const int n = rows_;
    RationalFunction d = det();
    if (d.is_zero(1e-12)) throw Error(Errc::Singular, "matrix is singular");
    RationalMatrix adj(n, n);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> ri, cj;
            for (int t = 0; t < n; ++t) {
                if (t != i) ri.push_back(t);
                if (t != j) cj.push_back(t);
            }
            RationalFunction cof = (n == 1) ? RationalFunction::one() : submatrix(ri, cj).det();
            if ((i + j) % 2 != 0) cof = -cof;
            adj.at(j, i) = cof;  // transpose for adjugate
        }
    return adj * d.reciprocal();
}

RationalMatrix RationalMatrix::submatrix(const std::vector<int>& rows,
                                         const std::vector<int>& cols) const {
    RationalMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j) out.at(i, j) = at(rows[i], cols[j]);
    return out;
}

RationalMatrix RationalMatrix::col(int j) const {
    std::vector<int> rows(rows_), cols{j};
    for (int i = 0; i < rows_; ++i) rows[i] = i;
    return submatrix(rows, cols);
}

RationalMatrix RationalMatrix::hstack(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::vstack(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) out.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) out.at(a.rows() + i, j) = b.at(i, j);
    }
    return out;
}

RationalMatrix RationalMatrix::block_diag(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, a.cols() + j) = b.at(i, j);
    return out;
}

InnerCertificate check_inner(const RationalMatrix& delta) {
    InnerCertificate cert;
    RationalMatrix gram = delta.para_conjugate() * delta;
    RationalMatrix defect = gram - RationalMatrix::identity(delta.cols());
    cert.algebraic_pass = defect.is_zero(1e-9);
    double res = 0.0;
    for (Complex z : circle_grid()) {
        MatrixXcd m = delta.eval(z);
        res = std::max(res, (m.adjoint() * m - MatrixXcd::Identity(delta.cols(), delta.cols()))
                                .norm());
    }
    cert.grid_residual = res;
    if (cert.algebraic_pass && res > 1e-7) cert.algebraic_pass = false;
    if (delta.rows() == delta.cols()) {
        RationalMatrix co = delta * delta.para_conjugate() - RationalMatrix::identity(delta.rows());
        double cres = 0.0;
        for (Complex z : circle_grid(64)) cres = std::max(cres, co.eval(z).norm());
        cert.two_sided = co.is_zero(1e-9) && cres <= 1e-7;
        cert.two_sided_residual = cres;
    } else {
        cert.two_sided = false;
        cert.two_sided_residual = 1.0;
    }
    return cert;
}

double complementing_infimum(const RationalMatrix& psi) {
    double inf = 1e300;
    for (Complex z : circle_grid()) {
        Eigen::JacobiSVD<MatrixXcd> svd(psi.eval(z));
        inf = std::min(inf, svd.singularValues().minCoeff());
    }
    return inf;
}

BlockCoefficients fourier_block_coeffs(const RationalMatrix& m, int k_lo, int k_hi) {
    if (!m.linf_admissible())
        throw Error(Errc::PoleOnCircle, "fourier coefficients need circle-admissible entries");
    BlockCoefficients out;
    out.k_lo = k_lo;
    out.k_hi = k_hi;
    out.coeff.assign(static_cast<size_t>(k_hi - k_lo + 1), MatrixXcd::Zero(m.rows(), m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) {
            auto range = m.at(i, j).fourier_range(k_lo, k_hi);
            for (int k = k_lo; k <= k_hi; ++k) out.coeff[k - k_lo](i, j) = range[k - k_lo];
        }
    return out;
}

MatrixXcd truncated_operator(const RationalMatrix& phi, int N, SectionKind kind) {
    if (N < 1) throw Error(Errc::ParseError, "truncation size must be >= 1");
    const int r = phi.rows(), c = phi.cols();
    BlockCoefficients coeffs =
        kind == SectionKind::hankel ? fourier_block_coeffs(phi, -2 * N + 1, -1)
                                    : fourier_block_coeffs(phi, -(N - 1), N - 1);
    MatrixXcd out = MatrixXcd::Zero(static_cast<long>(N) * r, static_cast<long>(N) * c);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            int k = kind == SectionKind::hankel ? -i - j - 1 : i - j;
            out.block(static_cast<long>(i) * r, static_cast<long>(j) * c, r, c) = coeffs.at(k);
        }
    return out;
}

int numeric_rank(const MatrixXcd& m, double rel_threshold) {
    if (rel_threshold <= 0.0) rel_threshold = tol().rank_rel;
    if (m.rows() == 0 || m.cols() == 0) return 0;
    Eigen::JacobiSVD<MatrixXcd> svd(m);
    const auto& s = svd.singularValues();
    double smax = s.size() ? s(0) : 0.0;
    if (smax <= 0.0) return 0;
    int r = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > rel_threshold * smax) ++r;
    return r;
}

StabilizedRank stabilized_hankel_rank(const RationalMatrix& phi, int N) {
    StabilizedRank out;
    int r1 = numeric_rank(truncated_operator(phi, N, SectionKind::hankel));
    int r2 = numeric_rank(truncated_operator(phi, N + 2, SectionKind::hankel));
    out.rank = r2;
    out.stabilized = (r1 == r2);
    return out;
}

Complex h2_inner_product(const RationalMatrix& f, const RationalMatrix& g) {
    if (f.cols() != 1 || g.cols() != 1 || f.rows() != g.rows())
        throw Error(Errc::ParseError, "h2 inner product takes two equal-shape columns");
    if (!f.analytic_in_closed_disk(0.0) || !g.analytic_in_closed_disk(0.0))
        throw Error(Errc::NotAnalytic, "h2 inner product of a non-analytic vector");
    // <f,g> = mean of sum_i f_i g_i~ over the circle, exact via residues
    RationalFunction acc;
    for (int i = 0; i < f.rows(); ++i)
        acc = acc + f.at(i, 0) * g.at(i, 0).para_conjugate();
    return acc.circle_mean();
}

double grid_sup_distance(const RationalMatrix& a, const RationalMatrix& b) {
    double d = 0.0;
    for (Complex z : circle_grid())
        d = std::max(d, (a.eval(z) - b.eval(z)).cwiseAbs().maxCoeff());
    return d;
}

Alignment align_right_unitary(const RationalMatrix& got, const RationalMatrix& want) {
    // On the circle got(z)^* want(z) = U^* pointwise when want = got U;
    // average a few samples and project to the unitary polar factor.
    const int k = got.cols();
    MatrixXcd acc = MatrixXcd::Zero(k, want.cols());
    auto grid = circle_grid(16);
    for (Complex z : grid) acc += got.eval(z).adjoint() * want.eval(z);
    Eigen::JacobiSVD<MatrixXcd> svd(acc, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Alignment out;
    out.unitary = svd.matrixU() * svd.matrixV().adjoint();
    RationalMatrix aligned = got * out.unitary;
    out.sup_error = grid_sup_distance(aligned, want);
    return out;
}

}  // namespace msk
