#include "msk/multiplicity.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace msk {

const char* route_name(MultiplicityRoute r) {
    switch (r) {
        case MultiplicityRoute::SquareDirect: return "square-direct";
        case MultiplicityRoute::DeltaSReduction: return "delta_s-reduction";
        case MultiplicityRoute::DiagonalFormula: return "diagonal-formula";
    }
    return "?";
}

DeltaSequence delta_sequence(const RationalMatrix& delta) {
    if (delta.rows() != delta.cols())
        throw Error(Errc::ParseError, "delta sequence needs a square inner matrix");
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass)
        throw Error(Errc::NotAnalytic, "delta sequence needs an inner input");
    const int N = delta.rows();
    DeltaSequence out;
    out.delta.reserve(N + 1);
    for (int k = 0; k <= N; ++k) {
        std::vector<BlaschkeProduct> inners;
        for (const auto& minor : delta.minors(N - k)) {
            if (minor.is_zero(1e-10)) continue;
            inners.push_back(inner_outer_scalar(minor).inner);
        }
        if (inners.empty())
            throw Error(Errc::Singular, "all minors of an order vanish; det is zero");
        out.delta.push_back(inner_gcd(inners));
    }
    return out;
}

namespace {

int min_equality_index(const DeltaSequence& seq) {
    const int N = seq.size() - 1;
    for (int k = 0; k < N; ++k)
        if (seq.delta[k].same_zeros(seq.delta[k + 1])) return k;
    return N;  // delta_{N+1} := delta_N
}

bool constant_unitary(const RationalMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_constant()) return false;
    MatrixXcd c = m.eval(Complex(0.0));
    return (c.adjoint() * c - MatrixXcd::Identity(m.cols(), m.cols())).norm() < 1e-9;
}

}  // namespace

MultiplicityReport spectral_multiplicity(const RationalMatrix& delta, Complex probe) {
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass)
        throw Error(Errc::NotAnalytic, "spectral multiplicity needs an inner input");
    MultiplicityReport out;
    out.dim_eprime = delta.cols();
    RationalMatrix square = delta;
    if (delta.rows() != delta.cols()) {
        out.route = MultiplicityRoute::DeltaSReduction;
        DeltaSResult ds = delta_s(delta, probe);
        square = ds.delta_s;
    } else {
        out.route = MultiplicityRoute::SquareDirect;
    }
    out.seq = delta_sequence(square);
    out.mu = min_equality_index(out.seq);
    if (constant_unitary(square)) {
        out.zero_space = true;
        out.note =
            "model space of the reduced square function is {0}; the classical convention "
            "regards T as multiplicity-free (a unitary has Beurling degree 1)";
    }
    return out;
}

RationalMatrix nordgren_diagonal(const RationalMatrix& delta) {
    DeltaSequence seq = delta_sequence(delta);
    const int N = seq.size() - 1;
    RationalMatrix out(N, N);
    for (int k = 1; k <= N; ++k) {
        BlaschkeProduct q = seq.delta[k - 1].quotient(seq.delta[k]);
        out.at(k - 1, k - 1) = q.to_rational();
    }
    return out;
}

namespace {

bool is_diagonal(const RationalMatrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (i != j && !m.at(i, j).is_zero(1e-12)) return false;
    return true;
}

int diagonal_max_cardinality(const RationalMatrix& m) {
    // largest subset of diagonal entries whose inner parts share a zero
    std::vector<BlaschkeProduct> thetas;
    for (int i = 0; i < m.rows(); ++i) thetas.push_back(inner_outer_scalar(m.at(i, i)).inner);
    std::vector<Complex> points;
    for (const auto& t : thetas)
        for (const auto& [a, mult] : t.zeros()) points.push_back(a);
    int best = 0;
    for (Complex a : points) {
        int count = 0;
        for (const auto& t : thetas)
            if (t.multiplicity_at(a) > 0) ++count;
        best = std::max(best, count);
    }
    return best;
}

}  // namespace

BeurlingDegreeReport beurling_degree(const RationalMatrix& delta, Complex probe) {
    BeurlingDegreeReport out;
    out.mu = spectral_multiplicity(delta, probe);
    out.degree = out.mu.mu;
    out.unitary_input = out.mu.zero_space && delta.rows() == delta.cols();
    if (is_diagonal(delta)) {
        out.diagonal_formula = diagonal_max_cardinality(delta);
        if (*out.diagonal_formula != out.degree)
            throw Error(Errc::FormulaMismatch,
                        "minor-gcd and max-cardinality routes disagree on a diagonal input");
    }
    return out;
}

CharScalarReport char_scalar(const RationalMatrix& delta) {
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass)
        throw Error(Errc::NotAnalytic, "characteristic scalar needs an inner input");
    CharScalarReport out;
    std::vector<BlaschkeProduct> thetas;
    for (int i = 0; i < delta.rows(); ++i)
        for (int j = 0; j < delta.cols(); ++j)
            if (!delta.at(i, j).is_zero()) thetas.push_back(bt_decompose(delta.at(i, j)).theta);
    out.omega = inner_lcm(thetas);
    if (cert.two_sided) {
        out.m = out.omega;
        RationalMatrix witness = delta.para_conjugate() * out.omega.to_rational();
        if (!witness.analytic_in_closed_disk())
            throw Error(Errc::NotAnalytic, "two-sided witness failed analyticity");
        out.witness = witness;
        return out;
    }
    // feasibility of a scalar multiple delta: exists C with
    // delta Delta~ + C Delta_c~ analytic in the closed disk
    RationalMatrix dc = complementary_factor(delta);
    RationalMatrix W = dc.para_conjugate();          // (n-r) x n
    RationalMatrix Dpc = delta.para_conjugate();     // r x n
    const int r = delta.cols(), n = delta.rows(), w = n - r;

    auto feasible = [&](const BlaschkeProduct& cand,
                        RationalMatrix* witness_out) -> bool {
        RationalMatrix G0 = Dpc * cand.to_rational();
        // disk poles of G0 and W decide the linear conditions
        std::vector<std::pair<Complex, int>> poles;
        auto note = [&](const RationalFunction& f) {
            for (const auto& [p, m] : f.poles()) {
                if (std::abs(p) > 1.0 - tol().root_cluster) continue;
                bool found = false;
                for (auto& [q, o] : poles)
                    if (std::abs(q - p) <= 1e-9 * std::max(1.0, std::abs(q))) {
                        o = std::max(o, m);
                        found = true;
                    }
                if (!found) poles.emplace_back(p, m);
            }
        };
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < n; ++j) note(G0.at(i, j));
        for (int i = 0; i < w; ++i)
            for (int j = 0; j < n; ++j) note(W.at(i, j));
        if (poles.empty()) {
            if (witness_out) *witness_out = G0;
            return true;
        }
        int total_order = 0;
        for (const auto& [p, m] : poles) total_order += m;
        int dC = std::max(G0.max_entry_degree() + 2, total_order);
        // unknowns: C entries, r x w polynomials of degree <= dC
        const int unknowns = r * w * (dC + 1);
        // rows: for each entry (i,j) and pole, the principal part coefficients
        std::vector<Complex> rhs;
        auto laurent_rows = [&](const RationalFunction& f, Complex p, int ord) {
            return f.laurent_at(p, -ord, -1);
        };
        int row = 0;
        std::vector<std::vector<Complex>> arows;
        for (const auto& [p, ord] : poles) {
            // Laurent data of z^k W_tj at p, shared across the rows of G0
            std::vector<std::vector<Complex>> wrows(static_cast<size_t>(w) * n);
            for (int t = 0; t < w; ++t)
                for (int j = 0; j < n; ++j) {
                    std::vector<Complex> all;
                    RationalFunction zk = RationalFunction::one();
                    for (int k = 0; k <= dC; ++k) {
                        auto lw = laurent_rows(W.at(t, j) * zk, p, ord);
                        all.insert(all.end(), lw.begin(), lw.end());
                        zk = zk * RationalFunction::variable();
                    }
                    wrows[t * n + j] = std::move(all);
                }
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < n; ++j) {
                    auto b = laurent_rows(G0.at(i, j), p, ord);
                    for (int l = 0; l < ord; ++l) {
                        std::vector<Complex> arow(unknowns, Complex(0.0));
                        for (int t = 0; t < w; ++t)
                            for (int k = 0; k <= dC; ++k)
                                arow[(i * w + t) * (dC + 1) + k] = wrows[t * n + j][k * ord + l];
                        arows.push_back(std::move(arow));
                        rhs.push_back(b[l]);
                        ++row;
                    }
                }
        }
        MatrixXcd A = MatrixXcd::Zero(row, unknowns);
        VectorXcd brhs(row);
        for (int i = 0; i < row; ++i) {
            brhs(i) = -rhs[i];
            for (int j = 0; j < unknowns; ++j) A(i, j) = arows[i][j];
        }
        Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        VectorXcd c = svd.solve(brhs);
        double resid = (A * c - brhs).norm();
        if (resid > 1e-7 * (1.0 + brhs.norm())) return false;
        if (witness_out) {
            RationalMatrix C(r, w);
            for (int i = 0; i < r; ++i)
                for (int t = 0; t < w; ++t) {
                    std::vector<Complex> coef(static_cast<size_t>(dC) + 1);
                    for (int k = 0; k <= dC; ++k) coef[k] = c((i * w + t) * (dC + 1) + k);
                    C.at(i, t) = RationalFunction(Polynomial(std::move(coef)), {});
                }
            RationalMatrix G = G0 + C * W;
            if (!G.analytic_in_closed_disk(0.0)) return false;
            *witness_out = G;
        }
        return true;
    };

    // per-zero minimal multiplicity against omega (monotone feasibility)
    std::vector<std::pair<Complex, int>> mz;
    for (const auto& [a, M] : out.omega.zeros()) {
        int t = M;
        for (int cand_t = 0; cand_t < M; ++cand_t) {
            std::vector<std::pair<Complex, int>> zs;
            if (cand_t > 0) zs.emplace_back(a, cand_t);
            for (const auto& [b, Mb] : out.omega.zeros())
                if (std::abs(b - a) > 1e-12) zs.emplace_back(b, Mb);
            if (feasible(BlaschkeProduct(Complex(1.0), zs), nullptr)) {
                t = cand_t;
                break;
            }
        }
        if (t > 0) mz.emplace_back(a, t);
    }
    out.m = BlaschkeProduct(Complex(1.0), mz);
    RationalMatrix witness;
    if (feasible(out.m, &witness)) out.witness = witness;
    return out;
}

namespace {

// Relocate zeros onto the nearest member of an exact reference set; the
// factorization behind the zeros carries numerical noise while the
// reference comes from exact input data.
BlaschkeProduct snap_zeros(const BlaschkeProduct& b, const BlaschkeProduct& reference,
                           double radius) {
    std::vector<std::pair<Complex, int>> zeros;
    for (auto [alpha, mult] : b.zeros()) {
        Complex best = alpha;
        double dist = radius * std::max(1.0, std::abs(alpha));
        for (const auto& [r, m] : reference.zeros()) {
            if (std::abs(r - alpha) < dist) {
                dist = std::abs(r - alpha);
                best = r;
            }
        }
        zeros.emplace_back(best, mult);
    }
    return BlaschkeProduct(b.constant(), std::move(zeros));
}

}  // namespace

ScalarMultipleReport scalar_multiple(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw Error(Errc::ParseError, "scalar multiple needs a square A");
    RationalFunction d = a.det();
    if (d.is_zero(1e-12)) throw Error(Errc::Singular, "det A is identically zero");
    BlaschkeProduct det_inner = inner_outer_scalar(d).inner;
    InnerOuterPair io = inner_outer_matrix(a);
    ScalarMultipleReport out;
    // The inner factor carries factorization noise, so its entry thetas sit
    // near but not on the zero set of det A. Snap them onto the exact det
    // zeros; the radius can be generous because the gcd with det^i below
    // bounds any inflation this could cause.
    std::vector<BlaschkeProduct> thetas;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (!io.inner.at(i, j).is_zero())
                thetas.push_back(
                    snap_zeros(bt_decompose(io.inner.at(i, j)).theta, det_inner, 1e-3));
    out.m = inner_lattice(inner_lcm(thetas), det_inner).gcd;  // m divides det^i
    out.witness = a.inverse() * out.m.to_rational();
    if (!out.witness.analytic_in_closed_disk())
        throw Error(Errc::NotAnalytic, "witness m A^{-1} failed analyticity");
    return out;
}

CoprimeThetaAReport coprime_theta_a(const BlaschkeProduct& theta, const RationalMatrix& a) {
    RationalFunction d = a.det();
    if (d.is_zero(1e-12)) throw Error(Errc::Singular, "det A is identically zero");
    CoprimeThetaAReport out;
    out.det_inner = inner_outer_scalar(d).inner;
    out.m_a = scalar_multiple(a).m;
    bool via_det = inner_lattice(theta, out.det_inner).coprime;
    bool via_m = inner_lattice(theta, out.m_a).coprime;
    if (via_det != via_m)
        throw Error(Errc::RouteMismatch, "det-inner-part and m_A coprimeness routes disagree");
    out.left_coprime = via_det;
    out.right_coprime = via_det;
    return out;
}

ContractionClass classify_contraction(const RationalMatrix& delta) {
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass)
        throw Error(Errc::NotAnalytic, "classification needs an inner input");
    ContractionClass out;
    out.c00 = cert.two_sided;
    out.c0 = cert.two_sided;
    out.note =
        "rational inner functions have a meromorphic pseudo-continuation of bounded "
        "type beyond the disk, so C0 reduces to the two-sided certificate";
    return out;
}

std::vector<Complex> model_spectrum_lower(const RationalMatrix& delta) {
    CharScalarReport rep = char_scalar(delta);
    std::vector<Complex> out;
    for (Complex a : rep.omega.spectrum()) out.push_back(std::conj(a));
    std::sort(out.begin(), out.end(), [](Complex x, Complex y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    return out;
}

InterpolantReport verify_interpolant(const RationalMatrix& phi, const RationalMatrix& k,
                                     Complex probe) {
    if (phi.rows() != phi.cols() || k.rows() != k.cols() || phi.rows() != k.rows())
        throw Error(Errc::ParseError, "interpolation verifier needs square Phi and K");
    InterpolantReport out;
    RationalMatrix defect = phi - k * phi.para_conjugate();
    out.feasible = defect.analytic_in_closed_disk();
    double norm = 0.0;
    for (Complex z : circle_grid()) {
        Eigen::JacobiSVD<MatrixXcd> svd(k.eval(z));
        norm = std::max(norm, svd.singularValues().maxCoeff());
    }
    out.norm_ok = norm <= 1.0 + 1e-8;
    // ker H*_{flip Phi_+} subset ker H*_{Phi_-^*} via the two kernel inners
    RationalMatrix plus(phi.rows(), phi.cols());
    RationalMatrix minus(phi.rows(), phi.cols());
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.cols(); ++j) {
            RationalFunction p, m;
            phi.at(i, j).hardy_split(p, m);
            plus.at(i, j) = p;
            minus.at(i, j) = m;
        }
    RationalMatrix theta1 = adjoint_hankel_kernel_inner(plus, probe);
    RationalMatrix theta2 = adjoint_hankel_kernel_inner(minus.para_conjugate(), probe);
    RationalMatrix quot = theta2.para_conjugate() * theta1;
    out.kernel_inclusion = quot.analytic_in_closed_disk();
    return out;
}

}  // namespace msk
