#include "msk/model_space.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace msk {

InterpolationConditions hankel_kernel_conditions(const RationalMatrix& phi) {
    if (!phi.linf_admissible())
        throw Error(Errc::PoleOnCircle, "hankel kernel needs a circle-admissible symbol");
    // f in ker H*_{flip Phi} iff G f is analytic in the disk, G = Phi~.
    // One condition per principal-part coefficient of each row at each
    // disk pole of G.
    RationalMatrix G = phi.para_conjugate();
    const int m = G.rows(), n = G.cols();
    // collect disk poles of G with the max order across each row
    std::vector<std::pair<Complex, int>> poles;
    auto note_pole = [&](Complex p, int order) {
        for (auto& [q, o] : poles) {
            if (std::abs(q - p) <= tol().root_cluster * std::max(1.0, std::abs(q))) {
                o = std::max(o, order);
                return;
            }
        }
        poles.emplace_back(p, order);
    };
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [p, o] : G.at(i, j).poles())
                if (std::abs(p) < 1.0 - tol().root_cluster) note_pole(p, o);

    InterpolationConditions conds;
    for (const auto& [rho, order] : poles) {
        for (int i = 0; i < m; ++i) {
            // row i of G f near rho: sum_j G_ij f_j; Laurent tail must vanish
            int row_order = 0;
            for (int j = 0; j < n; ++j)
                row_order = std::max(row_order, G.at(i, j).pole_order(rho));
            if (row_order == 0) continue;
            // coefficient of (z-rho)^{-l}: sum_j sum_t a_{ij}(-l-t) f_j^(t)(rho)/t!
            std::vector<std::vector<Complex>> laurent(n);
            for (int j = 0; j < n; ++j)
                laurent[j] = G.at(i, j).laurent_at(rho, -row_order, row_order);
            auto lcoef = [&](int j, int k) { return laurent[j][k + row_order]; };
            for (int l = 1; l <= row_order; ++l) {
                InterpolationCondition cond;
                cond.point = rho;
                double tfact = 1.0;
                for (int t = 0; t + l <= row_order; ++t) {
                    if (t > 0) tfact *= t;
                    for (int j = 0; j < n; ++j) {
                        Complex w = lcoef(j, -l - t) / tfact;
                        if (std::abs(w) > 1e-14)
                            cond.terms.push_back({j, t, w});
                    }
                }
                if (!cond.terms.empty()) conds.push_back(std::move(cond));
            }
        }
    }
    return conds;
}

ModelSpace ModelSpace::from_conditions(const InterpolationConditions& conds, int ambient_dim) {
    std::vector<RationalMatrix> vecs;
    vecs.reserve(conds.size());
    for (const auto& cond : conds) {
        RationalMatrix g(ambient_dim, 1);
        for (const auto& term : cond.terms) {
            RationalFunction k = RationalFunction::szego_kernel(cond.point, term.deriv_order);
            g.at(term.component, 0) =
                g.at(term.component, 0) + k * std::conj(term.weight);
        }
        vecs.push_back(std::move(g));
    }
    return from_vectors(ambient_dim, std::move(vecs));
}

ModelSpace ModelSpace::from_vectors(int ambient_dim, std::vector<RationalMatrix> vectors) {
    ModelSpace out;
    out.ambient_dim_ = ambient_dim;
    const int n = static_cast<int>(vectors.size());
    if (n == 0) {
        out.gram_ = MatrixXcd::Zero(0, 0);
        return out;
    }
    MatrixXcd gram(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) gram(i, j) = h2_inner_product(vectors[j], vectors[i]);
    out.gram_ = gram;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es((gram + gram.adjoint()) * 0.5);
    const auto& ev = es.eigenvalues();
    double emax = ev.size() ? std::max(ev(ev.size() - 1), 0.0) : 0.0;
    const double cut = 1e-8 * std::max(emax, 1e-300);
    double emin_kept = emax;
    for (int k = 0; k < ev.size(); ++k) {
        if (ev(k) <= cut) continue;
        emin_kept = std::min(emin_kept, ev(k));
        // orthonormal vector sum_i U(i,k)/sqrt(lambda_k) * basis_i
        RationalMatrix u(ambient_dim, 1);
        double s = 1.0 / std::sqrt(ev(k));
        for (int i = 0; i < n; ++i) {
            Complex c = es.eigenvectors()(i, k) * s;
            if (std::abs(c) < 1e-15) continue;
            u = u + vectors[i] * c;
        }
        out.onb_.push_back(std::move(u));
    }
    out.gram_condition_ = emax > 0.0 && emin_kept > 0.0 ? emax / emin_kept : 1.0;
    return out;
}

double ModelSpace::span_residual(const RationalMatrix& f) const {
    Complex norm2 = h2_inner_product(f, f);
    double total = std::real(norm2);
    for (const auto& b : onb_) {
        Complex c = h2_inner_product(f, b);
        total -= std::norm(c);
    }
    return std::sqrt(std::max(total, 0.0));
}

bool ModelSpace::backward_shift_invariant(double tolerance) const {
    // projection residuals through the orthonormalized basis inherit the
    // Gram conditioning; a genuine invariance failure shows up at O(1)
    const double threshold =
        std::max(tolerance * 10.0, 1e-10 * std::max(gram_condition_, 1.0));
    const RationalFunction invz(Polynomial::one(), {{Complex(0.0), 1}});
    for (const auto& b : onb_) {
        RationalMatrix shifted(ambient_dim_, 1);
        for (int i = 0; i < ambient_dim_; ++i) {
            Complex b0 = b.at(i, 0)(Complex(0.0));
            shifted.at(i, 0) = (b.at(i, 0) - RationalFunction::constant(b0)) * invz;
        }
        if (!shifted.analytic_in_closed_disk(0.0)) return false;
        if (span_residual(shifted) > threshold) return false;
    }
    return true;
}

RationalMatrix model_space_to_inner(const ModelSpace& K, Complex probe) {
    const int n = K.ambient_dim();
    if (std::abs(probe) >= 1.0 - tol().root_cluster)
        throw Error(Errc::DegenerateProbe, "probe must lie in the open disk");
    if (K.dim() == 0) return RationalMatrix::identity(n);
    if (!K.backward_shift_invariant(1e-7))
        throw Error(Errc::NotInvariant, "span is not backward-shift invariant");
    // M(z) = I - (1 - conj(w0) z) sum_j k_j(z) k_j(w0)^*
    RationalMatrix M = RationalMatrix::identity(n);
    RationalFunction lin =
        RationalFunction::one() - RationalFunction::variable() * std::conj(probe);
    for (const auto& k : K.basis()) {
        MatrixXcd kw = k.eval(probe);  // n x 1
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Complex w = std::conj(kw(b, 0));
                if (std::abs(w) < 1e-15) continue;
                M.at(a, b) = M.at(a, b) - lin * k.at(a, 0) * w;
            }
    }
    MatrixXcd Mw = M.eval(probe);
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es((Mw + Mw.adjoint()) * 0.5);
    const auto& ev = es.eigenvalues();
    if (ev.minCoeff() < 1e-10 * std::max(1.0, ev.maxCoeff()))
        throw Error(Errc::DegenerateProbe, "M(probe) is singular; try another probe");
    MatrixXcd isqrt = MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i)
        isqrt += es.eigenvectors().col(i) * (1.0 / std::sqrt(ev(i))) *
                 es.eigenvectors().col(i).adjoint();
    return M * isqrt;
}

}  // namespace msk
