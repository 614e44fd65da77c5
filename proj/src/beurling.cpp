#include "msk/beurling.hpp"

#include <Eigen/Cholesky>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

#include "msk/blaschke.hpp"

namespace msk {

namespace {

const Complex kFallbackProbes[] = {{0.37, 0.19}, {-0.23, 0.41}, {0.11, -0.53}, {-0.47, -0.13}};

RationalMatrix monomial_column(int n, int j, int t) {
    RationalMatrix col(n, 1);
    std::vector<Complex> c(static_cast<size_t>(t) + 1, Complex(0.0));
    c[t] = Complex(1.0);
    col.at(j, 0) = RationalFunction(Polynomial(std::move(c)), {});
    return col;
}

bool kernel_orthogonality_ok(const ModelSpace& K, const RationalMatrix& theta) {
    // <k_i, Theta h> ~ 0 for monomial h up to degree dim+2
    for (const auto& k : K.basis()) {
        for (int j = 0; j < theta.cols(); ++j) {
            for (int t = 0; t <= K.dim() + 2; ++t) {
                RationalMatrix h = theta * monomial_column(theta.cols(), j, t);
                Complex ip = h2_inner_product(k, h);
                if (std::abs(ip) > 1e-7) return false;
            }
        }
    }
    return true;
}

/// gcd of inner parts of the k x k minors (zero minors skipped).
BlaschkeProduct minor_inner_gcd(const RationalMatrix& m, int k, bool* all_zero = nullptr) {
    std::vector<BlaschkeProduct> inners;
    for (const auto& minor : m.minors(k)) {
        if (minor.is_zero(1e-10)) continue;
        inners.push_back(inner_outer_scalar(minor).inner);
    }
    if (all_zero) *all_zero = inners.empty();
    if (inners.empty()) return BlaschkeProduct();
    return inner_gcd(inners);
}

}  // namespace

RationalMatrix adjoint_hankel_kernel_inner(const RationalMatrix& phi, Complex probe) {
    InterpolationConditions conds = hankel_kernel_conditions(phi);
    ModelSpace K = ModelSpace::from_conditions(conds, phi.rows());
    std::vector<Complex> probes{probe};
    for (Complex p : kFallbackProbes) probes.push_back(p);
    std::string last = "no admissible probe";
    for (Complex w : probes) {
        RationalMatrix theta;
        try {
            theta = model_space_to_inner(K, w);
        } catch (const Error& e) {
            if (e.code() == Errc::DegenerateProbe) {
                last = e.what();
                continue;
            }
            throw;
        }
        InnerCertificate cert = check_inner(theta);
        if (!cert.algebraic_pass || !cert.two_sided) {
            last = "reconstructed function failed the inner certificate";
            continue;
        }
        if (!kernel_orthogonality_ok(K, theta)) {
            last = "kernel orthogonality residual too large";
            continue;
        }
        return theta;
    }
    throw Error(Errc::DegenerateProbe, last);
}

RationalMatrix matrix_spectral_factor(const RationalMatrix& G) {
    if (G.rows() != G.cols()) throw Error(Errc::ParseError, "spectral factor needs a square G");
    const int p = G.rows();
    if (!G.linf_admissible()) throw Error(Errc::PoleOnCircle, "G has a circle pole");
    // para-Hermitian and positive on the circle
    double scale = 1e-300;
    for (Complex z : circle_grid()) scale = std::max(scale, G.eval(z).norm());
    if (!(G - G.para_conjugate()).is_zero(1e-8)) {
        double res = grid_sup_distance(G, G.para_conjugate());
        if (res > 1e-8 * (1.0 + scale))
            throw Error(Errc::NotPositive, "G is not para-Hermitian");
    }
    double mineig = 1e300;
    for (Complex z : circle_grid()) {
        MatrixXcd m = G.eval(z);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m + m.adjoint()) * 0.5);
        mineig = std::min(mineig, es.eigenvalues().minCoeff());
    }
    if (mineig < 1e-8) throw Error(Errc::NotPositive, "G is not positive on the circle grid");

    // denominator of the factor: the poles of G outside the closed disk
    std::vector<std::pair<Complex, int>> qfac;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            for (const auto& [r, m] : G.at(i, j).poles()) {
                if (std::abs(r) <= 1.0) continue;
                bool found = false;
                for (auto& [qr, qm] : qfac)
                    if (std::abs(qr - r) <= 1e-9 * std::abs(r)) {
                        qm = std::max(qm, m);
                        found = true;
                    }
                if (!found) qfac.emplace_back(r, m);
            }
    Polynomial q = Polynomial::from_root_factors(Complex(1.0), qfac);
    int qdeg = q.degree();

    // coefficient window: decay until negligible
    int W = 1;
    {
        BlockCoefficients head = fourier_block_coeffs(G, 0, 400);
        double c0 = head.coeff[0].norm();
        for (int k = 1; k <= 400; ++k)
            if (head.at(k).norm() > 1e-14 * std::max(1.0, c0)) W = k;
    }
    // the factor's numerator degree is bounded by the rational data, not by
    // the coefficient-decay window; fitting beyond the bound only adds noise
    int max_num_deg = 0;
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            max_num_deg = std::max(max_num_deg, G.at(i, j).num().degree());
    const int fit_deg = qdeg + max_num_deg + 2;
    const int series_len = fit_deg + qdeg + 12;

    // the corner effect of the Cholesky section decays at the same
    // geometric rate as the coefficients; start with a margin past the
    // needed series length and double until the certificates accept
    std::string failure = "section size cap reached";
    RationalMatrix best;
    double best_res = 1e300;
    int N = std::max(64, series_len + (3 * W) / 4 + 16);
    for (int attempt = 0; attempt < 4; ++attempt, N *= 2) {
        if (static_cast<long>(N) * p > 6000) break;
        BlockCoefficients coeffs = fourier_block_coeffs(G, -(N - 1), N - 1);
        MatrixXcd T(static_cast<long>(N) * p, static_cast<long>(N) * p);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j)
                T.block(static_cast<long>(i) * p, static_cast<long>(j) * p, p, p) =
                    coeffs.at(j - i);
        Eigen::LLT<MatrixXcd> llt(T);
        if (llt.info() != Eigen::Success)
            throw Error(Errc::NotPositive, "block Toeplitz section is not positive definite");
        MatrixXcd L = llt.matrixL();
        // last block row of L carries the factor coefficients: L_{N-1,N-1-k} = O_k^*
        std::vector<MatrixXcd> series;
        series.reserve(static_cast<size_t>(series_len) + 1);
        for (int k = 0; k <= series_len; ++k)
            series.push_back(
                MatrixXcd(L.block(static_cast<long>(N - 1) * p,
                                  static_cast<long>(N - 1 - k) * p, p, p))
                    .adjoint());
        // P = O q must truncate at fit_deg; the tail certifies the fit
        std::vector<MatrixXcd> P(static_cast<size_t>(series_len) + 1, MatrixXcd::Zero(p, p));
        for (int k = 0; k <= series_len; ++k)
            for (int j = 0; j <= std::min(k, qdeg); ++j) P[k] += series[k - j] * q.coeff(j);
        double tail = 0.0;
        for (int k = fit_deg + 1; k + 2 <= series_len; ++k) tail = std::max(tail, P[k].norm());
        if (tail > 1e-7 * std::max(1.0, std::sqrt(scale))) {
            failure = "rational fit tail residual " + std::to_string(tail);
            continue;
        }
        // The Cholesky corner noise can exceed genuinely small top
        // coefficients, so the truncation degree cannot be read off the
        // coefficient sizes alone. Take the smallest degree whose truncated
        // factor passes the grid certificate.
        auto build = [&](int eff_deg) {
            RationalMatrix O(p, p);
            for (int i = 0; i < p; ++i)
                for (int j = 0; j < p; ++j) {
                    std::vector<Complex> c(static_cast<size_t>(eff_deg) + 1);
                    for (int k = 0; k <= eff_deg; ++k) c[k] = P[k](i, j);
                    O.at(i, j) = RationalFunction(Polynomial(std::move(c)), qfac);
                }
            return O;
        };
        auto grid_residual = [&](const RationalMatrix& O) {
            double res = 0.0;
            for (Complex z : circle_grid()) {
                MatrixXcd m = O.eval(z);
                res = std::max(res, (m.adjoint() * m - G.eval(z)).norm());
            }
            return res;
        };
        for (int eff_deg = 0; eff_deg <= fit_deg; ++eff_deg) {
            RationalMatrix O = build(eff_deg);
            double res = grid_residual(O);
            if (res < best_res) {
                best_res = res;
                best = O;
            }
            if (res > 1e-7 * (1.0 + scale)) continue;
            bool outer_ok = true;
            for (const auto& [z, m] : O.det().zeros())
                if (std::abs(z) < 1.0 - tol().root_cluster) outer_ok = false;
            if (!outer_ok) {
                failure = "factor determinant vanishes inside the disk";
                continue;
            }
            return O;
        }
        failure = "spectral factor residual " + std::to_string(best_res);
    }
    if (best_res <= 1e-6 * (1.0 + scale)) {
        bool outer_ok = true;
        for (const auto& [z, m] : best.det().zeros())
            if (std::abs(z) < 1.0 - tol().root_cluster) outer_ok = false;
        if (outer_ok) return best;
    }
    throw Error(Errc::FitFailure, failure);
}

InnerOuterPair inner_outer_matrix(const RationalMatrix& N) {
    if (!N.analytic_in_closed_disk())
        throw Error(Errc::NotAnalytic, "inner-outer factorization needs an analytic input");
    RationalMatrix gram = N.para_conjugate() * N;
    RationalFunction d = RationalMatrix(gram).det();
    if (d.is_zero(1e-12)) throw Error(Errc::RankDeficient, "N~N is singular");
    InnerOuterPair out;
    out.outer = matrix_spectral_factor(gram);
    out.inner = N * out.outer.inverse();
    out.inner_certificate = check_inner(out.inner);
    out.residual = grid_sup_distance(out.inner * out.outer, N);
    if (out.residual > 1e-6)
        throw Error(Errc::FitFailure,
                    "inner-outer reassembly residual " + std::to_string(out.residual));
    return out;
}

RationalMatrix poly_nullspace_basis(const RationalMatrix& M) {
    const int r = M.rows(), n = M.cols();
    if (r >= n) throw Error(Errc::ParseError, "nullspace basis needs a wide matrix");
    // clear denominators row by row
    RationalMatrix P(r, n);
    int dmax = 0;
    for (int i = 0; i < r; ++i) {
        std::vector<std::pair<Complex, int>> lcm;
        for (int j = 0; j < n; ++j)
            for (const auto& [root, m] : M.at(i, j).poles()) {
                bool found = false;
                for (auto& [lr, lm] : lcm)
                    if (std::abs(lr - root) <= 1e-12 * std::max(1.0, std::abs(lr))) {
                        lm = std::max(lm, m);
                        found = true;
                    }
                if (!found) lcm.emplace_back(root, m);
            }
        RationalFunction mult(Polynomial::from_root_factors(Complex(1.0), lcm), {});
        for (int j = 0; j < n; ++j) {
            P.at(i, j) = M.at(i, j) * mult;
            if (!P.at(i, j).den_factors().empty())
                throw Error(Errc::DegreeOverflow, "denominator clearing failed");
            dmax = std::max(dmax, P.at(i, j).num().degree());
        }
    }
    const int want = n - r;
    const int bound = 4 * std::max(dmax, 1) * n;
    std::vector<std::pair<Eigen::VectorXcd, int>> basis;  // coefficient vector, degree
    for (int d = 0; d <= bound && static_cast<int>(basis.size()) < want; ++d) {
        const int rows = r * (dmax + d + 1);
        const int cols = n * (d + 1);
        MatrixXcd A = MatrixXcd::Zero(rows, cols);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k <= d; ++k)
                for (int i = 0; i < r; ++i) {
                    const Polynomial& pij = P.at(i, j).num();
                    for (int t = 0; t <= pij.degree(); ++t)
                        A(i * (dmax + d + 1) + t + k, j * (d + 1) + k) += pij.coeff(t);
                }
        Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeFullV);
        const auto& s = svd.singularValues();
        double smax = s.size() ? s(0) : 0.0;
        int rank = 0;
        for (int i = 0; i < s.size(); ++i)
            if (s(i) > 1e-9 * std::max(smax, 1e-30)) ++rank;
        int nullity = cols - rank;
        if (nullity == 0) continue;
        MatrixXcd Z = svd.matrixV().rightCols(nullity);
        // embed shifts z^s b of the found basis into the degree-d slot space
        std::vector<Eigen::VectorXcd> shifts;
        for (const auto& [vec, deg] : basis) {
            for (int sft = 0; deg + sft <= d; ++sft) {
                Eigen::VectorXcd emb = Eigen::VectorXcd::Zero(cols);
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k <= deg; ++k)
                        emb(j * (d + 1) + k + sft) = vec(j * (deg + 1) + k);
                shifts.push_back(emb);
            }
        }
        MatrixXcd Znew = Z;
        if (!shifts.empty()) {
            MatrixXcd S(cols, static_cast<int>(shifts.size()));
            for (size_t c = 0; c < shifts.size(); ++c) S.col(static_cast<int>(c)) = shifts[c];
            Eigen::HouseholderQR<MatrixXcd> qr(S);
            MatrixXcd Q = qr.householderQ() * MatrixXcd::Identity(cols, S.cols());
            Znew = Z - Q * (Q.adjoint() * Z);
        }
        Eigen::JacobiSVD<MatrixXcd> svd2(Znew, Eigen::ComputeFullU);
        for (int c = 0; c < svd2.singularValues().size(); ++c) {
            if (static_cast<int>(basis.size()) >= want) break;
            if (svd2.singularValues()(c) <= 1e-7) continue;
            Eigen::VectorXcd v = svd2.matrixU().col(c);
            v /= v.cwiseAbs().maxCoeff();
            basis.emplace_back(v, d);
        }
    }
    if (static_cast<int>(basis.size()) < want)
        throw Error(Errc::DegreeOverflow, "nullspace basis incomplete at the degree bound");
    RationalMatrix out(n, want);
    for (int c = 0; c < want; ++c) {
        const auto& [vec, deg] = basis[c];
        for (int j = 0; j < n; ++j) {
            std::vector<Complex> coef(static_cast<size_t>(deg) + 1);
            for (int k = 0; k <= deg; ++k) coef[k] = vec(j * (deg + 1) + k);
            out.at(j, c) = RationalFunction(Polynomial(std::move(coef)), {});
        }
    }
    RationalMatrix check = M * out;
    if (!check.is_zero(1e-7))
        throw Error(Errc::DegreeOverflow, "nullspace verification failed");
    return out;
}

RationalMatrix complementary_factor(const RationalMatrix& delta) {
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass)
        throw Error(Errc::NotAnalytic, "complementary factor needs an inner input");
    if (delta.rows() == delta.cols()) return RationalMatrix(delta.rows(), 0);
    RationalMatrix basis = poly_nullspace_basis(delta.para_conjugate());
    InnerOuterPair pair = inner_outer_matrix(basis);
    RationalMatrix dc = pair.inner;
    if (!(delta.para_conjugate() * dc).is_zero(1e-8))
        throw Error(Errc::FitFailure, "Delta~ Delta_c is not zero");
    InnerCertificate joint = check_inner(RationalMatrix::hstack(delta, dc));
    if (!joint.algebraic_pass || !joint.two_sided)
        throw Error(Errc::FitFailure, "[Delta, Delta_c] failed the two-sided certificate");
    return dc;
}

ModelSpace toeplitz_kernel(const RationalMatrix& psi,
                           const std::vector<std::pair<Complex, int>>& pole_basis,
                           int degree_bound) {
    const int r = psi.cols();
    // basis functions z^t e_j / D(z), D = prod (1 - conj(beta) z)^m
    std::vector<std::pair<Complex, int>> dfac;
    int total_mult = 0;
    for (const auto& [beta, m] : pole_basis) {
        if (std::abs(beta) < 1e-14) continue;  // beta = 0 contributes no pole
        dfac.emplace_back(Complex(1.0) / std::conj(beta), m);
        total_mult += m;
    }
    Complex dlead(1.0);
    for (const auto& [root, m] : dfac)
        for (int i = 0; i < m; ++i) dlead *= -Complex(1.0) / root;  // monic -> (1-conj b z) form
    RationalFunction denom_inv =
        dfac.empty() ? RationalFunction::one()
                     : RationalFunction(Polynomial(Complex(1.0) / dlead), dfac);
    const int kmax = degree_bound + total_mult + psi.max_entry_degree() + 6;
    const int ncols = r * (degree_bound + 1);
    std::vector<RationalMatrix> basis_funcs;
    basis_funcs.reserve(ncols);
    MatrixXcd A = MatrixXcd::Zero(psi.rows() * (kmax + 1), ncols);
    int c = 0;
    for (int j = 0; j < r; ++j) {
        for (int t = 0; t <= degree_bound; ++t, ++c) {
            std::vector<Complex> mono(static_cast<size_t>(t) + 1, Complex(0.0));
            mono[t] = Complex(1.0);
            RationalFunction bf = RationalFunction(Polynomial(std::move(mono)), {}) * denom_inv;
            RationalMatrix vec(r, 1);
            vec.at(j, 0) = bf;
            basis_funcs.push_back(vec);
            for (int i = 0; i < psi.rows(); ++i) {
                RationalFunction prod = psi.at(i, j) * bf;
                auto range = prod.fourier_range(0, kmax);
                for (int k = 0; k <= kmax; ++k) A(i * (kmax + 1) + k, c) = range[k];
            }
        }
    }
    Eigen::JacobiSVD<MatrixXcd> svd(A, Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    double smax = s.size() ? s(0) : 0.0;
    int rank = 0;
    for (int i = 0; i < s.size(); ++i)
        if (s(i) > 1e-8 * std::max(smax, 1e-30)) ++rank;
    int nullity = ncols - rank;
    std::vector<RationalMatrix> kernel_vecs;
    for (int k = 0; k < nullity; ++k) {
        Eigen::VectorXcd v = svd.matrixV().col(ncols - 1 - k);
        RationalMatrix f(r, 1);
        for (int i = 0; i < ncols; ++i) {
            if (std::abs(v(i)) < 1e-13) continue;
            f = f + basis_funcs[i] * v(i);
        }
        kernel_vecs.push_back(std::move(f));
    }
    return ModelSpace::from_vectors(r, std::move(kernel_vecs));
}

namespace {

struct KernelPoleData {
    BlaschkeProduct gcd;  // gcd of inner parts of maximal minors of the tilde matrix
    std::vector<std::pair<Complex, int>> pole_basis;
};

KernelPoleData kernel_pole_data(const RationalMatrix& tilded) {
    // maximal minors of the wide r x n analytic matrix
    const int r = tilded.rows();
    bool all_zero = false;
    KernelPoleData out;
    out.gcd = minor_inner_gcd(tilded, r, &all_zero);
    if (all_zero) throw Error(Errc::RankDeficient, "matrix has deficient pointwise rank");
    out.pole_basis = out.gcd.zeros();
    return out;
}

}  // namespace

CoprimeCertificate right_coprime(const RationalMatrix& delta, const RationalMatrix& a) {
    // Delta, A right coprime <=> tilde(Delta), tilde(A) left coprime
    // <=> cl( tilde(Delta) H^2 v tilde(A) H^2 ) = H^2.
    RationalMatrix dt = delta.tilde();
    RationalMatrix at = a.tilde();
    RationalMatrix X = RationalMatrix::hstack(dt, at);
    CoprimeCertificate out;
    KernelPoleData kp = kernel_pole_data(dt);
    const int base = kp.gcd.degree() + 2;
    ModelSpace K1 = toeplitz_kernel(X.para_conjugate(), kp.pole_basis, base);
    ModelSpace K2 = toeplitz_kernel(X.para_conjugate(), kp.pole_basis, base + 2);
    out.toeplitz_kernel_dim = K2.dim();
    bool stable = K1.dim() == K2.dim();
    // pointwise cross-check at the rank-drop candidates
    double min_sigma = 1.0;
    for (const auto& [beta, m] : kp.pole_basis) {
        Eigen::JacobiSVD<MatrixXcd> svd(X.eval(beta));
        min_sigma = std::min(min_sigma, svd.singularValues().minCoeff());
    }
    out.pointwise_min_sigma = min_sigma;
    out.coprime = out.toeplitz_kernel_dim == 0;
    bool pointwise_coprime = min_sigma > 1e-6;
    out.routes_agree = (out.coprime == pointwise_coprime);
    out.undecided = !stable || !out.routes_agree;
    return out;
}

DssResult dss_factorize(const RationalMatrix& phi, Complex probe) {
    if (!phi.linf_admissible()) throw Error(Errc::PoleOnCircle, "symbol has a circle pole");
    DssResult out;
    out.delta = adjoint_hankel_kernel_inner(phi, probe);
    out.delta_certificate = check_inner(out.delta);
    out.a = phi.para_conjugate() * out.delta;
    if (!out.a.analytic_in_closed_disk())
        throw Error(Errc::NotAnalytic, "DSS remainder is not analytic");
    RationalMatrix recon = phi - out.delta * out.a.para_conjugate();
    if (!recon.is_zero(1e-8))
        throw Error(Errc::FitFailure, "DSS reconstruction is not exact");
    out.reconstruction_residual = grid_sup_distance(out.delta * out.a.para_conjugate(), phi);
    out.coprime = right_coprime(out.delta, out.a);
    return out;
}

CanonicalResult canonical_decompose(const RationalMatrix& phi, Complex probe) {
    CanonicalResult out;
    out.dss = dss_factorize(phi, probe);
    out.b = RationalMatrix::zero(phi.rows(), phi.cols());
    out.nc = phi.rows();
    return out;
}

DeltaSResult delta_s(const RationalMatrix& delta, Complex probe) {
    InnerCertificate cert = check_inner(delta);
    if (!cert.algebraic_pass) throw Error(Errc::NotAnalytic, "delta_s needs an inner input");
    const int r = delta.cols();
    DeltaSResult out;
    if (cert.two_sided) {
        out.delta_s = delta;
        out.delta_1 = RationalMatrix::identity(r);
        out.kernel_dim = 0;
        out.factor_residual = 0.0;
        return out;
    }
    RationalMatrix dt = delta.tilde();
    KernelPoleData kp = kernel_pole_data(dt);
    const int dstar = kp.gcd.degree();
    // K = ker T_{breve Delta} = H(inner part of tilde Delta); stabilize the
    // kernel dimension under the degree bound
    RationalMatrix symbol = delta.breve_symbol();
    ModelSpace K = toeplitz_kernel(symbol, kp.pole_basis, dstar + 2);
    ModelSpace K2 = toeplitz_kernel(symbol, kp.pole_basis, dstar + 3);
    if (K.dim() != K2.dim()) {
        ModelSpace K3 = toeplitz_kernel(symbol, kp.pole_basis, dstar + 4);
        if (K2.dim() != K3.dim())
            throw Error(Errc::StabilizationFailure,
                        "kernel dimension did not stabilize by d*+4");
        K = std::move(K2);
    }
    out.kernel_dim = K.dim();
    RationalMatrix theta = model_space_to_inner(K, probe);  // = (tilde Delta)^i up to unitary
    out.delta_s = theta.tilde();
    InnerCertificate scert = check_inner(out.delta_s);
    if (!scert.algebraic_pass || !scert.two_sided)
        throw Error(Errc::StabilizationFailure, "Delta_s failed the two-sided certificate");
    out.delta_1 = delta * out.delta_s.para_conjugate();
    if (!out.delta_1.analytic_in_closed_disk())
        throw Error(Errc::StabilizationFailure, "Delta_1 is not analytic");
    InnerCertificate c1 = check_inner(out.delta_1);
    if (!c1.algebraic_pass)
        throw Error(Errc::StabilizationFailure, "Delta_1 failed the inner certificate");
    // tilde(Delta_1) outer: no common inner divisor among its maximal minors
    BlaschkeProduct g1 = minor_inner_gcd(out.delta_1.tilde(), r);
    if (g1.degree() != 0)
        throw Error(Errc::StabilizationFailure, "tilde(Delta_1) is not outer");
    out.factor_residual = grid_sup_distance(out.delta_1 * out.delta_s, delta);
    if (out.factor_residual > 1e-7)
        throw Error(Errc::StabilizationFailure, "Delta_1 Delta_s residual too large");
    return out;
}

}  // namespace msk
