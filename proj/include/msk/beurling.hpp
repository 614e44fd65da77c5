#pragma once

#include <optional>

#include "msk/model_space.hpp"

namespace msk {

inline constexpr Complex kDefaultProbe{0.41, 0.23};

/// Theta with ker H*_{flip(Phi)} = Theta H^2 (square two-sided for rational Phi).
RationalMatrix adjoint_hankel_kernel_inner(const RationalMatrix& phi,
                                           Complex probe = kDefaultProbe);

/// Outer O with O~ O = G for para-Hermitian G positive on the circle
/// (Bauer block-Toeplitz factorization + rational refit).
RationalMatrix matrix_spectral_factor(const RationalMatrix& G);

struct InnerOuterPair {
    RationalMatrix inner;
    InnerCertificate inner_certificate;
    RationalMatrix outer;
    double residual = 0.0;
};

/// F = F^i F^e for analytic F of full column rank a.e.
InnerOuterPair inner_outer_matrix(const RationalMatrix& N);

/// Minimal-degree polynomial basis of the pointwise right nullspace of M.
RationalMatrix poly_nullspace_basis(const RationalMatrix& M);

/// Complementary factor Delta_c with ker Delta^* = Delta_c H^2;
/// empty (n x 0) when Delta is square.
RationalMatrix complementary_factor(const RationalMatrix& delta);

struct CoprimeCertificate {
    bool coprime = false;
    bool undecided = false;
    int toeplitz_kernel_dim = -1;   // stabilized kernel dim of the closed-range test
    double pointwise_min_sigma = 1.0;
    bool routes_agree = true;
};

/// Right coprimeness of (Delta, A): triviality of the Beurling inner
/// function of cl(Delta~H^2 v A~H^2), decided by truncated Toeplitz kernel
/// sections cross-checked with a pointwise rank test.
CoprimeCertificate right_coprime(const RationalMatrix& delta, const RationalMatrix& a);

struct DssResult {
    RationalMatrix delta;  // n x n two-sided inner
    RationalMatrix a;      // m x n analytic
    InnerCertificate delta_certificate;
    CoprimeCertificate coprime;
    double reconstruction_residual = 0.0;  // Phi - Delta A~ == 0 (algebraic)
};

/// Douglas-Shapiro-Shields factorization Phi = Delta A^*.
DssResult dss_factorize(const RationalMatrix& phi, Complex probe = kDefaultProbe);

struct CanonicalResult {
    DssResult dss;
    RationalMatrix b;  // zero for rational input
    int nc = 0;        // nc{Phi_+} = dim E' = n
};

/// Canonical decomposition Phi = Delta A^* + B; rational inputs have B = 0.
CanonicalResult canonical_decompose(const RationalMatrix& phi, Complex probe = kDefaultProbe);

struct DeltaSResult {
    RationalMatrix delta_s;   // r x r two-sided inner
    RationalMatrix delta_1;   // n x r inner, tilde(delta_1) outer
    int kernel_dim = 0;       // dim ker T_{breve Delta}
    double factor_residual = 0.0;  // grid residual of Delta - Delta_1 Delta_s
};

/// Square reduction Delta = Delta_1 Delta_s with Delta_s = tilde((tilde Delta)^i).
DeltaSResult delta_s(const RationalMatrix& delta, Complex probe = kDefaultProbe);

/// ker T_Psi for an n x r rational symbol Psi whose kernel elements have
/// denominators dividing prod (1 - conj(beta) z)^m over the given pole set;
/// used by delta_s and the coprimeness certificate.
ModelSpace toeplitz_kernel(const RationalMatrix& psi,
                           const std::vector<std::pair<Complex, int>>& pole_basis,
                           int degree_bound);

}  // namespace msk
