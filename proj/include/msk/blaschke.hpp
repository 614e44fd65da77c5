#pragma once

#include <vector>

#include "msk/rational.hpp"

namespace msk {

/// Finite Blaschke product: unimodular constant times prod b_alpha^mult with
/// b_alpha(z) = (z - alpha)/(1 - conj(alpha) z). Lattice operations compare
/// zero multisets only; the constant rides along for evaluation.
class BlaschkeProduct {
public:
    BlaschkeProduct() = default;  // the constant function 1
    BlaschkeProduct(Complex constant, std::vector<std::pair<Complex, int>> zeros);

    static BlaschkeProduct factor(Complex alpha, int mult = 1);
    static BlaschkeProduct monomial(int k);  // z^k

    int degree() const;
    const std::vector<std::pair<Complex, int>>& zeros() const { return zeros_; }
    Complex constant() const { return constant_; }
    bool is_constant() const { return zeros_.empty(); }

    Complex operator()(Complex z) const;
    RationalFunction to_rational() const;

    BlaschkeProduct operator*(const BlaschkeProduct& o) const;
    /// multiset zero equality (constant ignored)
    bool same_zeros(const BlaschkeProduct& o) const;
    bool divides(const BlaschkeProduct& o) const;
    /// multiset difference; requires divisor.divides(*this)
    BlaschkeProduct quotient(const BlaschkeProduct& divisor) const;
    int multiplicity_at(Complex alpha) const;

    /// sigma(theta) for a finite Blaschke product: the distinct zeros.
    std::vector<Complex> spectrum() const;

private:
    Complex constant_{1.0, 0.0};
    std::vector<std::pair<Complex, int>> zeros_;  // |alpha| < 1 - tau_r
    void normalize();
};

struct LatticeResult {
    BlaschkeProduct gcd;
    BlaschkeProduct lcm;
    bool coprime;
};

/// Per-zero min/max multiplicities after clustering. Throws
/// ZeroClusterAmbiguity when two zeros sit in the dead band
/// (tau_r/10, tau_r) where identity cannot be decided.
LatticeResult inner_lattice(const BlaschkeProduct& b1, const BlaschkeProduct& b2);

BlaschkeProduct inner_gcd(const std::vector<BlaschkeProduct>& items);
BlaschkeProduct inner_lcm(const std::vector<BlaschkeProduct>& items);

struct InnerOuterScalar {
    BlaschkeProduct inner;
    RationalFunction outer;
    bool boundary_zero = false;  // warning: a circle zero stayed with the outer part
};

/// f analytic in the closed disk; inner part collects the open-disk zeros.
InnerOuterScalar inner_outer_scalar(const RationalFunction& f);

struct SpectralFactorScalar {
    RationalFunction outer;
    bool boundary_zero = false;
};

/// R para-Hermitian and >= 0 on the circle; returns outer o with o o~ = R.
SpectralFactorScalar spectral_factor_scalar(const RationalFunction& R);

struct BtDecomposition {
    BlaschkeProduct theta;
    RationalFunction a;
};

/// Bounded-type decomposition phi = theta * conj(a) on the circle with
/// a in H^infty and theta coprime to the inner part of a.
BtDecomposition bt_decompose(const RationalFunction& phi);

std::vector<Complex> spectrum_inner(const BlaschkeProduct& b);

}  // namespace msk
