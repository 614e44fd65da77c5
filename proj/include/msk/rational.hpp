#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "msk/polynomial.hpp"

namespace msk {

/// Reduced complex-rational function. The denominator is kept in factored
/// monic form prod (z - p)^m so pole locations never go through a root
/// finder once known. The numerator is a dense polynomial; reduction
/// cancels numerator zeros against known denominator roots by evaluation.
class RationalFunction {
public:
    RationalFunction() = default;  // zero
    RationalFunction(Polynomial num, std::vector<std::pair<Complex, int>> den_factors);
    /// Expanded-denominator form; den is factored by the root finder.
    static RationalFunction from_num_den(Polynomial num, const Polynomial& den);

    static RationalFunction constant(Complex c) { return RationalFunction(Polynomial(c), {}); }
    static RationalFunction one() { return constant(Complex(1.0)); }
    static RationalFunction variable() { return RationalFunction(Polynomial::variable(), {}); }
    /// 1/(1 - conj(w) z), the Szego kernel at w; deriv_order t gives
    /// t! z^t/(1 - conj(w) z)^(t+1), representing f -> f^(t)(w).
    static RationalFunction szego_kernel(Complex w, int deriv_order = 0);

    const Polynomial& num() const { return num_; }
    const std::vector<std::pair<Complex, int>>& den_factors() const { return den_; }
    Polynomial den() const;  // expanded monic denominator
    int den_degree() const;

    bool is_zero(double rel = 0.0) const;  // rel=0 uses tol().coeff_zero
    bool is_constant() const { return den_.empty() && num_.degree() <= 0; }
    Complex constant_value() const { return num_.coeff(0); }

    Complex operator()(Complex z) const;

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator*(Complex s) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator-() const { return *this * Complex(-1.0); }

    /// Multiplicative inverse; numerator roots become poles (root solve).
    RationalFunction reciprocal() const;

    /// R~(z) = conj(R(1/conj z)); equals conj(R(z)) on the circle.
    RationalFunction para_conjugate() const;
    /// coefficient conjugate: conj(R(conj z)); zeros/poles conjugate.
    RationalFunction tilde_scalar() const;
    /// R(1/z); equals R(conj z) on the circle (the flip's boundary values).
    RationalFunction breve_symbol() const;
    RationalFunction derivative() const;

    std::vector<std::pair<Complex, int>> poles() const { return den_; }
    /// Numerator roots, clustered (root solve).
    std::vector<std::pair<Complex, int>> zeros() const;

    /// no poles with |p| <= 1 + margin (margin defaults to tau_r)
    bool analytic_in_closed_disk(double margin = -1.0) const;
    /// no poles with ||p| - 1| <= tau_r
    bool linf_admissible() const;

    /// Laurent coefficients around p for orders w^k, k = k_lo..k_hi.
    std::vector<Complex> laurent_at(Complex p, int k_lo, int k_hi) const;
    /// order of the pole at p (0 if analytic there)
    int pole_order(Complex p) const;

    /// Fourier coefficient of the boundary restriction (exact partial fractions).
    Complex fourier_coeff(int k) const;
    /// Batched Fourier coefficients k_lo..k_hi (partial fractions computed once).
    std::vector<Complex> fourier_range(int k_lo, int k_hi) const;
    /// Integral over the circle (mean value) = fourier_coeff(0).
    Complex circle_mean() const { return fourier_coeff(0); }

    /// P+ / P- split of the boundary function: analytic part has poles
    /// outside the closed disk plus the polynomial part (Fourier >= 0),
    /// co-analytic part has poles inside (strictly negative Fourier).
    void hardy_split(RationalFunction& plus, RationalFunction& minus) const;

private:
    void reduce();
    Polynomial num_;                              // zero polynomial -> value 0
    std::vector<std::pair<Complex, int>> den_;    // factored monic denominator
};

inline RationalFunction operator*(Complex s, const RationalFunction& r) { return r * s; }

}  // namespace msk
