#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "msk/config.hpp"

namespace msk {

using Complex = std::complex<double>;

/// Dense complex polynomial, coefficients lowest degree first.
/// The zero polynomial is the empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(Complex c) : c_{c} { trim(); }
    explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial one() { return Polynomial(Complex(1.0)); }
    static Polynomial variable();  // z
    /// leading * prod (z - r_i)
    static Polynomial from_roots(Complex leading, const std::vector<Complex>& roots);
    static Polynomial from_root_factors(Complex leading,
                                        const std::vector<std::pair<Complex, int>>& factors);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : Complex(0.0);
    }
    const std::vector<Complex>& coeffs() const { return c_; }
    Complex leading() const { return c_.empty() ? Complex(0.0) : c_.back(); }
    double max_abs() const;

    Complex operator()(Complex z) const;  // Horner
    /// k-th derivative evaluated at z.
    Complex derivative_at(Complex z, int k) const;
    /// sum |c_j| * j!/(j-k)! * |z|^(j-k); magnitude scale for derivative_at.
    double derivative_scale(Complex z, int k) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(Complex s) const;
    Polynomial operator-() const { return *this * Complex(-1.0); }

    Polynomial derivative() const;
    /// coefficient-wise conjugate: p~(z) = conj(p(conj z))
    Polynomial conj_coeffs() const;
    /// z^deg * conj(p(1/conj z)): reverse the coefficient list and conjugate
    Polynomial reversed_conj() const;
    Polynomial reversed() const;

    /// Divide out (z - root); remainder (should be ~0) is returned.
    Complex deflate(Complex root);
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    Polynomial monic() const;

    /// Raw companion-matrix eigenvalues (degree() entries), no clustering.
    std::vector<Complex> roots_raw() const;
    /// Roots clustered into (center, multiplicity) pairs; multiplicity-aware
    /// refinement keeps repeated roots from scattering.
    std::vector<std::pair<Complex, int>> roots_clustered() const;

    void trim();

private:
    std::vector<Complex> c_;
};

inline Polynomial operator*(Complex s, const Polynomial& p) { return p * s; }

/// Cluster a raw root list: first pass at tau_r, second multiplicity-aware
/// pass validated by derivative tests against p.
std::vector<std::pair<Complex, int>> cluster_roots(std::vector<Complex> roots,
                                                   const Polynomial& p);

/// Truncated power series division a/b up to order n (b[0] != 0).
std::vector<Complex> series_divide(const std::vector<Complex>& a,
                                   const std::vector<Complex>& b, int n);

/// Taylor coefficients of p around c, lowest order first.
std::vector<Complex> taylor_shift(const Polynomial& p, Complex c);

}  // namespace msk
