#include "msk/polynomial.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

namespace msk {

namespace {

double scale_of(const std::vector<Complex>& c) {
    double s = 0.0;
    for (const auto& x : c) s = std::max(s, std::abs(x));
    return s;
}

}  // namespace

void Polynomial::trim() {
    const double cut = tol().coeff_zero * std::max(1.0, scale_of(c_));
    while (!c_.empty() && std::abs(c_.back()) <= cut) c_.pop_back();
    // snap interior near-zeros produced by cancellation to exact zero
    for (auto& x : c_)
        if (std::abs(x) <= cut) x = Complex(0.0);
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Complex>{Complex(0.0), Complex(1.0)});
}

Polynomial Polynomial::from_roots(Complex leading, const std::vector<Complex>& roots) {
    std::vector<Complex> c{leading};
    for (Complex r : roots) {
        c.push_back(c.back());
        for (int k = static_cast<int>(c.size()) - 2; k > 0; --k) c[k] = c[k - 1] - r * c[k];
        c[0] = -r * c[0];
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::from_root_factors(Complex leading,
                                         const std::vector<std::pair<Complex, int>>& factors) {
    std::vector<Complex> roots;
    for (const auto& [r, m] : factors)
        for (int i = 0; i < m; ++i) roots.push_back(r);
    return from_roots(leading, roots);
}

double Polynomial::max_abs() const { return scale_of(c_); }

Complex Polynomial::operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Complex Polynomial::derivative_at(Complex z, int k) const {
    // sum_j c_j * j!/(j-k)! z^{j-k}
    Complex acc(0.0);
    const int n = degree();
    for (int j = n; j >= k; --j) {
        double f = 1.0;
        for (int t = 0; t < k; ++t) f *= static_cast<double>(j - t);
        acc = acc * z + c_[j] * f;
    }
    return acc;
}

double Polynomial::derivative_scale(Complex z, int k) const {
    double acc = 0.0;
    const double az = std::abs(z);
    const int n = degree();
    for (int j = n; j >= k; --j) {
        double f = 1.0;
        for (int t = 0; t < k; ++t) f *= static_cast<double>(j - t);
        acc = acc * az + std::abs(c_[j]) * f;
    }
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Complex> c(std::max(c_.size(), o.c_.size()), Complex(0.0));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Complex> c(c_.size() + o.c_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> c(c_);
    for (auto& x : c) x *= s;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Complex> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::conj_coeffs() const {
    std::vector<Complex> c(c_);
    for (auto& x : c) x = std::conj(x);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed_conj() const {
    std::vector<Complex> c(c_.rbegin(), c_.rend());
    for (auto& x : c) x = std::conj(x);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed() const {
    std::vector<Complex> c(c_.rbegin(), c_.rend());
    return Polynomial(std::move(c));
}

Complex Polynomial::deflate(Complex root) {
    if (c_.empty()) return Complex(0.0);
    Complex value = (*this)(root);
    const int n = static_cast<int>(c_.size()) - 1;
    if (std::abs(root) <= 1.0) {
        // forward synthetic division, stable for roots in the closed disk
        Complex carry(0.0);
        for (int k = n; k >= 0; --k) {
            Complex tmp = c_[k];
            c_[k] = carry;
            carry = tmp + root * carry;
        }
        c_.pop_back();
    } else {
        // backward recurrence divides by the root each step, stable outside
        Complex prev(0.0);
        for (int k = 0; k < n; ++k) {
            Complex q = (prev - c_[k]) / root;
            prev = q;
            c_[k] = q;
        }
        c_.pop_back();
    }
    trim();
    return value;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw Error(Errc::Singular, "polynomial division by zero");
    std::vector<Complex> rem(a.c_);
    const int db = b.degree();
    const int da = a.degree();
    if (da < db) {
        q = Polynomial();
        r = a;
        return;
    }
    std::vector<Complex> quot(da - db + 1, Complex(0.0));
    for (int k = da - db; k >= 0; --k) {
        Complex coef = rem[k + db] / b.c_[db];
        quot[k] = coef;
        for (int j = 0; j <= db; ++j) rem[k + j] -= coef * b.c_[j];
    }
    q = Polynomial(std::move(quot));
    rem.resize(db > 0 ? db : 0);
    r = Polynomial(std::move(rem));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return *this * (Complex(1.0) / leading());
}

std::vector<Complex> Polynomial::roots_raw() const {
    std::vector<Complex> out;
    if (degree() <= 0) return out;
    // exact zero roots from trailing zero coefficients first
    std::vector<Complex> c(c_);
    size_t lead_zero = 0;
    while (lead_zero < c.size() - 1 && c[lead_zero] == Complex(0.0)) ++lead_zero;
    for (size_t i = 0; i < lead_zero; ++i) out.push_back(Complex(0.0));
    c.erase(c.begin(), c.begin() + lead_zero);
    const int n = static_cast<int>(c.size()) - 1;
    if (n <= 0) return out;
    if (n == 1) {
        out.push_back(-c[0] / c[1]);
        return out;
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[i] / c[n];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(companion, false);
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

namespace {

// Newton polish of a multiplicity-m root using the (m-1)-th derivative.
Complex polish_multiple_root(const Polynomial& p, Complex c, int m) {
    for (int it = 0; it < 8; ++it) {
        Complex f = p.derivative_at(c, m - 1);
        Complex fp = p.derivative_at(c, m);
        if (std::abs(fp) == 0.0) break;
        Complex step = f / fp;
        c -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(c))) break;
    }
    return c;
}

bool multiplicity_confirmed(const Polynomial& p, Complex c, int m, double eps) {
    for (int k = 0; k < m; ++k) {
        double scale = p.derivative_scale(c, k);
        if (scale == 0.0) continue;
        if (std::abs(p.derivative_at(c, k)) > eps * scale) return false;
    }
    return true;
}

}  // namespace

std::vector<std::pair<Complex, int>> cluster_roots(std::vector<Complex> roots,
                                                   const Polynomial& p) {
    std::vector<std::pair<Complex, int>> clusters;
    if (roots.empty()) return clusters;
    std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    const double tight = tol().root_cluster;
    std::vector<bool> used(roots.size(), false);
    // greedy union at the tight radius
    for (size_t i = 0; i < roots.size(); ++i) {
        if (used[i]) continue;
        Complex sum = roots[i];
        int cnt = 1;
        used[i] = true;
        bool grew = true;
        while (grew) {
            grew = false;
            Complex center = sum / static_cast<double>(cnt);
            for (size_t j = 0; j < roots.size(); ++j) {
                if (used[j]) continue;
                if (std::abs(roots[j] - center) <= tight * std::max(1.0, std::abs(center))) {
                    sum += roots[j];
                    ++cnt;
                    used[j] = true;
                    grew = true;
                }
            }
        }
        clusters.emplace_back(sum / static_cast<double>(cnt), cnt);
    }
    // second pass: companion eigenvalues of an m-fold root scatter like
    // eps^(1/m), which can reach ~1e-3 for m ~ 5. Attempt merges inside a
    // generous radius and let the derivative test at the polished centroid
    // decide; genuinely distinct roots fail the test decisively.
    const double wide = 0.02;
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < clusters.size() && !merged; ++i) {
            for (size_t j = i + 1; j < clusters.size() && !merged; ++j) {
                Complex ci = clusters[i].first, cj = clusters[j].first;
                if (std::abs(ci - cj) > wide * std::max(1.0, std::abs(ci))) continue;
                int m = clusters[i].second + clusters[j].second;
                Complex cand = (ci * static_cast<double>(clusters[i].second) +
                                cj * static_cast<double>(clusters[j].second)) /
                               static_cast<double>(m);
                cand = polish_multiple_root(p, cand, m);
                if (multiplicity_confirmed(p, cand, m, 1e-8)) {
                    clusters[i] = {cand, m};
                    clusters.erase(clusters.begin() + static_cast<long>(j));
                    merged = true;
                }
            }
        }
    }
    // polish every multiple root; singles get one plain Newton step
    for (auto& [c, m] : clusters) {
        if (m > 1)
            c = polish_multiple_root(p, c, m);
        else {
            Complex f = p(c), fp = p.derivative_at(c, 1);
            if (std::abs(fp) > 0.0 && std::abs(f / fp) < 1e-6 * (1.0 + std::abs(c))) c -= f / fp;
        }
    }
    std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
    return clusters;
}

std::vector<std::pair<Complex, int>> Polynomial::roots_clustered() const {
    return cluster_roots(roots_raw(), *this);
}

std::vector<Complex> series_divide(const std::vector<Complex>& a, const std::vector<Complex>& b,
                                   int n) {
    std::vector<Complex> q(static_cast<size_t>(n) + 1, Complex(0.0));
    if (b.empty() || b[0] == Complex(0.0))
        throw Error(Errc::Singular, "series division by zero constant term");
    for (int k = 0; k <= n; ++k) {
        Complex acc = k < static_cast<int>(a.size()) ? a[k] : Complex(0.0);
        for (int j = 1; j <= k && j < static_cast<int>(b.size()); ++j) acc -= b[j] * q[k - j];
        q[k] = acc / b[0];
    }
    return q;
}

std::vector<Complex> taylor_shift(const Polynomial& p, Complex c) {
    // repeated synthetic division: p(z) = sum t_k (z - c)^k
    const int n = p.degree();
    if (n < 0) return {Complex(0.0)};
    std::vector<Complex> work(p.coeffs());
    std::vector<Complex> out(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
        // divide work[0..n-k] by (z - c); remainder is t_k, quotient stays in place
        Complex carry(0.0);
        for (int j = n - k; j >= 0; --j) {
            Complex tmp = work[j];
            work[j] = carry;
            carry = tmp + c * carry;
        }
        out[k] = carry;
    }
    return out;
}

}  // namespace msk
