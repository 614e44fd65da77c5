#include "msk/rational.hpp"

#include <algorithm>
#include <cmath>

namespace msk {

namespace {

constexpr double kFactorMatch = 1e-12;   // bitwise-noise level for pole identity
constexpr double kCancelEps = 3e-9;      // relative zero test for num(pole)

void merge_factor(std::vector<std::pair<Complex, int>>& fs, Complex root, int mult) {
    for (auto& [r, m] : fs) {
        if (std::abs(r - root) <= kFactorMatch * std::max(1.0, std::abs(r))) {
            m += mult;
            return;
        }
    }
    fs.emplace_back(root, mult);
}

void sort_factors(std::vector<std::pair<Complex, int>>& fs) {
    std::sort(fs.begin(), fs.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
}

double eval_scale(const Polynomial& p, Complex z) {
    double acc = 0.0, az = std::abs(z), pw = 1.0;
    for (const auto& c : p.coeffs()) {
        acc += std::abs(c) * pw;
        pw *= az;
    }
    return acc;
}

Polynomial factors_to_poly(const std::vector<std::pair<Complex, int>>& fs) {
    return Polynomial::from_root_factors(Complex(1.0), fs);
}

}  // namespace

RationalFunction::RationalFunction(Polynomial num, std::vector<std::pair<Complex, int>> den)
    : num_(std::move(num)), den_(std::move(den)) {
    std::vector<std::pair<Complex, int>> merged;
    for (const auto& [r, m] : den_)
        if (m > 0) merge_factor(merged, r, m);
    den_ = std::move(merged);
    reduce();
}

RationalFunction RationalFunction::from_num_den(Polynomial num, const Polynomial& den) {
    if (den.is_zero()) throw Error(Errc::Singular, "zero denominator");
    return RationalFunction(num * (Complex(1.0) / den.leading()),
                            den.monic().roots_clustered());
}

void RationalFunction::reduce() {
    num_.trim();
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<std::pair<Complex, int>> kept;
    for (auto [root, mult] : den_) {
        while (mult > 0) {
            // the floor keeps exact zeros (e.g. p(0) with zero constant term)
            // cancellable even when the evaluation scale degenerates
            double scale = std::max(eval_scale(num_, root), 1e-3 * num_.max_abs());
            if (scale == 0.0) break;
            if (std::abs(num_(root)) > kCancelEps * scale) break;
            num_.deflate(root);
            --mult;
            if (num_.is_zero()) {
                den_.clear();
                return;
            }
        }
        if (mult > 0) kept.emplace_back(root, mult);
    }
    den_ = std::move(kept);
    sort_factors(den_);
    num_.trim();
}

RationalFunction RationalFunction::szego_kernel(Complex w, int deriv_order) {
    const int t = deriv_order;
    double fact = 1.0;
    for (int i = 2; i <= t; ++i) fact *= i;
    std::vector<Complex> mono(static_cast<size_t>(t) + 1, Complex(0.0));
    mono[t] = Complex(fact);
    Polynomial num{std::vector<Complex>(mono)};
    Complex wb = std::conj(w);
    if (std::abs(wb) == 0.0) return RationalFunction(num, {});
    // (1 - wb z)^{t+1} = (-wb)^{t+1} (z - 1/wb)^{t+1}
    Complex c = std::pow(-wb, t + 1);
    return RationalFunction(num * (Complex(1.0) / c), {{Complex(1.0) / wb, t + 1}});
}

Polynomial RationalFunction::den() const { return factors_to_poly(den_); }

int RationalFunction::den_degree() const {
    int d = 0;
    for (const auto& [r, m] : den_) d += m;
    return d;
}

bool RationalFunction::is_zero(double rel) const {
    if (num_.is_zero()) return true;
    if (rel <= 0.0) return false;
    return num_.max_abs() <= rel * (1.0 + den().max_abs());
}

Complex RationalFunction::operator()(Complex z) const {
    Complex v = num_(z);
    for (const auto& [r, m] : den_)
        for (int i = 0; i < m; ++i) v /= (z - r);
    return v;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    if (num_.is_zero()) return o;
    if (o.num_.is_zero()) return *this;
    // union denominator with per-root max multiplicity
    std::vector<std::pair<Complex, int>> common = den_;
    for (const auto& [r, m] : o.den_) {
        bool found = false;
        for (auto& [cr, cm] : common) {
            if (std::abs(cr - r) <= kFactorMatch * std::max(1.0, std::abs(cr))) {
                cm = std::max(cm, m);
                found = true;
                break;
            }
        }
        if (!found) common.emplace_back(r, m);
    }
    auto deficit = [&](const std::vector<std::pair<Complex, int>>& own) {
        std::vector<std::pair<Complex, int>> extra;
        for (const auto& [cr, cm] : common) {
            int have = 0;
            for (const auto& [r, m] : own)
                if (std::abs(cr - r) <= kFactorMatch * std::max(1.0, std::abs(cr))) have = m;
            if (cm > have) extra.emplace_back(cr, cm - have);
        }
        return extra;
    };
    Polynomial a = num_ * factors_to_poly(deficit(den_));
    Polynomial b = o.num_ * factors_to_poly(deficit(o.den_));
    return RationalFunction(a + b, common);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return *this + (o * Complex(-1.0));
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (num_.is_zero() || o.num_.is_zero()) return RationalFunction();
    std::vector<std::pair<Complex, int>> den = den_;
    for (const auto& [r, m] : o.den_) merge_factor(den, r, m);
    return RationalFunction(num_ * o.num_, std::move(den));
}

RationalFunction RationalFunction::operator*(Complex s) const {
    if (s == Complex(0.0)) return RationalFunction();
    RationalFunction r(*this);
    r.num_ = r.num_ * s;
    return r;
}

RationalFunction RationalFunction::reciprocal() const {
    if (num_.is_zero()) throw Error(Errc::Singular, "reciprocal of zero");
    Polynomial new_num = den()* (Complex(1.0) / num_.leading());
    return RationalFunction(std::move(new_num), num_.monic().roots_clustered());
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    return *this * o.reciprocal();
}

RationalFunction RationalFunction::para_conjugate() const {
    if (num_.is_zero()) return RationalFunction();
    // p~ = rev(conj p)/z^{deg p}; 1/(z-d)~ = -z/(dbar (z - 1/dbar)) or z for d=0
    const int dp = std::max(num_.degree(), 0);
    RationalFunction out(num_.reversed_conj(), {{Complex(0.0), dp}});
    for (const auto& [d, m] : den_) {
        RationalFunction piece;
        if (std::abs(d) == 0.0) {
            piece = RationalFunction(Polynomial::variable(), {});
        } else {
            Complex db = std::conj(d);
            piece = RationalFunction(Polynomial::variable() * (-Complex(1.0) / db),
                                     {{Complex(1.0) / db, 1}});
        }
        for (int i = 0; i < m; ++i) out = out * piece;
    }
    return out;
}

RationalFunction RationalFunction::tilde_scalar() const {
    std::vector<std::pair<Complex, int>> den;
    den.reserve(den_.size());
    for (const auto& [r, m] : den_) den.emplace_back(std::conj(r), m);
    return RationalFunction(num_.conj_coeffs(), std::move(den));
}

RationalFunction RationalFunction::breve_symbol() const {
    if (num_.is_zero()) return RationalFunction();
    const int dp = std::max(num_.degree(), 0);
    RationalFunction out(num_.reversed(), {{Complex(0.0), dp}});
    for (const auto& [d, m] : den_) {
        RationalFunction piece;
        if (std::abs(d) == 0.0) {
            piece = RationalFunction(Polynomial::variable(), {});
        } else {
            piece = RationalFunction(Polynomial::variable() * (-Complex(1.0) / d),
                                     {{Complex(1.0) / d, 1}});
        }
        for (int i = 0; i < m; ++i) out = out * piece;
    }
    return out;
}

RationalFunction RationalFunction::derivative() const {
    // (n/d)' = (n'd - nd')/d^2 computed factor-wise to keep the den factored
    RationalFunction out(num_.derivative(), den_);
    for (const auto& [r, m] : den_) {
        std::vector<std::pair<Complex, int>> den = den_;
        merge_factor(den, r, 1);
        out = out - RationalFunction(num_ * static_cast<double>(m), std::move(den));
    }
    return out;
}

std::vector<std::pair<Complex, int>> RationalFunction::zeros() const {
    if (num_.is_zero()) return {};
    return num_.roots_clustered();
}

bool RationalFunction::analytic_in_closed_disk(double margin) const {
    if (margin < 0.0) margin = tol().root_cluster;
    for (const auto& [r, m] : den_)
        if (std::abs(r) <= 1.0 + margin) return false;
    return true;
}

bool RationalFunction::linf_admissible() const {
    for (const auto& [r, m] : den_)
        if (std::abs(std::abs(r) - 1.0) <= tol().root_cluster) return false;
    return true;
}

int RationalFunction::pole_order(Complex p) const {
    for (const auto& [r, m] : den_)
        if (std::abs(r - p) <= tol().root_cluster * std::max(1.0, std::abs(p))) return m;
    return 0;
}

std::vector<Complex> RationalFunction::laurent_at(Complex p, int k_lo, int k_hi) const {
    const int m = pole_order(p);
    // h = R (z-p)^m is analytic at p; Taylor-divide shifted num by shifted den
    std::vector<std::pair<Complex, int>> rest;
    for (const auto& [r, mm] : den_)
        if (std::abs(r - p) > tol().root_cluster * std::max(1.0, std::abs(p)))
            rest.emplace_back(r, mm);
    const int order = k_hi + m;
    std::vector<Complex> out;
    if (order < 0) {
        out.assign(static_cast<size_t>(k_hi - k_lo + 1), Complex(0.0));
        return out;
    }
    std::vector<Complex> ns = taylor_shift(num_, p);
    std::vector<Complex> ds = taylor_shift(factors_to_poly(rest), p);
    std::vector<Complex> series = series_divide(ns, ds, order);
    out.reserve(static_cast<size_t>(k_hi - k_lo + 1));
    for (int k = k_lo; k <= k_hi; ++k) {
        int idx = k + m;
        out.push_back(idx >= 0 && idx <= order ? series[idx] : Complex(0.0));
    }
    return out;
}

std::vector<Complex> RationalFunction::fourier_range(int k_lo, int k_hi) const {
    std::vector<Complex> out(static_cast<size_t>(k_hi - k_lo + 1), Complex(0.0));
    if (num_.is_zero()) return out;
    if (!linf_admissible()) throw Error(Errc::PoleOnCircle, "fourier coefficient of circle pole");
    Polynomial q, r;
    Polynomial::divmod(num_, den(), q, r);
    for (int k = std::max(k_lo, 0); k <= std::min(k_hi, q.degree()); ++k)
        out[k - k_lo] = q.coeff(k);
    for (const auto& [p, m] : den_) {
        auto pp = laurent_at(p, -m, -1);  // principal coefficients c_l = pp[m-l]
        const bool inside = std::abs(p) < 1.0;
        for (int l = 1; l <= m; ++l) {
            Complex c = pp[m - l];
            if (c == Complex(0.0)) continue;
            if (inside) {
                // 1/(z-p)^l has coeff C(l-1+i,i) p^i at index -l-i
                Complex term = c;
                for (int i = 0; -l - i >= k_lo; ++i) {
                    if (i > 0) term *= p * (static_cast<double>(l - 1 + i) / i);
                    int k = -l - i;
                    if (k <= k_hi) out[k - k_lo] += term;
                }
            } else {
                // 1/(z-p)^l has coeff (-1)^l C(l-1+k,k) p^{-l-k} at index k >= 0
                if (k_hi < 0) continue;
                Complex term = c * std::pow(-Complex(1.0), l) * std::pow(p, -l);
                for (int k = 0; k <= k_hi; ++k) {
                    if (k > 0) term *= (static_cast<double>(l - 1 + k) / k) / p;
                    if (k >= k_lo) out[k - k_lo] += term;
                }
            }
        }
    }
    return out;
}

Complex RationalFunction::fourier_coeff(int k) const { return fourier_range(k, k)[0]; }

void RationalFunction::hardy_split(RationalFunction& plus, RationalFunction& minus) const {
    if (!linf_admissible()) throw Error(Errc::PoleOnCircle, "hardy split of circle pole");
    Polynomial q, r;
    Polynomial::divmod(num_, den(), q, r);
    plus = RationalFunction(q, {});
    minus = RationalFunction();
    for (const auto& [p, m] : den_) {
        auto pp = laurent_at(p, -m, -1);
        RationalFunction part;
        for (int l = 1; l <= m; ++l) {
            Complex c = pp[m - l];
            if (c == Complex(0.0)) continue;
            part = part + RationalFunction(Polynomial(c), {{p, l}});
        }
        if (std::abs(p) < 1.0)
            minus = minus + part;
        else
            plus = plus + part;
    }
}

}  // namespace msk
