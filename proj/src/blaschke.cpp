#include "msk/blaschke.hpp"

#include <algorithm>
#include <cmath>

namespace msk {

namespace {

bool same_point(Complex a, Complex b, double r) {
    return std::abs(a - b) <= r * std::max(1.0, std::abs(a));
}

void push_zero(std::vector<std::pair<Complex, int>>& zs, Complex a, int m) {
    for (auto& [z, k] : zs) {
        if (same_point(z, a, tol().root_cluster)) {
            k += m;
            return;
        }
    }
    zs.emplace_back(a, m);
}

void sort_zeros(std::vector<std::pair<Complex, int>>& zs) {
    std::sort(zs.begin(), zs.end(), [](const auto& a, const auto& b) {
        if (a.first.real() != b.first.real()) return a.first.real() < b.first.real();
        return a.first.imag() < b.first.imag();
    });
}

}  // namespace

BlaschkeProduct::BlaschkeProduct(Complex constant, std::vector<std::pair<Complex, int>> zeros)
    : constant_(constant), zeros_(std::move(zeros)) {
    normalize();
}

void BlaschkeProduct::normalize() {
    double ac = std::abs(constant_);
    if (std::abs(ac - 1.0) > 1e-6)
        throw Error(Errc::NotAnalytic, "Blaschke constant must be unimodular");
    constant_ /= ac;
    std::vector<std::pair<Complex, int>> merged;
    for (const auto& [a, m] : zeros_) {
        if (m <= 0) continue;
        if (std::abs(a) >= 1.0 - tol().root_cluster)
            throw Error(Errc::NotAnalytic, "Blaschke zero outside the open disk");
        push_zero(merged, a, m);
    }
    zeros_ = std::move(merged);
    sort_zeros(zeros_);
}

BlaschkeProduct BlaschkeProduct::factor(Complex alpha, int mult) {
    return BlaschkeProduct(Complex(1.0), {{alpha, mult}});
}

BlaschkeProduct BlaschkeProduct::monomial(int k) {
    if (k == 0) return BlaschkeProduct();
    return BlaschkeProduct(Complex(1.0), {{Complex(0.0), k}});
}

int BlaschkeProduct::degree() const {
    int d = 0;
    for (const auto& [a, m] : zeros_) d += m;
    return d;
}

Complex BlaschkeProduct::operator()(Complex z) const {
    Complex v = constant_;
    for (const auto& [a, m] : zeros_) {
        Complex f = (z - a) / (Complex(1.0) - std::conj(a) * z);
        for (int i = 0; i < m; ++i) v *= f;
    }
    return v;
}

RationalFunction BlaschkeProduct::to_rational() const {
    RationalFunction out = RationalFunction::constant(constant_);
    for (const auto& [a, m] : zeros_) {
        RationalFunction f;
        if (std::abs(a) == 0.0) {
            f = RationalFunction::variable();
        } else {
            // (z-a)/(1-conj(a)z) = (-1/conj(a)) (z-a)/(z-1/conj(a))
            Complex ab = std::conj(a);
            f = RationalFunction(Polynomial::from_roots(-Complex(1.0) / ab, {a}),
                                 {{Complex(1.0) / ab, 1}});
        }
        for (int i = 0; i < m; ++i) out = out * f;
    }
    return out;
}

BlaschkeProduct BlaschkeProduct::operator*(const BlaschkeProduct& o) const {
    std::vector<std::pair<Complex, int>> zs = zeros_;
    for (const auto& [a, m] : o.zeros_) push_zero(zs, a, m);
    return BlaschkeProduct(constant_ * o.constant_, std::move(zs));
}

int BlaschkeProduct::multiplicity_at(Complex alpha) const {
    for (const auto& [a, m] : zeros_)
        if (same_point(a, alpha, tol().root_cluster)) return m;
    return 0;
}

bool BlaschkeProduct::same_zeros(const BlaschkeProduct& o) const {
    if (degree() != o.degree()) return false;
    for (const auto& [a, m] : zeros_)
        if (o.multiplicity_at(a) != m) return false;
    return true;
}

bool BlaschkeProduct::divides(const BlaschkeProduct& o) const {
    for (const auto& [a, m] : zeros_)
        if (o.multiplicity_at(a) < m) return false;
    return true;
}

BlaschkeProduct BlaschkeProduct::quotient(const BlaschkeProduct& divisor) const {
    if (!divisor.divides(*this))
        throw Error(Errc::Singular, "Blaschke quotient of a non-divisor");
    std::vector<std::pair<Complex, int>> zs;
    for (const auto& [a, m] : zeros_) {
        int k = m - divisor.multiplicity_at(a);
        if (k > 0) zs.emplace_back(a, k);
    }
    return BlaschkeProduct(constant_ / divisor.constant_, std::move(zs));
}

std::vector<Complex> BlaschkeProduct::spectrum() const {
    std::vector<Complex> out;
    out.reserve(zeros_.size());
    for (const auto& [a, m] : zeros_) out.push_back(a);
    return out;
}

LatticeResult inner_lattice(const BlaschkeProduct& b1, const BlaschkeProduct& b2) {
    const double tau = tol().root_cluster;
    // dead band: distances in (tau/10, tau) between zeros of distinct
    // products cannot be resolved as equal or distinct
    for (const auto& [a, ma] : b1.zeros()) {
        for (const auto& [b, mb] : b2.zeros()) {
            double d = std::abs(a - b) / std::max(1.0, std::abs(a));
            if (d > tau / 10.0 && d < tau)
                throw Error(Errc::ZeroClusterAmbiguity,
                            "zero pair in the undecidable band near " + std::to_string(a.real()));
        }
    }
    std::vector<std::pair<Complex, int>> gcd_zs, lcm_zs;
    for (const auto& [a, ma] : b1.zeros()) {
        int mb = b2.multiplicity_at(a);
        if (std::min(ma, mb) > 0) gcd_zs.emplace_back(a, std::min(ma, mb));
        lcm_zs.emplace_back(a, std::max(ma, mb));
    }
    for (const auto& [b, mb] : b2.zeros())
        if (b1.multiplicity_at(b) == 0) lcm_zs.emplace_back(b, mb);
    LatticeResult out{BlaschkeProduct(Complex(1.0), std::move(gcd_zs)),
                      BlaschkeProduct(Complex(1.0), std::move(lcm_zs)), false};
    out.coprime = out.gcd.degree() == 0;
    return out;
}

BlaschkeProduct inner_gcd(const std::vector<BlaschkeProduct>& items) {
    if (items.empty()) return BlaschkeProduct();
    BlaschkeProduct g = items.front();
    for (size_t i = 1; i < items.size(); ++i) g = inner_lattice(g, items[i]).gcd;
    return g;
}

BlaschkeProduct inner_lcm(const std::vector<BlaschkeProduct>& items) {
    BlaschkeProduct l;
    for (const auto& b : items) l = inner_lattice(l, b).lcm;
    return l;
}

InnerOuterScalar inner_outer_scalar(const RationalFunction& f) {
    const double tau = tol().root_cluster;
    for (const auto& [p, m] : f.poles())
        if (std::abs(p) <= 1.0 + tau)
            throw Error(Errc::NotAnalytic, "pole in the closed disk");
    InnerOuterScalar out;
    if (f.is_zero()) {
        out.outer = RationalFunction();
        return out;
    }
    std::vector<std::pair<Complex, int>> inner_zeros;
    for (const auto& [z, m] : f.zeros()) {
        double az = std::abs(z);
        if (az < 1.0 - tau)
            inner_zeros.emplace_back(z, m);
        else if (az <= 1.0 + tau)
            out.boundary_zero = true;  // circle zero stays with the outer part
    }
    out.inner = BlaschkeProduct(Complex(1.0), std::move(inner_zeros));
    out.outer = f / out.inner.to_rational();
    return out;
}

SpectralFactorScalar spectral_factor_scalar(const RationalFunction& R) {
    const auto grid = [] {
        std::vector<Complex> g;
        int n = tol().grid_size;
        g.reserve(n);
        for (int k = 0; k < n; ++k) {
            double t = 2.0 * M_PI * k / n;
            g.emplace_back(std::cos(t), std::sin(t));
        }
        return g;
    }();
    // para-Hermitian and nonnegative on the circle
    RationalFunction herm = R - R.para_conjugate();
    double scale = 0.0, herm_res = 0.0, minval = 1e300;
    for (Complex z : grid) {
        Complex v = R(z);
        scale = std::max(scale, std::abs(v));
        herm_res = std::max(herm_res, std::abs(herm(z)));
        minval = std::min(minval, v.real());
    }
    if (herm_res > 1e-9 * (1.0 + scale))
        throw Error(Errc::NotNonnegative, "not para-Hermitian on the circle");
    if (minval < -1e-10 * std::max(1.0, scale))
        throw Error(Errc::NotNonnegative, "negative on the circle grid");

    SpectralFactorScalar out;
    if (R.is_zero()) {
        out.outer = RationalFunction();
        return out;
    }
    const double btau = 1e-5;  // boundary band for reflection pairing
    auto split = [&](const std::vector<std::pair<Complex, int>>& roots, bool allow_odd_boundary,
                     std::vector<std::pair<Complex, int>>& chosen) {
        // keep one representative of each (w, 1/conj w) pair, the one outside
        std::vector<std::pair<Complex, int>> inside, outside, boundary;
        for (const auto& [w, m] : roots) {
            double aw = std::abs(w);
            if (std::abs(aw - 1.0) <= btau)
                boundary.emplace_back(w, m);
            else if (aw < 1.0)
                inside.emplace_back(w, m);
            else
                outside.emplace_back(w, m);
        }
        std::vector<bool> used(outside.size(), false);
        for (const auto& [w, m] : inside) {
            Complex refl = Complex(1.0) / std::conj(w);
            bool found = false;
            for (size_t i = 0; i < outside.size(); ++i) {
                if (used[i]) continue;
                if (std::abs(outside[i].first - refl) <= 1e-6 * std::max(1.0, std::abs(refl)) &&
                    outside[i].second == m) {
                    used[i] = true;
                    chosen.emplace_back(outside[i].first, m);
                    found = true;
                    break;
                }
            }
            if (!found)
                throw Error(Errc::NotNonnegative, "unpaired interior root; not para-Hermitian");
        }
        for (size_t i = 0; i < outside.size(); ++i)
            if (!used[i])
                throw Error(Errc::NotNonnegative, "unpaired exterior root; not para-Hermitian");
        for (const auto& [w, m] : boundary) {
            if (!allow_odd_boundary && m % 2 != 0)
                throw Error(Errc::OddBoundaryMultiplicity,
                            "circle root of odd multiplicity");
            Complex snapped = w / std::abs(w);
            chosen.emplace_back(snapped, m / 2);
            out.boundary_zero = true;
        }
    };
    std::vector<std::pair<Complex, int>> num_chosen, den_chosen;
    split(R.zeros(), false, num_chosen);
    // circle poles are excluded upstream; zero/infinity pole orders balance
    std::vector<std::pair<Complex, int>> den_nonzero;
    for (const auto& [p, m] : R.poles())
        if (std::abs(p) > 0.0) den_nonzero.emplace_back(p, m);
    split(den_nonzero, false, den_chosen);

    RationalFunction cand(Polynomial::from_root_factors(Complex(1.0), num_chosen), den_chosen);
    RationalFunction prod = cand * cand.para_conjugate();
    // R / (cand cand~) is a positive constant when the pairing is right
    Complex s(0.0);
    int used = 0;
    for (size_t k = 0; k < grid.size(); k += 37) {
        Complex denv = prod(grid[k]);
        if (std::abs(denv) < 1e-12) continue;
        s += R(grid[k]) / denv;
        ++used;
    }
    s /= static_cast<double>(std::max(used, 1));
    if (s.real() <= 0.0 || std::abs(s.imag()) > 1e-6 * std::abs(s))
        throw Error(Errc::NotNonnegative, "scale factor is not a positive constant");
    out.outer = cand * std::sqrt(s.real());
    // certify the factorization residual on the grid
    double res = 0.0;
    for (Complex z : grid) {
        Complex v = out.outer(z);
        res = std::max(res, std::abs(v * std::conj(v) - R(z)));
    }
    if (res > 1e-8 * (1.0 + scale))
        throw Error(Errc::FitFailure, "spectral factor residual " + std::to_string(res));
    return out;
}

BtDecomposition bt_decompose(const RationalFunction& phi) {
    if (!phi.linf_admissible()) throw Error(Errc::PoleOnCircle, "symbol has a circle pole");
    BtDecomposition out;
    if (phi.is_zero()) {
        out.a = RationalFunction();
        return out;
    }
    std::vector<std::pair<Complex, int>> zeros;
    for (const auto& [p, m] : phi.poles())
        if (std::abs(p) > 1.0) zeros.emplace_back(Complex(1.0) / std::conj(p), m);
    int excess = phi.num().degree() - phi.den_degree();
    if (excess > 0) zeros.emplace_back(Complex(0.0), excess);
    out.theta = BlaschkeProduct(Complex(1.0), std::move(zeros));
    out.a = out.theta.to_rational() * phi.para_conjugate();
    if (!out.a.analytic_in_closed_disk())
        throw Error(Errc::NotAnalytic, "bt remainder not analytic; unexpected structure");
    return out;
}

std::vector<Complex> spectrum_inner(const BlaschkeProduct& b) { return b.spectrum(); }

}  // namespace msk
