#pragma once

#include <cstdlib>
#include <random>

#include "msk/beurling.hpp"
#include "msk/blaschke.hpp"

namespace testgen {

using msk::BlaschkeProduct;
using msk::Complex;
using msk::MatrixXcd;
using msk::Polynomial;
using msk::RationalFunction;
using msk::RationalMatrix;

inline uint64_t base_seed() {
    if (const char* env = std::getenv("MSK_SEED")) return std::strtoull(env, nullptr, 10);
    return 0x5eed5eedULL;
}

struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t salt) : eng(base_seed() ^ salt) {}
    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(eng);
    }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
    Complex disk_point(double rmax) {
        double r = std::sqrt(uniform(0.0, 1.0)) * rmax;
        double t = uniform(0.0, 2.0 * M_PI);
        return Complex(r * std::cos(t), r * std::sin(t));
    }
    Complex gaussian() {
        std::normal_distribution<double> d;
        return Complex(d(eng), d(eng));
    }
};

inline BlaschkeProduct random_blaschke(Rng& rng, int degree, double rmax = 0.8) {
    std::vector<std::pair<Complex, int>> zeros;
    for (int i = 0; i < degree; ++i) zeros.emplace_back(rng.disk_point(rmax), 1);
    double t = rng.uniform(0.0, 2.0 * M_PI);
    return BlaschkeProduct(Complex(std::cos(t), std::sin(t)), std::move(zeros));
}

/// Blaschke-Potapov factor (I - P) + b_alpha P with a rank-1 projection.
inline RationalMatrix potapov_factor(Rng& rng, int n, Complex alpha) {
    Eigen::VectorXcd u(n);
    for (int i = 0; i < n; ++i) u(i) = rng.gaussian();
    u.normalize();
    MatrixXcd P = u * u.adjoint();
    RationalFunction b = BlaschkeProduct::factor(alpha).to_rational();
    RationalMatrix out = RationalMatrix::from_constant(MatrixXcd::Identity(n, n) - P);
    return out + RationalMatrix::from_constant(P) * b;
}

/// Product of `degree` rank-1 Potapov factors: n x n two-sided inner,
/// det degree = degree.
inline RationalMatrix random_potapov_inner(Rng& rng, int n, int degree, double rmax = 0.75) {
    RationalMatrix out = RationalMatrix::identity(n);
    for (int i = 0; i < degree; ++i) out = out * potapov_factor(rng, n, rng.disk_point(rmax));
    return out;
}

/// Analytic matrix with poles well outside the disk.
inline RationalMatrix random_hinf(Rng& rng, int rows, int cols, int deg, int npoles = 1) {
    std::vector<std::pair<Complex, int>> poles;
    for (int i = 0; i < npoles; ++i) {
        double r = rng.uniform(1.6, 3.0);
        double t = rng.uniform(0.0, 2.0 * M_PI);
        poles.emplace_back(Complex(r * std::cos(t), r * std::sin(t)), 1);
    }
    RationalMatrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<Complex> c(static_cast<size_t>(deg) + 1);
            for (auto& x : c) x = rng.gaussian();
            out.at(i, j) = RationalFunction(Polynomial(std::move(c)), poles);
        }
    return out;
}

/// Diagonal inner matrix whose entries draw zeros from a small shared pool,
/// so gcds across entries are usually nontrivial.
inline RationalMatrix random_diag_inner(Rng& rng, int n, int max_deg_per_entry) {
    std::vector<Complex> pool;
    while (pool.size() < 3) {
        Complex cand = rng.disk_point(0.7);
        bool ok = true;
        for (Complex p : pool) ok = ok && std::abs(p - cand) > 0.05;
        if (ok) pool.push_back(cand);
    }
    RationalMatrix out(n, n);
    for (int i = 0; i < n; ++i) {
        std::vector<std::pair<Complex, int>> zeros;
        int d = rng.integer(0, max_deg_per_entry);
        for (int k = 0; k < d; ++k) {
            Complex a = pool[static_cast<size_t>(rng.integer(0, 2))];
            bool merged = false;
            for (auto& [z, m] : zeros)
                if (z == a) {
                    ++m;
                    merged = true;
                }
            if (!merged) zeros.emplace_back(a, 1);
        }
        out.at(i, i) = BlaschkeProduct(Complex(1.0), zeros).to_rational();
    }
    return out;
}

inline MatrixXcd random_unitary(Rng& rng, int n) {
    MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = rng.gaussian();
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd q = qr.householderQ();
    return q;
}

/// Phi = Theta A~ with (Theta, A) right coprime by construction (resampled
/// until the certificate accepts).
struct DssInstance {
    RationalMatrix phi;
    RationalMatrix theta;
    RationalMatrix a;
};

inline DssInstance random_dss_instance(Rng& rng, int n, int m, int degree) {
    for (int attempt = 0; attempt < 20; ++attempt) {
        RationalMatrix theta = random_potapov_inner(rng, n, degree);
        RationalMatrix a = random_hinf(rng, m, n, 1, 1);
        msk::CoprimeCertificate cc = msk::right_coprime(theta, a);
        if (cc.undecided || !cc.coprime) continue;
        DssInstance out;
        out.phi = theta * a.para_conjugate();
        out.theta = theta;
        out.a = a;
        return out;
    }
    throw msk::Error(msk::Errc::CoprimenessUndecided,
                     "could not build a coprime instance after 20 draws");
}

}  // namespace testgen
