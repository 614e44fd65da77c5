#pragma once

#include <optional>
#include <string>

#include "msk/beurling.hpp"
#include "msk/blaschke.hpp"

namespace msk {

/// delta_0 .. delta_N, delta_k = g.c.d. of the inner parts of the
/// (N-k)-minors; divisibility chain delta_{k+1} | delta_k, delta_N = 1.
struct DeltaSequence {
    std::vector<BlaschkeProduct> delta;
    int size() const { return static_cast<int>(delta.size()); }
};

DeltaSequence delta_sequence(const RationalMatrix& delta);

enum class MultiplicityRoute { SquareDirect, DeltaSReduction, DiagonalFormula };

const char* route_name(MultiplicityRoute r);

struct MultiplicityReport {
    int mu = 0;
    MultiplicityRoute route = MultiplicityRoute::SquareDirect;
    int dim_eprime = 0;       // bound mu <= dim E'
    bool zero_space = false;  // constant unitary: model space is {0}
    std::string note;
    DeltaSequence seq;        // of the square matrix the formula ran on
};

MultiplicityReport spectral_multiplicity(const RationalMatrix& delta,
                                         Complex probe = kDefaultProbe);

/// Nordgren-Moore canonical diagonal diag(delta_0/delta_1, ..., delta_{N-1}/delta_N).
RationalMatrix nordgren_diagonal(const RationalMatrix& delta);

struct BeurlingDegreeReport {
    int degree = 0;  // = spectral multiplicity
    std::optional<int> diagonal_formula;  // max-cardinality route, diagonal inputs
    bool unitary_input = false;           // report also carries deg_B = 1 convention
    MultiplicityReport mu;
};

BeurlingDegreeReport beurling_degree(const RationalMatrix& delta,
                                     Complex probe = kDefaultProbe);

struct CharScalarReport {
    BlaschkeProduct omega;  // l.c.m. of entry inner parts
    BlaschkeProduct m;      // g.c.d. of scalar inner multiples
    std::optional<RationalMatrix> witness;  // G with G Delta = m I when m is feasible
};

CharScalarReport char_scalar(const RationalMatrix& delta);

struct ScalarMultipleReport {
    BlaschkeProduct m;
    RationalMatrix witness;  // G = m A^{-1} in H^infty
};

ScalarMultipleReport scalar_multiple(const RationalMatrix& a);

struct CoprimeThetaAReport {
    bool left_coprime = false;
    bool right_coprime = false;
    BlaschkeProduct det_inner;  // inner part of det A
    BlaschkeProduct m_a;
};

/// theta vs A coprimeness; det-inner-part route and m_A route must agree.
CoprimeThetaAReport coprime_theta_a(const BlaschkeProduct& theta, const RationalMatrix& a);

struct ContractionClass {
    bool c0dot = true;
    bool c00 = false;
    bool c0 = false;
    std::string note;
};

ContractionClass classify_contraction(const RationalMatrix& delta);

/// conj(sigma(omega_Delta)), a lower bound for sigma(T).
std::vector<Complex> model_spectrum_lower(const RationalMatrix& delta);

struct InterpolantReport {
    bool feasible = false;
    bool norm_ok = false;
    bool kernel_inclusion = false;
};

InterpolantReport verify_interpolant(const RationalMatrix& phi, const RationalMatrix& k,
                                     Complex probe = kDefaultProbe);

}  // namespace msk
