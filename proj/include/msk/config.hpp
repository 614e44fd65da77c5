#pragma once

#include <stdexcept>
#include <string>

namespace msk {

/// Tolerance stack shared by the whole library. Values can be overridden
/// once at startup (CLI flags); all operations read the active instance.
struct Tolerances {
    double coeff_zero = 1e-12;    // tau_c: a coefficient below this (relative) is zero
    double root_cluster = 1e-8;   // tau_r: roots closer than this are the same point
    double grid_residual = 1e-7;  // acceptable sup-norm residual on the circle grid
    double rank_rel = 1e-7;       // sigma threshold factor for numeric rank
    int grid_size = 512;          // number of circle sample points
};

Tolerances& tol();

enum class Errc {
    NotAnalytic,
    PoleOnCircle,
    ZeroClusterAmbiguity,
    NotNonnegative,
    OddBoundaryMultiplicity,
    DegenerateProbe,
    NotInvariant,
    NotPositive,
    FitFailure,
    RankDeficient,
    CoprimenessUndecided,
    SymbolicInputRequiresVerifier,
    DegreeOverflow,
    StabilizationFailure,
    Singular,
    DegreeBoundExceeded,
    FormulaMismatch,
    RouteMismatch,
    StructureNotSupported,
    ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace msk
