#include "msk/config.hpp"

namespace msk {

Tolerances& tol() {
    static Tolerances t;
    return t;
}

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NotAnalytic: return "NotAnalytic";
        case Errc::PoleOnCircle: return "PoleOnCircle";
        case Errc::ZeroClusterAmbiguity: return "ZeroClusterAmbiguity";
        case Errc::NotNonnegative: return "NotNonnegative";
        case Errc::OddBoundaryMultiplicity: return "OddBoundaryMultiplicity";
        case Errc::DegenerateProbe: return "DegenerateProbe";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::NotPositive: return "NotPositive";
        case Errc::FitFailure: return "FitFailure";
        case Errc::RankDeficient: return "RankDeficient";
        case Errc::CoprimenessUndecided: return "CoprimenessUndecided";
        case Errc::SymbolicInputRequiresVerifier: return "SymbolicInputRequiresVerifier";
        case Errc::DegreeOverflow: return "DegreeOverflow";
        case Errc::StabilizationFailure: return "StabilizationFailure";
        case Errc::Singular: return "Singular";
        case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
        case Errc::FormulaMismatch: return "FormulaMismatch";
        case Errc::RouteMismatch: return "RouteMismatch";
        case Errc::StructureNotSupported: return "StructureNotSupported";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

}  // namespace msk
