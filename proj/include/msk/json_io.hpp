#pragma once

#include <json.hpp>
#include <string>

#include "msk/multiplicity.hpp"
#include "msk/symbolic.hpp"

namespace msk {

using jsn = nlohmann::ordered_json;

/// Round to 12 significant digits so reports are fixture-stable.
double round12(double x);
jsn complex_to_json(Complex c);
Complex complex_from_json(const jsn& j);

jsn to_json(const Polynomial& p);
Polynomial polynomial_from_json(const jsn& j);

jsn to_json(const RationalFunction& r);
RationalFunction rational_from_json(const jsn& j);

jsn to_json(const BlaschkeProduct& b);
BlaschkeProduct blaschke_from_json(const jsn& j);

jsn to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const jsn& j);

jsn to_json(const SymbolicEntry& e);
SymbolicEntry symbolic_entry_from_json(const jsn& j);

jsn to_json(const SymbolicMatrix& m);
SymbolicMatrix symbolic_matrix_from_json(const jsn& j);

Declarations declarations_from_json(const jsn& j);
std::vector<NcBlock> structure_from_json(const jsn& j);

jsn to_json(const InnerCertificate& c);
jsn to_json(const CoprimeCertificate& c);
jsn to_json(const DeltaSequence& s);
jsn to_json(const MultiplicityReport& r);

/// Truncated-operator section as CSV of interleaved re/im.
std::string section_to_csv(const MatrixXcd& m);

}  // namespace msk
