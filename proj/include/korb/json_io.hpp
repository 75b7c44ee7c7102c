#pragma once

#include "json.hpp"
#include "korb/divisors.hpp"
#include "korb/isometry.hpp"
#include "korb/kummer.hpp"

namespace korb {

// ordered_json keeps insertion order, so serialized output is byte-stable
using Json = nlohmann::ordered_json;

Json int_json(const Int& v);  // JSON number; throws if it overflows int64
Json rat_json(const Rat& v);  // canonical "p/q" string, "/1" suppressed
Json matrix_json(const ZMat& m);
ZMat matrix_from_json(const Json& j);

Json lattice_json(const GramLattice& L);             // {"rank", "gram"}
GramLattice lattice_from_json(const Json& j);
Json vector_json(const ZVec& v);                     // {"coords": [...]}
ZVec vector_from_json(const Json& j);
ZVec coords_from_string(const std::string& text);    // "c1,c2,..." (throws invalid_argument)

Json isometry_json(const Isometry& g);
Json disc_group_json(const GramLattice& L);
Json polarization_json(const PolarizationType& p);
Json sat_invariant_json(const SaturatedPairInvariant& inv);
Json divisor_json(const UniruledDivisorClass& u);
Json coverage_json(const CoverageReport& report);

}  // namespace korb
