#pragma once

#include <json.hpp>

#include "metahecke/hecke.hpp"
#include "metahecke/hilbert.hpp"
#include "metahecke/hmodules.hpp"
#include "metahecke/lattice.hpp"
#include "metahecke/typeparams.hpp"

namespace metahecke {

using Json = nlohmann::json;

// Rationals travel as strings "p/q" (just "p" when q = 1) so nothing is
// ever rounded.
std::string rational_to_string(const BigRat& r);
BigRat rational_from_string(const std::string& s);

Json poly_to_json(const Poly& p);       // coefficient array, ascending in v
Poly poly_from_json(const Json& j);

Json scalar_to_json(const Scalar& s);   // {"num": [...], "den": [...]}
Scalar scalar_from_json(const Json& j);

Json mun_to_json(const MuN& m);         // {"n": int, "e": int}
MuN mun_from_json(const Json& j);

Json lfelem_to_json(const LocalFieldElem& x);  // {"v": int, "u": int-dlog}
LocalFieldElem lfelem_from_json(const Json& j);

Json weyl_to_json(const TwistedAffineWeylElem& w);
TwistedAffineWeylElem weyl_from_json(const Json& j);

Json hecke_to_json(const HeckeElement& x);  // [{"weyl":…, "coeff":…}, …]
HeckeElement hecke_from_json(const Json& j, const AlgebraId& id);

Json intmat_to_json(const IntMat& m);
IntMat intmat_from_json(const Json& j);

Json mat_to_json(const Mat& m);         // Scalar matrix, row-major

}  // namespace metahecke
