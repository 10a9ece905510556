#pragma once

#include <json.hpp>

#include "homkit/adele.hpp"
#include "homkit/chain_complex.hpp"
#include "homkit/dualizing.hpp"
#include "homkit/monoid.hpp"
#include "homkit/simplicial_set.hpp"

namespace homkit {

using nlohmann::json;

/// Integers travel as decimal strings to avoid 64-bit overflow in transit;
/// plain JSON numbers are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const json& j);

json complex_to_json(const ChainComplex& c);
ChainComplex complex_from_json(const json& j);

json group_to_json(const FgAbelianGroup& g);
FgAbelianGroup group_from_json(const json& j);

json graded_to_json(const GradedGroup& g);
GradedGroup graded_from_json(const json& j);

json monoid_to_json(const CommMonoidWithZero& m);
CommMonoidWithZero monoid_from_json(const json& j);

json pointed_simplicial_to_json(const PointedSimplicialSet& x);
PointedSimplicialSet pointed_simplicial_from_json(const json& j);

json simplicial_pointed_to_json(const SimplicialPointedSet& x);
SimplicialPointedSet simplicial_pointed_from_json(const json& j);

json field_to_json(const NumberField& k);
NumberField field_from_json(const json& j);

json adele_to_json(const FiniteAdele& x);
FiniteAdele adele_from_json(const NumberField& k, const json& j);

json system_to_json(const CompatibleSystem& s);
CompatibleSystem system_from_json(const NumberField& k, const json& j);

json graded_formal_ext_to_json(const GradedFormalExt& g);

}  // namespace homkit
