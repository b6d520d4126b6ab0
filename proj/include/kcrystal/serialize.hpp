#pragma once

#include "json.hpp"

#include "kcrystal/kohnert.hpp"
#include "kcrystal/permutation.hpp"
#include "kcrystal/polynomial.hpp"
#include "kcrystal/skyline.hpp"
#include "kcrystal/tableau.hpp"

namespace kcrystal {

using Json = nlohmann::ordered_json;

/// {"n":3,"shape":[2,2],"rows":[[[1],[1,2]],[[2,3],[3]]],"text":"1 1,2/2,3 3"}
Json tableau_to_json(const SetValuedTableau& t);
SetValuedTableau tableau_from_json(const Json& j);

/// {"boxes":[[x,y],...],"marked":[[x,y],...]}, both sorted.
Json diagram_to_json(const KohnertDiagram& d);
KohnertDiagram diagram_from_json(const Json& j);

/// {"shape":[a_1,...],"columns":{"c":[[level 1 entries],[level 2 entries],...]}}
/// with only the nonempty columns listed.
Json skyline_to_json(const SkylineTableau& s);
SkylineTableau skyline_from_json(const Json& j);

/// {"n":3,"text":"...","terms":[{"coef":1,"beta":0,"x":[0,2,2]},...]}
Json polynomial_to_json(const BetaPolynomial& p);
BetaPolynomial polynomial_from_json(const Json& j);

Json permutation_to_json(const Permutation& w);
Permutation permutation_from_json(const Json& j);

/// "0,2,2" -> {0,2,2}. Throws std::invalid_argument on malformed input.
WeakComposition parse_composition(const std::string& text);
std::string composition_str(const WeakComposition& a);

}  // namespace kcrystal
