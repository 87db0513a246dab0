#pragma once

#include <string>

#include "json.hpp"

#include "cablefloer/algebra.hpp"
#include "cablefloer/laurent.hpp"

namespace cf {

using nlohmann::json;

/* Every emitted document carries the schema tag. */
json json_root(const std::string& kind);

json to_json(const LaurentPoly& p);
json to_json(const TruncatedSeries& s);
json to_json(const TriGrading& g);
json to_json(const TowerBasisElt& x);

/* "5" for doubled 10, "5/2" for doubled 5. */
std::string halved(int exp2);

}  // namespace cf
