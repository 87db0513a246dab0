#pragma once

#include <string>

#include "cablefloer/laurent.hpp"

namespace cf {

/* Named inputs accepted everywhere a polynomial is: "unknot" or "T(p,q)"
 * with p,q coprime (torus knots; the Alexander polynomial is computed by
 * exact division and still passes staircase validation downstream). */
LaurentPoly knot_preset(const std::string& name);

bool is_known_preset(const std::string& name);

}  // namespace cf
