#include "cablefloer/presets.hpp"

#include <cctype>
#include <stdexcept>

namespace cf {

static bool parse_torus_name(const std::string& name, int* p, int* q)
{
    if (name.size() < 6 || name[0] != 'T' || name[1] != '(' || name.back() != ')')
        return false;
    std::size_t comma = name.find(',');
    if (comma == std::string::npos)
        return false;
    try {
        std::size_t used;
        *p = std::stoi(name.substr(2, comma - 2), &used);
        if (used != comma - 2)
            return false;
        std::string qs = name.substr(comma + 1, name.size() - comma - 2);
        *q = std::stoi(qs, &used);
        if (used != qs.size())
            return false;
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

LaurentPoly knot_preset(const std::string& name)
{
    if (name == "unknot")
        return LaurentPoly(1);
    int p, q;
    if (parse_torus_name(name, &p, &q))
        return torus_knot_delta(p, q);
    throw std::invalid_argument("unknown knot preset: " + name);
}

bool is_known_preset(const std::string& name)
{
    int p, q;
    return name == "unknot" || parse_torus_name(name, &p, &q);
}

}  // namespace cf
