#include "cablefloer/io.hpp"

namespace cf {

json json_root(const std::string& kind)
{
    json j;
    j["schema"] = "cablefloer/1";
    j["kind"] = kind;
    return j;
}

json to_json(const LaurentPoly& p)
{
    json terms = json::array();
    for (auto it = p.terms2().rbegin(); it != p.terms2().rend(); ++it)
        terms.push_back({{"exp2", it->first}, {"coef", it->second}});
    return json{{"terms", terms}};
}

json to_json(const TruncatedSeries& s)
{
    json terms = json::array();
    for (auto it = s.terms2().rbegin(); it != s.terms2().rend(); ++it)
        terms.push_back({{"exp2", it->first}, {"coef", it->second}});
    return json{{"terms", terms}, {"floor2", s.floor2()}};
}

json to_json(const TriGrading& g)
{
    return json{{"alex2", g.alex2}, {"maslov", g.maslov}, {"twist", g.twist}};
}

json to_json(const TowerBasisElt& x)
{
    return json{{"m", x.m}, {"s2", x.s2}, {"k", x.k}, {"grw", tower_grading(x).maslov}};
}

std::string halved(int exp2)
{
    if (exp2 % 2 == 0)
        return std::to_string(exp2 / 2);
    return std::to_string(exp2) + "/2";
}

}  // namespace cf
