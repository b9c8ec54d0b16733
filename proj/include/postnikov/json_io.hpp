#pragma once

#include <json.hpp>

#include "postnikov/banff.hpp"
#include "postnikov/louise.hpp"
#include "postnikov/plabic.hpp"

namespace postnikov {

using json = nlohmann::json;

json to_json(const BoundedAffinePermutation& w);
BoundedAffinePermutation permutation_from_json(const json& j);

json to_json(const IceQuiver& q);
IceQuiver quiver_from_json(const json& j);

json to_json(const PlabicGraph& g);
PlabicGraph plabic_from_json(const json& j);

json to_json(const LouiseCertificate& c);
LouiseCertificate certificate_from_json(const json& j);

json to_json(const QuiverLouiseCertificate& c);
QuiverLouiseCertificate quiver_certificate_from_json(const json& j);

// Window text "4,6,5,7,8,9" -> validated permutation.
BoundedAffinePermutation parse_window(const std::string& text);

}  // namespace postnikov
