#ifndef FAMSW_SERIALIZATION_HPP
#define FAMSW_SERIALIZATION_HPP

#include <nlohmann/json.hpp>

#include <string_view>

#include "famsw/bundles.hpp"
#include "famsw/expression.hpp"
#include "famsw/ring.hpp"
#include "famsw/surfaces.hpp"

namespace famsw {

using Json = nlohmann::json;

/// Rationals are written as decimal strings "p/q" or "n"; integer JSON
/// numbers are accepted on input. Errors name `field`.
Rational rational_from_json(const Json& j, std::string_view field);
Json rational_to_json(const Rational& r);

/// {"generators":[{"name":"h","degree":2,"parity":"even"}],
///  "rules":[{"lhs":"h^3","rhs":"0"}],"dim":2,"integrals":{"h^2":"1"}}
Json space_to_json(const SpaceModel& space);
Space space_from_json(const Json& j);

/// {"basis":["h"],"Q":[["1"]],"K":["-3"],"c2":"3","pg":0,"q":0}
Json surface_to_json(const SurfaceData& s);
SurfaceData surface_from_json(const Json& j);

/// {"rank":2,"chern":{"1":"3*h","2":"3*h^2"}}; chern entries are
/// expressions in the space's generators and `params`.
Json bundle_to_json(const BundleClass& e);
BundleClass bundle_from_json(const Space& space, const Json& j, const Parameters& params = {});

}  // namespace famsw

#endif  // FAMSW_SERIALIZATION_HPP
