// JSON reading and writing. Rationals are "num/den" strings, infinite
// doubles are the strings "+inf" and "-inf", vertices are sorted.

#ifndef GROWTHLAB_IO_HPP
#define GROWTHLAB_IO_HPP

#include "growthlab/convexfn.hpp"
#include "growthlab/embed.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/okounkov.hpp"
#include "growthlab/polytope.hpp"

#include <json.hpp>

#include <string>

namespace growthlab {

using Json = nlohmann::json;

Json to_json(const Rational& q);
Json to_json(const RatVec& v);
Json to_json(const std::vector<RatVec>& vs);
/// Finite values as numbers, infinities as "+inf" / "-inf".
Json number(double x);

/// Accepts "p/q" strings, decimal strings and JSON numbers.
/// Throws Error(ParseError).
Rational rational_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);

Json to_json(const HalfSpace& h);
Json to_json(const Polytope& p);
/// {"dim": n, "vertices": [...]} (hull of the listed points) or, without
/// vertices, {"dim": n, "facets": [{"normal": [...], "offset": "b"}]}.
Polytope polytope_from_json(const Json& j);
Json read_json_file(const std::string& path);
Polytope load_polytope(const std::string& path);

Json to_json(const MaxAffineFunction& f);
MaxAffineFunction max_affine_from_json(const Json& j);
Json to_json(const SmoothToricPotential& u);
/// {"family": "lse", "k": k, "polytope": {...}}, {"family": "fs", "dim": n,
/// "lambda": "p/q"} or {"family": "affine", "slope": [...], "offset": "c"}.
SmoothToricPotential potential_from_json(const Json& j);

Json to_json(const BoundedDifferenceCertificate& c);
Json to_json(const InclusionViolation& v);
Json to_json(const DelzantReport& r);
Json to_json(const UnimodularMap& m);

Json to_json(const GrowthCondition& gc);
Json to_json(const VolumeReport& r);
Json to_json(const SeshadriReport& r);
Json to_json(const SampledRecovery& r);

Json to_json(const GradedMonomialSeries& s);
/// {"degrees": {"1": [[a, b], ...], ...}}.
GradedMonomialSeries series_from_json(const Json& j);
Json to_json(const OkounkovBody& b);
Json to_json(const VolumeIdentity& v);
Json to_json(const ChebyshevValue& v);

Json to_json(const GluingCertificate& c);
Json to_json(const GromovReport& r);
Json to_json(const VolumeObstruction& v);

}  // namespace growthlab

#endif  // GROWTHLAB_IO_HPP
