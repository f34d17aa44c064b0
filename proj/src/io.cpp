#include "growthlab/io.hpp"

#include "growthlab/error.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace growthlab {

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVec& v) {
  Json a = Json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

Json to_json(const std::vector<RatVec>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

Json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return x;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  if (j.is_number_float()) return parse_rational(j.dump());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

RatVec ratvec_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array of rationals, got " + j.dump());
  RatVec v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json to_json(const HalfSpace& h) { return {{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}}; }

Json to_json(const Polytope& p) {
  Json facets = Json::array();
  for (const auto& f : p.facets()) facets.push_back(to_json(f));
  Json j{{"dim", p.dim()}, {"vertices", to_json(p.vertices())}, {"facets", facets}};
  if (!p.equations().empty()) {
    Json eqs = Json::array();
    for (const auto& e : p.equations()) eqs.push_back(to_json(e));
    j["equations"] = eqs;
  }
  return j;
}

Polytope polytope_from_json(const Json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::ParseError, "polytope must be a JSON object");
    std::size_t dim = j.at("dim").get<std::size_t>();
    if (j.contains("vertices")) {
      std::vector<RatVec> pts;
      for (const auto& v : j.at("vertices")) {
        pts.push_back(ratvec_from_json(v));
        if (pts.back().size() != dim) throw Error(ErrorCode::DimensionMismatch, "vertex length differs from dim");
      }
      if (pts.empty()) return Polytope::empty(dim);
      return Polytope::convex_hull(pts, dim);
    }
    std::vector<HalfSpace> hs;
    for (const auto& f : j.at("facets")) {
      hs.push_back({ratvec_from_json(f.at("normal")), rational_from_json(f.at("offset"))});
      if (hs.back().normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "normal length differs from dim");
    }
    return Polytope::from_inequalities(dim, hs);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed polytope: ") + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

Polytope load_polytope(const std::string& path) { return polytope_from_json(read_json_file(path)); }

Json to_json(const MaxAffineFunction& f) {
  Json pieces = Json::array();
  for (const auto& p : f.pieces()) pieces.push_back({{"slope", to_json(p.slope)}, {"offset", to_json(p.offset)}});
  return {{"pieces", pieces}};
}

MaxAffineFunction max_affine_from_json(const Json& j) {
  try {
    std::vector<AffinePiece> pieces;
    for (const auto& p : j.at("pieces"))
      pieces.push_back({ratvec_from_json(p.at("slope")), rational_from_json(p.at("offset"))});
    return MaxAffineFunction(std::move(pieces));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed max-affine function: ") + e.what());
  }
}

Json to_json(const SmoothToricPotential& u) {
  switch (u.family()) {
    case PotentialFamily::LogSumExp:
      return {{"family", "lse"}, {"k", u.k()}, {"lattice_points", u.lattice_count()},
              {"polytope", to_json(u.slope_polytope())}};
    case PotentialFamily::ScaledFubiniStudy:
      return {{"family", "fs"}, {"dim", u.dim()}, {"lambda", to_json(u.lambda())}};
    case PotentialFamily::Affine:
      return {{"family", "affine"}, {"slope", to_json(u.exponents().front())}, {"offset", to_json(u.offset())}};
  }
  return {};
}

SmoothToricPotential potential_from_json(const Json& j) {
  try {
    std::string family = j.at("family").get<std::string>();
    if (family == "lse") return SmoothToricPotential::logsumexp(polytope_from_json(j.at("polytope")), j.at("k").get<long>());
    if (family == "fs")
      return SmoothToricPotential::fubini_study(j.at("dim").get<std::size_t>(), rational_from_json(j.at("lambda")));
    if (family == "affine")
      return SmoothToricPotential::affine(ratvec_from_json(j.at("slope")), rational_from_json(j.value("offset", Json("0"))));
    throw Error(ErrorCode::ParseError, "unknown potential family " + family);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed potential: ") + e.what());
  }
}

Json to_json(const BoundedDifferenceCertificate& c) {
  Json j{{"method", c.method},
         {"sup_bound", number(c.sup_bound)},
         {"inf_bound", number(c.inf_bound)},
         {"bounded", c.bounded()},
         {"error_budget", c.error_budget},
         {"witnesses", to_json(c.witnesses)}};
  if (c.sup_exact) j["sup_exact"] = to_json(*c.sup_exact);
  if (c.inf_exact) j["inf_exact"] = to_json(*c.inf_exact);
  if (c.sup_recession) j["sup_recession"] = to_json(*c.sup_recession);
  if (c.inf_recession) j["inf_recession"] = to_json(*c.inf_recession);
  return j;
}

Json to_json(const InclusionViolation& v) {
  return {{"vertex", to_json(v.vertex)}, {"facet", to_json(v.facet)}, {"outside", v.outside}};
}

Json to_json(const DelzantReport& r) {
  Json vs = Json::array();
  for (const auto& v : r.vertices) {
    Json e{{"vertex", to_json(v.vertex)}, {"generators", to_json(v.generators)}, {"delzant", v.delzant}};
    e["determinant"] = v.determinant ? to_json(*v.determinant) : Json(nullptr);
    vs.push_back(e);
  }
  return {{"delzant", r.delzant}, {"vertices", vs}};
}

Json to_json(const UnimodularMap& m) {
  return {{"matrix", to_json(m.matrix)}, {"origin", to_json(m.origin)}};
}

Json to_json(const GrowthCondition& gc) {
  Json certs = Json::array();
  for (std::size_t i = 0; i < gc.levels.size(); ++i) {
    Json c = to_json(gc.o1_certificates[i]);
    c["k"] = gc.levels[i];
    c["lattice_points"] = gc.approximants[i].lattice_count();
    certs.push_back(c);
  }
  return {{"vertex", to_json(gc.vertex)},       {"map", to_json(gc.map)},
          {"polytope", to_json(gc.polytope)},   {"representative", to_json(gc.representative)},
          {"levels", gc.levels},                {"c_max", to_json(gc.c_max)},
          {"o1_certificates", certs}};
}

Json to_json(const VolumeReport& r) {
  Json j{{"volume_polytope", to_json(r.volume_polytope)},
         {"volume_MA", to_json(r.volume_MA)},
         {"k", r.k},
         {"samples", r.samples},
         {"seed", r.seed}};
  if (r.volume_numerical) {
    j["volume_numerical"] = number(*r.volume_numerical);
    j["relative_error"] = number(r.relative_error);
  }
  return j;
}

Json to_json(const SeshadriReport& r) {
  return {{"seshadri_lp", to_json(r.seshadri_lp)},
          {"seshadri_domination", to_json(r.seshadri_domination)},
          {"bracket", {to_json(r.bracket_lo), to_json(r.bracket_hi)}},
          {"iterations", r.iterations},
          {"gap_inequality", {to_json(r.seshadri_lp), number(r.upper_bound)}},
          {"slack", number(r.slack)}};
}

Json to_json(const SampledRecovery& r) {
  Json hull = Json::array();
  for (const auto& p : r.hull) {
    Json q = Json::array();
    for (double c : p) q.push_back(number(c));
    hull.push_back(q);
  }
  return {{"hull", hull},           {"hausdorff_bound", number(r.hausdorff_bound)},
          {"tolerance", number(r.tolerance)}, {"k", r.k},
          {"samples", r.samples},   {"seed", r.seed}};
}

Json to_json(const GradedMonomialSeries& s) {
  Json d = Json::object();
  for (const auto& [k, w] : s.degrees) d[std::to_string(k)] = to_json(w);
  return {{"dim", s.dim}, {"degrees", d}};
}

GradedMonomialSeries series_from_json(const Json& j) {
  try {
    GradedMonomialSeries s;
    for (const auto& [key, value] : j.at("degrees").items()) {
      long k = std::stol(key);
      auto& w = s.degrees[k];
      for (const auto& a : value) {
        w.push_back(ratvec_from_json(a));
        if (!is_integral(w.back())) throw Error(ErrorCode::ParseError, "exponents must be integers");
        for (const auto& c : w.back())
          if (c < 0) throw Error(ErrorCode::ParseError, "exponents must be nonnegative");
        if (s.dim == 0) s.dim = w.back().size();
        if (w.back().size() != s.dim) throw Error(ErrorCode::DimensionMismatch, "exponents of different length");
      }
    }
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != s.dim && s.dim != 0)
      throw Error(ErrorCode::DimensionMismatch, "declared dim differs from exponents");
    if (s.dim == 0 && j.contains("dim")) s.dim = j.at("dim").get<std::size_t>();
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed series degree: ") + e.what());
  }
}

Json to_json(const OkounkovBody& b) {
  Json levels = Json::object();
  for (const auto& [k, h] : b.hull_at_k) {
    levels[std::to_string(k)] = {{"vertices", to_json(h.vertices())}, {"volume", to_json(volume(h))}};
  }
  return {{"order", b.order.name()},
          {"hull_at_k", levels},
          {"limit", to_json(b.limit)},
          {"limit_volume", to_json(volume(b.limit))},
          {"stabilized", b.stabilized}};
}

Json to_json(const VolumeIdentity& v) {
  Json gaps = Json::object();
  for (const auto& [k, g] : v.gaps) gaps[std::to_string(k)] = to_json(g);
  return {{"normalized_volume", to_json(v.normalized_volume)},
          {"vol_L", to_json(v.vol_L)},
          {"equal", v.equal},
          {"gaps", gaps},
          {"gaps_nonincreasing", v.gaps_nonincreasing}};
}

Json to_json(const ChebyshevValue& v) {
  Json j{{"value", v.value ? number(*v.value) : Json("+inf")},
         {"lower", number(v.lower)},
         {"upper", number(v.upper)},
         {"method", v.method}};
  if (v.exact) j["exact"] = to_json(*v.exact);
  if (v.iterations) j["iterations"] = v.iterations;
  return j;
}

namespace {

Json to_json(const RegionCheck& c) {
  return {{"min_margin", number(c.min_margin)}, {"points", c.points}, {"passed", c.passed}};
}

}  // namespace

Json to_json(const GluingCertificate& c) {
  return {{"R", number(c.R)},
          {"C", number(c.C)},
          {"R_prime", number(c.R_prime)},
          {"log_R_prime", number(c.log_R_prime)},
          {"epsilon", number(c.epsilon)},
          {"margin", number(c.margin)},
          {"source_simplex_scale", to_json(c.source_simplex_scale)},
          {"eta", to_json(c.eta)},
          {"C_estimate", number(c.C_estimate)},
          {"log_R_prime_estimate", number(c.log_R_prime_estimate)},
          {"inner_check", to_json(c.inner_check)},
          {"band_check",
           {{"rays", c.band_check.rays},
            {"min_excess", number(c.band_check.min_excess)},
            {"max_excess", number(c.band_check.max_excess)},
            {"min_log_radius", number(c.band_check.min_log_radius)},
            {"max_log_radius", number(c.band_check.max_log_radius)},
            {"passed", c.band_check.passed}}},
          {"outer_check", to_json(c.outer_check)},
          {"convexity_check",
           {{"pairs", c.convexity_check.pairs},
            {"min_slack", number(c.convexity_check.min_slack)},
            {"passed", c.convexity_check.passed}}},
          {"seed", c.seed},
          {"passed", c.passed()},
          {"scope", "x-space convexity; complex Hessian positivity is not certified"}};
}

Json to_json(const GromovReport& r) {
  return {{"width_lower_bound", to_json(r.width_lower_bound)}, {"radius", number(r.radius)}};
}

Json to_json(const VolumeObstruction& v) {
  return {{"source_volume", to_json(v.source_volume)}, {"volume_MA", to_json(v.volume_MA)}, {"passed", v.passed}};
}

}  // namespace growthlab
