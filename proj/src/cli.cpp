#include "growthlab/cli.hpp"

#include "growthlab/convexfn.hpp"
#include "growthlab/corpus.hpp"
#include "growthlab/embed.hpp"
#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/io.hpp"
#include "growthlab/okounkov.hpp"
#include "growthlab/svg.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace growthlab::cli {

namespace {

struct Options {
  std::string polytope;
  std::string vertex;
  std::string k;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "json";
  std::string out;
  std::string fs_lambda;
  std::string R;
  std::string lambda;
  std::string series;
  long k_max = 3;
  std::string order = "deglex";
  std::string perm;
  std::string point;
  std::string dir;
  std::string profile;
};

struct Artifact {
  std::string text;
};

Artifact as_json(Json j) { return {j.dump(2) + "\n"}; }

std::uint64_t resolve_seed(const Options& o, bool flag_given) {
  if (flag_given) return o.seed;
  if (const char* env = std::getenv("GROWTHLAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, std::string("GROWTHLAB_SEED is not an unsigned integer: ") + env);
    }
  }
  return 0;
}

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw Error(ErrorCode::ParseError, std::string("missing required option ") + flag);
}

std::vector<long> parse_levels(const std::string& text) {
  std::vector<long> out;
  for (const auto& q : parse_ratvec(text)) {
    if (!is_integer(q) || q < 1) throw Error(ErrorCode::ParseError, "levels must be positive integers");
    out.push_back(numerator(q).convert_to<long>());
  }
  return out;
}

Polytope input_polytope(const Options& o) {
  require(o.polytope, "--polytope");
  return load_polytope(o.polytope);
}

RatVec input_vertex(const Options& o, const Polytope& p) {
  if (!o.vertex.empty()) return parse_ratvec(o.vertex);
  if (p.is_empty()) throw Error(ErrorCode::EmptyInput, "empty polytope has no vertex");
  return p.vertices().front();
}

MonomialOrder input_order(const Options& o, std::size_t n) {
  MonomialOrder order;
  if (o.order == "lex")
    order.kind = OrderKind::Lex;
  else if (o.order == "deglex")
    order.kind = OrderKind::Deglex;
  else
    throw Error(ErrorCode::ParseError, "unknown order " + o.order);
  if (!o.perm.empty()) {
    for (const auto& q : parse_ratvec(o.perm)) {
      if (!is_integer(q) || q < 0) throw Error(ErrorCode::ParseError, "permutation entries must be indices");
      order.permutation.push_back(numerator(q).convert_to<std::size_t>());
    }
    if (!is_permutation_of(order.permutation, n))
      throw Error(ErrorCode::DimensionMismatch, "--perm is not a permutation of the coordinates");
  }
  return order;
}

Json header(const std::string& command, std::uint64_t seed) { return {{"command", command}, {"seed", seed}}; }

Polytope scaled_simplex(std::size_t n, const Rational& lambda) {
  std::vector<RatVec> pts{zeros(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(lambda * unit(n, i));
  return Polytope::convex_hull(pts, n);
}

// ---------------------------------------------------------------- commands

Artifact cmd_check_delzant(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto report = is_delzant(p);
  Json j = header("check-delzant", seed);
  j.update(to_json(report));
  Json failing = Json::array();
  for (const auto& v : report.vertices)
    if (!v.delzant) failing.push_back(to_json(v.vertex));
  j["failing_vertices"] = failing;
  return as_json(j);
}

Artifact cmd_normalize(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto v = input_vertex(o, p);
  auto nz = normalize_at_vertex(p, v);
  if (o.format == "svg") return {render_svg({{p, "gray", "none", "input"}, {nz.polytope, "black", "steelblue", "normalised"}})};
  Json j = header("normalize", seed);
  j["vertex"] = to_json(v);
  j["polytope"] = to_json(nz.polytope);
  j["map"] = to_json(nz.map);
  j["is_normalized"] = is_normalized(nz.polytope);
  return as_json(j);
}

Artifact cmd_growth(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), parse_levels(o.k.empty() ? "1,2,4" : o.k));
  auto ses = seshadri_theorem_B(gc);
  if (o.format == "svg")
    return {render_svg({{gc.polytope, "black", "steelblue", "polytope"},
                        {scaled_simplex(gc.dim(), ses.seshadri_lp), "darkred", "salmon", "seshadri simplex"}})};
  VolumeOptions vo;
  vo.samples = o.samples;
  vo.seed = seed;
  vo.numerical = o.samples > 0;
  auto vol = volume_theorem_A(gc, vo);
  Json j = header("growth", seed);
  j["growth_condition"] = to_json(gc);
  j["volume_MA"] = to_json(vol.volume_MA);
  j["volume_polytope"] = to_json(vol.volume_polytope);
  j["seshadri_lp"] = to_json(ses.seshadri_lp);
  j["seshadri_domination"] = to_json(ses.seshadri_domination);
  j["seshadri"] = to_json(ses.seshadri_lp);
  j["gap_inequality"] = {to_json(ses.seshadri_lp), number(ses.upper_bound)};
  j["volume"] = to_json(vol);
  j["seshadri_report"] = to_json(ses);
  return as_json(j);
}

Artifact cmd_volume(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), {1});
  VolumeOptions vo;
  vo.k = o.k.empty() ? 4 : parse_levels(o.k).back();
  vo.samples = o.samples;
  vo.seed = seed;
  vo.numerical = o.samples > 0;
  Json j = header("volume", seed);
  j.update(to_json(volume_theorem_A(gc, vo)));
  return as_json(j);
}

Artifact cmd_seshadri(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), {1});
  auto ses = seshadri_theorem_B(gc);
  if (o.format == "svg")
    return {render_svg({{gc.polytope, "black", "steelblue", "polytope"},
                        {scaled_simplex(gc.dim(), ses.seshadri_lp), "darkred", "salmon", "seshadri simplex"}})};
  Json j = header("seshadri", seed);
  j.update(to_json(ses));
  return as_json(j);
}

Artifact cmd_decompose(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), {1});
  std::vector<Rational> levels;
  if (!o.lambda.empty()) levels = parse_ratvec(o.lambda);
  auto parts = decompose(gc, levels);
  Json comps = Json::object();
  for (const auto& [lambda, f] : parts) comps[to_string(lambda)] = f ? to_json(*f) : Json("-inf");
  Json j = header("decompose", seed);
  j["c_max"] = to_json(gc.c_max);
  j["components"] = comps;
  try {
    auto whole = reassemble(parts);
    j["reassembled"] = to_json(whole);
    j["equals_representative"] = whole == gc.representative.pruned();
  } catch (const Error&) {
    j["reassembled"] = "-inf";
    j["equals_representative"] = false;
  }
  return as_json(j);
}

Artifact cmd_okounkov(const Options& o, std::uint64_t seed) {
  GradedMonomialSeries series;
  std::optional<GrowthCondition> gc;
  if (!o.series.empty()) {
    series = series_from_json(read_json_file(o.series));
  } else {
    auto p = input_polytope(o);
    gc = build(p, input_vertex(o, p), {1});
    series = GradedMonomialSeries::toric(gc->polytope, o.k_max);
  }
  auto order = input_order(o, series.dim);
  auto body = okounkov_body(series, order, o.k_max);
  auto image = infinitesimal_map(body.limit);
  if (o.format == "svg")
    return {render_svg({{body.limit, "black", "steelblue", "body"}, {image, "darkgreen", "none", "F image"}})};
  Json j = header("okounkov", seed);
  j["body"] = to_json(body);
  j["infinitesimal_image"] = to_json(image);
  j["multiplicative"] = series.multiplicative();
  j["seshadri_from_body"] = is_normalized(body.limit) ? to_json(seshadri_from_body(body.limit)) : Json(nullptr);
  if (gc) {
    auto vol = volume_theorem_A(*gc, VolumeOptions{.numerical = false});
    j["volume_identity"] = to_json(volume_identity_check(body, vol.volume_MA));
    j["seshadri_theorem_B"] = to_json(simplex_inclusion(gc->polytope));
  }
  return as_json(j);
}

Artifact cmd_chebyshev(const Options& o, std::uint64_t seed) {
  require(o.point, "--point");
  RatVec y = parse_ratvec(o.point);
  std::optional<ConvexFunction> u;
  if (!o.fs_lambda.empty()) {
    u = SmoothToricPotential::fubini_study(y.size(), parse_rational(o.fs_lambda));
  } else {
    auto p = input_polytope(o);
    auto gc = build(p, input_vertex(o, p), {1});
    if (!o.k.empty())
      u = SmoothToricPotential::logsumexp(gc.polytope, parse_levels(o.k).back());
    else
      u = gc.representative;
  }
  Json j = header("chebyshev", seed);
  j["point"] = to_json(y);
  j["potential"] = std::visit([](const auto& f) { return to_json(f); }, *u);
  j["transform"] = to_json(chebyshev_transform(*u, y));
  return as_json(j);
}

Artifact cmd_embed_ball(const Options& o, std::uint64_t seed) {
  require(o.fs_lambda, "--fs-lambda");
  require(o.R, "--R");
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), {1});
  auto source = SmoothToricPotential::fubini_study(gc.dim(), parse_rational(o.fs_lambda));
  double R = to_double(parse_rational(o.R));
  FitOptions fo;
  fo.seed = seed;
  auto glued = fit_ball(gc, source, R, fo);
  const auto& cert = glued.certificate;
  auto profile = radial_profile(glued, -10, 2 * cert.log_R_prime + 5, 200);
  std::ostringstream csv;
  csv << "t,source_plus_C,target,glued\n";
  for (const auto& r : profile)
    csv << number(r.t).dump() << ',' << number(r.source).dump() << ',' << number(r.target).dump() << ','
        << number(r.glued).dump() << '\n';
  if (!o.profile.empty()) {
    std::ofstream f(o.profile);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.profile);
    f << csv.str();
  }
  if (o.format == "csv") return {csv.str()};
  Json j = header("embed-ball", seed);
  j["source"] = to_json(source);
  j["certificate"] = to_json(cert);
  j["volume_obstruction"] = to_json(volume_obstruction(source, gc));
  j["gromov"] = to_json(gromov_lower_bound(gc));
  return as_json(j);
}

Artifact cmd_gromov(const Options& o, std::uint64_t seed) {
  auto p = input_polytope(o);
  auto gc = build(p, input_vertex(o, p), {1});
  Json j = header("gromov", seed);
  j.update(to_json(gromov_lower_bound(gc)));
  return as_json(j);
}

Artifact cmd_corpus(const Options& o, std::uint64_t seed) {
  auto entries = builtin_corpus();
  if (!o.dir.empty())
    for (auto& e : directory_corpus(o.dir)) entries.push_back(std::move(e));
  auto rows = run_corpus(entries);
  if (o.format == "csv") return {corpus_csv(rows)};
  Json arr = Json::array();
  for (const auto& r : rows) arr.push_back(to_json(r));
  Json j = header("corpus", seed);
  j["rows"] = arr;
  return as_json(j);
}

Json error_json(const Error& e) {
  Json witness = nullptr;
  if (!e.witness().empty()) {
    try {
      witness = Json::parse(e.witness());
    } catch (const Json::exception&) {
      witness = e.witness();
    }
  }
  return {{"error", to_string(e.code())}, {"message", e.what()}, {"witness", witness}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"growthlab: toric growth conditions, volumes, Seshadri constants and ball gluing"};
  app.name("growthlab");
  app.require_subcommand(1);

  using Handler = std::function<Artifact(const Options&, std::uint64_t)>;
  std::map<std::string, Handler> handlers;
  std::map<std::string, CLI::Option*> seed_flags;

  auto add = [&](const std::string& name, const std::string& help, Handler h) {
    auto* sub = app.add_subcommand(name, help);
    handlers[name] = std::move(h);
    seed_flags[name] = sub->add_option("--seed", o.seed, "sampling seed (GROWTHLAB_SEED overrides the default 0)");
    sub->add_option("--format", o.format, "json, csv or svg")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--out", o.out, "write the artifact to this file");
    return sub;
  };
  auto polytope_opts = [&](CLI::App* sub) {
    sub->add_option("--polytope", o.polytope, "polytope JSON file");
    sub->add_option("--vertex", o.vertex, "vertex as comma-separated rationals (default: lexicographically first)");
  };

  polytope_opts(add("check-delzant", "per-vertex Delzant verdict", cmd_check_delzant));
  polytope_opts(add("normalize", "normalise at a vertex", cmd_normalize));
  {
    auto* s = add("growth", "growth condition report", cmd_growth);
    polytope_opts(s);
    s->add_option("--k", o.k, "approximant levels, e.g. 1,2,4");
    s->add_option("--samples", o.samples, "Monte-Carlo samples (0 disables)");
  }
  {
    auto* s = add("volume", "exact and Monte-Carlo Monge-Ampere volume", cmd_volume);
    polytope_opts(s);
    s->add_option("--k", o.k, "level of the sampled potential (default 4)");
    s->add_option("--samples", o.samples, "Monte-Carlo samples (0 disables)");
  }
  polytope_opts(add("seshadri", "Seshadri constant by two routes", cmd_seshadri));
  {
    auto* s = add("decompose", "radial decomposition of the representative", cmd_decompose);
    polytope_opts(s);
    s->add_option("--lambda", o.lambda, "levels, e.g. 0,1,3/2 (default: vertex coordinate sums)");
  }
  {
    auto* s = add("okounkov", "Okounkov body of a toric or given monomial series", cmd_okounkov);
    polytope_opts(s);
    s->add_option("--series", o.series, "series JSON file instead of a polytope");
    s->add_option("--k-max", o.k_max, "largest degree");
    s->add_option("--order", o.order, "lex or deglex");
    s->add_option("--perm", o.perm, "flag permutation, e.g. 1,0");
  }
  {
    auto* s = add("chebyshev", "conjugate of a potential at a point", cmd_chebyshev);
    polytope_opts(s);
    s->add_option("--k", o.k, "use u_k instead of the support function");
    s->add_option("--fs-lambda", o.fs_lambda, "use lambda ln(1 + sum e^x)");
    s->add_option("--point", o.point, "point of the slope polytope");
  }
  {
    auto* s = add("embed-ball", "glue a Fubini-Study ball into the growth condition", cmd_embed_ball);
    polytope_opts(s);
    s->add_option("--fs-lambda", o.fs_lambda, "Fubini-Study scale");
    s->add_option("--R", o.R, "ball radius");
    s->add_option("--profile", o.profile, "also write the radial profile CSV here");
  }
  polytope_opts(add("gromov", "Gromov width lower bound", cmd_gromov));
  {
    auto* s = add("corpus", "identity table over the built-in corpus", cmd_corpus);
    s->add_option("--dir", o.dir, "directory of extra polytope JSON files");
  }

  std::vector<const char*> argv{"growthlab"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << Json{{"error", "UsageError"}, {"message", e.what()}, {"witness", nullptr}}.dump(2) << "\n";
    return 2;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    static const std::map<std::string, std::vector<std::string>> formats{
        {"csv", {"corpus", "embed-ball"}}, {"svg", {"normalize", "growth", "seshadri", "okounkov"}}};
    if (auto it = formats.find(o.format); it != formats.end() &&
        std::find(it->second.begin(), it->second.end(), name) == it->second.end())
      throw Error(ErrorCode::ParseError, name + " does not support --format " + o.format);
    std::uint64_t seed = resolve_seed(o, seed_flags[name]->count() > 0);
    Artifact a = handlers.at(name)(o, seed);
    if (!o.out.empty()) {
      std::ofstream f(o.out);
      if (!f) throw Error(ErrorCode::ParseError, "cannot write " + o.out);
      f << a.text;
    } else {
      out << a.text;
    }
    return 0;
  } catch (const Error& e) {
    out << error_json(e).dump(2) << "\n";
    return e.code() == ErrorCode::NonConvergence ? 1 : 2;
  } catch (const std::exception& e) {
    out << Json{{"error", "InternalError"}, {"message", e.what()}, {"witness", nullptr}}.dump(2) << "\n";
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace growthlab::cli
