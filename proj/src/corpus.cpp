#include "growthlab/corpus.hpp"

#include "growthlab/embed.hpp"
#include "growthlab/error.hpp"
#include "growthlab/growth.hpp"
#include "growthlab/okounkov.hpp"

#include <algorithm>
#include <filesystem>
#include <future>
#include <sstream>

namespace growthlab {

namespace {

Polytope box(std::size_t n, long side) {
  std::vector<RatVec> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    RatVec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i & 1) ? side : 0;
    pts.push_back(v);
  }
  return hull(pts);
}

Polytope simplex(std::size_t n) {
  std::vector<RatVec> pts{zeros(n)};
  for (std::size_t i = 0; i < n; ++i) pts.push_back(unit(n, i));
  return hull(pts);
}

std::vector<CorpusRow> rows_for(const CorpusEntry& e) {
  auto flagged = [&](const std::string& code, const std::string& msg) {
    CorpusRow r;
    r.name = e.name;
    r.dim = e.polytope ? e.polytope->dim() : 0;
    r.flagged = true;
    r.error = code;
    r.message = msg;
    return std::vector<CorpusRow>{r};
  };
  if (!e.polytope) return flagged("ParseError", e.load_error);
  const Polytope& p = *e.polytope;
  try {
    auto report = is_delzant(p);
    if (!report.delzant) {
      for (const auto& v : report.vertices)
        if (!v.delzant) return flagged("NotDelzantVertex", "not Delzant at " + to_string(v.vertex));
    }
    std::vector<CorpusRow> rows;
    for (const auto& v : p.vertices()) {
      CorpusRow r;
      r.name = e.name;
      r.dim = p.dim();
      r.vertex = v;
      auto gc = build(p, v, {1});
      auto vol = volume_theorem_A(gc, VolumeOptions{.numerical = false});
      auto ses = seshadri_theorem_B(gc);
      r.volume_polytope = vol.volume_polytope;
      r.volume_MA = vol.volume_MA;
      r.seshadri_lp = ses.seshadri_lp;
      r.seshadri_domination = ses.seshadri_domination;
      r.upper_bound = ses.upper_bound;
      r.slack = ses.slack;
      auto body = okounkov_body(GradedMonomialSeries::toric(gc.polytope, 3), MonomialOrder{}, 3);
      r.okounkov_body_equal = std::all_of(body.hull_at_k.begin(), body.hull_at_k.end(),
                                          [&](const auto& kv) { return kv.second == gc.polytope; });
      r.okounkov_volume_identity = volume_identity_check(body, vol.volume_MA).equal;
      r.seshadri_from_body = seshadri_from_body(body.limit);
      r.gromov = gromov_lower_bound(gc).width_lower_bound;
      rows.push_back(std::move(r));
    }
    return rows;
  } catch (const Error& err) {
    return flagged(to_string(err.code()), err.what());
  } catch (const std::exception& err) {
    return flagged("InternalError", err.what());
  }
}

}  // namespace

std::vector<CorpusEntry> builtin_corpus() {
  std::vector<CorpusEntry> c;
  c.push_back({"simplex1", simplex(1), {}});
  c.push_back({"simplex2", simplex(2), {}});
  c.push_back({"simplex3", simplex(3), {}});
  c.push_back({"interval2", box(1, 2), {}});
  c.push_back({"interval3", box(1, 3), {}});
  c.push_back({"square2", box(2, 2), {}});
  c.push_back({"cube2", box(3, 2), {}});
  std::vector<RatVec> t{{0, 0}, {3, 0}, {1, 1}, {0, 1}};
  c.push_back({"trapezoid", hull(t), {}});
  return c;
}

std::vector<CorpusEntry> directory_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  std::error_code ec;
  for (const auto& item : fs::directory_iterator(dir, ec))
    if (item.path().extension() == ".json") files.push_back(item.path());
  if (ec) throw Error(ErrorCode::ParseError, "cannot read corpus directory " + dir);
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    CorpusEntry e;
    e.name = f.stem().string();
    try {
      e.polytope = load_polytope(f.string());
    } catch (const Error& err) {
      e.load_error = err.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CorpusRow> run_corpus(const std::vector<CorpusEntry>& entries) {
  std::vector<std::future<std::vector<CorpusRow>>> jobs;
  for (const auto& e : entries) jobs.push_back(std::async(std::launch::async, rows_for, std::cref(e)));
  std::vector<CorpusRow> rows;
  for (auto& j : jobs)
    for (auto& r : j.get()) rows.push_back(std::move(r));
  return rows;
}

Json to_json(const CorpusRow& r) {
  Json j{{"name", r.name}, {"dim", r.dim}, {"flagged", r.flagged}};
  if (r.flagged) {
    j["error"] = r.error;
    j["message"] = r.message;
    return j;
  }
  j["vertex"] = to_json(*r.vertex);
  j["volume_polytope"] = to_json(r.volume_polytope);
  j["volume_MA"] = to_json(r.volume_MA);
  j["seshadri_lp"] = to_json(r.seshadri_lp);
  j["seshadri_domination"] = to_json(r.seshadri_domination);
  j["seshadri_from_body"] = to_json(r.seshadri_from_body);
  j["okounkov_body_equal"] = r.okounkov_body_equal;
  j["okounkov_volume_identity"] = r.okounkov_volume_identity;
  j["gromov"] = to_json(r.gromov);
  j["upper_bound"] = number(r.upper_bound);
  j["slack"] = number(r.slack);
  return j;
}

std::string corpus_csv(const std::vector<CorpusRow>& rows) {
  std::ostringstream out;
  out << "name,dim,vertex,flagged,error,volume_MA,seshadri_lp,seshadri_domination,seshadri_from_body,"
         "okounkov_body_equal,okounkov_volume_identity,gromov,upper_bound,slack\n";
  for (const auto& r : rows) {
    out << r.name << ',' << r.dim << ',';
    if (r.vertex) {
      out << '"';
      for (std::size_t i = 0; i < r.vertex->size(); ++i) out << (i ? " " : "") << to_string((*r.vertex)[i]);
      out << '"';
    }
    out << ',' << (r.flagged ? "true" : "false") << ',' << r.error << ',';
    if (r.flagged) {
      out << ",,,,,,,,\n";
      continue;
    }
    out << to_string(r.volume_MA) << ',' << to_string(r.seshadri_lp) << ',' << to_string(r.seshadri_domination) << ','
        << to_string(r.seshadri_from_body) << ',' << (r.okounkov_body_equal ? "true" : "false") << ','
        << (r.okounkov_volume_identity ? "true" : "false") << ',' << to_string(r.gromov) << ','
        << number(r.upper_bound).dump() << ',' << number(r.slack).dump() << '\n';
  }
  return out.str();
}

}  // namespace growthlab
