#pragma once

// JSON and CSV forms of the library types. Rationals are always "p/q"
// strings in lowest terms; an enclosure that is not exact is written as
// {"lo": "p/q", "hi": "p/q"}.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cantor/cover.hpp"
#include "cantor/davies.hpp"
#include "cantor/metric.hpp"
#include "cantor/qlinear.hpp"
#include "cantor/recover.hpp"

namespace cantor::io {

using nlohmann::json;

inline json to_json(const Rational& q) { return to_string(q); }

inline json to_json(const RatInterval& x) {
  if (x.exact()) return to_string(x.lo());
  return json{{"lo", to_string(x.lo())}, {"hi", to_string(x.hi())}};
}

inline Rational rational_from(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  throw InvalidInput("expected a \"p/q\" string, got " + j.dump());
}

inline RatInterval interval_from(const json& j) {
  if (j.is_object()) return {rational_from(j.at("lo")), rational_from(j.at("hi"))};
  return rational_from(j);
}

inline GapSequence parse_gap_sequence(const std::string& descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string::npos)
    throw InvalidInput("gap sequence descriptor must be geometric:<r> or prefix:<a1>,<a2>,...");
  const std::string kind = descriptor.substr(0, colon);
  const std::string rest = descriptor.substr(colon + 1);
  if (kind == "geometric") return GapSequence::geometric(parse_rational(rest));
  if (kind == "prefix") {
    std::vector<Rational> terms;
    std::stringstream ss(rest);
    std::string item;
    while (std::getline(ss, item, ',')) terms.push_back(parse_rational(item));
    return GapSequence::prefix(std::move(terms));
  }
  throw InvalidInput("unknown gap sequence kind '" + kind + "'");
}

// ---- GapFunction ----

inline json to_json(const GapFunction& phi) {
  json values = json::array();
  for (std::size_t i = 0; i < phi.values().size(); ++i) {
    const auto d = Dyadic::from_index(i + 1);
    values.push_back({{"num", d.numerator()}, {"level", d.level()}, {"mass", to_string(phi.values()[i])}});
  }
  json residuals = json::array();
  for (const auto& r : phi.residuals()) residuals.push_back(to_json(r));
  return {{"resolution", phi.resolution()}, {"values", values}, {"residuals", residuals}};
}

inline GapFunction gap_function_from(const json& j) {
  const int resolution = j.at("resolution").get<int>();
  if (resolution < 1 || resolution > kMaxResolution) throw InvalidInput("resolution out of range");
  const std::uint64_t leaves = std::uint64_t{1} << resolution;
  std::vector<Rational> values(leaves - 1);
  std::vector<bool> seen(leaves - 1, false);
  for (const auto& v : j.at("values")) {
    const Dyadic d(v.at("num").get<std::uint64_t>(), v.at("level").get<int>());
    if (d.level() > resolution) throw InvalidInput("value at " + d.str() + " lies below the resolution");
    const auto idx = d.breadth_first_index() - 1;
    if (seen[idx]) throw InvalidInput("duplicate value for " + d.str());
    seen[idx] = true;
    values[idx] = rational_from(v.at("mass"));
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InvalidInput("missing value for " + Dyadic::from_index(i + 1).str());
  std::vector<RatInterval> residuals;
  for (const auto& r : j.at("residuals")) residuals.push_back(interval_from(r));
  return {resolution, std::move(values), std::move(residuals)};
}

// ---- Segments, CantorApprox, TAssignment ----

inline json to_json(const Segment& s) {
  json out{{"lo", to_json(s.lo)}, {"hi", to_json(s.hi)}};
  if (!s.is_exact()) out["length"] = to_json(s.length);
  return out;
}

inline Segment segment_from(const json& j) {
  Segment s{interval_from(j.at("lo")), interval_from(j.at("hi")), Rational(0)};
  const RatInterval diff = s.hi - s.lo;
  s.length = j.contains("length") ? interval_from(j.at("length"))
                                  : RatInterval(std::max(diff.lo(), Rational(0)), std::max(diff.hi(), Rational(0)));
  return s;
}

inline json to_json(const CantorApprox& a) {
  json pieces = json::array();
  for (const auto& s : a.pieces) pieces.push_back(to_json(s));
  json gaps = json::array();
  for (const auto& g : a.gaps) gaps.push_back(to_json(g));
  return {{"depth", a.depth}, {"pieces", pieces}, {"gaps", gaps}};
}

inline CantorApprox cantor_approx_from(const json& j) {
  CantorApprox a;
  a.depth = j.value("depth", 0);
  for (const auto& p : j.at("pieces")) a.pieces.push_back(segment_from(p));
  std::sort(a.pieces.begin(), a.pieces.end(),
            [](const Segment& x, const Segment& y) { return x.lo.mid() < y.lo.mid(); });
  if (j.contains("gaps")) {
    for (const auto& g : j.at("gaps")) a.gaps.push_back(interval_from(g));
  } else {
    for (std::size_t i = 0; i + 1 < a.pieces.size(); ++i) {
      const RatInterval g = a.pieces[i + 1].lo - a.pieces[i].hi;
      a.gaps.emplace_back(std::max(g.lo(), Rational(0)), std::max(g.hi(), Rational(0)));
    }
  }
  if (a.gaps.size() + 1 != a.pieces.size()) throw InvalidInput("gap count must be one less than piece count");
  certify_separated(a.pieces, "pieces");
  return a;
}

inline json to_json(const TAssignment& a) {
  json levels = json::array();
  for (const auto& level : a.levels) {
    json row = json::array();
    for (const auto& s : level) row.push_back(to_json(s));
    levels.push_back(row);
  }
  return {{"branching", a.tree.branching}, {"levels", levels}};
}

inline TAssignment assignment_from(const json& j) {
  std::vector<std::vector<Segment>> levels;
  for (const auto& row : j.at("levels")) {
    std::vector<Segment> level;
    for (const auto& s : row) level.push_back(segment_from(s));
    levels.push_back(std::move(level));
  }
  if (levels.empty()) throw InvalidInput("assignment has no levels");
  return make_assignment(j.at("branching").get<int>(), std::move(levels));
}

// ---- Davies ----

inline json to_json(const PointCloud& c) {
  json points = json::array();
  for (const auto& p : c.points) points.push_back(to_string(p));
  json prov = json::object();
  for (const auto& [k, v] : c.provenance) prov[k] = v;
  return {{"points", points}, {"provenance", prov}};
}

inline PointCloud point_cloud_from(const json& j) {
  std::vector<Rational> pts;
  for (const auto& p : j.at("points")) pts.push_back(rational_from(p));
  std::map<std::string, std::string> prov;
  if (j.contains("provenance"))
    for (const auto& [k, v] : j.at("provenance").items()) prov[k] = v.is_string() ? v.get<std::string>() : v.dump();
  return make_cloud(std::move(pts), std::move(prov));
}

// ---- CompactRep ----

inline json to_json(const CompactRep& r) {
  json comps = json::array();
  for (const auto& c : r.components()) comps.push_back({{"lo", to_string(c.lo)}, {"hi", to_string(c.hi)}});
  return {{"components", comps}, {"slack", to_string(r.slack())}};
}

/// Accepts {"components": ...}, {"intervals": ...}, {"points": ...} or a
/// CantorApprox document with "pieces".
inline CompactRep compact_rep_from(const json& j) {
  if (j.contains("pieces")) return CompactRep::from_approx(cantor_approx_from(j));
  if (j.contains("points")) {
    std::vector<Rational> pts;
    for (const auto& p : j.at("points")) pts.push_back(rational_from(p));
    return CompactRep::from_points(pts);
  }
  const json& list = j.contains("components") ? j.at("components") : j.at("intervals");
  std::vector<CompactRep::Component> parts;
  for (const auto& c : list) parts.push_back({rational_from(c.at("lo")), rational_from(c.at("hi"))});
  return CompactRep::from_intervals(std::move(parts), j.contains("slack") ? rational_from(j.at("slack")) : Rational(0));
}

// ---- Cover result ----

inline json to_json(const CoverResult& r) {
  json runs = json::array();
  for (const auto& [a, b] : r.runs) runs.push_back(json::array({a, b}));
  return {{"value_lo", to_string(r.value.lo())},
          {"value_hi", to_string(r.value.hi())},
          {"delta", to_string(r.delta)},
          {"depth", r.depth},
          {"certificate", runs}};
}

// ---- Q-linear points ----

/// Either a bare matrix [[...], ...] or {"points": [[...]], "alpha": [...]}.
inline std::vector<QPoint> qpoints_from(const json& j) {
  const json& rows = j.is_array() ? j : j.at("points");
  std::vector<QPoint> out;
  for (const auto& row : rows) {
    QPoint p;
    for (const auto& x : row) p.push_back(rational_from(x));
    out.push_back(std::move(p));
  }
  return out;
}

inline json to_json(const QPoint& p) {
  json row = json::array();
  for (const auto& x : p) row.push_back(to_string(x));
  return row;
}

// ---- Files ----

inline json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput("malformed JSON in " + path + ": " + e.what());
  }
}

}  // namespace cantor::io
