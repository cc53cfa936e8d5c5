// cantor_gauge: command-line front end for the cantor library.
//
// Exit codes: 0 verdict true, 1 verdict false, 2 usage or validation error,
// 3 inconclusive or over budget.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cantor/cantor.hpp"
#include "cantor/io.hpp"

namespace fs = std::filesystem;
using cantor::Rational;
using cantor::RatInterval;
using cantor::Verdict;
using cantor::io::json;
using cantor::io::to_json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::True: return kExitTrue;
    case Verdict::False: return kExitFalse;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitInconclusive;
}

Verdict from_bool(bool b) { return b ? Verdict::True : Verdict::False; }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void write_atomic(const fs::path& path, const std::string& content) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw cantor::InvalidInput("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw cantor::InvalidInput("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

// Everything one invocation produces. Without --out-dir the primary artifact
// goes to stdout and nothing else is written.
struct Run {
  std::string command;
  json parameters = json::object();
  std::vector<std::string> inputs;
  std::optional<fs::path> out_dir;
  json outputs = json::array();
  json verdicts = json::object();
  bool primary_written = false;

  void emit(const std::string& name, const std::string& content, bool primary) {
    if (out_dir) {
      fs::create_directories(*out_dir);
      write_atomic(*out_dir / name, content);
      outputs.push_back(name);
    } else if (primary && !primary_written) {
      std::cout << content;
      primary_written = true;
    }
  }

  void verdict(const std::string& name, Verdict v) { verdicts[name] = cantor::to_string(v); }

  void finish(const std::string& status, const std::string& error = "") {
    if (!out_dir) return;
    json m{{"command", command},
           {"parameters", parameters},
           {"inputs", inputs},
           {"outputs", outputs},
           {"tool_version", CANTOR_VERSION},
           {"status", status},
           {"verdicts", verdicts}};
    if (!error.empty()) m["error"] = error;
    fs::create_directories(*out_dir);
    write_atomic(*out_dir / "manifest.json", dump(m));
  }
};

struct Options {
  std::string out_dir;
  std::uint64_t budget = 0;  // 0: environment or default
};

std::uint64_t budget_of(const Options& o) { return o.budget ? o.budget : cantor::enumeration_budget(); }

// Where a gap function or assignment comes from.
struct Source {
  std::string alpha;
  std::string preset;
  std::string phi_file;
  std::string assignment_file;
  int depth = -1;
};

void add_phi_options(CLI::App* cmd, Source& s) {
  cmd->add_option("--alpha", s.alpha, "gap sequence: geometric:<r> or prefix:<a1>,<a2>,...");
  cmd->add_option("--preset", s.preset, "named gap function: middle-thirds");
  cmd->add_option("--phi", s.phi_file, "gap function JSON file");
}

void add_assignment_options(CLI::App* cmd, Source& s) {
  add_phi_options(cmd, s);
  cmd->add_option("--assignment", s.assignment_file, "T-assignment JSON file");
  cmd->add_option("--depth", s.depth, "construction depth K")->check(CLI::Range(1, cantor::kMaxResolution));
}

void record_source(const Source& s, Run& run) {
  if (!s.alpha.empty()) run.parameters["alpha"] = s.alpha;
  if (!s.preset.empty()) run.parameters["preset"] = s.preset;
  if (!s.phi_file.empty()) run.inputs.push_back(s.phi_file);
  if (!s.assignment_file.empty()) run.inputs.push_back(s.assignment_file);
  if (s.depth >= 0) run.parameters["depth"] = s.depth;
}

cantor::GapFunction resolve_phi(const Source& s, int resolution) {
  const int given = !s.alpha.empty() + !s.preset.empty() + !s.phi_file.empty();
  if (given != 1) throw CLI::ValidationError("exactly one of --alpha, --preset, --phi is required");
  if (!s.phi_file.empty()) return cantor::io::gap_function_from(cantor::io::read_json(s.phi_file));
  if (!s.alpha.empty()) return cantor::phi_from_alpha(cantor::io::parse_gap_sequence(s.alpha), resolution);
  if (s.preset == "middle-thirds") return cantor::middle_thirds(resolution);
  throw cantor::InvalidInput("unknown preset '" + s.preset + "' (known: middle-thirds)");
}

cantor::TAssignment resolve_assignment(const Source& s, const Options& o) {
  if (!s.assignment_file.empty()) {
    if (!s.alpha.empty() || !s.preset.empty() || !s.phi_file.empty())
      throw CLI::ValidationError("--assignment excludes --alpha, --preset and --phi");
    return cantor::io::assignment_from(cantor::io::read_json(s.assignment_file));
  }
  if (s.depth < 1) throw CLI::ValidationError("--depth is required unless --assignment is given");
  cantor::require_budget(s.depth, budget_of(o), "assignment construction");
  const auto phi = resolve_phi(s, s.depth);
  return cantor::assignment_from_phi(phi, std::min(s.depth, phi.resolution()));
}

json nullable(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }

// ---- construct ----

int cmd_construct(const Source& s, const Options& o, bool emit_phi, bool emit_assignment, Run& run) {
  if (s.depth < 0) throw CLI::ValidationError("--depth is required");
  record_source(s, run);
  cantor::require_budget(s.depth, budget_of(o), "construction");
  const auto phi = resolve_phi(s, std::max(s.depth, 1));
  const auto approx = cantor::build_cantor(phi, s.depth);
  run.emit("cantor.json", dump(to_json(approx)), true);
  std::ostringstream csv;
  csv << "index,lo,hi,length\n";
  for (std::size_t i = 0; i < approx.gaps.size(); ++i) {
    const auto lo = approx.pieces[i].hi;
    const auto hi = approx.pieces[i + 1].lo;
    csv << i << ',' << to_json(lo).dump() << ',' << to_json(hi).dump() << ',' << to_json(approx.gaps[i]).dump()
        << '\n';
  }
  run.emit("gaps.csv", csv.str(), false);
  if (emit_phi) run.emit("phi.json", dump(to_json(phi)), false);
  if (emit_assignment) {
    if (s.depth < 1) throw CLI::ValidationError("--emit-assignment needs --depth >= 1");
    run.emit("assignment.json", dump(to_json(cantor::assignment_from_phi(phi, s.depth))), false);
  }
  run.parameters["pieces"] = approx.pieces.size();
  return kExitTrue;
}

// ---- recover ----

int cmd_recover(const std::string& gaps_file, int resolution, Run& run) {
  run.inputs.push_back(gaps_file);
  run.parameters["resolution"] = resolution;
  const json doc = cantor::io::read_json(gaps_file);
  cantor::GapFunction phi = [&] {
    if (doc.is_object() && doc.contains("pieces"))
      return cantor::recover_phi(cantor::gaps_of(cantor::io::cantor_approx_from(doc)), resolution);
    const json& list = doc.is_array() ? doc : doc.at("gaps");
    std::vector<std::pair<Rational, Rational>> gaps;
    for (const auto& g : list) {
      if (g.is_array() && g.size() == 2)
        gaps.emplace_back(cantor::io::rational_from(g[0]), cantor::io::rational_from(g[1]));
      else
        gaps.emplace_back(cantor::io::rational_from(g.at("lo")), cantor::io::rational_from(g.at("hi")));
    }
    return cantor::recover_phi(gaps, resolution);
  }();
  run.emit("phi.json", dump(to_json(phi)), true);
  return kExitTrue;
}

// ---- certify ----

int cmd_certify(const Source& s, const Options& o, int l, int n_opt, Run& run) {
  record_source(s, run);
  run.parameters["l"] = l;
  const auto a = resolve_assignment(s, o);
  const int n = a.tree.branching;
  if (n_opt != 0 && n_opt != n)
    throw cantor::InvalidInput("--n " + std::to_string(n_opt) + " does not match the assignment's branching " +
                               std::to_string(n));
  run.parameters["n"] = n;
  const int depth = a.depth();

  json report;
  const auto valid = cantor::validate_assignment(a);
  report["assignment"] = {{"valid", cantor::to_string(valid.verdict())},
                          {"nonempty", cantor::to_string(valid.nonempty)},
                          {"small_diameter", cantor::to_string(valid.small_diameter)},
                          {"disjoint", cantor::to_string(valid.disjoint)},
                          {"nested", cantor::to_string(valid.nested)},
                          {"strictly_nested", cantor::to_string(valid.strictly_nested)},
                          {"failures", valid.failures},
                          {"depth", depth}};

  const auto profile = cantor::diameter_profile(a);
  int failing = 0;
  const Verdict regular = cantor::check_regular(profile, &failing);
  report["regular"] = cantor::to_string(regular);
  if (regular != Verdict::True) report["regular_failure_level"] = failing;

  const auto li = cantor::check_l_intersection(a, l);
  json li_json{{"verdict", cantor::to_string(li.verdict)}, {"vacuous_levels", li.vacuous_levels}};
  if (li.failure) li_json["failure"] = {{"level", li.failure->first}, {"window_start", li.failure->second}};
  report["l_intersection"] = li_json;

  const auto cc = cantor::certified_constant(n, l);
  report["j0"] = cc.j0;
  report["c"] = cantor::to_string(cc.c);
  report["bounds"] = {{"lower", cantor::to_string(cc.c)}, {"upper", "1/1"}};

  Verdict sandwich = Verdict::Inconclusive;
  if (regular == Verdict::True) {
    const auto h = cantor::synth_gauge(profile, n);
    json sums = json::array();
    for (int k = 1; k <= depth; ++k) {
      const auto sum = cantor::natural_cover_sum(a, h, k);
      sums.push_back({{"level", k}, {"lo", cantor::to_string(sum.lo())}, {"hi", cantor::to_string(sum.hi())}});
    }
    report["natural_cover_sum"] = sums;
    const Rational delta = profile.M(depth).hi();
    const auto cover = cantor::min_cover_oracle(cantor::body_approx(a, depth), h, delta);
    report["oracle"] = to_json(cover);
    if (cc.c <= cover.value.lo() && cover.value.hi() <= 1)
      sandwich = Verdict::True;
    else if (cover.value.hi() < cc.c || cover.value.lo() > 1)
      sandwich = Verdict::False;
  } else {
    report["natural_cover_sum"] = nullptr;
    report["oracle"] = nullptr;
    if (regular == Verdict::False) sandwich = Verdict::False;
  }
  report["sandwich"] = cantor::to_string(sandwich);
  const Verdict overall = valid.verdict() && regular && li.verdict && sandwich;
  report["verdict"] = cantor::to_string(overall);

  run.verdict("assignment", valid.verdict());
  run.verdict("regular", regular);
  run.verdict("l_intersection", li.verdict);
  run.verdict("sandwich", sandwich);
  run.verdict("overall", overall);
  run.emit("certify.json", dump(report), true);
  return exit_code(overall);
}

// ---- gauge ----

int cmd_gauge(const Source& s, const Options& o, const std::string& from, const std::string& to, int steps,
              Run& run) {
  record_source(s, run);
  const auto a = resolve_assignment(s, o);
  const auto profile = cantor::diameter_profile(a);
  const auto h = cantor::synth_gauge(profile, a.tree.branching);
  const Rational lo = cantor::parse_rational(from);
  const Rational hi = to.empty() ? 2 * profile.M(1).hi() : cantor::parse_rational(to);
  if (lo < 0 || hi <= lo) throw cantor::InvalidInput("grid needs 0 <= --from < --to");
  if (steps < 1) throw cantor::InvalidInput("--steps must be positive");
  run.parameters["from"] = cantor::to_string(lo);
  run.parameters["to"] = cantor::to_string(hi);
  run.parameters["steps"] = steps;
  std::ostringstream csv;
  csv << "t,h_lo,h_hi\n";
  for (int i = 0; i <= steps; ++i) {
    const Rational t = lo + (hi - lo) * i / steps;
    const auto v = cantor::eval_gauge(h, RatInterval(t));
    csv << cantor::to_string(t) << ',' << cantor::to_string(v.lo()) << ',' << cantor::to_string(v.hi()) << '\n';
  }
  run.emit("gauge.csv", csv.str(), true);
  json plateaus = json::array();
  for (const auto& p : h.plateaus())
    plateaus.push_back({{"level", p.level},
                        {"lo", cantor::to_string(p.lo)},
                        {"hi", cantor::to_string(p.hi)},
                        {"value", cantor::to_string(p.value)}});
  run.emit("plateaus.json", dump(plateaus), false);
  return kExitTrue;
}

// ---- measure ----

int cmd_measure(const Source& s, const Options& o, const std::string& delta_text, const std::string& gauge_text,
                Run& run) {
  record_source(s, run);
  const auto a = resolve_assignment(s, o);
  const auto profile = cantor::diameter_profile(a);
  const Rational delta = delta_text.empty() ? profile.M(a.depth()).hi() : cantor::parse_rational(delta_text);
  run.parameters["delta"] = cantor::to_string(delta);
  run.parameters["gauge"] = gauge_text;
  const auto target = cantor::body_approx(a, a.depth());
  std::optional<cantor::GaugeFunction> h;
  if (gauge_text == "synth") {
    h = cantor::synth_gauge(profile, a.tree.branching);
  } else if (gauge_text.rfind("linear:", 0) == 0) {
    h = cantor::GaugeFunction::linear(cantor::parse_rational(gauge_text.substr(7)));
  } else {
    throw cantor::InvalidInput("--gauge must be synth or linear:<slope>");
  }
  const auto cover = cantor::min_cover_oracle(target, *h, delta);
  run.emit("cover.json", dump(to_json(cover)), true);
  return kExitTrue;
}

// ---- davies ----

int cmd_davies_build(int truncation, int k, int blocks, const Options& o, Run& run) {
  run.parameters["truncation"] = truncation;
  const std::uint64_t budget = budget_of(o);
  if (k > 0) {
    run.parameters["k"] = k;
    const auto t = cantor::default_good_sequence(truncation);
    const auto cloud = cantor::build_Bk_points(t, cantor::Filtration::powers_of_two(), k, truncation, budget);
    run.emit("cloud.json", dump(to_json(cloud)), true);
    return kExitTrue;
  }
  run.parameters["blocks"] = blocks;
  const auto config = cantor::default_davies_config(truncation, blocks);
  auto assembled = cantor::assemble_C(config, budget);
  for (const auto& b : assembled.blocks)
    assembled.cloud.provenance["block_" + std::to_string(b.k)] =
        "n=" + std::to_string(b.index) + " shift=" + cantor::to_string(b.shift) + " ball=(" +
        cantor::to_string(b.ball_lo) + "," + cantor::to_string(b.ball_hi) + ") size=" + std::to_string(b.size);
  run.emit("cloud.json", dump(to_json(assembled.cloud)), true);
  return kExitTrue;
}

int cmd_davies_check(int truncation, int k, int l, const Options& o, Run& run) {
  if (k < 1 || l < 1) throw CLI::ValidationError("davies check needs --k >= 1 and --l >= 1");
  run.parameters["truncation"] = truncation;
  run.parameters["k"] = k;
  run.parameters["l"] = l;
  const auto t = cantor::default_good_sequence(truncation);
  const auto r =
      cantor::decomposition_check(t, cantor::Filtration::powers_of_two(), k, l, truncation, budget_of(o));
  const json report{{"translates_of_ck", cantor::to_string(r.translates_of_ck)},
                    {"translates_of_ckl", cantor::to_string(r.translates_of_ckl)},
                    {"supports_partition", r.supports_partition},
                    {"sizes",
                     {{"c0", r.c0_size}, {"u", r.u_size}, {"d", r.d_size}, {"ck", r.ck_size}, {"ckl", r.ckl_size}}},
                    {"verdict", cantor::to_string(r.verdict())}};
  run.verdict("translates_of_ck", r.translates_of_ck);
  run.verdict("translates_of_ckl", r.translates_of_ckl);
  run.emit("decomposition.json", dump(report), true);
  return exit_code(r.verdict());
}

int cmd_davies_good(int depth, const Options& o, Run& run) {
  run.parameters["depth"] = depth;
  const auto t = cantor::default_good_sequence(std::max(depth, 1));
  const auto r = cantor::check_good(t, depth, budget_of(o));
  json report{{"distinct", r.distinct},
              {"half_domination", r.half_domination},
              {"half_domination_failure", nullable(r.half_domination_failure)},
              {"enumerated", r.enumerated},
              {"criterion", r.criterion()},
              {"verdict", cantor::to_string(from_bool(r.good()))}};
  if (r.collision) report["collision"] = {r.collision->first, r.collision->second};
  run.verdict("good", from_bool(r.good()));
  run.emit("good.json", dump(report), true);
  return exit_code(from_bool(r.good()));
}

// ---- qlinear ----

int cmd_qlinear(const std::string& file, const std::string& alpha_text, Run& run) {
  run.inputs.push_back(file);
  const json doc = cantor::io::read_json(file);
  const auto points = cantor::io::qpoints_from(doc);
  cantor::common_dimension(points);
  std::optional<cantor::QPoint> alpha;
  if (!alpha_text.empty()) {
    cantor::QPoint p;
    std::stringstream ss(alpha_text);
    std::string item;
    while (std::getline(ss, item, ',')) p.push_back(cantor::parse_rational(item));
    alpha = p;
    run.parameters["alpha"] = alpha_text;
  } else if (doc.is_object() && doc.contains("alpha")) {
    alpha = cantor::io::qpoints_from(json::array({doc.at("alpha")})).front();
  }
  const bool independent = cantor::is_independent(points);
  json report{{"independent", independent}, {"rank", cantor::rank(points)}, {"count", points.size()}};
  if (alpha) {
    const auto overlap = cantor::translate_overlap(points, *alpha);
    json rows = json::array();
    for (const auto& p : overlap) rows.push_back(to_json(p));
    report["overlap"] = rows;
    report["overlap_size"] = overlap.size();
    report["at_most_one"] = overlap.size() <= 1;
  }
  run.verdict("independent", from_bool(independent));
  run.emit("qlinear.json", dump(report), true);
  return exit_code(from_bool(independent));
}

// ---- approx ----

int cmd_approx(const std::string& target_file, const std::string& epsilon_text, const std::string& family_text,
               Run& run) {
  run.inputs.push_back(target_file);
  run.parameters["epsilon"] = epsilon_text;
  run.parameters["family"] = family_text;
  const auto target = cantor::io::compact_rep_from(cantor::io::read_json(target_file));
  const Rational eps = cantor::parse_rational(epsilon_text);
  const auto r = cantor::dense_approx(target, eps, cantor::parse_family(family_text));
  json offsets = json::array();
  for (const auto& x : r.construction.offsets) offsets.push_back(cantor::to_string(x));
  const json report{{"output", to_json(r.output)},
                    {"family", cantor::to_string(r.construction.seed.family)},
                    {"seed",
                     {{"description", r.construction.seed.description},
                      {"diameter", cantor::to_string(r.construction.seed.diameter)},
                      {"rep", to_json(r.construction.seed.rep)}}},
                    {"offsets", offsets},
                    {"epsilon", cantor::to_string(eps)},
                    {"distance", {{"lo", cantor::to_string(r.distance.lo())}, {"hi", cantor::to_string(r.distance.hi())}}},
                    {"within_epsilon", r.within_epsilon}};
  run.verdict("within_epsilon", from_bool(r.within_epsilon));
  run.emit("approx.json", dump(report), true);
  return exit_code(from_bool(r.within_epsilon));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact constructions and certificates for Cantor sets and gauge functions"};
  app.set_version_flag("--version", std::string(CANTOR_VERSION));
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  app.add_option("--out-dir", opts.out_dir, "write outputs and manifest.json here instead of stdout");
  app.add_option("--budget,--max-enum", opts.budget, "cap on exhaustive enumerations (default 2^20)")
      ->check(CLI::PositiveNumber);

  Run run;
  std::function<int()> action;

  Source src;
  bool emit_phi = false;
  bool emit_assignment = false;
  auto* construct = app.add_subcommand("construct", "build the depth-k approximation K_phi^(k)");
  add_phi_options(construct, src);
  construct->add_option("--depth", src.depth, "depth k")->check(CLI::Range(0, cantor::kMaxResolution));
  construct->add_flag("--emit-phi", emit_phi, "also write phi.json");
  construct->add_flag("--emit-assignment", emit_assignment, "also write assignment.json (levels 1..k)");
  construct->callback([&] { action = [&] { return cmd_construct(src, opts, emit_phi, emit_assignment, run); }; });

  std::string gaps_file;
  int resolution = 0;
  auto* recover = app.add_subcommand("recover", "recover a gap function from a list of gaps");
  recover->add_option("--gaps", gaps_file, "JSON list of gaps or a construction file")->required();
  recover->add_option("--resolution", resolution, "resolution R")
      ->required()
      ->check(CLI::Range(1, cantor::kMaxResolution));
  recover->callback([&] { action = [&] { return cmd_recover(gaps_file, resolution, run); }; });

  int l = 3;
  int n = 0;
  auto* certify = app.add_subcommand("certify", "check assignment conditions and the measure sandwich");
  add_assignment_options(certify, src);
  certify->add_option("--l", l, "intersection order")->check(CLI::Range(2, 1 << 20));
  certify->add_option("--n", n, "branching (default: from the assignment)");
  certify->callback([&] { action = [&] { return cmd_certify(src, opts, l, n, run); }; });

  std::string from = "0", to;
  int steps = 64;
  auto* gauge = app.add_subcommand("gauge", "sample the synthesized gauge as CSV");
  add_assignment_options(gauge, src);
  gauge->add_option("--from", from, "grid start (p/q)");
  gauge->add_option("--to", to, "grid end (p/q, default 2 M_1)");
  gauge->add_option("--steps", steps, "grid intervals");
  gauge->callback([&] { action = [&] { return cmd_gauge(src, opts, from, to, steps, run); }; });

  std::string delta, gauge_kind = "synth";
  auto* measure = app.add_subcommand("measure", "minimum run cover sum at scale delta");
  add_assignment_options(measure, src);
  measure->add_option("--delta", delta, "cover scale (p/q, default M_K)");
  measure->add_option("--gauge", gauge_kind, "synth or linear:<slope>");
  measure->callback([&] { action = [&] { return cmd_measure(src, opts, delta, gauge_kind, run); }; });

  int truncation = 12, dk = 0, dl = 0, blocks = 3, good_depth = 16;
  auto* davies = app.add_subcommand("davies", "Davies point clouds and decompositions");
  davies->require_subcommand(1);
  auto* dbuild = davies->add_subcommand("build", "C_k at truncation N, or the assembled set C");
  dbuild->add_option("--truncation", truncation, "truncation N")->check(CLI::Range(1, 62));
  dbuild->add_option("--k", dk, "build C_k only");
  dbuild->add_option("--blocks", blocks, "blocks of C")->check(CLI::PositiveNumber);
  dbuild->callback([&] { action = [&] { return cmd_davies_build(truncation, dk, blocks, opts, run); }; });
  auto* dcheck = davies->add_subcommand("check", "check both decompositions of C_k and C_{k+l}");
  dcheck->add_option("--truncation", truncation, "truncation N")->check(CLI::Range(1, 62));
  dcheck->add_option("--k", dk, "k")->required();
  dcheck->add_option("--l", dl, "l")->required();
  dcheck->callback([&] { action = [&] { return cmd_davies_check(truncation, dk, dl, opts, run); }; });
  auto* dgood = davies->add_subcommand("good", "check the default sequence is good up to depth N");
  dgood->add_option("--depth", good_depth, "depth N")->check(CLI::Range(0, 62));
  dgood->callback([&] { action = [&] { return cmd_davies_good(good_depth, opts, run); }; });

  std::string qfile, qalpha;
  auto* qlinear = app.add_subcommand("qlinear", "linear independence over Q");
  qlinear->require_subcommand(1);
  auto* qcheck = qlinear->add_subcommand("check", "rank and translate overlap of a point list");
  qcheck->add_option("--file", qfile, "JSON matrix of rationals")->required();
  qcheck->add_option("--alpha", qalpha, "translation, comma-separated rationals");
  qcheck->callback([&] { action = [&] { return cmd_qlinear(qfile, qalpha, run); }; });

  std::string target, epsilon, family;
  auto* approx = app.add_subcommand("approx", "approximate a compact set by translates of a family member");
  approx->add_option("--target", target, "compact set JSON")->required();
  approx->add_option("--epsilon", epsilon, "tolerance (p/q)")->required();
  approx->add_option("--family", family, "hvisible or invisible")->required();
  approx->callback([&] { action = [&] { return cmd_approx(target, epsilon, family, run); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  for (const auto* sub : app.get_subcommands()) {
    run.command = sub->get_name();
    for (const auto* inner : sub->get_subcommands()) run.command += " " + inner->get_name();
  }
  if (!opts.out_dir.empty()) run.out_dir = fs::path(opts.out_dir);
  if (opts.budget) run.parameters["budget"] = opts.budget;

  auto fail = [&](int code, const std::string& status, const std::string& msg) {
    std::cerr << "error: " << msg << '\n';
    try {
      run.finish(status, msg);
    } catch (const std::exception& e) {
      std::cerr << "error: cannot write manifest: " << e.what() << '\n';
    }
    return code;
  };

  try {
    const int code = action();
    run.finish("ok");
    return code;
  } catch (const CLI::Error& e) {
    return fail(kExitUsage, "error", e.what());
  } catch (const cantor::ResolutionError& e) {
    std::string msg = e.what();
    if (e.needed_resolution > 0) msg += " (hint: rerun with --depth " + std::to_string(e.needed_resolution) + ")";
    return fail(kExitInconclusive, "inconclusive", msg);
  } catch (const cantor::Inconclusive& e) {
    return fail(kExitInconclusive, "inconclusive", e.what());
  } catch (const cantor::BudgetError& e) {
    return fail(kExitInconclusive, "budget", std::string(e.what()) + " (raise --budget or CANTOR_GAUGE_BUDGET)");
  } catch (const cantor::Error& e) {
    return fail(kExitUsage, "error", e.what());
  } catch (const json::exception& e) {
    return fail(kExitUsage, "error", std::string("malformed input: ") + e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kExitUsage, "error", e.what());
  }
}
