#include "pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "gorentest/detector.hpp"
#include "gorentest/dualizing.hpp"

namespace gorentest::cli {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

template <class T>
T to_int(const std::string& key, const std::string& v) {
  T out{};
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw SpecError("key '" + key + "': expected an integer, got '" + v + "'");
  return out;
}

std::string scalar(const std::string& v) {
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  return v;
}

ordered_json parse_list(const std::string& key, const std::string& v) {
  ordered_json j;
  try {
    j = ordered_json::parse(v);
  } catch (const nlohmann::json::parse_error&) {
    throw SpecError("key '" + key + "': malformed list " + v);
  }
  if (!j.is_array()) throw SpecError("key '" + key + "': expected a list");
  return j;
}

std::vector<std::string> string_list(const std::string& key, const std::string& v) {
  std::vector<std::string> out;
  for (const auto& x : parse_list(key, v)) {
    if (!x.is_string()) throw SpecError("key '" + key + "': list entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

ordered_json evidence_json(const std::vector<Evidence>& ev) {
  ordered_json a = ordered_json::array();
  for (const auto& e : ev) a.push_back({e.degree, e.dim});
  return a;
}

ordered_json detector_json(const DetectorResult& r, bool timings) {
  ordered_json j;
  j["name"] = r.name;
  j["verdict"] = to_string(r.verdict);
  j["witness"] = r.witness ? ordered_json{{"degree", r.witness->degree}, {"dim", r.witness->dim}}
                           : ordered_json(nullptr);
  j["stable"] = r.stable;
  j["persistent"] = r.persistent;
  j["depth"] = r.depth;
  j["millis"] = timings ? std::round(r.millis * 1000) / 1000 : 0.0;
  j["evidence"] = evidence_json(r.evidence);
  j["evidence_prev"] = evidence_json(r.evidence_prev);
  return j;
}

ordered_json skipped_json(const std::string& name, std::size_t depth) {
  return {{"name", name},      {"verdict", "skipped"},       {"witness", nullptr},
          {"stable", false},   {"persistent", false},        {"depth", depth},
          {"millis", 0.0},     {"evidence", ordered_json::array()},
          {"evidence_prev", ordered_json::array()}};
}

ordered_json base_report(const std::string& id, const RunOptions& o) {
  ordered_json rep;
  rep["schema"] = "gorentest-report/1";
  rep["ring_id"] = id;
  rep["settings"] = {{"depth", o.depth},
                     {"guard", o.guard},
                     {"budget", o.budget},
                     {"detectors", o.detectors}};
  return rep;
}

RunResult input_error(ordered_json report, const std::string& message) {
  report["error"] = {{"kind", "input"}, {"message", message}};
  report["exit_code"] = kInputError;
  return {std::move(report), kInputError};
}

}  // namespace

// ---------------------------------------------------------------- spec files

RingSpec parse_ring_spec(const std::string& text) {
  RingSpec spec;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw SpecError("line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (!seen.insert(key).second) throw SpecError("duplicate key '" + key + "'");
    if (key == "id") spec.id = scalar(value);
    else if (key == "p") spec.p = to_int<std::uint64_t>(key, value);
    else if (key == "vars") spec.vars = string_list(key, value);
    else if (key == "relations") spec.relations = string_list(key, value);
    else if (key == "labels") spec.labels = string_list(key, value);
    else if (key == "dim") spec.dim = to_int<std::size_t>(key, value);
    else if (key == "depth") spec.depth = to_int<std::size_t>(key, value);
    else if (key == "guard") spec.guard = to_int<int>(key, value);
    else if (key == "constants") {
      for (const auto& x : parse_list(key, value)) {
        if (!x.is_number_integer()) throw SpecError("key 'constants': entries must be integers");
        spec.constants.push_back(x.get<std::int64_t>());
      }
    } else {
      throw SpecError("unknown key '" + key + "'");
    }
  }
  if (spec.id.empty()) throw SpecError("missing key 'id'");
  if (!seen.count("p")) throw SpecError("missing key 'p'");
  const bool rel = seen.count("relations"), con = seen.count("constants");
  if (rel == con) throw SpecError("exactly one of 'relations' and 'constants' is required");
  if (rel && spec.vars.empty()) throw SpecError("'relations' needs a nonempty 'vars' list");
  if (con && !spec.dim) throw SpecError("'constants' needs 'dim'");
  return spec;
}

RingSpec read_ring_spec(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw SpecError("cannot read " + path.string());
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_ring_spec(ss.str());
}

AlgebraPtr build_algebra(const RingSpec& spec) {
  const PrimeField field(spec.p);
  if (!spec.relations.empty()) {
    RingPresentation pres{field, spec.vars, {}};
    for (const auto& r : spec.relations) pres.relations.push_back(parse_poly(r, spec.vars, field));
    pres.validate();
    return FinLocalAlgebra::from_presentation(pres);
  }
  const std::size_t d = *spec.dim;
  std::vector<Elem> c;
  for (auto v : spec.constants) c.push_back(field.reduce(v));
  return std::make_shared<const FinLocalAlgebra>(field, d, std::move(c), spec.labels);
}

// ---------------------------------------------------------------- pipeline

RunResult run_ring_spec(const RingSpec& spec, const RunOptions& opts) {
  const auto t_start = std::chrono::steady_clock::now();
  RunOptions o = opts;
  if (spec.depth && !opts.depth_from_flag) o.depth = *spec.depth;
  if (spec.guard && !opts.guard_from_flag) o.guard = *spec.guard;

  ordered_json rep = base_report(spec.id, o);
  for (const auto& d : o.detectors)
    if (std::find(all_detectors().begin(), all_detectors().end(), d) == all_detectors().end())
      return input_error(std::move(rep), "unknown detector '" + d + "'");
  if (o.depth < 2) return input_error(std::move(rep), "depth must be at least 2");
  if (o.guard < 0) return input_error(std::move(rep), "guard must be nonnegative");

  AlgebraPtr r;
  try {
    r = build_algebra(spec);
  } catch (const std::exception& e) {
    return input_error(std::move(rep), e.what());
  }

  const bool oracle = gorenstein_socle_oracle(*r);
  rep["algebra"] = {{"p", r->field().characteristic()},
                    {"dim", r->dim()},
                    {"embedding_dim", r->embedding_dimension()},
                    {"socle_dim", socle(*r).cols()},
                    {"basis", r->labels()}};
  rep["oracle"] = {{"gorenstein", oracle}};

  std::vector<std::string> problems;
  int exit_code = kOk;

  try {
    const DualizingReport dual = check_dualizing_axioms(matlis_dual(r), o.depth);
    rep["dualizing"] = {{"ok", dual.ok()},
                        {"homothety_bijective", dual.homothety_bijective},
                        {"hom_k_e_dim", dual.socle_dim},
                        {"ext_k", dual.ext_k},
                        {"violations", dual.violations}};
    for (const auto& v : dual.violations) problems.push_back("dualizing: " + v);

    const Screen screen = betti_gorenstein_screen(r, o.depth, o.budget);
    rep["algebra"]["type"] = screen.resolution.betti.front();
    rep["screen"] = {{"verdict", to_string(screen.verdict)},
                     {"terminated", screen.resolution.terminated},
                     {"betti", screen.resolution.betti}};
    const bool screen_ok = screen.verdict == ScreenVerdict::gorenstein
                               ? oracle
                               : (screen.verdict == ScreenVerdict::non_gorenstein_unconfirmed
                                      ? !oracle
                                      : true);
    if (!screen_ok) problems.push_back("screen verdict contradicts the socle oracle");

    std::optional<Bundle> now, prev;
    std::string skipped;
    try {
      now.emplace(build_bundle(r, o.depth, o.guard, o.budget));
      if (!now->resolution.terminated) prev.emplace(build_bundle(r, o.depth - 1, o.guard, o.budget));
    } catch (const ResourceError& e) {
      now.reset();
      prev.reset();
      skipped = e.what();
    }

    std::vector<DetectorResult> results;
    ordered_json dets = ordered_json::array();
    ordered_json checks = ordered_json::object();
    if (now) {
      const Bundle* pb = prev ? &*prev : nullptr;
      for (const auto& name : o.detectors) {
        DetectorResult res = name == "K_tensor" ? detect_K_tensor(*now, pb)
                             : name == "K_hom"  ? detect_K_hom(*now, pb)
                             : name == "M"      ? detect_M(*now, pb)
                                                : detect_K_hom_e(*now, pb);
        dets.push_back(detector_json(res, o.timings));
        results.push_back(std::move(res));
      }
      const ComparisonReport rd = o.comparison_iso ? check_comparison_iso(*now) : check_comparison_dims(*now);
      checks["comparison_dims"] = rd.dims_match;
      if (o.comparison_iso) checks["comparison_iso"] = rd.isomorphism;
      if (!rd.dims_match || (o.comparison_iso && !rd.isomorphism))
        problems.push_back("comparison map check failed");

      const CompleteFlatReport cf = check_complete_flat(*now);
      checks["complete_flat"] = {{"screen_gorenstein", cf.screen_gorenstein},
                                 {"k_tensor_acyclic", cf.k_tensor_acyclic},
                                 {"complete_flat", cf.complete_flat},
                                 {"c_tensor_acyclic", cf.c_tensor_acyclic},
                                 {"equivalence_holds", cf.equivalence_holds}};
      if (!cf.equivalence_holds || !cf.c_tensor_acyclic)
        problems.push_back("complete flat resolution equivalence failed");

      bool duality = true;
      for (const auto& e : k_hom_dims(*now))
        duality = duality && homology_dim(now->k_tensor_e(), -e.degree) == e.dim;
      checks["duality_identity"] = duality;
      if (!duality) problems.push_back("dim H_i Hom(K, R) != dim H_-i (K (x) E)");
    } else {
      for (const auto& name : o.detectors) dets.push_back(skipped_json(name, o.depth));
    }
    rep["bundle"] = {{"built", now.has_value()},
                     {"skipped_reason", now ? ordered_json(nullptr) : ordered_json(skipped)}};
    rep["checks"] = checks;
    rep["detectors"] = dets;

    const Aggregate agg = aggregate(results, oracle);
    std::vector<std::string> warnings = agg.warnings;
    warnings.insert(warnings.end(), problems.begin(), problems.end());
    const bool consistent = agg.consistent && problems.empty();
    rep["aggregate"] = {{"consistent", consistent},
                        {"all_inconclusive", agg.all_inconclusive},
                        {"warnings", warnings}};
    if (!consistent) exit_code = kInconsistent;
    else if (agg.all_inconclusive) exit_code = kAllInconclusive;
    rep["error"] = nullptr;
  } catch (const ResourceError& e) {
    rep["error"] = {{"kind", "resource"}, {"message", e.what()}};
    exit_code = kResourceCap;
  } catch (const std::logic_error& e) {
    rep["error"] = {{"kind", "internal"}, {"message", e.what()}};
    exit_code = kInconsistent;
  }
  rep["millis"] = o.timings ? std::round(elapsed_ms(t_start)) : 0.0;
  rep["exit_code"] = exit_code;
  return {std::move(rep), exit_code};
}

RunResult run_ring(const std::filesystem::path& path, const RunOptions& opts) {
  RingSpec spec;
  try {
    spec = read_ring_spec(path);
  } catch (const SpecError& e) {
    return input_error(base_report(path.stem().string(), opts), e.what());
  }
  return run_ring_spec(spec, opts);
}

CorpusResult run_corpus(const std::filesystem::path& dir, const RunOptions& opts) {
  if (!std::filesystem::is_directory(dir)) throw SpecError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".ring") files.push_back(entry.path());
  CorpusResult out{{}, kOk};
  for (const auto& f : files) out.runs.push_back(run_ring(f, opts));
  std::stable_sort(out.runs.begin(), out.runs.end(), [](const RunResult& a, const RunResult& b) {
    return a.report["ring_id"].get<std::string>() < b.report["ring_id"].get<std::string>();
  });
  for (const auto& r : out.runs) out.exit_code = std::max(out.exit_code, r.exit_code);
  return out;
}

// ---------------------------------------------------------------- output

namespace {

const char* kCsvHeader = "ring_id,detector,verdict,witness_degree,witness_dim,depth,stable,millis\n";

std::string csv_rows(const ordered_json& rep) {
  std::ostringstream out;
  const std::string id = rep["ring_id"].get<std::string>();
  if (!rep.contains("detectors")) {
    const std::string kind = rep["error"].is_object() ? rep["error"]["kind"].get<std::string>() : "error";
    out << id << ",-," << kind << "_error,,,,,\n";
    return out.str();
  }
  for (const auto& d : rep["detectors"]) {
    out << id << ',' << d["name"].get<std::string>() << ',' << d["verdict"].get<std::string>() << ',';
    if (d["witness"].is_object())
      out << d["witness"]["degree"].get<int>() << ',' << d["witness"]["dim"].get<std::size_t>();
    else
      out << ',';
    out << ',' << d["depth"].get<std::size_t>() << ',' << (d["stable"].get<bool>() ? "true" : "false")
        << ',' << d["millis"].dump() << '\n';
  }
  return out.str();
}

}  // namespace

std::string emit(const ordered_json& report, Format f) {
  if (f == Format::json) return report.dump(2) + "\n";
  return kCsvHeader + csv_rows(report);
}

std::string emit_evidence_csv(const ordered_json& report, const std::string& detector) {
  std::ostringstream out;
  out << "degree,dim\n";
  if (!report.contains("detectors")) return out.str();
  for (const auto& d : report["detectors"])
    if (d["name"] == detector)
      for (const auto& e : d["evidence"]) out << e[0].get<int>() << ',' << e[1].get<std::size_t>() << '\n';
  return out.str();
}

std::string emit_corpus(const CorpusResult& corpus, Format f) {
  if (f == Format::csv) {
    std::string s = kCsvHeader;
    for (const auto& r : corpus.runs) s += csv_rows(r.report);
    return s;
  }
  ordered_json j;
  j["schema"] = "gorentest-corpus/1";
  j["rings"] = ordered_json::array();
  for (const auto& r : corpus.runs) {
    const ordered_json& rep = r.report;
    ordered_json row;
    row["ring_id"] = rep["ring_id"];
    row["exit_code"] = r.exit_code;
    row["oracle_gorenstein"] = rep.contains("oracle") ? rep["oracle"]["gorenstein"] : ordered_json(nullptr);
    row["screen"] = rep.contains("screen") ? rep["screen"]["verdict"] : ordered_json(nullptr);
    row["consistent"] = rep.contains("aggregate") ? rep["aggregate"]["consistent"] : ordered_json(false);
    ordered_json verdicts = ordered_json::object();
    if (rep.contains("detectors"))
      for (const auto& d : rep["detectors"]) verdicts[d["name"].get<std::string>()] = d["verdict"];
    row["verdicts"] = verdicts;
    row["error"] = rep.contains("error") ? rep["error"] : ordered_json(nullptr);
    j["rings"].push_back(row);
  }
  j["exit_code"] = corpus.exit_code;
  j["pass"] = corpus.exit_code == kOk;
  return j.dump(2) + "\n";
}

}  // namespace gorentest::cli
