// Ring-spec ingestion, the per-ring pipeline, the corpus runner and report output.

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gorentest/algebra.hpp"

namespace gorentest::cli {

using nlohmann::ordered_json;

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// `key = value` lines; list values are JSON arrays; `#` starts a comment line.
struct RingSpec {
  std::string id;
  std::uint64_t p = 0;
  std::vector<std::string> vars;
  std::vector<std::string> relations;
  std::optional<std::size_t> dim;           // structure-constant input
  std::vector<std::int64_t> constants;      // (i*d + j)*d + k
  std::vector<std::string> labels;
  std::optional<std::size_t> depth;
  std::optional<int> guard;
};

RingSpec parse_ring_spec(const std::string& text);
RingSpec read_ring_spec(const std::filesystem::path& path);
/// Throws SpecError, ParseError, PresentationError or AlgebraError.
AlgebraPtr build_algebra(const RingSpec& spec);

inline const std::vector<std::string>& all_detectors() {
  static const std::vector<std::string> names{"K_tensor", "K_hom", "M", "K_hom_e"};
  return names;
}

struct RunOptions {
  std::size_t depth = 5;
  int guard = 1;
  std::vector<std::string> detectors = all_detectors();
  std::size_t budget = 200000;
  bool timings = true;
  bool comparison_iso = false;  // full comparison map (slow at large depth)
  // Explicit flags win over overrides in the spec file.
  bool depth_from_flag = false;
  bool guard_from_flag = false;
};

enum ExitCode : int {
  kOk = 0,
  kInconsistent = 2,
  kAllInconclusive = 3,
  kInputError = 4,
  kResourceCap = 5,
};

struct RunResult {
  ordered_json report;
  int exit_code;
};

RunResult run_ring_spec(const RingSpec& spec, const RunOptions& opts);
/// Reads and parses `path`; input problems become exit code 4.
RunResult run_ring(const std::filesystem::path& path, const RunOptions& opts);

struct CorpusResult {
  std::vector<RunResult> runs;  // ordered by ring id
  int exit_code;
};

/// Runs every `*.ring` file in `dir`.
CorpusResult run_corpus(const std::filesystem::path& dir, const RunOptions& opts);

enum class Format { json, csv };

std::string emit(const ordered_json& report, Format f);
/// Header plus one row per trusted degree of one detector's evidence.
std::string emit_evidence_csv(const ordered_json& report, const std::string& detector);
std::string emit_corpus(const CorpusResult& corpus, Format f);

}  // namespace gorentest::cli
