#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pipeline.hpp"

using namespace gorentest::cli;

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gorenstein detection for finite local algebras over prime fields"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string detectors;
  std::string format = "json";
  bool no_timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--depth", opts.depth, "resolution window N (>= 2)");
    sub->add_option("--guard", opts.guard, "degrees dropped at each window edge");
    sub->add_option("--detectors", detectors, "comma list of K_tensor,K_hom,M,K_hom_e");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--budget", opts.budget, "size cap for resolutions and complexes");
    sub->add_flag("--no-timings", no_timings, "report zero timings (byte-stable output)");
  };

  std::string spec_path;
  std::string table;
  auto* run = app.add_subcommand("run", "run one ring spec");
  run->add_option("spec", spec_path, "ring spec file")->required();
  run->add_flag("--comparison", opts.comparison_iso, "build the full comparison isomorphism");
  run->add_option("--table", table, "print the evidence table of one detector as CSV");
  add_common(run);

  std::string corpus_dir;
  auto* corpus = app.add_subcommand("corpus", "run every *.ring file in a directory");
  corpus->add_option("dir", corpus_dir, "corpus directory")->required();
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  auto* active = run->parsed() ? run : corpus;
  opts.depth_from_flag = active->count("--depth") > 0;
  opts.guard_from_flag = active->count("--guard") > 0;
  opts.timings = !no_timings;
  if (!detectors.empty()) opts.detectors = split_list(detectors);
  const Format fmt = format == "csv" ? Format::csv : Format::json;

  try {
    if (run->parsed()) {
      const RunResult r = run_ring(spec_path, opts);
      if (!table.empty()) std::cout << emit_evidence_csv(r.report, table);
      else std::cout << emit(r.report, fmt);
      if (r.report.contains("error") && r.report["error"].is_object())
        std::cerr << "error: " << r.report["error"]["message"].get<std::string>() << '\n';
      return r.exit_code;
    }
    const CorpusResult c = run_corpus(corpus_dir, opts);
    std::cout << emit_corpus(c, fmt);
    return c.exit_code;
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInconsistent;
  }
}
