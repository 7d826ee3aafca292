#pragma once

#include <string>
#include <utility>
#include <vector>

#include "vvlab/document.hpp"
#include "vvlab/report.hpp"

namespace vvlab {

// One CLI invocation.  samples/nmax/window = 0 pick per-command defaults.
struct RunOptions {
  std::string command;
  std::string doc_path; // doc_text is used when empty
  std::string doc_text;
  uint64_t seed = 1;
  int samples = 0;
  int nmax = 0;
  int window = 0;
  std::string strategy = "both";
  std::string out_dir; // empty: nothing is written
  std::string format = "json"; // json | csv | both
  std::string ideal_filter;    // empty: every declared ideal
  int r = 1;
  int l_max = 3;
};

struct RunResult {
  int exit_code = 0;
  Json manifest;
  std::string run_dir; // set when out_dir was given
  std::vector<std::pair<std::string, Json>> reports;
  std::vector<std::pair<std::string, std::string>> csv_tables;
};

// Executes the command on every declared (or filtered) ideal, builds reports,
// and persists them under an append-only run directory named by the manifest
// digest.  Exit codes: 0 verdicts pass, 1 verdict failure, 2 input error
// (thrown as InputError), 3 instability.
RunResult run_corpus(const RunOptions& opts);

} // namespace vvlab
