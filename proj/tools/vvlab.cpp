#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "vvlab/errors.hpp"
#include "vvlab/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact blow-up algebra experiments over F_p"};
  app.require_subcommand(1);

  vvlab::RunOptions opts;
  opts.out_dir = "runs";

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gb", "reduced Groebner bases and colengths of the declared ideals"},
      {"depth-g", "depth of the associated graded ring (two oracles)"},
      {"vv", "graded pieces of the Valabrega-Valla module for a sampled sequence"},
      {"ann", "annihilator of the Valabrega-Valla module with m-primary verdict"},
      {"ar", "Monte-Carlo upper estimate of a_r(I)"},
      {"q", "local cohomology annihilator contractions q_i(I) (experimental)"},
      {"powers", "powers scan: a_r(I^l), Veronese verdicts, running intersection"},
      {"verify-all", "full property battery over the document"}};

  std::string doc_path;
  for (const auto& [name, desc] : commands) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->add_option("document", doc_path, "input document (JSON)")->required();
    sub->add_option("--seed", opts.seed, "64-bit seed (default 1)");
    sub->add_option("--samples", opts.samples, "sample budget (0 = command default)");
    sub->add_option("--nmax", opts.nmax, "degree scan bound (0 = default)");
    sub->add_option("--window", opts.window, "stability window (0 = default)");
    sub->add_option("--strategy", opts.strategy, "depth strategy: vv|resolution|both");
    sub->add_option("--out", opts.out_dir, "run directory root (default runs)");
    sub->add_option("--format", opts.format, "report format: json|csv|both");
    sub->add_option("--ideal", opts.ideal_filter, "restrict to one declared ideal");
    sub->add_option("--r", opts.r, "superficial sequence length (default 1)");
    sub->add_option("--lmax", opts.l_max, "top power for the powers scan");
  }

  CLI11_PARSE(app, argc, argv);
  opts.command = app.get_subcommands().front()->get_name();
  opts.doc_path = doc_path;

  try {
    vvlab::RunResult res = vvlab::run_corpus(opts);
    if (!res.run_dir.empty())
      std::cout << "run directory: " << res.run_dir << "\n";
    for (const auto& step : res.manifest["steps"])
      std::cout << opts.command << " " << step["ideal"].get<std::string>()
                << ": " << step["status"].get<std::string>() << "\n";
    return res.exit_code;
  } catch (const vvlab::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const vvlab::UnstableError& e) {
    std::cerr << "unstable: " << e.what() << "\n";
    return 3;
  } catch (const vvlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
