#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dynmatch/script.hpp"
#include "dynmatch/workload.hpp"

namespace {

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int cmd_run(const std::string& path, bool weighted) {
  std::string input;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    input = buf.str();
  } else {
    std::ifstream f(path);
    if (!f) {
      std::cerr << "cannot open " << path << "\n";
      return 1;
    }
    std::ostringstream buf;
    buf << f.rdbuf();
    input = buf.str();
  }
  dynmatch::ScriptResult res = dynmatch::run_script(input, weighted);
  std::cout << res.output;
  return res.failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dynamic forest maximum matching: script driver and benchmarks"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "execute a command script (file or - for stdin)");
  std::string run_path;
  bool run_weighted = false;
  run->add_option("file", run_path, "script path or -")->required();
  run->add_flag("--weighted", run_weighted, "maintain weighted matchings");

  auto* fuzz = app.add_subcommand("fuzz", "random link/cut stream with periodic audits");
  dynmatch::workload::FuzzOptions fo;
  fuzz->add_option("--n", fo.n, "vertex universe size");
  fuzz->add_option("--ops", fo.ops, "number of mutations");
  fuzz->add_option("--seed", fo.seed, "rng seed");
  fuzz->add_flag("--weighted", fo.weighted, "weighted mode with random weights");
  fuzz->add_option("--audit-every", fo.audit_every, "oracle audit cadence (0 disables)");

  auto* bench = app.add_subcommand("bench", "timing and scaling measurements, CSV output");
  std::string kinds_arg = "path,star,random";
  std::string sizes_arg = "1024,2048,4096,8192,16384,32768,65536";
  std::uint64_t bench_seed = 1;
  std::string out_path = "-";
  bench->add_option("--kinds", kinds_arg, "comma-separated tree kinds");
  bench->add_option("--sizes", sizes_arg, "comma-separated structure sizes");
  bench->add_option("--seed", bench_seed, "rng seed");
  bench->add_option("--out", out_path, "output csv path or -");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(run_path, run_weighted);

    if (fuzz->parsed()) {
      dynmatch::workload::FuzzReport rep = dynmatch::workload::fuzz_run(fo);
      std::cout << "ops " << rep.ops_done << " audits " << rep.audits << " rebuild-audits "
                << rep.rebuild_audits << " max-touched " << rep.max_touched << "\n";
      if (!rep.ok()) {
        std::cout << "failure " << rep.failure << "\n";
        return 1;
      }
      return 0;
    }

    if (bench->parsed()) {
      std::vector<dynmatch::workload::Kind> kinds;
      for (const std::string& k : split_csv(kinds_arg))
        kinds.push_back(dynmatch::workload::kind_from_name(k));
      std::vector<std::uint32_t> sizes;
      for (const std::string& s : split_csv(sizes_arg))
        if (!s.empty()) sizes.push_back(static_cast<std::uint32_t>(std::stoul(s)));
      auto records = dynmatch::workload::bench(kinds, sizes, bench_seed);
      std::string csv = dynmatch::workload::bench_csv(records);
      if (out_path == "-") {
        std::cout << csv;
      } else {
        std::ofstream f(out_path);
        f << csv;
      }
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
