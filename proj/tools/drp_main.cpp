#include <charconv>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tricompact/cli.hpp"

using namespace tricompact;

int main(int argc, char** argv) {
  CLI::App app{"3-connected compaction and two disjoint rooted paths"};
  app.fallthrough();
  app.require_subcommand(1);

  cli::Options opt;
  std::string verify = "debug";
  app.add_option("--graph", opt.graph_file, "edge list file (p n m / e u v)");
  app.add_option("--family", opt.family,
                 "generate instead: path, cycle, complete, wheel, triangulation, random3, dense, "
                 "bipartite_triangles, attachment");
  app.add_option("--n", opt.n, "vertices for --family");
  app.add_option("--terminals", opt.terminals, "s1,t1,s2,t2")->delimiter(',')->expected(4);
  app.add_option("--protect", opt.protected_vertices, "protected vertices for compaction")->delimiter(',');
  app.add_option("--c", opt.c, "connectivity kept by deletions")->capture_default_str();
  app.add_option("--d", opt.d, "degree bound for matchings")->capture_default_str();
  app.add_option("--delta", opt.delta, "shrink target per step; 0 picks the default");
  app.add_option("--n0", opt.n0, "stop compacting below this many vertices")->capture_default_str();
  app.add_option("--seed", opt.seed, "generator seed")->capture_default_str();
  app.add_flag("--json", opt.json, "print the report as JSON");
  app.add_option("--verify", verify, "off, debug or full")
      ->check(CLI::IsMember({"off", "debug", "full"}))
      ->capture_default_str();
  app.add_option("--certificate", opt.certificate, "solve: write to; verify: read from");
  app.add_flag("--oracle-check", opt.oracle_check, "cross-check against brute force where in range");

  app.add_subcommand("decompose", "block tree, strong and special 2-cut trees");
  app.add_subcommand("compact", "iterative compaction")->add_flag("--step", opt.step, "run a single compactor call");
  app.add_subcommand("solve", "two disjoint rooted paths or a planar reduction");
  app.add_subcommand("verify", "re-check a certificate, output or compaction against --graph");
  std::string sizes;
  app.add_subcommand("bench", "timing and shrink table")->add_option("--sizes", sizes, "comma separated, e.g. 1000,10000");
  app.add_subcommand("oracle", "brute-force answers")
      ->add_option("--query", opt.query, "three_connected, two_paths, three_cuts, strong_2cuts, cut_vertices");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kInputError;
  }
  opt.verify = parse_verify_level(verify);
  std::stringstream list(sizes);
  for (std::string item; std::getline(list, item, ',');) {
    if (item.empty()) continue;
    int n = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), n);
    if (ec != std::errc() || end != item.data() + item.size()) {
      std::cerr << "--sizes: not an integer: " << item << '\n';
      return cli::kInputError;
    }
    opt.sizes.push_back(n);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const cli::RunReport report = cli::run(command, opt);
  if (opt.json) std::cout << cli::to_json(report).dump(2) << '\n';
  else cli::print_human(std::cout, report);
  return report.exit_code;
}
