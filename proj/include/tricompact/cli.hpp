#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "tricompact/compactor.hpp"
#include "tricompact/json_io.hpp"

namespace tricompact::cli {

enum ExitCode { kOk = 0, kCertifiedInfeasible = 1, kInputError = 2, kVerificationFailure = 3 };

int exit_code_for(ErrorKind kind);

struct Options {
  std::string graph_file;
  std::string family;  // generate instead of reading --graph
  int n = 0;
  std::vector<Vertex> terminals;  // s1, t1, s2, t2
  std::vector<Vertex> protected_vertices;
  int c = 10;
  int d = 1024;
  double delta = 0;
  int n0 = 5000;
  std::uint64_t seed = 1;
  bool json = false;
  VerifyLevel verify = VerifyLevel::Debug;
  std::string certificate;  // solve writes it, verify reads it
  bool oracle_check = false;
  bool step = false;
  std::vector<int> sizes;            // bench
  std::string query = "three_connected";  // oracle
};

struct RunReport {
  std::string command;
  int vertices = 0, edges = 0;
  std::string output;
  std::vector<double> shrink;
  std::vector<CheckRecord> checks;
  double seconds = 0;
  int exit_code = kOk;
  Json payload;

  bool all_checks_passed() const { return all_passed(checks); }
};

// Each command throws Error for bad input; run() turns that into a report.
RunReport cmd_decompose(const Options& opt);
RunReport cmd_compact(const Options& opt);
RunReport cmd_solve(const Options& opt);
RunReport cmd_verify(const Options& opt);
RunReport cmd_bench(const Options& opt);
RunReport cmd_oracle(const Options& opt);

RunReport run(const std::string& command, const Options& opt);

Graph load_graph(const Options& opt);

Json to_json(const RunReport& r);
void print_human(std::ostream& out, const RunReport& r);

}  // namespace tricompact::cli
