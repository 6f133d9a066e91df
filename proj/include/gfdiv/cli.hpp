#pragma once

#include <iosfwd>

#include "gfdiv/exponent.hpp"
#include "gfdiv/subadd.hpp"

namespace gfdiv {

// One fully-resolved invocation. Identical configs produce byte-identical
// outputs: fixed seeds, fixed summation order, deterministic tie-breaks.
struct RunConfig {
  std::string command;  // div | info | subadd | check | bounds | exponent | tables

  // generator / transform / shape selection ("name" or "name:value" or JSON)
  std::string f_spec;
  std::string g_spec = "x";
  std::string shape_spec;

  std::string channel_spec;          // bsc:d | bec:e | identity:n | JSON
  std::vector<double> p, q;          // distributions for div/info/bounds
  std::vector<double> qY, rY, qZ, rZ;  // four-distribution commands
  std::vector<double> eps_grid;      // equivalence probe / bounds tables
  std::vector<long long> m_grid;     // bounds tables
  std::vector<double> rates;         // exponent

  std::string check_kind = "T";      // T | Tplus | Tminus | invg | roots
  std::string bound_kind = "fano";   // fano | blocklength | ht | klcmp
  std::string direction = "plus";    // klcmp direction
  long long m = 2;
  double eps = 0.0;
  int n = 1;
  double alpha = 0.0, beta = 0.0;
  double s = 2.0, c = 1.0;
  double lambda = 1.0, lin_a = 0.0, lin_b = 0.0;  // root counting
  int which_table = 1;
  bool maximize = false;             // info: maximize over inputs
  bool bits = false;                 // exponent: rates and values in bits
  int grid_res = 25;
  long long samples = 100000;

  SolverOpts solver;
  uint64_t seed = 0xC0FFEE;
  bool strict = false;
  std::string output_path;           // empty -> stream only
  std::string format = "pretty";     // json | csv | pretty
};

// Executes the command, writing the report to `out` (and to
// config.output_path when set). Returns 0 on success, 1 on usage/domain
// errors (after printing a one-line machine-parsable record to `err`),
// 2 when --strict is set and a scientific verdict FAILs.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Merges settings from a JSON config file; explicit flags are applied on top
// by the caller.
RunConfig config_from_json_file(const std::string& path);

}  // namespace gfdiv
