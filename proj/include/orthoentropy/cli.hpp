#pragma once

// Command-line front end. `run` builds the artifact in memory so tests can
// inspect it; `main_entry` adds flag parsing and output routing.
//
// CSV columns (floats rendered with 17 significant digits, '#' lines are
// metadata):
//   entropy      n,j,lambda,christoffel,S_nj,method[,S_dual]
//   closed-form  n,j,d,value
//   compare      n,j,abs_diff
//   phi-table    n,j,k,phi
//   special      x,digamma_form,series_form,difference
//   dual         n,i,S_dual
// In entropy and dual tables j and i are ascending-zero indices. For the
// Chebyshev kinds the closed-form (angular) index is n + 1 - j.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orthoentropy/families.hpp"

namespace orthoentropy::cli {

enum class Command { entropy, closed_form, compare, phi_table, special, dual };
enum class Format { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCompareFailed = 3;

/// Points start, start + step, ... up to stop (inclusive within 1e-9 step).
struct Grid {
  double start = 0.0;
  double stop = 0.5;
  double step = 0.01;

  std::vector<double> points() const;
};

/// Parses "start:stop:step"; throws std::invalid_argument.
Grid parse_grid(const std::string& text);

struct RunConfig {
  Command command = Command::entropy;
  families::FamilySpec family = families::FamilySpec::chebyshev1();
  std::vector<int> n_list;
  Format output_format = Format::csv;
  std::optional<std::string> output_path;
  double threshold = 1e-9;
  bool include_dual = false;
  int kind = 1;            // closed-form
  std::optional<int> j;    // phi-table; all j in 1..n when empty
  Grid grid;               // special
  std::ostream* log = nullptr;  // one line per finished n when set

  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;
};

struct RunResult {
  int exit_status = kExitOk;
  std::string artifact;
};

/// Throws the library's domain exceptions on invalid input.
RunResult run(const RunConfig& config);

/// Full command-line behaviour: parse, run, write to --output or `out`.
/// Returns the process exit status.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

const char* to_string(Command c);

/// Worker count for per-n parallelism: ORTHO_ENTROPY_THREADS if set and
/// positive, otherwise the hardware concurrency.
unsigned worker_count();

}  // namespace orthoentropy::cli
