#pragma once

// Command-line front end: expand, relations, verify, eval, selftest.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "assoclab/relations.hpp"
#include "assoclab/symring.hpp"

namespace assoclab {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Command { Expand, Relations, Verify, Eval, Selftest };
enum class Side { Mzv, Delta, Both };
enum class Format { Json, Latex, Text };

struct RunConfig {
  Command command = Command::Relations;
  int order = 5;
  Side side = Side::Both;
  int digits = 40;
  AuxSelection aux;
  Format format = Format::Json;
  std::string output;  // empty: standard output

  // relations
  bool reduce = false;
  bool primary_only = false;

  // verify
  std::string report;  // optional JSON report path

  // eval (exactly one target), also `verify --expr`
  std::optional<Composition> zeta;
  std::optional<Composition> delta;
  std::optional<std::string> expr;
  std::optional<int> alt_ones;
  bool log2 = false;
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_usage = 2;

/// ASSOCLAB_MAX_ORDER if set to a valid integer, else 6.
int max_order();

/// "shuffle,duality,known", "all" or "none".
AuxSelection parse_aux(const std::string& text);

/// Executes a validated configuration. Usage problems go to `err` with exit 2.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace assoclab
