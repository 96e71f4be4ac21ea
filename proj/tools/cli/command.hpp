#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace litf::cli {

enum class Verb {
  Synthesize,
  CheckIsotone,
  CheckClassical,
  BetaCuts,
  Representable,
  Cuts,
  Canonical,
  Quotient,
};

enum class Format { Text, Json, Dot };

std::optional<Verb> verb_from_string(std::string_view name);
std::string_view to_string(Verb verb);
std::optional<Format> format_from_string(std::string_view name);

struct Command {
  Verb verb = Verb::Synthesize;
  std::optional<std::string> table;
  std::optional<std::string> expr;
  /// Path to an input file; "-" reads standard input.
  std::optional<std::string> file;
  std::optional<int> n;
  Format format = Format::Text;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Dispatches `cmd`, writing results to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 when the answer is negative (not isotone, not
/// representable, ...), and 2 on invalid input.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

}  // namespace litf::cli
