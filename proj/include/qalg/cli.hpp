#ifndef QALG_CLI_HPP
#define QALG_CLI_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

namespace qalg {

struct RunConfig {
  std::string subcommand;  // check, build-indec, ray-cat, crowns, contours, cleave, quotient
  std::string input;
  std::optional<std::size_t> dim;
  std::optional<std::pair<std::size_t, std::size_t>> dims;
  std::optional<std::size_t> max_dim;  // explicit --max-dim
  std::string format = "text";         // text | json
  bool emit_json = false;
  bool minimal = false;
  std::size_t max_n = 6;
  std::string functor;
  std::string morphism;
  unsigned threads = 0;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// --max-dim, else QALG_MAX_DIM, else the library default.
std::size_t effective_max_dim(const RunConfig& config);

/// Parses "a..b".
std::optional<std::pair<std::size_t, std::size_t>> parse_range(const std::string& text);

int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Argument parsing plus run(); usage errors exit with 2.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qalg

#endif  // QALG_CLI_HPP
