#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nonstatic/params.hpp"

namespace nonstatic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitAccuracy = 4;

/// Failure carrying its exit code and a machine-readable description.
class CliError : public std::runtime_error {
 public:
  CliError(int exit_code, std::string kind, std::string flag, const std::string& message)
      : std::runtime_error(message),
        exit_code_(exit_code),
        kind_(std::move(kind)),
        flag_(std::move(flag)) {}

  int exit_code() const noexcept { return exit_code_; }
  const std::string& kind() const noexcept { return kind_; }
  const std::string& flag() const noexcept { return flag_; }
  nlohmann::ordered_json to_json() const;

 private:
  int exit_code_;
  std::string kind_;
  std::string flag_;
};

enum class Format { kCsv, kJson };

const std::vector<std::string>& subjects();

/// A fully resolved run: every default has been filled in, so writing this
/// back out and parsing it again yields the same scenario.
struct Scenario {
  std::string subject;
  ModelParams params;
  double a0 = 1.0;
  double theta = 0.0;
  double t_from = 0.0;
  double t_to = 2 * kPi;
  std::size_t nt = 101;
  double q_min = -12.0, q_max = 12.0;
  std::size_t nq = 1601;
  double p_min = -12.0, p_max = 12.0;
  std::size_t np = 1601;
  int fock_n = 5;
  std::string out;  // empty: data to standard output, no manifest
  Format format = Format::kCsv;
  double tol_scale = 1.0;
  unsigned threads = 1;

  /// Keys match the long flag names without the leading dashes.
  nlohmann::ordered_json to_json() const;
};

/// Parses `nonstatic <subject> [flags]`. Values come from built-in
/// defaults, then the --config file (a scenario object or a manifest), then
/// explicit flags. Returns false when --help or --version was handled and
/// printed to `info`.
bool parse_scenario(const std::vector<std::string>& args, Scenario& out, std::string& info);

/// Fills subject-dependent defaults from a key/value object and checks
/// every constraint. Throws CliError with exit code 2.
Scenario resolve_scenario(const nlohmann::json& values);

}  // namespace nonstatic::cli
