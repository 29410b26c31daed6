#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gradreveal::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitUsage = 2,
  kExitBudgetExceeded = 3,
  kExitNotFound = 4,
  kExitVerifyFailed = 5,
};

inline constexpr std::uint64_t kDefaultCrackBudget = 1'000'000;

/// Parsed global flags. Unset optionals fall back to the run config.
struct Options {
  std::string config = "desk";
  std::optional<std::filesystem::path> out;
  std::optional<std::uint64_t> seed;
  bool entropy = false;
  std::optional<std::uint64_t> budget;
  std::size_t count = 1;
  std::optional<std::filesystem::path> bulletin;
};

int cmd_setup(const Options& options, std::ostream& out, std::ostream& err);
int cmd_reveal(const Options& options, std::ostream& out, std::ostream& err);
int cmd_crack(const Options& options, std::ostream& out, std::ostream& err);
int cmd_verify(const Options& options, std::ostream& out, std::ostream& err);
int cmd_simulate(const Options& options, std::ostream& out, std::ostream& err);

}  // namespace gradreveal::cli
