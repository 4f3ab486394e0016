#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dwho/dynamics.hpp"
#include "dwho/hamiltonian.hpp"

namespace dwho::cli {

enum class OutputFormat { csv, json };

/// Fully resolved run: flag > config-file key > default.
struct RunConfig {
  std::string command;
  ModelParameters model;
  PacketKind packet = PacketKind::two_term;
  double threshold = 0.99;
  int grid = 121;      ///< density snapshot points per axis
  int frames = 6;      ///< snapshots over the first half period
  int samples = 256;   ///< series points over one period
  int n_max = 10;      ///< sweep-n upper end
  double c_max = 2.0;  ///< sweep-c upper end
  int c_steps = 41;
  std::string out;     ///< empty picks "<command>.<format>"
  OutputFormat format = OutputFormat::csv;
  int jobs = 0;        ///< 0 picks the available parallelism

  std::string output_path() const;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;

/// Either a config, or an exit status plus the text to show (usage or the
/// error naming the offending flag or key).
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
  std::string message;
};

/// Arguments exclude the program name.
ParseOutcome parse_config(const std::vector<std::string>& args);

/// Runs the command, writes its artifacts and prints one summary line to
/// `out`. Computation errors go to `err` and return kExitComputation.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_config + run, for main().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dwho::cli
