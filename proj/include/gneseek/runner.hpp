#pragma once

#include <string>

#include "gneseek/config.hpp"

namespace gneseek {

struct ExperimentOptions {
  std::string out_dir = "out";
  double gne_tol = 1e-8;
  bool hard_diagnostics = false;  // implies diagnostics on
};

/// Execute one experiment: build components from the config, precompute the
/// per-round equilibrium path, run the decentralized loop streaming metrics
/// and diagnostics, and write to out_dir:
///   trace.csv    per-round rows (see column list in the implementation),
///                floating values with 17 significant digits,
///   summary.txt  final metrics, fitted exponent, margin minima, solver vs
///                closed-form discrepancy for the Cournot game,
///   <config>     the input config file copied verbatim.
/// Returns 0. Failures propagate as typed errors; the CLI maps their
/// categories to exit codes.
int run_experiment(const RunConfig& config, const ExperimentOptions& options);

}  // namespace gneseek
