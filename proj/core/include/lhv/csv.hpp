#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "lhv/analysis.hpp"
#include "lhv/ensemble.hpp"
#include "lhv/quantum.hpp"
#include "lhv/synthesis.hpp"

namespace lhv::csv {

/// Shortest decimal representation that round-trips the double; plain
/// notation is deterministic across runs (criterion for byte-identical
/// reruns).
std::string format_double(double v);

std::string marginals_csv(const MarginalSeries& series, const std::string& prefix);
std::string matrix_csv(const Eigen::MatrixXd& m);
std::string spectrum_csv(const CycleSpectrum& spectrum);
std::string comparison_csv(const ComparisonReport& report,
                           const MarginalSeries& classical,
                           const MarginalSeries& quantum);
std::string synthesis_csv(const SynthesisReport& report);
std::string sweep_csv(const SweepTable& table);

/// Parses a headerless numeric CSV into a dense matrix.
Eigen::MatrixXd parse_matrix(const std::string& text);

/// Reads a marginal-series CSV written by marginals_csv (header row
/// `t,<prefix>_1..N[,stderr_1..N]`).
MarginalSeries parse_marginals(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lhv::csv
