#include "lhv/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace lhv::csv {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

namespace {

std::string method_name(MarginalMethod m) {
  switch (m) {
    case MarginalMethod::Exact: return "exact";
    case MarginalMethod::MonteCarlo: return "monte_carlo";
    case MarginalMethod::Analytic: return "analytic";
  }
  return "?";
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

double parse_num(const std::string& cell) {
  try {
    size_t pos = 0;
    double v = std::stod(cell, &pos);
    if (pos != cell.size()) throw std::invalid_argument(cell);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("not a number in CSV: \"" + cell + "\"");
  }
}

}  // namespace

std::string marginals_csv(const MarginalSeries& series,
                          const std::string& prefix) {
  std::ostringstream out;
  const size_t n = series.probs.empty() ? 0 : series.probs[0].size();
  out << "t";
  for (size_t i = 0; i < n; ++i) out << "," << prefix << "_" << (i + 1);
  if (!series.stderrs.empty()) {
    for (size_t i = 0; i < n; ++i) out << ",stderr_" << (i + 1);
  }
  out << "\n";
  for (size_t t = 0; t < series.times.size(); ++t) {
    out << series.times[t];
    for (double p : series.probs[t]) out << "," << format_double(p);
    if (!series.stderrs.empty()) {
      for (double e : series.stderrs[t]) out << "," << format_double(e);
    }
    out << "\n";
  }
  return out.str();
}

std::string matrix_csv(const Eigen::MatrixXd& m) {
  std::ostringstream out;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (c) out << ",";
      out << format_double(m(r, c));
    }
    out << "\n";
  }
  return out.str();
}

std::string spectrum_csv(const CycleSpectrum& spectrum) {
  std::ostringstream out;
  out << "cycle_id,T_r,n,E\n";
  for (size_t r = 0; r < spectrum.cycles.size(); ++r) {
    const Cycle& c = spectrum.cycles[r];
    for (size_t n = 0; n < c.energies.size(); ++n) {
      out << r << "," << c.period << "," << n << ","
          << format_double(c.energies[n]) << "\n";
    }
  }
  return out.str();
}

std::string comparison_csv(const ComparisonReport& report,
                           const MarginalSeries& classical,
                           const MarginalSeries& quantum) {
  std::ostringstream out;
  const size_t n = classical.probs.empty() ? 0 : classical.probs[0].size();
  out << "t,tv";
  for (size_t i = 0; i < n; ++i) out << ",P_c_" << (i + 1);
  for (size_t i = 0; i < n; ++i) out << ",P_q_" << (i + 1);
  out << "\n";
  for (size_t t = 0; t < report.times.size(); ++t) {
    out << report.times[t] << "," << format_double(report.tv[t]);
    for (double p : classical.probs[t]) out << "," << format_double(p);
    for (double p : quantum.probs[t]) out << "," << format_double(p);
    out << "\n";
  }
  return out.str();
}

std::string synthesis_csv(const SynthesisReport& report) {
  std::ostringstream out;
  out << "pair,target,achieved,error,bound,n,L_i,L_j\n";
  for (const PairSynthesis& ps : report.pairs) {
    out << "(" << ps.i << ";" << ps.j << ")," << format_double(ps.target) << ","
        << format_double(ps.achieved) << "," << format_double(ps.error) << ","
        << format_double(ps.bound) << "," << ps.count << "," << ps.L_i << ","
        << ps.L_j << "\n";
  }
  return out.str();
}

std::string sweep_csv(const SweepTable& table) {
  std::ostringstream out;
  out << "lambda,L_list,max_entry_err,max_tv,method\n";
  for (const SweepRow& row : table.rows) {
    out << row.lambda << ",";
    for (size_t i = 0; i < row.periods.size(); ++i) {
      if (i) out << ";";
      out << row.periods[i];
    }
    out << "," << format_double(row.max_entry_error) << ","
        << format_double(row.max_tv) << "," << method_name(row.method) << "\n";
  }
  return out.str();
}

Eigen::MatrixXd parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<double> row;
    for (const std::string& cell : split(line, ',')) row.push_back(parse_num(cell));
    if (!rows.empty() && row.size() != rows[0].size()) {
      throw std::runtime_error("ragged CSV matrix");
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::runtime_error("empty CSV matrix");
  Eigen::MatrixXd m(rows.size(), rows[0].size());
  for (size_t r = 0; r < rows.size(); ++r) {
    for (size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

MarginalSeries parse_marginals(const std::string& text) {
  std::stringstream ss(text);
  std::string line;
  if (!std::getline(ss, line)) throw std::runtime_error("empty marginals CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = split(line, ',');
  if (header.empty() || header[0] != "t") {
    throw std::runtime_error("marginals CSV must start with a `t` column");
  }
  size_t n_prob = 0;
  size_t n_err = 0;
  for (size_t i = 1; i < header.size(); ++i) {
    if (header[i].rfind("stderr_", 0) == 0) {
      ++n_err;
    } else if (n_err == 0) {
      ++n_prob;
    } else {
      throw std::runtime_error("stderr columns must come last");
    }
  }
  MarginalSeries series;
  series.method = n_err ? MarginalMethod::MonteCarlo : MarginalMethod::Exact;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 1 + n_prob + n_err) {
      throw std::runtime_error("marginals CSV row has wrong cell count");
    }
    series.times.push_back(static_cast<long long>(parse_num(cells[0])));
    std::vector<double> probs;
    for (size_t i = 0; i < n_prob; ++i) probs.push_back(parse_num(cells[1 + i]));
    series.probs.push_back(std::move(probs));
    if (n_err) {
      std::vector<double> errs;
      for (size_t i = 0; i < n_err; ++i) {
        errs.push_back(parse_num(cells[1 + n_prob + i]));
      }
      series.stderrs.push_back(std::move(errs));
    }
  }
  return series;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace lhv::csv
