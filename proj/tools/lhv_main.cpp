// lhv: classical-automaton simulator and Hamiltonian synthesis toolkit.
//
// Exit codes: 0 success, 1 validation failure, 2 runtime error.
// All CSV output uses `,` separators, `.` decimals, LF line endings and a
// header row; reruns with identical flags are byte-identical.

#include <filesystem>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lhv/analysis.hpp"
#include "lhv/automaton.hpp"
#include "lhv/csv.hpp"
#include "lhv/ensemble.hpp"
#include "lhv/model.hpp"
#include "lhv/quantum.hpp"
#include "lhv/svg.hpp"
#include "lhv/synthesis.hpp"

namespace fs = std::filesystem;
using namespace lhv;

namespace {

constexpr uint64_t kDefaultSeed = 12345;

struct Options {
  std::string spec_path;
  std::string target_path;
  std::string perm_path;
  std::string classical_path;
  std::string quantum_path;
  std::string out_dir = ".";
  std::string p0_text;
  long long t_max = 100;
  long long samples = 10000;
  uint64_t seed = kDefaultSeed;
  std::vector<long long> lambdas;
  long long budget = kDefaultBudget;
  bool exact = false;
  bool monte_carlo = false;
  bool plots = false;
  int threads = 1;
};

std::vector<double> parse_p0(const std::string& text, int n) {
  if (text.empty()) {
    std::vector<double> p0(n, 0.0);
    p0[0] = 1.0;
    return p0;
  }
  std::vector<double> p0;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) p0.push_back(std::stod(cell));
  if (static_cast<int>(p0.size()) != n) {
    throw std::runtime_error("--p0 needs " + std::to_string(n) + " entries");
  }
  return p0;
}

void write_out(const Options& opt, const std::string& name,
               const std::string& content) {
  fs::create_directories(opt.out_dir);
  const std::string path = (fs::path(opt.out_dir) / name).string();
  csv::write_file(path, content);
  std::cout << "wrote " << path << "\n";
}

void print_report(const ValidationReport& report) {
  for (const Issue& issue : report.issues) {
    std::cout << (issue.severity == Severity::Error ? "error" : "warning")
              << " " << issue.code << ": " << issue.message << "\n";
  }
  std::cout << (report.ok ? "ok" : "invalid") << "\n";
}

ModelSpec load_valid_spec(const std::string& path) {
  ModelSpec spec = load_spec_file(path);
  ValidationReport report = validate_spec(spec);
  if (!report.ok) {
    for (const Issue& issue : report.issues) {
      if (issue.severity == Severity::Error) {
        std::cerr << "error " << issue.code << ": " << issue.message << "\n";
      }
    }
    throw SpecError("spec failed validation: " + path);
  }
  return spec;
}

int observable_states(const ModelSpec& spec) {
  return spec.cbit_doubled ? spec.n_primary / 2 : spec.n_primary;
}

int cmd_validate(const Options& opt) {
  ModelSpec spec = load_spec_file(opt.spec_path);
  ValidationReport report = validate_spec(spec);
  print_report(report);
  return report.ok ? 0 : 1;
}

int cmd_spectrum(const Options& opt) {
  std::vector<int> perm;
  double delta_t = 1.0;
  if (!opt.perm_path.empty()) {
    const Eigen::MatrixXd m = csv::parse_matrix(csv::read_file(opt.perm_path));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        perm.push_back(static_cast<int>(m(r, c)));
      }
    }
  } else if (!opt.spec_path.empty()) {
    // Step map over the full state space (primary x fast lattice) as a
    // permutation, ordered primary-major.
    const ModelSpec spec = load_valid_spec(opt.spec_path);
    delta_t = spec.delta_t;
    const long long lattice = joint_period(spec);
    const long long states = lattice * spec.n_primary;
    if (states > opt.budget || states > 1000000) {
      throw std::runtime_error("full state space too large for spectrum: " +
                               std::to_string(states) + " states");
    }
    const Automaton automaton(spec);
    for (long long s = 0; s < states; ++s) {
      ClassicalState state;
      state.primary = static_cast<int>(s / lattice);
      long long index = s % lattice;
      for (long long L : spec.periods) {
        state.fast.push_back(index % L);
        index /= L;
      }
      const ClassicalState next = automaton.step(state);
      long long next_index = 0;
      long long stride = 1;
      for (size_t i = 0; i < next.fast.size(); ++i) {
        next_index += next.fast[i] * stride;
        stride *= spec.periods[i];
      }
      perm.push_back(static_cast<int>(next.primary * lattice + next_index));
    }
  } else {
    throw std::runtime_error("spectrum needs --perm or --spec");
  }
  const CycleSpectrum spectrum = cycle_spectrum(perm, delta_t);
  write_out(opt, "spectrum.csv", csv::spectrum_csv(spectrum));
  return 0;
}

int cmd_synth(const Options& opt) {
  if (opt.lambdas.size() != 1) {
    throw std::runtime_error("synth needs exactly one --lambda value");
  }
  const Eigen::MatrixXd m = csv::parse_matrix(csv::read_file(opt.target_path));
  const Generator target = Generator::from_matrix(m, 1e-9);
  const SynthesisReport report = synthesize(target, opt.lambdas[0]);
  for (const std::string& w : report.warnings) {
    std::cout << "warning: " << w << "\n";
  }
  fs::create_directories(opt.out_dir);
  const std::string spec_path = (fs::path(opt.out_dir) / "spec.json").string();
  save_spec_file(report.spec, spec_path);
  std::cout << "wrote " << spec_path << "\n";
  write_out(opt, "synth_report.csv", csv::synthesis_csv(report));
  return 0;
}

int cmd_run_classical(const Options& opt) {
  const ModelSpec spec = load_valid_spec(opt.spec_path);
  const std::vector<double> p0 = parse_p0(opt.p0_text, spec.n_primary);
  MarginalSeries series;
  if (opt.monte_carlo) {
    series = sample_marginals(spec, p0, opt.t_max, opt.samples, opt.seed,
                              opt.threads);
  } else {
    series = exact_marginals(spec, p0, opt.t_max, opt.budget, opt.threads);
  }
  write_out(opt, "classical.csv", csv::marginals_csv(series, "P_classical"));
  if (opt.plots) {
    std::vector<double> x(series.times.begin(), series.times.end());
    std::vector<svg::Series> lines;
    for (size_t i = 0; i < series.probs[0].size(); ++i) {
      svg::Series s;
      s.label = "P_" + std::to_string(i + 1);
      for (const auto& row : series.probs) s.y.push_back(row[i]);
      lines.push_back(std::move(s));
    }
    write_out(opt, "classical.svg",
              svg::line_chart("classical marginals", x, lines));
  }
  return 0;
}

int cmd_run_quantum(const Options& opt) {
  MarginalSeries series;
  if (!opt.spec_path.empty()) {
    const ModelSpec spec = load_valid_spec(opt.spec_path);
    const std::vector<double> p0 = parse_p0(opt.p0_text, observable_states(spec));
    series = quantum_marginals(spec, p0, opt.t_max);
  } else if (!opt.target_path.empty()) {
    const Eigen::MatrixXd m = csv::parse_matrix(csv::read_file(opt.target_path));
    const Generator g = Generator::from_matrix(m, 1e-9);
    const std::vector<double> p0 = parse_p0(opt.p0_text, g.dim());
    Eigen::VectorXd psi0 = Eigen::VectorXd::Zero(g.dim());
    for (int i = 0; i < g.dim(); ++i) psi0(i) = std::sqrt(p0[i]);
    std::vector<long long> times;
    for (long long t = 0; t <= opt.t_max; ++t) times.push_back(t);
    series.method = MarginalMethod::Analytic;
    series.times = times;
    for (const Eigen::VectorXd& psi : evolve(g, psi0, times)) {
      const Eigen::VectorXd p = born(psi, false);
      series.probs.emplace_back(p.data(), p.data() + p.size());
    }
  } else {
    throw std::runtime_error("run-quantum needs --spec or --target");
  }
  write_out(opt, "quantum.csv", csv::marginals_csv(series, "P_quantum"));
  if (opt.plots) {
    std::vector<double> x(series.times.begin(), series.times.end());
    std::vector<svg::Series> lines;
    for (size_t i = 0; i < series.probs[0].size(); ++i) {
      svg::Series s;
      s.label = "P_" + std::to_string(i + 1);
      for (const auto& row : series.probs) s.y.push_back(row[i]);
      lines.push_back(std::move(s));
    }
    write_out(opt, "quantum.svg", svg::line_chart("quantum marginals", x, lines));
  }
  return 0;
}

int cmd_compare(const Options& opt) {
  const MarginalSeries classical =
      csv::parse_marginals(csv::read_file(opt.classical_path));
  const MarginalSeries quantum =
      csv::parse_marginals(csv::read_file(opt.quantum_path));
  long long period = 0;
  if (!opt.spec_path.empty()) {
    const ModelSpec spec = load_valid_spec(opt.spec_path);
    for (const CrossingPoint& c : spec.crossings) {
      period = spec.periods[c.i] * spec.periods[c.j];
      break;  // single-pair convention: first coupled pair
    }
  }
  const ComparisonReport report = compare(classical, quantum, period);
  write_out(opt, "comparison.csv", csv::comparison_csv(report, classical, quantum));
  std::cout << "max_tv " << csv::format_double(report.max_tv) << " at t="
            << report.argmax_time << "\n";
  if (opt.plots) {
    std::vector<double> x(report.times.begin(), report.times.end());
    write_out(opt, "comparison.svg",
              svg::line_chart("total variation distance", x,
                              {{"tv", report.tv}}));
  }
  return 0;
}

int cmd_sweep(const Options& opt) {
  const Eigen::MatrixXd m = csv::parse_matrix(csv::read_file(opt.target_path));
  const Generator target = Generator::from_matrix(m, 1e-9);
  const std::vector<double> p0 = parse_p0(opt.p0_text, target.dim());
  SweepOptions sweep_opt;
  sweep_opt.budget = opt.budget;
  sweep_opt.mc_samples = opt.samples;
  sweep_opt.seed = opt.seed;
  sweep_opt.threads = opt.threads;
  const SweepTable table = convergence_sweep(target, opt.lambdas, p0, sweep_opt);
  write_out(opt, "sweep.csv", csv::sweep_csv(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deterministic-automaton simulator and Hamiltonian synthesis"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", opt.out_dir, "output directory");
    sub->add_option("--threads", opt.threads, "worker thread cap");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a spec file");
  validate->add_option("--spec", opt.spec_path, "spec file")->required();

  CLI::App* spectrum =
      app.add_subcommand("spectrum", "cycle decomposition and energy ladder");
  spectrum->add_option("--perm", opt.perm_path, "permutation images CSV");
  spectrum->add_option("--spec", opt.spec_path, "spec file (full step map)");
  spectrum->add_option("--budget", opt.budget, "state-count budget");
  add_common(spectrum);

  CLI::App* synth = app.add_subcommand("synth", "spec realizing a target generator");
  synth->add_option("--target", opt.target_path, "target matrix CSV")->required();
  synth->add_option("--lambda", opt.lambdas, "period scale")->required()->delimiter(',');
  add_common(synth);

  CLI::App* run_c = app.add_subcommand("run-classical", "ensemble marginals");
  run_c->add_option("--spec", opt.spec_path, "spec file")->required();
  run_c->add_option("--t-max", opt.t_max, "steps to evolve");
  run_c->add_option("--p0", opt.p0_text, "initial distribution, comma separated");
  run_c->add_option("--samples", opt.samples, "Monte Carlo sample count");
  run_c->add_option("--seed", opt.seed, "Monte Carlo seed");
  run_c->add_option("--budget", opt.budget, "trajectory-step budget");
  run_c->add_flag("--exact", opt.exact, "exact enumeration (default)");
  run_c->add_flag("--mc", opt.monte_carlo, "Monte Carlo estimator");
  run_c->add_flag("--plots", opt.plots, "emit SVG plot");
  add_common(run_c);

  CLI::App* run_q = app.add_subcommand("run-quantum", "quantum reference marginals");
  run_q->add_option("--spec", opt.spec_path, "spec file (effective generator)");
  run_q->add_option("--target", opt.target_path, "generator matrix CSV");
  run_q->add_option("--t-max", opt.t_max, "steps to evolve");
  run_q->add_option("--p0", opt.p0_text, "initial distribution, comma separated");
  run_q->add_flag("--plots", opt.plots, "emit SVG plot");
  add_common(run_q);

  CLI::App* comp = app.add_subcommand("compare", "classical vs quantum TV distance");
  comp->add_option("--classical", opt.classical_path, "classical CSV")->required();
  comp->add_option("--quantum", opt.quantum_path, "quantum CSV")->required();
  comp->add_option("--spec", opt.spec_path, "spec file (checkpoint period)");
  comp->add_flag("--plots", opt.plots, "emit SVG plot");
  add_common(comp);

  CLI::App* sweep = app.add_subcommand("sweep", "convergence over the period scale");
  sweep->add_option("--target", opt.target_path, "target matrix CSV")->required();
  sweep->add_option("--lambda", opt.lambdas, "lambda ladder")->required()->delimiter(',');
  sweep->add_option("--p0", opt.p0_text, "initial distribution");
  sweep->add_option("--samples", opt.samples, "Monte Carlo fallback samples");
  sweep->add_option("--seed", opt.seed, "Monte Carlo seed");
  sweep->add_option("--budget", opt.budget, "trajectory-step budget");
  add_common(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(opt);
    if (spectrum->parsed()) return cmd_spectrum(opt);
    if (synth->parsed()) return cmd_synth(opt);
    if (run_c->parsed()) return cmd_run_classical(opt);
    if (run_q->parsed()) return cmd_run_quantum(opt);
    if (comp->parsed()) return cmd_compare(opt);
    if (sweep->parsed()) return cmd_sweep(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
