#include "dwho/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>

#include "dwho/analysis.hpp"
#include "dwho/parallel.hpp"
#include "dwho/table.hpp"

namespace dwho::cli {

namespace {

const char* extension(OutputFormat f) { return f == OutputFormat::json ? "json" : "csv"; }

std::string sibling_path(const std::string& path, const std::string& suffix, OutputFormat f) {
  std::filesystem::path p(path);
  std::filesystem::path stem = p.parent_path() / p.stem();
  return stem.string() + suffix + "." + extension(f);
}

void write_table(const Table& table, const std::string& path, OutputFormat format) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  if (format == OutputFormat::json) {
    write_json(file, table);
  } else {
    write_csv(file, table);
  }
  if (!file) throw std::runtime_error("failed writing " + path);
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

struct App {
  CLI::App app{"Coupled double-well + oscillator tunneling dynamics", "dwho"};
  RunConfig config;
  int d = 1;
  std::string packet = "two-term";
  std::string format = "csv";

  App() {
    app.set_config("--config", "", "key=value file; command-line flags override its keys");
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.require_subcommand(1);
    app.fallthrough();

    ModelParameters& m = config.model;
    app.add_option("--xi", m.xi, "Double-well shape parameter")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--big-m", m.big_mass, "Double-well particle mass M")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--m", m.mass, "Oscillator mass m")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--alpha", m.alpha, "hbar*omega in units of the doublet splitting")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--c", m.c, "Coupling strength")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--d", d, "Coupling power of x (1 or 2)")
        ->check(CLI::Validator([](std::string& s) { return s == "1" || s == "2" ? std::string{} : std::string{"d must be 1 or 2"}; },
                               "1|2"))
        ->capture_default_str();
    app.add_option("--n", m.cutoff, "Oscillator cutoff N")->check(CLI::Range(0, kDefaultMaxCutoff))->capture_default_str();
    app.add_option("--packet", packet, "Wavepacket: two-term or four-term")
        ->check(CLI::IsMember({"two-term", "four-term"}))
        ->capture_default_str();
    app.add_option("--threshold", config.threshold, "Correlation level accepted as a recurrence")
        ->check(CLI::Validator([](std::string& s) {
          const double v = std::stod(s);
          return v > 0.9 && v <= 1.0 ? std::string{} : std::string{"threshold must lie in (0.9, 1]"};
        }, "(0.9,1]"))
        ->capture_default_str();
    app.add_option("--grid", config.grid, "Snapshot points per axis")->check(CLI::Range(2, 4001))->capture_default_str();
    app.add_option("--frames", config.frames, "Snapshots over the first half period")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();
    app.add_option("--samples", config.samples, "Series points over one period")
        ->check(CLI::Range(2, 1000000))
        ->capture_default_str();
    app.add_option("--n-max", config.n_max, "Largest N for sweep-n")->check(CLI::Range(0, kDefaultMaxCutoff))->capture_default_str();
    app.add_option("--c-max", config.c_max, "Largest c for sweep-c")->check(CLI::NonNegativeNumber)->capture_default_str();
    app.add_option("--c-steps", config.c_steps, "Number of c values for sweep-c")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    app.add_option("--out", config.out, "Output path (default <command>.<format>)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--jobs", config.jobs, "Worker threads (0 = available parallelism)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    app.add_subcommand("spectrum", "Eigenvalues of the coupled Hamiltonian");
    app.add_subcommand("evolve", "Observable series over one period plus density snapshots");
    app.add_subcommand("sweep-c", "Tunneling period against c");
    app.add_subcommand("sweep-n", "Tunneling period against the oscillator cutoff N");
    app.add_subcommand("minima", "Minima of the composite potential and a U(x,y) grid");
    app.add_subcommand("constants", "Basis overlap constants");
  }
};

}  // namespace

std::string RunConfig::output_path() const {
  return out.empty() ? command + "." + extension(format) : out;
}

ParseOutcome parse_config(const std::vector<std::string>& args) {
  App a;
  ParseOutcome outcome;
  if (args.empty()) {
    outcome.exit_code = kExitUsage;
    outcome.message = a.app.help();
    return outcome;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    a.app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    outcome.exit_code = kExitOk;
    outcome.message = a.app.help();
    return outcome;
  } catch (const CLI::CallForAllHelp&) {
    outcome.exit_code = kExitOk;
    outcome.message = a.app.help("", CLI::AppFormatMode::All);
    return outcome;
  } catch (const CLI::ParseError& e) {
    outcome.exit_code = kExitUsage;
    outcome.message = std::string("error: ") + e.what() + "\n\n" + a.app.help();
    return outcome;
  }
  RunConfig config = a.config;
  config.command = a.app.get_subcommands().front()->get_name();
  config.model.order = a.d == 2 ? Coupling::quadratic : Coupling::linear;
  config.packet = a.packet == "four-term" ? PacketKind::four_term : PacketKind::two_term;
  config.format = a.format == "json" ? OutputFormat::json : OutputFormat::csv;
  outcome.config = config;
  return outcome;
}

namespace {

std::shared_ptr<const CoupledSystem> build_system(const RunConfig& config) {
  return solve(make_model(config.model));
}

int jobs_of(const RunConfig& config) { return config.jobs > 0 ? config.jobs : default_jobs(); }

std::string run_spectrum(const RunConfig& config) {
  const auto system = build_system(config);
  const SpectralDecomposition& sd = system->spectrum;
  Table table;
  table.columns = {"kappa", "E_kappa"};
  std::optional<std::array<double, 4>> closed;
  if (system->model.cutoff == 1) {
    try {
      closed = analytic_n1(system->model, system->zetas).energies;
      std::sort(closed->begin(), closed->end());
      table.columns.push_back("E_analytic");
      table.columns.push_back("abs_diff");
    } catch (const std::invalid_argument&) {
      closed.reset();
    }
  }
  for (int k = 0; k < sd.size(); ++k) {
    std::vector<Cell> row{static_cast<long long>(k), sd.energies[k]};
    if (closed) {
      row.emplace_back((*closed)[k]);
      row.emplace_back(std::abs((*closed)[k] - sd.energies[k]));
    }
    table.add_row(std::move(row));
  }
  write_table(table, config.output_path(), config.format);
  return "Omega1=" + format_number(sd.omega1) + " T=" + fixed(2.0 * std::numbers::pi / sd.omega1, 3);
}

std::string run_evolve(const RunConfig& config) {
  const auto system = build_system(config);
  const Wavepacket wp = config.packet == PacketKind::four_term ? Wavepacket::four_term(system) : Wavepacket::two_term(system);
  PeriodOptions popt;
  popt.threshold = config.threshold;
  const double period = tunneling_period(wp, popt);
  const Observables obs(wp);
  const auto times = uniform_times(period, config.samples);
  const auto records = observable_series(obs, times, jobs_of(config));

  Table series;
  series.columns = {"t", "x_mean", "px_mean", "y_mean", "py_mean", "Pr", "dx", "dpx", "dxdpx", "gamma_corr"};
  for (const auto& r : records) {
    series.add_row({r.t, r.x_mean, r.px_mean, r.y_mean, r.py_mean, r.pr, r.dx, r.dpx, r.dxdpx, r.gamma_corr});
  }
  write_table(series, config.output_path(), config.format);

  Table frames;
  frames.columns = {"t", "x", "y", "density"};
  std::vector<DensityGrid> grids(static_cast<std::size_t>(config.frames));
  parallel_for(grids.size(), jobs_of(config), [&](std::size_t k) {
    const double t = config.frames == 1 ? 0.0 : 0.5 * period * static_cast<double>(k) / (config.frames - 1);
    grids[k] = density_grid(wp, t, config.grid, config.grid);
  });
  for (const auto& g : grids) {
    for (std::size_t i = 0; i < g.xs.size(); ++i) {
      for (std::size_t j = 0; j < g.ys.size(); ++j) frames.add_row({g.t, g.xs[i], g.ys[j], g.at(i, j)});
    }
  }
  write_table(frames, sibling_path(config.output_path(), "_frames", config.format), config.format);
  return "T=" + fixed(period, 3);
}

Table sweep_table(const SweepResult& r) {
  Table table;
  table.columns = {"param", "T", "omega1"};
  for (std::size_t k = 0; k < r.values.size(); ++k) {
    if (r.parameter == "N") {
      table.add_row({static_cast<long long>(std::lround(r.values[k])), r.periods[k], r.omega1[k]});
    } else {
      table.add_row({r.values[k], r.periods[k], r.omega1[k]});
    }
  }
  return table;
}

std::string run_sweep_c(const RunConfig& config) {
  const CoupledModel base = make_model(config.model);
  std::vector<double> cs(static_cast<std::size_t>(config.c_steps));
  for (int k = 0; k < config.c_steps; ++k) cs[k] = config.c_steps == 1 ? config.c_max : config.c_max * k / (config.c_steps - 1);
  const SweepResult r = sweep_c(base, cs, jobs_of(config));
  write_table(sweep_table(r), config.output_path(), config.format);
  return "c=" + format_number(r.values.back()) + " T=" + fixed(r.periods.back(), 3);
}

std::string run_sweep_n(const RunConfig& config) {
  const CoupledModel base = make_model(config.model);
  std::vector<int> ns(static_cast<std::size_t>(config.n_max + 1));
  for (int n = 0; n <= config.n_max; ++n) ns[n] = n;
  const SweepResult r = sweep_N(base, ns, jobs_of(config));
  write_table(sweep_table(r), config.output_path(), config.format);
  return "N=" + std::to_string(ns.back()) + " T=" + fixed(r.periods.back(), 3);
}

std::string run_minima(const RunConfig& config) {
  const CoupledModel model = make_model(config.model);
  const auto minima = find_minima(model);
  Table table;
  table.columns = {"x", "y", "value"};
  for (const auto& m : minima) table.add_row({m.x, m.y, m.value});
  write_table(table, config.output_path(), config.format);

  Table grid;
  grid.columns = {"x", "y", "U"};
  const double yw = 9.0 * model.c / (model.ho.mass() * model.ho.omega() * model.ho.omega()) + 3.0 * model.ho.length();
  const int n = config.grid;
  for (int i = 0; i < n; ++i) {
    const double x = -3.0 + 6.0 * i / (n - 1);
    for (int j = 0; j < n; ++j) {
      const double y = -yw + 2.0 * yw * j / (n - 1);
      grid.add_row({x, y, composite_potential(x, y, model)});
    }
  }
  write_table(grid, sibling_path(config.output_path(), "_grid", config.format), config.format);
  return "minima=" + std::to_string(minima.size()) + " U=" + fixed(minima.front().value, 3);
}

std::string run_constants(const RunConfig& config) {
  const CoupledModel model = make_model(config.model);
  const OverlapTable t = overlap_table(model.dw, model.ho);
  Table table;
  table.columns = {"name", "value"};
  for (const auto& [name, value] : t.entries()) table.add_row({std::string(name), value});
  write_table(table, config.output_path(), config.format);
  return "gamma=" + format_number(t.gamma) + " eta=" + format_number(t.eta) + " b=" + format_number(t.b);
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::string (*)(const RunConfig&)> commands{
      {"spectrum", run_spectrum}, {"evolve", run_evolve},   {"sweep-c", run_sweep_c},
      {"sweep-n", run_sweep_n},   {"minima", run_minima},   {"constants", run_constants}};
  const auto it = commands.find(config.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kExitUsage;
  }
  try {
    out << it->second(config) << '\n';
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << config.command << ": " << e.what() << '\n';
    return kExitComputation;
  }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + std::max(argc, 1));
  const ParseOutcome parsed = parse_config(args);
  if (!parsed.config) {
    (parsed.exit_code == kExitOk ? out : err) << parsed.message;
    return parsed.exit_code;
  }
  return run(*parsed.config, out, err);
}

}  // namespace dwho::cli
