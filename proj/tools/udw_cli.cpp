// Command-line front end: print equilibrium states, evaluate the correlation
// measures at a point, run CSV parameter sweeps and locate critical points.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "udw/sweep.hpp"

namespace {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return buf;
}

std::vector<double> parse_list(const std::string& s, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stod(item, &pos));
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw CLI::ValidationError(flag, "not a number: '" + item + "'");
    }
  }
  if (out.empty()) throw CLI::ValidationError(flag, "empty list");
  return out;
}

std::vector<udw::Measure> parse_measures(const std::string& s) {
  std::vector<udw::Measure> sel;
  std::stringstream ss(s);
  std::string item;
  std::vector<std::string> tokens;
  while (std::getline(ss, item, ',')) tokens.push_back(item);
  // fixed output order regardless of the order given
  auto has = [&](const std::string& t) {
    return std::find(tokens.begin(), tokens.end(), t) != tokens.end();
  };
  for (const std::string& t : tokens) {
    if (t != "c" && t != "lqu" && t != "uin" && t != "coh") {
      throw CLI::ValidationError("--measures", "unknown measure '" + t + "'");
    }
  }
  if (has("c")) sel.push_back(udw::Measure::Concurrence);
  if (has("lqu")) sel.push_back(udw::Measure::Lqu);
  if (has("uin")) sel.push_back(udw::Measure::Uin);
  if (has("coh")) sel.push_back(udw::Measure::Coherence);
  if (sel.empty()) throw CLI::ValidationError("--measures", "no measures selected");
  return sel;
}

void print_state(const udw::DensityMatrix& rho) {
  std::printf("re:\n");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      std::printf("%s%s", j ? " " : "", fmt9(rho(i, j).real()).c_str());
    std::printf("\n");
  }
  std::printf("im:\n");
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      std::printf("%s%s", j ? " " : "", fmt9(rho(i, j).imag()).c_str());
    std::printf("\n");
  }
}

void print_critical(const udw::CriticalPoint& cp) {
  if (cp.t_u) {
    std::printf("t_u=%s\n", fmt9(*cp.t_u).c_str());
  } else {
    std::printf("none\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium states and quantum correlation measures of two "
               "uniformly accelerating detectors"};
  app.require_subcommand(1);

  int threads = 1;
  app.add_option("--threads", threads, "worker threads for sweeps (output is invariant)");

  double tu = 0.0, omega = 0.0, delta0 = 0.0;
  std::string measures_arg = "c,lqu,uin,coh";

  CLI::App* state = app.add_subcommand("state", "print the 4x4 equilibrium state");
  state->add_option("--tu", tu, "Unruh temperature")->required();
  state->add_option("--omega", omega, "energy spacing")->required();
  state->add_option("--delta0", delta0, "initial-state parameter")->required();

  CLI::App* measure = app.add_subcommand("measure", "print one CSV row of measures");
  measure->add_option("--tu", tu, "Unruh temperature")->required();
  measure->add_option("--omega", omega, "energy spacing")->required();
  measure->add_option("--delta0", delta0, "initial-state parameter")->required();
  measure->add_option("--measures", measures_arg, "subset of c,lqu,uin,coh");

  std::string tu_range, omega_arg, delta0_arg, out_path;
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
  sweep->add_option("--tu", tu_range, "T_U grid as start:stop:steps")->required();
  sweep->add_option("--omega", omega_arg, "comma list of energy spacings")->required();
  sweep->add_option("--delta0", delta0_arg, "comma list of delta0 values")->required();
  sweep->add_option("--measures", measures_arg, "subset of c,lqu,uin,coh");
  sweep->add_option("--out", out_path, "output file (default stdout)");

  CLI::App* deathpoint = app.add_subcommand("deathpoint", "entanglement death temperature");
  deathpoint->add_option("--omega", omega, "energy spacing")->required();
  deathpoint->add_option("--delta0", delta0, "initial-state parameter")->required();

  CLI::App* darkpoint = app.add_subcommand("darkpoint", "coherence dark point");
  darkpoint->add_option("--omega", omega, "energy spacing")->required();
  darkpoint->add_option("--delta0", delta0, "initial-state parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*state) {
      print_state(udw::udw_equilibrium_state(udw::UdWParams(tu, omega, delta0)));
    } else if (*measure) {
      // reuse the CSV writer for a single point
      udw::SweepTable table;
      table.measures = parse_measures(measures_arg);
      const udw::MeasureReport rep =
          udw::measure_all(udw::udw_equilibrium_state(udw::UdWParams(tu, omega, delta0)));
      udw::SweepRow row{tu, omega, delta0, {}};
      for (udw::Measure m : table.measures) {
        switch (m) {
          case udw::Measure::Concurrence: row.values.push_back(rep.concurrence); break;
          case udw::Measure::Lqu: row.values.push_back(rep.lqu); break;
          case udw::Measure::Uin: row.values.push_back(rep.uin); break;
          case udw::Measure::Coherence: row.values.push_back(rep.coherence_l1); break;
        }
      }
      table.rows.push_back(std::move(row));
      udw::write_csv(table, std::cout);
    } else if (*sweep) {
      udw::SweepSpec spec;
      std::stringstream ss(tu_range);
      std::string part;
      std::vector<std::string> parts;
      while (std::getline(ss, part, ':')) parts.push_back(part);
      if (parts.size() != 3) {
        std::cerr << "--tu: expected start:stop:steps\n";
        return 2;
      }
      try {
        spec.tu_start = std::stod(parts[0]);
        spec.tu_stop = std::stod(parts[1]);
        spec.tu_steps = std::stoi(parts[2]);
      } catch (const std::exception&) {
        std::cerr << "--tu: expected start:stop:steps with numeric fields\n";
        return 2;
      }
      spec.omega_list = parse_list(omega_arg, "--omega");
      spec.delta0_list = parse_list(delta0_arg, "--delta0");
      spec.measures = parse_measures(measures_arg);

      const udw::SweepTable table = udw::run_sweep(spec, threads);
      if (out_path.empty()) {
        udw::write_csv(table, std::cout);
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
          std::cerr << "--out: cannot open '" << out_path << "'\n";
          return 2;
        }
        udw::write_csv(table, out);
      }
    } else if (*deathpoint) {
      print_critical(udw::find_death_temperature(omega, delta0));
    } else if (*darkpoint) {
      print_critical(udw::find_dark_point(omega, delta0));
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
