#include "udw/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace udw {

const std::vector<Measure>& all_measures() {
  static const std::vector<Measure> all = {Measure::Concurrence, Measure::Lqu, Measure::Uin,
                                           Measure::Coherence};
  return all;
}

std::string measure_name(Measure m) {
  switch (m) {
    case Measure::Concurrence: return "concurrence";
    case Measure::Lqu: return "lqu";
    case Measure::Uin: return "uin";
    case Measure::Coherence: return "coherence";
  }
  throw std::invalid_argument("measure_name: unknown measure");
}

void SweepSpec::validate() const {
  if (!(tu_start > 0.0)) throw std::invalid_argument("sweep: tu_start must be > 0");
  if (!(tu_start < tu_stop)) throw std::invalid_argument("sweep: tu_start must be < tu_stop");
  if (tu_steps < 2) throw std::invalid_argument("sweep: tu_steps must be >= 2");
  if (omega_list.empty()) throw std::invalid_argument("sweep: omega list is empty");
  if (delta0_list.empty()) throw std::invalid_argument("sweep: delta0 list is empty");
  for (double w : omega_list) {
    if (!(w > 0.0)) throw std::invalid_argument("sweep: omega must be > 0");
  }
  for (double d : delta0_list) {
    if (!(d >= -3.0 && d <= 1.0)) throw std::invalid_argument("sweep: delta0 must lie in [-3, 1]");
  }
}

namespace {

double pick(const MeasureReport& rep, Measure m) {
  switch (m) {
    case Measure::Concurrence: return rep.concurrence;
    case Measure::Lqu: return rep.lqu;
    case Measure::Uin: return rep.uin;
    case Measure::Coherence: return rep.coherence_l1;
  }
  throw std::invalid_argument("pick: unknown measure");
}

double tu_grid_point(const SweepSpec& spec, int i) {
  const double h = (spec.tu_stop - spec.tu_start) / (spec.tu_steps - 1);
  return (i == spec.tu_steps - 1) ? spec.tu_stop : spec.tu_start + h * i;
}

}  // namespace

SweepTable run_sweep(const SweepSpec& spec, int threads) {
  spec.validate();
  if (threads < 1) throw std::invalid_argument("sweep: threads must be >= 1");

  SweepTable table;
  table.measures = spec.measures.empty() ? all_measures() : spec.measures;

  const std::size_t total =
      spec.omega_list.size() * spec.delta0_list.size() * static_cast<std::size_t>(spec.tu_steps);
  table.rows.resize(total);

  auto fill = [&](std::size_t begin, std::size_t end) {
    const std::size_t per_omega = spec.delta0_list.size() * spec.tu_steps;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const double omega = spec.omega_list[idx / per_omega];
      const double delta0 = spec.delta0_list[(idx % per_omega) / spec.tu_steps];
      const double tu = tu_grid_point(spec, static_cast<int>(idx % spec.tu_steps));
      const DensityMatrix rho = udw_equilibrium_state(UdWParams(tu, omega, delta0));
      const MeasureReport rep = measure_all(rho);
      SweepRow& row = table.rows[idx];
      row.t_u = tu;
      row.omega = omega;
      row.delta0 = delta0;
      row.values.reserve(table.measures.size());
      for (Measure m : table.measures) row.values.push_back(pick(rep, m));
    }
  };

  if (threads == 1 || total < 2) {
    fill(0, total);
  } else {
    const std::size_t nworkers = std::min<std::size_t>(threads, total);
    std::vector<std::thread> pool;
    pool.reserve(nworkers);
    const std::size_t chunk = (total + nworkers - 1) / nworkers;
    for (std::size_t w = 0; w < nworkers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(fill, begin, end);
    }
    for (std::thread& t : pool) t.join();
  }
  return table;
}

namespace {

std::string fmt9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return buf;
}

}  // namespace

void write_csv(const SweepTable& table, std::ostream& out) {
  out << "t_u,omega,delta0";
  for (Measure m : table.measures) out << ',' << measure_name(m);
  out << '\n';
  for (const SweepRow& row : table.rows) {
    out << fmt9(row.t_u) << ',' << fmt9(row.omega) << ',' << fmt9(row.delta0);
    for (double v : row.values) out << ',' << fmt9(v);
    out << '\n';
  }
  if (!out) throw std::runtime_error("write_csv: stream write failure");
}

CriticalPoint find_death_temperature(double omega, double delta0) {
  if (!(omega > 0.0)) throw std::invalid_argument("deathpoint: omega must be > 0");
  if (!(delta0 >= -3.0 && delta0 <= 1.0)) {
    throw std::invalid_argument("deathpoint: delta0 must lie in [-3, 1]");
  }
  constexpr double kZero = 1e-12;
  auto conc = [&](double tu) {
    return concurrence(udw_equilibrium_state(UdWParams(tu, omega, delta0)));
  };

  double lo = 1e-3 * omega;
  double hi = 1e3 * omega;
  if (conc(lo) <= kZero) return {CriticalKind::EntanglementDeath, std::nullopt};
  if (conc(hi) > kZero) return {CriticalKind::EntanglementDeath, std::nullopt};

  // concurrence is non-increasing in T_U; bracket the transition
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (conc(mid) > kZero ? lo : hi) = mid;
  }
  return {CriticalKind::EntanglementDeath, 0.5 * (lo + hi)};
}

CriticalPoint find_dark_point(double omega, double delta0) {
  if (!(omega > 0.0)) throw std::invalid_argument("darkpoint: omega must be > 0");
  if (!(delta0 >= -3.0 && delta0 <= 1.0)) {
    throw std::invalid_argument("darkpoint: delta0 must lie in [-3, 1]");
  }
  if (!(delta0 > 0.0 && delta0 < 1.0)) {
    return {CriticalKind::CoherenceDarkPoint, std::nullopt};
  }
  // r23 = 0 exactly when gamma^2 = delta0
  const double tstar = omega / (2.0 * std::atanh(std::sqrt(delta0)));
  const double g = gamma_of(UdWParams(tstar, omega, delta0));
  const double r23 = (delta0 - g * g) / (2.0 * (3.0 + g * g));
  if (std::abs(r23) > 1e-12) {
    throw std::runtime_error("darkpoint: closed form failed verification");
  }
  return {CriticalKind::CoherenceDarkPoint, tstar};
}

bool revival_check(double omega, double delta0) {
  const CriticalPoint dark = find_dark_point(omega, delta0);
  if (!dark.t_u) throw std::invalid_argument("revival_check: no dark point for these parameters");
  auto coh = [&](double tu) {
    return l1_coherence(udw_equilibrium_state(UdWParams(tu, omega, delta0)));
  };
  return coh(*dark.t_u + 0.5 * omega) - coh(*dark.t_u) >= 1e-6;
}

}  // namespace udw
