#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "udw/measures.hpp"

namespace udw {

enum class Measure { Concurrence, Lqu, Uin, Coherence };

// fixed column order for CSV output
const std::vector<Measure>& all_measures();
std::string measure_name(Measure m);

struct SweepSpec {
  double tu_start = 0.0;
  double tu_stop = 0.0;
  int tu_steps = 0;
  std::vector<double> omega_list;
  std::vector<double> delta0_list;
  std::vector<Measure> measures;  // subset in fixed order; empty means all

  void validate() const;  // throws std::invalid_argument
};

struct SweepRow {
  double t_u;
  double omega;
  double delta0;
  std::vector<double> values;  // one per selected measure, fixed order
};

struct SweepTable {
  std::vector<Measure> measures;
  std::vector<SweepRow> rows;
};

// Rows for every (omega, delta0, T_U) combination, lexicographic in that
// order; the T_U grid is uniform and includes both endpoints. Grid points may
// be evaluated on `threads` workers; output order and values are invariant.
SweepTable run_sweep(const SweepSpec& spec, int threads = 1);

// Deterministic CSV: header `t_u,omega,delta0,<names>`, 9 significant digits,
// '\n' line endings.
void write_csv(const SweepTable& table, std::ostream& out);

enum class CriticalKind { EntanglementDeath, CoherenceDarkPoint };

struct CriticalPoint {
  CriticalKind kind;
  std::optional<double> t_u;
};

// Largest T_U in [1e-3 omega, 1e3 omega] where the concurrence drops to zero,
// bisected to bracket width 1e-6. Absent when the concurrence is zero on the
// whole range or never dies within it.
CriticalPoint find_death_temperature(double omega, double delta0);

// Temperature where the off-diagonal r23 vanishes: omega / (2 artanh(sqrt(delta0)))
// for delta0 in (0,1), absent otherwise.
CriticalPoint find_dark_point(double omega, double delta0);

// True when the coherence has grown by >= 1e-6 half an energy spacing past
// the dark point. Throws when no dark point exists.
bool revival_check(double omega, double delta0);

}  // namespace udw
