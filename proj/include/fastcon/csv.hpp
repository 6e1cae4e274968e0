#pragma once

#include <iosfwd>
#include <string>

#include "fastcon/finite_time.hpp"
#include "fastcon/sim.hpp"
#include "fastcon/spectra.hpp"

namespace fastcon {

// Shortest-round-trip decimal with 17 significant digits; identical inputs
// always format to identical bytes, so seeded runs emit byte-identical CSV.
std::string format_double(double v);

// Columns: k, e_k, then x_<agent>_<order> when states were retained.
void write_trajectory_csv(std::ostream& out, const Trajectory& t);

// Columns: step, K_1, ..., K_n.
void write_schedule_csv(std::ostream& out, const GainSchedule& sched);

// Columns: index, eigenvalue.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);

}  // namespace fastcon
