#include "fastcon/csv.hpp"

#include <cstdio>
#include <ostream>

namespace fastcon {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& out, const Trajectory& t) {
  const int n = t.config.order;
  out << "k,e";
  if (!t.states.empty()) {
    for (int i = 1; i <= t.node_count; ++i) {
      for (int l = 1; l <= n; ++l) out << ",x_" << i << "_" << l;
    }
  }
  out << "\n";
  for (std::size_t k = 0; k < t.errors.size(); ++k) {
    out << k << "," << format_double(t.errors[k]);
    if (k < t.states.size()) {
      for (double v : t.states[k]) out << "," << format_double(v);
    }
    out << "\n";
  }
}

void write_schedule_csv(std::ostream& out, const GainSchedule& sched) {
  out << "step";
  for (int m = 1; m <= sched.order; ++m) out << ",K_" << m;
  out << "\n";
  for (int k = 0; k < sched.length(); ++k) {
    out << k;
    for (double v : sched.entries[k]) out << "," << format_double(v);
    out << "\n";
  }
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  out << "index,eigenvalue\n";
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    out << i + 1 << "," << format_double(s.eigenvalues[i]) << "\n";
  }
}

}  // namespace fastcon
