// SPDX-License-Identifier: Apache-2.0
#include "logquad/csv.hpp"

#include <charconv>
#include <cmath>

namespace logquad::csv {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";
  char buf[64];
  const double a = std::abs(v);
  const auto fmt = (a < 1e-4 || a >= 1e16) ? std::chars_format::scientific : std::chars_format::fixed;
  const auto res = std::to_chars(buf, buf + sizeof buf, v, fmt);
  return std::string(buf, res.ptr);
}

std::string sweep_row(const SweepRecord& r) {
  std::string s = std::to_string(r.n);
  s += ',';
  if (!r.skipped) {
    s += format_real(r.h) + ',' + std::to_string(r.M) + ',' + std::to_string(r.N) + ',' + std::to_string(r.evals) +
         ',' + format_real(r.approx) + ',';
    if (r.abs_error) s += format_real(*r.abs_error);
    s += ',' + format_real(r.bound) + ",false";
  } else {
    s += ",,,,,,,true";
  }
  return s;
}

void write_sweep(std::ostream& out, std::span<const SweepRecord> rows) {
  out << kSweepHeader << '\n';
  for (const auto& r : rows) out << sweep_row(r) << '\n';
}

void write_compare(std::ostream& out, std::span<const LabeledRecord> rows) {
  out << "method," << kSweepHeader << '\n';
  for (const auto& r : rows) out << r.method << ',' << sweep_row(r.record) << '\n';
}

void write_checks(std::ostream& out, std::span<const checks::CheckReport> reports) {
  out << "name,samples,violations,worst_margin\n";
  for (const auto& r : reports) {
    out << r.name << ',' << r.samples << ',' << r.violations << ',' << format_real(r.worst_margin) << '\n';
  }
}

}  // namespace logquad::csv
