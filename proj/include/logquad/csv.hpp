// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "logquad/checks.hpp"
#include "logquad/engine.hpp"

namespace logquad::csv {

inline constexpr std::string_view kSweepHeader = "n,h,M,N,evals,approx,abs_error,bound,skipped";

/// Shortest round-trip decimal; scientific for |v| < 1e-4 or |v| ≥ 1e16.
std::string format_real(double v);

void write_sweep(std::ostream& out, std::span<const SweepRecord> rows);
std::string sweep_row(const SweepRecord& row);

/// Compare output: the sweep schema prefixed by a method column.
struct LabeledRecord {
  std::string method;
  SweepRecord record;
};
void write_compare(std::ostream& out, std::span<const LabeledRecord> rows);

void write_checks(std::ostream& out, std::span<const checks::CheckReport> reports);

}  // namespace logquad::csv
