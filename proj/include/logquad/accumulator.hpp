// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace logquad {

/// Kahan–Babuška–Neumaier running sum. Unlike plain Kahan it stays exact when
/// an addend is larger in magnitude than the running sum.
template <typename Scalar>
class NeumaierSum {
 public:
  constexpr NeumaierSum() = default;

  constexpr void add(Scalar value) {
    using std::abs;
    const Scalar next = sum_ + value;
    if (abs(sum_) >= abs(value)) {
      compensation_ += (sum_ - next) + value;
    } else {
      compensation_ += (value - next) + sum_;
    }
    sum_ = next;
  }

  constexpr NeumaierSum& operator+=(Scalar value) {
    add(value);
    return *this;
  }

  constexpr Scalar value() const { return sum_ + compensation_; }

 private:
  Scalar sum_{0};
  Scalar compensation_{0};
};

}  // namespace logquad
