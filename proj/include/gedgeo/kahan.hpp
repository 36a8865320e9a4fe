#pragma once

#include <cmath>

namespace gedgeo {

// Kahan-Babuska compensated accumulator. Audit slacks are asserted at the
// 1e-9 level, so plain left-to-right summation over a few thousand terms
// would already eat a noticeable fraction of the budget.
class KahanSum {
  public:
    void add(double x) {
        double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

}  // namespace gedgeo
