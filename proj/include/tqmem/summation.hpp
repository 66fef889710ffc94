#pragma once

#ifdef __FAST_MATH__
#error "compensated summation is meaningless under -ffast-math"
#endif

#include <cmath>

namespace tqm {

// Neumaier's variant of Kahan summation: the carry also captures the
// low-order bits of the running sum when the addend dominates.
class NeumaierSum {
public:
    NeumaierSum& operator+=(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

}  // namespace tqm
