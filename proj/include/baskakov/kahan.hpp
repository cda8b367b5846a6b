#pragma once

#include <cmath>

namespace baskakov {

// Neumaier-compensated accumulator; keeps long series sums accurate to a few
// ulps of F regardless of term count or ordering of magnitudes.
template <typename F>
class CompensatedSum {
public:
    void add(F x) {
        const F t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }
    F value() const { return sum_ + comp_; }

private:
    F sum_ = 0;
    F comp_ = 0;
};

using KahanSum = CompensatedSum<double>;

}  // namespace baskakov
