#pragma once
// Compensated (Neumaier) accumulation. Used wherever a result must be
// independent of how work is split across threads: partial sums are built
// in fixed order and reduced in fixed order.

#include <cmath>

namespace qtl::summation {

struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) noexcept {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const noexcept { return sum + comp; }
};

}  // namespace qtl::summation
