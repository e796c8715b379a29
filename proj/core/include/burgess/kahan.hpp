#pragma once

#include <complex>

namespace burgess {

// Kahan compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        double y = x - carry;
        double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
    }
};

struct KahanComplex {
    Kahan re, im;

    void add(std::complex<double> z) {
        re.add(z.real());
        im.add(z.imag());
    }
    std::complex<double> value() const { return {re.sum, im.sum}; }
};

} // namespace burgess
