#pragma once

#include <cstddef>

#include "bnls/types.hpp"

namespace bnls {

// Uniformly sampled complex signal of time. Signals fed to the causal
// fractional operators start at t0 = 0 and are implicitly zero for t < 0.
struct TimeSignal {
    CVec samples;
    double t0 = 0.0;
    double dt = 0.0;
    bool causal = true;

    TimeSignal() = default;
    TimeSignal(CVec s, double t0_, double dt_, bool causal_ = true)
        : samples(std::move(s)), t0(t0_), dt(dt_), causal(causal_) {}

    std::size_t size() const { return samples.size(); }
    double time(std::size_t i) const { return t0 + dt * static_cast<double>(i); }

    static TimeSignal zeros(std::size_t n, double dt, double t0 = 0.0) {
        return TimeSignal(CVec(n, Complex(0.0)), t0, dt, true);
    }

    void validate() const;

    TimeSignal& operator+=(const TimeSignal& other);
    TimeSignal& operator*=(Complex c);
};

TimeSignal operator+(TimeSignal a, const TimeSignal& b);
TimeSignal operator-(TimeSignal a, const TimeSignal& b);
TimeSignal operator*(Complex c, TimeSignal a);

double sup_abs(const TimeSignal& f);

}  // namespace bnls
