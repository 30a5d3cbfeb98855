#include "bnls/time_signal.hpp"

#include <algorithm>
#include <stdexcept>

#include "bnls/errors.hpp"

namespace bnls {

void TimeSignal::validate() const {
    if (samples.empty()) throw config_error("TimeSignal: empty");
    if (!(dt > 0.0)) throw config_error("TimeSignal: dt must be positive");
    if (causal) {
        for (std::size_t i = 0; i < samples.size(); ++i) {
            if (time(i) < -dt * 1e-9 && samples[i] != Complex(0.0))
                throw config_error("TimeSignal: marked causal but nonzero at t < 0");
        }
    }
}

TimeSignal& TimeSignal::operator+=(const TimeSignal& other) {
    if (other.size() != size()) throw config_error("TimeSignal: size mismatch");
    for (std::size_t i = 0; i < samples.size(); ++i) samples[i] += other.samples[i];
    causal = causal && other.causal;
    return *this;
}

TimeSignal& TimeSignal::operator*=(Complex c) {
    for (auto& s : samples) s *= c;
    return *this;
}

TimeSignal operator+(TimeSignal a, const TimeSignal& b) { return a += b; }

TimeSignal operator-(TimeSignal a, const TimeSignal& b) {
    if (a.size() != b.size()) throw config_error("TimeSignal: size mismatch");
    for (std::size_t i = 0; i < a.samples.size(); ++i) a.samples[i] -= b.samples[i];
    return a;
}

TimeSignal operator*(Complex c, TimeSignal a) { return a *= c; }

double sup_abs(const TimeSignal& f) {
    double m = 0.0;
    for (const auto& s : f.samples) m = std::max(m, std::abs(s));
    return m;
}

}  // namespace bnls
