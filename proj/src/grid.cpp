#include "bnls/grid.hpp"

#include <algorithm>
#include <cmath>

#include "bnls/errors.hpp"

namespace bnls {

void GridSpec::validate() const {
    if (!(L > 0.0)) throw config_error("GridSpec: L must be positive");
    if (!(T > 0.0)) throw config_error("GridSpec: T must be positive");
    if (nx < 16) throw config_error("GridSpec: nx must be >= 16");
    if ((nx & (nx - 1)) != 0) throw config_error("GridSpec: nx must be a power of two");
    if (nt < 2) throw config_error("GridSpec: nt must be >= 2");
}

Field::Field(const GridSpec& g, const SpaceSignal& initial) : Field(g) {
    if (initial.size() != g.nx) throw config_error("Field: initial data size mismatch");
    std::copy(initial.samples.begin(), initial.samples.end(), data.begin());
}

Field& Field::operator+=(const Field& other) {
    if (!(grid == other.grid)) throw config_error("Field: grid mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] += other.data[i];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    if (!(grid == other.grid)) throw config_error("Field: grid mismatch");
    for (std::size_t i = 0; i < data.size(); ++i) data[i] -= other.data[i];
    return *this;
}

Field& Field::operator*=(Complex c) {
    for (auto& v : data) v *= c;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }

double max_abs(const Field& u) {
    double m = 0.0;
    for (const auto& v : u.data) m = std::max(m, std::abs(v));
    return m;
}

double rel_l2_distance(const Field& a, const Field& b) {
    if (!(a.grid == b.grid)) throw config_error("rel_l2_distance: grid mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.data.size(); ++i) {
        num += std::norm(a.data[i] - b.data[i]);
        den += std::norm(b.data[i]);
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

}  // namespace bnls
