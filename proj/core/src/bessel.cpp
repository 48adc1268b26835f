#include "hplus/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace hplus {

AtomicMeasure AtomicMeasure::dirac(long location) {
    AtomicMeasure m;
    m.set_weight(location, 1.0);
    return m;
}

void AtomicMeasure::set_weight(long location, double weight) {
    if (!(weight >= 0.0)) throw std::invalid_argument("AtomicMeasure: weights must be nonnegative");
    atoms_[location] = weight;
}

void AtomicMeasure::add_weight(long location, double weight) {
    if (!(weight >= 0.0)) throw std::invalid_argument("AtomicMeasure: weights must be nonnegative");
    atoms_[location] += weight;
}

double AtomicMeasure::weight(long location) const {
    auto it = atoms_.find(location);
    return it == atoms_.end() ? 0.0 : it->second;
}

double AtomicMeasure::total_mass() const {
    double acc = 0.0;
    for (const auto& [x, w] : atoms_) acc += w;
    return acc;
}

double AtomicMeasure::moment(int order) const {
    double acc = 0.0;
    for (const auto& [x, w] : atoms_) acc += w * std::pow(static_cast<double>(x), order);
    return acc;
}

double bessel_f(int k, double t, int pmax) {
    if (pmax < 0) throw std::invalid_argument("bessel_f: pmax must be nonnegative");
    const int a = std::abs(k);
    // term_0 = t^a / a!, term_p = term_{p-1} t^2 / ((a+p) p)
    double term = 1.0;
    for (int i = 1; i <= a; ++i) term *= t / i;
    double sum = term;
    for (int p = 1; p <= pmax; ++p) {
        term *= t * t / (static_cast<double>(a + p) * p);
        sum += term;
    }
    return sum;
}

AtomicMeasure classical_bessel(double t, int kmax, int pmax) {
    if (!(t > 0.0)) throw std::invalid_argument("classical_bessel: t must be positive");
    if (kmax < 0) throw std::invalid_argument("classical_bessel: kmax must be nonnegative");
    AtomicMeasure m;
    const double scale = std::exp(-t);
    for (long k = -kmax; k <= kmax; ++k) m.set_weight(k, scale * bessel_f(static_cast<int>(k), t / 2.0, pmax));
    m.set_truncation(kmax, pmax);
    m.set_mass_deficit(std::max(0.0, 1.0 - m.total_mass()));
    return m;
}

AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b) {
    AtomicMeasure out;
    for (const auto& [x, wx] : a.atoms())
        for (const auto& [y, wy] : b.atoms()) out.add_weight(x + y, wx * wy);
    out.set_truncation(a.kmax() + b.kmax(), std::min(a.pmax(), b.pmax()));
    out.set_mass_deficit(std::max(0.0, 1.0 - out.total_mass()));
    return out;
}

double fourier(const AtomicMeasure& m, double y) {
    double acc = 0.0;
    for (const auto& [x, w] : m.atoms()) acc += w * std::exp(static_cast<double>(x) * y);
    return acc;
}

double sup_distance(const AtomicMeasure& a, const AtomicMeasure& b) {
    double worst = 0.0;
    for (const auto& [x, w] : a.atoms()) worst = std::max(worst, std::abs(w - b.weight(x)));
    for (const auto& [x, w] : b.atoms()) worst = std::max(worst, std::abs(w - a.weight(x)));
    return worst;
}

}  // namespace hplus
