#pragma once

#include <map>

namespace hplus {

/// Finitely many atoms at integers with nonnegative weights.
class AtomicMeasure {
public:
    AtomicMeasure() = default;

    static AtomicMeasure dirac(long location = 0);

    void set_weight(long location, double weight);
    void add_weight(long location, double weight);
    double weight(long location) const;
    const std::map<long, double>& atoms() const { return atoms_; }

    double total_mass() const;
    double moment(int order) const;

    /// Mass known to be missing because of truncation.
    double mass_deficit() const { return mass_deficit_; }
    void set_mass_deficit(double deficit) { mass_deficit_ = deficit; }
    int kmax() const { return kmax_; }
    int pmax() const { return pmax_; }
    void set_truncation(int kmax, int pmax) {
        kmax_ = kmax;
        pmax_ = pmax;
    }

private:
    std::map<long, double> atoms_;
    double mass_deficit_ = 0.0;
    int kmax_ = 0;
    int pmax_ = 0;
};

/// f_k(t) = sum_{p=0}^{pmax} t^{|k|+2p} / ((|k|+p)! p!).
double bessel_f(int k, double t, int pmax);

/// Atoms e^{-t} f_{|k|}(t/2) at |k| <= kmax, each series cut after pmax.
AtomicMeasure classical_bessel(double t, int kmax, int pmax);

/// Discrete convolution; support is the sumset, deficits combine.
AtomicMeasure convolve(const AtomicMeasure& a, const AtomicMeasure& b);

/// sum_k weight(k) e^{k y}.
double fourier(const AtomicMeasure& m, double y);

/// Largest absolute weight difference over the union of supports.
double sup_distance(const AtomicMeasure& a, const AtomicMeasure& b);

}  // namespace hplus
