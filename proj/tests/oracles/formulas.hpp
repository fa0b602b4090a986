#pragma once

// Hand evaluations of the component equations, written straight from the
// definitions with exp/log instead of the library's pow-based code.

#include <cmath>
#include <cstdint>

namespace oracle {

struct Tech {
  double vdd = 0.9;
  double cgate = 0.7e-15;
  double dgate = 47.8e-12;
  double agate = 0.614;
  double k1 = 100e-15, k2 = 1e-18, k3 = 6.53e-12, k4 = 640e-12;
  double k5 = 0.0369, k6 = 1.206, k7 = 50e-15;
  double fs = 0.5, k = 2.0;
};

inline double cell_array(const Tech& t, double bw, double di, double dout, double a) {
  return bw * di * dout * a * t.cgate * t.vdd * t.vdd / 2.0;
}

inline double adc_e(const Tech& t, int r) {
  return (t.k1 * r + t.k2 * std::exp(r * std::log(4.0))) * t.vdd * t.vdd;
}

inline double adc_d(const Tech& t, int r, double di) { return r * t.k3 * di + r * t.k4; }

inline double adc_a(const Tech& t, int r) {
  return std::exp(std::log(10.0) * (t.k6 - t.k5 * r) + std::log(2.0) * r);
}

inline double dac_e(const Tech& t, int r) { return r * t.k7 * t.vdd * t.vdd; }

// Smallest integer r with 2^r >= 2^bits * k * fs * sqrt(d_i), at least 1.
inline int adc_res(const Tech& t, int bits, double di) {
  const double target = std::ldexp(t.k * t.fs * std::sqrt(di), bits);
  int r = 1;
  while (std::ldexp(1.0, r) < target * (1.0 - 1e-12)) ++r;
  return r;
}

}  // namespace oracle
