#pragma once

#include <cstdint>
#include <vector>

#include "cic/config.hpp"

namespace cic {

// Exact zeros are reported at this level in dB curves.
inline constexpr double kDbFloor = -300.0;

struct ResponsePoint {
  double freq;       // cycles per sample
  double mag_db;     // DC-normalized, floored at kDbFloor
  double phase_rad;  // unwrapped linear-phase term
};

struct ResponseCurve {
  std::vector<ResponsePoint> points;
};

struct ImpulseResponse {
  std::vector<BigInt> taps;  // h[0 .. N(D-1)], palindromic
};

struct Fraction {
  std::int64_t num;
  std::int64_t den;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

ImpulseResponse impulse_response(const CicConfig& config);

// |sin(pi D f) / (D sin(pi f))|^N for f in [0, 0.5], at the input rate.
// Throws DomainError outside that interval.
double magnitude(const CicConfig& config, double f);

// -2 pi f N (D-1) / 2, not reduced modulo 2 pi.
double phase(const CicConfig& config, double f);

// Zeros of the response in (0, 0.5]: k/D for k = 1 .. floor(D/2).
std::vector<Fraction> null_frequencies(const CicConfig& config);

// 20 log10(mag), with zero (and anything below the floor) mapped to kDbFloor.
double to_db(double mag);

// grid_size points uniformly over [0, 0.5], endpoints included.
ResponseCurve response_curve(const CicConfig& config, std::size_t grid_size);

// Worst-case attenuation (dB, positive) of the alias band edges k/R +- fp,
// k = 1 .. floor(R/2). Requires 0 < fp < 1/(2R). Capped at -kDbFloor.
double alias_attenuation(const CicConfig& config, double fp);

// Attenuation (dB, positive) at the passband edge fp. Requires 0 < fp < 1/(2R).
double passband_droop(const CicConfig& config, double fp);

}  // namespace cic
