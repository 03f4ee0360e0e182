#include "cic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cic/errors.hpp"
#include "cic/reference.hpp"

namespace cic {

namespace {

// sin(pi x) with the argument reduced to [-1/2, 1/2] first, so integer x
// gives an exact zero.
double sin_pi(double x) {
  const double n = std::nearbyint(x);
  const double s = std::sin(std::numbers::pi * (x - n));
  return std::fmod(n, 2.0) == 0.0 ? s : -s;
}

void check_frequency(double f) {
  if (!(f >= 0.0 && f <= 0.5)) {
    std::ostringstream os;
    os << "normalized frequency " << f << " outside [0, 0.5]";
    throw DomainError(os.str());
  }
}

void check_passband_edge(const CicConfig& config, double fp) {
  const double limit = 0.5 / config.rate;
  if (!(fp > 0.0 && fp < limit)) {
    std::ostringstream os;
    os << "passband edge " << fp << " outside (0, " << limit << ")";
    throw DomainError(os.str());
  }
}

}  // namespace

ImpulseResponse impulse_response(const CicConfig& config) {
  return ImpulseResponse{cascade_kernel(config)};
}

double magnitude(const CicConfig& config, double f) {
  validate(config);
  check_frequency(f);
  if (f == 0.0) return 1.0;
  const auto d = static_cast<double>(config.decimation_length());
  const double ratio = sin_pi(d * f) / (d * sin_pi(f));
  return std::pow(std::abs(ratio), config.stages);
}

double phase(const CicConfig& config, double f) {
  validate(config);
  check_frequency(f);
  const auto d = static_cast<double>(config.decimation_length());
  return -std::numbers::pi * f * config.stages * (d - 1.0);
}

std::vector<Fraction> null_frequencies(const CicConfig& config) {
  validate(config);
  const std::int64_t d = config.decimation_length();
  std::vector<Fraction> nulls;
  for (std::int64_t k = 1; k <= d / 2; ++k) nulls.push_back({k, d});
  return nulls;
}

double to_db(double mag) {
  if (!(mag > 0.0)) return kDbFloor;
  return std::max(kDbFloor, 20.0 * std::log10(mag));
}

ResponseCurve response_curve(const CicConfig& config, std::size_t grid_size) {
  if (grid_size < 2) throw ParameterError("grid size must be >= 2");
  ResponseCurve curve;
  curve.points.reserve(grid_size);
  const auto steps = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    // i / (2 (n-1)) rounds once, so grid points such as 1/50 land exactly.
    const double f = static_cast<double>(i) / (2.0 * steps);
    curve.points.push_back({f, to_db(magnitude(config, f)), phase(config, f)});
  }
  return curve;
}

double alias_attenuation(const CicConfig& config, double fp) {
  validate(config);
  check_passband_edge(config, fp);
  double worst = -kDbFloor;
  for (int k = 1; k <= config.rate / 2; ++k) {
    const double centre = static_cast<double>(k) / config.rate;
    for (const double f : {centre - fp, centre + fp}) {
      if (f < 0.0 || f > 0.5) continue;
      worst = std::min(worst, -to_db(magnitude(config, f)));
    }
  }
  return worst;
}

double passband_droop(const CicConfig& config, double fp) {
  validate(config);
  check_passband_edge(config, fp);
  return -to_db(magnitude(config, fp));
}

}  // namespace cic
