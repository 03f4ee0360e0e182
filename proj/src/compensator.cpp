#include "cic/compensator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <Eigen/Dense>

#include "cic/errors.hpp"

namespace cic {

namespace {

constexpr double kRidge = 1e-12;

void check_output_edge(double fp_out) {
  if (!(fp_out > 0.0 && fp_out < 0.5)) {
    std::ostringstream os;
    os << "output-rate passband edge " << fp_out << " outside (0, 0.5)";
    throw DomainError(os.str());
  }
}

void check_fir(const FirFilter& fir) {
  if (fir.taps.empty()) throw ParameterError("FIR filter needs at least one tap");
}

double cic_at_output_rate(const CicConfig& config, double g) {
  return magnitude(config, g / config.rate);
}

}  // namespace

FirFilter design_compensator(const CicConfig& config, int tap_count, double fp_out,
                             std::size_t grid_size) {
  validate(config);
  if (tap_count < 1 || tap_count % 2 == 0) {
    throw ParameterError("compensator tap count must be odd and positive, got " +
                         std::to_string(tap_count));
  }
  check_output_edge(fp_out);
  if (grid_size < 2) throw ParameterError("design grid must have >= 2 points");

  const int half = (tap_count - 1) / 2;
  if (half == 0) return FirFilter{{1.0}};

  // With c_0 = 1 - 2 sum c_k the amplitude is 1 + sum_k c_k * 2(cos(2 pi g k) - 1),
  // leaving an unconstrained fit of the side taps c_1..c_K.
  const auto rows = static_cast<Eigen::Index>(grid_size);
  Eigen::MatrixXd basis(rows, half);
  Eigen::VectorXd target(rows);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const double g = fp_out * static_cast<double>(i) / static_cast<double>(rows - 1);
    const double cic = cic_at_output_rate(config, g);
    for (int k = 1; k <= half; ++k) {
      basis(i, k - 1) = cic * 2.0 * (std::cos(2.0 * std::numbers::pi * g * k) - 1.0);
    }
    target(i) = 1.0 - cic;
  }

  Eigen::MatrixXd normal = basis.transpose() * basis;
  const double ridge = kRidge * normal.diagonal().maxCoeff();
  normal.diagonal().array() += ridge;
  const Eigen::VectorXd side = normal.ldlt().solve(basis.transpose() * target);

  FirFilter fir;
  fir.taps.assign(static_cast<std::size_t>(tap_count), 0.0);
  double centre = 1.0;
  for (int k = 1; k <= half; ++k) {
    fir.taps[half - k] = side(k - 1);
    fir.taps[half + k] = side(k - 1);
    centre -= 2.0 * side(k - 1);
  }
  fir.taps[half] = centre;
  return fir;
}

std::complex<double> fir_response(const FirFilter& fir, double g) {
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k < fir.taps.size(); ++k) {
    sum += fir.taps[k] * std::polar(1.0, -2.0 * std::numbers::pi * g * static_cast<double>(k));
  }
  return sum;
}

ResponseCurve composite_response(const CicConfig& config, const FirFilter& fir,
                                 std::size_t grid_size) {
  validate(config);
  check_fir(fir);
  if (grid_size < 2) throw ParameterError("grid size must be >= 2");

  const double fir_delay = static_cast<double>(fir.taps.size() - 1) / 2.0;
  ResponseCurve curve;
  curve.points.reserve(grid_size);
  const auto steps = static_cast<double>(grid_size - 1);
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double g = static_cast<double>(i) / (2.0 * steps);
    const double mag = cic_at_output_rate(config, g) * std::abs(fir_response(fir, g));
    const double ph = phase(config, g / config.rate) - 2.0 * std::numbers::pi * g * fir_delay;
    curve.points.push_back({g, to_db(mag), ph});
  }
  return curve;
}

double passband_deviation(const CicConfig& config, const FirFilter& fir, double fp_out,
                          std::size_t grid_size) {
  validate(config);
  check_fir(fir);
  check_output_edge(fp_out);
  if (grid_size < 2) throw ParameterError("grid size must be >= 2");

  double worst = 0.0;
  for (std::size_t i = 0; i < grid_size; ++i) {
    const double g = fp_out * static_cast<double>(i) / static_cast<double>(grid_size - 1);
    const double mag = cic_at_output_rate(config, g) * std::abs(fir_response(fir, g));
    worst = std::max(worst, std::abs(to_db(mag)));
  }
  return worst;
}

}  // namespace cic
