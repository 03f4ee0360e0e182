#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "analysis.hpp"
#include "config.hpp"

namespace cic {

// FIR running at the decimated rate f_s / R. Designed filters are symmetric
// with an odd number of taps.
struct FirFilter {
  std::vector<double> taps;
};

inline constexpr std::size_t kDefaultDesignGrid = 512;
inline constexpr std::size_t kDefaultDeviationGrid = 4097;

/// Least-squares droop compensator.
///
/// Chooses symmetric taps minimizing sum_g (A(g) * cic(g / R) - 1)^2 over a
/// uniform grid of `grid_size` output-rate frequencies in [0, fp_out], where
/// A is the FIR's zero-phase amplitude. The DC gain is pinned to exactly 1 by
/// eliminating the centre tap, and the normal equations carry a 1e-12
/// relative ridge term.
///
/// Throws ParameterError for an even or non-positive tap_count or a grid of
/// fewer than 2 points, DomainError unless 0 < fp_out < 0.5.
FirFilter design_compensator(const CicConfig& config, int tap_count, double fp_out,
                             std::size_t grid_size = kDefaultDesignGrid);

// sum_k taps[k] e^{-j 2 pi g k} at output-rate frequency g.
std::complex<double> fir_response(const FirFilter& fir, double g);

// CIC followed by the FIR on the output-rate axis g in [0, 0.5].
ResponseCurve composite_response(const CicConfig& config, const FirFilter& fir,
                                 std::size_t grid_size);

// Largest |composite dB| over [0, fp_out], sampled on grid_size points.
double passband_deviation(const CicConfig& config, const FirFilter& fir, double fp_out,
                          std::size_t grid_size = kDefaultDeviationGrid);

}  // namespace cic
