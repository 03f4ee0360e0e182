#include "cic/reference.hpp"

#include <algorithm>

namespace cic {

std::vector<BigInt> cascade_kernel(const CicConfig& config) {
  validate(config);
  const auto d = static_cast<std::size_t>(config.decimation_length());

  std::vector<BigInt> kernel{1};
  for (int stage = 0; stage < config.stages; ++stage) {
    // Convolving with a length-D boxcar is a running sum over a D-wide window.
    std::vector<BigInt> next(kernel.size() + d - 1);
    BigInt window = 0;
    for (std::size_t n = 0; n < next.size(); ++n) {
      if (n < kernel.size()) window += kernel[n];
      if (n >= d && n - d < kernel.size()) window -= kernel[n - d];
      next[n] = window;
    }
    kernel = std::move(next);
  }
  return kernel;
}

std::vector<BigInt> reference_decimate(const CicConfig& config,
                                       std::span<const std::int64_t> samples) {
  const auto kernel = cascade_kernel(config);
  const auto rate = static_cast<std::size_t>(config.rate);

  std::vector<BigInt> out;
  out.reserve(samples.size() / rate);
  for (std::size_t n = rate - 1; n < samples.size(); n += rate) {
    BigInt acc = 0;
    const std::size_t taps = std::min(kernel.size(), n + 1);
    for (std::size_t k = 0; k < taps; ++k) acc += kernel[k] * samples[n - k];
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace cic
