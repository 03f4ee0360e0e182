#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cic/config.hpp"

namespace cic {

// Coefficients of (1 + z^-1 + ... + z^-(D-1))^N: N(D-1)+1 positive integers.
std::vector<BigInt> cascade_kernel(const CicConfig& config);

// Brute-force decimator in unbounded integers: full-rate convolution with
// cascade_kernel(), sampled at n = m*R + R - 1. Nothing wraps, so this is the
// ground truth the streaming engine is checked against.
std::vector<BigInt> reference_decimate(const CicConfig& config,
                                       std::span<const std::int64_t> samples);

}  // namespace cic
