#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cic {

// First-order sigma-delta modulator producing a +-1 stream whose running
// mean tracks a constant input in [-1, 1]. Test stimulus only.
class SigmaDeltaModulator {
 public:
  explicit SigmaDeltaModulator(double dc);

  std::int64_t next();
  std::vector<std::int64_t> generate(std::size_t count);

  double accumulator() const noexcept { return accumulator_; }

 private:
  double dc_;
  double accumulator_ = 0.0;
  std::int64_t last_ = 1;
};

// Bits needed to carry the modulator output as signed samples.
inline constexpr int kModulatorBits = 2;

}  // namespace cic
