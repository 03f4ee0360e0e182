#include "cic/sdm.hpp"

#include <cmath>
#include <sstream>

#include "cic/errors.hpp"

namespace cic {

SigmaDeltaModulator::SigmaDeltaModulator(double dc) : dc_(dc) {
  if (!(std::abs(dc) <= 1.0)) {
    std::ostringstream os;
    os << "modulator input " << dc << " outside [-1, 1]";
    throw DomainError(os.str());
  }
}

std::int64_t SigmaDeltaModulator::next() {
  accumulator_ += dc_ - static_cast<double>(last_);
  last_ = accumulator_ >= 0.0 ? 1 : -1;
  return last_;
}

std::vector<std::int64_t> SigmaDeltaModulator::generate(std::size_t count) {
  std::vector<std::int64_t> out(count);
  for (auto& bit : out) bit = next();
  return out;
}

}  // namespace cic
