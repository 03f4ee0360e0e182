#include "cic/config.hpp"

#include <sstream>

#include "cic/errors.hpp"

namespace cic {

namespace {

void require_positive(int value, const char* field) {
  if (value < 1) {
    throw ConfigError(field, std::string(field) + " must be >= 1, got " +
                                 std::to_string(value));
  }
}

}  // namespace

ValidatedConfig validate(const CicConfig& config) {
  require_positive(config.stages, "stages");
  require_positive(config.rate, "rate");
  require_positive(config.diff_delay, "diff_delay");
  require_positive(config.input_bits, "input_bits");

  ValidatedConfig out{config, std::nullopt};
  if (config.diff_delay > 2) {
    out.warning = "M outside {1,2}: differential delay " +
                  std::to_string(config.diff_delay) +
                  " is unusual for CIC decimators";
  }
  return out;
}

BigInt gain(const CicConfig& config) {
  validate(config);
  BigInt g = 1;
  const BigInt d = config.decimation_length();
  for (int i = 0; i < config.stages; ++i) g *= d;
  return g;
}

int required_width(const CicConfig& config) {
  // ceil(N log2 D) == ceil(log2 D^N), which is the bit length of D^N - 1.
  const BigInt g = gain(config);
  int growth = 0;
  if (g > 1) growth = static_cast<int>(boost::multiprecision::msb(BigInt(g - 1))) + 1;
  return config.input_bits + growth;
}

std::string to_string(const CicConfig& config) {
  std::ostringstream os;
  os << "N=" << config.stages << " R=" << config.rate
     << " M=" << config.diff_delay << " B=" << config.input_bits;
  return os.str();
}

}  // namespace cic
