#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cic/config.hpp"

namespace cicfilt {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

// Bad flag combination or value; maps to kExitUsage.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Streams standing in for the path "-".
struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct DecimateOptions {
  cic::CicConfig config;
  std::string in = "-";
  std::string out = "-";
};

struct ResponseOptions {
  cic::CicConfig config;
  std::size_t grid = 1001;
  std::optional<double> fp;
  std::string out = "-";
};

struct CompensateOptions {
  cic::CicConfig config;
  int taps = 15;
  double fp_out = 0.25;
  std::size_t grid = 512;
  std::string out = "-";
};

struct ChipsimOptions {
  cic::CicConfig config;
  std::optional<int> latency;
  std::optional<int> rate_min;
  std::optional<int> rate_max;
  std::string in = "-";
  std::string out = "-";
};

struct SdmOptions {
  double dc = 0.0;
  std::size_t count = 1000;
  std::string out = "-";
};

struct InfoOptions {
  cic::CicConfig config;
};

// Each returns a process exit code; errors are reported on streams.err.
int run_decimate(const DecimateOptions& opts, Streams streams);
int run_response(const ResponseOptions& opts, Streams streams);
int run_compensate(const CompensateOptions& opts, Streams streams);
int run_chipsim(const ChipsimOptions& opts, Streams streams);
int run_sdm(const SdmOptions& opts, Streams streams);
int run_info(const InfoOptions& opts, Streams streams);

}  // namespace cicfilt
