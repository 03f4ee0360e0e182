#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cic/decimator.hpp"
#include "cic/errors.hpp"

namespace cic {

// Levels on the chip's input pins at one rising CLK edge.
struct PinInputs {
  std::int64_t din = 0;    // B-bit sample, meaningful when nd is high
  bool nd = false;         // new data
  std::uint32_t ldin = 0;  // rate-change word, meaningful when we is high
  bool we = false;         // write enable for ldin
};

// Output pins as they stand after the edge.
struct PinOutputs {
  std::int64_t dout = 0;  // holds its last value between rdy pulses
  bool rdy = false;       // one-cycle pulse: dout carries a new sample
  bool rfd = true;        // ready for data on the next edge

  friend bool operator==(const PinOutputs&, const PinOutputs&) = default;
};

struct ChipConfig {
  CicConfig core;
  // Pipeline registers between the comb chain and dout. Defaults to N + 1.
  std::optional<int> latency;
  bool programmable = false;
  int rate_min = 1;
  int rate_max = 1;
};

// run_trace failure, tagged with the 1-based cycle of the failing tick.
class TraceError : public Error {
 public:
  TraceError(std::size_t cycle, const std::string& what)
      : Error("cycle " + std::to_string(cycle) + ": " + what), cycle_(cycle) {}
  std::size_t cycle() const noexcept { return cycle_; }

 private:
  std::size_t cycle_;
};

/// Cycle-accurate model of a CIC decimator chip with CLK, Din, ND, Dout,
/// RDY, RFD, LDin and WE pins.
///
/// Each tick() is one rising edge:
///   1. WE high loads LDin as the new rate (programmable chips only), resets
///      the filter core and drops RFD for the following cycle. WE wins over ND.
///   2. Otherwise ND and RFD both high consume Din into the core.
///   3. The output pipeline shifts. A core output enters it on the edge it is
///      produced and leaves `latency` edges later, raising RDY for that cycle.
///
/// Outputs already in the pipeline when the rate changes still drain.
/// On a programmable chip the register width is sized for rate_max.
class ChipModel {
 public:
  explicit ChipModel(const ChipConfig& config);

  PinOutputs tick(const PinInputs& pins);

  // Folds tick() over the trace. Errors are rethrown as TraceError.
  std::vector<PinOutputs> run_trace(std::span<const PinInputs> trace);

  int rate() const noexcept { return core_.config().rate; }
  int latency() const noexcept { return latency_; }
  int width() const noexcept { return core_.width(); }
  bool programmable() const noexcept { return programmable_; }
  std::uint64_t cycles() const noexcept { return cycles_; }
  std::uint64_t accepted() const noexcept { return accepted_; }
  const Decimator& core() const noexcept { return core_; }

 private:
  Decimator core_;
  int latency_;
  bool programmable_;
  int rate_min_;
  int rate_max_;
  std::vector<std::optional<std::int64_t>> pipeline_;
  std::size_t pipe_head_ = 0;
  bool rfd_ = true;
  std::int64_t dout_ = 0;
  std::uint64_t cycles_ = 0;
  std::uint64_t accepted_ = 0;
};

}  // namespace cic
