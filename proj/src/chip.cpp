#include "cic/chip.hpp"

namespace cic {

namespace {

int chip_latency(const ChipConfig& config) {
  const int latency = config.latency.value_or(config.core.stages + 1);
  if (latency < 1) {
    throw ParameterError("chip latency must be >= 1, got " + std::to_string(latency));
  }
  return latency;
}

int chip_width(const ChipConfig& config) {
  if (!config.programmable) return required_width(config.core);
  if (config.rate_min < 1 || config.rate_min > config.rate_max ||
      config.core.rate < config.rate_min || config.core.rate > config.rate_max) {
    throw ParameterError("programmable rate range [" + std::to_string(config.rate_min) +
                         ", " + std::to_string(config.rate_max) +
                         "] must be valid and contain the initial rate " +
                         std::to_string(config.core.rate));
  }
  CicConfig widest = config.core;
  widest.rate = config.rate_max;
  return required_width(widest);
}

}  // namespace

ChipModel::ChipModel(const ChipConfig& config)
    : core_(validate(config.core).config, chip_width(config)),
      latency_(chip_latency(config)),
      programmable_(config.programmable),
      rate_min_(config.rate_min),
      rate_max_(config.rate_max),
      pipeline_(static_cast<std::size_t>(latency_)) {}

PinOutputs ChipModel::tick(const PinInputs& pins) {
  std::optional<std::int64_t> produced;
  bool loaded = false;

  if (pins.we) {
    if (!programmable_) throw ProtocolError("WE asserted on a fixed-rate chip");
    if (pins.ldin < static_cast<std::uint32_t>(rate_min_) ||
        pins.ldin > static_cast<std::uint32_t>(rate_max_)) {
      throw ProtocolError("LDin rate " + std::to_string(pins.ldin) + " outside [" +
                          std::to_string(rate_min_) + ", " +
                          std::to_string(rate_max_) + "]");
    }
    CicConfig next = core_.config();
    next.rate = static_cast<int>(pins.ldin);
    core_ = Decimator(next, core_.width());
    loaded = true;
  } else if (pins.nd) {
    if (pins.din < core_.input_min() || pins.din > core_.input_max()) {
      throw DomainError("Din " + std::to_string(pins.din) + " outside the " +
                        std::to_string(core_.config().input_bits) +
                        "-bit signed range");
    }
    if (rfd_) {
      produced = core_.push(pins.din);
      ++accepted_;
    }
  }

  PinOutputs out;
  auto& slot = pipeline_[pipe_head_];
  if (slot) {
    dout_ = *slot;
    out.rdy = true;
  }
  slot = produced;
  pipe_head_ = (pipe_head_ + 1) % pipeline_.size();

  rfd_ = !loaded;
  out.dout = dout_;
  out.rfd = rfd_;
  ++cycles_;
  return out;
}

std::vector<PinOutputs> ChipModel::run_trace(std::span<const PinInputs> trace) {
  std::vector<PinOutputs> outputs;
  outputs.reserve(trace.size());
  for (std::size_t i = 0; i < trace.size(); ++i) {
    try {
      outputs.push_back(tick(trace[i]));
    } catch (const TraceError&) {
      throw;
    } catch (const Error& e) {
      throw TraceError(i + 1, e.what());
    }
  }
  return outputs;
}

}  // namespace cic
