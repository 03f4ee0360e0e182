#include "cic/decimator.hpp"

#include <string>

#include "cic/errors.hpp"

namespace cic {

namespace {

int resolve_width(const CicConfig& config, std::optional<int> width_override) {
  const int required = required_width(config);
  if (width_override && *width_override < required) {
    throw WidthError("width " + std::to_string(*width_override) +
                     " is below the required " + std::to_string(required) +
                     " bits for " + to_string(config));
  }
  const int width = width_override.value_or(required);
  if (width > kMaxRegisterWidth) {
    throw WidthError(to_string(config) + " needs " + std::to_string(width) +
                     " bit registers; at most " +
                     std::to_string(kMaxRegisterWidth) + " are supported");
  }
  return width;
}

}  // namespace

Decimator::Decimator(const CicConfig& config, std::optional<int> width_override)
    : config_(validate(config).config),
      width_(resolve_width(config_, width_override)),
      input_min_(RegisterWord::min_value(config_.input_bits)),
      input_max_(RegisterWord::max_value(config_.input_bits)),
      integrators_(config_.stages, RegisterWord(width_)),
      combs_(static_cast<std::size_t>(config_.stages) * config_.diff_delay,
             RegisterWord(width_)) {}

void Decimator::check_input(std::int64_t x) const {
  if (x < input_min_ || x > input_max_) {
    throw DomainError("sample " + std::to_string(x) + " outside the " +
                      std::to_string(config_.input_bits) + "-bit signed range [" +
                      std::to_string(input_min_) + ", " +
                      std::to_string(input_max_) + "]");
  }
}

std::optional<std::int64_t> Decimator::push(std::int64_t x) {
  check_input(x);
  return step(x);
}

std::optional<std::int64_t> Decimator::step(std::int64_t x) {

  RegisterWord acc(width_, x);
  for (auto& integrator : integrators_) {
    integrator += acc;
    acc = integrator;
  }
  ++samples_in_;

  if (++phase_ < config_.rate) return std::nullopt;
  phase_ = 0;
  ++samples_out_;
  return run_combs(acc).value();
}

RegisterWord Decimator::run_combs(RegisterWord value) {
  const int delay = config_.diff_delay;
  for (int stage = 0; stage < config_.stages; ++stage) {
    RegisterWord& oldest = combs_[static_cast<std::size_t>(stage) * delay + comb_pos_];
    const RegisterWord in = value;
    value -= oldest;
    oldest = in;
  }
  if (++comb_pos_ == delay) comb_pos_ = 0;
  return value;
}

std::vector<std::int64_t> Decimator::process(std::span<const std::int64_t> samples) {
  // Reject the whole block up front so a bad sample leaves the state untouched.
  for (const std::int64_t x : samples) check_input(x);

  std::vector<std::int64_t> out;
  out.reserve((phase_ + samples.size()) / config_.rate);
  for (const std::int64_t x : samples) {
    if (auto y = step(x)) out.push_back(*y);
  }
  return out;
}

void Decimator::reset() {
  for (auto& r : integrators_) r = RegisterWord(width_);
  for (auto& r : combs_) r = RegisterWord(width_);
  comb_pos_ = 0;
  phase_ = 0;
  samples_in_ = 0;
  samples_out_ = 0;
}

}  // namespace cic
