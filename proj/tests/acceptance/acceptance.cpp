// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cic/analysis.hpp"
#include "cic/chip.hpp"
#include "cic/compensator.hpp"
#include "cic/decimator.hpp"
#include "cic/reference.hpp"
#include "cic/sdm.hpp"
#include "oracles.hpp"

namespace {

using namespace cic;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

constexpr CicConfig kTableOne{2, 50, 1, 1};

Outcome table_one() {
  const double droop = passband_droop(kTableOne, 0.005);
  const double alias = alias_attenuation(kTableOne, 0.005);
  const bool ok = std::abs(droop - 1.82) <= 0.01 && std::abs(alias - 20.9) <= 0.05;
  return {ok, fmt("droop=%.4f dB (1.82+-0.01), alias=%.4f dB (20.9+-0.05)", droop, alias)};
}

Outcome dc_gain() {
  const CicConfig config{2, 50, 1, 8};
  bool ok = gain(config) == 2500;
  // Both full-scale levels of an 8-bit input.
  for (const std::int64_t level : {std::int64_t{-128}, std::int64_t{127}}) {
    Decimator d(config);
    const auto out = d.process(std::vector<std::int64_t>(1000, level));
    for (std::size_t m = 2; m < out.size(); ++m) ok = ok && out[m] == 2500 * level;
  }
  return {ok, "gain(2,50,1)=" + gain(config).str() + ", steady state 2500*x for x in {-128,127}"};
}

Outcome figure_eight() {
  std::vector<std::int64_t> x(160, 0);
  x[0] = 1;
  Decimator d({4, 8, 4, 16});
  const auto out = d.process(x);
  return {out.size() == 20, fmt("160 samples -> %.0f outputs (want 20)", static_cast<double>(out.size()))};
}

Outcome oracle_equivalence() {
  std::mt19937_64 rng(20240601);
  int cases = 0, mismatches = 0;
  for (; cases < 250; ++cases) {
    const auto config = testing::random_small_config(rng, 3, 8, 2, 8);
    const auto len = std::uniform_int_distribution<std::size_t>(0, 1000)(rng);
    const auto x = testing::random_block(rng, config.input_bits, len);
    Decimator d(config);
    const auto got = d.process(x);
    const auto want = reference_decimate(config, x);
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) same = BigInt(got[i]) == want[i];
    mismatches += same ? 0 : 1;
  }
  return {mismatches == 0, fmt("%.0f random cases, %.0f mismatches", cases, mismatches)};
}

Outcome closed_form_vs_polynomial() {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> freq(0.0, 0.5);
  double worst = 0.0;
  for (int c = 0; c < 20; ++c) {
    CicConfig config;
    do {
      config = testing::random_small_config(rng, 4, 64, 4, 1);
    } while (config.decimation_length() > 64);
    const auto taps = impulse_response(config).taps;
    for (int i = 0; i < 100; ++i) {
      const double f = freq(rng);
      const double want = testing::polynomial_magnitude(taps, f);
      const double got = magnitude(config, f);
      worst = std::max(worst, std::abs(got - want) / want);
    }
  }
  return {worst <= 1e-9, fmt("max relative error %.3g (<= 1e-9)", worst)};
}

Outcome nulls() {
  double worst = 0.0;
  int count = 0;
  for (int d = 2; d <= 64; ++d) {
    for (int n = 1; n <= 4; ++n) {
      const CicConfig config{n, d, 1, 1};
      for (const auto& null : null_frequencies(config)) {
        worst = std::max(worst, magnitude(config, null.value()));
        ++count;
      }
    }
  }
  const double eps = std::numeric_limits<double>::epsilon();
  return {worst <= eps, fmt("%.0f nulls for D in 2..64, max |H| = %.3g (<= %.3g)", count, worst, eps)};
}

Outcome width_sufficiency() {
  std::mt19937_64 rng(31337);
  int tight = 0;
  bool ok = true;
  for (int c = 0; c < 50; ++c) {
    const auto config = testing::random_small_config(rng, 4, 10, 2, 10);
    const int w = required_width(config);
    const BigInt lo = -(BigInt(1) << (w - 1)), hi = (BigInt(1) << (w - 1)) - 1;
    const std::int64_t in_lo = -(std::int64_t{1} << (config.input_bits - 1));
    const std::int64_t in_hi = (std::int64_t{1} << (config.input_bits - 1)) - 1;
    const auto len = static_cast<std::size_t>(config.stages * config.decimation_length() + 4 * config.rate);

    // Worst case per output: every tap multiplies a full-scale sample of the
    // sign that pushes the sum outward.
    BigInt kernel_sum = 0;
    for (const auto& t : cascade_kernel(config)) kernel_sum += t;
    ok = ok && kernel_sum * in_lo >= lo && kernel_sum * in_hi <= hi;

    // Random and alternating inputs in unbounded integers stay inside.
    auto x = testing::random_block(rng, config.input_bits, 400);
    for (const auto& y : reference_decimate(config, x)) ok = ok && y >= lo && y <= hi;

    // Constant full scale reaches a value that W-1 bits cannot represent.
    const auto y = reference_decimate(config, std::vector<std::int64_t>(len, in_lo));
    const BigInt lo_narrow = -(BigInt(1) << (w - 2));
    const bool needs_w = w >= 2 ? y.back() < lo_narrow : true;
    tight += needs_w ? 1 : 0;
    ok = ok && y.back() >= lo && needs_w;
  }
  return {ok, fmt("50 configs: worst case fits W bits; W-1 insufficient in %.0f/50", tight)};
}

Outcome chip_golden() {
  std::mt19937_64 rng(8080);
  int mismatches = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto config = testing::random_small_config(rng, 3, 8, 2, 8);
    const int new_rate = std::uniform_int_distribution<int>(1, 8)(rng);
    const int latency = std::uniform_int_distribution<int>(1, 5)(rng);
    ChipModel chip({config, latency, true, 1, 8});

    const std::size_t len = std::uniform_int_distribution<std::size_t>(50, 500)(rng);
    const std::size_t load_at = len / 2;
    const auto values = testing::random_block(rng, config.input_bits, len);
    std::bernoulli_distribution gap(0.35);
    std::vector<PinInputs> trace;
    std::vector<std::int64_t> before, after;
    for (std::size_t i = 0; i < len; ++i) {
      if (i == load_at) {
        trace.push_back({0, false, static_cast<std::uint32_t>(new_rate), true});
      } else if (i == load_at + 1 || gap(rng)) {
        trace.push_back({});
      } else {
        trace.push_back({values[i], true, 0, false});
        (i < load_at ? before : after).push_back(values[i]);
      }
    }
    trace.resize(trace.size() + latency + 1);
    std::vector<std::int64_t> got;
    for (const auto& o : chip.run_trace(trace)) {
      if (o.rdy) got.push_back(o.dout);
    }
    auto want = Decimator(config).process(before);
    CicConfig second = config;
    second.rate = new_rate;
    const auto tail = Decimator(second).process(after);
    want.insert(want.end(), tail.begin(), tail.end());
    mismatches += got == want ? 0 : 1;
  }

  // Dense ND: period exactly R after the first pulse at R + L.
  bool cadence = true;
  for (int rate = 2; rate <= 50; rate += 6) {
    ChipModel chip({{2, rate, 1, 2}, 3});
    std::vector<PinInputs> trace(static_cast<std::size_t>(rate * 8), PinInputs{1, true, 0, false});
    std::vector<std::size_t> pulses;
    const auto outs = chip.run_trace(trace);
    for (std::size_t i = 0; i < outs.size(); ++i) {
      if (outs[i].rdy) pulses.push_back(i + 1);
    }
    cadence = cadence && !pulses.empty() && pulses.front() == static_cast<std::size_t>(rate + 3);
    for (std::size_t i = 1; i < pulses.size(); ++i) {
      cadence = cadence && pulses[i] - pulses[i - 1] == static_cast<std::size_t>(rate);
    }
  }
  return {mismatches == 0 && cadence,
          fmt("50 traces, %.0f mismatches; dense rdy period == R: ", mismatches) +
              (cadence ? "yes" : "no")};
}

Outcome compensation() {
  const auto fir = design_compensator(kTableOne, 15, 0.25);
  const double raw = passband_deviation(kTableOne, FirFilter{{1.0}}, 0.25);
  const double dev = passband_deviation(kTableOne, fir, 0.25);
  return {dev <= 0.1 && dev < raw,
          fmt("max passband deviation %.4f dB -> %.3g dB (<= 0.1)", raw, dev)};
}

Outcome sigma_delta_end_to_end() {
  SigmaDeltaModulator modulator(0.5);
  const auto bits = modulator.generate(20000);
  Decimator d({2, 50, 1, kModulatorBits});
  const auto out = d.process(bits);
  // Skip the first two outputs, which still see the start-up transient.
  const double mean = std::accumulate(out.begin() + 2, out.end(), 0.0) /
                      static_cast<double>(out.size() - 2);
  return {std::abs(mean - 1250.0) <= 12.5, fmt("steady-state mean %.3f (1250 +- 1%%)", mean)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 TABLE 1 REGRESSION", table_one},
      {"2 GAIN", dc_gain},
      {"3 FIG. 8 SHAPE", figure_eight},
      {"4 ORACLE EQUIVALENCE", oracle_equivalence},
      {"5 CLOSED-FORM vs POLYNOMIAL", closed_form_vs_polynomial},
      {"6 NULLS", nulls},
      {"7 WIDTH SUFFICIENCY", width_sufficiency},
      {"8 CHIP GOLDEN MODEL", chip_golden},
      {"9 COMPENSATION", compensation},
      {"10 END-TO-END SIGMA-DELTA", sigma_delta_end_to_end},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome{false, ""};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %-28s %s (%.1f ms)\n", outcome.pass ? "PASS" : "FAIL", name,
                outcome.detail.c_str(), ms);
    failed += outcome.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
