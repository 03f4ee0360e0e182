#include "cic/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "cic/config.hpp"
#include "cic/errors.hpp"
#include "cic/register_word.hpp"

namespace cic {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool skippable(std::string_view line) { return line.empty() || line.front() == '#'; }

template <typename T>
bool parse_int(std::string_view text, T& value) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size();
}

bool parse_flag(std::string_view text, std::size_t line, const std::string& where,
                const char* pin) {
  if (text == "1") return true;
  if (text == "0" || text == "-") return false;
  throw ParseError(line, where + pin + " must be 0, 1 or '-', got '" + std::string(text) +
                             "'");
}

}  // namespace

std::vector<std::int64_t> read_samples(std::istream& in, int input_bits) {
  if (input_bits < 1 || input_bits > kMaxRegisterWidth) {
    throw ConfigError("input_bits", "input_bits must be in [1, 64], got " +
                                        std::to_string(input_bits));
  }
  const std::int64_t lo = RegisterWord::min_value(input_bits);
  const std::int64_t hi = RegisterWord::max_value(input_bits);

  std::vector<std::int64_t> samples;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (skippable(text)) continue;
    std::int64_t value = 0;
    if (!parse_int(text, value)) {
      throw ParseError(line, "not a signed integer: '" + std::string(text) + "'");
    }
    if (value < lo || value > hi) {
      throw ParseError(line, "sample " + std::to_string(value) + " outside the " +
                                 std::to_string(input_bits) + "-bit signed range [" +
                                 std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    samples.push_back(value);
  }
  return samples;
}

void write_samples(std::ostream& out, std::span<const std::int64_t> samples) {
  for (const auto s : samples) out << s << '\n';
}

std::vector<PinInputs> read_trace(std::istream& in) {
  std::vector<PinInputs> trace;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim(raw);
    if (skippable(text)) continue;

    std::istringstream fields{std::string(text)};
    std::vector<std::string> f;
    for (std::string tok; fields >> tok;) f.push_back(tok);
    const std::string where = "cycle " + std::to_string(trace.size() + 1) + ": ";
    if (f.size() != 4) {
      throw ParseError(line, where + "expected 4 fields `nd din we ldin`, got " +
                                 std::to_string(f.size()));
    }

    PinInputs pins;
    pins.nd = parse_flag(f[0], line, where, "nd");
    pins.we = parse_flag(f[2], line, where, "we");
    if (f[1] != "-" && !parse_int(std::string_view(f[1]), pins.din)) {
      throw ParseError(line, where + "bad din '" + f[1] + "'");
    }
    if (pins.nd && f[1] == "-") throw ParseError(line, where + "nd=1 needs a din value");
    if (f[3] != "-" && !parse_int(std::string_view(f[3]), pins.ldin)) {
      throw ParseError(line, where + "bad ldin '" + f[3] + "'");
    }
    if (pins.we && f[3] == "-") throw ParseError(line, where + "we=1 needs an ldin value");
    trace.push_back(pins);
  }
  return trace;
}

void write_trace(std::ostream& out, std::span<const PinOutputs> outputs) {
  std::size_t cycle = 0;
  for (const auto& o : outputs) {
    out << ++cycle << ' ' << (o.rdy ? 1 : 0) << ' ' << o.dout << ' ' << (o.rfd ? 1 : 0)
        << '\n';
  }
}

void write_curve(std::ostream& out, const ResponseCurve& curve) {
  out << "f,mag_db,phase_rad\n";
  char buf[96];
  for (const auto& p : curve.points) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g\n", p.freq, p.mag_db, p.phase_rad);
    out << buf;
  }
}

void write_taps(std::ostream& out, const FirFilter& fir) {
  char buf[40];
  for (const double t : fir.taps) {
    std::snprintf(buf, sizeof buf, "%.17g\n", t);
    out << buf;
  }
}

std::string format_db(double db) {
  // std::round rounds halves away from zero.
  const double rounded = std::round(db * 100.0) / 100.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.2f", rounded == 0.0 ? 0.0 : rounded);
  return buf;
}

}  // namespace cic
