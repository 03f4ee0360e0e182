#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cic/analysis.hpp"
#include "cic/chip.hpp"
#include "cic/compensator.hpp"

namespace cic {

// Sample files: one signed decimal per line. Blank lines and lines starting
// with '#' are skipped. Throws ParseError (with the line number) for
// malformed text or a value outside the input_bits signed range.
std::vector<std::int64_t> read_samples(std::istream& in, int input_bits);
void write_samples(std::ostream& out, std::span<const std::int64_t> samples);

// Pin traces: one cycle per line, `nd din we ldin`, '-' for don't-care.
// din is required when nd is 1 and ldin when we is 1.
std::vector<PinInputs> read_trace(std::istream& in);
// `cycle rdy dout rfd`, cycle counted from 1.
void write_trace(std::ostream& out, std::span<const PinOutputs> outputs);

// CSV with header `f,mag_db,phase_rad`, 12 significant digits.
void write_curve(std::ostream& out, const ResponseCurve& curve);
void write_taps(std::ostream& out, const FirFilter& fir);

// Two decimals, halves rounded away from zero.
std::string format_db(double db);

}  // namespace cic
