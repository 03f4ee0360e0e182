#include "commands.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "cic/analysis.hpp"
#include "cic/chip.hpp"
#include "cic/compensator.hpp"
#include "cic/decimator.hpp"
#include "cic/errors.hpp"
#include "cic/io.hpp"
#include "cic/sdm.hpp"

namespace cicfilt {

namespace {

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& std_in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std_in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw FileError("cannot open '" + path + "' for reading");
    buf << file.rdbuf();
  }
  return buf.str();
}

void write_all(const std::string& path, std::ostream& std_out, const std::string& text) {
  if (path == "-") {
    std_out << text;
    std_out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw FileError("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw FileError("failed writing '" + path + "'");
}

void check_config(const cic::CicConfig& config, std::ostream& err) {
  try {
    const auto checked = cic::validate(config);
    if (checked.warning) err << "warning: " << *checked.warning << '\n';
  } catch (const cic::ConfigError& e) {
    throw UsageError(e.what());
  }
}

// Maps exceptions onto exit codes: flag problems are 1, data problems 2.
int guarded(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cic::ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cic::ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const cic::WidthError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace

int run_decimate(const DecimateOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    check_config(opts.config, streams.err);
    cic::Decimator decimator(opts.config);

    std::istringstream text(read_all(opts.in, streams.in));
    const auto samples = cic::read_samples(text, opts.config.input_bits);
    const auto outputs = decimator.process(samples);

    std::ostringstream out;
    cic::write_samples(out, outputs);
    write_all(opts.out, streams.out, out.str());

    streams.err << "samples_in=" << decimator.samples_in()
                << " samples_out=" << decimator.samples_out()
                << " width=" << decimator.width() << " gain=" << cic::gain(opts.config)
                << '\n';
  });
}

int run_response(const ResponseOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    check_config(opts.config, streams.err);
    if (opts.grid < 2) throw UsageError("--grid must be >= 2");
    const double fp_limit = 0.5 / opts.config.rate;
    if (opts.fp && !(*opts.fp > 0.0 && *opts.fp < fp_limit)) {
      throw UsageError("--fp must lie in (0, " + std::to_string(fp_limit) + ")");
    }

    std::ostringstream out;
    cic::write_curve(out, cic::response_curve(opts.config, opts.grid));
    write_all(opts.out, streams.out, out.str());

    if (opts.fp) {
      streams.err << "droop_db=" << cic::format_db(cic::passband_droop(opts.config, *opts.fp))
                  << " alias_db="
                  << cic::format_db(cic::alias_attenuation(opts.config, *opts.fp)) << '\n';
    }
  });
}

int run_compensate(const CompensateOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    check_config(opts.config, streams.err);
    if (opts.taps < 1 || opts.taps % 2 == 0) {
      throw UsageError("--taps must be odd and positive, got " + std::to_string(opts.taps));
    }
    if (!(opts.fp_out > 0.0 && opts.fp_out < 0.5)) {
      throw UsageError("--fp must lie in (0, 0.5) for the compensator (output-rate edge)");
    }
    if (opts.grid < 2) throw UsageError("--grid must be >= 2");

    const auto fir = cic::design_compensator(opts.config, opts.taps, opts.fp_out, opts.grid);
    std::ostringstream out;
    cic::write_taps(out, fir);
    write_all(opts.out, streams.out, out.str());

    const double raw = cic::passband_deviation(opts.config, cic::FirFilter{{1.0}}, opts.fp_out);
    const double compensated = cic::passband_deviation(opts.config, fir, opts.fp_out);
    char buf[128];
    std::snprintf(buf, sizeof buf, "raw_deviation_db=%.6g deviation_db=%.6g\n", raw,
                  compensated);
    streams.err << buf;
  });
}

int run_chipsim(const ChipsimOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    check_config(opts.config, streams.err);
    cic::ChipConfig chip_config{opts.config, opts.latency, false, 1, 1};
    if (opts.rate_min || opts.rate_max) {
      chip_config.programmable = true;
      chip_config.rate_min = opts.rate_min.value_or(1);
      chip_config.rate_max = opts.rate_max.value_or(opts.config.rate);
    }
    cic::ChipModel chip(chip_config);

    std::istringstream text(read_all(opts.in, streams.in));
    const auto trace = cic::read_trace(text);
    const auto outputs = chip.run_trace(trace);

    std::ostringstream out;
    cic::write_trace(out, outputs);
    write_all(opts.out, streams.out, out.str());

    std::size_t rdy = 0;
    for (const auto& o : outputs) rdy += o.rdy ? 1 : 0;
    streams.err << "rdy_count=" << rdy << " cycles=" << chip.cycles()
                << " accepted=" << chip.accepted() << '\n';
  });
}

int run_sdm(const SdmOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    if (!(opts.dc >= -1.0 && opts.dc <= 1.0)) throw UsageError("--dc must lie in [-1, 1]");
    cic::SigmaDeltaModulator modulator(opts.dc);
    std::ostringstream out;
    cic::write_samples(out, modulator.generate(opts.count));
    write_all(opts.out, streams.out, out.str());
  });
}

int run_info(const InfoOptions& opts, Streams streams) {
  return guarded(streams.err, [&] {
    check_config(opts.config, streams.err);
    std::ostream& out = streams.out;
    out << "config " << cic::to_string(opts.config) << '\n'
        << "decimation_length " << opts.config.decimation_length() << '\n'
        << "gain " << cic::gain(opts.config) << '\n'
        << "width " << cic::required_width(opts.config) << '\n'
        << "nulls";
    for (const auto& null : cic::null_frequencies(opts.config)) {
      out << ' ' << null.num << '/' << null.den;
    }
    out << '\n';
  });
}

}  // namespace cicfilt
