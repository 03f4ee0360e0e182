// cicfilt: CIC decimation, response analysis, droop compensation and chip
// simulation from the command line.

#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void add_config_flags(CLI::App* cmd, cic::CicConfig& config, bool with_bits) {
  cmd->add_option("-N,--stages", config.stages, "Integrator/comb stage count")->required();
  cmd->add_option("-R,--rate", config.rate, "Decimation factor")->required();
  cmd->add_option("-M,--delay", config.diff_delay, "Comb differential delay")
      ->capture_default_str();
  auto* bits = cmd->add_option("-B,--bits", config.input_bits, "Signed input sample width");
  if (with_bits) bits->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"CIC decimation filter toolkit"};
  app.require_subcommand(1);

  cicfilt::Streams io{std::cin, std::cout, std::cerr};

  cicfilt::DecimateOptions decimate;
  auto* cmd_decimate = app.add_subcommand("decimate", "Run samples through the bit-exact decimator");
  add_config_flags(cmd_decimate, decimate.config, true);
  cmd_decimate->add_option("--in", decimate.in, "Input sample file ('-' for stdin)")->capture_default_str();
  cmd_decimate->add_option("--out", decimate.out, "Output sample file ('-' for stdout)")->capture_default_str();

  cicfilt::ResponseOptions response;
  response.config.input_bits = 1;
  auto* cmd_response = app.add_subcommand("response", "Tabulate the frequency response");
  add_config_flags(cmd_response, response.config, false);
  cmd_response->add_option("--grid", response.grid, "Points over [0, 0.5]")->capture_default_str();
  cmd_response->add_option("--fp", response.fp, "Passband edge (input-rate) for droop/alias figures");
  cmd_response->add_option("--out", response.out, "CSV output ('-' for stdout)")->capture_default_str();

  cicfilt::CompensateOptions compensate;
  compensate.config.input_bits = 1;
  auto* cmd_compensate = app.add_subcommand("compensate", "Design a droop compensation FIR");
  add_config_flags(cmd_compensate, compensate.config, false);
  cmd_compensate->add_option("--taps", compensate.taps, "Odd tap count")->capture_default_str();
  cmd_compensate->add_option("--fp", compensate.fp_out, "Passband edge at the output rate")->capture_default_str();
  cmd_compensate->add_option("--grid", compensate.grid, "Least-squares grid size")->capture_default_str();
  cmd_compensate->add_option("--out", compensate.out, "Coefficient output ('-' for stdout)")->capture_default_str();

  cicfilt::ChipsimOptions chipsim;
  auto* cmd_chipsim = app.add_subcommand("chipsim", "Run a pin-level trace through the chip model");
  add_config_flags(cmd_chipsim, chipsim.config, true);
  cmd_chipsim->add_option("--latency", chipsim.latency, "Output pipeline depth (default N+1)");
  cmd_chipsim->add_option("--rate-min", chipsim.rate_min, "Smallest loadable rate (enables LDin/WE)");
  cmd_chipsim->add_option("--rate-max", chipsim.rate_max, "Largest loadable rate (enables LDin/WE)");
  cmd_chipsim->add_option("--in", chipsim.in, "Input trace ('-' for stdin)")->capture_default_str();
  cmd_chipsim->add_option("--out", chipsim.out, "Output trace ('-' for stdout)")->capture_default_str();

  cicfilt::SdmOptions sdm;
  auto* cmd_sdm = app.add_subcommand("sdm", "Generate a first-order sigma-delta +-1 stream");
  cmd_sdm->add_option("--dc", sdm.dc, "Constant input level in [-1, 1]")->capture_default_str();
  cmd_sdm->add_option("--count", sdm.count, "Number of output samples")->capture_default_str();
  cmd_sdm->add_option("--out", sdm.out, "Output file ('-' for stdout)")->capture_default_str();

  cicfilt::InfoOptions info;
  info.config.input_bits = 1;
  auto* cmd_info = app.add_subcommand("info", "Print gain, register width and nulls");
  add_config_flags(cmd_info, info.config, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cicfilt::kExitOk : cicfilt::kExitUsage;
  }

  if (cmd_decimate->parsed()) return cicfilt::run_decimate(decimate, io);
  if (cmd_response->parsed()) return cicfilt::run_response(response, io);
  if (cmd_compensate->parsed()) return cicfilt::run_compensate(compensate, io);
  if (cmd_chipsim->parsed()) return cicfilt::run_chipsim(chipsim, io);
  if (cmd_sdm->parsed()) return cicfilt::run_sdm(sdm, io);
  return cicfilt::run_info(info, io);
}
