// permspec: verify, print spectra and export matrices from the command line.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "permspec/algebra.hpp"
#include "permspec/errors.hpp"
#include "permspec/report.hpp"

namespace {

using namespace permspec;

constexpr int kUsage = 2;

StatisticKind parse_kind(const std::string &text) {
  try {
    return parse_statistic_kind(text);
  } catch (const DomainError &e) {
    throw report::UsageError(e.what());
  }
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact spectra of the descent and inversion elements of the "
               "symmetric group algebra"};
  app.require_subcommand(1);

  std::string target;
  std::optional<int> verify_n;
  std::uint64_t seed = report::kDefaultSeed;
  bool no_timing = false;
  bool allow_slow = false;
  auto *verify = app.add_subcommand("verify", "run checks and print a JSON report");
  verify->add_option("target", target,
                     "theorem1|theorem2|corollary1|corollary2|corollary3|prop2.1|"
                     "prop3.3|prop4.8|lemma<id>|crossval|all")
      ->required();
  verify->add_option("--n", verify_n, "degree (default depends on target)");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "omit wall_time_ms from the report");
  verify->add_flag("--allow-slow", allow_slow, "raise the theorem2 / prop4.8 ceiling to 6");

  std::string stat;
  int n = 1;
  std::string format;
  auto *spectrum = app.add_subcommand("spectrum", "print a verified spectrum");
  spectrum->add_option("--stat", stat, "des|maj|inv|desx|invx")->required();
  spectrum->add_option("--n", n, "degree")->required();
  spectrum->add_option("--format", format, "text|json")
      ->check(CLI::IsMember({"text", "json"}))
      ->default_val("text");
  spectrum->add_option("--seed", seed, "random seed")->capture_default_str();
  spectrum->add_flag("--allow-slow", allow_slow, "allow invx at n = 6");

  std::string out_path;
  auto *matrix = app.add_subcommand("matrix", "export the n! x n! matrix");
  matrix->add_option("--stat", stat, "des|maj|inv|desx|invx")->required();
  matrix->add_option("--n", n, "degree")->required();
  matrix->add_option("--format", format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->required();
  matrix->add_option("--out", out_path, "output file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (verify->parsed()) {
      report::VerifyOptions options;
      options.target = target;
      options.n = verify_n;
      options.seed = seed;
      options.allow_slow = allow_slow;
      const auto r = report::verify(options);
      std::cout << report::to_json(r, !no_timing).dump(2) << "\n";
      return r.exit_code();
    }
    if (spectrum->parsed()) {
      report::SpectrumOptions options{parse_kind(stat), n, seed, allow_slow};
      if (format == "json")
        std::cout << report::spectrum_json(options).dump(2) << "\n";
      else
        std::cout << report::spectrum_text(options);
      return 0;
    }
    const auto kind = parse_kind(stat);
    if (n < 1 || n > kMatrixExportLimit)
      throw report::UsageError("matrix export needs 1 <= n <= " +
                               std::to_string(kMatrixExportLimit));
    const auto m = build_matrix(kind, n);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << "\n";
      return 1;
    }
    if (format == "csv")
      out << report::matrix_csv(m);
    else
      out << report::matrix_json(m, kind, n).dump() << "\n";
    out.close();
    if (!out) {
      std::cerr << "error: writing " << out_path << " failed\n";
      return 1;
    }
    return 0;
  } catch (const report::UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
