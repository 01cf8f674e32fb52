// Copyright 2026 The cpmorita Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line frontend. Exit codes: 0 all checks passed, 1 a verified
// property failed, 2 input/usage error, 3 numeric failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cpmorita/cli.hpp"

namespace {

struct CommonFlags {
  std::string format = "text";
  std::string out_file;
  double tol_abs_value = 0.0;
  CLI::Option* tol_abs_opt = nullptr;

  void attach(CLI::App* sub) {
    sub->add_option("--format", format, "Report format: text or json")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    sub->add_option("--out", out_file,
                    "Write the report to this file instead of stdout");
    tol_abs_opt = sub->add_option(
        "--tol-abs", tol_abs_value,
        "Absolute eigenvalue cutoff for numerical rank (default: "
        "dim * machine_epsilon * max(lambda_max, 1))");
  }

  std::optional<double> tol_abs() const {
    if (tol_abs_opt != nullptr && tol_abs_opt->count() > 0) {
      return tol_abs_value;
    }
    return std::nullopt;
  }

  // Returns the process exit code: the command's own unless emitting the
  // report fails.
  int emit(const cpmorita::CommandOutcome& outcome) const {
    const std::string rendered = format == "json"
                                     ? outcome.report.dump(2) + "\n"
                                     : cpmorita::render_text(outcome.report);
    if (out_file.empty()) {
      std::fputs(rendered.c_str(), stdout);
      return outcome.exit_code;
    }
    std::ofstream out(out_file, std::ios::binary | std::ios::trunc);
    out << rendered;
    out.flush();
    if (!out) {
      std::fprintf(stderr, "error: cannot write report to %s\n",
                   out_file.c_str());
      return 2;
    }
    return outcome.exit_code;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Completely positive maps on matrix algebras: builds Kraus-form "
      "channels and numerically verifies that their GNS correspondences "
      "reduce to Hilbert spaces of dimension equal to the map's index, "
      "multiplicatively under composition."};
  app.require_subcommand(1);

  int exit_code = 0;

  // make <kind> <n> [count]
  auto* make = app.add_subcommand(
      "make",
      "Emit a channel file (identity, pinching or random) to stdout or "
      "--out");
  std::string make_kind;
  std::size_t make_n = 0;
  std::size_t make_kraus = 0;
  std::uint64_t make_seed = 0;
  std::string make_out;
  make->add_option("kind", make_kind, "Channel kind")
      ->required()
      ->check(CLI::IsMember({"identity", "pinching", "random"}));
  make->add_option("n", make_n, "Matrix algebra dimension n")
      ->required()
      ->check(CLI::PositiveNumber);
  auto* make_kraus_opt = make->add_option(
      "count", make_kraus,
      "Number of Kraus operators for kind=random (default n; 0 gives the "
      "zero map)");
  make->add_option("--seed", make_seed,
                   "Seed for kind=random (same seed, same channel)")
      ->capture_default_str();
  make->add_option("--out", make_out,
                   "Write the channel file here instead of stdout");
  make->callback([&] {
    std::optional<std::size_t> kraus;
    if (make_kraus_opt->count() > 0) kraus = make_kraus;
    std::optional<std::filesystem::path> out;
    if (!make_out.empty()) out = make_out;
    const cpmorita::CommandOutcome outcome =
        cpmorita::cmd_make(make_kind, make_n, kraus, make_seed, out);
    if (outcome.exit_code != 0) {
      std::fputs(cpmorita::render_text(outcome.report).c_str(), stderr);
    } else if (!out.has_value()) {
      std::fputs((outcome.report.dump(2) + "\n").c_str(), stdout);
    }
    exit_code = outcome.exit_code;
  });

  // index <channel>
  auto* index = app.add_subcommand(
      "index", "Compute the index of a channel three independent ways");
  std::string index_channel;
  index->add_option("channel", index_channel, "Channel file")->required();
  CommonFlags index_flags;
  index_flags.attach(index);
  index->callback([&] {
    exit_code = index_flags.emit(
        cpmorita::cmd_index(index_channel, index_flags.tol_abs()));
  });

  // verify-reduction <channel>
  auto* reduction = app.add_subcommand(
      "verify-reduction",
      "Check that the GNS correspondence of a channel reduces to a Hilbert "
      "space of dimension equal to its index");
  std::string reduction_channel;
  reduction->add_option("channel", reduction_channel, "Channel file")
      ->required();
  CommonFlags reduction_flags;
  reduction_flags.attach(reduction);
  reduction->callback([&] {
    exit_code = reduction_flags.emit(cpmorita::cmd_verify_reduction(
        reduction_channel, reduction_flags.tol_abs()));
  });

  // verify-compose <first> <second>
  auto* compose = app.add_subcommand(
      "verify-compose",
      "Check that the two-step Gram matrix of two channels factors as the "
      "product of the one-step Gram matrices");
  std::string compose_first;
  std::string compose_second;
  std::size_t compose_max_n = 4;
  compose->add_option("first", compose_first, "First channel file")
      ->required();
  compose->add_option("second", compose_second, "Second channel file")
      ->required();
  compose->add_option("--max-n", compose_max_n,
                      "Refuse the n^4-sized computation past this dimension")
      ->capture_default_str();
  CommonFlags compose_flags;
  compose_flags.attach(compose);
  compose->callback([&] {
    exit_code = compose_flags.emit(
        cpmorita::cmd_verify_compose(compose_first, compose_second,
                                     compose_flags.tol_abs(), compose_max_n));
  });

  // witness <channel> <out>
  auto* witness = app.add_subcommand(
      "witness",
      "Write an isometry identifying the reduced correspondence with C^d");
  std::string witness_channel;
  std::string witness_out;
  witness->add_option("channel", witness_channel, "Channel file")->required();
  witness->add_option("isometry", witness_out, "Output file for the isometry")
      ->required();
  CommonFlags witness_flags;
  witness_flags.attach(witness);
  witness->callback([&] {
    exit_code = witness_flags.emit(cpmorita::cmd_witness(
        witness_channel, witness_out, witness_flags.tol_abs()));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Help and version exit 0; every other usage problem is an input error.
    return app.exit(e) == 0 ? 0 : 2;
  }
  return exit_code;
}
