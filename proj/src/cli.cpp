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

#include "cpmorita/cli.hpp"

#include <chrono>
#include <cstdio>
#include <utility>

#include "cpmorita/compose.hpp"
#include "cpmorita/gns.hpp"

namespace cpmorita {

namespace {

template <typename Body>
CommandOutcome run_command(const char* command, Body&& body) {
  CommandOutcome outcome;
  outcome.report["command"] = command;
  const auto start = std::chrono::steady_clock::now();
  try {
    outcome.exit_code = body(outcome.report);
  } catch (const std::exception& e) {
    outcome.exit_code = exit_code_for(e);
    outcome.report["status"] = "error";
    outcome.report["error_kind"] = error_kind(e);
    outcome.report["message"] = e.what();
  }
  const auto elapsed = std::chrono::steady_clock::now() - start;
  outcome.report["wall_time_seconds"] =
      std::chrono::duration<double>(elapsed).count();
  return outcome;
}

RankPolicy policy_from(std::optional<double> tol_abs) {
  RankPolicy policy;
  policy.absolute = tol_abs;
  return policy;
}

void describe_channel(Json& report, const ChannelFile& file) {
  report["n"] = file.map.dim();
  report["kraus_count"] = file.map.kraus_count();
  if (file.name.has_value()) report["name"] = *file.name;
}

// Echo the rank-threshold policy: an explicit cutoff, or null for the
// default eigenvalue-relative rule.
void echo_rank_policy(Json& report, std::optional<double> tol_abs) {
  if (tol_abs.has_value()) {
    report["tol_abs"] = *tol_abs;
  } else {
    report["tol_abs"] = nullptr;
  }
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr ||
      dynamic_cast<const IoError*>(&e) != nullptr ||
      dynamic_cast<const DimensionError*>(&e) != nullptr) {
    return 2;
  }
  if (dynamic_cast<const NotHermitianError*>(&e) != nullptr ||
      dynamic_cast<const NotPsdError*>(&e) != nullptr ||
      dynamic_cast<const NotCpError*>(&e) != nullptr ||
      dynamic_cast<const NoConvergenceError*>(&e) != nullptr) {
    return 3;
  }
  return 2;
}

std::string error_kind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) != nullptr) return "parse";
  if (dynamic_cast<const IoError*>(&e) != nullptr) return "io";
  if (dynamic_cast<const DimensionError*>(&e) != nullptr) return "dimension";
  if (dynamic_cast<const NotHermitianError*>(&e) != nullptr) {
    return "not_hermitian";
  }
  if (dynamic_cast<const NotPsdError*>(&e) != nullptr) return "not_psd";
  if (dynamic_cast<const NotCpError*>(&e) != nullptr) return "not_cp";
  if (dynamic_cast<const NoConvergenceError*>(&e) != nullptr) {
    return "no_convergence";
  }
  return "unknown";
}

CommandOutcome cmd_make(const std::string& kind, std::size_t n,
                        std::optional<std::size_t> num_kraus,
                        std::uint64_t seed,
                        const std::optional<std::filesystem::path>& out) {
  CommandOutcome outcome;
  try {
    if (n == 0) throw ParseError("make: n must be at least 1");
    ChannelFile file;
    if (kind == "identity") {
      file.map = identity_channel(n);
    } else if (kind == "pinching") {
      file.map = pinching(n);
    } else if (kind == "random") {
      file.map = random_cp(n, num_kraus.value_or(n), seed);
      file.seed = static_cast<std::int64_t>(seed);
    } else {
      throw ParseError("make: unknown kind \"" + kind +
                       "\" (expected identity, pinching or random)");
    }
    file.name = kind;
    if (out.has_value()) write_channel_file(*out, file);
    // The report is the channel itself, so `make` composes with the
    // file-reading commands.
    outcome.report = channel_to_json(file);
  } catch (const std::exception& e) {
    outcome.exit_code = exit_code_for(e);
    outcome.report["command"] = "make";
    outcome.report["status"] = "error";
    outcome.report["error_kind"] = error_kind(e);
    outcome.report["message"] = e.what();
  }
  return outcome;
}

CommandOutcome cmd_index(const std::filesystem::path& channel,
                         std::optional<double> tol_abs) {
  return run_command("index", [&](Json& report) {
    const ChannelFile file = read_channel_file(channel);
    describe_channel(report, file);
    echo_rank_policy(report, tol_abs);
    const IndexReport idx = index(file.map, policy_from(tol_abs));
    report["d_span"] = idx.d_span;
    report["d_choi"] = idx.d_choi;
    report["d_gram"] = idx.d_gram;
    report["d"] = idx.d_span;
    report["agree"] = idx.agree;
    report["status"] = idx.agree ? "pass" : "fail";
    return idx.agree ? 0 : 1;
  });
}

CommandOutcome cmd_verify_reduction(const std::filesystem::path& channel,
                                    std::optional<double> tol_abs) {
  return run_command("verify-reduction", [&](Json& report) {
    const ChannelFile file = read_channel_file(channel);
    describe_channel(report, file);
    echo_rank_policy(report, tol_abs);
    const ReductionReport r =
        verify_reduction(file.map, policy_from(tol_abs));
    report["gram_residual"] = r.gram_residual;
    report["tolerance"] = r.tolerance;
    report["rank"] = r.rank;
    report["d"] = r.d;
    report["pass"] = r.pass;
    report["status"] = r.pass ? "pass" : "fail";
    return r.pass ? 0 : 1;
  });
}

CommandOutcome cmd_verify_compose(const std::filesystem::path& first,
                                  const std::filesystem::path& second,
                                  std::optional<double> tol_abs,
                                  std::size_t max_n) {
  return run_command("verify-compose", [&](Json& report) {
    const ChannelFile file1 = read_channel_file(first);
    const ChannelFile file2 = read_channel_file(second);
    report["n"] = file1.map.dim();
    report["kraus_count_1"] = file1.map.kraus_count();
    report["kraus_count_2"] = file2.map.kraus_count();
    echo_rank_policy(report, tol_abs);
    if (file1.map.dim() > max_n) {
      // The two-step Gram has n^4 rows; refuse sizes past the cap rather
      // than thrash.
      throw DimensionError("verify-compose: n = " +
                           std::to_string(file1.map.dim()) +
                           " exceeds --max-n = " + std::to_string(max_n));
    }
    const FactorizationReport r =
        verify_factorization(file1.map, file2.map, policy_from(tol_abs));
    report["residual"] = r.residual;
    report["tolerance"] = r.tolerance;
    report["rank"] = r.rank;
    report["d1"] = r.d1;
    report["d2"] = r.d2;
    report["d_product"] = r.d1 * r.d2;
    report["pass"] = r.pass;
    report["status"] = r.pass ? "pass" : "fail";
    return r.pass ? 0 : 1;
  });
}

CommandOutcome cmd_witness(const std::filesystem::path& channel,
                           const std::filesystem::path& out,
                           std::optional<double> tol_abs) {
  return run_command("witness", [&](Json& report) {
    const ChannelFile file = read_channel_file(channel);
    describe_channel(report, file);
    echo_rank_policy(report, tol_abs);
    const MoritaWitness w = morita_witness(file.map, policy_from(tol_abs));
    const double tolerance =
        gram_equality_tolerance(reduced_gram(file.map).mat.max_abs());
    write_matrix_file(out, w.isometry);
    report["d"] = w.d;
    report["isometry_rows"] = w.isometry.rows();
    report["isometry_cols"] = w.isometry.cols();
    report["residual"] = w.residual;
    report["tolerance"] = tolerance;
    report["path"] = out.string();
    const bool pass = w.residual <= tolerance;
    report["pass"] = pass;
    report["status"] = pass ? "pass" : "fail";
    return pass ? 0 : 1;
  });
}

std::string render_text(const Json& report) {
  std::string out;
  for (const auto& [key, value] : report.items()) {
    out += key;
    out += ": ";
    if (value.is_number_float()) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.17g", value.get<double>());
      out += buf;
    } else if (value.is_string()) {
      out += value.get<std::string>();
    } else {
      out += value.dump();
    }
    out += "\n";
  }
  return out;
}

}  // namespace cpmorita
