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

#ifndef CPMORITA_CLI_HPP_
#define CPMORITA_CLI_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "cpmorita/io.hpp"

namespace cpmorita {

// Result of one CLI command: the process exit code plus a JSON report that
// the frontend renders as text or JSON.
//
// Exit codes:
//   0  command succeeded and every checked property held
//   1  command ran but a verified property failed
//   2  input error (parse failure, bad dimensions, size cap, file I/O)
//   3  numeric failure (not Hermitian, not PSD, not CP, no convergence)
struct CommandOutcome {
  int exit_code = 0;
  Json report;
};

// Maps a thrown error to the exit code contract above. Unrecognized
// exceptions map to 2.
int exit_code_for(const std::exception& e);

// Short machine-readable tag for an error ("parse", "io", "dimension",
// "not_hermitian", "not_psd", "not_cp", "no_convergence", "unknown").
std::string error_kind(const std::exception& e);

// Builds a channel. `kind` is one of "identity", "pinching" or "random";
// `num_kraus` applies to "random" only (default n) and may be zero for the
// empty (zero) map. `seed` feeds the deterministic generator. On success
// the report is exactly the channel JSON, which is also written to `out`
// when given; same arguments give byte-identical output.
CommandOutcome cmd_make(const std::string& kind, std::size_t n,
                        std::optional<std::size_t> num_kraus,
                        std::uint64_t seed,
                        const std::optional<std::filesystem::path>& out);

// Reads a channel file and reports the index of the map computed three
// independent ways (Kraus span, Choi rank, Gram rank). Exit 1 if they
// disagree.
CommandOutcome cmd_index(const std::filesystem::path& channel,
                         std::optional<double> tol_abs);

// Reads a channel file and checks that the corner-evaluated Gram matrix of
// its GNS bimodule equals the closed-form Gram matrix, and that its rank
// equals the map's index. Exit 1 on failure.
CommandOutcome cmd_verify_reduction(const std::filesystem::path& channel,
                                    std::optional<double> tol_abs);

// Reads two channel files on the same matrix algebra and checks that the
// two-step Gram matrix factors as the permuted Kronecker product of the
// single-step Gram matrices, with rank d1*d2. The n^4-sized computation is
// refused (exit 2) when n exceeds `max_n`.
CommandOutcome cmd_verify_compose(const std::filesystem::path& first,
                                  const std::filesystem::path& second,
                                  std::optional<double> tol_abs,
                                  std::size_t max_n);

// Reads a channel file, computes an isometry spanning its GNS bimodule, and
// writes it to `out` as a matrix file. Exit 1 if the isometry residual
// exceeds tolerance.
CommandOutcome cmd_witness(const std::filesystem::path& channel,
                           const std::filesystem::path& out,
                           std::optional<double> tol_abs);

// Renders a report as "key: value" lines. Doubles are printed with 17
// significant digits so the text form round-trips exactly.
std::string render_text(const Json& report);

}  // namespace cpmorita

#endif  // CPMORITA_CLI_HPP_
