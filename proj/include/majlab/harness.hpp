// Copyright 2026 The majlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Run configuration, parallel parameter sweeps and deterministic table output
// behind the majlab command line tool.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace majlab::harness {

inline constexpr const char *kToolVersion = "majlab 0.1.0";

enum class Model { kitaev, nanowire, braid, readout };
enum class OutputFormat { csv, json };

const char *to_string(Model m);

struct SweepAxis {
    /// Dotted path into the parameter document, e.g. "mu" or "lead.delta".
    std::string parameter;
    double start = 0.0;
    double stop = 0.0;
    int points = 2;

    /// Grid value i, endpoints included.
    double value(int i) const;
};

struct RunConfig {
    Model model = Model::kitaev;
    /// Empty selects the default observable of the subcommand.
    std::string observable;
    nlohmann::json parameters = nlohmann::json::object();
    std::vector<SweepAxis> sweep;
    std::string output_path;  // empty: stdout
    OutputFormat format = OutputFormat::csv;
    /// 0 means "auto" (hardware concurrency).
    int threads = 0;
};

/// Validates and converts a JSON document. Throws ConfigError on unknown
/// models or formats, bad thread counts, more than two sweep axes, axes with
/// fewer than two points, or axes naming parameters that do not exist.
RunConfig parse_run_config(const nlohmann::json &doc);
RunConfig load_run_config(const std::string &path);

/// Canonical text of the semantic fields (model, observable, parameters,
/// sweep); keys sorted, numbers printed as doubles with 17 digits. Output
/// location and thread count are not semantic.
std::string canonical_config(const RunConfig &cfg);
/// 64-bit FNV-1a hash of canonical_config, as 16 hex digits.
std::string config_hash(const RunConfig &cfg);

/// Number of worker threads: cfg.threads, or hardware concurrency for 0.
int resolve_threads(int requested);

using Cell = std::variant<double, long long, std::string>;

struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Written as "# key: value" lines (CSV) or a "provenance" object (JSON).
    std::vector<std::pair<std::string, std::string>> provenance;
};

/// Observables per model:
///   kitaev, nanowire: eigenvalues, dispersion, bulk_gap, k0_gap (nanowire),
///                     charge, zero_modes, min_abs_energy
///   readout:          readout
/// Each grid point may contribute several rows; rows are ordered by the
/// sweep coordinates, ascending, whatever the thread count.
/// Throws ConfigError for unknown observables or invalid parameters.
ResultTable run_sweep(const RunConfig &cfg, int threads);

/// Observable used when the config leaves it empty.
std::string default_observable(const std::string &subcommand, Model model);

/// Braid model: parses parameters.word on parameters.n_strands (default 4)
/// strands. JSON carries the canonical word, the signed-permutation action
/// and, for four strands, the logical gate as a row-major 2 x 2 matrix of
/// [re, im] pairs. Throws ConfigError for malformed words.
nlohmann::json braid_report(const RunConfig &cfg);
/// The logical gate entries as a table with columns row, col, re, im.
ResultTable braid_table(const RunConfig &cfg);

void emit_table(const ResultTable &t, OutputFormat format, std::ostream &out);
std::string emit_table(const ResultTable &t, OutputFormat format);

/// 17 significant digits; "nan", "inf", "-inf" for non-finite values.
std::string format_double(double x);

struct InvariantResult {
    std::string name;
    bool passed;
    double seconds;
    std::string detail;
};

struct SelftestReport {
    std::vector<InvariantResult> results;
    double total_seconds = 0.0;
    bool all_passed() const;
};

/// Runs every module invariant at fixed seeds, printing one line per
/// invariant to `log` as it completes.
SelftestReport run_selftest(std::ostream &log, int threads = 1);

}  // namespace majlab::harness
