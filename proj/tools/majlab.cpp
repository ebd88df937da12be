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

// majlab: command line front end.
//
//   majlab <spectrum|phase-diagram|zero-modes|braid|readout|selftest>
//          --config <file> [--out <file>] [--threads N]
//
// Exit codes: 0 success, 1 self-test or internal failure, 2 config error,
// 3 I/O error. MAJLAB_THREADS overrides --threads, which overrides the config.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "majlab/errors.hpp"
#include "majlab/harness.hpp"

namespace {

using namespace majlab;
using namespace majlab::harness;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

int parse_thread_count(const std::string &text, const char *origin) {
    if (text == "auto") return 0;
    try {
        std::size_t used = 0;
        const int n = std::stoi(text, &used);
        if (used == text.size() && n > 0) return n;
    } catch (const std::exception &) {
    }
    throw ConfigError(std::string(origin) + " must be a positive integer or \"auto\", got '" + text + "'");
}

void write_output(const std::string &path, const std::string &bytes) {
    if (path.empty() || path == "-") {
        std::cout << bytes << std::flush;
        if (!std::cout) throw IoError("failed to write to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file '" + path + "'");
    out << bytes;
    out.close();
    if (!out) throw IoError("failed to write output file '" + path + "'");
}

bool model_allowed(const std::string &cmd, Model m) {
    if (cmd == "braid") return m == Model::braid;
    if (cmd == "readout") return m == Model::readout;
    return m == Model::kitaev || m == Model::nanowire;
}

int run(const std::string &cmd, const std::string &config_path, const std::string &out_path,
        std::optional<std::string> threads_flag) {
    std::optional<int> threads;
    if (threads_flag) threads = parse_thread_count(*threads_flag, "--threads");
    if (const char *env = std::getenv("MAJLAB_THREADS"); env != nullptr && *env != '\0') {
        threads = parse_thread_count(env, "MAJLAB_THREADS");
    }

    if (cmd == "selftest") {
        const auto report = run_selftest(std::cout, resolve_threads(threads.value_or(0)));
        int failed = 0;
        for (const auto &r : report.results) failed += r.passed ? 0 : 1;
        std::printf("selftest: %zu invariants, %d failed, %.3f s total\n", report.results.size(), failed,
                    report.total_seconds);
        return report.all_passed() ? 0 : kExitFailure;
    }

    if (config_path.empty()) throw ConfigError("--config is required for '" + cmd + "'");
    RunConfig cfg = load_run_config(config_path);
    if (!model_allowed(cmd, cfg.model)) {
        throw ConfigError("subcommand '" + cmd + "' does not accept model '" + to_string(cfg.model) + "'");
    }
    if (cfg.observable.empty()) cfg.observable = default_observable(cmd, cfg.model);
    if (!out_path.empty()) cfg.output_path = out_path;
    const int n_threads = threads.value_or(cfg.threads);

    std::string bytes;
    if (cmd == "braid") {
        bytes = cfg.format == OutputFormat::json ? braid_report(cfg).dump(2) + "\n"
                                                 : emit_table(braid_table(cfg), OutputFormat::csv);
    } else {
        bytes = emit_table(run_sweep(cfg, n_threads), cfg.format);
    }
    write_output(cfg.output_path, bytes);
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Majorana zero mode laboratory: BdG spectra, phase diagrams, braids and readout"};
    app.require_subcommand(1);
    std::string config_path, out_path, threads_text;
    const char *commands[][2] = {
        {"spectrum", "BdG eigenvalues or Bloch bands of a Kitaev chain or nanowire"},
        {"phase-diagram", "Topological charge and gaps over a parameter grid"},
        {"zero-modes", "Zero-mode count, splitting and decay length"},
        {"braid", "Compile a braid word to its Majorana action and logical gate"},
        {"readout", "Cooper-pair-box splitting and dispersive readout frequencies"},
        {"selftest", "Run the invariant suite"},
    };
    for (const auto &c : commands) {
        auto *sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config_path, "JSON run configuration");
        sub->add_option("--out", out_path, "Output file (default: config output path or stdout)");
        sub->add_option("--threads", threads_text, "Worker threads, or \"auto\"");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    std::optional<std::string> threads_flag;
    if (!threads_text.empty()) threads_flag = threads_text;

    try {
        return run(cmd, config_path, out_path, threads_flag);
    } catch (const IoError &e) {
        std::cerr << "majlab: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError &e) {
        std::cerr << "majlab: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const RangeError &e) {
        std::cerr << "majlab: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const PreconditionError &e) {
        std::cerr << "majlab: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const DomainError &e) {
        std::cerr << "majlab: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const ResourceError &e) {
        std::cerr << "majlab: config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "majlab: internal error: " << e.what() << '\n';
        return kExitFailure;
    }
}
