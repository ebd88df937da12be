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

#include "majlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>
#include <type_traits>

#include "majlab/bdg_models.hpp"
#include "majlab/bdg_spectrum.hpp"
#include "majlab/bdg_topology.hpp"
#include "majlab/braid.hpp"
#include "majlab/errors.hpp"
#include "majlab/hybrid_gates.hpp"

namespace majlab::harness {

using nlohmann::json;

const char *to_string(Model m) {
    switch (m) {
        case Model::kitaev: return "kitaev";
        case Model::nanowire: return "nanowire";
        case Model::braid: return "braid";
        case Model::readout: return "readout";
    }
    return "?";
}

double SweepAxis::value(int i) const {
    if (i == points - 1) return stop;
    return start + (stop - start) * static_cast<double>(i) / static_cast<double>(points - 1);
}

namespace {

Model parse_model(const std::string &s) {
    if (s == "kitaev") return Model::kitaev;
    if (s == "nanowire") return Model::nanowire;
    if (s == "braid") return Model::braid;
    if (s == "readout") return Model::readout;
    throw ConfigError("unknown model '" + s + "' (expected kitaev, nanowire, braid or readout)");
}

std::vector<std::string> split_path(const std::string &path) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : path) {
        if (ch == '.') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    for (const auto &p : parts) {
        if (p.empty()) throw ConfigError("invalid parameter path '" + path + "'");
    }
    return parts;
}

const json *find_path(const json &doc, const std::string &path) {
    const json *node = &doc;
    for (const auto &key : split_path(path)) {
        if (!node->is_object()) return nullptr;
        auto it = node->find(key);
        if (it == node->end()) return nullptr;
        node = &*it;
    }
    return node;
}

void set_path(json &doc, const std::string &path, double value) {
    json *node = &doc;
    for (const auto &key : split_path(path)) node = &(*node)[key];
    *node = value;
}

// Keys each model understands. Anything else is a typo and rejected.
const std::set<std::string> &allowed_keys(Model m) {
    static const std::set<std::string> kitaev{"n_sites", "t", "mu", "delta", "boundary", "k_points",
                                              "k_grid", "threshold", "energy_unit"};
    static const std::set<std::string> nanowire{"n_sites", "lattice_spacing", "mass", "mu", "alpha_so",
                                                "e_zeeman", "delta", "boundary", "hbar", "preset",
                                                "k_points", "k_grid", "threshold", "energy_unit"};
    static const std::set<std::string> braid{"word", "n_strands"};
    static const std::set<std::string> readout{"e_j0", "e_c", "flux", "flux_to_angle", "delta0", "omega0",
                                               "g_jc", "depsilon", "hbar", "energy_unit"};
    switch (m) {
        case Model::kitaev: return kitaev;
        case Model::nanowire: return nanowire;
        case Model::braid: return braid;
        case Model::readout: return readout;
    }
    return kitaev;
}

// Numbers become doubles so that 1 and 1.0 hash alike.
json normalized(const json &j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_object()) {
        json out = json::object();
        for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = normalized(it.value());
        return out;
    }
    if (j.is_array()) {
        json out = json::array();
        for (const auto &v : j) out.push_back(normalized(v));
        return out;
    }
    return j;
}

class Params {
  public:
    explicit Params(const json &doc) : doc_(doc) {}

    bool has(const std::string &key) const { return doc_.contains(key); }

    double number(const std::string &key, double fallback) const {
        if (!has(key)) return fallback;
        const json &v = doc_.at(key);
        if (!v.is_number()) throw ConfigError("parameter '" + key + "' must be a number");
        return v.get<double>();
    }

    double required(const std::string &key) const {
        if (!has(key)) throw ConfigError("missing parameter '" + key + "'");
        return number(key, 0.0);
    }

    int integer(const std::string &key, int fallback) const {
        if (!has(key)) return fallback;
        const double x = number(key, 0.0);
        if (std::abs(x - std::round(x)) > 1e-9 || std::abs(x) > 1e9) {
            throw ConfigError("parameter '" + key + "' must be an integer");
        }
        return static_cast<int>(std::lround(x));
    }

    std::string text(const std::string &key, const std::string &fallback) const {
        if (!has(key)) return fallback;
        const json &v = doc_.at(key);
        if (!v.is_string()) throw ConfigError("parameter '" + key + "' must be a string");
        return v.get<std::string>();
    }

    bdg::Boundary boundary() const {
        const std::string b = text("boundary", "open");
        if (b == "open") return bdg::Boundary::open;
        if (b == "periodic") return bdg::Boundary::periodic;
        throw ConfigError("boundary must be 'open' or 'periodic'");
    }

  private:
    const json &doc_;
};

bdg::KitaevChainParams kitaev_params(const Params &p) {
    bdg::KitaevChainParams k;
    k.n_sites = p.integer("n_sites", 40);
    k.t = p.number("t", 1.0);
    k.mu = p.number("mu", 0.0);
    k.delta = p.number("delta", 0.0);
    k.boundary = p.boundary();
    k.validate();
    return k;
}

bdg::NanowireParams nanowire_params(const Params &p) {
    bdg::NanowireParams w;
    const std::string preset = p.text("preset", "");
    if (preset == "insb") {
        w = bdg::NanowireParams::insb_preset();
    } else if (!preset.empty()) {
        throw ConfigError("unknown nanowire preset '" + preset + "'");
    } else {
        w.n_sites = 200;
    }
    w.n_sites = p.integer("n_sites", w.n_sites);
    w.lattice_spacing = p.number("lattice_spacing", w.lattice_spacing);
    w.mass = p.number("mass", w.mass);
    w.mu = p.number("mu", w.mu);
    w.alpha_so = p.number("alpha_so", w.alpha_so);
    w.e_zeeman = p.number("e_zeeman", w.e_zeeman);
    w.delta = p.number("delta", w.delta);
    w.hbar = p.number("hbar", w.hbar);
    if (p.has("boundary")) w.boundary = p.boundary();
    w.validate();
    return w;
}

using Rows = std::vector<std::vector<Cell>>;

struct Evaluator {
    std::vector<std::string> columns;
    // Rows for one grid point, without the sweep coordinate columns.
    std::function<Rows(const json &)> rows;
};

template <class P>
bdg::BdGMatrix build(const P &p) {
    if constexpr (std::is_same_v<P, bdg::KitaevChainParams>) {
        return bdg::build_kitaev_bdg(p);
    } else {
        return bdg::build_nanowire_bdg(p);
    }
}

template <class P>
bdg::LatticeCell cell_of(const P &p) {
    if constexpr (std::is_same_v<P, bdg::KitaevChainParams>) {
        return bdg::kitaev_cell(p);
    } else {
        return bdg::nanowire_cell(p);
    }
}

template <class P>
double pairing_scale(const P &p) {
    if constexpr (std::is_same_v<P, bdg::KitaevChainParams>) {
        return p.delta != 0.0 ? std::abs(p.delta) : p.t;
    } else {
        return p.delta != 0.0 ? p.delta : p.hopping();
    }
}

template <class P>
Evaluator lattice_evaluator(const std::string &observable, P (*read)(const Params &)) {
    if (observable == "eigenvalues") {
        return {{"index", "energy"}, [read](const json &doc) {
                    const auto ev = bdg::eigenvalues(build(read(Params(doc))));
                    Rows out;
                    for (Eigen::Index i = 0; i < ev.size(); ++i) out.push_back({static_cast<long long>(i), ev(i)});
                    return out;
                }};
    }
    if (observable == "dispersion") {
        return {{"k", "band", "energy"}, [read](const json &doc) {
                    const Params p(doc);
                    const int nk = p.integer("k_points", 201);
                    if (nk < 2) throw ConfigError("k_points must be at least 2");
                    const auto cell = cell_of(read(p));
                    Rows out;
                    for (int j = 0; j < nk; ++j) {
                        const double k = -std::numbers::pi + 2.0 * std::numbers::pi * j / (nk - 1);
                        Eigen::SelfAdjointEigenSolver<bdg::CMatrix> eig(bdg::bloch_hamiltonian(cell, k),
                                                                        Eigen::EigenvaluesOnly);
                        for (Eigen::Index b = 0; b < eig.eigenvalues().size(); ++b) {
                            out.push_back({k, static_cast<long long>(b), eig.eigenvalues()(b)});
                        }
                    }
                    return out;
                }};
    }
    if (observable == "bulk_gap") {
        return {{"bulk_gap"}, [read](const json &doc) {
                    const Params p(doc);
                    auto m = read(p);
                    m.boundary = bdg::Boundary::periodic;
                    return Rows{{bdg::bulk_gap(m, p.integer("k_grid", 512))}};
                }};
    }
    if (observable == "charge") {
        return {{"charge_analytic", "charge_numeric"}, [read](const json &doc) {
                    const auto m = read(Params(doc));
                    return Rows{{static_cast<long long>(bdg::topological_charge(m, bdg::ChargeMethod::analytic)),
                                 static_cast<long long>(bdg::topological_charge(m, bdg::ChargeMethod::numeric))}};
                }};
    }
    if (observable == "min_abs_energy") {
        return {{"min_abs_energy"}, [read](const json &doc) {
                    const auto ev = bdg::eigenvalues(build(read(Params(doc))));
                    return Rows{{ev.cwiseAbs().minCoeff()}};
                }};
    }
    if (observable == "zero_modes") {
        return {{"count", "min_abs_energy", "decay_length", "max_majorana_residual", "unresolved"},
                [read](const json &doc) {
                    const Params p(doc);
                    const auto m = read(p);
                    const auto spec = bdg::diagonalize(build(m));
                    const double thr =
                        p.number("threshold", bdg::default_zero_mode_threshold(pairing_scale(m)));
                    const auto rep = bdg::find_zero_modes(spec, thr);
                    double worst = 0.0;
                    for (double r : rep.majorana_residuals) worst = std::max(worst, r);
                    return Rows{{static_cast<long long>(rep.count), spec.eigenvalues.cwiseAbs().minCoeff(),
                                 rep.decay_length_fit, worst, static_cast<long long>(rep.unresolved_degeneracy)}};
                }};
    }
    throw ConfigError("unknown observable '" + observable + "'");
}

Evaluator make_evaluator(Model model, const std::string &observable) {
    switch (model) {
        case Model::kitaev: return lattice_evaluator<bdg::KitaevChainParams>(observable, &kitaev_params);
        case Model::nanowire:
            if (observable == "k0_gap") {
                return {{"k0_gap"}, [](const json &doc) {
                            const auto w = nanowire_params(Params(doc));
                            return Rows{{bdg::nanowire_k0_gap(w.mu, w.delta, w.e_zeeman)}};
                        }};
            }
            return lattice_evaluator<bdg::NanowireParams>(observable, &nanowire_params);
        case Model::readout:
            if (observable != "readout") throw ConfigError("unknown observable '" + observable + "'");
            return {{"ej_over_ec", "delta", "omega_res_plus", "omega_res_minus", "dispersive"},
                    [](const json &doc) {
                        const Params p(doc);
                        hybrid::CooperPairBoxParams box;
                        box.e_j0 = p.required("e_j0");
                        box.e_c = p.required("e_c");
                        box.flux = p.number("flux", 0.0);
                        box.flux_to_angle = p.number("flux_to_angle", 1.0);
                        box.delta0 = p.number("delta0", 1.0);
                        const double ej = hybrid::josephson_energy(box);
                        const double split = hybrid::charge_splitting(box);
                        hybrid::ReadoutParams r;
                        r.omega0 = p.required("omega0");
                        r.g_jc = p.required("g_jc");
                        r.depsilon = p.required("depsilon");
                        r.hbar = p.number("hbar", 1.0);
                        r.delta = split;
                        const auto c = hybrid::readout_contrast(r);
                        r.sigma_z = 1;
                        const bool disp = r.dispersive_regime();
                        r.sigma_z = -1;
                        return Rows{{ej / box.e_c, split, c.omega_plus, c.omega_minus,
                                     static_cast<long long>(disp && r.dispersive_regime())}};
                    }};
        case Model::braid: break;
    }
    throw ConfigError("model '" + std::string(to_string(model)) + "' has no tabular observables");
}

}  // namespace

RunConfig parse_run_config(const json &doc) {
    if (!doc.is_object()) throw ConfigError("config must be a JSON object");
    static const std::set<std::string> top{"model", "observable", "parameters", "sweep", "output", "threads"};
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!top.count(it.key())) throw ConfigError("unknown config field '" + it.key() + "'");
    }
    RunConfig cfg;
    try {
        if (!doc.contains("model")) throw ConfigError("config needs a 'model'");
        cfg.model = parse_model(doc.at("model").get<std::string>());
        if (doc.contains("observable")) cfg.observable = doc.at("observable").get<std::string>();
        if (doc.contains("parameters")) {
            cfg.parameters = doc.at("parameters");
            if (!cfg.parameters.is_object()) throw ConfigError("'parameters' must be an object");
        }
        for (auto it = cfg.parameters.begin(); it != cfg.parameters.end(); ++it) {
            if (!allowed_keys(cfg.model).count(it.key())) {
                throw ConfigError("unknown parameter '" + it.key() + "' for model " + to_string(cfg.model));
            }
        }
        if (doc.contains("sweep")) {
            const json &sw = doc.at("sweep");
            if (!sw.is_array()) throw ConfigError("'sweep' must be a list of axes");
            if (sw.size() > 2) throw ConfigError("at most two sweep axes are supported");
            for (const auto &a : sw) {
                SweepAxis axis;
                axis.parameter = a.at("parameter").get<std::string>();
                axis.start = a.at("start").get<double>();
                axis.stop = a.at("stop").get<double>();
                axis.points = a.at("points").get<int>();
                if (axis.points < 2) throw ConfigError("sweep axis '" + axis.parameter + "' needs points >= 2");
                if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
                    throw ConfigError("sweep axis '" + axis.parameter + "' needs finite bounds");
                }
                const json *target = find_path(cfg.parameters, axis.parameter);
                if (target == nullptr || !target->is_number()) {
                    throw ConfigError("sweep axis '" + axis.parameter + "' does not name a numeric parameter");
                }
                for (const auto &other : cfg.sweep) {
                    if (other.parameter == axis.parameter) throw ConfigError("duplicate sweep axis");
                }
                cfg.sweep.push_back(axis);
            }
        }
        if (doc.contains("output")) {
            const json &out = doc.at("output");
            if (out.is_string()) {
                cfg.output_path = out.get<std::string>();
            } else {
                if (out.contains("path")) cfg.output_path = out.at("path").get<std::string>();
                if (out.contains("format")) {
                    const auto f = out.at("format").get<std::string>();
                    if (f == "csv") {
                        cfg.format = OutputFormat::csv;
                    } else if (f == "json") {
                        cfg.format = OutputFormat::json;
                    } else {
                        throw ConfigError("output format must be 'csv' or 'json'");
                    }
                }
            }
        }
        if (doc.contains("threads")) {
            const json &th = doc.at("threads");
            if (th.is_string() && th.get<std::string>() == "auto") {
                cfg.threads = 0;
            } else if (th.is_number_integer() && th.get<long long>() > 0 && th.get<long long>() <= 4096) {
                cfg.threads = th.get<int>();
            } else {
                throw ConfigError("threads must be a positive integer or \"auto\"");
            }
        }
    } catch (const json::exception &e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
    return cfg;
}

RunConfig load_run_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    return parse_run_config(doc);
}

std::string canonical_config(const RunConfig &cfg) {
    json doc = json::object();
    doc["model"] = to_string(cfg.model);
    doc["observable"] = cfg.observable;
    doc["parameters"] = normalized(cfg.parameters);
    json sweep = json::array();
    for (const auto &a : cfg.sweep) {
        sweep.push_back({{"parameter", a.parameter},
                         {"start", a.start},
                         {"stop", a.stop},
                         {"points", static_cast<double>(a.points)}});
    }
    doc["sweep"] = sweep;
    return doc.dump();
}

std::string config_hash(const RunConfig &cfg) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_config(cfg)) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string default_observable(const std::string &subcommand, Model model) {
    if (subcommand == "spectrum") return "eigenvalues";
    if (subcommand == "phase-diagram") return "charge";
    if (subcommand == "zero-modes") return "zero_modes";
    if (subcommand == "readout" || model == Model::readout) return "readout";
    return "";
}

ResultTable run_sweep(const RunConfig &cfg, int threads) {
    const Evaluator eval = make_evaluator(cfg.model, cfg.observable);

    // Grid points in lexicographic order of their coordinates.
    std::vector<std::vector<double>> points{{}};
    for (const auto &axis : cfg.sweep) {
        std::vector<double> values;
        for (int i = 0; i < axis.points; ++i) values.push_back(axis.value(i));
        std::sort(values.begin(), values.end());
        std::vector<std::vector<double>> next;
        for (const auto &p : points) {
            for (double v : values) {
                next.push_back(p);
                next.back().push_back(v);
            }
        }
        points = std::move(next);
    }

    std::vector<Rows> results(points.size());
    std::vector<std::exception_ptr> errors(points.size());
    std::atomic<std::size_t> next_index{0};
    auto worker = [&] {
        for (std::size_t i = next_index++; i < points.size(); i = next_index++) {
            try {
                json doc = cfg.parameters;
                for (std::size_t a = 0; a < cfg.sweep.size(); ++a) set_path(doc, cfg.sweep[a].parameter, points[i][a]);
                results[i] = eval.rows(doc);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const int n_workers = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(points.size())));
    if (n_workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto &th : pool) th.join();
    }
    for (const auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }

    ResultTable table;
    for (const auto &axis : cfg.sweep) table.columns.push_back(axis.parameter);
    table.columns.insert(table.columns.end(), eval.columns.begin(), eval.columns.end());
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (auto &r : results[i]) {
            std::vector<Cell> row(points[i].begin(), points[i].end());
            row.insert(row.end(), r.begin(), r.end());
            table.rows.push_back(std::move(row));
        }
    }
    table.provenance = {{"tool", kToolVersion},
                        {"config_hash", config_hash(cfg)},
                        {"model", to_string(cfg.model)},
                        {"observable", cfg.observable}};
    return table;
}

namespace {

braid::BraidWord braid_word_of(const RunConfig &cfg, int &n_strands) {
    if (cfg.model != Model::braid) throw ConfigError("braid output needs model 'braid'");
    const Params p(cfg.parameters);
    n_strands = p.integer("n_strands", 4);
    if (n_strands < 2 || n_strands > 2 * algebra::kMaxFockModes) {
        throw ConfigError("n_strands must lie in [2, " + std::to_string(2 * algebra::kMaxFockModes) + "]");
    }
    try {
        return braid::parse_braid_word(p.text("word", ""), n_strands);
    } catch (const ParseError &e) {
        throw ConfigError(std::string("bad braid word: ") + e.what());
    } catch (const RangeError &e) {
        throw ConfigError(std::string("bad braid word: ") + e.what());
    }
}

}  // namespace

json braid_report(const RunConfig &cfg) {
    int n_strands = 0;
    const auto word = braid_word_of(cfg, n_strands);
    json doc = json::object();
    doc["provenance"] = {{"tool", kToolVersion}, {"config_hash", config_hash(cfg)}, {"model", "braid"}};
    doc["word"] = word.to_string();
    doc["n_strands"] = n_strands;
    const auto action = braid::word_action(word);
    json images = json::array();
    for (int j = 1; j <= n_strands; ++j) {
        const auto [target, sign] = action.image(j);
        images.push_back({target, sign});
    }
    doc["action"] = images;
    if (n_strands == 4) {
        const auto gate = braid::logical_gate_from_word(word);
        json m = json::array();
        for (int r = 0; r < 2; ++r) {
            json row = json::array();
            for (int c = 0; c < 2; ++c) row.push_back({gate.matrix(r, c).real(), gate.matrix(r, c).imag()});
            m.push_back(row);
        }
        doc["gate"] = m;
        doc["gate_unitarity_residual"] = gate.unitarity_residual();
    }
    return doc;
}

ResultTable braid_table(const RunConfig &cfg) {
    int n_strands = 0;
    const auto word = braid_word_of(cfg, n_strands);
    if (n_strands != 4) throw ConfigError("tabular braid output needs n_strands = 4 (a logical gate)");
    const auto gate = braid::logical_gate_from_word(word);
    ResultTable t;
    t.columns = {"row", "col", "re", "im"};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            t.rows.push_back({static_cast<long long>(r), static_cast<long long>(c), gate.matrix(r, c).real(),
                              gate.matrix(r, c).imag()});
        }
    }
    t.provenance = {{"tool", kToolVersion}, {"config_hash", config_hash(cfg)}, {"model", "braid"},
                    {"word", word.to_string()}};
    return t;
}

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

namespace {

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

std::string cell_text(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) return format_double(*d);
    if (const auto *i = std::get_if<long long>(&c)) return std::to_string(*i);
    return std::get<std::string>(c);
}

json cell_json(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
    if (const auto *i = std::get_if<long long>(&c)) return *i;
    return std::get<std::string>(c);
}

}  // namespace

void emit_table(const ResultTable &t, OutputFormat format, std::ostream &out) {
    if (format == OutputFormat::csv) {
        for (const auto &[k, v] : t.provenance) out << "# " << k << ": " << v << '\n';
        for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << csv_field(t.columns[i]);
        out << '\n';
        for (const auto &row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(cell_text(row[i]));
            out << '\n';
        }
    } else {
        json doc = json::object();
        json prov = json::object();
        for (const auto &[k, v] : t.provenance) prov[k] = v;
        doc["provenance"] = prov;
        doc["columns"] = t.columns;
        json rows = json::array();
        for (const auto &row : t.rows) {
            json r = json::array();
            for (const auto &c : row) r.push_back(cell_json(c));
            rows.push_back(std::move(r));
        }
        doc["rows"] = std::move(rows);
        out << doc.dump(2) << '\n';
    }
    if (!out) throw IoError("failed to write table");
}

std::string emit_table(const ResultTable &t, OutputFormat format) {
    std::ostringstream s;
    emit_table(t, format, s);
    return s.str();
}

bool SelftestReport::all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const InvariantResult &r) { return r.passed; });
}

}  // namespace majlab::harness
