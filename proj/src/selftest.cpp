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

// Invariant suite run by `majlab selftest`. Every check uses fixed seeds.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "majlab/bdg_models.hpp"
#include "majlab/bdg_spectrum.hpp"
#include "majlab/bdg_topology.hpp"
#include "majlab/braid.hpp"
#include "majlab/fock.hpp"
#include "majlab/harness.hpp"
#include "majlab/hybrid_gates.hpp"
#include "majlab/linalg.hpp"
#include "majlab/majorana_algebra.hpp"
#include "majlab/many_body.hpp"

namespace majlab::harness {

namespace {

using algebra::MajoranaMonomial;
using algebra::MajoranaPolynomial;
using Check = std::function<std::string(bool &)>;

struct LineFit {
    double slope;
    double intercept;
    double r2;
    double max_residual;
};

LineFit fit_line(const std::vector<double> &x, const std::vector<double> &y) {
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
        syy += (y[i] - my) * (y[i] - my);
    }
    LineFit f{sxy / sxx, 0.0, 0.0, 0.0};
    f.intercept = my - f.slope * mx;
    double ss_res = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (f.intercept + f.slope * x[i]);
        ss_res += r * r;
        f.max_residual = std::max(f.max_residual, std::abs(r));
    }
    f.r2 = syy > 0 ? 1.0 - ss_res / syy : 1.0;
    return f;
}

std::string fmt(double x) {
    std::ostringstream s;
    s.precision(3);
    s << x;
    return s.str();
}

braid::BraidWord random_word(std::mt19937_64 &rng, int n_strands, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len), gen(1, n_strands - 1), sign(0, 1);
    std::vector<braid::BraidLetter> letters;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back({gen(rng), sign(rng) ? 1 : -1});
    return braid::BraidWord(n_strands, letters);
}

// ---- majorana-algebra -----------------------------------------------------

std::string clifford_relations(bool &ok) {
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        const algebra::FockSpace space(n);
        for (int k = 1; k <= 2 * n; ++k) {
            for (int l = 1; l <= 2 * n; ++l) {
                const auto gk = MajoranaMonomial::generator(k, n), gl = MajoranaMonomial::generator(l, n);
                const auto anti = MajoranaPolynomial(gk * gl) + MajoranaPolynomial(gl * gk);
                if (!(anti == MajoranaPolynomial::scalar(k == l ? 2.0 : 0.0, n))) ok = false;
                const auto a = space.generator(k), b = space.generator(l);
                const Eigen::MatrixXcd expect =
                    (k == l ? 2.0 : 0.0) * Eigen::MatrixXcd::Identity(space.dim(), space.dim());
                worst = std::max(worst, (a * b + b * a - expect).cwiseAbs().maxCoeff());
            }
        }
    }
    ok = ok && worst < 1e-13;
    return "max Fock deviation " + fmt(worst);
}

std::string pair_square(bool &ok) {
    const auto m = MajoranaMonomial::generator(1, 2) * MajoranaMonomial::generator(2, 2);
    const auto sq = m * m;
    const algebra::FockSpace space(2);
    const Eigen::MatrixXcd g12 = space.generator(1) * space.generator(2);
    const double num = (g12 * g12 + Eigen::MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff();
    ok = sq.support().empty() && sq.phase() == algebra::cplx(-1.0, 0.0) && num < 1e-13;
    return "symbolic phase " + fmt(sq.phase().real()) + ", Fock deviation " + fmt(num);
}

std::string even_monomials_conserve_parity(bool &ok) {
    const int n = 3;
    const algebra::FockSpace space(n);
    const Eigen::MatrixXcd p = space.total_parity();
    double worst = 0.0;
    for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
        std::vector<int> order;
        for (int j = 0; j < 2 * n; ++j) {
            if (mask & (1 << j)) order.push_back(j + 1);
        }
        if (order.size() % 2 != 0) continue;
        const Eigen::MatrixXcd a = space.monomial(MajoranaMonomial::from_product(order, n));
        worst = std::max(worst, (p * a * p - a).norm());
    }
    ok = worst < 1e-13;
    return "max ||PAP - A|| " + fmt(worst);
}

std::string basis_round_trips(bool &ok) {
    const int n = 3;
    for (int k = 1; k <= n; ++k) {
        for (bool creation : {false, true}) {
            const algebra::DiracLinear op({k, creation}, n);
            if (!(algebra::to_dirac(algebra::to_majorana(op)) == op)) ok = false;
        }
    }
    for (int j = 1; j <= 2 * n; ++j) {
        const MajoranaPolynomial g(MajoranaMonomial::generator(j, n));
        if (!(algebra::to_majorana(algebra::to_dirac(g)) == g)) ok = false;
    }
    return "all modes of N = 3";
}

std::string u1_rotation_inverse(bool &ok) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> angle(-std::numbers::pi, std::numbers::pi);
    const int n = 2;
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double phi = angle(rng);
        for (int k = 1; k <= n; ++k) {
            const auto fwd = algebra::u1_rotate_modes(phi, k, n);
            const auto back = algebra::u1_rotate_modes(-phi, k, n);
            for (int j = 2 * k - 1; j <= 2 * k; ++j) {
                const MajoranaPolynomial g(MajoranaMonomial::generator(j, n));
                const auto diff = algebra::apply(fwd, algebra::apply(back, g)) - g;
                for (const auto &[s, c] : diff.terms()) worst = std::max(worst, std::abs(c));
            }
        }
    }
    ok = worst < 1e-14;
    return "max deviation " + fmt(worst);
}

// ---- bdg-core ---------------------------------------------------------------

std::string phs_of_built_models(bool &ok) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst_c = 0.0, worst_e = 0.0;
    auto check = [&](const bdg::BdGMatrix &h) {
        worst_c = std::max(worst_c, h.phs_residual());
        worst_e = std::max(worst_e, bdg::phs_pairing_residual(bdg::eigenvalues(h)));
    };
    for (int trial = 0; trial < 10; ++trial) {
        bdg::KitaevChainParams k{12 + trial, 1.0, u(rng), u(rng),
                                 trial % 2 ? bdg::Boundary::periodic : bdg::Boundary::open};
        check(bdg::build_kitaev_bdg(k));
        bdg::NanowireParams w;
        w.n_sites = 10 + trial;
        w.mu = u(rng);
        w.alpha_so = u(rng);
        w.e_zeeman = std::abs(u(rng));
        w.delta = std::abs(u(rng));
        w.boundary = trial % 2 ? bdg::Boundary::periodic : bdg::Boundary::open;
        check(bdg::build_nanowire_bdg(w));
    }
    check(bdg::build_nanowire_bdg(bdg::NanowireParams::insb_preset()));
    for (int trial = 0; trial < 20; ++trial) {
        const bdg::NambuLayout layout{4, trial % 2 + 1};
        Eigen::MatrixXcd m(layout.dim(), layout.dim());
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = {u(rng), u(rng)};
        }
        m = (m + m.adjoint()).eval();
        check({bdg::symmetrize_phs(m, layout), layout, bdg::Boundary::open});
    }
    ok = worst_c < 1e-12 && worst_e < 1e-10;
    return "||hC + Ch|| " + fmt(worst_c) + ", max |E_n + E_-n| " + fmt(worst_e);
}

std::string splitting_decays_exponentially(bool &ok) {
    std::vector<double> ns, logs;
    const double t = 1.0, delta = 0.2;
    const double mu = -2.0 * std::sqrt(t * t - delta * delta) * std::cos(std::numbers::pi / 5.0);
    for (int n = 20; n <= 80; n += 10) {
        const auto ev = bdg::eigenvalues(bdg::build_kitaev_bdg({n, t, mu, delta, bdg::Boundary::open}));
        ns.push_back(n);
        logs.push_back(std::log(ev.cwiseAbs().minCoeff()));
    }
    const auto f = fit_line(ns, logs);
    ok = f.slope < 0.0 && f.r2 > 0.99;
    return "slope " + fmt(f.slope) + ", R^2 " + fmt(f.r2);
}

std::string decay_length_matches_coherence_length(bool &ok) {
    const bdg::KitaevChainParams p{200, 1.0, 0.0, 0.1, bdg::Boundary::open};
    const auto rep = bdg::find_zero_modes(bdg::diagonalize(bdg::build_kitaev_bdg(p)),
                                          bdg::default_zero_mode_threshold(p.delta));
    const double xi = bdg::kitaev_coherence_length(p);
    const double rel = std::abs(rep.decay_length_fit - xi) / xi;
    ok = rep.count == 2 && rel < 0.1;
    return "fit " + fmt(rep.decay_length_fit) + " vs " + fmt(xi) + " (rel " + fmt(rel) + ")";
}

std::string charge_methods_agree(bool &ok) {
    bdg::NanowireParams w;
    w.alpha_so = 1.0;
    w.delta = 1.0;
    const int n = 20;
    const double ez_step = 3.0 / (n - 1), mu_step = 6.0 / (n - 1);
    int compared = 0, mismatched = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            w.e_zeeman = i * ez_step;
            w.mu = -3.0 + j * mu_step;
            const double dist = std::abs(std::hypot(w.mu, w.delta) - w.e_zeeman);
            if (dist < std::max(ez_step, mu_step)) continue;
            ++compared;
            if (bdg::topological_charge(w, bdg::ChargeMethod::analytic) !=
                bdg::topological_charge(w, bdg::ChargeMethod::numeric)) {
                ++mismatched;
            }
        }
    }
    ok = mismatched == 0 && compared > 0;
    return std::to_string(compared) + " points compared, " + std::to_string(mismatched) + " mismatched";
}

std::string many_body_equivalence(bool &ok) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> tt(0.5, 1.5), mu(-3.0, 3.0), dd(-1.5, 1.5);
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 10; ++trial) {
            const bool periodic = n > 2 && trial % 2 == 1;
            const bdg::KitaevChainParams p{n, tt(rng), mu(rng), dd(rng),
                                           periodic ? bdg::Boundary::periodic : bdg::Boundary::open};
            worst = std::max(worst, bdg::many_body_oracle(p).max_level_mismatch);
        }
    }
    ok = worst < 1e-9;
    return "max level mismatch " + fmt(worst);
}

// ---- braid-engine -----------------------------------------------------------

std::string representation_consistency(bool &ok) {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> strands(2, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto w = random_word(rng, strands(rng), 12);
        const algebra::FockSpace space((w.n_strands() + 1) / 2);
        const Eigen::MatrixXcd u = braid::word_unitary(w, space);
        const auto action = braid::word_action(w);
        for (int j = 1; j <= w.n_strands(); ++j) {
            const auto [target, sign] = action.image(j);
            const Eigen::MatrixXcd lhs = u.adjoint() * space.generator(j) * u;
            worst = std::max(worst, (lhs - double(sign) * space.generator(target)).cwiseAbs().maxCoeff());
        }
    }
    ok = worst < 1e-11;
    return "max residual " + fmt(worst);
}

std::string braids_conserve_parity(bool &ok) {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> strands(2, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_word(rng, strands(rng), 12);
        const algebra::FockSpace space((w.n_strands() + 1) / 2);
        const Eigen::MatrixXcd u = braid::word_unitary(w, space);
        const Eigen::MatrixXcd p = space.total_parity();
        worst = std::max(worst, (u * p - p * u).cwiseAbs().maxCoeff());
    }
    ok = worst < 1e-12;
    return "max ||[U, P]|| " + fmt(worst);
}

std::string word_times_inverse_is_identity(bool &ok) {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> strands(2, 6);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto w = random_word(rng, strands(rng), 12);
        const auto ww = w.then(w.inverse());
        if (!braid::word_action(ww).is_identity()) ok = false;
        const int modes = (w.n_strands() + 1) / 2;
        const Eigen::MatrixXcd u = braid::word_unitary(ww, modes);
        worst = std::max(worst, distance_mod_phase(u, Eigen::MatrixXcd::Identity(u.rows(), u.cols())));
    }
    ok = ok && worst < 1e-12;
    return "max Fock deviation " + fmt(worst);
}

std::string braid_group_relations(bool &ok) {
    int checks = 0;
    for (int n = 2; n <= 6; ++n) {
        for (auto rep : {braid::Representation::signed_perm, braid::Representation::fock}) {
            const auto r = braid::verify_braid_relations(n, rep);
            checks += static_cast<int>(r.checks.size());
            if (!r.all_passed()) ok = false;
        }
    }
    return std::to_string(checks) + " relation checks";
}

std::string braid_gates_are_clifford(bool &ok) {
    std::vector<braid::Gate2> gens;
    for (int k = 1; k <= 3; ++k) gens.push_back(braid::logical_gate_from_word(braid::BraidWord(4, {{k, 1}})).matrix);
    const auto group = braid::clifford_closure(gens);
    std::vector<braid::BraidLetter> alphabet;
    for (int k = 1; k <= 3; ++k) {
        alphabet.push_back({k, 1});
        alphabet.push_back({k, -1});
    }
    int words = 0;
    std::function<void(std::vector<braid::BraidLetter> &)> visit = [&](std::vector<braid::BraidLetter> &letters) {
        ++words;
        if (!braid::contains_mod_phase(group, braid::logical_gate_from_word(braid::BraidWord(4, letters)).matrix)) {
            ok = false;
        }
        if (letters.size() == 3) return;
        for (const auto &l : alphabet) {
            letters.push_back(l);
            visit(letters);
            letters.pop_back();
        }
    };
    std::vector<braid::BraidLetter> empty;
    visit(empty);
    ok = ok && group.closed && group.elements.size() == 24;
    return std::to_string(group.elements.size()) + " group elements, " + std::to_string(words) + " words";
}

// ---- hybrid-gates -----------------------------------------------------------

std::string splitting_scaling(bool &ok) {
    std::vector<double> x, y;
    double prev = INFINITY;
    for (int i = 0; i < 20; ++i) {
        const double ratio = 0.5 + 0.5 * i;
        const double d = hybrid::charge_splitting(ratio * 2.0, 2.0, 0.7);
        if (!(d < prev)) ok = false;
        prev = d;
        x.push_back(std::sqrt(ratio));
        y.push_back(std::log(d));
    }
    const auto f = fit_line(x, y);
    const double slope_err = std::abs(f.slope + std::sqrt(8.0));
    ok = ok && slope_err < 1e-12 && f.max_residual < 1e-12;
    return "slope error " + fmt(slope_err) + ", max residual " + fmt(f.max_residual);
}

std::string phase_gate_accuracy(bool &ok) {
    std::mt19937_64 rng(51);
    std::uniform_real_distribution<double> phi(-std::numbers::pi, std::numbers::pi), delta(0.05, 20.0);
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const double p = phi(rng);
        const auto gate = hybrid::simulate_phase_gate(hybrid::phase_gate_plan(p, delta(rng)));
        worst = std::max(worst, distance_mod_phase(gate.matrix, braid::exp_i_pauli(p, braid::pauli_z())));
    }
    ok = worst < 1e-12;
    return "max error " + fmt(worst);
}

std::string dispersive_converges_to_oracle(bool &ok) {
    double prev = INFINITY, at20 = 0.0;
    std::string detail;
    for (double ratio : {5.0, 10.0, 20.0, 40.0}) {
        hybrid::ReadoutParams r;
        r.omega0 = 10.0;
        r.g_jc = 0.1;
        r.depsilon = r.omega0 - ratio * r.g_jc;
        const double formula = hybrid::dispersive_shift(r) - r.omega0;
        const double exact = hybrid::jc_oracle(r, 8).cavity_frequency - r.omega0;
        const double rel = std::abs(formula - exact) / std::abs(exact);
        if (!(rel < prev)) ok = false;
        prev = rel;
        if (ratio == 20.0) at20 = rel;
        detail += (detail.empty() ? "" : ", ") + fmt(rel);
    }
    ok = ok && at20 < 1e-2;
    return "relative errors " + detail;
}

std::string readout_contrast_is_odd(bool &ok) {
    std::mt19937_64 rng(52);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        hybrid::ReadoutParams r;
        r.omega0 = 5.0 + u(rng);
        r.g_jc = 0.05 * u(rng);
        r.depsilon = 3.0 + u(rng);
        r.delta = 0.1 * (u(rng) - 0.5);
        r.sigma_z = 1;
        const double plus = hybrid::dispersive_shift(r) - r.omega0;
        r.sigma_z = -1;
        r.delta = -r.delta;
        const double minus = hybrid::dispersive_shift(r) - r.omega0;
        if (plus != minus) ok = false;
    }
    return "100 random readouts";
}

// ---- cli-harness ------------------------------------------------------------

RunConfig determinism_config() {
    return parse_run_config(nlohmann::json::parse(R"({
        "model": "kitaev", "observable": "zero_modes",
        "parameters": {"n_sites": 24, "t": 1.0, "mu": 0.0, "delta": 0.5},
        "sweep": [{"parameter": "mu", "start": 2.5, "stop": -2.5, "points": 6},
                  {"parameter": "delta", "start": 0.2, "stop": 1.0, "points": 5}]})"));
}

std::string output_determinism(int threads, bool &ok) {
    const auto cfg = determinism_config();
    const auto ref_csv = emit_table(run_sweep(cfg, 1), OutputFormat::csv);
    const auto ref_json = emit_table(run_sweep(cfg, 1), OutputFormat::json);
    for (int th : {2, 3, std::max(4, threads)}) {
        const auto t = run_sweep(cfg, th);
        if (emit_table(t, OutputFormat::csv) != ref_csv || emit_table(t, OutputFormat::json) != ref_json) ok = false;
    }
    return std::to_string(ref_csv.size()) + " CSV bytes compared over 4 thread counts";
}

std::string config_hash_tracks_semantics(bool &ok) {
    const auto base = determinism_config();
    const auto h = config_hash(base);
    auto same = base;
    same.threads = 7;
    same.output_path = "elsewhere.csv";
    same.format = OutputFormat::json;
    same.parameters["n_sites"] = 24;  // integer spelling of the same value
    if (config_hash(same) != h) ok = false;
    std::vector<RunConfig> changed(6, base);
    changed[0].model = Model::nanowire;
    changed[1].observable = "charge";
    changed[2].parameters["t"] = 1.5;
    changed[3].sweep[0].points = 7;
    changed[4].sweep[1].stop = 1.1;
    changed[5].sweep.pop_back();
    for (const auto &c : changed) {
        if (config_hash(c) == h) ok = false;
    }
    return "1 neutral and 6 semantic edits";
}

}  // namespace

SelftestReport run_selftest(std::ostream &log, int threads) {
    const std::vector<std::pair<std::string, Check>> suite = {
        {"algebra.clifford_relations", clifford_relations},
        {"algebra.pair_square", pair_square},
        {"algebra.even_monomials_conserve_parity", even_monomials_conserve_parity},
        {"algebra.basis_round_trips", basis_round_trips},
        {"algebra.u1_rotation_inverse", u1_rotation_inverse},
        {"bdg.phs_of_built_models", phs_of_built_models},
        {"bdg.splitting_decays_exponentially", splitting_decays_exponentially},
        {"bdg.decay_length", decay_length_matches_coherence_length},
        {"bdg.charge_methods_agree", charge_methods_agree},
        {"bdg.many_body_equivalence", many_body_equivalence},
        {"braid.representation_consistency", representation_consistency},
        {"braid.parity_conservation", braids_conserve_parity},
        {"braid.word_times_inverse", word_times_inverse_is_identity},
        {"braid.group_relations", braid_group_relations},
        {"braid.gates_are_clifford", braid_gates_are_clifford},
        {"hybrid.splitting_scaling", splitting_scaling},
        {"hybrid.phase_gate", phase_gate_accuracy},
        {"hybrid.dispersive_convergence", dispersive_converges_to_oracle},
        {"hybrid.readout_contrast_odd", readout_contrast_is_odd},
        {"harness.output_determinism", [threads](bool &ok) { return output_determinism(threads, ok); }},
        {"harness.config_hash", config_hash_tracks_semantics},
    };
    SelftestReport report;
    const auto start = std::chrono::steady_clock::now();
    for (const auto &[name, check] : suite) {
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        std::string detail;
        try {
            detail = check(ok);
        } catch (const std::exception &e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.results.push_back({name, ok, secs, detail});
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.3f s", secs);
        log << (ok ? "[PASS] " : "[FAIL] ") << name << " (" << timing << ") " << detail << '\n' << std::flush;
    }
    report.total_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace majlab::harness
