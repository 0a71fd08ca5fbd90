// Copyright 2026 The fockc Authors
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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include <fockc/cli.hpp>

#include "test_support.hpp"

namespace {

using namespace fockc;

struct Outcome {
    bool passed = false;
    std::string detail;
};

std::string fmt(const char *format, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), format, v);
    return buf;
}

ComplexMatrix lifted_simple_beamsplitter(double t, double p, const TruncationConfig &config) {
    const ComplexMatrix h = matrix_log_unitary(testing::simple_beamsplitter(t, p));
    return matrix_exp_hermitian(lift_two_mode(h, config), kI);
}

double max_outcome_error(const OutcomeDistribution &sim, const OutcomeDistribution &exact) {
    double worst = 0.0;
    for (const auto &[state, p] : exact.entries) {
        const auto it = sim.entries.find(state);
        worst = std::max(worst, std::abs(p - (it == sim.entries.end() ? 0.0 : it->second)));
    }
    return worst;
}

struct Experiment {
    ComplexMatrix u;
    CompiledInterferometer compiled;
    OutcomeDistribution simulated;
    OutcomeDistribution exact;
};

Experiment run_experiment(std::size_t modes, std::uint64_t seed, std::size_t photons,
                          const FockState &input) {
    Experiment e;
    e.u = haar_random_unitary(modes, seed);
    const TruncationConfig config(photons);
    e.compiled = compile_interferometer(e.u, config);
    e.simulated = probabilities(run(e.compiled.circuit, input), modes, config, input.total());
    e.exact = exact_distribution(e.u, input);
    return e;
}

// Truncation at 2^w - 1 levels compared with the three-level closed form.
Outcome two_photon_closed_form() {
    std::mt19937_64 gen(2026);
    std::uniform_real_distribution<double> theta(0.0, std::numbers::pi / 2);
    std::uniform_real_distribution<double> phi(0.0, 2 * std::numbers::pi);
    const TruncationConfig expand(2, ExpansionMode::ExpandTruncation);
    const TruncationConfig pad(2);
    double worst_expand = 0.0, worst_pad = 0.0, worst_low = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double t = theta(gen);
        const double p = phi(gen);
        const ComplexMatrix ref = testing::two_photon_beamsplitter_closed_form(t, p);
        const ComplexMatrix e =
            testing::nine_dim_block(lifted_simple_beamsplitter(t, p, expand), expand.dim());
        const ComplexMatrix q =
            testing::nine_dim_block(lifted_simple_beamsplitter(t, p, pad), pad.dim());
        worst_expand = std::max(worst_expand, max_abs_diff(e, ref));
        worst_pad = std::max(worst_pad, max_abs_diff(q, ref));
        for (Eigen::Index r = 0; r < 9; ++r) {
            for (Eigen::Index c = 0; c < 9; ++c) {
                if (r / 3 + r % 3 <= 2 && c / 3 + c % 3 <= 2) {
                    worst_low = std::max(worst_low, std::abs(e(r, c) - ref(r, c)));
                }
            }
        }
    }
    std::printf("       info: pad truncation, all 81 entries: max error %.2e\n", worst_pad);
    std::printf("       info: expanded truncation, sectors with <= 2 photons: max error %.2e\n",
                worst_low);
    return {worst_expand <= 1e-12,
            "expanded truncation 9x9 block, max entry error " + fmt("%.2e", worst_expand) +
                " (tol 1e-12)"};
}

Outcome clements_round_trip() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const std::size_t m = 2 + seed % 7;
        const ComplexMatrix u = haar_random_unitary(m, seed);
        worst = std::max(worst, max_abs_diff(reconstruct(decompose(u)), u));
    }
    return {worst <= 1e-10, "100 unitaries, m in 2..8, max error " + fmt("%.2e", worst)};
}

Outcome experiment_one() {
    const auto e = run_experiment(3, 42, 3, {{2, 1, 0}});
    const double err = max_outcome_error(e.simulated, e.exact);
    const bool ok = e.compiled.circuit.qubits == 6 && e.exact.entries.size() == 10 &&
                    e.simulated.entries.size() == 10 && err <= 1e-9;
    return {ok, std::to_string(e.compiled.circuit.qubits) + " qubits, depth " +
                    std::to_string(stats(e.compiled.circuit).depth) + ", " +
                    std::to_string(e.exact.entries.size()) + " outcomes, max error " +
                    fmt("%.2e", err)};
}

Outcome experiment_two() {
    const auto e = run_experiment(5, 7, 2, {{2, 0, 0, 0, 0}});
    const double err = max_outcome_error(e.simulated, e.exact);
    double sum = 0.0;
    for (const auto &[state, p] : e.simulated.entries) {
        sum += p;
    }
    const bool ok = e.compiled.circuit.qubits == 10 && e.simulated.entries.size() == 15 &&
                    err <= 1e-9 && std::abs(sum - 1.0) <= 1e-10;
    return {ok, std::to_string(e.compiled.circuit.qubits) + " qubits, " +
                    std::to_string(e.simulated.entries.size()) + " outcomes, max error " +
                    fmt("%.2e", err) + ", sum - 1 = " + fmt("%.1e", sum - 1.0)};
}

Outcome depth_bands() {
    std::size_t lo = SIZE_MAX, hi = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto c = compile_interferometer(haar_random_unitary(2, seed), TruncationConfig(3));
        const std::size_t d = stats(c.circuit).depth;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    const auto five = compile_interferometer(haar_random_unitary(5, 7), TruncationConfig(2));
    const std::size_t d5 = stats(five.circuit).depth;
    const bool ok = lo >= 50 && hi <= 1000 && d5 >= 500 && d5 <= 10000;
    return {ok, "two-mode n=3 depths " + std::to_string(lo) + ".." + std::to_string(hi) +
                    " in [50, 1000]; five-mode n=2 depth " + std::to_string(d5) +
                    " in [500, 10000]"};
}

Outcome hong_ou_mandel() {
    const ComplexMatrix bs = beamsplitter_matrix(std::numbers::pi / 4, 0.0);
    const TruncationConfig config(2);
    const auto c = compile_interferometer(bs, config);
    const FockState input{{1, 1}};
    const auto dist = probabilities(run(c.circuit, input), 2, config, 2);
    const auto exact = exact_distribution(bs, input);
    const double p11 = dist.entries.at({{1, 1}});
    const double p20 = dist.entries.at({{2, 0}});
    const double p02 = dist.entries.at({{0, 2}});
    const double err = max_outcome_error(dist, exact);
    const bool ok = p11 <= 1e-10 && std::abs(p20 - 0.5) <= 1e-9 && std::abs(p02 - 0.5) <= 1e-9 &&
                    err <= 1e-9;
    return {ok, "P(1,1) = " + fmt("%.1e", p11) + ", P(2,0) = " + fmt("%.12f", p20) +
                    ", P(0,2) = " + fmt("%.12f", p02) + ", oracle error " + fmt("%.1e", err)};
}

Outcome invariants() {
    bool ok = true;
    std::ostringstream notes;

    double worst_residual = 0.0;
    for (std::size_t m = 2; m <= 5; ++m) {
        for (std::size_t n = 1; n <= 3; ++n) {
            const TruncationConfig config(n);
            const auto c = compile_interferometer(haar_random_unitary(m, 100 * m + n), config);
            for (std::size_t photons = 1; photons <= n; ++photons) {
                FockState input{std::vector<std::size_t>(m, 0)};
                for (std::size_t k = 0; k < photons; ++k) {
                    ++input.occupations[k % m];
                }
                const auto dist = probabilities(run(c.circuit, input), m, config, photons);
                worst_residual = std::max(worst_residual, dist.residual);
            }
        }
    }
    ok = ok && worst_residual <= 1e-10;
    notes << "residual " << fmt("%.1e", worst_residual);

    double worst_fixed = 0.0;
    for (std::size_t n : {2u, 4u, 5u, 6u}) {
        const TruncationConfig config(n);
        const auto u = truncated_beamsplitter_unitary({0, 0.7, 1.9, 0}, config).matrix;
        for (Eigen::Index idx = 0; idx < u.rows(); ++idx) {
            const auto s = decode_fock(static_cast<std::size_t>(idx), 2, config);
            if (s.occupations[0] > n || s.occupations[1] > n) {
                worst_fixed = std::max(worst_fixed, std::abs(std::abs(u(idx, idx)) - 1.0));
            }
        }
    }
    for (std::size_t n : {2u, 4u, 5u, 6u}) {
        const TruncationConfig config(n);
        const ComplexMatrix u = lifted_simple_beamsplitter(0.6, 2.2, config);
        for (Eigen::Index idx = 0; idx < u.rows(); ++idx) {
            const auto s = decode_fock(static_cast<std::size_t>(idx), 2, config);
            if (s.occupations[0] > n || s.occupations[1] > n) {
                worst_fixed = std::max(worst_fixed, std::abs(u(idx, idx) - 1.0));
            }
        }
    }
    ok = ok && worst_fixed <= 1e-10;
    notes << "; padding fixed points " << fmt("%.1e", worst_fixed);

    double worst_synth = 0.0;
    for (std::size_t k = 1; k <= 4; ++k) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const ComplexMatrix u = haar_random_unitary(std::size_t{1} << k, seed);
            const auto r = synthesize(u);
            worst_synth = std::max(
                worst_synth, max_abs_diff_up_to_phase(testing::circuit_matrix(r.gates, k), u));
        }
    }
    ok = ok && worst_synth <= 1e-9;
    notes << "; synthesis " << fmt("%.1e", worst_synth);

    double worst_perm = 0.0;
    for (std::size_t n = 1; n <= 6; ++n) {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const ComplexMatrix a = testing::random_complex(n, 100 * n + seed);
            const Complex ref = testing::naive_permanent(a);
            worst_perm = std::max(worst_perm, std::abs(permanent(a) - ref) / std::max(1.0, std::abs(ref)));
        }
    }
    ok = ok && worst_perm <= 1e-10;
    notes << "; permanent " << fmt("%.1e", worst_perm);

    auto qubits = [](std::size_t m, std::size_t n) {
        const auto w = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(n + 1))));
        return m * std::max<std::size_t>(1, w);
    };
    const std::size_t q3 = TruncationConfig(3).qubits_per_mode() * 3;
    const std::size_t q5 = TruncationConfig(2).qubits_per_mode() * 5;
    ok = ok && q3 == 6 && q5 == 10 && qubits(3, 3) == q3 && qubits(5, 2) == q5;
    notes << "; qubit counts " << q3 << " and " << q5;
    return {ok, notes.str()};
}

Outcome scaling_csv() {
    cli::ScalingOptions opt;
    opt.modes = 2;
    opt.photons_list = "1,2,4,8";
    opt.samples = 3;
    opt.seed = 1;
    opt.csv_out = (testing::scratch_dir("acceptance") / "scaling.csv").string();
    std::ostringstream out, err;
    const int code = cli::cmd_scaling(opt, out, err);
    if (code != cli::kOk) {
        return {false, "cmd_scaling exited with " + std::to_string(code) + ": " + err.str()};
    }
    std::istringstream csv(read_text_file(opt.csv_out));
    std::string header, line;
    std::getline(csv, header);
    std::map<std::size_t, std::pair<double, int>> depth;
    int rows = 0;
    bool well_formed = true;
    while (std::getline(csv, line)) {
        std::istringstream fields(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(fields, cell, ',')) {
            cells.push_back(cell);
        }
        if (cells.size() != 7) {
            well_formed = false;
            continue;
        }
        auto &[sum, count] = depth[std::stoul(cells[0])];
        sum += std::stod(cells[3]);
        ++count;
        ++rows;
    }
    bool increasing = depth.size() == 4;
    double previous = -1.0;
    std::ostringstream means;
    for (const auto &[n, acc] : depth) {
        const double mean = acc.first / acc.second;
        increasing = increasing && mean > previous;
        previous = mean;
        means << (means.tellp() > 0 ? ", " : "") << "n=" << n << ":" << fmt("%.0f", mean);
    }
    const bool ok = header == cli::kScalingHeader && well_formed && rows == 12 && increasing;
    return {ok, std::to_string(rows) + " rows, exact header " +
                    (header == cli::kScalingHeader ? "yes" : "no") + ", mean depth " + means.str()};
}

Outcome sampling_statistics() {
    const auto e = run_experiment(3, 42, 3, {{2, 1, 0}});
    const std::size_t shots = 10000;
    const auto counts = sample(e.simulated, shots, 20260101);
    double tv = 0.0;
    for (const auto &[state, p] : e.exact.entries) {
        tv += std::abs(p - static_cast<double>(counts.at(state)) / static_cast<double>(shots));
    }
    tv /= 2.0;
    return {tv <= 0.03, "10000 shots, total variation " + fmt("%.4f", tv) + " (tol 0.03)"};
}

struct Criterion {
    int id;
    const char *name;
    double budget_s; ///< 0: no limit
    std::function<Outcome()> check;
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {1, "two-photon beamsplitter closed form", 1.0, two_photon_closed_form},
        {2, "Clements round trip", 10.0, clements_round_trip},
        {3, "three-mode, three-photon experiment", 60.0, experiment_one},
        {4, "five-mode, two-photon experiment", 60.0, experiment_two},
        {5, "circuit depth bands", 0.0, depth_bands},
        {6, "Hong-Ou-Mandel dip", 5.0, hong_ou_mandel},
        {7, "invariant suites", 0.0, invariants},
        {8, "scaling CSV", 600.0, scaling_csv},
        {9, "sampling statistics", 0.0, sampling_statistics},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception &ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = c.budget_s == 0.0 || secs < c.budget_s;
        const bool passed = o.passed && in_time;
        failures += passed ? 0 : 1;
        const std::string limit =
            c.budget_s == 0.0 ? "no limit" : "limit " + fmt("%.0f", c.budget_s) + " s";
        std::printf("[%s] %d %s: %s; %.2f s (%s)\n", passed ? "PASS" : "FAIL", c.id, c.name,
                    o.detail.c_str(), secs, limit.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}
