// Copyright 2026 The ccsurf Authors
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

#include "ccsurf/simulate.h"

#include <array>
#include <bit>
#include <cmath>

#include <omp.h>

#include "gtest/gtest.h"

using namespace ccsurf;

namespace {

std::uint64_t pack(const PauliOp& p) {
    std::uint64_t v = 0;
    for (std::size_t q = 0; q < p.size(); ++q) {
        v |= std::uint64_t{p.x().get(q)} << q;
        v |= std::uint64_t{p.z().get(q)} << (q + p.size());
    }
    return v;
}

// Exact success probability of the decoder on an n <= 32 qubit code, as a
// weight histogram: hist[w] counts errors of weight w that the decoder
// corrects. Every syndrome is reached through a basis of single-qubit
// Paulis; for syndrome s with correction C(s) the corrected errors are
// exactly the coset C(s) * S.
std::vector<std::uint64_t> corrected_weight_histogram(const ColorDecoder& dec) {
    const auto& code = dec.color_code();
    const std::size_t n = code.num_qubits();

    std::vector<std::uint64_t> stab_basis;
    RowSpace stabs(2 * n);
    for (const auto& g : code.generators()) {
        if (stabs.insert(g.to_symplectic())) {
            stab_basis.push_back(pack(g));
        }
    }
    std::vector<PauliOp> pure;
    RowSpace syns(code.num_generators());
    for (char t : {'X', 'Z'}) {
        for (std::size_t q = 0; q < n; ++q) {
            const auto p = PauliOp::single(code.space(), q, t);
            if (syns.insert(extract_syndrome(code, p).bits)) {
                pure.push_back(p);
            }
        }
    }

    std::vector<std::uint64_t> group(std::size_t{1} << stab_basis.size(), 0);
    for (std::size_t i = 1; i < group.size(); ++i) {
        const auto low = static_cast<std::size_t>(std::countr_zero(i));
        group[i] = group[i & (i - 1)] ^ stab_basis[low];
    }

    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> hist(n + 1, 0);
    for (std::size_t combo = 0; combo < (std::size_t{1} << pure.size()); ++combo) {
        PauliOp e(code.space());
        for (std::size_t i = 0; i < pure.size(); ++i) {
            if (combo >> i & 1) {
                e *= pure[i];
            }
        }
        const auto c = pack(dec.decode(extract_syndrome(code, e)).correction);
        for (auto g : group) {
            const auto v = c ^ g;
            ++hist[static_cast<std::size_t>(std::popcount((v | (v >> n)) & mask))];
        }
    }
    return hist;
}

double failure_probability(const std::vector<std::uint64_t>& hist, double p) {
    const std::size_t n = hist.size() - 1;
    double ok = 0.0;
    for (std::size_t w = 0; w <= n; ++w) {
        ok += static_cast<double>(hist[w]) * std::pow(p / 3.0, static_cast<double>(w)) *
              std::pow(1.0 - p, static_cast<double>(n - w));
    }
    return 1.0 - ok;
}

const ColorDecoder& hex33_decoder() {
    static const ColorDecoder dec = [] {
        const auto g = build_hexagonal_torus(3, 3);
        return ColorDecoder(make_artifact(g, MapConventions::defaults(g, Color::Red)));
    }();
    return dec;
}

const std::vector<std::uint64_t>& hex33_histogram() {
    static const auto hist = corrected_weight_histogram(hex33_decoder());
    return hist;
}

}  // namespace

TEST(Noise, rejects_bad_probability) {
    EXPECT_THROW((NoiseModel{-0.1}.check()), std::invalid_argument);
    EXPECT_THROW((NoiseModel{1.5}.check()), std::invalid_argument);
    EXPECT_NO_THROW((NoiseModel{1.0}.check()));
}

TEST(Noise, sampling_is_a_function_of_seed_and_trial) {
    const QubitSpace space{"color", 50};
    EXPECT_EQ(sample_error(space, {0.3}, 4, 9), sample_error(space, {0.3}, 4, 9));
    EXPECT_NE(sample_error(space, {0.3}, 4, 9), sample_error(space, {0.3}, 4, 10));
    EXPECT_NE(sample_error(space, {0.3}, 5, 9), sample_error(space, {0.3}, 4, 9));
    EXPECT_TRUE(sample_error(space, {0.0}, 1, 1).is_identity());
    EXPECT_EQ(sample_error(space, {1.0}, 1, 1).weight(), 50u);
}

TEST(Noise, depolarizing_frequencies) {
    const QubitSpace space{"color", 100};
    std::array<std::size_t, 3> counts{};
    std::size_t hits = 0;
    const std::size_t trials = 2000;
    for (std::size_t t = 0; t < trials; ++t) {
        const auto e = sample_error(space, {0.3}, 11, t);
        for (std::size_t q = 0; q < 100; ++q) {
            const char c = e.at(q);
            if (c != 'I') {
                ++hits;
                ++counts[c == 'X' ? 0 : c == 'Y' ? 1 : 2];
            }
        }
    }
    const double n = static_cast<double>(trials * 100);
    EXPECT_NEAR(static_cast<double>(hits) / n, 0.3, 4 * std::sqrt(0.3 * 0.7 / n));
    for (auto c : counts) {
        EXPECT_NEAR(static_cast<double>(c) / static_cast<double>(hits), 1.0 / 3.0, 0.01);
    }
}

TEST(Wilson, zero_failures_closed_form) {
    const auto [lo, hi] = wilson_interval(0, 10);
    const double z2 = kWilsonZ95 * kWilsonZ95;
    EXPECT_DOUBLE_EQ(lo, 0.0);
    EXPECT_NEAR(hi, z2 / (10 + z2), 1e-12);
}

TEST(Wilson, contains_estimate_and_is_symmetric) {
    for (std::uint64_t n : {1u, 7u, 100u, 12345u}) {
        for (std::uint64_t f = 0; f <= n; f += std::max<std::uint64_t>(1, n / 7)) {
            const auto [lo, hi] = wilson_interval(f, n);
            const double phat = static_cast<double>(f) / static_cast<double>(n);
            EXPECT_LE(lo, phat + 1e-15);
            EXPECT_GE(hi, phat - 1e-15);
            const auto [lo2, hi2] = wilson_interval(n - f, n);
            EXPECT_NEAR(lo, 1.0 - hi2, 1e-12);
            EXPECT_NEAR(hi, 1.0 - lo2, 1e-12);
        }
    }
}

TEST(RunTrials, zero_noise_never_fails) {
    const auto stats = run_trials(hex33_decoder(), {0.0}, 500, 1);
    EXPECT_EQ(stats.failures, 0u);
    EXPECT_EQ(stats.rate, 0.0);
    EXPECT_EQ(stats.trials, 500u);
}

TEST(RunTrials, parallel_matches_serial) {
    const int before = omp_get_max_threads();
    omp_set_num_threads(4);
    for (double p : {0.02, 0.2}) {
        const auto par = run_trials(hex33_decoder(), {p}, 3000, 21);
        const auto ser = run_trials_serial(hex33_decoder(), {p}, 3000, 21);
        EXPECT_EQ(par.failures, ser.failures);
    }
    omp_set_num_threads(before);
}

TEST(RunTrials, rejects_zero_trials) {
    EXPECT_THROW(run_trials(hex33_decoder(), {0.1}, 0, 1), std::invalid_argument);
}

TEST(RunTrials, exact_oracle_histogram_sanity) {
    const auto& hist = hex33_histogram();
    std::uint64_t total = 0;
    for (auto h : hist) {
        total += h;
    }
    EXPECT_EQ(total, std::uint64_t{1} << 28);
    EXPECT_EQ(hist[0], 1u);
    EXPECT_NEAR(failure_probability(hist, 0.0), 0.0, 1e-15);
}

TEST(RunTrials, full_noise_matches_exact_failure_probability) {
    const double exact = failure_probability(hex33_histogram(), 1.0);
    const auto stats = run_trials(hex33_decoder(), {1.0}, 10000, 99);
    EXPECT_LE(stats.ci_lo, exact);
    EXPECT_GE(stats.ci_hi, exact);
}

TEST(RunTrials, estimator_within_three_sigma_of_exact) {
    for (double p : {0.01, 0.05, 0.2}) {
        const double exact = failure_probability(hex33_histogram(), p);
        const std::uint64_t n = 20000;
        const auto stats = run_trials(hex33_decoder(), {p}, n, 5);
        const double sigma = std::sqrt(exact * (1 - exact) / static_cast<double>(n));
        EXPECT_NEAR(stats.rate, exact, 3 * sigma) << "p=" << p;
    }
}

TEST(RunTrials, more_noise_more_failures) {
    const auto low = run_trials(hex33_decoder(), {0.01}, 10000, 3);
    const auto high = run_trials(hex33_decoder(), {0.10}, 10000, 3);
    EXPECT_LT(low.rate, high.rate);
}

TEST(Sweep, empty_duplicates_and_reproducibility) {
    const auto& dec = hex33_decoder();
    EXPECT_EQ(to_csv(sweep(dec, {}, 10, 1)), std::string(kCsvHeader) + "\n");

    const auto rows = sweep(dec, {0.05, 0.01, 0.05}, 400, 8);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].p, 0.05);
    EXPECT_EQ(rows[1].p, 0.01);
    EXPECT_EQ(rows[0].stats.failures, rows[2].stats.failures);

    const auto a = to_csv(rows, false);
    const auto b = to_csv(sweep(dec, {0.05, 0.01, 0.05}, 400, 8), false);
    EXPECT_EQ(a, b);
    EXPECT_NE(a.find("\nhex,3,3,r,0.05,400,"), std::string::npos);
}
