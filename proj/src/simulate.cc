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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace ccsurf {

namespace {

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    return std::mt19937_64(seq);
}

bool trial_fails(const ColorDecoder& decoder, const NoiseModel& noise, std::uint64_t seed, std::uint64_t trial) {
    const auto e = sample_error(decoder.color_code().space(), noise, seed, trial);
    return !*decoder.decode_error(e).success;
}

TrialStats finish(std::uint64_t trials, std::uint64_t failures, std::uint64_t seed, double seconds) {
    TrialStats s;
    s.trials = trials;
    s.failures = failures;
    s.rate = static_cast<double>(failures) / static_cast<double>(trials);
    std::tie(s.ci_lo, s.ci_hi) = wilson_interval(failures, trials);
    s.seconds = seconds;
    s.seed = seed;
    return s;
}

void check_trials(std::uint64_t trials) {
    if (trials == 0) {
        throw std::invalid_argument("need at least one trial");
    }
}

double elapsed(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void NoiseModel::check() const {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument("error probability must lie in [0, 1]");
    }
}

PauliOp sample_error(const QubitSpace& space, const NoiseModel& noise, std::uint64_t seed, std::uint64_t trial) {
    auto rng = trial_rng(seed, trial);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> which(0, 2);
    PauliOp e(space);
    for (std::size_t q = 0; q < space.qubits; ++q) {
        if (unit(rng) < noise.p) {
            const int w = which(rng);
            e.x().set(q, w != 2);
            e.z().set(q, w != 0);
        }
    }
    return e;
}

std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials, double z) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double centre = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

TrialStats run_trials(const ColorDecoder& decoder, const NoiseModel& noise, std::uint64_t trials, std::uint64_t seed) {
    noise.check();
    check_trials(trials);
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t failures = 0;
    const auto n = static_cast<long long>(trials);
#pragma omp parallel for schedule(static) reduction(+ : failures)
    for (long long t = 0; t < n; ++t) {
        failures += trial_fails(decoder, noise, seed, static_cast<std::uint64_t>(t)) ? 1 : 0;
    }
    return finish(trials, failures, seed, elapsed(start));
}

TrialStats run_trials_serial(const ColorDecoder& decoder, const NoiseModel& noise, std::uint64_t trials,
                             std::uint64_t seed) {
    noise.check();
    check_trials(trials);
    const auto start = std::chrono::steady_clock::now();
    std::uint64_t failures = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        failures += trial_fails(decoder, noise, seed, t) ? 1 : 0;
    }
    return finish(trials, failures, seed, elapsed(start));
}

TrialStats run_trials(const Colex& g, const MapConventions& conv, const NoiseModel& noise, std::uint64_t trials,
                      std::uint64_t seed) {
    const ColorDecoder decoder(make_artifact(g, conv));
    return run_trials(decoder, noise, trials, seed);
}

std::vector<SweepRow> sweep(const ColorDecoder& decoder, const std::vector<double>& ps, std::uint64_t trials,
                            std::uint64_t seed) {
    std::vector<SweepRow> rows;
    for (double p : ps) {
        SweepRow row;
        row.lattice = decoder.code_map().colex.info();
        row.color = decoder.code_map().conventions.color;
        row.p = p;
        row.stats = run_trials(decoder, NoiseModel{p}, trials, seed);
        rows.push_back(row);
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool timing) {
    out << kCsvHeader << '\n';
    std::ostringstream line;
    line.precision(10);
    for (const auto& r : rows) {
        line.str({});
        line << r.lattice.family << ',' << r.lattice.rows << ',' << r.lattice.cols << ',' << to_char(r.color) << ','
             << r.p << ',' << r.stats.trials << ',' << r.stats.failures << ',' << r.stats.rate << ',' << r.stats.ci_lo
             << ',' << r.stats.ci_hi << ',' << r.stats.seed << ',' << (timing ? r.stats.seconds : 0.0) << '\n';
        out << line.str();
    }
}

std::string to_csv(const std::vector<SweepRow>& rows, bool timing) {
    std::ostringstream out;
    write_csv(out, rows, timing);
    return out.str();
}

}  // namespace ccsurf
