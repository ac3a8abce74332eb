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

#ifndef CCSURF_SIMULATE_H
#define CCSURF_SIMULATE_H

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ccsurf/decode.h"

namespace ccsurf {

/// i.i.d. depolarizing noise: each qubit independently suffers X, Y or Z,
/// each with probability p/3.
struct NoiseModel {
    double p = 0.0;

    /// Throws std::invalid_argument unless 0 <= p <= 1.
    void check() const;
};

/// Error drawn for one trial. The generator is seeded from (seed, trial)
/// alone, so draws do not depend on scheduling.
PauliOp sample_error(const QubitSpace& space, const NoiseModel& noise, std::uint64_t seed, std::uint64_t trial);

inline constexpr double kWilsonZ95 = 1.959963984540054;

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(std::uint64_t failures, std::uint64_t trials, double z = kWilsonZ95);

struct TrialStats {
    std::uint64_t trials = 0;
    std::uint64_t failures = 0;
    double rate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
};

/// Runs trials in parallel with OpenMP. Failure means the decoded residual
/// is not a color-code stabilizer.
TrialStats run_trials(const ColorDecoder& decoder, const NoiseModel& noise, std::uint64_t trials, std::uint64_t seed);
/// Single-threaded reference; produces the same counts as run_trials.
TrialStats run_trials_serial(const ColorDecoder& decoder, const NoiseModel& noise, std::uint64_t trials,
                             std::uint64_t seed);
TrialStats run_trials(const Colex& g, const MapConventions& conv, const NoiseModel& noise, std::uint64_t trials,
                      std::uint64_t seed);

struct SweepRow {
    LatticeInfo lattice;
    Color color = Color::Red;
    double p = 0.0;
    TrialStats stats;
};

/// One row per entry of ps, in order; every row uses the same seed.
std::vector<SweepRow> sweep(const ColorDecoder& decoder, const std::vector<double>& ps, std::uint64_t trials,
                            std::uint64_t seed);

inline constexpr const char* kCsvHeader = "family,rows,cols,color,p,trials,failures,rate,ci_lo,ci_hi,seed,seconds";

/// Writes the header and one line per row. With timing off the seconds
/// column is 0, making the output a pure function of the inputs.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows, bool timing = true);
std::string to_csv(const std::vector<SweepRow>& rows, bool timing = true);

}  // namespace ccsurf

#endif
