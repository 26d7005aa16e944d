#pragma once

#include <array>
#include <optional>

#include "subsyz/predictor.hpp"

namespace subsyz {

/// End-to-end comparison for 11-of-22 certified-generic points in P^6: the
/// twist-5 window of the wedge complex for the 22 points, the generic-subset
/// rank prediction for the first 11, and the actual Betti numbers of those
/// 11 points.  The report states computed values; the char-0 flags record
/// whether this prime reproduced the classically expected outcome
/// (predicted (0,4) vs actual (1,5)) rather than asserting it.
struct CounterexampleReport {
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;
    int retries = 0;

    // dims of 0 -> L^3 (x) I_2 -> L^2 (x) I_3 -> L^1 (x) I_4 -> I_5 -> 0
    std::array<long, 4> dims22{};
    std::array<long, 4> dims11{};
    // ranks of d_{3,2}, d_{2,3}, d_{1,4}
    std::array<long, 3> ranks22{};
    std::array<long, 3> ranks11{};
    long betti25_22 = 0;  // ker d_{2,3} - rank d_{3,2} for the 22 points

    std::array<long, 3> predicted_ranks11{};  // e_{3,2}, e_{2,3}, e_{1,4}
    long predicted_b25 = 0, predicted_b35 = 0;
    long actual_b25 = 0, actual_b35 = 0;
    bool match_b25 = false, match_b35 = false;

    bool agrees_with_classical_actual = false;     // actual == (1, 5)
    bool agrees_with_classical_predicted = false;  // predicted == (0, 4)

    std::optional<BettiTable> full_betti22;
    std::optional<BettiTable> full_betti11;
    std::optional<BettiTable> full_predicted11;
};

/// `full` adds complete Betti tables (the slow tier).
CounterexampleReport run_counterexample(std::uint64_t seed, std::uint64_t prime,
                                        bool full = false);

}  // namespace subsyz
