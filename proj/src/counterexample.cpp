#include "subsyz/counterexample.hpp"

namespace subsyz {

namespace {

// Slice window (3,2), (2,3), (1,4) for one point set.
void window_dims_and_ranks(IdealCache& cache, std::array<long, 4>& dims,
                           std::array<long, 3>& ranks, long& b25, long& b35) {
    dims = {35 * cache.dim(2), 21 * cache.dim(3), 7 * cache.dim(4), cache.dim(5)};
    KoszulSlice d32 = koszul_differential(cache, 3, 2);
    KoszulSlice d23 = koszul_differential(cache, 2, 3);
    KoszulSlice d14 = koszul_differential(cache, 1, 4);
    KoszulSlice d41 = koszul_differential(cache, 4, 1);  // I_1 = 0 here, rank 0
    ranks = {long(d32.rank), long(d23.rank), long(d14.rank)};
    b25 = long(d23.kernel_dim) - long(d32.rank);
    b35 = long(d32.kernel_dim) - long(d41.rank);
}

}  // namespace

CounterexampleReport run_counterexample(std::uint64_t seed, std::uint64_t prime, bool full) {
    Field field(prime);
    CounterexampleReport rep;
    rep.seed = seed;
    rep.prime = prime;

    // Sample 22 certified-generic points whose first 11 are also certified
    // generic; both certifications share the retry budget.
    const int max_retries = 64;
    PointSet X22{6, field, {}};
    PointSet X11{6, field, {}};
    std::uint64_t subseed = seed;
    int retries = 0;
    for (;;) {
        RandomPointsResult r = random_points(6, 22, field, subseed, max_retries - retries);
        retries += r.retries;
        std::vector<std::size_t> first11(11);
        for (std::size_t i = 0; i < 11; ++i) first11[i] = i;
        PointSet sub = subset(r.points, first11);
        if (has_generic_hilbert_function(sub, hilbert(sub))) {
            X22 = std::move(r.points);
            X11 = std::move(sub);
            break;
        }
        if (++retries > max_retries)
            throw ValidationError("genericity certification failed beyond the retry budget");
        subseed = subseed * 6364136223846793005ULL + 1442695040888963407ULL;
    }
    rep.retries = retries;

    IdealCache cache22(X22);
    IdealCache cache11(X11);
    long unused_b35_22 = 0;
    window_dims_and_ranks(cache22, rep.dims22, rep.ranks22, rep.betti25_22, unused_b35_22);
    window_dims_and_ranks(cache11, rep.dims11, rep.ranks11, rep.actual_b25, rep.actual_b35);

    GuessRankTable guess = guess_ranks(cache22, 11);
    rep.predicted_ranks11 = {guess.entries.at({3, 2}).rank, guess.entries.at({2, 3}).rank,
                             guess.entries.at({1, 4}).rank};
    rep.predicted_b25 = guess.derived_betti.beta(2, 5);
    rep.predicted_b35 = guess.derived_betti.beta(3, 5);

    rep.match_b25 = rep.predicted_b25 == rep.actual_b25;
    rep.match_b35 = rep.predicted_b35 == rep.actual_b35;
    rep.agrees_with_classical_actual = rep.actual_b25 == 1 && rep.actual_b35 == 5;
    rep.agrees_with_classical_predicted = rep.predicted_b25 == 0 && rep.predicted_b35 == 4;

    if (full) {
        rep.full_betti22 = graded_betti(cache22);
        rep.full_betti11 = graded_betti(cache11);
        rep.full_predicted11 = guess.derived_betti;
    }
    return rep;
}

}  // namespace subsyz
