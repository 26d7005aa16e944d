#pragma once

#include <optional>
#include <string>

#include "subsyz/report_io.hpp"

namespace subsyz {

struct RandomSpec {
    int n = 2;
    long d = 0;
    std::uint64_t seed = 0;
};

/// Parses "n=6,d=22,seed=42".
RandomSpec parse_random_spec(const std::string& spec);

struct CommandConfig {
    std::string command;
    std::optional<std::string> input_path;
    std::optional<RandomSpec> random_spec;
    std::optional<std::string> save_points_path;  // write the resolved input set
    std::uint64_t prime = 31991;

    std::optional<long> m;       // find-subset / enumerate subset size
    std::optional<long> e;       // predict / experiment subset size
    std::optional<int> twist;    // betti --window
    bool full = false;           // slow tier
    std::optional<int> degree_a; // link CI degrees
    std::optional<int> degree_b;
    bool with_colon = false;     // link: cross-check by the colon-ideal oracle
    std::uint64_t budget = 1000000;

    std::uint64_t seed = 42;     // counterexample / experiment base seed
    int seeds = 1;               // experiment: instances per d
    int n = 2;                   // experiment ranges
    long d_min = 4;
    long d_max = 10;
};

struct CommandResult {
    int exit_code = 0;
    json artifact;
    std::string text;
};

/// Exit codes: 0 success, 2 validation/precondition failure, 3 a subset
/// search exhausted every removal order (a falsification report).
CommandResult dispatch(const CommandConfig& config);

/// Applies SUBSET_SYZYGY_THREADS to the OpenMP runtime when set.
void apply_thread_cap_from_env();

}  // namespace subsyz
