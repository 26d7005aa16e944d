#include "subsyz/cli.hpp"

#include <omp.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace subsyz {

void apply_thread_cap_from_env() {
    const char* env = std::getenv("SUBSET_SYZYGY_THREADS");
    if (!env) return;
    int cap = std::atoi(env);
    if (cap > 0) omp_set_num_threads(cap);
}

RandomSpec parse_random_spec(const std::string& spec) {
    RandomSpec rs;
    bool have_n = false, have_d = false, have_seed = false;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ValidationError("random spec entries must look like key=value: " + item);
        std::string key = item.substr(0, eq);
        long long value = 0;
        try {
            value = std::stoll(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ValidationError("random spec value is not an integer: " + item);
        }
        if (key == "n") {
            rs.n = int(value);
            have_n = true;
        } else if (key == "d") {
            rs.d = long(value);
            have_d = true;
        } else if (key == "seed") {
            rs.seed = std::uint64_t(value);
            have_seed = true;
        } else {
            throw ValidationError("unknown random spec key: " + key);
        }
    }
    if (!have_n || !have_d || !have_seed)
        throw ValidationError("random spec needs n=, d= and seed=, e.g. n=6,d=22,seed=42");
    return rs;
}

namespace {

PointSet resolve_input(const CommandConfig& config) {
    if (config.input_path.has_value() == config.random_spec.has_value())
        throw ValidationError("exactly one input source required: --input or --random");
    PointSet X = [&] {
        if (config.input_path) return load_point_set(*config.input_path);
        const RandomSpec& rs = *config.random_spec;
        Field field(config.prime);
        return random_points(rs.n, rs.d, field, rs.seed).points;
    }();
    if (config.save_points_path) {
        std::ofstream out(*config.save_points_path);
        if (!out)
            throw ValidationError("cannot write point-set file: " + *config.save_points_path);
        out << point_set_to_json(X).dump(2) << "\n";
    }
    return X;
}

std::string hilbert_text(const HilbertTable& hf) {
    std::ostringstream os;
    os << "h:     ";
    for (long v : hf.values) os << v << " ";
    os << "...\ndelta: ";
    for (long v : hf.deltas) os << v << " ";
    os << "\nstabilization at t = " << hf.stabilization << ", degree " << hf.degree << "\n";
    return os.str();
}

CommandResult cmd_hilbert(const CommandConfig& config) {
    PointSet X = resolve_input(config);
    HilbertTable hf = hilbert(X);
    return CommandResult{0, hilbert_to_json(hf), hilbert_text(hf)};
}

// Elimination work for the whole table, from dimension arithmetic alone.
double full_table_cost(IdealCache& cache) {
    const int n = cache.points().n;
    const int qmax = cache.hf().stabilization + 1;
    double total = 0;
    for (int p = 1; p <= n + 1; ++p)
        for (int q = 0; q <= qmax; ++q) {
            double src = double(binomial(n + 1, p)) * double(cache.dim(q));
            double tgt = double(binomial(n + 1, p - 1)) * double(cache.dim(q + 1));
            total += src * tgt * std::min(src, tgt);
        }
    return total;
}

CommandResult cmd_betti(const CommandConfig& config) {
    PointSet X = resolve_input(config);
    IdealCache cache(X);
    BettiTable b;
    if (config.twist) {
        b = graded_betti_window(cache, *config.twist);
    } else {
        if (!config.full && full_table_cost(cache) > 5e9)
            throw ValidationError(
                "the full Betti table for this input is in the slow tier; pass --full to "
                "compute it anyway or restrict to one twist with --window twist=T");
        b = graded_betti(cache);
    }
    return CommandResult{0, betti_to_json(b), betti_diagram(b)};
}

CommandResult cmd_classify(const CommandConfig& config) {
    PointSet X = resolve_input(config);
    CaseLabel label = classify_case(X);
    BettiTable b = graded_betti(X);
    DegreeMatrix dm = degree_matrix(b);
    json artifact = case_to_json(label);
    artifact["betti"] = betti_to_json(b);
    artifact["degree_matrix"] = degree_matrix_to_json(dm);
    std::ostringstream os;
    os << "critical degree l = " << label.l << ", minimal generators in degree l+1 = "
       << label.gens_at_lplus1 << " -> case " << label.case_number << "\n\n"
       << betti_diagram(b) << "\ndegree matrix\n"
       << degree_matrix_text(dm);

    IdealCache cache(X);
    if (cache.dim(label.l) >= 1) {
        BaseLocusGcd g = base_locus_gcd(X, label.l);
        json locus{{"gcd_degree", g.gcd_degree}};
        os << "\nbase locus of the degree-" << label.l << " system: ";
        if (g.witness) {
            locus["witness"] = poly_to_string(*g.witness);
            os << "one-dimensional, common factor " << poly_to_string(*g.witness) << "\n";
        } else {
            os << "finite (no common factor)\n";
        }
        artifact["base_locus"] = locus;
    }
    return CommandResult{0, artifact, os.str()};
}

CommandResult cmd_find_subset(const CommandConfig& config) {
    if (!config.m) throw ValidationError("find-subset requires --m");
    PointSet X = resolve_input(config);
    SubsetChain chain = find_subset(X, *config.m);
    std::ostringstream os;
    if (chain.success) {
        os << "subset of size " << *config.m << " found; removed indices:";
        for (const auto& s : chain.steps) os << " " << s.removed_index;
        os << "\nfinal subset indices:";
        for (auto i : chain.final_indices) os << " " << i;
        os << "\nper-degree ranks vs prediction (degree: predicted/actual):";
        for (const auto& r : chain.final_ranks)
            os << " " << r.s << ": " << r.predicted << "/" << r.actual;
        os << "\n";
    } else {
        os << "FALSIFICATION: no removal chain of size " << *config.m
           << " satisfies the predicted ranks (" << chain.candidates_tried
           << " candidates tried)\n";
    }
    return CommandResult{chain.success ? 0 : 3, chain_to_json(chain), os.str()};
}

CommandResult cmd_enumerate(const CommandConfig& config) {
    if (!config.m) throw ValidationError("enumerate requires --m");
    PointSet X = resolve_input(config);
    auto recs = enumerate_subsets(X, *config.m, config.budget);
    std::ostringstream os;
    os << recs.size() << " subsets of size " << *config.m << "\n";
    for (const auto& r : recs) {
        os << " {";
        for (std::size_t i = 0; i < r.indices.size(); ++i)
            os << (i ? "," : "") << r.indices[i];
        os << "} truncated=" << (r.truncated ? "yes" : "no") << " mu-ranks:";
        for (auto [s, rk] : r.mu_ranks) os << " " << s << ":" << rk;
        os << "\n";
    }
    return CommandResult{0, subset_records_to_json(recs), os.str()};
}

CommandResult cmd_predict(const CommandConfig& config) {
    if (!config.e) throw ValidationError("predict requires --e");
    PointSet X = resolve_input(config);
    IdealCache cache(X);
    GuessRankTable guess = guess_ranks(cache, *config.e);

    // Witness subset: greedy truncated Hilbert function.  For P^2 the
    // matching subset is guaranteed to exist; elsewhere this is sampled
    // evidence, not a theorem.
    std::vector<std::size_t> witness = greedy_truncated_subset(X, *config.e);
    BettiTable actual = graded_betti(subset(X, witness));

    json comparison = json::array();
    bool all_match = true;
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : guess.derived_betti.entries) keys.insert(k);
    for (const auto& [k, v] : actual.entries) keys.insert(k);
    for (const auto& [p, twist] : keys) {
        long pred = guess.derived_betti.beta(p, twist);
        long act = actual.beta(p, twist);
        all_match = all_match && pred == act;
        comparison.push_back(json{
            {"p", p}, {"twist", twist}, {"predicted", pred}, {"actual", act}, {"match", pred == act}});
    }
    json artifact{{"e", *config.e},
                  {"prediction", guess_to_json(guess)},
                  {"witness_indices", witness},
                  {"witness_rule", "greedy truncated Hilbert function"},
                  {"existence_guaranteed", X.n == 2},
                  {"actual_betti", betti_to_json(actual)},
                  {"comparison", comparison},
                  {"all_match", all_match}};
    std::ostringstream os;
    os << "prediction for subsets of size " << *config.e << " ("
       << (X.n == 2 ? "existence guaranteed" : "prediction, not theorem") << ")\n";
    os << "predicted table\n" << betti_diagram(guess.derived_betti);
    os << "witness subset {";
    for (std::size_t i = 0; i < witness.size(); ++i) os << (i ? "," : "") << witness[i];
    os << "} actual table\n" << betti_diagram(actual);
    os << (all_match ? "all entries match\n" : "MISMATCH in at least one entry\n");
    return CommandResult{0, artifact, os.str()};
}

CommandResult cmd_link(const CommandConfig& config) {
    if (!config.degree_a || !config.degree_b)
        throw ValidationError("link requires CI degrees --a and --b");
    PointSet X = resolve_input(config);
    HilbertTable hf = hilbert(X);
    DeltaSeq dx(hf.deltas.begin(), hf.deltas.end());
    DeltaSeq residual = link_hf(dx, *config.degree_a, *config.degree_b);
    long residual_degree = 0;
    for (long v : residual) residual_degree += v;

    json artifact{{"ci_degrees", json::array({*config.degree_a, *config.degree_b})},
                  {"delta_x", dx},
                  {"delta_residual", residual},
                  {"residual_degree", residual_degree}};
    std::ostringstream os;
    os << "CI type (" << *config.degree_a << "," << *config.degree_b << ")\ndelta_X:        ";
    for (long v : dx) os << v << " ";
    os << "\ndelta_residual: ";
    for (long v : residual) os << v << " ";
    os << "\nresidual degree " << residual_degree << "\n";

    if (config.with_colon) {
        // Pick a regular sequence of the requested degrees from I(X) and
        // cross-check the residual dimensions degreewise.
        IdealCache cache(X);
        auto pair = find_ci_in_ideal(cache, *config.degree_a, *config.degree_b);
        if (!pair)
            throw ValidationError("no regular sequence of degrees (" +
                                  std::to_string(*config.degree_a) + "," +
                                  std::to_string(*config.degree_b) + ") found in I(X)");
        int socle = *config.degree_a + *config.degree_b - 2;
        json dims = json::array();
        bool agree = true;
        long h_prev = 0;
        for (int t = 0; t <= socle + 1; ++t) {
            GradedBasis res = colon_basis(pair->first, pair->second, X, t);
            long h_t = long(binomial(t + 2, 2)) - long(res.size());
            long delta = h_t - h_prev;
            h_prev = h_t;
            long expected = std::size_t(t) < residual.size() ? residual[t] : 0;
            agree = agree && delta == expected;
            dims.push_back(json{{"t", t}, {"dim_colon", res.size()}, {"delta", delta}});
        }
        artifact["colon_check"] = json{{"dims", dims}, {"agrees", agree}};
        os << "colon-ideal cross-check: " << (agree ? "agrees" : "DISAGREES") << "\n";
    }
    return CommandResult{0, artifact, os.str()};
}

CommandResult cmd_counterexample(const CommandConfig& config) {
    CounterexampleReport rep = run_counterexample(config.seed, config.prime, config.full);
    return CommandResult{0, counterexample_to_json(rep), counterexample_text(rep)};
}

CommandResult cmd_experiment(const CommandConfig& config) {
    Field field(config.prime);
    json instances = json::array();
    long total = 0, existence_ok = 0, full_match = 0, gens_match = 0, cmtype_match = 0,
         errors = 0;
    bool falsified = false;

    for (long d = config.d_min; d <= config.d_max; ++d) {
        for (int s = 0; s < config.seeds; ++s) {
            std::uint64_t seed = config.seed + std::uint64_t(d) * 1000003ULL + std::uint64_t(s);
            std::vector<long> evalues;
            if (config.e)
                evalues.push_back(*config.e);
            else
                for (long e = 1; e < d; ++e) evalues.push_back(e);

            for (long e : evalues) {
                ++total;
                json inst{{"n", config.n}, {"d", d}, {"e", e}, {"seed", seed}};
                try {
                    PointSet X = random_points(config.n, d, field, seed).points;
                    IdealCache cache(X);
                    GuessRankTable guess = guess_ranks(cache, e);

                    std::vector<std::size_t> witness;
                    bool exists = true;
                    if (config.n == 2) {
                        SubsetChain chain = find_subset(X, e);
                        exists = chain.success;
                        if (exists) witness = chain.final_indices;
                    } else {
                        witness = greedy_truncated_subset(X, e);
                    }
                    inst["witness_found"] = exists;
                    if (!exists) {
                        falsified = true;
                        instances.push_back(inst);
                        continue;
                    }
                    ++existence_ok;
                    BettiTable actual = graded_betti(subset(X, witness));
                    const BettiTable& pred = guess.derived_betti;

                    bool fm = actual.entries == pred.entries;
                    bool gm = true, cm = true;
                    int top = std::max(actual.max_p(), pred.max_p());
                    for (int j = 0; j <= std::max(actual.max_twist(), pred.max_twist()); ++j) {
                        gm = gm && actual.beta(0, j) == pred.beta(0, j);
                        cm = cm && actual.beta(top, j) == pred.beta(top, j);
                    }
                    full_match += fm;
                    gens_match += gm;
                    cmtype_match += cm;
                    inst["full_match"] = fm;
                    inst["gens_match"] = gm;
                    inst["cm_type_match"] = cm;
                    if (!fm) {
                        json mism = json::array();
                        std::set<std::pair<int, int>> keys;
                        for (const auto& [k, v] : pred.entries) keys.insert(k);
                        for (const auto& [k, v] : actual.entries) keys.insert(k);
                        for (const auto& [p, twist] : keys)
                            if (pred.beta(p, twist) != actual.beta(p, twist))
                                mism.push_back(json{{"p", p},
                                                    {"twist", twist},
                                                    {"predicted", pred.beta(p, twist)},
                                                    {"actual", actual.beta(p, twist)}});
                        inst["mismatches"] = mism;
                    }
                } catch (const ValidationError& err) {
                    ++errors;
                    inst["error"] = err.what();
                }
                instances.push_back(inst);
            }
        }
    }

    json artifact{{"instances", instances},
                  {"summary", json{{"total", total},
                                   {"witness_found", existence_ok},
                                   {"full_table_matches", full_match},
                                   {"generator_matches", gens_match},
                                   {"cm_type_matches", cmtype_match},
                                   {"errors", errors}}}};
    std::ostringstream os;
    os << "experiments: " << total << ", witness found: " << existence_ok
       << ", full-table matches: " << full_match << ", generator matches: " << gens_match
       << ", CM-type matches: " << cmtype_match << ", errors: " << errors << "\n";
    return CommandResult{falsified ? 3 : 0, artifact, os.str()};
}

}  // namespace

CommandResult dispatch(const CommandConfig& config) {
    try {
        if (config.command == "hilbert") return cmd_hilbert(config);
        if (config.command == "betti") return cmd_betti(config);
        if (config.command == "classify") return cmd_classify(config);
        if (config.command == "find-subset") return cmd_find_subset(config);
        if (config.command == "enumerate") return cmd_enumerate(config);
        if (config.command == "predict") return cmd_predict(config);
        if (config.command == "link") return cmd_link(config);
        if (config.command == "counterexample") return cmd_counterexample(config);
        if (config.command == "experiment") return cmd_experiment(config);
        throw ValidationError("unknown command: " + config.command);
    } catch (const ValidationError& e) {
        return CommandResult{2, json{{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
    } catch (const json::exception& e) {
        return CommandResult{2, json{{"error", e.what()}}, std::string("error: ") + e.what() + "\n"};
    }
}

}  // namespace subsyz
