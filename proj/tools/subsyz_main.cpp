#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "subsyz/cli.hpp"

namespace {

void add_input_options(CLI::App* cmd, subsyz::CommandConfig& config, std::string& input,
                       std::string& random_spec, std::string& save_points) {
    cmd->add_option("--input", input, "point-set JSON file");
    cmd->add_option("--random", random_spec, "sample certified-generic points, e.g. n=6,d=22,seed=42");
    cmd->add_option("--prime", config.prime, "field modulus (odd prime)");
    cmd->add_option("--save-points", save_points, "also write the resolved point set to a file");
}

int emit(const subsyz::CommandResult& result, const std::string& format,
         const std::string& output) {
    std::string payload =
        format == "json" ? result.artifact.dump(2) + "\n" : result.text;
    if (output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(output);
        if (!out) {
            std::cerr << "error: cannot write " << output << "\n";
            return 2;
        }
        out << payload;
    }
    if (result.exit_code != 0 && format != "json" && !output.empty())
        std::cerr << result.text;
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    subsyz::apply_thread_cap_from_env();

    CLI::App app{"Hilbert functions, Betti tables and subset resolutions of point sets over GF(p)"};
    app.require_subcommand(1);

    subsyz::CommandConfig config;
    std::string input, random_spec, format = "text", output, save_points;
    std::string window;
    long m = -1, e = -1;
    int degree_a = -1, degree_b = -1;

    app.add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", output, "write the artifact to a file instead of stdout");

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert function and first differences");
    add_input_options(hilbert, config, input, random_spec, save_points);

    auto* betti = app.add_subcommand("betti", "graded Betti numbers");
    add_input_options(betti, config, input, random_spec, save_points);
    betti->add_option("--window", window, "restrict to a single twist, e.g. twist=5");
    betti->add_flag("--full", config.full, "compute the whole table (slow tier)");

    auto* classify = app.add_subcommand("classify", "critical degree and generator-count case");
    add_input_options(classify, config, input, random_spec, save_points);

    auto* find = app.add_subcommand("find-subset", "find a subset achieving the predicted ranks");
    add_input_options(find, config, input, random_spec, save_points);
    find->add_option("--m", m, "subset size")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all m-subsets with their ranks");
    add_input_options(enumerate, config, input, random_spec, save_points);
    enumerate->add_option("--m", m, "subset size")->required();
    enumerate->add_option("--budget", config.budget, "max subsets to enumerate");

    auto* predict = app.add_subcommand("predict", "predicted subset resolution vs a witness");
    add_input_options(predict, config, input, random_spec, save_points);
    predict->add_option("--e", e, "subset size")->required();

    auto* link = app.add_subcommand("link", "residual Hilbert function under a CI linkage");
    add_input_options(link, config, input, random_spec, save_points);
    link->add_option("--a", degree_a, "degree of the first CI form")->required();
    link->add_option("--b", degree_b, "degree of the second CI form")->required();
    link->add_flag("--with-colon", config.with_colon, "cross-check with the colon-ideal oracle");

    auto* counter = app.add_subcommand("counterexample",
                                       "11-of-22 generic points in P^6: prediction vs actual");
    counter->add_option("--seed", config.seed, "sampling seed");
    counter->add_option("--prime", config.prime, "field modulus (odd prime)");
    counter->add_flag("--full", config.full, "also compute full Betti tables (slow tier)");

    auto* experiment = app.add_subcommand("experiment", "batch predicted-vs-actual statistics");
    experiment->add_option("--n", config.n, "projective dimension");
    experiment->add_option("--d-min", config.d_min, "smallest point count");
    experiment->add_option("--d-max", config.d_max, "largest point count");
    experiment->add_option("--seeds", config.seeds, "instances per point count");
    experiment->add_option("--seed", config.seed, "base seed");
    experiment->add_option("--e", e, "single subset size (default: all 1..d-1)");
    experiment->add_option("--prime", config.prime, "field modulus (odd prime)");

    CLI11_PARSE(app, argc, argv);

    for (auto* cmd : {hilbert, betti, classify, find, enumerate, predict, link, counter, experiment})
        if (cmd->parsed()) config.command = cmd->get_name();

    try {
        if (!input.empty()) config.input_path = input;
        if (!save_points.empty()) config.save_points_path = save_points;
        if (!random_spec.empty()) config.random_spec = subsyz::parse_random_spec(random_spec);
        if (m >= 0) config.m = m;
        if (e >= 0) config.e = e;
        if (degree_a >= 0) config.degree_a = degree_a;
        if (degree_b >= 0) config.degree_b = degree_b;
        if (!window.empty()) {
            std::string w = window;
            if (w.rfind("twist=", 0) == 0) w = w.substr(6);
            config.twist = std::stoi(w);
        }
    } catch (const subsyz::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }

    return emit(subsyz::dispatch(config), format, output);
}
