#include "subsyz/report_io.hpp"

#include <fstream>
#include <sstream>

namespace subsyz {

PointSet point_set_from_json(const json& j) {
    if (!j.is_object()) throw ValidationError("point-set file must be a JSON object");
    if (!j.contains("prime") || !j.contains("projective_dim") || !j.contains("points"))
        throw ValidationError("point-set file needs keys prime, projective_dim, points");
    try {
        Field field(j.at("prime").get<std::uint64_t>());
        int n = j.at("projective_dim").get<int>();
        std::vector<std::vector<std::int64_t>> raw;
        for (const auto& pt : j.at("points")) raw.push_back(pt.get<std::vector<std::int64_t>>());
        return make_point_set(n, field, raw);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed point-set file: ") + e.what());
    }
}

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open point-set file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("malformed JSON in " + path + ": " + e.what());
    }
    return point_set_from_json(j);
}

json point_set_to_json(const PointSet& X) {
    json pts = json::array();
    for (const auto& p : X.points) pts.push_back(p);
    return json{{"prime", X.field.prime()}, {"projective_dim", X.n}, {"points", pts}};
}

json hilbert_to_json(const HilbertTable& hf) {
    return json{{"values", hf.values},
                {"deltas", hf.deltas},
                {"degree", hf.degree},
                {"stabilization", hf.stabilization}};
}

json betti_to_json(const BettiTable& b) {
    json entries = json::array();
    for (const auto& [key, beta] : b.entries)
        entries.push_back(json{{"p", key.first}, {"twist", key.second}, {"beta", beta}});
    return json{{"n", b.n}, {"d", b.d}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
    BettiTable b;
    b.n = j.at("n").get<int>();
    b.d = j.at("d").get<long>();
    for (const auto& e : j.at("entries"))
        b.set(e.at("p").get<int>(), e.at("twist").get<int>(), e.at("beta").get<long>());
    return b;
}

namespace {

const char* binding_name(Binding b) {
    switch (b) {
        case Binding::kSourceMinusKernel: return "(i')";
        case Binding::kPreviousKernel: return "(ii')";
        default: return "both";
    }
}

}  // namespace

json guess_to_json(const GuessRankTable& g) {
    json ranks = json::array();
    for (const auto& [key, e] : g.entries) {
        if (e.source_dim == 0 && e.rank == 0) continue;
        ranks.push_back(json{{"i", key.first},
                             {"q", key.second},
                             {"source_dim", e.source_dim},
                             {"rank", e.rank},
                             {"kernel_dim", e.kernel_dim},
                             {"binding", binding_name(e.binding)}});
    }
    return json{{"e", g.e}, {"ranks", ranks}, {"predicted_betti", betti_to_json(g.derived_betti)}};
}

namespace {

json ranks_to_json(const std::vector<DegreeRank>& ranks) {
    json out = json::array();
    for (const auto& r : ranks)
        out.push_back(json{{"s", r.s}, {"predicted", r.predicted}, {"actual", r.actual}});
    return out;
}

}  // namespace

json chain_to_json(const SubsetChain& c) {
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(json{{"removed_index", s.removed_index}, {"ranks", ranks_to_json(s.ranks)}});
    return json{{"success", c.success},
                {"steps", steps},
                {"final_indices", c.final_indices},
                {"final_ranks", ranks_to_json(c.final_ranks)},
                {"candidates_tried", c.candidates_tried}};
}

json case_to_json(const CaseLabel& c) {
    return json{{"l", c.l}, {"gens_at_lplus1", c.gens_at_lplus1}, {"case", c.case_number}};
}

json degree_matrix_to_json(const DegreeMatrix& dm) {
    return json{{"syzygy_twists", dm.row_twists},
                {"generator_twists", dm.col_twists},
                {"entries", dm.entries}};
}

json subset_records_to_json(const std::vector<SubsetRecord>& recs) {
    json out = json::array();
    for (const auto& r : recs) {
        json ranks = json::array();
        for (auto [s, rk] : r.mu_ranks) ranks.push_back(json::array({s, rk}));
        out.push_back(
            json{{"indices", r.indices}, {"mu_ranks", ranks}, {"truncated", r.truncated}});
    }
    return out;
}

json counterexample_to_json(const CounterexampleReport& rep) {
    json j{{"seed", rep.seed},
           {"prime", rep.prime},
           {"retries", rep.retries},
           {"dims22", rep.dims22},
           {"dims11", rep.dims11},
           {"ranks22", rep.ranks22},
           {"ranks11", rep.ranks11},
           {"betti25_22", rep.betti25_22},
           {"predicted_ranks11", rep.predicted_ranks11},
           {"predicted", json{{"b25", rep.predicted_b25}, {"b35", rep.predicted_b35}}},
           {"actual", json{{"b25", rep.actual_b25}, {"b35", rep.actual_b35}}},
           {"match", json{{"b25", rep.match_b25}, {"b35", rep.match_b35}}},
           {"agrees_with_classical_actual", rep.agrees_with_classical_actual},
           {"agrees_with_classical_predicted", rep.agrees_with_classical_predicted}};
    if (rep.full_betti22) j["full_betti22"] = betti_to_json(*rep.full_betti22);
    if (rep.full_betti11) j["full_betti11"] = betti_to_json(*rep.full_betti11);
    if (rep.full_predicted11) j["full_predicted11"] = betti_to_json(*rep.full_predicted11);
    return j;
}

std::string counterexample_text(const CounterexampleReport& rep) {
    std::ostringstream os;
    os << "seed " << rep.seed << ", prime " << rep.prime << ", retries " << rep.retries << "\n\n";
    os << "twist-5 window  L^3(x)I_2 -> L^2(x)I_3 -> L^1(x)I_4 -> I_5\n";
    auto line = [&](const char* label, const std::array<long, 4>& d) {
        os << label << "  " << d[0] << " -> " << d[1] << " -> " << d[2] << " -> " << d[3] << "\n";
    };
    line("dims, 22 points:", rep.dims22);
    line("dims, 11 points:", rep.dims11);
    os << "\nranks d_{3,2}, d_{2,3}, d_{1,4}\n";
    os << "  22 points: " << rep.ranks22[0] << ", " << rep.ranks22[1] << ", " << rep.ranks22[2]
       << "   (betti_{2,5} = " << rep.betti25_22 << ")\n";
    os << "  11 points: " << rep.ranks11[0] << ", " << rep.ranks11[1] << ", " << rep.ranks11[2]
       << "\n";
    os << "predicted ranks e_{3,2}, e_{2,3}, e_{1,4} for an 11-subset: "
       << rep.predicted_ranks11[0] << ", " << rep.predicted_ranks11[1] << ", "
       << rep.predicted_ranks11[2] << "\n\n";
    os << "betti_{2,5}: predicted " << rep.predicted_b25 << ", actual " << rep.actual_b25
       << (rep.match_b25 ? "  [match]" : "  [MISMATCH]") << "\n";
    os << "betti_{3,5}: predicted " << rep.predicted_b35 << ", actual " << rep.actual_b35
       << (rep.match_b35 ? "  [match]" : "  [MISMATCH]") << "\n";
    os << "classical outcome reproduced: actual "
       << (rep.agrees_with_classical_actual ? "yes" : "no") << ", predicted "
       << (rep.agrees_with_classical_predicted ? "yes" : "no") << "\n";
    if (rep.full_betti22) os << "\nfull table, 22 points\n" << betti_diagram(*rep.full_betti22);
    if (rep.full_betti11) os << "\nfull table, 11 points\n" << betti_diagram(*rep.full_betti11);
    if (rep.full_predicted11)
        os << "\npredicted table, 11-subset\n" << betti_diagram(*rep.full_predicted11);
    return os.str();
}

}  // namespace subsyz
