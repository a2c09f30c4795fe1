#include "segstab/io.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace segstab {

using nlohmann::json;

std::string instance_to_json(const PlaneGraphInstance& inst) {
    json j;
    j["vertices"] = json::array();
    for (const Point& p : inst.vertices)
        j["vertices"].push_back({p.x, p.y});
    j["edges"] = json::array();
    for (auto [a, b] : inst.edges) j["edges"].push_back({a, b});
    j["r"] = inst.r;
    j["class"] = to_string(inst.cls);
    return j.dump(2);
}

PlaneGraphInstance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    PlaneGraphInstance inst;
    for (const auto& v : j.at("vertices"))
        inst.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
    for (const auto& e : j.at("edges"))
        inst.edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    inst.r = j.at("r").get<double>();
    inst.cls = graph_class_from_string(j.at("class").get<std::string>());
    return inst;
}

void save_instance(const PlaneGraphInstance& inst, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << instance_to_json(inst) << "\n";
}

PlaneGraphInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

std::string solution_to_json(const Solution& sol) {
    json j;
    j["points"] = json::array();
    for (const Point& p : sol.points) j["points"].push_back({p.x, p.y});
    j["witness"] = json::array();
    for (const EdgeWitness& w : sol.witness)
        j["witness"].push_back(
            {{"edge", w.edge}, {"point", w.point}, {"dist", w.distance}});
    j["stats"] = {{"variant", to_string(sol.variant)},
                  {"nu", sol.nu},
                  {"y0", sol.y0_size},
                  {"active", sol.active_count},
                  {"forced", sol.forced_count},
                  {"independent", sol.independent_count},
                  {"k", sol.pap.k_final},
                  {"h1", sol.pap.h1_size},
                  {"h2", sol.pap.h2_size},
                  {"family", sol.pap.family_size},
                  {"reweight_runs", sol.pap.reweight_runs},
                  {"rounds", sol.pap.rounds},
                  {"updates", sol.pap.total_updates},
                  {"fallbacks", sol.pap.finder_fallbacks},
                  {"verified", sol.verified},
                  {"ms", sol.wall_ms}};
    return j.dump(2);
}

Solution solution_from_json(const std::string& text) {
    json j = json::parse(text);
    Solution sol;
    for (const auto& p : j.at("points"))
        sol.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    if (j.contains("witness"))
        for (const auto& w : j["witness"])
            sol.witness.push_back({w.at("edge").get<int>(),
                                   w.at("point").get<int>(),
                                   w.at("dist").get<double>()});
    if (j.contains("stats")) {
        const auto& s = j["stats"];
        if (s.contains("variant"))
            sol.variant =
                graph_class_from_string(s["variant"].get<std::string>());
        if (s.contains("nu")) sol.nu = s["nu"].get<double>();
        if (s.contains("y0")) sol.y0_size = s["y0"].get<std::size_t>();
        if (s.contains("active"))
            sol.active_count = s["active"].get<std::size_t>();
        if (s.contains("forced"))
            sol.forced_count = s["forced"].get<std::size_t>();
        if (s.contains("independent"))
            sol.independent_count = s["independent"].get<std::size_t>();
        if (s.contains("k")) sol.pap.k_final = s["k"].get<long>();
        if (s.contains("verified")) sol.verified = s["verified"].get<bool>();
        if (s.contains("ms")) sol.wall_ms = s["ms"].get<double>();
    }
    return sol;
}

void save_solution(const Solution& sol, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open for writing: " + path);
    out << solution_to_json(sol) << "\n";
}

Solution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return solution_from_json(ss.str());
}

}  // namespace segstab
