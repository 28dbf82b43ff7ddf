#include "tetra/report.hpp"

#include <json.hpp>

namespace tetra {

void CheckReport::absorb(const CheckReport& o) {
    pass = pass && o.pass;
    states_checked += o.states_checked;
    failure_count += o.failure_count;
    for (const auto& w : o.witnesses) {
        if (witnesses.size() >= kMaxWitnesses) break;
        witnesses.push_back(w);
    }
    if (o.max_residual > max_residual) max_residual = o.max_residual;
    if (o.tolerance > tolerance) tolerance = o.tolerance;
}

std::string CheckReport::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["params"] = params;
    j["pass"] = pass;
    j["states_checked"] = states_checked;
    j["failure_count"] = failure_count;
    auto ws = nlohmann::json::array();
    for (const auto& w : witnesses) {
        ws.push_back({{"relation", w.relation}, {"state", w.state}, {"lhs", w.lhs}, {"rhs", w.rhs}});
    }
    j["witnesses"] = ws;
    if (tolerance > 0) {
        j["max_residual"] = max_residual;
        j["tolerance"] = tolerance;
    }
    return j.dump();
}

}  // namespace tetra
