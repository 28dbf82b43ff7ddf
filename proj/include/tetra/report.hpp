#pragma once
/// Result type shared by all verifiers: pass/fail, how much was swept,
/// and a capped list of counterexample witnesses.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace tetra {

struct Witness {
    std::string relation;
    std::string state;
    std::string lhs;
    std::string rhs;
};

struct CheckReport {
    static constexpr std::size_t kMaxWitnesses = 10;

    std::string name;
    std::map<std::string, std::string> params;
    bool pass = true;
    std::int64_t states_checked = 0;
    std::int64_t failure_count = 0;
    std::vector<Witness> witnesses;
    // Populated by numeric (floating point) checks only.
    double max_residual = 0.0;
    double tolerance = 0.0;

    void count(std::int64_t n = 1) { states_checked += n; }

    void fail(const std::string& relation, const std::string& state, const std::string& lhs,
              const std::string& rhs) {
        pass = false;
        ++failure_count;
        if (witnesses.size() < kMaxWitnesses) witnesses.push_back({relation, state, lhs, rhs});
    }

    void residual(double r) {
        if (r > max_residual) max_residual = r;
    }

    /// Merge a sub-report (used by sweep aggregation).
    void absorb(const CheckReport& o);

    /// Canonical JSON text (sorted keys, no volatile fields).
    std::string to_json() const;
};

}  // namespace tetra
