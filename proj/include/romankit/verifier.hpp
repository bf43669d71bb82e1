#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "romankit/graph.hpp"
#include "romankit/hypergraph.hpp"

namespace romankit::verify {

using nlohmann::json;

// Size parameters for the exhaustive suites.
struct Budget {
    int max_n = 6;                // deduplicated graphs, n <= 8
    int max_t = 8;                // suns and co-suns
    int max_k = 3;                // k range for the graph suites
    int hyper_max_v = 6;          // exhaustive uniform hypergraphs, |V| <= 7
    int hyper_max_e = 8;
    int random_hypergraphs = 100; // additional seeded instances per k
    int random_max_v = 9;
    int random_max_e = 10;
    int factor_max_n = 5;         // split-join factors
    int reduction_instances = 50;
    std::uint64_t seed = 1;

    bool operator==(const Budget& other) const = default;
};

void to_json(json& j, const Budget& b);
void from_json(const json& j, Budget& b);

struct Counterexample {
    json instance;
    std::string property;
    json observed;
    json expected;

    bool operator==(const Counterexample& other) const = default;
};

void to_json(json& j, const Counterexample& c);
void from_json(const json& j, Counterexample& c);

struct VerificationReport {
    std::string suite;
    Budget budget;
    std::size_t checked = 0;
    bool passed = true;
    std::optional<Counterexample> counterexample;  // present iff !passed

    bool operator==(const VerificationReport& other) const = default;
};

void to_json(json& j, const VerificationReport& r);
void from_json(const json& j, VerificationReport& r);

// The solvers a suite consults. Tests swap in corrupted versions to check
// that the harness notices.
struct Solvers {
    std::function<int(const Graph&)> gamma;
    std::function<int(const Graph&, int)> gamma_rk;
    std::function<bool(const Graph&, int)> is_k_roman;
    std::function<bool(const Hypergraph&)> has_perfect_matching;
    std::function<int(const Hypergraph&)> edge_cover_number;

    static Solvers exact();
};

const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite or an over-limit budget.
VerificationReport run_suite(const std::string& suite, const Budget& budget, const Solvers& solvers = Solvers::exact(),
                             int threads = -1);

// The suite's instances for a budget, in evaluation order.
std::vector<json> suite_instances(const std::string& suite, const Budget& budget);

// Checks one instance; nullopt when the property holds.
std::optional<Counterexample> check_instance(const std::string& suite, const json& instance,
                                             const Solvers& solvers = Solvers::exact());

// Thread count from ROMANKIT_THREADS (0 = serial); defaults to the number
// of hardware threads.
int threads_from_env();

}  // namespace romankit::verify
