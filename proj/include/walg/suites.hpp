// The verification check registry: each suite expands, for one configuration,
// into independent pass/fail rows with JSON parameters and (on failure) a
// serialized witness. Rows are pure and may run concurrently.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "walg/algebra.hpp"
#include "walg/mutation.hpp"
#include "walg/serialize.hpp"

namespace walg {

inline constexpr unsigned long kDefaultSeed = 20240915UL;

struct CheckOptions {
    int max_r = 0;  // 0 = suite default (l + 3)
    unsigned long seed = kDefaultSeed;
    Mutation mutation = Mutation::None;
    int pbw_max_degree = 0;  // 0 = default: 4, or 3 when nl >= 8
};

struct CheckOutcome {
    bool pass = false;
    Json witness = Json::object();
};

struct CheckTask {
    std::string suite;
    Json params;
    std::function<CheckOutcome()> run;
};

// Registered suite names, in display order ("core" holds the sampled algebra
// property checks; "all" at the CLI expands to every name here).
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

std::vector<CheckTask> make_suite_tasks(const std::string& suite, const Config& cfg,
                                        const CheckOptions& opt);

// The default verification grid.
std::vector<Config> default_grid();

}  // namespace walg
