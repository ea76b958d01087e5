#pragma once

#include <string>
#include <vector>

#include "rootlab/classify.hpp"

namespace rootlab {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail; // counts on success, first counterexample on failure
};

// Every diagram the verification suite sweeps: classical families over all
// admissible 1 <= l <= r <= max_rank, the thirteen exceptional types, and
// the doubled types that fit inside max_rank.
std::vector<TableSelection> sweep_selections(int max_rank);

// The full verification suite (the nine acceptance checks); deterministic
// for a fixed max_rank.
std::vector<CriterionResult> verify_all(int max_rank = 8);

} // namespace rootlab
