#pragma once

// Staircase sweeps shared by the command-line tool and the acceptance run.

#include <cstddef>
#include <string>
#include <vector>

#include "betaholes/survivor.hpp"

namespace bh {

struct StaircaseRow {
    Interval t;
    DimensionBracket d;
};

struct StaircaseRequest {
    BetaSpec beta;
    Interval t_min{0.0};
    Interval t_max{0.0};
    bool t_max_is_edge = false;  // t_max is 1 - 1/beta, expanded exactly when beta is symbolic
    std::size_t samples = 64;
    std::size_t n_max = 20;      // counting depth when the automaton is too large
    unsigned threads = 0;        // 0: one per hardware thread
};

// Rows in increasing t. Throws std::invalid_argument for fewer than two samples
// or a grid outside [0, 1].
std::vector<StaircaseRow> staircase(const StaircaseRequest& req);

inline const char* staircase_header = "t,h_lower,h_upper,dim_lower,dim_upper,method";

std::string staircase_csv(const std::vector<StaircaseRow>& rows, int digits);

}  // namespace bh
