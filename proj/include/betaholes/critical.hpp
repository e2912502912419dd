#pragma once

// The critical value tau_beta, the Z_m sets and the t_N approximants.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "betaholes/bifurcation.hpp"
#include "betaholes/survivor.hpp"

namespace bh {

enum class Regime { left_endpoint, inside_farey_low, inside_farey_high, outside_closure };
const char* regime_name(Regime r);

struct TauReport {
    BetaSpec beta;
    Regime regime = Regime::outside_closure;
    Interval tau_lower;
    Interval tau_upper;
    std::vector<std::string> witnesses;
    std::size_t atlas_depth = 0;
    bool certified = false;
    std::optional<Word> generator;     // Farey generator when beta is located in or at one
    std::optional<Interval> t_star;    // set inside a Farey interval
    std::optional<Interval> t_diamond;
};

inline constexpr double atlas_gap_tolerance = 1e-6;
inline constexpr std::size_t default_atlas_depth = 10;

TauReport tau_report(const BetaSpec& beta, std::size_t atlas_depth = default_atlas_depth);

// 0 a_2 ... a_m (a)^inf and 0 a_2 ... a_m^+ 0^inf.
EpSequence t_star_sequence(const Word& a);
EpSequence t_diamond_sequence(const Word& a);

struct ZSet {
    std::vector<EpSequence> members;
    std::size_t automaton_states = 0;
};

ZSet z_set(const Word& a);

struct TnMember {
    EpSequence t;
    bool shift_bounds_hold;  // t <= sigma^n t < (a)^inf for all n
};

TnMember t_n_family(const Word& a, std::size_t N);

bool verify_empty_at_left_endpoint(const Word& a);

}  // namespace bh
