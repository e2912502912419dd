#pragma once

// Bifurcation sets, basic and Farey parameter intervals, isolated points,
// and the doubling-map intervals I_w with the map phi.

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "betaholes/expansions.hpp"
#include "betaholes/words.hpp"

namespace bh {

using Rational = boost::multiprecision::cpp_rational;

bool in_E_plus(const EpSequence& t, const EpSequence& alpha);
bool in_E_zero(const EpSequence& t, const EpSequence& alpha);

enum class IntervalKind { basic, farey };
const char* kind_name(IntervalKind k);

struct IntervalRecord {
    Word generator;  // maximal rotation a_1...a_m
    Word lyndon;     // s_1...s_m
    std::size_t shift;  // s = a_{j+1}...a_m a_1...a_j
    BetaSpec beta_L;
    BetaSpec beta_R;
    IntervalKind kind;

    const EpSequence& alpha_L() const { return *beta_L.alpha; }
    const EpSequence& alpha_R() const { return *beta_R.alpha; }
};

IntervalRecord basic_interval(const Word& a);
IntervalRecord farey_interval(const Word& a);

enum class Isolation { isolated, not_isolated, not_in_E_plus };
const char* isolation_name(Isolation i);

Isolation classify_isolated(const Word& t_period, const BetaSpec& beta);

enum class Nesting { disjoint, first_inside_second, second_inside_first, equal };
const char* nesting_name(Nesting n);

Nesting nesting_relation(const IntervalRecord& i1, const IntervalRecord& i2);

struct DoublingInterval {
    Word word;
    Rational q_L;
    Rational q_R;
};

DoublingInterval doubling_interval(const Word& w);

// pi_2 of a sequence, exactly.
Rational binary_value(const EpSequence& x);

// phi(beta) = pi_2(alpha(beta)); a point interval when alpha is exact.
Interval phi(const BetaSpec& beta);

// Position of beta relative to (beta_L, beta_R]: -1 at or below beta_L,
// 0 inside, +1 above beta_R. Exact for symbolic beta.
int locate(const BetaSpec& beta, const IntervalRecord& rec);

// Every basic interval (or only the Farey ones) with generator length in [2, max_len].
std::vector<IntervalRecord> atlas(std::size_t max_len, bool farey_only);

struct ZeroRunReport {
    std::size_t max_run = 0;
    std::size_t horizon = 0;
    bool bounded = false;  // exact for symbolic alpha, a horizon heuristic otherwise
    bool certified = false;
};

ZeroRunReport zero_run_diagnostic(const BetaSpec& beta, std::size_t horizon = default_alpha_horizon);

struct OrbitAvoidance {
    bool enters_hole = false;    // some T^n(beta - 1) is certified to lie in (0, t)
    std::size_t first_entry = 0;
    std::size_t horizon = 0;
};

// Checks whether the orbit of beta - 1 meets the hole (0, t) within the horizon.
OrbitAvoidance e_zero_isolation_check(const BetaSpec& beta, const PointSpec& t, std::size_t horizon = 200);

std::string rational_decimal(const Rational& r, int digits);

}  // namespace bh
