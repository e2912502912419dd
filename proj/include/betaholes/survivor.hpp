#pragma once

// Survivor subshifts {x : lower <= sigma^n x < upper for all n}, their
// automata, word counts, entropy brackets and Hausdorff dimension.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "betaholes/expansions.hpp"

namespace bh {

struct LexSubshift {
    EpSequence lower;
    EpSequence upper;
    bool strict_upper = true;
    bool strict_lower = false;
};

LexSubshift survivor_shift(const EpSequence& lower, const EpSequence& alpha);

// Replaces a strict upper bound alpha by the non-strict (a_1...a_m^-)^inf when
// some alpha_m = 1 has sigma^m(alpha) <= lower (smallest such m).
LexSubshift reduce_upper(const LexSubshift& shift);

bool membership(const EpSequence& x, const LexSubshift& shift);

inline constexpr std::size_t default_state_cap = 1'000'000;

struct SubshiftAutomaton {
    std::vector<std::array<int, 2>> next;  // -1 marks a forbidden digit
    std::vector<char> good;                // some legal infinite sequence continues from here
    std::vector<int> scc;                  // component id, -1 for states without infinite future
    std::vector<char> scc_rich;            // component carries more than one cycle
    std::vector<char> scc_good;
    int start = 0;

    std::size_t size() const { return next.size(); }
    bool empty() const { return !good[static_cast<std::size_t>(start)]; }
};

SubshiftAutomaton compile(const LexSubshift& shift, std::size_t cap = default_state_cap);

enum class CountMethod { automaton, brute_force };

inline constexpr std::size_t brute_force_max_n = 30;

std::uint64_t count_words(const SubshiftAutomaton& aut, std::size_t n);
std::uint64_t count_words(const LexSubshift& shift, std::size_t n, CountMethod method = CountMethod::automaton);

// Words of length n whose every internal window respects the bound prefixes.
std::uint64_t count_relaxed(const LexSubshift& shift, std::size_t n);

enum class EntropyMethod { automaton_exact, counting };

const char* method_name(EntropyMethod m);

struct EntropyBracket {
    double lower = 0.0;  // bits
    double upper = 0.0;
    EntropyMethod method = EntropyMethod::automaton_exact;
    bool empty = false;
};

struct EntropyOptions {
    enum class Mode { automatic, automaton, counting } mode = Mode::automatic;
    std::size_t counting_depth = 20;
    std::size_t state_cap = default_state_cap;
    double tolerance = 1e-9;
};

EntropyBracket entropy(const SubshiftAutomaton& aut, double tolerance = 1e-9);
EntropyBracket entropy(const LexSubshift& shift, const EntropyOptions& opt = {});

struct DimensionOptions {
    std::size_t horizon = 64;  // digits of b(t) and alpha used when they are not exact
    EntropyOptions entropy;
};

struct DimensionBracket {
    EntropyBracket h;
    double lower = 0.0;
    double upper = 0.0;
    bool exact_bounds = false;  // both b(t) and alpha were known exactly
};

DimensionBracket dimension(const BetaSpec& beta, const PointSpec& t, const DimensionOptions& opt = {});

}  // namespace bh
