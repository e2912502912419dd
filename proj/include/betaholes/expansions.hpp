#pragma once

// Greedy and quasi-greedy beta-expansions, eventually periodic sequences,
// Parry admissibility and the alpha(beta) <-> beta correspondence.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "betaholes/interval.hpp"
#include "betaholes/words.hpp"

namespace bh {

// preperiod . period^inf, kept canonical: primitive period, shortest preperiod.
class EpSequence {
public:
    EpSequence(std::string preperiod, std::string period);

    // "PRE(PER)", e.g. "11(01)", "(10)", "(0)".
    static EpSequence parse(const std::string& text);
    static EpSequence periodic(const Word& w) { return EpSequence("", w.str()); }
    static EpSequence finite(const Word& w) { return EpSequence(w.str(), "0"); }  // w 0^inf
    static EpSequence zero() { return EpSequence("", "0"); }

    const std::string& preperiod() const { return pre_; }
    const std::string& period() const { return per_; }
    bool ends_in_zero() const { return per_ == "0"; }
    bool purely_periodic() const { return pre_.empty(); }

    int digit(std::size_t i) const {
        return (i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()]) - '0';
    }
    std::string prefix(std::size_t n) const;
    EpSequence shift(std::size_t n) const;
    // Number of distinct shifts worth checking: every shift equals one of sigma^0..sigma^(count-1).
    std::size_t orbit_window() const { return pre_.size() + per_.size(); }

    std::string to_string() const { return pre_ + "(" + per_ + ")"; }

    friend bool operator==(const EpSequence& a, const EpSequence& b) { return a.pre_ == b.pre_ && a.per_ == b.per_; }
    friend bool operator!=(const EpSequence& a, const EpSequence& b) { return !(a == b); }

private:
    std::string pre_;
    std::string per_;
};

Order lex_compare_ep(const EpSequence& u, const EpSequence& v);
inline bool ep_less(const EpSequence& u, const EpSequence& v) { return lex_compare_ep(u, v) == Order::less; }
inline bool ep_leq(const EpSequence& u, const EpSequence& v) { return lex_compare_ep(u, v) != Order::greater; }

// u followed by x.
EpSequence concat(const std::string& u, const EpSequence& x);

struct BetaSpec {
    std::optional<EpSequence> alpha;  // exact alpha(beta) when known
    Interval value;
    std::string label;

    static BetaSpec from_value(const Interval& v, std::string label);
    // Decimal literal, or "@PRE(PER)" meaning the root for that alpha.
    static BetaSpec parse(const std::string& text);
    bool symbolic() const { return alpha.has_value(); }
};

struct PointSpec {
    std::optional<EpSequence> expansion;  // greedy expansion when known exactly
    Interval value;
};

struct DigitExpansion {
    std::string digits;
    std::size_t certified = 0;        // digits[0, certified) are proven correct
    std::optional<EpSequence> exact;  // set when the orbit provably reaches 0 (greedy) or 1 (quasi-greedy)
};

DigitExpansion greedy_digits(const Interval& x, const BetaSpec& beta, std::size_t n);
DigitExpansion quasi_greedy_digits(const Interval& x, const BetaSpec& beta, std::size_t n);

bool is_in_Q(const EpSequence& a);
bool is_admissible(const EpSequence& x, const EpSequence& alpha);

inline constexpr int default_root_radius_log2 = -60;

BetaSpec beta_from_alpha(const EpSequence& a, mpfr_prec_t prec = default_precision);

struct AlphaResult {
    std::optional<EpSequence> sequence;  // set when a period was found
    bool heuristic = false;              // period found from numeric overlap only
    std::string prefix;
    std::size_t certified = 0;
};

inline constexpr std::size_t default_alpha_horizon = 160;

AlphaResult alpha_of_beta(const BetaSpec& beta, std::size_t horizon = default_alpha_horizon);

// Lexicographic bracket [lo, hi] for alpha(beta); lo == hi when alpha is exact.
std::pair<EpSequence, EpSequence> alpha_bracket(const BetaSpec& beta, std::size_t horizon = default_alpha_horizon);

Interval project(const EpSequence& x, const BetaSpec& beta);
Interval project(const EpSequence& x, const Interval& beta);

// b(1 - 1/beta, beta) for symbolic beta.
EpSequence greedy_one_minus_inv_beta(const EpSequence& alpha);

// Greedy expansion of t as a lexicographic bracket [lo, hi] (equal when exact).
std::pair<EpSequence, EpSequence> greedy_bracket(const PointSpec& t, const BetaSpec& beta, std::size_t horizon);

}  // namespace bh
