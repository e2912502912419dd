#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "betaholes/error.hpp"
#include "betaholes/survivor.hpp"

using namespace bh;

namespace {

EpSequence ep(const char* s) { return EpSequence::parse(s); }

LexSubshift shift(const char* lo, const char* hi, bool strict_upper = true) {
    return LexSubshift{ep(lo), ep(hi), strict_upper, false};
}

std::string random_bits(std::mt19937& rng, std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) s.push_back(rng() & 1 ? '1' : '0');
    return s;
}

std::vector<EpSequence> q_sequences(std::size_t max_pre, std::size_t max_per) {
    std::vector<EpSequence> out;
    std::set<std::string> seen;
    for (std::size_t a = 0; a <= max_pre; ++a)
        for (std::size_t b = 1; b <= max_per; ++b)
            for (std::size_t bits = 0; bits < (std::size_t{1} << (a + b)); ++bits) {
                std::string s;
                for (std::size_t i = 0; i < a + b; ++i) s.push_back(bits >> i & 1 ? '1' : '0');
                EpSequence e(s.substr(0, a), s.substr(a));
                if (is_in_Q(e) && seen.insert(e.to_string()).second) out.push_back(e);
            }
    return out;
}

}  // namespace

TEST_CASE("compile: full shift") {
    const auto s = shift("(0)", "(1)");
    const auto aut = compile(s);
    CHECK(aut.size() == 1);
    for (std::size_t n = 0; n <= 20; ++n) CHECK(count_words(aut, n) == (std::uint64_t{1} << n));
    CHECK(count_words(s, 5, CountMethod::brute_force) == 32);
    const auto h = entropy(s);
    CHECK(h.lower <= 1.0);
    CHECK(h.lower > 1.0 - 1e-9);
    CHECK(h.upper == 1.0);
}

TEST_CASE("compile: golden mean shift counts are Fibonacci") {
    const auto s = shift("(0)", "(10)");
    std::uint64_t a = 1, b = 2;  // F(n+2) starting at n = 0
    for (std::size_t n = 0; n <= 30; ++n) {
        CHECK(count_words(s, n) == a);
        if (n <= 12) CHECK(count_words(s, n, CountMethod::brute_force) == a);
        const std::uint64_t c = a + b;
        a = b;
        b = c;
    }
    CHECK(count_words(s, 5) == 13);
    const auto h = entropy(s);
    const double want = std::log2((1 + std::sqrt(5.0)) / 2);
    CHECK(h.lower <= want);
    CHECK(h.upper >= want);
    CHECK(h.upper - h.lower < 1e-9);
    CHECK(h.lower > 0.6942);
    CHECK(h.upper < 0.6943);
}

TEST_CASE("bounds (01) and (10)") {
    // with a strict upper bound nothing survives: sigma of (01)^inf is (10)^inf
    const auto strict = shift("(01)", "(10)");
    CHECK(compile(strict).empty());
    CHECK(count_words(strict, 6) == 0);
    CHECK(entropy(strict).empty);
    // closing the upper bound leaves the single orbit of (01)^inf
    const auto closed = shift("(01)", "(10)", false);
    const auto aut = compile(closed);
    CHECK_FALSE(aut.empty());
    for (std::size_t n = 1; n <= 10; ++n) CHECK(count_words(aut, n) == 2);
    const auto h = entropy(aut);
    CHECK(h.upper == 0.0);
    CHECK(h.lower == 0.0);
}

TEST_CASE("empty subshift when lower exceeds upper") {
    const auto s = shift("(10)", "(01)");
    CHECK(count_words(s, 4) == 0);
    CHECK(count_words(s, 4, CountMethod::brute_force) == 0);
}

TEST_CASE("count_words brute force is capped") {
    try {
        count_words(shift("(0)", "(10)"), 31, CountMethod::brute_force);
        FAIL("expected TooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::TooLarge);
    }
}

TEST_CASE("state cap") {
    try {
        compile(shift("(0)", "(10)"), 1);
        FAIL("expected StateCapExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::StateCapExceeded);
    }
    EntropyOptions opt;
    opt.state_cap = 1;
    const auto h = entropy(shift("(0)", "(10)"), opt);
    CHECK(h.method == EntropyMethod::counting);
    CHECK(h.lower <= std::log2((1 + std::sqrt(5.0)) / 2));
    CHECK(h.upper >= std::log2((1 + std::sqrt(5.0)) / 2));
}

TEST_CASE("automaton counts equal brute force on random bounds") {
    std::mt19937 rng(2024);
    const auto qs = q_sequences(3, 5);
    int done = 0;
    while (done < 40) {
        const EpSequence lower(random_bits(rng, rng() % 5), random_bits(rng, 1 + rng() % 6));
        const EpSequence& upper = qs[rng() % qs.size()];
        if (!ep_less(lower, upper)) continue;
        const LexSubshift s{lower, upper, true, false};
        ++done;
        const auto aut = compile(s);
        for (std::size_t n = 0; n <= 12; ++n)
            REQUIRE_MESSAGE(count_words(aut, n) == count_words(s, n, CountMethod::brute_force),
                            lower.to_string() << " " << upper.to_string() << " n=" << n);
    }
}

TEST_CASE("word counts are submultiplicative") {
    std::mt19937 rng(99);
    const auto qs = q_sequences(2, 5);
    for (int k = 0; k < 10; ++k) {
        const EpSequence lower(random_bits(rng, rng() % 4), random_bits(rng, 1 + rng() % 5));
        const LexSubshift s{lower, qs[rng() % qs.size()], true, false};
        const auto aut = compile(s);
        for (std::size_t m = 1; m <= 12; ++m)
            for (std::size_t n = 1; n <= 12; ++n)
                REQUIRE(count_words(aut, m + n) <= count_words(aut, m) * count_words(aut, n));
    }
}

TEST_CASE("reduce_upper") {
    const auto s0 = shift("(0)", "(110)");
    CHECK(reduce_upper(s0).upper == s0.upper);
    CHECK(reduce_upper(s0).strict_upper);
    // alpha = 1^inf, lower (10)^inf: sigma(1^inf) is not <= (10)^inf
    const auto s1 = shift("(10)", "(1)");
    CHECK(reduce_upper(s1).upper == s1.upper);
    // alpha = (110)^inf: m = 1 needs lower >= (101)^inf, m = 2 needs lower >= (011)^inf
    const auto s2 = reduce_upper(shift("(100)", "(110)"));
    CHECK_FALSE(s2.strict_upper);
    CHECK(s2.upper == ep("(10)"));
    const auto s3 = reduce_upper(shift("(01)", "(110)"));
    CHECK(s3.strict_upper);
    const auto s4 = reduce_upper(shift("(1010110)", "(110)"));
    CHECK_FALSE(s4.strict_upper);
    CHECK(s4.upper == ep("(10)"));
}

TEST_CASE("reduce_upper preserves counts where it fires") {
    std::mt19937 rng(17);
    const auto qs = q_sequences(3, 6);
    int fired = 0;
    for (int tries = 0; tries < 100000 && fired < 10; ++tries) {
        const EpSequence lower(random_bits(rng, rng() % 4), random_bits(rng, 1 + rng() % 5));
        const EpSequence& upper = qs[rng() % qs.size()];
        if (!ep_less(lower, upper)) continue;
        const LexSubshift s{lower, upper, true, false};
        const LexSubshift r = reduce_upper(s);
        if (r.strict_upper) continue;
        ++fired;
        const auto a = compile(s), b = compile(r);
        for (std::size_t n = 0; n <= 12; ++n)
            REQUIRE_MESSAGE(count_words(a, n) == count_words(b, n), lower.to_string() << " " << upper.to_string());
    }
    CHECK(fired == 10);
}

TEST_CASE("membership") {
    const auto g = shift("(0)", "(10)");
    CHECK(membership(ep("(0)"), g));
    CHECK_FALSE(membership(ep("(011)"), g));
    const auto s = shift("(001)", "(110)");
    CHECK(membership(ep("(001)"), s));
    CHECK_FALSE(membership(ep("(0)"), s));
}

TEST_CASE("entropy at beta = 2, t = 1/2 is zero") {
    const auto s = shift("1(0)", "(1)");
    const auto h = entropy(s);
    CHECK(h.upper == 0.0);
    CHECK(h.method == EntropyMethod::automaton_exact);
}

TEST_CASE("counting entropy brackets the automaton value and shrinks with depth") {
    for (auto s : {shift("(0)", "(10)"), shift("01(0)", "(1)"), shift("(001)", "(110)"), shift("0(01)", "(1110)")}) {
        const auto exact = entropy(s);
        double prev_upper = 1.0;
        for (std::size_t depth : {4, 8, 12, 16, 20}) {
            EntropyOptions opt;
            opt.mode = EntropyOptions::Mode::counting;
            opt.counting_depth = depth;
            const auto c = entropy(s, opt);
            CHECK(c.method == EntropyMethod::counting);
            CHECK(c.upper <= prev_upper);
            CHECK(c.upper >= exact.lower - 1e-12);
            CHECK(c.lower <= exact.upper + 1e-12);
            prev_upper = c.upper;
        }
    }
}

TEST_CASE("dimension endpoints") {
    for (const char* b : {"2", "@(10)", "@(110)", "1.7"}) {
        const BetaSpec beta = BetaSpec::parse(b);
        const auto d = dimension(beta, PointSpec{EpSequence::zero(), Interval(0.0)});
        CHECK(d.lower == doctest::Approx(1.0).epsilon(1e-6));
        CHECK(d.upper == doctest::Approx(1.0).epsilon(1e-6));
    }
    const BetaSpec two = BetaSpec::parse("2");
    auto d = dimension(two, PointSpec{std::nullopt, Interval(0.5)});
    CHECK(d.upper < 0.02);
    CHECK(d.exact_bounds);
    d = dimension(two, PointSpec{std::nullopt, Interval(0.25)});
    CHECK(d.lower > 0.0);
    CHECK(d.upper < 1.0);
    EntropyOptions opt;
    opt.mode = EntropyOptions::Mode::counting;
    opt.counting_depth = 20;
    const auto c = entropy(survivor_shift(ep("01(0)"), ep("(1)")), opt);
    CHECK(c.lower <= d.h.upper + 1e-12);
    CHECK(c.upper >= d.h.lower - 1e-12);
    CHECK_THROWS_AS(dimension(two, PointSpec{std::nullopt, Interval(1.0)}), Error);
}

TEST_CASE("dimension is nonincreasing in t") {
    for (const char* b : {"@(10)", "@(110)"}) {
        const BetaSpec beta = BetaSpec::parse(b);
        std::vector<DimensionBracket> rows;
        for (int i = 0; i < 64; ++i) rows.push_back(dimension(beta, PointSpec{std::nullopt, Interval::from_ratio(i, 128)}));
        for (std::size_t i = 0; i + 1 < rows.size(); ++i)
            REQUIRE_MESSAGE(rows[i].lower >= rows[i + 1].upper - 2e-9, b << " row " << i);
    }
}
