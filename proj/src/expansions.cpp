#include "betaholes/expansions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <regex>
#include <stdexcept>
#include <vector>

#include "betaholes/error.hpp"

namespace bh {

namespace {

bool is_binary(const std::string& s) { return s.find_first_not_of("01") == std::string::npos; }

std::string primitive_root(const std::string& p) {
    const std::size_t m = p.size();
    for (std::size_t d = 1; d < m; ++d) {
        if (m % d) continue;
        bool ok = true;
        for (std::size_t i = d; i < m && ok; ++i) ok = p[i] == p[i - d];
        if (ok) return p.substr(0, d);
    }
    return p;
}

}  // namespace

EpSequence::EpSequence(std::string preperiod, std::string period) : pre_(std::move(preperiod)), per_(std::move(period)) {
    if (per_.empty()) throw std::invalid_argument("EpSequence: empty period");
    if (!is_binary(pre_) || !is_binary(per_)) throw std::invalid_argument("EpSequence: digits must be 0/1");
    per_ = primitive_root(per_);
    while (!pre_.empty() && pre_.back() == per_.back()) {
        per_ = per_.back() + per_.substr(0, per_.size() - 1);
        pre_.pop_back();
    }
}

EpSequence EpSequence::parse(const std::string& text) {
    static const std::regex re("^([01]*)\\(([01]+)\\)$");
    std::smatch m;
    if (!std::regex_match(text, m, re)) throw Error(ErrorCode::ParseError, "expected PRE(PER), got \"" + text + "\"");
    return EpSequence(m[1].str(), m[2].str());
}

std::string EpSequence::prefix(std::size_t n) const {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i) s[i] = static_cast<char>('0' + digit(i));
    return s;
}

EpSequence EpSequence::shift(std::size_t n) const {
    if (n <= pre_.size()) return EpSequence(pre_.substr(n), per_);
    std::size_t r = (n - pre_.size()) % per_.size();
    return EpSequence("", per_.substr(r) + per_.substr(0, r));
}

Order lex_compare_ep(const EpSequence& u, const EpSequence& v) {
    const std::size_t window = std::max(u.preperiod().size(), v.preperiod().size()) +
                               std::lcm(u.period().size(), v.period().size());
    for (std::size_t i = 0; i < window; ++i) {
        int a = u.digit(i), b = v.digit(i);
        if (a != b) return a < b ? Order::less : Order::greater;
    }
    return Order::equal;
}

EpSequence concat(const std::string& u, const EpSequence& x) {
    return EpSequence(u + x.preperiod(), x.period());
}

BetaSpec BetaSpec::from_value(const Interval& v, std::string label) {
    if (!certainly_less(Interval(1.0), v) || !certainly_leq(v, Interval(2.0)))
        throw Error(ErrorCode::OutOfRange, "beta must lie in (1, 2]: " + label);
    return BetaSpec{std::nullopt, v, std::move(label)};
}

BetaSpec BetaSpec::parse(const std::string& text) {
    if (!text.empty() && text[0] == '@') {
        BetaSpec b = beta_from_alpha(EpSequence::parse(text.substr(1)));
        b.label = text;
        return b;
    }
    static const std::regex dec("^[0-9]+(\\.[0-9]+)?$");
    if (!std::regex_match(text, dec)) throw Error(ErrorCode::ParseError, "not a beta literal: " + text);
    BetaSpec b = from_value(Interval::from_decimal(text), text);
    // a few exact values have a known alpha; 2 is the one that matters
    if (b.value.is_point() && b.value.lo() == 2.0) b.alpha = EpSequence("", "1");
    return b;
}

namespace {

enum class Branch { greedy, quasi };

DigitExpansion iterate(const Interval& x0, const BetaSpec& beta, std::size_t n, Branch br) {
    const Interval one(1.0, beta.value.precision());
    DigitExpansion r;
    r.digits.reserve(n);
    Interval x(x0);
    bool certified = true;
    std::vector<Interval> points;  // exact orbit points seen so far (certified run only)
    points.push_back(x);
    for (std::size_t i = 0; i < n; ++i) {
        Interval y = beta.value * x;
        int d;
        bool sure;
        if (br == Branch::greedy) {
            // digit 1 on [1/beta, 1), i.e. beta*x >= 1
            if (certainly_leq(one, y)) {
                d = 1, sure = true;
            } else if (certainly_less(y, one)) {
                d = 0, sure = true;
            } else {
                sure = false;
                d = y.mid() >= 1.0 - 4 * y.width() ? 1 : 0;  // a near tie is treated as the closed side
            }
        } else {
            // digit 0 on (0, 1/beta], i.e. beta*x <= 1
            if (certainly_leq(y, one)) {
                d = 0, sure = true;
            } else if (certainly_less(one, y)) {
                d = 1, sure = true;
            } else {
                sure = false;
                d = y.mid() <= 1.0 + 4 * y.width() ? 0 : 1;
            }
        }
        certified = certified && sure;
        r.digits.push_back(static_cast<char>('0' + d));
        if (certified) r.certified = i + 1;
        if (d) y -= one;
        y.clamp_below(0.0);
        x = y;
        if (certified && x.is_point() && !r.exact) {
            for (std::size_t j = 0; j < points.size(); ++j) {
                if (points[j].is_point() && mpfr_equal_p(points[j].lo_ref(), x.lo_ref())) {
                    r.exact = EpSequence(r.digits.substr(0, j), r.digits.substr(j));
                    break;
                }
            }
            points.push_back(x);
        }
        if (r.exact) {
            // fill the remaining digits from the exact sequence
            r.digits = r.exact->prefix(n);
            r.certified = n;
            break;
        }
    }
    return r;
}

}  // namespace

DigitExpansion greedy_digits(const Interval& x, const BetaSpec& beta, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "n must be positive");
    if (x.lo() < 0.0 || !certainly_less(x, Interval(1.0)))
        throw Error(ErrorCode::OutOfRange, "greedy expansion needs 0 <= x < 1, got " + x.to_string(12));
    return iterate(x, beta, n, Branch::greedy);
}

DigitExpansion quasi_greedy_digits(const Interval& x, const BetaSpec& beta, std::size_t n) {
    if (n == 0) throw Error(ErrorCode::OutOfRange, "n must be positive");
    if (!certainly_less(Interval(0.0), x) || !certainly_leq(x, Interval(1.0)))
        throw Error(ErrorCode::OutOfRange, "quasi-greedy expansion needs 0 < x <= 1, got " + x.to_string(12));
    if (beta.alpha && x.is_point() && x.lo() == 1.0)
        return DigitExpansion{beta.alpha->prefix(n), n, beta.alpha};
    return iterate(x, beta, n, Branch::quasi);
}

bool is_in_Q(const EpSequence& a) {
    if (a.ends_in_zero()) return false;
    for (std::size_t n = 1; n < a.orbit_window(); ++n)
        if (lex_compare_ep(a.shift(n), a) == Order::greater) return false;
    return true;
}

bool is_admissible(const EpSequence& x, const EpSequence& alpha) {
    for (std::size_t n = 0; n < x.orbit_window(); ++n)
        if (lex_compare_ep(x.shift(n), alpha) != Order::less) return false;
    return true;
}

Interval project(const EpSequence& x, const Interval& beta) {
    const mpfr_prec_t prec = beta.precision();
    const Interval one(1.0, prec);
    const Interval q = one / beta;
    Interval sum(0.0, prec);
    Interval qk(1.0, prec);
    for (char c : x.preperiod()) {
        qk *= q;
        if (c == '1') sum += qk;
    }
    if (x.ends_in_zero()) return sum;
    Interval per(0.0, prec);
    Interval qi(1.0, prec);
    for (char c : x.period()) {
        qi *= q;
        if (c == '1') per += qi;
    }
    // qi now holds q^p
    return sum + qk * per / (one - qi);
}

Interval project(const EpSequence& x, const BetaSpec& beta) { return project(x, beta.value); }

BetaSpec beta_from_alpha(const EpSequence& a, mpfr_prec_t prec) {
    if (!is_in_Q(a)) throw Error(ErrorCode::NotInQ, a.to_string());
    const Interval one(1.0, prec);
    auto f = [&](const Interval& b) { return project(a, b) - one; };  // decreasing in beta

    BetaSpec out{a, Interval(2.0, prec), "@" + a.to_string()};
    Interval at2 = f(Interval(2.0, prec));
    if (at2.is_point() && at2.lo() == 0.0) return out;

    mpfr_t lo, hi, mid;
    mpfr_inits2(prec, lo, hi, mid, static_cast<mpfr_ptr>(nullptr));
    mpfr_set_ui(lo, 1, MPFR_RNDN);
    mpfr_set_ui(hi, 2, MPFR_RNDN);
    for (int it = 0; it < prec + 8; ++it) {
        mpfr_add(mid, lo, hi, MPFR_RNDN);
        mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
        if (mpfr_equal_p(mid, lo) || mpfr_equal_p(mid, hi)) break;
        Interval m(prec);
        mpfr_set(m.lo_ref(), mid, MPFR_RNDD);
        mpfr_set(m.hi_ref(), mid, MPFR_RNDU);
        Interval v = f(m);
        if (certainly_less(Interval(0.0), v))
            mpfr_set(lo, mid, MPFR_RNDN);
        else if (certainly_less(v, Interval(0.0)))
            mpfr_set(hi, mid, MPFR_RNDN);
        else
            break;
    }
    mpfr_set(out.value.lo_ref(), lo, MPFR_RNDD);
    mpfr_set(out.value.hi_ref(), hi, MPFR_RNDU);
    mpfr_clears(lo, hi, mid, static_cast<mpfr_ptr>(nullptr));
    if (out.value.width() > std::ldexp(1.0, default_root_radius_log2 + 1))
        throw Error(ErrorCode::UndecidableAtPrecision, "root bracket too wide for " + a.to_string());
    return out;
}

AlphaResult alpha_of_beta(const BetaSpec& beta, std::size_t horizon) {
    AlphaResult r;
    if (beta.alpha) {
        r.sequence = beta.alpha;
        r.prefix = beta.alpha->prefix(horizon);
        r.certified = horizon;
        return r;
    }
    const mpfr_prec_t prec = beta.value.precision();
    const Interval one(1.0, prec);
    const double tol = std::ldexp(1.0, -80);
    std::vector<Interval> orbit{one};
    std::string digits;
    std::size_t certified = 0;
    Interval x(one);
    // A straddle narrower than tol is a near tie: resolved to the closed side and
    // still usable for period detection, but it ends the certified prefix.
    auto step = [&](bool& sure, bool& narrow) {
        Interval y = beta.value * x;
        int d;
        narrow = true;
        if (certainly_leq(y, one)) {
            d = 0, sure = true;
        } else if (certainly_less(one, y)) {
            d = 1, sure = true;
        } else {
            d = y.mid() <= 1.0 + 4 * y.width() ? 0 : 1;
            sure = false;
            narrow = y.width() <= tol;
        }
        if (d) y -= one;
        y.clamp_below(0.0);
        x = y;
        return d;
    };
    bool all_sure = true, all_narrow = true;
    std::size_t usable = 0;  // digits computed along a narrow orbit
    std::size_t check_from = 0;
    for (std::size_t i = 0; i < horizon; ++i) {
        bool sure, narrow;
        int d = step(sure, narrow);
        all_sure = all_sure && sure;
        all_narrow = all_narrow && narrow;
        digits.push_back(static_cast<char>('0' + d));
        if (all_sure) certified = i + 1;
        if (all_narrow) usable = i + 1;
        orbit.push_back(x);
        if (!all_narrow || r.sequence) continue;
        const Interval& xi = orbit.back();
        if (xi.width() > tol) continue;
        for (std::size_t j = 0; j + 1 < orbit.size(); ++j) {
            const Interval& xj = orbit[j];
            if (xj.width() > tol || gap(xi, xj) > tol) continue;
            EpSequence cand(digits.substr(0, j), digits.substr(j, i + 1 - j));
            if (!is_in_Q(cand)) continue;
            r.sequence = cand;
            r.heuristic = !(all_sure && xi.is_point() && xj.is_point() && mpfr_equal_p(xi.lo_ref(), xj.lo_ref()));
            check_from = i + 1;
            break;
        }
    }
    r.prefix = digits;
    r.certified = certified;
    if (r.sequence) {
        // the next 2p certified digits must agree with the candidate
        const std::size_t p = r.sequence->period().size();
        const std::size_t need = check_from + 2 * p;
        bool ok = need <= usable;
        for (std::size_t k = 0; ok && k < need; ++k) ok = digits[k] - '0' == r.sequence->digit(k);
        if (!ok && r.heuristic) r.sequence.reset();
        if (!r.heuristic) {
            r.prefix = r.sequence->prefix(horizon);
            r.certified = horizon;
        }
    }
    return r;
}

std::pair<EpSequence, EpSequence> alpha_bracket(const BetaSpec& beta, std::size_t horizon) {
    AlphaResult a = alpha_of_beta(beta, horizon);
    if (a.sequence && !a.heuristic) return {*a.sequence, *a.sequence};
    const std::string p = a.prefix.substr(0, a.certified);
    return {EpSequence(p, "0"), EpSequence(p, "1")};
}

EpSequence greedy_one_minus_inv_beta(const EpSequence& alpha) {
    if (!is_in_Q(alpha)) throw Error(ErrorCode::NotInQ, alpha.to_string());
    if (alpha.purely_periodic()) {
        // b(1) = a^+ 0^inf, so b(1 - 1/beta) = 0 a_2 ... a_m^+ 0^inf
        std::string a = alpha.period();
        a[0] = '0';
        a.back() = '1';
        return EpSequence(a, "0");
    }
    return concat("0", alpha.shift(1));
}

std::pair<EpSequence, EpSequence> greedy_bracket(const PointSpec& t, const BetaSpec& beta, std::size_t horizon) {
    if (t.expansion) return {*t.expansion, *t.expansion};
    DigitExpansion d = greedy_digits(t.value, beta, horizon);
    if (d.exact) return {*d.exact, *d.exact};
    const std::string p = d.digits.substr(0, d.certified);
    return {EpSequence(p, "0"), EpSequence(p, "1")};
}

}  // namespace bh
