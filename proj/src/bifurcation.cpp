#include "betaholes/bifurcation.hpp"

#include <algorithm>
#include <stdexcept>

#include "betaholes/error.hpp"

namespace bh {

using boost::multiprecision::cpp_int;

const char* kind_name(IntervalKind k) { return k == IntervalKind::farey ? "farey" : "basic"; }

const char* isolation_name(Isolation i) {
    switch (i) {
        case Isolation::isolated: return "isolated";
        case Isolation::not_isolated: return "not_isolated";
        case Isolation::not_in_E_plus: return "not_in_E_plus";
    }
    return "?";
}

const char* nesting_name(Nesting n) {
    switch (n) {
        case Nesting::disjoint: return "disjoint";
        case Nesting::first_inside_second: return "first_inside_second";
        case Nesting::second_inside_first: return "second_inside_first";
        case Nesting::equal: return "equal";
    }
    return "?";
}

bool in_E_plus(const EpSequence& t, const EpSequence& alpha) {
    for (std::size_t n = 0; n < t.orbit_window(); ++n) {
        EpSequence s = t.shift(n);
        if (lex_compare_ep(s, t) == Order::less || !ep_less(s, alpha)) return false;
    }
    return true;
}

bool in_E_zero(const EpSequence& t, const EpSequence& alpha) {
    if (!t.ends_in_zero()) return false;
    for (std::size_t k = 0; k < t.preperiod().size(); ++k) {
        EpSequence s = t.shift(k);
        if (lex_compare_ep(s, t) == Order::less || !ep_less(s, alpha)) return false;
    }
    return true;
}

IntervalRecord basic_interval(const Word& a) {
    if (!is_aperiodic(a) || max_rotation(a) != a)
        throw Error(ErrorCode::NotMaximalRotation, a.str() + " is not a primitive maximal rotation");
    const EpSequence alpha_l = EpSequence::periodic(a);
    if (!is_in_Q(alpha_l)) throw Error(ErrorCode::NotInQ, alpha_l.to_string());
    if (a.back() != 0) throw Error(ErrorCode::NotInQ, "a^+ is undefined for " + a.str());
    const Rotation s = lyndon_rotation(a);
    const EpSequence alpha_r(plus(a).str(), s.word.str());
    if (!is_in_Q(alpha_r)) throw Error(ErrorCode::NotInQ, alpha_r.to_string());
    const IntervalKind kind = is_nondegenerate_farey(reflect(a)) ? IntervalKind::farey : IntervalKind::basic;
    return IntervalRecord{a, s.word, s.shift, beta_from_alpha(alpha_l), beta_from_alpha(alpha_r), kind};
}

IntervalRecord farey_interval(const Word& a) {
    if (!is_nondegenerate_farey(reflect(a)))
        throw Error(ErrorCode::NotFareyReflection, "reflection of " + a.str() + " is not a Farey word");
    IntervalRecord r = basic_interval(a);
    r.kind = IntervalKind::farey;
    return r;
}

namespace {

Order compare_beta(const Interval& a, const Interval& b) {
    if (certainly_less(a, b)) return Order::less;
    if (certainly_less(b, a)) return Order::greater;
    if (a.is_point() && b.is_point() && a.lo() == b.lo() && mpfr_equal_p(a.lo_ref(), b.lo_ref())) return Order::equal;
    throw Error(ErrorCode::UndecidableAtPrecision, "beta brackets overlap: " + a.to_string(20) + " vs " + b.to_string(20));
}

}  // namespace

int locate(const BetaSpec& beta, const IntervalRecord& rec) {
    if (beta.alpha) {
        if (ep_leq(*beta.alpha, rec.alpha_L())) return -1;
        if (ep_leq(*beta.alpha, rec.alpha_R())) return 0;
        return 1;
    }
    if (compare_beta(beta.value, rec.beta_L.value) != Order::greater) return -1;
    if (compare_beta(beta.value, rec.beta_R.value) != Order::greater) return 0;
    return 1;
}

Isolation classify_isolated(const Word& t_period, const BetaSpec& beta) {
    if (!is_lyndon(t_period)) throw Error(ErrorCode::NotLyndon, t_period.str());
    if (t_period.str() == "1") return Isolation::not_in_E_plus;  // 1^inf is never admissible
    if (t_period.str() == "0") return Isolation::not_isolated;   // (0^n 1)^inf accumulates at 0
    const IntervalRecord rec = basic_interval(max_rotation(t_period));
    switch (locate(beta, rec)) {
        case -1: return Isolation::not_in_E_plus;
        case 0: return Isolation::isolated;
        default: return Isolation::not_isolated;
    }
}

Nesting nesting_relation(const IntervalRecord& i1, const IntervalRecord& i2) {
    auto cmp = [](const EpSequence& x, const EpSequence& y) { return lex_compare_ep(x, y); };
    const Order ll = cmp(i1.alpha_L(), i2.alpha_L());
    const Order rr = cmp(i1.alpha_R(), i2.alpha_R());
    if (ll == Order::equal && rr == Order::equal) return Nesting::equal;
    if (cmp(i1.alpha_R(), i2.alpha_L()) != Order::greater || cmp(i2.alpha_R(), i1.alpha_L()) != Order::greater)
        return Nesting::disjoint;
    if (ll != Order::less && rr != Order::greater) return Nesting::first_inside_second;
    if (ll != Order::greater && rr != Order::less) return Nesting::second_inside_first;
    throw std::logic_error("intervals " + i1.generator.str() + " and " + i2.generator.str() + " overlap without nesting");
}

namespace {

cpp_int word_value(const std::string& s) {
    cpp_int v = 0;
    for (char c : s) v = 2 * v + (c - '0');
    return v;
}

cpp_int pow2(std::size_t k) { return cpp_int(1) << k; }

}  // namespace

Rational binary_value(const EpSequence& x) {
    const std::size_t k = x.preperiod().size(), p = x.period().size();
    Rational head(word_value(x.preperiod()), pow2(k));
    Rational tail(word_value(x.period()), (pow2(p) - 1) * pow2(k));
    return head + tail;
}

DoublingInterval doubling_interval(const Word& w) {
    if (!is_nondegenerate_farey(w)) throw Error(ErrorCode::NotFarey, w.str() + " is not a non-degenerate Farey word");
    const Rational q_r = binary_value(EpSequence::periodic(w));
    const Rational q_l = binary_value(EpSequence::periodic(w.reversed())) - Rational(1, 2);
    return DoublingInterval{w, q_l, q_r};
}

namespace {

Interval rational_interval(const Rational& r) {
    const std::string n = numerator(r).str(), d = denominator(r).str();
    Interval num(default_precision), den(default_precision);
    mpfr_set_str(num.lo_ref(), n.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(num.hi_ref(), n.c_str(), 10, MPFR_RNDU);
    mpfr_set_str(den.lo_ref(), d.c_str(), 10, MPFR_RNDD);
    mpfr_set_str(den.hi_ref(), d.c_str(), 10, MPFR_RNDU);
    return num / den;
}

}  // namespace

Interval phi(const BetaSpec& beta) {
    if (beta.alpha) return rational_interval(binary_value(*beta.alpha));
    auto [lo, hi] = alpha_bracket(beta);
    return Interval::hull(rational_interval(binary_value(lo)), rational_interval(binary_value(hi)));
}

std::vector<IntervalRecord> atlas(std::size_t max_len, bool farey_only) {
    std::vector<IntervalRecord> out;
    for (std::size_t len = 2; len <= max_len; ++len) {
        for (const Word& a : maximal_rotation_words(len)) {
            if (farey_only && !is_nondegenerate_farey(reflect(a))) continue;
            out.push_back(basic_interval(a));
        }
    }
    return out;
}

ZeroRunReport zero_run_diagnostic(const BetaSpec& beta, std::size_t horizon) {
    ZeroRunReport r;
    auto longest = [](const std::string& s) {
        std::size_t best = 0, cur = 0;
        for (char c : s) {
            cur = c == '0' ? cur + 1 : 0;
            best = std::max(best, cur);
        }
        return best;
    };
    if (beta.alpha) {
        const EpSequence& a = *beta.alpha;
        r.max_run = longest(a.prefix(a.preperiod().size() + 2 * a.period().size()));
        r.horizon = horizon;
        r.bounded = !a.ends_in_zero();
        r.certified = true;
        return r;
    }
    AlphaResult a = alpha_of_beta(beta, horizon);
    const std::string p = a.prefix.substr(0, a.certified);
    r.horizon = p.size();
    r.max_run = longest(p);
    r.bounded = p.size() >= 2 && longest(p.substr(0, p.size() / 2)) == r.max_run;
    return r;
}

OrbitAvoidance e_zero_isolation_check(const BetaSpec& beta, const PointSpec& t, std::size_t horizon) {
    OrbitAvoidance r;
    const Interval one(1.0, beta.value.precision());
    Interval x = beta.value - one;
    const Interval zero(0.0);
    for (std::size_t n = 0; n < horizon; ++n) {
        if (certainly_less(zero, x) && certainly_less(x, t.value)) {
            r.enters_hole = true;
            r.first_entry = n;
            r.horizon = n;
            return r;
        }
        Interval y = beta.value * x;
        if (certainly_leq(one, y))
            y -= one;
        else if (!certainly_less(y, one))
            break;  // the orbit straddles 1/beta; no further certified steps
        x = y;
        r.horizon = n + 1;
    }
    return r;
}

std::string rational_decimal(const Rational& r, int digits) {
    cpp_int scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    Rational scaled = r * scale;
    const bool neg = scaled < 0;
    if (neg) scaled = -scaled;
    cpp_int q = numerator(scaled) / denominator(scaled);
    cpp_int rem = numerator(scaled) % denominator(scaled);
    if (2 * rem >= denominator(scaled)) ++q;
    std::string s = q.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    if (neg && q != 0) s.insert(0, "-");
    return s;
}

}  // namespace bh
