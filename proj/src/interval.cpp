#include "betaholes/interval.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "betaholes/error.hpp"

namespace bh {

const char* error_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::LastDigitMismatch: return "LastDigitMismatch";
        case ErrorCode::PeriodicWord: return "PeriodicWord";
        case ErrorCode::LevelTooLarge: return "LevelTooLarge";
        case ErrorCode::NotFarey: return "NotFarey";
        case ErrorCode::DegenerateFarey: return "DegenerateFarey";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotInQ: return "NotInQ";
        case ErrorCode::StateCapExceeded: return "StateCapExceeded";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::NotMaximalRotation: return "NotMaximalRotation";
        case ErrorCode::NotFareyReflection: return "NotFareyReflection";
        case ErrorCode::NotLyndon: return "NotLyndon";
        case ErrorCode::UndecidableAtPrecision: return "UndecidableAtPrecision";
        case ErrorCode::AtlasInconclusive: return "AtlasInconclusive";
        case ErrorCode::FinitenessCertificateFailed: return "FinitenessCertificateFailed";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Error";
}

Interval::Interval(mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

Interval::Interval(double v, mpfr_prec_t prec) {
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_d(lo_, v, MPFR_RNDD);
    mpfr_set_d(hi_, v, MPFR_RNDU);
}

Interval::Interval(double lo, double hi, mpfr_prec_t prec) {
    if (lo > hi) throw std::invalid_argument("Interval: lo > hi");
    mpfr_init2(lo_, prec);
    mpfr_init2(hi_, prec);
    mpfr_set_d(lo_, lo, MPFR_RNDD);
    mpfr_set_d(hi_, hi, MPFR_RNDU);
}

Interval::Interval(const Interval& o) {
    mpfr_init2(lo_, o.precision());
    mpfr_init2(hi_, o.precision());
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& o) noexcept {
    mpfr_init2(lo_, o.precision());
    mpfr_init2(hi_, o.precision());
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

Interval& Interval::operator=(const Interval& o) {
    if (this != &o) {
        mpfr_set_prec(lo_, o.precision());
        mpfr_set_prec(hi_, o.precision());
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    return *this;
}

Interval& Interval::operator=(Interval&& o) noexcept {
    if (this != &o) {
        mpfr_swap(lo_, o.lo_);
        mpfr_swap(hi_, o.hi_);
    }
    return *this;
}

Interval::~Interval() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

Interval Interval::from_decimal(const std::string& s, mpfr_prec_t prec) {
    Interval r(prec);
    if (mpfr_set_str(r.lo_, s.c_str(), 10, MPFR_RNDD) != 0 ||
        mpfr_set_str(r.hi_, s.c_str(), 10, MPFR_RNDU) != 0) {
        // mpfr_set_str returns nonzero only on malformed input
        throw Error(ErrorCode::ParseError, "not a decimal number: " + s);
    }
    return r;
}

Interval Interval::from_ratio(long num, long den, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_si(r.lo_, num, MPFR_RNDD);
    mpfr_set_si(r.hi_, num, MPFR_RNDU);
    mpfr_div_si(r.lo_, r.lo_, den, MPFR_RNDD);
    mpfr_div_si(r.hi_, r.hi_, den, MPFR_RNDU);
    if (den < 0) mpfr_swap(r.lo_, r.hi_);
    return r;
}

Interval Interval::hull(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

double Interval::mid() const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    double d = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return d;
}

double Interval::width() const {
    mpfr_t w;
    mpfr_init2(w, precision());
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    double d = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return d;
}

bool Interval::contains(double v) const {
    return mpfr_cmp_d(lo_, v) <= 0 && mpfr_cmp_d(hi_, v) >= 0;
}

bool Interval::contains(const Interval& o) const {
    return mpfr_lessequal_p(lo_, o.lo_) && mpfr_lessequal_p(o.hi_, hi_);
}

Interval& Interval::operator+=(const Interval& o) {
    mpfr_add(lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(hi_, hi_, o.hi_, MPFR_RNDU);
    return *this;
}

Interval& Interval::operator-=(const Interval& o) {
    mpfr_t t;
    mpfr_init2(t, precision());
    mpfr_sub(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(hi_, hi_, o.lo_, MPFR_RNDU);
    mpfr_swap(lo_, t);
    mpfr_clear(t);
    return *this;
}

Interval& Interval::operator*=(const Interval& o) {
    mpfr_prec_t p = precision();
    mpfr_t c[4], d[4];
    const mpfr_t* a[2] = {&lo_, &hi_};
    const mpfr_t* b[2] = {&o.lo_, &o.hi_};
    for (int i = 0; i < 4; ++i) {
        mpfr_init2(c[i], p);
        mpfr_init2(d[i], p);
        mpfr_mul(c[i], *a[i / 2], *b[i % 2], MPFR_RNDD);
        mpfr_mul(d[i], *a[i / 2], *b[i % 2], MPFR_RNDU);
    }
    mpfr_set(lo_, c[0], MPFR_RNDD);
    mpfr_set(hi_, d[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i) {
        mpfr_min(lo_, lo_, c[i], MPFR_RNDD);
        mpfr_max(hi_, hi_, d[i], MPFR_RNDU);
    }
    for (int i = 0; i < 4; ++i) {
        mpfr_clear(c[i]);
        mpfr_clear(d[i]);
    }
    return *this;
}

Interval& Interval::operator/=(const Interval& o) {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw std::domain_error("Interval: division by an interval containing 0");
    Interval inv(o.precision());
    mpfr_ui_div(inv.lo_, 1, o.hi_, MPFR_RNDD);
    mpfr_ui_div(inv.hi_, 1, o.lo_, MPFR_RNDU);
    return *this *= inv;
}

Interval Interval::operator-() const {
    Interval r(precision());
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

Interval Interval::pow(unsigned n) const {
    Interval r(1.0, precision());
    Interval b(*this);
    while (n) {
        if (n & 1u) r *= b;
        n >>= 1;
        if (n) b *= b;
    }
    return r;
}

Interval Interval::log2() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("Interval::log2 of a nonpositive interval");
    Interval r(precision());
    mpfr_log2(r.lo_, lo_, MPFR_RNDD);
    mpfr_log2(r.hi_, hi_, MPFR_RNDU);
    return r;
}

void Interval::clamp_below(double v) {
    if (mpfr_cmp_d(lo_, v) < 0) mpfr_set_d(lo_, v, MPFR_RNDD);
    if (mpfr_cmp_d(hi_, v) < 0) mpfr_set_d(hi_, v, MPFR_RNDU);
}

bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
bool certainly_leq(const Interval& a, const Interval& b) { return mpfr_lessequal_p(a.hi_, b.lo_) != 0; }
bool overlaps(const Interval& a, const Interval& b) {
    return mpfr_lessequal_p(a.lo_, b.hi_) && mpfr_lessequal_p(b.lo_, a.hi_);
}

double gap(const Interval& a, const Interval& b) {
    if (overlaps(a, b)) return 0.0;
    mpfr_t t;
    mpfr_init2(t, std::max(a.precision(), b.precision()));
    if (mpfr_less_p(a.hi_, b.lo_))
        mpfr_sub(t, b.lo_, a.hi_, MPFR_RNDD);
    else
        mpfr_sub(t, a.lo_, b.hi_, MPFR_RNDD);
    double d = mpfr_get_d(t, MPFR_RNDD);
    mpfr_clear(t);
    return d;
}

std::string Interval::to_string(int digits) const {
    return "[" + fixed(lo(), digits) + ", " + fixed(hi(), digits) + "]";
}

std::string Interval::mid_string(int digits) const {
    mpfr_t m;
    mpfr_init2(m, precision() + 1);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(m, m, 1, MPFR_RNDN);
    std::vector<char> buf(static_cast<size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rf", digits, m);
    mpfr_clear(m);
    return buf.data();
}

std::string fixed(double v, int digits) {
    if (v == 0.0) v = 0.0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    std::string s = buf;
    if (s[0] == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

}  // namespace bh
