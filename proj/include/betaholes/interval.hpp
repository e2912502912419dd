#pragma once

// Closed intervals [lo, hi] over MPFR with outward (directed) rounding.

#include <mpfr.h>

#include <string>

namespace bh {

inline constexpr mpfr_prec_t default_precision = 128;

class Interval {
public:
    explicit Interval(mpfr_prec_t prec = default_precision);
    Interval(double v, mpfr_prec_t prec = default_precision);
    Interval(double lo, double hi, mpfr_prec_t prec = default_precision);
    Interval(const Interval& o);
    Interval(Interval&& o) noexcept;
    Interval& operator=(const Interval& o);
    Interval& operator=(Interval&& o) noexcept;
    ~Interval();

    // Smallest representable interval containing the decimal literal.
    static Interval from_decimal(const std::string& s, mpfr_prec_t prec = default_precision);
    static Interval from_ratio(long num, long den, mpfr_prec_t prec = default_precision);
    static Interval hull(const Interval& a, const Interval& b);

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }
    double mid() const;
    double width() const;
    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
    bool contains(double v) const;
    bool contains(const Interval& o) const;

    const mpfr_t& lo_ref() const { return lo_; }
    const mpfr_t& hi_ref() const { return hi_; }
    mpfr_t& lo_ref() { return lo_; }
    mpfr_t& hi_ref() { return hi_; }

    Interval& operator+=(const Interval& o);
    Interval& operator-=(const Interval& o);
    Interval& operator*=(const Interval& o);
    Interval& operator/=(const Interval& o);

    friend Interval operator+(Interval a, const Interval& b) { return a += b; }
    friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
    friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
    friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
    Interval operator-() const;

    Interval pow(unsigned n) const;
    Interval log2() const;  // requires lo > 0

    // Clamp the lower end up to v (used when a quantity is known to be >= v).
    void clamp_below(double v);

    // Certain comparisons: true only if they hold for every pair of members.
    friend bool certainly_less(const Interval& a, const Interval& b);
    friend bool certainly_leq(const Interval& a, const Interval& b);
    friend bool overlaps(const Interval& a, const Interval& b);
    // Distance between the sets (0 when they intersect), rounded up.
    friend double gap(const Interval& a, const Interval& b);

    std::string to_string(int digits) const;      // "[lo, hi]"
    std::string mid_string(int digits) const;     // fixed notation midpoint

private:
    mpfr_t lo_;
    mpfr_t hi_;
};

bool certainly_less(const Interval& a, const Interval& b);
bool certainly_leq(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);
double gap(const Interval& a, const Interval& b);

// Fixed-notation decimal of a double, as used for all printed reals.
std::string fixed(double v, int digits);

}  // namespace bh
