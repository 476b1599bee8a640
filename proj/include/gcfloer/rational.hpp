#pragma once

#include <boost/rational.hpp>
#include <compare>
#include <cstdint>
#include <string>

namespace gcfloer {

// Thin wrapper over boost::rational. Boost 1.74's equality operators recurse
// forever under C++20 reversed-candidate lookup, so comparisons live here.
class Rational {
public:
    Rational(std::int64_t n = 0) : r_(n) {}  // NOLINT: implicit on purpose
    Rational(std::int64_t n, std::int64_t d) : r_(n, d) {}

    std::int64_t numerator() const { return r_.numerator(); }
    std::int64_t denominator() const { return r_.denominator(); }

    Rational& operator+=(const Rational& o) { r_ += o.r_; return *this; }
    Rational& operator-=(const Rational& o) { r_ -= o.r_; return *this; }
    Rational& operator*=(const Rational& o) { r_ *= o.r_; return *this; }
    Rational& operator/=(const Rational& o) { r_ /= o.r_; return *this; }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.numerator(), a.denominator()); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.numerator() == b.numerator() && a.denominator() == b.denominator();
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a == b) return std::strong_ordering::equal;
        return a.r_ < b.r_ ? std::strong_ordering::less : std::strong_ordering::greater;
    }

private:
    explicit Rational(const boost::rational<std::int64_t>& r) : r_(r) {}
    boost::rational<std::int64_t> r_;
};

inline Rational abs(const Rational& r) { return r < 0 ? -r : r; }

inline double to_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string to_string(const Rational& r);

struct ParsedRational {
    Rational value;
    bool approximated = false;  // input was a decimal that got converted
};

// Accepts "p/q", integers, and decimals. Decimals are converted exactly when
// they terminate within 12 digits, else by continued fractions.
ParsedRational parse_rational(const std::string& s);

// Best rational approximation with bounded denominator.
Rational rational_approx(double x, std::int64_t max_den = 1000000);

}  // namespace gcfloer
