#include "gcfloer/rational.hpp"

#include <cmath>
#include <regex>

#include "gcfloer/errors.hpp"

namespace gcfloer {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_approx(double x, std::int64_t max_den) {
    if (!std::isfinite(x)) throw InvalidInput("cannot approximate a non-finite number");
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double v = x;
    for (int it = 0; it < 64; ++it) {
        double a = std::floor(v);
        if (std::abs(a) > 9e15) break;
        auto ai = static_cast<std::int64_t>(a);
        std::int64_t q2 = ai * q1 + q0;
        if (q2 > max_den) break;
        std::int64_t p2 = ai * p1 + p0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        double frac = v - a;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    if (q1 == 0) throw InvalidInput("rational approximation failed");
    return Rational(p1, q1);
}

ParsedRational parse_rational(const std::string& s) {
    static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex integer(R"(\s*([+-]?\d+)\s*)");
    static const std::regex decimal(R"(\s*([+-]?)(\d*)\.(\d*)\s*)");
    std::smatch m;
    try {
        if (std::regex_match(s, m, frac)) {
            auto den = std::stoll(m[2]);
            if (den == 0) throw InvalidInput("zero denominator in '" + s + "'");
            return {Rational(std::stoll(m[1]), den), false};
        }
        if (std::regex_match(s, m, integer)) return {Rational(std::stoll(m[1])), false};
        if (std::regex_match(s, m, decimal) && (m[2].length() + m[3].length()) > 0) {
            std::string digits = m[3];
            if (digits.size() <= 12) {
                std::int64_t den = 1;
                for (size_t i = 0; i < digits.size(); ++i) den *= 10;
                std::int64_t whole = m[2].length() ? std::stoll(m[2]) : 0;
                std::int64_t part = digits.empty() ? 0 : std::stoll(digits);
                Rational r(whole * den + part, den);
                if (m[1] == "-") r = -r;
                return {r, true};
            }
        }
        double d = std::stod(s);
        return {rational_approx(d), true};
    } catch (const InvalidInput&) {
        throw;
    } catch (const std::invalid_argument&) {
        throw InvalidInput("not a number: '" + s + "'");
    } catch (const std::out_of_range&) {
        throw InvalidInput("number out of range: '" + s + "'");
    }
}

}  // namespace gcfloer
