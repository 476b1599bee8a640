#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcfloer/numerics.hpp"
#include "gcfloer/rational.hpp"

namespace gcfloer {

inline constexpr double kPruneThreshold = 1e-14;
inline constexpr double kPivotThreshold = 1e-10;
inline const Rational kDefaultCutoff{10};

// Truncated sum  sum_i c_i T^{e_i}  with exact exponents; terms with
// exponent >= cutoff are dropped.
class NovikovSeries {
public:
    struct Term {
        Rational exponent;
        cplx coeff;
    };

    explicit NovikovSeries(Rational cutoff = kDefaultCutoff);
    static NovikovSeries monomial(cplx c, Rational e, Rational cutoff = kDefaultCutoff);
    static NovikovSeries one(Rational cutoff = kDefaultCutoff) { return monomial(1.0, 0, cutoff); }

    const std::vector<Term>& terms() const { return terms_; }
    const Rational& cutoff() const { return cutoff_; }

    void add_term(Rational e, cplx c);
    NovikovSeries with_cutoff(Rational c) const;

    bool is_zero() const { return terms_.empty(); }
    std::optional<Rational> valuation() const;  // nullopt means +infinity
    cplx leading_coefficient() const;
    // true when some exponent is negative, i.e. the element lives in Lambda but not Lambda_0
    bool leaves_lambda0() const;

    // drop terms whose coefficient modulus is below threshold; returns how many
    int drop_below(double threshold);

    cplx evaluate(double T0) const;

private:
    Rational cutoff_;
    std::vector<Term> terms_;  // strictly increasing exponents
};

NovikovSeries operator+(const NovikovSeries& a, const NovikovSeries& b);
NovikovSeries operator-(const NovikovSeries& a, const NovikovSeries& b);
NovikovSeries operator-(const NovikovSeries& a);
NovikovSeries operator*(const NovikovSeries& a, const NovikovSeries& b);
NovikovSeries operator*(cplx s, const NovikovSeries& a);
NovikovSeries scalar_mul(cplx s, const NovikovSeries& a);
std::optional<Rational> valuation(const NovikovSeries& a);
NovikovSeries invert(const NovikovSeries& a);

class NovikovMatrix {
public:
    NovikovMatrix(int rows, int cols, Rational cutoff = kDefaultCutoff);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Rational& cutoff() const { return cutoff_; }

    NovikovSeries& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const NovikovSeries& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero(double threshold = kPruneThreshold) const;

private:
    int rows_, cols_;
    Rational cutoff_;
    std::vector<NovikovSeries> a_;
};

NovikovMatrix operator*(const NovikovMatrix& a, const NovikovMatrix& b);

// Lambda_0^free_rank  (+)  sum_i Lambda_0 / T^{torsion_i} Lambda_0
struct NovikovModuleDecomp {
    int free_rank = 0;
    std::vector<Rational> torsion;  // ascending
    std::vector<std::string> warnings;
};

// Rank and pivot valuations of a matrix over Lambda_0 by valuation-pivot
// elimination. Valuations come out ascending.
struct SmithData {
    int rank = 0;
    std::vector<Rational> pivots;
    std::vector<std::string> warnings;
};
SmithData smith_valuations(const NovikovMatrix& m);

// Ker d / Im d over Lambda_0 for a square-zero d.
NovikovModuleDecomp module_presentation(const NovikovMatrix& d);
// Same over the Novikov field: only the free part survives.
NovikovModuleDecomp module_presentation_field(const NovikovMatrix& d);
// Coker of a presentation matrix Lambda_0^cols -> Lambda_0^rows.
NovikovModuleDecomp cokernel_decomposition(const NovikovMatrix& m);

}  // namespace gcfloer
