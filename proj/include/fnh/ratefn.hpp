// Symbolic rate functions A * rho^m * m^(-p) * log(m+1)^q and finite sums
// of them.  All asymptotic decisions (boundedness, decay, series
// convergence) are exact on this algebra.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fnh {

// One term  coef * rho^m * m^(-p) * log(m+1)^q,  m >= 1.
//
// rho == 1 gives the power-log family; p == q == 0 and rho == 1 gives a
// constant.  round_up marks integer twist counts: the term evaluates as
// sign(v) * ceil(|v|), while asymptotic comparisons use the smooth value
// (the ceil error is bounded by 1 and never changes a verdict on this
// algebra).
struct RateTerm {
    double coef = 0.0;
    double rho = 1.0;
    double p = 0.0;
    double q = 0.0;
    bool round_up = false;

    double eval(std::size_t m) const;
    bool is_constant() const { return rho == 1.0 && p == 0.0 && q == 0.0; }
};

RateTerm constant_term(double value);
RateTerm power_log_term(double amplitude, double p, double q);
RateTerm geometric_term(double amplitude, double rho);

// Growth key (ln rho, -p, q): lexicographically larger key = faster growth.
// Key (0,0,0) is a constant.
struct GrowthKey {
    double lnrho = 0.0;
    double negp = 0.0;
    double q = 0.0;

    friend bool operator==(const GrowthKey&, const GrowthKey&) = default;
    bool operator<(const GrowthKey& o) const;
    bool grows() const;   // strictly > constant
    bool decays() const;  // strictly < constant
};

GrowthKey growth_key(const RateTerm& t);

// Finite sum of RateTerms.  Empty vector is the zero function.
class RateExpr {
public:
    RateExpr() = default;
    explicit RateExpr(RateTerm t);
    explicit RateExpr(std::vector<RateTerm> terms);

    static RateExpr zero() { return RateExpr{}; }
    static RateExpr constant(double v);
    static RateExpr power_log(double amplitude, double p, double q);
    static RateExpr geometric(double amplitude, double rho);

    double eval(std::size_t m) const;

    const std::vector<RateTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Value when is_constant(); 0 for the zero expression.
    double constant_value() const;

    // All coefficients > 0 (after normalization).  Length-type data.
    bool all_positive() const;
    bool has_round_up() const;

    // sup_m |f(m)| < infinity, decided symbolically.
    bool bounded() const;
    // |f(m)| -> infinity (equivalently limsup = infinity on this algebra).
    bool unbounded() const;
    // f(m) -> 0.  A round_up term never decays (ceil of a positive value
    // is at least 1 wherever the term is nonzero).
    bool decays_to_zero() const;

    // Exact infimum over m >= 1 for positive monotone cases; nullopt when
    // the shape is not one we decide symbolically.
    std::optional<double> positive_infimum() const;

    // sum_{m>=1} f(m) < infinity for expressions with all_positive().
    // nullopt when some term has a negative coefficient.
    std::optional<bool> series_converges() const;

    RateExpr scaled(double factor) const;
    friend RateExpr operator+(const RateExpr& a, const RateExpr& b);
    // Pointwise product of the smooth parts; requires neither side round_up.
    friend RateExpr operator*(const RateExpr& a, const RateExpr& b);

    // Structural equality after normalization (used for the symbolic
    // finite-difference checks on coordinate sequences).
    friend bool operator==(const RateExpr& a, const RateExpr& b);

    std::string describe() const;

private:
    void normalize();
    std::vector<RateTerm> terms_;
};

// Leading (fastest-growing) term of the normalized expression, if any.
std::optional<RateTerm> leading_term(const RateExpr& e);

}  // namespace fnh
