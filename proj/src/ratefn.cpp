#include "fnh/ratefn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace fnh {

double RateTerm::eval(std::size_t m) const {
    if (m == 0) throw std::domain_error("rate function index must be >= 1");
    double v = coef;
    if (rho != 1.0) v *= std::pow(rho, static_cast<double>(m));
    if (p != 0.0) v *= std::pow(static_cast<double>(m), -p);
    if (q != 0.0) v *= std::pow(std::log(static_cast<double>(m) + 1.0), q);
    if (round_up && v != 0.0) {
        double mag = std::ceil(std::abs(v));
        v = std::copysign(mag, v);
    }
    return v;
}

RateTerm constant_term(double value) { return RateTerm{value, 1.0, 0.0, 0.0, false}; }

RateTerm power_log_term(double amplitude, double p, double q) {
    return RateTerm{amplitude, 1.0, p, q, false};
}

RateTerm geometric_term(double amplitude, double rho) {
    if (!(rho > 0.0)) throw std::invalid_argument("geometric base must be > 0");
    return RateTerm{amplitude, rho, 0.0, 0.0, false};
}

bool GrowthKey::operator<(const GrowthKey& o) const {
    if (lnrho != o.lnrho) return lnrho < o.lnrho;
    if (negp != o.negp) return negp < o.negp;
    return q < o.q;
}

bool GrowthKey::grows() const { return GrowthKey{} < *this; }
bool GrowthKey::decays() const { return *this < GrowthKey{}; }

GrowthKey growth_key(const RateTerm& t) {
    return GrowthKey{std::log(t.rho), -t.p, t.q};
}

RateExpr::RateExpr(RateTerm t) : terms_{t} { normalize(); }
RateExpr::RateExpr(std::vector<RateTerm> terms) : terms_(std::move(terms)) { normalize(); }

RateExpr RateExpr::constant(double v) { return RateExpr(constant_term(v)); }
RateExpr RateExpr::power_log(double a, double p, double q) {
    return RateExpr(power_log_term(a, p, q));
}
RateExpr RateExpr::geometric(double a, double rho) {
    return RateExpr(geometric_term(a, rho));
}

void RateExpr::normalize() {
    for (RateTerm& t : terms_) {
        if (!std::isfinite(t.coef) || !std::isfinite(t.p) || !std::isfinite(t.q) ||
            !(t.rho > 0.0) || !std::isfinite(t.rho))
            throw std::invalid_argument("rate term parameters must be finite, rho > 0");
        t.p += 0.0;  // flush signed zeros
        t.q += 0.0;
    }
    // Merge terms of identical shape; ceil'd terms merge only with ceil'd
    // terms of the same shape (ceil(x)+ceil(y) != ceil(x+y) in general, but
    // identical shapes share the same evaluation path, so exact opposite
    // pairs cancel and equal pairs double -- both are sums of per-term
    // evaluations either way, so merging coefficients is NOT valid for
    // round_up terms; keep them separate unless they cancel exactly).
    std::vector<RateTerm> out;
    for (const RateTerm& t : terms_) {
        if (t.coef == 0.0) continue;
        bool merged = false;
        for (RateTerm& u : out) {
            if (u.rho == t.rho && u.p == t.p && u.q == t.q && u.round_up == t.round_up) {
                if (!t.round_up) {
                    u.coef += t.coef;
                    merged = true;
                } else if (u.coef == -t.coef) {
                    u.coef = 0.0;
                    merged = true;
                }
                if (merged) break;
            }
        }
        if (!merged) out.push_back(t);
    }
    std::erase_if(out, [](const RateTerm& t) { return t.coef == 0.0; });
    std::sort(out.begin(), out.end(), [](const RateTerm& a, const RateTerm& b) {
        GrowthKey ka = growth_key(a), kb = growth_key(b);
        if (!(ka == kb)) return kb < ka;  // fastest growth first
        if (a.round_up != b.round_up) return b.round_up;
        return a.coef > b.coef;
    });
    terms_ = std::move(out);
}

double RateExpr::eval(std::size_t m) const {
    double s = 0.0;
    for (const RateTerm& t : terms_) s += t.eval(m);
    return s;
}

bool RateExpr::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_[0].is_constant() && !terms_[0].round_up;
}

double RateExpr::constant_value() const {
    if (terms_.empty()) return 0.0;
    if (!is_constant()) throw std::logic_error("expression is not constant");
    return terms_[0].coef;
}

bool RateExpr::all_positive() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const RateTerm& t) { return t.coef > 0.0; });
}

bool RateExpr::has_round_up() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const RateTerm& t) { return t.round_up; });
}

bool RateExpr::bounded() const {
    for (const RateTerm& t : terms_)
        if (growth_key(t).grows()) return false;
    return true;
}

bool RateExpr::unbounded() const {
    // Terms are normalized: distinct growth keys except for round_up
    // duplicates, which evaluate separately with the same sign behavior as
    // their smooth value.  The fastest-growing surviving term dominates.
    for (const RateTerm& t : terms_)
        if (growth_key(t).grows()) return true;
    return false;
}

bool RateExpr::decays_to_zero() const {
    for (const RateTerm& t : terms_) {
        if (t.round_up) return false;  // ceil magnitude >= 1 wherever nonzero
        if (!growth_key(t).decays()) return false;
    }
    return true;
}

std::optional<double> RateExpr::positive_infimum() const {
    if (terms_.empty()) return 0.0;
    if (!all_positive()) return std::nullopt;
    if (is_constant()) return terms_[0].coef;
    if (decays_to_zero()) return 0.0;
    // Every term nondecreasing in m: rho >= 1, p <= 0, q >= 0 makes each
    // factor nondecreasing, so the infimum is attained at m = 1.
    bool monotone = std::all_of(terms_.begin(), terms_.end(), [](const RateTerm& t) {
        return t.rho >= 1.0 && t.p <= 0.0 && t.q >= 0.0;
    });
    if (monotone) return eval(1);
    return std::nullopt;
}

std::optional<bool> RateExpr::series_converges() const {
    if (terms_.empty()) return true;
    if (!all_positive()) return std::nullopt;
    // Positive terms: the sum converges iff every term's series does.
    for (const RateTerm& t : terms_) {
        if (t.round_up) return false;  // terms >= 1 on all indices
        bool conv;
        if (t.rho != 1.0) {
            conv = t.rho < 1.0;
        } else {
            conv = t.p > 1.0 || (t.p == 1.0 && t.q < -1.0);
        }
        if (!conv) return false;
    }
    return true;
}

RateExpr RateExpr::scaled(double factor) const {
    std::vector<RateTerm> out = terms_;
    for (RateTerm& t : out) t.coef *= factor;
    return RateExpr(std::move(out));
}

RateExpr operator+(const RateExpr& a, const RateExpr& b) {
    std::vector<RateTerm> out = a.terms_;
    out.insert(out.end(), b.terms_.begin(), b.terms_.end());
    return RateExpr(std::move(out));
}

RateExpr operator*(const RateExpr& a, const RateExpr& b) {
    std::vector<RateTerm> out;
    for (const RateTerm& ta : a.terms_)
        for (const RateTerm& tb : b.terms_) {
            if (ta.round_up || tb.round_up)
                throw std::invalid_argument("product of rounded rate terms is not in the algebra");
            out.push_back(RateTerm{ta.coef * tb.coef, ta.rho * tb.rho, ta.p + tb.p,
                                   ta.q + tb.q, false});
        }
    return RateExpr(std::move(out));
}

bool operator==(const RateExpr& a, const RateExpr& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const RateTerm &x = a.terms_[i], &y = b.terms_[i];
        if (x.coef != y.coef || x.rho != y.rho || x.p != y.p || x.q != y.q ||
            x.round_up != y.round_up)
            return false;
    }
    return true;
}

std::string RateExpr::describe() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    os.precision(17);
    bool first = true;
    for (const RateTerm& t : terms_) {
        if (!first) os << " + ";
        first = false;
        if (t.round_up) os << "ceil[";
        os << t.coef;
        if (t.rho != 1.0) os << " * " << t.rho << "^m";
        if (t.p != 0.0) os << " * m^" << -t.p;
        if (t.q != 0.0) os << " * log(m+1)^" << t.q;
        if (t.round_up) os << "]";
    }
    return os.str();
}

std::optional<RateTerm> leading_term(const RateExpr& e) {
    if (e.terms().empty()) return std::nullopt;
    return e.terms().front();
}

}  // namespace fnh
