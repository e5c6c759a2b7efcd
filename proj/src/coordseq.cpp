#include "fnh/coordseq.hpp"

#include <cmath>
#include <stdexcept>

namespace fnh {

void CoordSeq::set_override(std::size_t m, CoordPair v) {
    if (m == 0) throw std::domain_error("coordinate index must be >= 1");
    if (!(v.length > 0.0) || !std::isfinite(v.length) || !std::isfinite(v.twist))
        throw std::invalid_argument("override length must be finite and > 0");
    overrides_[m] = v;
}

CoordPair CoordSeq::eval(std::size_t m) const {
    if (m == 0) throw std::domain_error("coordinate index must be >= 1");
    if (auto it = overrides_.find(m); it != overrides_.end()) return it->second;
    CoordPair c{lengths_.eval(m), twists_.eval(m)};
    if (!(c.length > 0.0) || !std::isfinite(c.length))
        throw std::invalid_argument("length rate function must evaluate > 0 at every index");
    return c;
}

double CoordSeq::peripheral_length(std::size_t n) const {
    if (n == 0) throw std::domain_error("peripheral index must be >= 1");
    if (!peripheral_) return 0.0;
    double v;
    if (const auto* expr = std::get_if<RateExpr>(&*peripheral_)) {
        v = expr->eval(n);
    } else {
        const auto& list = std::get<std::vector<double>>(*peripheral_);
        v = n <= list.size() ? list[n - 1] : 0.0;
    }
    if (v < 0.0 || !std::isfinite(v))
        throw std::invalid_argument("peripheral length must be finite and >= 0");
    return v;
}

CoordPair CoordSeq::metric_coordinate(std::size_t i) const {
    if (i == 0) throw std::domain_error("metric coordinate index must be >= 1");
    if (!peripheral_) return eval(i);
    if (i % 2 == 1) return eval((i + 1) / 2);
    return CoordPair{peripheral_length(i / 2), 0.0};
}

std::optional<std::vector<std::size_t>> CoordSeq::finite_difference(const CoordSeq& other) const {
    if (!(lengths_ == other.lengths_) || !(twists_ == other.twists_)) return std::nullopt;
    if (peripheral_.has_value() != other.peripheral_.has_value()) return std::nullopt;
    if (peripheral_) {
        const bool ae = std::holds_alternative<RateExpr>(*peripheral_);
        const bool be = std::holds_alternative<RateExpr>(*other.peripheral_);
        if (ae != be) return std::nullopt;
        if (ae) {
            if (!(std::get<RateExpr>(*peripheral_) == std::get<RateExpr>(*other.peripheral_)))
                return std::nullopt;
        } else if (std::get<std::vector<double>>(*peripheral_) !=
                   std::get<std::vector<double>>(*other.peripheral_)) {
            return std::nullopt;  // finite too, but callers only need core indices
        }
    }
    std::vector<std::size_t> diff;
    auto differs = [&](std::size_t m) {
        bool ha = overrides_.count(m) > 0, hb = other.overrides_.count(m) > 0;
        if (!ha && !hb) return false;
        CoordPair a = eval(m), b = other.eval(m);
        return a.length != b.length || a.twist != b.twist;
    };
    for (const auto& [m, v] : overrides_)
        if (differs(m)) diff.push_back(m);
    for (const auto& [m, v] : other.overrides_)
        if (overrides_.count(m) == 0 && differs(m)) diff.push_back(m);
    return diff;
}

bool operator==(const CoordSeq& a, const CoordSeq& b) {
    auto d = a.finite_difference(b);
    return d.has_value() && d->empty();
}

CoordSeq half_twist_flute(double twist_sign, double amplitude) {
    CoordSeq s(RateExpr::power_log(amplitude, 0.0, 1.0),
               RateExpr::constant(std::copysign(0.5, twist_sign)));
    s.set_peripheral(RateExpr::geometric(1.0, 0.5));
    return s;
}

namespace {

Peripheral lerp_peripheral(const Peripheral& a, const Peripheral& b, double s) {
    const auto* ae = std::get_if<RateExpr>(&a);
    const auto* be = std::get_if<RateExpr>(&b);
    if (ae && be) {
        Peripheral out = ae->scaled(1.0 - s) + be->scaled(s);
        return out;
    }
    if (!ae && !be) {
        const auto& la = std::get<std::vector<double>>(a);
        const auto& lb = std::get<std::vector<double>>(b);
        std::vector<double> out(std::max(la.size(), lb.size()), 0.0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            double va = i < la.size() ? la[i] : 0.0;
            double vb = i < lb.size() ? lb[i] : 0.0;
            out[i] = (1.0 - s) * va + s * vb;
        }
        return out;
    }
    throw std::invalid_argument("cannot interpolate list-valued against rate-function peripheral data");
}

}  // namespace

CoordSeq lerp(const CoordSeq& z, const CoordSeq& w, double s) {
    if (!(s >= 0.0) || !(s <= 1.0))
        throw std::domain_error("interpolation parameter must lie in [0, 1]");
    if (s == 0.0) return z;
    if (s == 1.0) return w;
    if (z.has_peripheral() != w.has_peripheral())
        throw std::invalid_argument("cannot interpolate sequences with mismatched peripheral data");
    CoordSeq out(z.lengths().scaled(1.0 - s) + w.lengths().scaled(s),
                 z.twists().scaled(1.0 - s) + w.twists().scaled(s));
    for (const auto& [m, v] : z.overrides()) {
        CoordPair b = w.eval(m);
        out.set_override(m, CoordPair{(1.0 - s) * v.length + s * b.length,
                                      (1.0 - s) * v.twist + s * b.twist});
    }
    for (const auto& [m, v] : w.overrides()) {
        if (z.overrides().count(m)) continue;
        CoordPair a = z.eval(m);
        out.set_override(m, CoordPair{(1.0 - s) * a.length + s * v.length,
                                      (1.0 - s) * a.twist + s * v.twist});
    }
    if (z.has_peripheral())
        out.set_peripheral(lerp_peripheral(*z.peripheral(), *w.peripheral(), s));
    out.set_shift_compatible(z.shift_compatible() && w.shift_compatible());
    return out;
}

CoordSeq peripheral_scale(const CoordSeq& z, double s) {
    if (!(s >= 1.0))  // NaN rejected too; +inf allowed
        throw std::domain_error("peripheral scale parameter must lie in [1, inf]");
    if (s == 1.0) return z;
    CoordSeq out = z;
    if (!z.has_peripheral()) return out;
    if (std::isinf(s)) {
        if (std::holds_alternative<RateExpr>(*z.peripheral()))
            out.set_peripheral(RateExpr::zero());
        else
            out.set_peripheral(std::vector<double>(
                std::get<std::vector<double>>(*z.peripheral()).size(), 0.0));
        return out;
    }
    if (const auto* expr = std::get_if<RateExpr>(&*z.peripheral())) {
        out.set_peripheral(expr->scaled(1.0 / s));
    } else {
        std::vector<double> list = std::get<std::vector<double>>(*z.peripheral());
        for (double& v : list) v /= s;
        out.set_peripheral(std::move(list));
    }
    return out;
}

}  // namespace fnh
