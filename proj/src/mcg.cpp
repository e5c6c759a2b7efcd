#include "fnh/mcg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "fnh/flutes.hpp"
#include "fnh/hyptrig.hpp"

namespace fnh {

namespace {

// Symbolic counts round per-term to integers in magnitude.
RateExpr rounded(const RateExpr& e) {
    std::vector<RateTerm> terms = e.terms();
    for (RateTerm& t : terms) t.round_up = true;
    return RateExpr(std::move(terms));
}

bool single_signed(const RateExpr& e, double* sign = nullptr) {
    if (e.is_zero()) return true;
    double s = e.terms().front().coef > 0.0 ? 1.0 : -1.0;
    for (const RateTerm& t : e.terms())
        if ((t.coef > 0.0 ? 1.0 : -1.0) != s) return false;
    if (sign) *sign = s;
    return true;
}

RateExpr magnitude(const RateExpr& e) {
    std::vector<RateTerm> terms = e.terms();
    for (RateTerm& t : terms) t.coef = std::abs(t.coef);
    return RateExpr(std::move(terms));
}

}  // namespace

bool MultiTwist::finite_support() const {
    if (const auto* map = std::get_if<std::map<std::size_t, long>>(&counts)) {
        (void)map;
        return true;
    }
    return std::get<RateExpr>(counts).is_zero();
}

double MultiTwist::count_value(std::size_t m) const {
    if (m == 0) throw std::domain_error("curve index must be >= 1");
    if (const auto* map = std::get_if<std::map<std::size_t, long>>(&counts)) {
        auto it = map->find(m);
        return it == map->end() ? 0.0 : static_cast<double>(it->second);
    }
    return rounded(std::get<RateExpr>(counts)).eval(m);
}

long MultiTwist::count_at(std::size_t m) const {
    double v = count_value(m);
    if (!(std::abs(v) < 9.0e18))
        throw std::overflow_error("twist count does not fit an integer at this index");
    return static_cast<long>(std::llround(v));
}

void FinitePerm::validate() const {
    std::map<std::size_t, std::size_t> seen;
    for (const auto& [from, to] : images) {
        if (from == 0 || to == 0) throw std::invalid_argument("permutation indices must be >= 1");
        if (images.count(to) == 0)
            throw std::invalid_argument("permutation domain must be closed under images");
        if (!seen.emplace(to, from).second)
            throw std::invalid_argument("permutation images must be distinct");
    }
}

std::size_t FinitePerm::apply(std::size_t m) const {
    auto it = images.find(m);
    return it == images.end() ? m : it->second;
}

std::size_t FinitePerm::inverse(std::size_t m) const {
    for (const auto& [from, to] : images)
        if (to == m) return from;
    return m;
}

namespace {

Generator invert(const Generator& g) {
    if (const auto* mt = std::get_if<MultiTwist>(&g)) {
        if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt->counts)) {
            std::map<std::size_t, long> neg;
            for (const auto& [m, n] : *map) neg[m] = -n;
            return MultiTwist{std::move(neg)};
        }
        return MultiTwist{std::get<RateExpr>(mt->counts).scaled(-1.0)};
    }
    if (const auto* sh = std::get_if<Shift>(&g)) return Shift{-sh->offset};
    const auto& perm = std::get<FinitePerm>(g);
    FinitePerm inv;
    for (const auto& [from, to] : perm.images) inv.images[to] = from;
    return inv;
}

bool generators_equal(const Generator& a, const Generator& b) {
    if (a.index() != b.index()) return false;
    if (const auto* mt = std::get_if<MultiTwist>(&a)) {
        const auto& other = std::get<MultiTwist>(b);
        if (mt->counts.index() != other.counts.index()) return false;
        if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt->counts))
            return *map == std::get<std::map<std::size_t, long>>(other.counts);
        return std::get<RateExpr>(mt->counts) == std::get<RateExpr>(other.counts);
    }
    if (const auto* sh = std::get_if<Shift>(&a)) return sh->offset == std::get<Shift>(b).offset;
    return std::get<FinitePerm>(a).images == std::get<FinitePerm>(b).images;
}

bool is_identity(const Generator& g) {
    if (const auto* mt = std::get_if<MultiTwist>(&g)) {
        if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt->counts))
            return std::all_of(map->begin(), map->end(),
                               [](const auto& kv) { return kv.second == 0; });
        return std::get<RateExpr>(mt->counts).is_zero();
    }
    if (const auto* sh = std::get_if<Shift>(&g)) return sh->offset == 0;
    const auto& perm = std::get<FinitePerm>(g);
    return std::all_of(perm.images.begin(), perm.images.end(),
                       [](const auto& kv) { return kv.first == kv.second; });
}

// Adjacent inverse pairs cancel; identities drop.
std::vector<Generator> cancel(const std::vector<Generator>& gens) {
    std::vector<Generator> stack;
    for (const Generator& g : gens) {
        if (is_identity(g)) continue;
        if (!stack.empty() && generators_equal(stack.back(), invert(g)))
            stack.pop_back();
        else
            stack.push_back(g);
    }
    return stack;
}

bool generator_finite_support(const Generator& g) {
    if (const auto* mt = std::get_if<MultiTwist>(&g)) return mt->finite_support();
    if (const auto* sh = std::get_if<Shift>(&g)) return sh->offset == 0;
    return true;  // finite permutation
}

}  // namespace

MappingClass MappingClass::inverse() const {
    MappingClass out;
    out.generators.reserve(generators.size());
    for (auto it = generators.rbegin(); it != generators.rend(); ++it)
        out.generators.push_back(invert(*it));
    return out;
}

MappingClass operator*(const MappingClass& a, const MappingClass& b) {
    MappingClass out = a;
    out.generators.insert(out.generators.end(), b.generators.begin(), b.generators.end());
    return out;
}

namespace {

CoordSeq apply_generator(const Generator& g, const CoordSeq& z) {
    if (const auto* mt = std::get_if<MultiTwist>(&g)) {
        CoordSeq out = z;
        if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt->counts)) {
            for (const auto& [m, n] : *map) {
                CoordPair c = z.eval(m);
                c.twist += static_cast<double>(n);
                out.set_override(m, c);
            }
            return out;
        }
        out.twists() = z.twists() + rounded(std::get<RateExpr>(mt->counts));
        // Overrides keep: their twists move by the same counts.
        for (const auto& [m, v] : z.overrides()) {
            CoordPair c = v;
            c.twist += mt->count_value(m);
            out.set_override(m, c);
        }
        return out;
    }
    if (const auto* sh = std::get_if<Shift>(&g)) {
        if (sh->offset == 0) return z;
        if (!z.shift_compatible())
            throw std::invalid_argument(
                "index shift applied to a structure that is not shift-compatible");
        if (!z.lengths().is_constant() || !z.twists().is_constant())
            throw std::invalid_argument(
                "index shift supported only over constant symbolic families");
        CoordSeq out = z;
        out.clear_overrides();
        for (const auto& [m, v] : z.overrides()) {
            long target = static_cast<long>(m) + sh->offset;
            if (target >= 1) out.set_override(static_cast<std::size_t>(target), v);
        }
        return out;
    }
    const auto& perm = std::get<FinitePerm>(g);
    perm.validate();
    CoordSeq out = z;
    for (const auto& [from, to] : perm.images) out.set_override(to, z.eval(from));
    return out;
}

}  // namespace

CoordSeq act(const MappingClass& mc, const CoordSeq& z) {
    CoordSeq cur = z;
    for (auto it = mc.generators.rbegin(); it != mc.generators.rend(); ++it)
        cur = apply_generator(*it, cur);
    return cur;
}

SupportClass support_class(const MappingClass& mc) {
    for (const Generator& g : cancel(mc.generators))
        if (!generator_finite_support(g)) return SupportClass::INFINITE;
    return SupportClass::FINITE;
}

std::string to_string(QcVerdict v) {
    switch (v) {
        case QcVerdict::QC: return "QC";
        case QcVerdict::NOT_QC: return "NOT_QC";
        case QcVerdict::INDETERMINATE: return "INDETERMINATE";
    }
    return "?";
}

namespace {

double sampled_product_sup(const MultiTwist& mt, const CoordSeq& x, std::size_t limit) {
    double sup = 0.0;
    if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt.counts)) {
        for (const auto& [m, n] : *map)
            sup = std::max(sup, std::abs(static_cast<double>(n)) * x.eval(m).length);
        return sup;
    }
    // Evidence only: indices where the family under- or overflows double
    // range are skipped, and no exception may cross the parallel region.
    auto sample = [&](std::size_t m) {
        try {
            double v = std::abs(mt.count_value(m)) * x.eval(m).length;
            return std::isnan(v) ? 0.0 : v;
        } catch (const std::exception&) {
            return 0.0;
        }
    };
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(limit);
#pragma omp parallel for schedule(static) reduction(max : sup)
    for (std::ptrdiff_t i = 1; i <= n; ++i)
        sup = std::max(sup, sample(static_cast<std::size_t>(i)));
    return sup;
}

}  // namespace

QcResult matsuzaki_classify(const MultiTwist& mt, const CoordSeq& x) {
    QcResult out;
    if (const auto* map = std::get_if<std::map<std::size_t, long>>(&mt.counts)) {
        (void)map;
        out.verdict = QcVerdict::QC;
        out.product = "finite support";
        out.sampled_sup = sampled_product_sup(mt, x, 0);
        return out;
    }
    const RateExpr& counts = std::get<RateExpr>(mt.counts);
    if (counts.is_zero()) {
        out.verdict = QcVerdict::QC;
        out.product = "0";
        return out;
    }
    const RateExpr& lengths = x.lengths();
    if (!single_signed(counts) || !lengths.all_positive() || lengths.has_round_up()) {
        out.verdict = QcVerdict::INDETERMINATE;
        out.product = "outside the rate algebra";
        out.sampled_sup = sampled_product_sup(mt, x, 1000000);
        return out;
    }
    // True counts are the per-term ceilings: value <= ceil <= value + 1 in
    // magnitude, and at least 1 wherever nonzero.  So |n_m| l_m is bounded
    // iff the smooth product and the lengths both are, and unbounded iff
    // either is.
    RateExpr smooth = magnitude(counts);
    {
        std::vector<RateTerm> t = smooth.terms();
        for (RateTerm& u : t) u.round_up = false;
        smooth = RateExpr(std::move(t));
    }
    RateExpr product = smooth * lengths;
    out.product = product.describe();
    if (product.unbounded() || lengths.unbounded()) {
        out.verdict = QcVerdict::NOT_QC;
    } else {
        out.verdict = QcVerdict::QC;
    }
    out.sampled_sup = sampled_product_sup(mt, x, 10000);
    return out;
}

void SubspaceDesc::validate() const {
    switch (kind) {
        case Kind::FULL_H:
        case Kind::GEOD_COMPLETE:
        case Kind::METR_COMPLETE:
            return;
        case Kind::SYSTOLE_BOUNDED:
            if (!(epsilon > 0.0)) throw std::invalid_argument("systole bound must be > 0");
            return;
        case Kind::D_R: {
            if (transverse_bound && !(*transverse_bound > 0.0))
                throw std::invalid_argument("transverse bound must be > 0");
            if (r == 0.0) return;
            if (r >= 1.0 && r == std::floor(r)) return;
            double inv = 1.0 / r;
            if (r > 0.0 && std::abs(inv - std::round(inv)) <= 1e-9 * inv) return;
            throw std::invalid_argument("D_r index must be 0, a positive integer, or 1/n");
        }
    }
}

std::string SubspaceDesc::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::FULL_H: return "H";
        case Kind::GEOD_COMPLETE: return "C";
        case Kind::METR_COMPLETE: return "C'";
        case Kind::SYSTOLE_BOUNDED:
            os << "C_P(systole >= " << epsilon << ")";
            return os.str();
        case Kind::D_R:
            os << "D_" << r;
            if (transverse_bound) os << " (transverse <= " << *transverse_bound << ")";
            return os.str();
    }
    return "?";
}

Membership dr_membership(const RateExpr& lengths, double r) {
    SubspaceDesc d;
    d.kind = SubspaceDesc::Kind::D_R;
    d.r = r;
    d.validate();
    if (!lengths.all_positive() || lengths.has_round_up() || lengths.is_zero())
        throw std::invalid_argument("D_r membership needs positive smooth length terms");
    // Upper bound l_m <= C: no growing term.
    for (const RateTerm& t : lengths.terms())
        if (growth_key(t).grows()) return Membership::NOT_MEMBER;
    if (r == 0.0) return Membership::MEMBER;
    // Lower bound l_m >= c m^(-1/r): some positive term decays no faster.
    const double inv_r = 1.0 / r;
    for (const RateTerm& t : lengths.terms()) {
        if (t.rho != 1.0) continue;  // geometric decay loses to every power
        if (t.p < inv_r || (t.p == inv_r && t.q >= 0.0)) return Membership::MEMBER;
    }
    return Membership::NOT_MEMBER;
}

std::string to_string(TrichotomyType t) {
    switch (t) {
        case TrichotomyType::ALWAYS: return "ALWAYS";
        case TrichotomyType::SOMETIMES: return "SOMETIMES";
        case TrichotomyType::NEVER: return "NEVER";
        case TrichotomyType::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

namespace {

CoordSeq witness_structure(RateExpr lengths) {
    CoordSeq s(std::move(lengths), RateExpr::zero());
    s.set_peripheral(RateExpr::zero());  // tight: all isolated planar ends cusps
    return s;
}

// A decaying single-term reciprocal of the counts' leading term, when the
// product against the counts stays bounded.
std::optional<RateExpr> reciprocal_qc_lengths(const RateExpr& counts_mag) {
    if (counts_mag.bounded()) return RateExpr::constant(1.0);
    auto lead = leading_term(counts_mag);
    if (!lead) return std::nullopt;
    RateExpr recip(RateTerm{1.0 / lead->coef, 1.0 / lead->rho, -lead->p, -lead->q, false});
    RateExpr smooth_counts = counts_mag;
    {
        std::vector<RateTerm> t = smooth_counts.terms();
        for (RateTerm& u : t) u.round_up = false;
        smooth_counts = RateExpr(std::move(t));
    }
    RateExpr product = smooth_counts * recip;
    if (product.bounded() && recip.bounded()) return recip;
    return std::nullopt;
}

TrichotomyVerdict analyze_multitwist(const RateExpr& counts, const SubspaceDesc& sub) {
    TrichotomyVerdict v;
    if (!single_signed(counts)) {
        v.justification = "mixed-sign symbolic counts are outside the decidable fragment";
        return v;
    }
    const RateExpr counts_mag = magnitude(counts);
    const bool unbounded_counts = counts_mag.unbounded();

    auto sometimes = [&](RateExpr qc_lengths, RateExpr nqc_lengths, const char* why) {
        v.type = TrichotomyType::SOMETIMES;
        v.qc_witness = witness_structure(std::move(qc_lengths));
        v.non_qc_witness = witness_structure(std::move(nqc_lengths));
        v.justification = why;
    };

    switch (sub.kind) {
        case SubspaceDesc::Kind::FULL_H:
        case SubspaceDesc::Kind::GEOD_COMPLETE:
        case SubspaceDesc::Kind::METR_COMPLETE: {
            auto qc = reciprocal_qc_lengths(counts_mag);
            if (!qc) {
                v.justification = "no reciprocal length family for these counts";
                return v;
            }
            // Infinite integral counts meet growing lengths unboundedly.
            RateExpr nqc = RateExpr::constant(1.0) + RateExpr::power_log(1.0, 0.0, 1.0);
            sometimes(std::move(*qc), std::move(nqc),
                      "bounded product on the reciprocal family, unbounded on growing lengths");
            return v;
        }
        case SubspaceDesc::Kind::SYSTOLE_BOUNDED: {
            if (unbounded_counts) {
                v.type = TrichotomyType::NEVER;
                v.justification =
                    "divergent-product-forced: lengths at least epsilon force "
                    "sup |n_m| l_m = inf";
                return v;
            }
            RateExpr qc = RateExpr::constant(sub.epsilon);
            RateExpr nqc = RateExpr::constant(sub.epsilon) + RateExpr::power_log(1.0, 0.0, 1.0);
            sometimes(std::move(qc), std::move(nqc),
                      "bounded counts: product bounded at constant lengths, unbounded on "
                      "growing lengths");
            return v;
        }
        case SubspaceDesc::Kind::D_R: {
            auto lead = leading_term(counts_mag);
            // D_0 has no lower envelope, so only r > 0 can force the product.
            if (sub.r > 0.0 && lead && lead->rho > 1.0) {
                v.type = TrichotomyType::NEVER;
                v.justification =
                    "divergent-product-forced: exponential counts against the D_r lower "
                    "envelope (aligned-family scope)";
                return v;
            }
            if (sub.r > 0.0 && lead && lead->rho == 1.0) {
                // Against the admissible lower envelope m^(-1/r) the product
                // grows iff the counts grow strictly faster than m^(1/r).
                const double pp = lead->p + 1.0 / sub.r;
                if (pp < 0.0 || (pp == 0.0 && lead->q > 0.0)) {
                    v.type = TrichotomyType::NEVER;
                    if (sub.transverse_bound) {
                        // Transverse decompositions bounded by C keep the
                        // twist curves at least a collar width long, and the
                        // counts here are unbounded, so that branch forces
                        // the product too.
                        const double K = 2.0 * collar_width(0.5 * *sub.transverse_bound);
                        v.justification =
                            "divergent-product-forced: aligned families force "
                            "counts * m^(-1/r) -> inf, transverse ones keep lengths >= " +
                            std::to_string(K) + " against unbounded counts";
                    } else {
                        v.justification =
                            "divergent-product-forced: counts outgrow m^(1/r), so every "
                            "admissible family forces an unbounded product "
                            "(aligned-family scope)";
                    }
                    return v;
                }
            }
            auto qc = reciprocal_qc_lengths(counts_mag);
            if (qc && dr_membership(*qc, sub.r) == Membership::MEMBER && unbounded_counts) {
                sometimes(std::move(*qc), RateExpr::constant(1.0),
                          "bounded product on the reciprocal family, unbounded at constant "
                          "lengths");
                return v;
            }
            v.justification = unbounded_counts
                                  ? "no admissible reciprocal family found"
                                  : "bounded counts admit qc representatives on every "
                                    "tested family; no non-qc witness in the algebra";
            return v;
        }
    }
    return v;
}

}  // namespace

TrichotomyVerdict trichotomy(const MappingClass& mc, const SubspaceDesc& sub) {
    sub.validate();
    std::vector<Generator> reduced;
    for (const Generator& g : cancel(mc.generators)) {
        if (generator_finite_support(g)) continue;  // never changes the type
        // Merge adjacent infinite multi-twists.
        if (!reduced.empty()) {
            auto* prev = std::get_if<MultiTwist>(&reduced.back());
            const auto* cur = std::get_if<MultiTwist>(&g);
            if (prev && cur && std::holds_alternative<RateExpr>(prev->counts) &&
                std::holds_alternative<RateExpr>(cur->counts)) {
                RateExpr sum = std::get<RateExpr>(prev->counts) + std::get<RateExpr>(cur->counts);
                if (sum.is_zero())
                    reduced.pop_back();
                else
                    prev->counts = std::move(sum);
                continue;
            }
        }
        reduced.push_back(g);
    }
    TrichotomyVerdict v;
    if (reduced.empty()) {
        v.type = TrichotomyType::ALWAYS;
        v.justification = "finitely supported";
        return v;
    }
    if (reduced.size() == 1) {
        if (const auto* mt = std::get_if<MultiTwist>(&reduced[0]);
            mt && std::holds_alternative<RateExpr>(mt->counts)) {
            return analyze_multitwist(std::get<RateExpr>(mt->counts), sub);
        }
    }
    v.justification = "composition outside the decidable fragment (shifts or mixed words)";
    return v;
}

MembershipCheck member_check(const SubspaceDesc& sub, const CoordSeq& x) {
    sub.validate();
    switch (sub.kind) {
        case SubspaceDesc::Kind::FULL_H:
            return MembershipCheck::MEMBER;
        case SubspaceDesc::Kind::GEOD_COMPLETE:
        case SubspaceDesc::Kind::METR_COMPLETE: {
            switch (classify_completeness(FluteStructure{x}).status) {
                case Completeness::COMPLETE_BY_DIVERGENCE:
                case Completeness::CITED_COMPLETE:
                    return MembershipCheck::MEMBER;
                case Completeness::INCOMPLETE_BY_CONVERGENCE:
                    return MembershipCheck::NOT_MEMBER;
                case Completeness::INDETERMINATE:
                    return MembershipCheck::UNDECIDED;
            }
            return MembershipCheck::UNDECIDED;
        }
        case SubspaceDesc::Kind::SYSTOLE_BOUNDED: {
            auto inf = x.lengths().positive_infimum();
            if (!inf) return MembershipCheck::UNDECIDED;
            double low = *inf;
            for (const auto& [m, c] : x.overrides()) low = std::min(low, c.length);
            if (x.has_peripheral()) {
                if (const auto* list = std::get_if<std::vector<double>>(&*x.peripheral())) {
                    for (double l : *list)
                        if (l > 0.0) low = std::min(low, l);
                } else {
                    const RateExpr& e = std::get<RateExpr>(*x.peripheral());
                    if (!e.is_zero()) {
                        auto pinf = e.positive_infimum();
                        if (!pinf) return MembershipCheck::UNDECIDED;
                        if (*pinf == 0.0) return MembershipCheck::NOT_MEMBER;
                        low = std::min(low, *pinf);
                    }
                }
            }
            return low >= sub.epsilon ? MembershipCheck::MEMBER : MembershipCheck::NOT_MEMBER;
        }
        case SubspaceDesc::Kind::D_R:
            return dr_membership(x.lengths(), sub.r) == Membership::MEMBER
                       ? MembershipCheck::MEMBER
                       : MembershipCheck::NOT_MEMBER;
    }
    return MembershipCheck::UNDECIDED;
}

NeverVerdict never_qc_by_translation(const RateExpr& powers, double tau_inf) {
    if (!(tau_inf > 0.0)) throw std::domain_error("tau_inf must be > 0");
    return powers.unbounded() ? NeverVerdict::NEVER : NeverVerdict::UNKNOWN;
}

NeverVerdict never_qc_by_translation(const std::vector<long>& powers, double tau_inf) {
    if (!(tau_inf > 0.0)) throw std::domain_error("tau_inf must be > 0");
    (void)powers;  // a finite list is bounded; the theorem needs an unbounded tail
    return NeverVerdict::UNKNOWN;
}

}  // namespace fnh
