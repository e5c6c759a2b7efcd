// Lazily evaluated Fenchel-Nielsen coordinate sequences: symbolic rate
// functions for lengths and twists, finite overrides, and an optional
// peripheral (boundary/cusp) length sequence with twist fixed at zero.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "fnh/ratefn.hpp"

namespace fnh {

struct CoordPair {
    double length = 0.0;
    double twist = 0.0;
};

// Peripheral lengths: either a rate expression (infinitely many values) or
// an explicit finite list (indices past the end are cusps, length 0).
using Peripheral = std::variant<RateExpr, std::vector<double>>;

class CoordSeq {
public:
    CoordSeq() : lengths_(RateExpr::constant(1.0)), twists_(RateExpr::zero()) {}
    CoordSeq(RateExpr lengths, RateExpr twists) : lengths_(std::move(lengths)), twists_(std::move(twists)) {}

    const RateExpr& lengths() const { return lengths_; }
    const RateExpr& twists() const { return twists_; }
    RateExpr& lengths() { return lengths_; }
    RateExpr& twists() { return twists_; }

    const std::map<std::size_t, CoordPair>& overrides() const { return overrides_; }
    void set_override(std::size_t m, CoordPair v);
    void clear_overrides() { overrides_.clear(); }

    bool has_peripheral() const { return peripheral_.has_value(); }
    const std::optional<Peripheral>& peripheral() const { return peripheral_; }
    void set_peripheral(Peripheral p) { peripheral_ = std::move(p); }
    void drop_peripheral() { peripheral_.reset(); }

    // Declares the index set shift-invariant (bi-infinite flute enumeration);
    // index shifts are rejected otherwise.
    bool shift_compatible() const { return shift_compatible_; }
    void set_shift_compatible(bool v) { shift_compatible_ = v; }

    // Core coordinate m >= 1; overrides win over the rate functions.
    // Throws if the effective length is <= 0 (configuration error).
    CoordPair eval(std::size_t m) const;

    // Peripheral length at index n >= 1 (0 when no peripheral data).
    double peripheral_length(std::size_t n) const;

    // Metric coordinate i >= 1.  Without peripheral data this is the core
    // pair i.  With peripheral data core and peripheral pairs interleave in
    // the exhaustion order gamma_1, gamma'_1, gamma_2, gamma'_2, ...
    CoordPair metric_coordinate(std::size_t i) const;

    // Indices where the two sequences differ, when the symbolic parts are
    // structurally identical (then only overrides can differ, a finite
    // set).  nullopt means the symbolic parts differ, i.e. the sequences
    // may differ in infinitely many coordinates.
    std::optional<std::vector<std::size_t>> finite_difference(const CoordSeq& other) const;

    friend bool operator==(const CoordSeq& a, const CoordSeq& b);

private:
    RateExpr lengths_;
    RateExpr twists_;
    std::map<std::size_t, CoordPair> overrides_;
    std::optional<Peripheral> peripheral_;
    bool shift_compatible_ = false;
};

// The half-twist flute family: lengths A log(m+1), twists +-1/2, peripheral
// cusp lengths decaying geometrically (base 1/2).
CoordSeq half_twist_flute(double twist_sign, double amplitude = 4.0);

// Componentwise affine interpolation (1-s) z + s w over lengths, twists,
// overrides, and peripheral data; endpoints are returned exactly.
CoordSeq lerp(const CoordSeq& z, const CoordSeq& w, double s);

// Peripheral lengths divided by s (s in [1, inf]; s = inf sends every
// funnel to a cusp).  Nonperipheral coordinates are untouched.
CoordSeq peripheral_scale(const CoordSeq& z, double s);

}  // namespace fnh
