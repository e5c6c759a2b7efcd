// Mapping classes acting on coordinate sequences and the
// always / sometimes / never quasiconformal trichotomy relative to
// invariant subspaces.  The decision quantity throughout is
// sup_m |n_m| * l_m over the twist support (the two-sided dilatation
// bounds for multi-twists reduce to it): bounded product = qc
// representative exists, product tending to infinity = none.
#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fnh/coordseq.hpp"

namespace fnh {

// Twist counts: symbolic (rounded up to integers at evaluation) or an
// explicit finite map index -> integer count.
using TwistCounts = std::variant<RateExpr, std::map<std::size_t, long>>;

struct MultiTwist {
    TwistCounts counts;

    bool finite_support() const;
    // Effective count at index m as a double (symbolic counts round up in
    // magnitude per term; may overflow to inf for explosive families).
    double count_value(std::size_t m) const;
    // Integer count; throws std::overflow_error when it does not fit.
    long count_at(std::size_t m) const;
};

struct Shift {
    long offset = 0;
};

// Finite permutation of coordinate indices, index -> image.
struct FinitePerm {
    std::map<std::size_t, std::size_t> images;

    void validate() const;  // must be a bijection on its (finite) domain
    std::size_t apply(std::size_t m) const;
    std::size_t inverse(std::size_t m) const;
};

using Generator = std::variant<MultiTwist, Shift, FinitePerm>;

// Finite composition of generators; composition applies right-to-left
// (generators.back() acts first), matching function composition.
struct MappingClass {
    std::vector<Generator> generators;

    static MappingClass identity() { return MappingClass{}; }
    MappingClass inverse() const;
    friend MappingClass operator*(const MappingClass& a, const MappingClass& b);
};

// Action on coordinates: multi-twists add counts to twists, shifts relabel
// indices (only on sequences declared shift-compatible), permutations move
// finitely many coordinates.
CoordSeq act(const MappingClass& mc, const CoordSeq& z);

enum class SupportClass { FINITE, INFINITE };

// FINITE iff every generator left after syntactic cancellation (adjacent
// inverse pairs only) has finite support.
SupportClass support_class(const MappingClass& mc);

enum class QcVerdict { QC, NOT_QC, INDETERMINATE };
std::string to_string(QcVerdict v);

struct QcResult {
    QcVerdict verdict = QcVerdict::INDETERMINATE;
    std::string product;        // symbolic |n_m| l_m when available
    double sampled_sup = 0.0;   // sup over m <= 10^6, reported as evidence
};

// Classifies the multi-twist against the structure via sup_m |n_m| l_m on
// the rate algebra; inputs outside it fall back to a sampled supremum and
// INDETERMINATE.
QcResult matsuzaki_classify(const MultiTwist& mt, const CoordSeq& x);

struct SubspaceDesc {
    enum class Kind { FULL_H, GEOD_COMPLETE, METR_COMPLETE, SYSTOLE_BOUNDED, D_R };
    Kind kind = Kind::FULL_H;
    double epsilon = 0.0;  // SYSTOLE_BOUNDED
    double r = 0.0;        // D_R; 0, a positive integer, or 1/n

    // D_R only: declares that any admissible decomposition not containing
    // the twist curves is transverse to them with pants lengths <= this
    // bound.  Crossing a pants curve of length at most C costs at least
    // the collar width 2 r(C/2), so twist-curve lengths stay bounded below
    // and a NEVER verdict extends beyond the aligned-family scope.
    std::optional<double> transverse_bound;

    void validate() const;
    std::string describe() const;
};

enum class Membership { MEMBER, NOT_MEMBER };

// D_r: lengths admit c m^(-1/r) <= l_m <= C.  Exact exponent comparison on
// the rate algebra; r = 0 keeps only the upper bound.
Membership dr_membership(const RateExpr& lengths, double r);

enum class TrichotomyType { ALWAYS, SOMETIMES, NEVER, UNKNOWN };
std::string to_string(TrichotomyType t);

struct TrichotomyVerdict {
    TrichotomyType type = TrichotomyType::UNKNOWN;
    std::optional<CoordSeq> qc_witness;      // SOMETIMES: structure where a qc representative exists
    std::optional<CoordSeq> non_qc_witness;  // SOMETIMES: structure where none exists
    std::string justification;
};

// Classification of mc relative to sub.  Finite support always wins; a
// single infinite multi-twist (possibly padded by finitely supported
// generators, which never change the type) is analyzed on the rate
// algebra; anything else is UNKNOWN, never a guess.  D_R verdicts hold in
// the aligned-family scope: structures whose distinguished decomposition
// contains the twist curves.
TrichotomyVerdict trichotomy(const MappingClass& mc, const SubspaceDesc& sub);

// Symbolic membership of a coordinate sequence in a subspace, at the
// coordinate-bookkeeping level (flute completeness classification for the
// completeness subspaces, pants-curve lengths for the systole bound).
enum class MembershipCheck { MEMBER, NOT_MEMBER, UNDECIDED };
MembershipCheck member_check(const SubspaceDesc& sub, const CoordSeq& x);

// Powers of commuting partial pseudo-Anosov pieces with translation
// lengths bounded below by tau_inf: unbounded powers force unbounded
// translation length, hence no qc representative anywhere.
enum class NeverVerdict { NEVER, UNKNOWN };
NeverVerdict never_qc_by_translation(const RateExpr& powers, double tau_inf);
NeverVerdict never_qc_by_translation(const std::vector<long>& powers, double tau_inf);

}  // namespace fnh
