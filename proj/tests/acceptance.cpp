// Acceptance suite: one line per criterion, every tolerance pinned in code.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fnh/config.hpp"
#include "fnh/flutes.hpp"
#include "fnh/hyptrig.hpp"
#include "fnh/kernels.hpp"
#include "fnh/mcg.hpp"
#include "fnh/metric.hpp"
#include "fnh/paths.hpp"
#include "fnh/pantsgraph.hpp"
#include "test_util.hpp"

using namespace fnh;
using fnh_test::Rng;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::printf("%s  %2d. %s%s%s\n", ok ? "PASS" : "FAIL", number, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

CoordSeq zero_twist_seq(RateExpr lengths) {
    return CoordSeq(std::move(lengths), RateExpr::zero());
}

}  // namespace

int main() {
    criterion(1, "collar sandwich on 10^4 random pants, runtime < 1 s", [](std::string& detail) {
        auto t0 = Clock::now();
        Rng rng(101);
        std::vector<PantsGeom> pants;
        pants.reserve(10000);
        for (int i = 0; i < 10000; ++i)
            pants.push_back(PantsGeom{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0),
                                      rng.uniform(0.01, 20.0)});
        std::vector<double> d = batch_orthodistance(pants);
        std::vector<OrthodistanceBounds> b = batch_bounds(pants);
        bool ok = true;
        for (std::size_t i = 0; i < pants.size(); ++i)
            ok = ok && b[i].lower - 1e-9 <= d[i] && d[i] <= b[i].upper + 1e-9;
        double dt = seconds_since(t0);
        detail = "10000 samples in " + std::to_string(dt) + " s";
        return ok && dt < 1.0;
    });

    criterion(2, "pentagon oracle equivalence, 10^3 samples + 10^2 cusp closed forms, < 5 s",
              [](std::string& detail) {
                  auto t0 = Clock::now();
                  Rng rng(202);
                  bool ok = true;
                  double worst = 0.0;
                  for (int i = 0; i < 1000; ++i) {
                      PantsGeom p{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0),
                                  rng.uniform(0.01, 20.0)};
                      PentagonSplit s = pentagon_split(p);
                      double gap = std::abs(s.d1 + s.d2 - orthodistance(p));
                      worst = std::max(worst, gap);
                      ok = ok && gap <= 1e-9;
                  }
                  for (int i = 0; i < 100; ++i) {
                      PantsGeom p{rng.uniform(0.01, 20.0), rng.uniform(0.01, 20.0), 0.0};
                      PentagonSplit s = pentagon_split(p);
                      double d = orthodistance(p);
                      double gap = std::abs(s.d1 + s.d2 - d);
                      double a = p.l1 / 2, b = p.l2 / 2;
                      double closed = std::acosh(
                          (1.0 + std::cosh(a) * std::cosh(b)) / (std::sinh(a) * std::sinh(b)));
                      ok = ok && gap <= 1e-9 && std::abs(d - closed) <= 1e-9;
                      worst = std::max(worst, gap);
                  }
                  double dt = seconds_since(t0);
                  detail = "worst gap " + format_double(worst) + ", " + std::to_string(dt) + " s";
                  return ok && dt < 5.0;
              });

    criterion(3, "series terms settle onto 2(1/n^2 + 1/(n+1)^2): 10% at n=100, 2% at n=1000",
              [](std::string& detail) {
                  NonconvexityReport rep = nonconvexity_experiment(1000);
                  double r100 = rep.rows[99].ratio, r1000 = rep.rows[999].ratio;
                  detail = "ratio(100) = " + format_double(r100) +
                           ", ratio(1000) = " + format_double(r1000);
                  return std::abs(r100 - 1.0) < 0.10 && std::abs(r1000 - 1.0) < 0.02;
              });

    criterion(4, "metric truncation brackets, exact symmetry, triangle inequality at 1e-12",
              [](std::string&) {
                  Rng rng(404);
                  auto random_seq = [&rng]() {
                      CoordSeq s(RateExpr::power_log(rng.uniform(0.5, 4.0),
                                                     rng.uniform(-0.5, 1.5),
                                                     rng.uniform(-1.0, 1.0)),
                                 RateExpr::constant(rng.uniform(-1.0, 1.0)));
                      if (rng.uniform_int(0, 1))
                          s.set_override(static_cast<std::size_t>(rng.uniform_int(1, 10)),
                                         CoordPair{rng.uniform(0.1, 3.0), rng.uniform(-1.0, 1.0)});
                      return s;
                  };
                  bool ok = true;
                  for (int i = 0; i < 100; ++i) {
                      CoordSeq z = random_seq(), w = random_seq();
                      for (std::size_t N : {5u, 10u, 20u}) {
                          double vN = fn_distance(z, w, N).value;
                          double v2N = fn_distance(z, w, 2 * N).value;
                          ok = ok && v2N - vN >= 0.0 &&
                               v2N - vN <= std::ldexp(1.0, -static_cast<int>(N) + 1);
                      }
                      ok = ok && fn_distance(z, w, 20).value == fn_distance(w, z, 20).value;
                  }
                  for (int i = 0; i < 100; ++i) {
                      CoordSeq a = random_seq(), b = random_seq(), c = random_seq();
                      double ab = fn_distance(a, b, 24).value;
                      double ac = fn_distance(a, c, 24).value;
                      double cb = fn_distance(c, b, 24).value;
                      ok = ok && ab <= ac + cb + 1e-12;
                  }
                  return ok;
              });

    criterion(5, "zig-zag: dyadic distance bound, monotone, finitely many changed coordinates",
              [](std::string&) {
                  CoordSeq z(RateExpr::power_log(1.0, 0.0, 1.0), RateExpr::constant(0.25));
                  CoordSeq w(RateExpr::power_log(2.0, 0.5, 0.0), RateExpr::constant(-0.5));
                  bool ok = true;
                  double prev = std::numeric_limits<double>::infinity();
                  for (std::size_t k = 1; k <= 16; ++k) {
                      double t = zigzag_segment_end(k);
                      CoordSeq at = zigzag_eval(z, w, t);
                      double dist = fn_distance(at, w, 64).value;
                      ok = ok && dist <= std::ldexp(1.0, -static_cast<int>(k) + 1);
                      ok = ok && dist <= prev;
                      prev = dist;
                      auto diff = at.finite_difference(z);  // symbolic, not sampled
                      ok = ok && diff.has_value() && diff->size() <= k;
                  }
                  for (double t : {0.0, 0.37, 0.81, 0.999}) {
                      auto diff = zigzag_eval(z, w, t).finite_difference(z);
                      ok = ok && diff.has_value();
                  }
                  return ok;
              });

    criterion(6, "non-convexity: cited endpoints, incomplete midpoint, tail < 0.05, < 5 s",
              [](std::string& detail) {
                  auto t0 = Clock::now();
                  NonconvexityReport rep = nonconvexity_experiment(1000);
                  double dt = seconds_since(t0);
                  double limit_lo = rep.partial_sum + rep.lower_tail;
                  double limit_hi = rep.partial_sum + rep.upper_tail;
                  detail = "S_1000 in [" + format_double(limit_lo) + ", " +
                           format_double(limit_hi) + "], " + std::to_string(dt) + " s";
                  return rep.endpoint_status == Completeness::CITED_COMPLETE &&
                         rep.midpoint_status == Completeness::INCOMPLETE_BY_CONVERGENCE &&
                         std::isfinite(limit_hi) && rep.upper_tail < 0.05 &&
                         rep.upper_tail >= rep.lower_tail && dt < 5.0;
              });

    criterion(7, "trichotomy ladder: m^(1/n) vs D_n (SOMETIMES) and D_(n+1) (NEVER)",
              [](std::string&) {
                  bool ok = true;
                  {
                      MultiTwist mt{RateExpr::power_log(1.0, -0.5, 0.0)};
                      ok = ok && matsuzaki_classify(
                                     mt, zero_twist_seq(RateExpr::power_log(1.0, 0.5, 0.0)))
                                         .verdict == QcVerdict::QC;
                      ok = ok && matsuzaki_classify(mt, zero_twist_seq(RateExpr::constant(1.0)))
                                         .verdict == QcVerdict::NOT_QC;
                  }
                  for (int n = 1; n <= 3; ++n) {
                      MappingClass mc;
                      mc.generators.push_back(MultiTwist{RateExpr::power_log(1.0, -1.0 / n, 0.0)});
                      SubspaceDesc dn{SubspaceDesc::Kind::D_R, 0, double(n)};
                      SubspaceDesc dn1{SubspaceDesc::Kind::D_R, 0, double(n + 1)};
                      TrichotomyVerdict vn = trichotomy(mc, dn);
                      TrichotomyVerdict vn1 = trichotomy(mc, dn1);
                      ok = ok && vn.type == TrichotomyType::SOMETIMES &&
                           vn1.type == TrichotomyType::NEVER && vn.qc_witness.has_value() &&
                           vn.non_qc_witness.has_value();
                      if (!ok) break;
                      // Witnesses must survive a serialization round-trip and re-verify.
                      CoordSeq qc_back = coordseq_from_json(
                          json::parse(to_json(*vn.qc_witness).dump()));
                      CoordSeq nqc_back = coordseq_from_json(
                          json::parse(to_json(*vn.non_qc_witness).dump()));
                      const MultiTwist& mt = std::get<MultiTwist>(mc.generators[0]);
                      ok = ok && member_check(dn, qc_back) == MembershipCheck::MEMBER;
                      ok = ok && member_check(dn, nqc_back) == MembershipCheck::MEMBER;
                      ok = ok && matsuzaki_classify(mt, qc_back).verdict == QcVerdict::QC;
                      ok = ok && matsuzaki_classify(mt, nqc_back).verdict == QcVerdict::NOT_QC;
                  }
                  return ok;
              });

    criterion(8, "D_r chain downward closure on 20 families; m^(-1/2) in D_2 \\ D_3",
              [](std::string&) {
                  Rng rng(808);
                  const std::vector<double> chain{0.0,       1.0 / 5.0, 1.0 / 4.0, 1.0 / 3.0,
                                                  1.0 / 2.0, 1.0,       2.0,       3.0,
                                                  4.0,       5.0};
                  bool ok = true;
                  for (int i = 0; i < 20; ++i) {
                      RateExpr lengths =
                          RateExpr::power_log(rng.uniform(0.2, 3.0), rng.uniform(-0.2, 1.2),
                                              rng.uniform(-1.0, 1.0));
                      bool seen_nonmember = false;
                      for (double r : chain) {
                          bool m = dr_membership(lengths, r) == Membership::MEMBER;
                          if (seen_nonmember && m) ok = false;
                          if (!m) seen_nonmember = true;
                      }
                  }
                  ok = ok && dr_membership(RateExpr::power_log(1.0, 0.5, 0.0), 2.0) ==
                                 Membership::MEMBER;
                  ok = ok && dr_membership(RateExpr::power_log(1.0, 0.5, 0.0), 3.0) ==
                                 Membership::NOT_MEMBER;
                  return ok;
              });

    criterion(9, "trichotomy axioms: ALWAYS / SOMETIMES / NEVER and conjugation invariance",
              [](std::string&) {
                  SubspaceDesc sys{SubspaceDesc::Kind::SYSTOLE_BOUNDED, 1.0, 0};
                  bool ok = true;
                  {
                      MappingClass finite;
                      finite.generators.push_back(
                          MultiTwist{std::map<std::size_t, long>{{2, 3}, {5, -1}}});
                      ok = ok && trichotomy(finite, sys).type == TrichotomyType::ALWAYS;
                  }
                  MappingClass bounded;
                  bounded.generators.push_back(MultiTwist{RateExpr::constant(1.0)});
                  TrichotomyVerdict vb = trichotomy(bounded, sys);
                  ok = ok && vb.type == TrichotomyType::SOMETIMES && vb.qc_witness &&
                       vb.non_qc_witness &&
                       member_check(sys, *vb.qc_witness) == MembershipCheck::MEMBER &&
                       member_check(sys, *vb.non_qc_witness) == MembershipCheck::MEMBER;

                  MappingClass unbounded;
                  unbounded.generators.push_back(MultiTwist{RateExpr::power_log(1.0, -0.5, 0.0)});
                  ok = ok && trichotomy(unbounded, sys).type == TrichotomyType::NEVER;

                  Rng rng(909);
                  for (int i = 0; i < 20 && ok; ++i) {
                      MappingClass inner = (i % 2 == 0) ? unbounded : bounded;
                      MappingClass g;
                      if (i % 3 == 0) {
                          FinitePerm perm;
                          std::size_t a = static_cast<std::size_t>(rng.uniform_int(1, 8));
                          perm.images[a] = a + 1;
                          perm.images[a + 1] = a;
                          g.generators.push_back(std::move(perm));
                      } else {
                          std::map<std::size_t, long> counts;
                          counts[static_cast<std::size_t>(rng.uniform_int(1, 12))] =
                              rng.uniform_int(-2, 2);
                          g.generators.push_back(MultiTwist{std::move(counts)});
                      }
                      MappingClass conj = g * inner * g.inverse();
                      ok = ok && trichotomy(conj, sys).type == trichotomy(inner, sys).type;
                      std::set<TrichotomyType> seen{trichotomy(conj, sys).type};
                      ok = ok && seen.size() == 1;  // exactly one verdict per call
                  }
                  return ok;
              });

    criterion(10, "flute extraction: Cantor spine of length 10, full flute cover, coherence",
               [](std::string&) {
                   bool ok = true;
                   DualGraph cantor{GraphFamily::CANTOR_TREE};
                   FiniteGraph g10 = truncate(cantor, 10);
                   FluteDescriptor d = extract_flute(maximal_tree(g10), 0);
                   ok = ok && d.spine_length() == 10;
                   std::set<std::size_t> on_spine(d.spine.begin(), d.spine.end());
                   ok = ok && on_spine.size() == d.spine.size();
                   for (const auto& [a, b] : d.rungs)
                       ok = ok && (on_spine.count(a) + on_spine.count(b) == 1);
                   std::set<std::pair<std::size_t, std::size_t>> graph_edges(g10.edges.begin(),
                                                                             g10.edges.end());
                   for (const auto& e : d.spine_edges) ok = ok && graph_edges.count(e) == 1;
                   for (const auto& e : d.rungs) ok = ok && graph_edges.count(e) == 1;

                   DualGraph flute{GraphFamily::FLUTE};
                   FiniteGraph f8 = truncate(flute, 8);
                   FluteDescriptor df = extract_flute(maximal_tree(f8), 0);
                   ok = ok && df.spine == f8.vertices && df.rungs.empty();

                   for (GraphFamily fam : {GraphFamily::FLUTE, GraphFamily::BIINFINITE_FLUTE,
                                           GraphFamily::LOCH_NESS, GraphFamily::CANTOR_TREE}) {
                       DualGraph dg{fam};
                       for (std::size_t k = 1; k <= 10; ++k) {
                           FiniteGraph small = truncate(dg, k - 1);
                           FiniteGraph big = truncate(dg, k);
                           std::set<std::size_t> bv(big.vertices.begin(), big.vertices.end());
                           for (std::size_t v : small.vertices) ok = ok && bv.count(v) == 1;
                           auto count_in = [](const FiniteGraph& gr, std::size_t a, std::size_t b) {
                               return std::count(gr.edges.begin(), gr.edges.end(),
                                                 std::make_pair(a, b));
                           };
                           for (std::size_t a : small.vertices)
                               for (std::size_t b : small.vertices) {
                                   if (a > b) continue;
                                   ok = ok && count_in(small, a, b) == count_in(big, a, b);
                               }
                       }
                   }
                   return ok;
               });

    if (failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
