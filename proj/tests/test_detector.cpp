#include <gtest/gtest.h>

#include "gorentest/detector.hpp"
#include "support.hpp"

using namespace gorentest;
using testing_support::corpus_rings;
using testing_support::naive_homology_dim;

namespace {

const testing_support::NamedRing& find(const std::vector<testing_support::NamedRing>& rs, const std::string& id) {
  for (const auto& r : rs)
    if (r.id == id) return r;
  throw std::runtime_error("no ring " + id);
}

}  // namespace

TEST(Detector, GorensteinRingsAreDetected) {
  for (const auto& nr : corpus_rings()) {
    if (!nr.gorenstein) continue;
    const Bundle b = build_bundle(nr.r, 3);
    ASSERT_TRUE(b.resolution.terminated);
    for (const auto& res : {detect_K_tensor(b, nullptr), detect_K_hom(b, nullptr), detect_M(b, nullptr),
                            detect_K_hom_e(b, nullptr)}) {
      EXPECT_EQ(res.verdict, Verdict::gorenstein) << nr.id << " " << res.name;
      for (const auto& e : res.evidence) EXPECT_EQ(e.dim, 0u);
    }
    // chi^P is an isomorphism when P = R.
    EXPECT_TRUE(b.chi.is_degreewise_iso()) << nr.id;
    EXPECT_TRUE(b.eps.is_degreewise_iso()) << nr.id;
  }
}

TEST(Detector, EvidenceMatchesNaiveHomology) {
  const auto rings = corpus_rings();
  const auto& nr = find(rings, "f2_m2_xy");
  const Bundle b = build_bundle(nr.r, 3);
  const auto [lo, hi] = b.k.complex.trusted(b.guard);
  const auto kt = k_tensor_dims(b);
  ASSERT_EQ(kt.size(), static_cast<std::size_t>(hi - lo + 1));
  for (const auto& e : kt) EXPECT_EQ(e.dim, naive_homology_dim(b.k_tensor_e(), e.degree));
  for (const auto& e : k_hom_dims(b)) EXPECT_EQ(e.dim, naive_homology_dim(b.k_hom_r(), e.degree));
  for (const auto& e : m_dims(b)) EXPECT_EQ(e.dim, naive_homology_dim(b.hom_e_m(), e.degree));
}

TEST(Detector, NonGorensteinNeverCalledGorenstein) {
  const auto rings = corpus_rings();
  for (const char* id : {"f2_m2_xy", "f2_x2_y3_xy"}) {
    const auto& nr = find(rings, id);
    const Bundle b3 = build_bundle(nr.r, 3);
    const Bundle b2 = build_bundle(nr.r, 2);
    for (const auto& res : {detect_K_tensor(b3, &b2), detect_K_hom(b3, &b2), detect_M(b3, &b2),
                            detect_K_hom_e(b3, &b2)}) {
      EXPECT_NE(res.verdict, Verdict::gorenstein) << id << " " << res.name;
      EXPECT_TRUE(res.witness.has_value()) << id << " " << res.name;
      EXPECT_TRUE(res.persistent) << id << " " << res.name;
    }
  }
}

TEST(Detector, JudgeRequiresIdenticalWitness) {
  const auto rings = corpus_rings();
  const Bundle b = build_bundle(find(rings, "f2_m2_xy").r, 2);
  // Lowest |n| wins, the negative degree first on a tie.
  auto r = judge("t", b, {{-1, 4}, {0, 0}, {1, 4}}, {{-1, 4}, {0, 0}, {1, 4}});
  EXPECT_EQ(r.verdict, Verdict::not_gorenstein);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->degree, -1);
  r = judge("t", b, {{0, 8}, {1, 3}}, {{0, 4}, {1, 3}});
  EXPECT_EQ(r.verdict, Verdict::not_gorenstein);
  EXPECT_EQ(r.witness->degree, 1);
  r = judge("t", b, {{0, 8}}, {{0, 4}});
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_TRUE(r.persistent);
  EXPECT_FALSE(r.stable);
  r = judge("t", b, {{0, 0}}, {{0, 0}});
  EXPECT_EQ(r.verdict, Verdict::inconclusive);
  EXPECT_FALSE(r.witness);
}

TEST(Detector, AggregateFlagsContradictions) {
  DetectorResult g{"a", Verdict::gorenstein, {}, {}, {}, true, false, 3, 0};
  DetectorResult n{"b", Verdict::not_gorenstein, {}, {}, {}, true, true, 3, 0};
  DetectorResult i{"c", Verdict::inconclusive, {}, {}, {}, false, true, 3, 0};
  EXPECT_TRUE(aggregate({g}, true).consistent);
  EXPECT_FALSE(aggregate({g}, false).consistent);
  EXPECT_FALSE(aggregate({g, n}, true).consistent);
  const auto a = aggregate({i, i}, false);
  EXPECT_TRUE(a.consistent);
  EXPECT_TRUE(a.all_inconclusive);
}

TEST(Detector, BudgetSkipsLargeBundles) {
  const auto rings = corpus_rings();
  EXPECT_THROW(build_bundle(find(rings, "f2_m2_xyz").r, 5), ResourceError);
  EXPECT_THROW(build_bundle(find(rings, "f2_x2").r, 1), std::invalid_argument);
}

TEST(Detector, ComparisonIsomorphismSmallDepth) {
  for (const auto& nr : corpus_rings()) {
    if (nr.r->embedding_dimension() > 2) continue;
    const Bundle b = build_bundle(nr.r, 2);
    const auto rep = check_comparison_iso(b);
    EXPECT_TRUE(rep.dims_match && rep.chain_map && rep.isomorphism) << nr.id;
  }
}
