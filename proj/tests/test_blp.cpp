#include <gtest/gtest.h>

#include "congrlab/blp.hpp"
#include "congrlab/constructions.hpp"
#include "congrlab/error.hpp"
#include "support/helpers.hpp"

using namespace congrlab;
using congrlab::testing::cong;
using congrlab::testing::el;

namespace {

// Goedel chain 0 < m < 1: times is meet, x->y = 1 if x <= y else y.
FiniteAlgebra goedel3() {
  return build_from_spec(parse_algebra_spec(nlohmann::json::parse(R"({
    "name": "G3", "kind": "residuated", "elements": ["0", "m", "1"],
    "cover": [["0", "m"], ["m", "1"]],
    "operations": {
      "times": [["0", "0", "0"], ["0", "m", "m"], ["0", "m", "1"]],
      "implies": [["1", "1", "1"], ["0", "1", "1"], ["0", "m", "1"]]
    }})")));
}

std::vector<Element> elems(const FiniteAlgebra& a, std::initializer_list<const char*> labels) {
  std::vector<Element> out;
  for (auto l : labels) out.push_back(el(a, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> labels_of(const FiniteAlgebra& a, const std::vector<Element>& s) {
  std::vector<std::string> out;
  for (auto e : s) out.push_back(a.label(e));
  return out;
}

}  // namespace

TEST(ElementCenter, L2TimesL3) {
  auto a = fixture("L2timesL3");
  auto b = element_boolean_center(a);
  EXPECT_EQ(labels_of(a, b.members), (std::vector<std::string>{"0", "p", "s", "1"}));
  EXPECT_EQ(b.neg(el(a, "p")), el(a, "s"));
  EXPECT_EQ(b.neg(el(a, "0")), el(a, "1"));
}

TEST(ElementCenter, ChainsAndR0) {
  auto l3 = fixture("L3");
  EXPECT_EQ(labels_of(l3, element_boolean_center(l3).members), (std::vector<std::string>{"0", "1"}));
  auto r0 = fixture("R0");
  EXPECT_EQ(labels_of(r0, element_boolean_center(r0).members), (std::vector<std::string>{"0", "1"}));
}

TEST(ElementCenter, AmbiguousInPentagon) {
  try {
    element_boolean_center(fixture("P"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousComplement);
  }
}

TEST(Blp, Examples) {
  EXPECT_TRUE(algebra_blp(fixture("R0")).holds);
  auto l = fixture("L2osumL2x2");
  auto r = algebra_blp(l);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.failing_congruence);
  for (const char* name : {"L2", "L3", "L2x2", "L2timesL3", "S", "R0"}) {
    auto a = fixture(name);
    EXPECT_TRUE(has_blp(a, delta(a)).holds) << name;
  }
}

TEST(Filters, L3) {
  auto l3 = fixture("L3");
  auto f = filters(l3);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.sets[0], elems(l3, {"0", "m", "1"}));
  EXPECT_EQ(f.sets[2], elems(l3, {"1"}));
  for (const auto& g : f.generator) EXPECT_TRUE(g);
  EXPECT_EQ(ideals(l3).size(), 3u);
}

TEST(Filters, R0UniqueMaximal) {
  auto r0 = fixture("R0");
  auto f = filters(r0);
  EXPECT_EQ(f.size(), 5u);
  // Proper filters ordered largest first: [c) is the only maximal one.
  EXPECT_EQ(f.sets[1], elems(r0, {"a", "b", "c", "1"}));
  EXPECT_EQ(f.generator[1], el(r0, "c"));
  EXPECT_EQ(principal_filter(r0, el(r0, "c")), elems(r0, {"a", "b", "c", "1"}));
  std::size_t maximal = 0;
  for (const auto& s : f.sets) {
    if (s.size() == r0.size()) continue;
    bool below_other = false;
    for (const auto& t : f.sets) {
      if (t.size() > s.size() && t.size() < r0.size() &&
          std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        below_other = true;
      }
    }
    if (!below_other) ++maximal;
  }
  EXPECT_EQ(maximal, 1u);
}

TEST(FilterCongruence, Examples) {
  auto l3 = fixture("L3");
  EXPECT_EQ(filter_congruence(l3, elems(l3, {"m", "1"})), cong(l3, "0|m,1"));
  EXPECT_TRUE(filter_congruence(l3, elems(l3, {"1"})).is_delta());
  EXPECT_TRUE(filter_congruence(l3, elems(l3, {"0", "m", "1"})).is_nabla());
  EXPECT_EQ(ideal_congruence(l3, elems(l3, {"0", "m"})), cong(l3, "0,m|1"));
  auto r0 = fixture("R0");
  EXPECT_EQ(filter_congruence(r0, elems(r0, {"a", "b", "c", "1"})), cong(r0, "0|a,b,c,1"));
}

TEST(FilterCongruence, Errors) {
  auto l3 = fixture("L3");
  try {
    filter_congruence(l3, elems(l3, {"m"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAFilter);
    EXPECT_NE(std::string(e.what()).find("1 is above m"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ideal_congruence(l3, elems(l3, {"m"})), Error);
  auto p = fixture("P");
  try {
    filter_congruence(p, elems(p, {"1"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDistributive);
  }
}

TEST(FilterCongruence, IsomorphismOntoConForR0) {
  auto r0 = fixture("R0");
  auto f = filters(r0);
  auto cl = all_congruences(r0);
  ASSERT_EQ(f.size(), cl.size());
  std::vector<Congruence> images;
  for (const auto& s : f.sets) images.push_back(filter_congruence(r0, s));
  for (std::size_t i = 0; i < images.size(); ++i) {
    EXPECT_TRUE(cl.index_of(images[i]));
    for (std::size_t j = 0; j < images.size(); ++j) {
      const bool sub = std::includes(f.sets[j].begin(), f.sets[j].end(), f.sets[i].begin(),
                                     f.sets[i].end());
      EXPECT_EQ(sub, images[i].contained_in(images[j]));
    }
  }
}

TEST(FiltIdBlp, OrdinalSum) {
  auto l = fixture("L2osumL2x2");
  EXPECT_FALSE(has_id_blp(l).holds);
  EXPECT_TRUE(has_filt_blp(l).holds);
  EXPECT_TRUE(has_filt_blp(fixture("L2x2")).holds);
  EXPECT_TRUE(has_filt_blp(fixture("L1")).holds);
  EXPECT_TRUE(has_filt_blp(fixture("R0")).holds);
}

TEST(Reticulation, R0IsItsLatticeReduct) {
  auto r0 = fixture("R0");
  auto ret = reticulation(r0);
  EXPECT_EQ(ret.size(), 5u);
  EXPECT_TRUE(isomorphic(ret, lattice_reduct(r0)));
  EXPECT_TRUE(isomorphic(ret, fixture("L2osumL2x2")));
  EXPECT_EQ(ret.label(ret.bottom()), "[0)");
  EXPECT_EQ(ret.label(ret.top()), "[1)");
  EXPECT_FALSE(has_id_blp(ret).holds);
  EXPECT_FALSE(algebra_fclp(ret).holds);
}

TEST(Reticulation, GoedelChainAndTrivial) {
  auto g = goedel3();
  EXPECT_TRUE(isomorphic(reticulation(g), fixture("L3")));
  auto trivial = build_from_spec(parse_algebra_spec(nlohmann::json::parse(R"({
    "name": "T1", "kind": "residuated", "elements": ["0"], "cover": [],
    "operations": {"times": [["0"]], "implies": [["0"]]}})")));
  EXPECT_EQ(reticulation(trivial).size(), 1u);
  EXPECT_THROW(reticulation(fixture("L3")), Error);
}

TEST(BlpEquivalence, Examples) {
  auto r = blp_equivalence_check(fixture("R0"));
  EXPECT_TRUE(r.blp && r.cblp && r.fclp && r.agree);
  auto l = blp_equivalence_check(fixture("L2osumL2x2"));
  EXPECT_FALSE(l.blp);
  EXPECT_FALSE(l.fclp);
  EXPECT_TRUE(l.cblp);
  EXPECT_TRUE(l.agree);
  auto b = blp_equivalence_check(fixture("L2x2"));
  EXPECT_TRUE(b.blp && b.cblp && b.fclp && b.agree);
  EXPECT_TRUE(blp_equivalence_check(goedel3()).agree);
}

TEST(Residuated, R0IsArithmetical) {
  auto cl = all_congruences(fixture("R0"));
  EXPECT_TRUE(is_arithmetical(cl));
}

TEST(Residuated, PerCongruenceAgreement) {
  for (auto a : {fixture("R0"), goedel3()}) {
    Analysis an(a);
    for (const auto& theta : an.con.elements()) {
      const bool blp = has_blp(a, theta).holds;
      EXPECT_EQ(blp, has_cblp(a, an, theta).holds) << format(a, theta);
      EXPECT_EQ(blp, has_fclp(a, an, theta).holds) << format(a, theta);
    }
  }
}

TEST(Blp, AmbiguityIsAnError) {
  auto h = fixture("H");
  try {
    has_blp(h, delta(h));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AmbiguousComplement);
  }
}
