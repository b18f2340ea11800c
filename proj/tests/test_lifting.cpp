#include <gtest/gtest.h>

#include "congrlab/constructions.hpp"
#include "congrlab/lifting.hpp"
#include "support/helpers.hpp"

using namespace congrlab;
using congrlab::testing::cong;
using congrlab::testing::el;

TEST(Quotient, SBySigmaOneIsDiamond) {
  auto s = fixture("S");
  auto q = quotient(s, cong(s, "0|a|b|c|x,1"));
  EXPECT_EQ(q.quotient.size(), 5u);
  EXPECT_TRUE(isomorphic(q.quotient, fixture("D")));
  EXPECT_EQ(q.quotient.label(4), "x+1");
}

TEST(Quotient, ByDeltaIsRelabelledCopy) {
  auto h = fixture("H");
  auto q = quotient(h, delta(h));
  EXPECT_EQ(q.quotient.tables(), h.tables());
  EXPECT_EQ(q.quotient.labels(), h.labels());
}

TEST(Quotient, PByGammaHasBooleanCon) {
  auto p = fixture("P");
  auto q = quotient(p, cong(p, "0|x|y,z|1"));
  EXPECT_EQ(q.quotient.size(), 4u);
  Analysis an(q.quotient);
  EXPECT_EQ(an.con.size(), 4u);
  EXPECT_EQ(an.center.size(), 4u);
  EXPECT_EQ(an.fc.size(), 4u);
  EXPECT_TRUE(isomorphic(q.quotient, fixture("L2x2")));
}

TEST(Quotient, PByAlphaAndBetaAreTwoElementChains) {
  auto p = fixture("P");
  EXPECT_TRUE(isomorphic(quotient(p, cong(p, "0,y,z|x,1")).quotient, fixture("L2")));
  EXPECT_TRUE(isomorphic(quotient(p, cong(p, "0,x|y,z,1")).quotient, fixture("L2")));
}

TEST(Quotient, ProjectionCommutesWithOperations) {
  auto x = fixture("X");
  auto theta = cong(x, "0|p|q|r,s,t,u,1");
  auto q = quotient(x, theta);
  for (Element a = 0; a < x.size(); ++a) {
    for (Element b = 0; b < x.size(); ++b) {
      EXPECT_EQ(q.projection[x.join(a, b)], q.quotient.join(q.projection[a], q.projection[b]));
      EXPECT_EQ(q.projection[x.meet(a, b)], q.quotient.meet(q.projection[a], q.projection[b]));
    }
  }
}

TEST(Quotient, TByTauSixIsDualOfS) {
  auto t = fixture("T");
  auto q = quotient(t, cong(t, "0|z|a|b|c|x,1"));
  EXPECT_TRUE(isomorphic(q.quotient, dual(fixture("S"))));
}

TEST(UMap, DeltaGoesToDelta) {
  auto h = fixture("H");
  auto q = quotient(h, cong(h, "0|a|b|c|x|y,z|1"));
  EXPECT_TRUE(u_map(q, delta(h)).is_delta());
}

TEST(UMap, ChiOneToNu) {
  auto h = fixture("H");
  auto q = quotient(h, cong(h, "0|a|b|c|x|y,z|1"));
  auto nu = u_map(q, cong(h, "0,a,b,c,y,z|x,1"));
  EXPECT_EQ(format(q.quotient, nu), "0,a,b,c,y+z|x,1");
}

TEST(SInverse, NablaPullsBackToNabla) {
  auto h = fixture("H");
  auto q = quotient(h, cong(h, "0|a|b|c|x|y,z|1"));
  EXPECT_TRUE(s_inverse(q, nabla(q.quotient)).is_nabla());
}

TEST(UMap, BijectionAboveTheta) {
  for (const char* name : {"X", "H", "P", "T"}) {
    auto a = fixture(name);
    Analysis an(a);
    for (const auto& theta : an.con.elements()) {
      auto q = quotient(a, theta);
      auto qcl = all_congruences(q.quotient);
      std::size_t above = 0;
      for (const auto& alpha : an.con.elements()) {
        if (!theta.contained_in(alpha)) continue;
        ++above;
        auto image = u_map(q, alpha);
        EXPECT_TRUE(qcl.index_of(image)) << name;
        EXPECT_EQ(s_inverse(q, image), alpha) << name;
      }
      EXPECT_EQ(above, qcl.size()) << name;
    }
  }
}

TEST(Quotient, CongruencesFromIntervalMatchDirect) {
  for (const char* name : {"P", "H", "X", "T", "L2timesL3", "R0"}) {
    auto a = fixture(name);
    auto cl = all_congruences(a);
    for (const auto& theta : cl.elements()) {
      auto q = quotient(a, theta);
      EXPECT_EQ(quotient_congruences(q, cl).elements(), all_congruences(q.quotient).elements())
          << name << " at " << format(a, theta);
    }
  }
}

TEST(Fclp, PGammaFails) {
  auto p = fixture("P");
  auto r = has_fclp(p, cong(p, "0|x|y,z|1"));
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.failing_target);
  EXPECT_FALSE(has_cblp(p, cong(p, "0|x|y,z|1")).holds);
}

TEST(Fclp, BoundsAlwaysLift) {
  for (const auto& name : fixture_names()) {
    auto a = fixture(name);
    EXPECT_TRUE(has_fclp(a, delta(a)).holds) << name;
    EXPECT_TRUE(has_fclp(a, nabla(a)).holds) << name;
    EXPECT_TRUE(has_cblp(a, delta(a)).holds) << name;
    EXPECT_TRUE(has_cblp(a, nabla(a)).holds) << name;
  }
}

TEST(Fclp, XiFourFails) {
  auto x = fixture("X");
  auto r = has_fclp(x, cong(x, "0|p|q|r,s,t,u,1"));
  EXPECT_FALSE(r.holds);
}

TEST(Fclp, ChiThreeLiftsFactorsButNotBoolean) {
  auto h = fixture("H");
  auto chi3 = cong(h, "0|a|b|c|x|y,z|1");
  auto f = has_fclp(h, chi3);
  EXPECT_TRUE(f.holds);
  EXPECT_EQ(f.witnesses.size(), 2u);
  auto c = has_cblp(h, chi3);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.failing_target);
}

TEST(Cblp, DistributiveFixturesAlwaysLift) {
  for (const char* name : {"L1", "L2", "L3", "L2x2", "L2x3cube", "L2timesL3", "L2osumL2x2"}) {
    auto a = fixture(name);
    EXPECT_TRUE(algebra_cblp(a).holds) << name;
  }
}

TEST(Cblp, XHasCblpEverywhere) {
  auto x = fixture("X");
  Analysis an(x);
  for (const auto& theta : an.con.elements()) {
    EXPECT_TRUE(has_cblp(x, an, theta).holds) << format(x, theta);
  }
}

TEST(AlgebraLevel, HAndX) {
  auto h = fixture("H");
  EXPECT_TRUE(algebra_fclp(h).holds);
  auto hc = algebra_cblp(h);
  EXPECT_FALSE(hc.holds);
  EXPECT_EQ(hc.failing_congruence, "0|a|b|c|x|y,z|1");
  auto x = fixture("X");
  auto xf = algebra_fclp(x);
  EXPECT_FALSE(xf.holds);
  EXPECT_EQ(xf.failing_congruence, "0|p|q|r,s,t,u,1");
  EXPECT_TRUE(algebra_cblp(x).holds);
  EXPECT_TRUE(algebra_fclp(fixture("T")).holds);
}

TEST(Normality, Examples) {
  EXPECT_TRUE(is_fc_normal(fixture("H")).holds);
  auto x = is_fc_normal(fixture("X"));
  EXPECT_FALSE(x.holds);
  EXPECT_TRUE(x.failing_pair);
  EXPECT_TRUE(is_fc_normal(fixture("L1")).holds);
  EXPECT_FALSE(is_b_normal(fixture("P")).holds);
  for (const char* name : {"L2", "L3", "L2x2", "L2x3cube", "L2timesL3", "L2osumL2x2"}) {
    EXPECT_TRUE(is_b_normal(fixture(name)).holds) << name;
  }
  EXPECT_TRUE(is_b_normal(fixture("L1")).holds);
}

TEST(SpecialCongruences, Pentagon) {
  auto r = check_special_congruences(fixture("P"));
  EXPECT_TRUE(r.holds()) << r.text();
  EXPECT_EQ(r.maximal, (std::vector<std::string>{"0,x|y,z,1", "0,y,z|x,1"}));
  for (const auto& p : r.prime) EXPECT_NE(p, "0|x|y,z|1");
}

TEST(SpecialCongruences, DiamondLocal) {
  auto r = check_special_congruences(fixture("D"));
  EXPECT_TRUE(r.local);
  EXPECT_TRUE(r.holds());
}

TEST(SpecialCongruences, TrivialVacuous) {
  EXPECT_TRUE(check_special_congruences(fixture("L1")).holds());
}
