#include <gtest/gtest.h>

#include "congrlab/con_lattice.hpp"
#include "congrlab/congruence.hpp"
#include "congrlab/error.hpp"
#include "congrlab/fixtures.hpp"
#include "congrlab/spec_io.hpp"
#include "support/helpers.hpp"

using namespace congrlab;
using congrlab::testing::cong;
using congrlab::testing::el;
using congrlab::testing::formatted;

TEST(PrincipalCongruence, L3BottomPair) {
  auto l3 = fixture("L3");
  EXPECT_EQ(principal_congruence(l3, el(l3, "0"), el(l3, "m")), cong(l3, "0,m|1"));
}

TEST(PrincipalCongruence, Reflexive) {
  auto p = fixture("P");
  EXPECT_TRUE(principal_congruence(p, 2, 2).is_delta());
}

TEST(PrincipalCongruence, DiamondAtomsCollapseEverything) {
  auto d = fixture("D");
  EXPECT_TRUE(principal_congruence(d, el(d, "a"), el(d, "b")).is_nabla());
}

TEST(CgGenerated, EmptyIsDelta) {
  auto x = fixture("X");
  EXPECT_TRUE(cg_generated(x, {}).is_delta());
}

TEST(CgGenerated, PentagonBeta) {
  auto p = fixture("P");
  std::vector<ElementPair> pairs{{el(p, "0"), el(p, "x")}};
  EXPECT_EQ(cg_generated(p, pairs), cong(p, "0,x|y,z,1"));
}

TEST(CgGenerated, ChainTransitivity) {
  auto l3 = fixture("L3");
  std::vector<ElementPair> pairs{{0, 1}, {1, 2}};
  EXPECT_TRUE(cg_generated(l3, pairs).is_nabla());
}

TEST(CgGenerated, GenericTernaryOperation) {
  // A ternary operation exercises the general Mal'cev propagation path.
  auto spec = parse_algebra_spec(nlohmann::json::parse(R"({"name": "maj", "kind": "algebra",
      "elements": ["0","1","2"],
      "operations": {"m": [[["0","0","0"],["0","1","0"],["0","0","2"]],
                           [["0","1","1"],["1","1","1"],["2","1","2"]],
                           [["0","2","2"],["1","2","2"],["2","2","2"]]]}})"));
  auto a = build_from_spec(spec);
  auto cl = all_congruences(a);
  auto oracle = brute_force_congruences(a);
  ASSERT_EQ(cl.size(), oracle.size());
  for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(cl[i], oracle[i]);
}

TEST(JoinMeet, L3Coatoms) {
  auto l3 = fixture("L3");
  auto phi = cong(l3, "0,m|1");
  auto psi = cong(l3, "0|m,1");
  EXPECT_TRUE(join(phi, psi).is_nabla());
  EXPECT_TRUE(meet(phi, psi).is_delta());
  EXPECT_EQ(join(phi, delta(l3)), phi);
}

TEST(JoinMeet, ParentMismatch) {
  auto l3 = fixture("L3");
  auto l2 = fixture("L2");
  try {
    (void)join(delta(l3), delta(l2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParentMismatch);
  }
}

TEST(AllCongruences, Pentagon) {
  auto p = fixture("P");
  auto cl = all_congruences(p);
  EXPECT_EQ(formatted(p, cl),
            (std::vector<std::string>{"0|x|y|z|1", "0|x|y,z|1", "0,x|y,z,1", "0,y,z|x,1",
                                      "0,x,y,z,1"}));
  EXPECT_EQ(cl.index_of_delta(), 0u);
  EXPECT_EQ(cl.index_of_nabla(), 4u);
}

TEST(AllCongruences, RIsBoolean8) {
  auto r = fixture("R");
  auto cl = all_congruences(r);
  EXPECT_EQ(cl.size(), 8u);
  for (const char* s : {"0,a,b,c,x|y,1", "0,a,b,c,x,y|1", "0,a,b,c,x|y|1", "0|a|b|c|x,y,1",
                        "0|a|b|c|x|y,1", "0|a|b|c|x,y|1"}) {
    EXPECT_TRUE(cl.index_of(cong(r, s))) << s;
  }
}

TEST(AllCongruences, Trivial) {
  auto cl = all_congruences(fixture("L1"));
  EXPECT_EQ(cl.size(), 1u);
  EXPECT_EQ(cl.index_of_delta(), cl.index_of_nabla());
}

TEST(AllCongruences, TablesAgreeWithPairwiseOperations) {
  auto h = fixture("H");
  auto cl = all_congruences(h);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    for (std::size_t j = 0; j < cl.size(); ++j) {
      EXPECT_EQ(cl[cl.join(i, j)], join(cl[i], cl[j]));
      EXPECT_EQ(cl[cl.meet(i, j)], meet(cl[i], cl[j]));
      EXPECT_EQ(cl.leq(i, j), cl.meet(i, j) == i);
    }
  }
}

TEST(BruteForce, FixtureCounts) {
  auto l3 = fixture("L3");
  auto con = brute_force_congruences(l3);
  ASSERT_EQ(con.size(), 4u);
  EXPECT_EQ(format(l3, con[1]), "0,m|1");
  EXPECT_EQ(format(l3, con[2]), "0|m,1");
  EXPECT_EQ(brute_force_congruences(fixture("D")).size(), 2u);
  auto e = fixture("E");
  auto ce = brute_force_congruences(e);
  ASSERT_EQ(ce.size(), 3u);
  EXPECT_EQ(ce[1], cong(e, "0|a|b,d|c|1"));
}

TEST(BruteForce, CarrierGuard) {
  auto big = fixture("L2x3cube");
  EXPECT_NO_THROW(brute_force_congruences(big));
  auto ten = parse_algebra_spec(nlohmann::json::parse(
      R"({"name": "c10", "elements": ["0","1","2","3","4","5","6","7","8","9"],
          "cover": [["0","1"],["1","2"],["2","3"],["3","4"],["4","5"],["5","6"],["6","7"],
                    ["7","8"],["8","9"]]})"));
  try {
    brute_force_congruences(build_from_spec(ten));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SizeCap);
  }
}

TEST(Compose, L3Orientation) {
  auto l3 = fixture("L3");
  auto phi = cong(l3, "0,m|1");
  auto psi = cong(l3, "0|m,1");
  EXPECT_TRUE(compose(psi, phi).contains(el(l3, "0"), el(l3, "1")));
  EXPECT_FALSE(compose(phi, psi).contains(el(l3, "0"), el(l3, "1")));
  EXPECT_FALSE(permutes(phi, psi));
}

TEST(Compose, DeltaIsIdentity) {
  auto p = fixture("P");
  auto gamma = cong(p, "0|x|y,z|1");
  EXPECT_EQ(compose(gamma, delta(p)), Relation::of(gamma.partition()));
  EXPECT_EQ(compose(delta(p), gamma), Relation::of(gamma.partition()));
}

TEST(Compose, XiSixAfterXiOne) {
  auto x = fixture("X");
  auto xi1 = cong(x, "0,q|p,r,s,t,u,1");
  auto xi6 = cong(x, "0,p|q,r|s|t|u|1");
  EXPECT_TRUE(compose(xi6, xi1).contains(el(x, "1"), el(x, "0")));
  EXPECT_FALSE(compose(xi1, xi6).contains(el(x, "1"), el(x, "0")));
}

TEST(Classification, LatticesAreDistributive) {
  for (const auto& name : fixture_names()) {
    EXPECT_TRUE(is_congruence_distributive(all_congruences(fixture(name)))) << name;
  }
}

TEST(Classification, L3NotPermutable) {
  EXPECT_FALSE(is_congruence_permutable(all_congruences(fixture("L3"))));
}

TEST(Classification, BooleanAlgebraIsArithmetical) {
  // L2^2 with complement added to the signature.
  auto spec = parse_algebra_spec(nlohmann::json::parse(R"({"name": "B4", "kind": "algebra",
      "elements": ["0","u","v","1"],
      "operations": {
        "join": [["0","u","v","1"],["u","u","1","1"],["v","1","v","1"],["1","1","1","1"]],
        "meet": [["0","0","0","0"],["0","u","0","u"],["0","0","v","v"],["0","u","v","1"]],
        "neg": ["1","v","u","0"]}})"));
  auto b = build_from_spec(spec);
  EXPECT_TRUE(is_arithmetical(all_congruences(b)));
  // The plain lattice L2^2 is also arithmetical: it is a Boolean lattice.
  EXPECT_TRUE(is_arithmetical(all_congruences(fixture("L2x2"))));
}

TEST(Classification, MaximalAndRadical) {
  auto l3 = fixture("L3");
  auto cl = all_congruences(l3);
  auto max = maximal_congruences(cl);
  ASSERT_EQ(max.size(), 2u);
  EXPECT_EQ(cl[max[0]], cong(l3, "0,m|1"));
  EXPECT_EQ(cl[max[1]], cong(l3, "0|m,1"));
  EXPECT_EQ(radical(cl), cl.index_of_delta());
  EXPECT_FALSE(is_local(cl));
  EXPECT_TRUE(is_semilocal(cl));
}

TEST(Classification, DiamondIsLocal) {
  auto cl = all_congruences(fixture("D"));
  EXPECT_TRUE(is_local(cl));
  EXPECT_EQ(maximal_congruences(cl), std::vector<std::size_t>{0});
}

TEST(Classification, TrivialAlgebraErrors) {
  auto cl = all_congruences(fixture("L1"));
  EXPECT_THROW(maximal_congruences(cl), Error);
  EXPECT_THROW(radical(cl), Error);
  EXPECT_FALSE(is_local(cl));
  EXPECT_TRUE(prime_congruences(cl).empty());
}

TEST(Classification, PrimesOfPentagon) {
  auto p = fixture("P");
  auto cl = all_congruences(p);
  auto primes = prime_congruences(cl);
  std::vector<std::string> names;
  for (auto i : primes) names.push_back(format(p, cl[i]));
  // gamma is the unique atom of Con(P), so Delta is prime and gamma is not.
  EXPECT_EQ(names, (std::vector<std::string>{"0|x|y|z|1", "0,x|y,z,1", "0,y,z|x,1"}));
}

TEST(ParseCongruence, ReportsViolation) {
  auto l3 = fixture("L3");
  try {
    cong(l3, "0,1|m");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotACongruence);
    EXPECT_NE(std::string(e.what()).find("join("), std::string::npos) << e.what();
  }
  try {
    cong(l3, "0,q|m,1");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
  try {
    cong(l3, "0|m");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}
