#include <gtest/gtest.h>

#include "congrlab/fixtures.hpp"
#include "congrlab/lifting.hpp"
#include "congrlab/report.hpp"

using namespace congrlab;

namespace {

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST(Report, ProductTE) {
  std::vector<FiniteAlgebra> fs{fixture("T"), fixture("E")};
  auto r = build_product_report(fs);
  auto text = to_table(r);
  EXPECT_TRUE(contains(text, "|Con|=24, |B|=16, |FC|=4")) << text;
  ASSERT_TRUE(r.product);
  EXPECT_TRUE(r.product->holds());
}

TEST(Report, E) {
  auto text = to_table(build_report(fixture("E"), "E"));
  EXPECT_TRUE(contains(text, "CBLP: yes, FCLP: yes")) << text;
}

TEST(Report, XDivergenceIsShown) {
  auto r = build_report(fixture("X"));
  EXPECT_EQ(r.fixture, "X");
  EXPECT_FALSE(r.fclp);
  EXPECT_EQ(r.fclp_failing_congruence, "0|p|q|r,s,t,u,1");
  ASSERT_TRUE(r.osum_transport);
  EXPECT_FALSE(r.osum_transport->second.fc_transports);
  EXPECT_NE(r.osum_transport->second.fc_of_sum.size(),
            r.osum_transport->second.fc_transported.size());
  auto j = to_json(r);
  EXPECT_EQ(j["osum_transport"]["fc_transports"], false);
}

TEST(Report, PentagonNoteRecordsQuotients) {
  auto r = build_report(fixture("P"));
  ASSERT_FALSE(r.notes.empty());
  const auto& note = r.notes.back();
  EXPECT_TRUE(contains(note, "P/0,x|y,z,1 ~ L2")) << note;
  EXPECT_TRUE(contains(note, "P/0,y,z|x,1 ~ L2")) << note;
  EXPECT_TRUE(contains(note, "Con(P/0|x|y,z|1) is the four-element Boolean lattice")) << note;
}

TEST(Report, QuotientIdentification) {
  auto r = build_report(fixture("S"));
  bool diamond = false;
  for (const auto& row : r.rows) {
    if (row.partition == "0|a|b|c|x,1") diamond = row.quotient.isomorphic_to == "D";
  }
  EXPECT_TRUE(diamond);
}

TEST(Report, Invariants) {
  for (const auto& name : fixture_names()) {
    auto r = build_report(fixture(name));
    bool f = true, c = true;
    for (const auto& row : r.rows) {
      f = f && row.fclp;
      c = c && row.cblp;
      if (r.arithmetical) EXPECT_EQ(row.fclp, row.cblp) << name << " " << row.partition;
    }
    EXPECT_EQ(f, r.fclp) << name;
    EXPECT_EQ(c, r.cblp) << name;
    EXPECT_EQ(r.fclp, algebra_fclp(fixture(name)).holds) << name;
  }
}

TEST(Report, JsonIsStable) {
  auto a = to_json(build_report(fixture("H"))).dump(2);
  auto b = to_json(build_report(fixture("H"))).dump(2);
  EXPECT_EQ(a, b);
  EXPECT_LT(a.find("\"algebra\""), a.find("\"counts\""));
}

TEST(Report, DotLegendAndStyles) {
  auto a = fixture("L2timesL3");
  auto dot = con_dot(a, all_congruences(a));
  EXPECT_TRUE(contains(dot, "legend"));
  EXPECT_TRUE(contains(dot, "peripheries=2"));
  EXPECT_TRUE(contains(dot, "style=filled"));
  EXPECT_TRUE(contains(dot, "rankdir=BT"));
}
