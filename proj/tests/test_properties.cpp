#include <gtest/gtest.h>

#include "support/lattice_gen.hpp"
#include "support/properties.hpp"

using namespace congrlab;
using namespace congrlab::testing;

namespace {

void expect_none(const NamedCheck& check) {
  std::size_t failures = 0;
  for (const auto& a : lattice_sweep()) {
    for (const auto& line : check.run(a)) {
      if (++failures <= 5) ADD_FAILURE() << check.name << ": " << line;
    }
  }
  EXPECT_EQ(failures, 0u) << check.name;
}

}  // namespace

TEST(LatticeEnumeration, CountsUpToIsomorphism) {
  const std::vector<std::size_t> expected{1, 1, 1, 2, 5, 15, 53};
  for (std::size_t n = 1; n <= expected.size(); ++n) {
    EXPECT_EQ(lattices_of_size(n).size(), expected[n - 1]) << n;
  }
}

TEST(LatticeEnumeration, SweepShape) {
  const auto& sweep = lattice_sweep();
  EXPECT_EQ(sweep.size(), 25u + 200u);
  for (std::size_t i = 25; i < sweep.size(); ++i) {
    EXPECT_GE(sweep[i].size(), 7u);
    EXPECT_LE(sweep[i].size(), 8u);
  }
}

TEST(Oracle, ConEqualsBruteForce) { expect_none(oracle_checks()[0]); }
TEST(Oracle, PrincipalIsMinimal) { expect_none(oracle_checks()[1]); }

class Theorem : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Theorem, NoCounterexamples) { expect_none(theorem_checks()[GetParam()]); }

INSTANTIATE_TEST_SUITE_P(Sweep, Theorem,
                         ::testing::Range<std::size_t>(0, theorem_checks().size()),
                         [](const auto& info) {
                           std::string name = theorem_checks()[info.param].name;
                           for (auto& c : name) {
                             if (!std::isalnum(static_cast<unsigned char>(c))) c = '_';
                           }
                           return name;
                         });

TEST(Theorem, ProductFclp) {
  for (const auto& family : product_families()) {
    EXPECT_TRUE(check_product_fclp(family).empty());
  }
}
