#include <gtest/gtest.h>

#include <limits>
#include <vector>

#include "mdi/exp_poly.hpp"

using mdi::ExpPoly;

namespace {

std::vector<ExpPoly> all_polys(std::size_t len, mdi::Coeff max_c) {
  std::vector<ExpPoly> out;
  std::vector<mdi::Coeff> c(len, 0);
  for (;;) {
    out.emplace_back(c);
    std::size_t k = 0;
    while (k < len && c[k] == max_c) c[k++] = 0;
    if (k == len) break;
    ++c[k];
  }
  return out;
}

}  // namespace

TEST(ExpPoly, CanonicalForm) {
  ExpPoly p(std::vector<mdi::Coeff>{1, 2, 0, 0});
  EXPECT_EQ(p.coeffs().size(), 2u);
  EXPECT_EQ(p, (ExpPoly{1, 2}));
  EXPECT_TRUE(ExpPoly(std::vector<mdi::Coeff>{0, 0}).is_zero());
  EXPECT_EQ(ExpPoly{}.degree(), -1);
  EXPECT_EQ(ExpPoly{}.weight(), 0u);
  EXPECT_EQ((ExpPoly{3, 0, 1}).degree(), 2);
  EXPECT_EQ((ExpPoly{3, 0, 1}).weight(), 4u);
}

TEST(ExpPoly, Add) {
  ExpPoly f{1, 4, 2};
  EXPECT_EQ(add(ExpPoly{}, f), f);
  EXPECT_EQ(add(ExpPoly{1, 1}, ExpPoly{1, 1}), (ExpPoly{2, 2}));
  EXPECT_EQ(add(ExpPoly{0, 0, 1}, ExpPoly{3, 2}), (ExpPoly{3, 2, 1}));
}

TEST(ExpPoly, Shift) {
  EXPECT_EQ(shift(ExpPoly{}, 5), ExpPoly{});
  EXPECT_EQ(shift(ExpPoly{1, 1}, 1), (ExpPoly{0, 1, 1}));
  EXPECT_EQ(shift(ExpPoly{2}, 3), ExpPoly::term(2, 3));
}

TEST(ExpPoly, Scale) {
  ExpPoly f{5, 0, 1};
  EXPECT_EQ(scale(1, f), f);
  EXPECT_EQ(scale(2, ExpPoly{1, 1}), (ExpPoly{2, 2}));
  EXPECT_EQ(scale(3, ExpPoly{}), ExpPoly{});
}

TEST(ExpPoly, Mul) {
  ExpPoly f{2, 3};
  EXPECT_EQ(mul(ExpPoly{1}, f), f);
  EXPECT_EQ(mul(ExpPoly{1, 1}, ExpPoly{1, 1}), (ExpPoly{1, 2, 1}));
  EXPECT_EQ(mul(ExpPoly{2}, ExpPoly{0, 1}), (ExpPoly{0, 2}));
}

TEST(ExpPoly, CmpTotal) {
  ExpPoly f{1, 2};
  EXPECT_EQ(cmp_total(f, f), std::strong_ordering::equal);
  EXPECT_EQ(cmp_total(ExpPoly{3, 2}, ExpPoly{0, 0, 1}), std::strong_ordering::less);
  EXPECT_EQ(cmp_total(ExpPoly{2}, ExpPoly{0, 1}), std::strong_ordering::less);
}

TEST(ExpPoly, Precedes) {
  EXPECT_TRUE(precedes(ExpPoly{2}, ExpPoly{1, 1}));
  EXPECT_FALSE(precedes(ExpPoly{2}, ExpPoly{0, 1}));
  EXPECT_FALSE(precedes(ExpPoly{0, 1}, ExpPoly{2}));
  EXPECT_TRUE(precedes(ExpPoly{2}, ExpPoly{0, 2}));
  EXPECT_TRUE(precedes(ExpPoly{}, ExpPoly{}));
  EXPECT_TRUE(precedes(ExpPoly{}, ExpPoly{1}));
  EXPECT_FALSE(precedes(ExpPoly{1}, ExpPoly{}));
}

TEST(ExpPoly, OverflowIsReported) {
  const auto top = std::numeric_limits<mdi::Coeff>::max();
  EXPECT_THROW(add(ExpPoly{top}, ExpPoly{1}), mdi::OverflowError);
  EXPECT_THROW(scale(2, ExpPoly{top}), mdi::OverflowError);
  EXPECT_THROW(mul(ExpPoly{top}, ExpPoly{2}), mdi::OverflowError);
  EXPECT_THROW(shift(ExpPoly{1}, mdi::kMaxDegree + 1), mdi::OverflowError);
  EXPECT_THROW(ExpPoly::term(1, mdi::kMaxDegree + 1), mdi::OverflowError);
  EXPECT_NO_THROW(ExpPoly::term(1, mdi::kMaxDegree));
}

TEST(ExpPolyProperties, PrecedesIsPartialOrder) {
  auto polys = all_polys(4, 3);  // deg <= 3, coefficients <= 3
  for (const auto& f : polys) {
    EXPECT_TRUE(precedes(f, f));
    for (const auto& g : polys)
      if (precedes(f, g) && precedes(g, f)) EXPECT_EQ(f, g);
  }
  auto small = all_polys(3, 2);
  for (const auto& f : small)
    for (const auto& g : small)
      for (const auto& h : small)
        if (precedes(f, g) && precedes(g, h)) EXPECT_TRUE(precedes(f, h));
}

TEST(ExpPolyProperties, CmpTotalIsCompatibleTotalOrder) {
  auto polys = all_polys(3, 2);
  for (const auto& f : polys)
    for (const auto& g : polys) {
      auto c = cmp_total(f, g);
      EXPECT_EQ(c == 0, f == g);
      EXPECT_TRUE(cmp_total(g, f) == (0 <=> c));
      if (c < 0) {
        EXPECT_TRUE(cmp_total(shift(f, 1), shift(g, 1)) < 0);
        for (const auto& h : polys) EXPECT_TRUE(cmp_total(f + h, g + h) < 0);
      }
      for (const auto& h : polys)
        if (cmp_total(f, g) < 0 && cmp_total(g, h) < 0) EXPECT_TRUE(cmp_total(f, h) < 0);
    }
}

TEST(ExpPolyProperties, PrecedesCompatibility) {
  auto polys = all_polys(3, 2);
  for (const auto& f1 : polys)
    for (const auto& g1 : polys) {
      if (!precedes(f1, g1)) continue;
      EXPECT_TRUE(precedes(shift(f1, 1), shift(g1, 1)));
      EXPECT_LE(f1.degree(), g1.degree());
      EXPECT_LE(f1.weight(), g1.weight());
      for (const auto& f2 : polys)
        for (const auto& g2 : polys)
          if (precedes(f2, g2)) EXPECT_TRUE(precedes(f1 + f2, g1 + g2));
    }
}

TEST(ExpPolyProperties, ClosureMovesAreMonotone) {
  auto polys = all_polys(3, 3);
  for (const auto& f : polys) {
    for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(precedes(f, shift(f, i)));
    for (const auto& t : all_polys(2, 2)) EXPECT_TRUE(precedes(f, f + t));
  }
}
