#include "contactkirby/presentation.hpp"

#include <random>
#include <set>

#include "contactkirby/exact.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace contactkirby {
namespace {

std::vector<std::int64_t> chain_coeffs(std::int64_t m) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(m), -2);
  c.front() = -3;
  return c;
}

Presentation chain(std::int64_t m, Sign sign) {
  std::vector<Sign> signs{sign};
  return convert(validate_unknot(-m, -(m - 1)), Rational(m + 1), signs);
}

TEST(EvaluateCf, Values) {
  std::vector<std::int64_t> a{-2, -2}, b{-3};
  EXPECT_EQ(evaluate_cf(a), reduce(-3, 2));
  EXPECT_EQ(evaluate_cf(b), Rational(-3));
}

TEST(EvaluateCf, AllMinusTwo) {
  for (std::int64_t m = 1; m <= 10; ++m) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m), -2);
    EXPECT_EQ(evaluate_cf(c), reduce(-(m + 1), m));
    EXPECT_EQ(evaluate_cf(c), oracle::convergent(c));
  }
}

TEST(EvaluateCf, ZeroDenominator) {
  std::vector<std::int64_t> c{-2, 1, 1};  // 1 - 1/1 = 0
  EXPECT_THROW(evaluate_cf(c), InvalidExpansion);
  EXPECT_THROW(evaluate_cf(std::vector<std::int64_t>{}), InvalidExpansion);
}

TEST(ExpandNegative, ChainFamily) {
  EXPECT_EQ(expand_negative(reduce(-3, 2)).coeffs, (std::vector<std::int64_t>{-3, -2}));
  EXPECT_EQ(expand_negative(reduce(-6, 5)).coeffs, (std::vector<std::int64_t>{-3, -2, -2, -2, -2}));
  for (std::int64_t m = 1; m <= 50; ++m)
    EXPECT_EQ(expand_negative(reduce(-(m + 1), m)).coeffs, chain_coeffs(m));
}

TEST(ExpandNegative, MinusOneIsSinglePlainComponent) {
  auto cf = expand_negative(Rational(-1));
  EXPECT_EQ(cf.coeffs, (std::vector<std::int64_t>{-2}));
  EXPECT_EQ(cf.stabilizations(), 0);
}

TEST(ExpandNegative, RejectsNonNegative) {
  EXPECT_THROW(expand_negative(Rational(0)), InvalidInput);
  EXPECT_THROW(expand_negative(reduce(1, 3)), InvalidInput);
}

TEST(ExpandNegative, RoundTripProperty) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    auto r = oracle::random_negative(rng, 200);
    auto a = expand_negative(r).coeffs;
    for (auto x : a) ASSERT_LE(x, -2) << r;
    a.front() += 1;
    ASSERT_EQ(evaluate_cf(a), r);
    ASSERT_EQ(oracle::convergent(a), r);
  }
}

TEST(Convert, ChainAtThreePlusBranch) {
  auto p = chain(3, Sign::plus);
  ASSERT_EQ(p.components.size(), 4u);
  const auto& k = p.components[0];
  EXPECT_EQ(k.knot, validate_unknot(-3, -2));
  EXPECT_EQ(k.contact_sign, Sign::plus);
  EXPECT_FALSE(k.parent);
  EXPECT_EQ(k.stabs_pos + k.stabs_neg, 0);
  const auto& k1 = p.components[1];
  EXPECT_EQ(k1.knot, validate_unknot(-4, -1));
  EXPECT_EQ(k1.contact_sign, Sign::minus);
  EXPECT_EQ(k1.parent, 0u);
  EXPECT_EQ(k1.stabs_pos, 1);
  for (std::size_t i = 2; i < 4; ++i) {
    EXPECT_EQ(p.components[i].knot, validate_unknot(-4, -1));
    EXPECT_EQ(p.components[i].contact_sign, Sign::minus);
    EXPECT_EQ(p.components[i].parent, i - 1);
    EXPECT_EQ(p.components[i].stabs_pos + p.components[i].stabs_neg, 0);
  }
}

TEST(Convert, PlusOneIsSingleComponent) {
  auto p = convert(validate_unknot(-1, 0), Rational(1), {});
  ASSERT_EQ(p.components.size(), 1u);
  EXPECT_EQ(p.components[0].contact_sign, Sign::plus);
  EXPECT_EQ(linking_matrix(p), (IntMatrix{{0}}));
}

TEST(Convert, MinusOneIsSingleComponent) {
  auto p = convert(validate_unknot(-2, 1), Rational(-1), {});
  ASSERT_EQ(p.components.size(), 1u);
  EXPECT_EQ(p.components[0].contact_sign, Sign::minus);
  EXPECT_EQ(linking_matrix(p), (IntMatrix{{-3}}));
}

TEST(Convert, PlusTwoOnStandardUnknot) {
  std::vector<Sign> signs{Sign::plus};
  auto p = convert(validate_unknot(-1, 0), Rational(2), signs);
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(p.components[0].knot, validate_unknot(-1, 0));
  EXPECT_EQ(p.components[0].contact_sign, Sign::plus);
  EXPECT_EQ(p.components[1].knot, validate_unknot(-2, 1));
  EXPECT_EQ(p.components[1].contact_sign, Sign::minus);
  EXPECT_EQ(linking_matrix(p), (IntMatrix{{0, -1}, {-1, -3}}));
}

TEST(Convert, NegativeCoefficientStabilizesTheKnotItself) {
  // -3/2 = [-2, -2]: K once stabilized, then a plain push-off.
  std::vector<Sign> signs{Sign::minus};
  auto p = convert(validate_unknot(-2, 1), reduce(-3, 2), signs);
  ASSERT_EQ(p.components.size(), 2u);
  EXPECT_EQ(p.components[0].knot, validate_unknot(-3, 0));
  EXPECT_FALSE(p.components[0].parent);
  EXPECT_EQ(p.components[0].stabs_neg, 1);
  EXPECT_EQ(p.components[1].knot, validate_unknot(-3, 0));
  EXPECT_EQ(linking_matrix(p), (IntMatrix{{-4, -3}, {-3, -4}}));
}

TEST(Convert, UnitFractionIsPlusPushOffs) {
  auto p = convert(validate_unknot(-2, 1), reduce(1, 3), {});
  ASSERT_EQ(p.components.size(), 3u);
  for (const auto& c : p.components) EXPECT_EQ(c.contact_sign, Sign::plus);
  EXPECT_EQ(linking_matrix(p), (IntMatrix{{-1, -2, -2}, {-2, -1, -2}, {-2, -2, -1}}));
}

TEST(Convert, Errors) {
  auto k = validate_unknot(-2, -1);
  EXPECT_THROW(convert(k, Rational(0), {}), ZeroSurgery);
  EXPECT_THROW(convert(k, Rational(3), {}), InvalidInput);
  std::vector<Sign> two{Sign::plus, Sign::plus};
  EXPECT_THROW(convert(k, Rational(3), two), InvalidInput);
}

TEST(Enumerate, ChainHasTwoBranches) {
  for (std::int64_t m = 1; m <= 6; ++m) {
    auto ps = enumerate_presentations(validate_unknot(-m, -(m - 1)), Rational(m + 1));
    ASSERT_EQ(ps.size(), 2u);
    EXPECT_EQ(ps[0].signs_string(), "+");
    EXPECT_EQ(ps[1].signs_string(), "-");
    EXPECT_EQ(ps[0].components[1].knot.rot(), -m + 2);
    EXPECT_EQ(ps[1].components[1].knot.rot(), -m);
  }
}

TEST(Enumerate, MinusOneHasOne) {
  EXPECT_EQ(enumerate_presentations(validate_unknot(-1, 0), Rational(-1)).size(), 1u);
}

TEST(Enumerate, CountIsTwoToTheStabilizations) {
  // -5/2 = [-3, -2] as c, so a = [-4, -2] and s = 2.
  auto k = validate_unknot(-3, 2);
  EXPECT_EQ(stabilization_count(reduce(-5, 2)), 2);
  auto ps = enumerate_presentations(k, reduce(-5, 2));
  ASSERT_EQ(ps.size(), 4u);
  std::set<std::string> names;
  for (const auto& p : ps) names.insert(p.signs_string());
  EXPECT_EQ(names, (std::set<std::string>{"++", "+-", "-+", "--"}));
  EXPECT_EQ(ps.front().signs_string(), "++");
  EXPECT_EQ(ps.front().components[0].knot, validate_unknot(-5, 4));
}

TEST(LinkingMatrix, ChainAtTwo) {
  EXPECT_EQ(linking_matrix(chain(2, Sign::plus)),
            (IntMatrix{{-1, -2, -2}, {-2, -4, -3}, {-2, -3, -4}}));
  EXPECT_EQ(linking_matrix(chain(1, Sign::plus)), (IntMatrix{{0, -1}, {-1, -3}}));
}

TEST(LinkingMatrix, MatchesClosedFormAndInverse) {
  for (std::int64_t m = 1; m <= 50; ++m) {
    for (auto sign : {Sign::plus, Sign::minus}) {
      auto mat = linking_matrix(chain(m, sign));
      ASSERT_EQ(mat, oracle::closed_form_m(m)) << "m=" << m;
    }
    ASSERT_EQ(invert(oracle::closed_form_m(m)), oracle::closed_form_m_inverse(m)) << "m=" << m;
  }
}

TEST(LinkingMatrix, SymmetricWithTopologicalDiagonal) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::int64_t tb = -1 - static_cast<std::int64_t>(rng() % 6);
    auto k = validate_unknot(tb, tb + 1);
    Rational r = oracle::random_negative(rng, 12);
    if (rng() % 2) r = -r;
    auto s = stabilization_count(r);
    std::vector<Sign> signs(static_cast<std::size_t>(s), Sign::minus);
    auto p = convert(k, r, signs);
    auto m = linking_matrix(p);
    EXPECT_TRUE(m.is_symmetric());
    for (std::size_t i = 0; i < m.size(); ++i)
      EXPECT_EQ(m(i, i), p.components[i].knot.tb() + value(p.components[i].contact_sign));
  }
}

TEST(LinkingMatrix, DeterminantIsHomologyOrder) {
  // Topological p'/q' surgery on an unknot has |H1| = |p'|, and
  // r + tb = (p + q tb)/q.
  std::mt19937_64 rng(123);
  for (int trial = 0; trial < 500; ++trial) {
    std::int64_t tb = -1 - static_cast<std::int64_t>(rng() % 10);
    std::int64_t rot = tb + 1 + 2 * static_cast<std::int64_t>(rng() % (-tb));
    auto k = validate_unknot(tb, rot);
    Rational r = oracle::random_negative(rng, 40);
    if (rng() % 2) r = -r;
    auto s = stabilization_count(r);
    std::vector<Sign> signs;
    for (std::int64_t i = 0; i < s; ++i) signs.push_back(rng() % 2 ? Sign::plus : Sign::minus);
    auto p = convert(k, r, signs);
    BigInt expected = abs(r.num() + r.den() * tb);
    ASSERT_EQ(abs(det(linking_matrix(p))), expected) << "r=" << r << " tb=" << tb;
  }
}

TEST(LinkingVector, ParallelCopies) {
  auto p3 = chain(3, Sign::plus);
  EXPECT_EQ(linking_vector(p3, {validate_unknot(-1, 0), 1}), (IntVector{1, 1, 1, 1}));
  EXPECT_EQ(linking_vector(p3, {validate_unknot(-1, 0), 0}), (IntVector{0, 0, 0, 0}));
  // contact 2-surgery on tb = -3: one +1 knot and a chain of length one
  std::vector<Sign> signs{Sign::plus};
  auto c1 = convert(validate_unknot(-3, -2), Rational(2), signs);
  EXPECT_EQ(linking_vector(c1, {validate_unknot(-1, 0), -1}), (IntVector{-1, -1}));
}

TEST(RotVector, Branches) {
  EXPECT_EQ(rot_vector(chain(3, Sign::plus)), (IntVector{-2, -1, -1, -1}));
  EXPECT_EQ(rot_vector(chain(3, Sign::minus)), (IntVector{-2, -3, -3, -3}));
  EXPECT_EQ(rot_vector(convert(validate_unknot(-3, 2), Rational(1), {})), (IntVector{2}));
}

TEST(Mirror, FlipsSignsAndRotations) {
  auto p = chain(3, Sign::plus);
  auto q = mirror(p);
  EXPECT_EQ(q.signs_string(), "-");
  EXPECT_EQ(rot_vector(q), (IntVector{2, 1, 1, 1}));
  EXPECT_EQ(linking_matrix(q), linking_matrix(p));
  std::vector<Sign> minus{Sign::minus};
  auto direct = convert(p.source_knot.mirror(), Rational(4), minus);
  EXPECT_EQ(rot_vector(direct), rot_vector(q));
}

}  // namespace
}  // namespace contactkirby
