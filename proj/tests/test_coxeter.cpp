#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <coxhurwitz/coxeter.hpp>

#include "test_systems.hpp"

using namespace coxhurwitz;

namespace {

ScalarMatrix transpose(const ScalarMatrix& m) {
  ScalarMatrix t(m.field(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) t(i, j) = m(j, i);
  return t;
}

Element random_element(const CoxeterSystem& sys, std::mt19937& rng, int max_len) {
  std::uniform_int_distribution<int> gen(1, static_cast<int>(sys.rank()));
  std::uniform_int_distribution<int> len(0, max_len);
  Word w(static_cast<std::size_t>(len(rng)));
  for (auto& s : w) s = gen(rng);
  return sys.element(w);
}

// All words of length `len` over 1..rank evaluating to w, lexicographically first.
Word lex_first_reduced_word(const Element& w) {
  const int n = static_cast<int>(w.system().rank());
  const std::size_t len = w.length();
  Word word(len, 1);
  for (;;) {
    if (w.system().element(word) == w) return word;
    std::size_t k = len;
    while (k > 0 && word[k - 1] == n) word[--k] = 1;
    if (k == 0) break;
    ++word[k - 1];
  }
  return {};
}

}  // namespace

TEST(CoxeterSystem, A2BilinearForm) {
  auto A2 = testsys::A(2);
  EXPECT_TRUE(A2.bilinear_form()(0, 1) == Scalar::rational(A2.field(), mpq_class(-1, 2)));
  EXPECT_TRUE(A2.bilinear_form()(0, 0).is_one());
  EXPECT_EQ(A2.level(), 1u);
}

TEST(CoxeterSystem, I2FiveUsesLevelFive) {
  auto H2 = testsys::I2(5);
  EXPECT_EQ(H2.level(), 5u);
  EXPECT_TRUE(H2.is_finite());
}

TEST(CoxeterSystem, A3SimpleReflectionsAreIntegral) {
  auto A3 = testsys::A(3);
  EXPECT_EQ(A3.field().degree(), 1u);
  for (int s = 1; s <= 3; ++s) {
    const auto& m = A3.simple_reflection_matrix(s);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_EQ(m(i, j).coefficients()[0].get_den(), 1) << s;
  }
}

TEST(CoxeterSystem, ValidationErrors) {
  EXPECT_THROW(CoxeterSystem::from_matrix({{1, 3}, {4, 1}}), ValidationError);
  EXPECT_THROW(CoxeterSystem::from_matrix({{1, 1}, {1, 1}}), ValidationError);
  EXPECT_THROW(CoxeterSystem::from_matrix({{2, 3}, {3, 1}}), ValidationError);
  EXPECT_THROW(CoxeterSystem::from_matrix({}), ValidationError);
  EXPECT_THROW(CoxeterSystem::from_matrix({{1, 3}, {3}}), ValidationError);
}

TEST(CoxeterSystem, Finiteness) {
  EXPECT_TRUE(testsys::A(4).is_finite());
  EXPECT_TRUE(testsys::B(3).is_finite());
  EXPECT_TRUE(testsys::H3().is_finite());
  EXPECT_TRUE(testsys::I2(7).is_finite());
  EXPECT_FALSE(testsys::I2(infinity).is_finite());
  EXPECT_FALSE(testsys::affine_A2().is_finite());
  // affine B2 / C2~: 4, 4 on a path
  EXPECT_FALSE(CoxeterSystem::from_matrix({{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}).is_finite());
}

TEST(CoxeterSystem, SimpleReflectionsAreInvolutionsWithCorrectOrders) {
  for (auto sys : {testsys::B(3), testsys::H3(), testsys::I2(7), testsys::A(4)}) {
    const int n = static_cast<int>(sys.rank());
    for (int s = 1; s <= n; ++s) {
      EXPECT_TRUE((sys.generator(s) * sys.generator(s)).is_identity());
      for (int t = s + 1; t <= n; ++t) {
        Element st = sys.generator(s) * sys.generator(t);
        Element p = st;
        unsigned order = 1;
        while (!p.is_identity()) {
          p = p * st;
          ++order;
        }
        EXPECT_EQ(order, sys.entry(s, t));
      }
    }
  }
}

TEST(Element, FromWord) {
  auto A2 = testsys::A(2);
  EXPECT_TRUE(A2.element({}).is_identity());
  EXPECT_TRUE(A2.element({1, 1}).is_identity());
  EXPECT_TRUE(A2.element({1, 2, 1}) == A2.element({2, 1, 2}));
  EXPECT_FALSE(A2.element({1, 2}) == A2.element({2, 1}));
  EXPECT_THROW(A2.element({3}), DomainError);
  EXPECT_THROW(A2.element({0}), DomainError);
}

TEST(Element, MultiplyAndInverse) {
  auto A2 = testsys::A(2);
  Element a = A2.element({1, 2}), b = A2.element({2});
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_TRUE((a * b).inverse() == b.inverse() * a.inverse());
  EXPECT_TRUE((a * a * a).is_identity());
  EXPECT_THROW(a * testsys::A(2).identity(), ContractError);
}

TEST(Element, Lengths) {
  auto A2 = testsys::A(2);
  EXPECT_EQ(A2.identity().length(), 0u);
  Element w0 = A2.element({2, 1, 2});
  EXPECT_EQ(w0.length(), 3u);
  EXPECT_EQ(w0.canonical_word(), (Word{1, 2, 1}));
  EXPECT_EQ(longest_element(testsys::I2(5)).length(), 5u);
  EXPECT_EQ(longest_element(testsys::B(3)).length(), 9u);
  EXPECT_EQ(longest_element(testsys::H3()).length(), 15u);
}

TEST(Element, GroupOrders) {
  EXPECT_EQ(enumerate_group(testsys::A(2)).size(), 6u);
  EXPECT_EQ(enumerate_group(testsys::I2(5)).size(), 10u);
  EXPECT_EQ(enumerate_group(testsys::A(3)).size(), 24u);
  EXPECT_EQ(enumerate_group(testsys::B(3)).size(), 48u);
  EXPECT_EQ(enumerate_group(testsys::H3()).size(), 120u);
  EXPECT_THROW(enumerate_group(testsys::affine_A2()), UnsupportedError);
}

TEST(Element, AffineBallGrowth) {
  // Affine A2: number of elements of length k is 1, 3, 6, 9, 12, ... (3k for k >= 1).
  auto elems = elements_up_to_length(testsys::affine_A2(), 5);
  std::vector<std::size_t> counts(6, 0);
  for (const auto& e : elems) ++counts[e.length()];
  EXPECT_EQ(counts, (std::vector<std::size_t>{1, 3, 6, 9, 12, 15}));
}

TEST(Element, Reflections) {
  auto A2 = testsys::A(2);
  EXPECT_TRUE(is_reflection(A2.element({1})));
  EXPECT_TRUE(reflection_root(A2.element({1})) ==
              (Root{{Scalar::one(A2.field()), Scalar::zero(A2.field())}}));
  EXPECT_FALSE(is_reflection(A2.element({1, 2})));
  EXPECT_FALSE(is_reflection(A2.identity()));
  EXPECT_TRUE(is_reflection(A2.element({1, 2, 1})));
  EXPECT_TRUE(reflection_root(A2.element({1, 2, 1})) ==
              (Root{{Scalar::one(A2.field()), Scalar::one(A2.field())}}));
  EXPECT_THROW(reflection_root(A2.element({1, 2})), DomainError);
  // odd length, not a reflection
  EXPECT_FALSE(is_reflection(testsys::A(3).element({1, 2, 3})));
}

TEST(ElementProperties, DescentMatchesLengthChange) {
  std::mt19937 rng(4);
  for (auto sys : {testsys::B(3), testsys::H3(), testsys::affine_A2(), testsys::I2(infinity)}) {
    for (int it = 0; it < 30; ++it) {
      Element w = random_element(sys, rng, 10);
      for (int s = 1; s <= static_cast<int>(sys.rank()); ++s) {
        std::size_t l = w.length(), ls = w.times_simple(s).length();
        EXPECT_TRUE(ls == l + 1 || ls + 1 == l);
        EXPECT_EQ(ls < l, w.has_right_descent(s));
        EXPECT_EQ(w.simple_times(s).length() < l, w.has_left_descent(s));
      }
    }
  }
}

TEST(ElementProperties, CanonicalWordRoundTripsAndIsShortLex) {
  for (auto sys : {testsys::A(3), testsys::I2(5), testsys::B(3)}) {
    for (const auto& w : enumerate_group(sys)) {
      const Word& word = w.canonical_word();
      EXPECT_TRUE(sys.element(word) == w);
      EXPECT_EQ(word.size(), w.length());
      if (word.size() <= 6) EXPECT_EQ(word, lex_first_reduced_word(w));
    }
  }
}

TEST(ElementProperties, PreservesBilinearForm) {
  std::mt19937 rng(9);
  for (auto sys : {testsys::H3(), testsys::B(3), testsys::affine_A2()}) {
    const auto& B = sys.bilinear_form();
    for (int it = 0; it < 10; ++it) {
      Element w = random_element(sys, rng, 8);
      EXPECT_TRUE(transpose(w.matrix()) * B * w.matrix() == B);
    }
  }
}

TEST(ElementProperties, ConjugatesAreReflections) {
  std::mt19937 rng(5);
  for (auto sys : {testsys::H3(), testsys::affine_A2(), testsys::B(4)}) {
    std::uniform_int_distribution<int> gen(1, static_cast<int>(sys.rank()));
    for (int it = 0; it < 25; ++it) {
      Element u = random_element(sys, rng, 7);
      Element t = conjugate(u, sys.generator(gen(rng)));
      EXPECT_TRUE(is_reflection(t));
      Root r = reflection_root(t);
      EXPECT_EQ(r.sign(), Sign::positive);
      // s_alpha(v) = v - 2 B(alpha, v) alpha; check on alpha itself: s_alpha(alpha) = -alpha
      std::vector<Scalar> image = t.matrix().apply(r.coordinates);
      for (std::size_t k = 0; k < image.size(); ++k) EXPECT_TRUE(image[k] == -r.coordinates[k]);
      EXPECT_EQ((t.matrix() - ScalarMatrix::identity(sys.field(), sys.rank())).rank(), 1u);
    }
  }
}
