#include <random>

#include <gtest/gtest.h>

#include <coxhurwitz/hurwitz.hpp>

#include "test_systems.hpp"

using namespace coxhurwitz;

namespace {

Factorization fac(const CoxeterSystem& sys, const std::vector<Word>& words) {
  return Factorization::from_words(sys, words);
}

// All n-tuples of reflections whose product is w, by exhaustive search over T^n.
std::vector<Factorization> tuples_with_product(const CoxeterSystem& sys, const Element& w, std::size_t n) {
  auto T = enumerate_reflections(sys).elements();
  std::vector<Factorization> out;
  std::vector<Element> cur;
  auto rec = [&](auto&& self, const Element& prefix) -> void {
    if (cur.size() == n) {
      if (prefix == w) out.emplace_back(sys, cur);
      return;
    }
    for (const auto& t : T) {
      cur.push_back(t);
      self(self, prefix * t);
      cur.pop_back();
    }
  };
  rec(rec, sys.identity());
  return out;
}

std::vector<Factorization> random_reduced(const CoxeterSystem& sys, std::size_t n, std::mt19937& rng) {
  auto T = enumerate_reflections(sys).elements();
  std::uniform_int_distribution<std::size_t> pick(0, T.size() - 1);
  std::vector<Factorization> out;
  while (out.size() < 8) {
    std::vector<Element> f;
    for (std::size_t k = 0; k < n; ++k) f.push_back(T[pick(rng)]);
    if (is_reduced_factorization(f)) out.emplace_back(sys, f);
  }
  return out;
}

}  // namespace

TEST(Factorization, RejectsNonReflections) {
  auto A2 = testsys::A(2);
  EXPECT_THROW(fac(A2, {{1, 2}}), DomainError);
  auto f = fac(A2, {{1}, {2}});
  EXPECT_TRUE(f.product() == A2.element({1, 2}));
  EXPECT_TRUE(fac(A2, {}).product().is_identity());
}

TEST(ApplySigma, DihedralChain) {
  auto sys = testsys::I2(5);
  Element r = sys.element({1}), s = sys.element({2});
  auto f = fac(sys, {{1}, {2}});
  auto g = apply_sigma(f, 1, 1);
  EXPECT_TRUE(g[0] == r * s * r);
  EXPECT_TRUE(g[1] == r);
  EXPECT_TRUE(apply_sigma(g, 1, -1) == f);
  auto h = fac(sys, {{2}, {2, 1, 2}});
  EXPECT_TRUE(apply_sigma(h, 1, 1) == f);
}

TEST(ApplySigma, IndexOutOfRange) {
  auto A2 = testsys::A(2);
  auto f = fac(A2, {{1}, {2}});
  EXPECT_THROW(apply_sigma(f, 0, 1), ContractError);
  EXPECT_THROW(apply_sigma(f, 2, 1), ContractError);
  EXPECT_THROW(apply_braid(f, positive_braid({2})), ContractError);
}

TEST(ApplyBraid, EmptyAndA5Example) {
  auto A5 = testsys::A(5);
  auto f = fac(A5, {{2}, {5}, {5, 3, 5}, {5, 3, 2, 1, 2, 3, 5}, {5, 4, 5}});
  EXPECT_TRUE(apply_braid(f, BraidWord{}) == f);
  EXPECT_TRUE(apply_braid(f, positive_braid({1, 2, 4, 3, 2})) == Factorization::of_generators(A5, {1, 2, 3, 4, 5}));
}

TEST(ApplyBraid, RelationsAndInvariants) {
  std::mt19937 rng(11);
  for (auto sys : {testsys::A(4), testsys::B(3), testsys::affine_A2()}) {
    auto T = sys.is_finite() ? enumerate_reflections(sys).elements() : enumerate_reflections(sys, 5).elements();
    std::uniform_int_distribution<std::size_t> pick(0, T.size() - 1);
    for (int it = 0; it < 15; ++it) {
      Factorization f(sys, {T[pick(rng)], T[pick(rng)], T[pick(rng)], T[pick(rng)]});
      EXPECT_TRUE(apply_braid(f, positive_braid({1, 2, 1})) == apply_braid(f, positive_braid({2, 1, 2})));
      EXPECT_TRUE(apply_braid(f, positive_braid({1, 3})) == apply_braid(f, positive_braid({3, 1})));
      for (std::size_t i = 1; i <= 3; ++i)
        for (int sign : {1, -1}) {
          auto g = apply_sigma(f, i, sign);
          EXPECT_TRUE(g.product() == f.product());
          for (const auto& t : g.entries()) EXPECT_TRUE(is_reflection(t));
        }
    }
  }
}

TEST(ApplyBraid, SubgroupStability) {
  auto B3 = testsys::B(3);
  auto sub = subgroup_closure({B3.element({1}), B3.element({3})});
  auto f = fac(B3, {{1}, {3}, {1}});
  for (std::size_t i : {1u, 2u})
    for (int sign : {1, -1}) {
      auto g = apply_sigma(f, i, sign);
      for (const auto& t : g.entries()) EXPECT_TRUE(sub.contains(t));
    }
}

TEST(BraidWord, AdjacentCancellation) {
  BraidWord b;
  b.apply_after({1, 1});
  b.apply_after({2, 1});
  b.apply_after({2, -1});
  EXPECT_EQ(b.letters, (std::vector<BraidLetter>{{1, 1}}));
  EXPECT_EQ(positive_braid({1, 2}).then(positive_braid({3})), positive_braid({3, 1, 2}));
}

TEST(HurwitzOrbit, A2) {
  auto A2 = testsys::A(2);
  auto orbit = hurwitz_orbit(fac(A2, {{1}, {2}}));
  ASSERT_EQ(orbit.size(), 3u);
  EXPECT_TRUE(orbit[0] == fac(A2, {{1}, {2}}));
  EXPECT_TRUE(orbit[1] == fac(A2, {{2}, {2, 1, 2}}));
  EXPECT_TRUE(orbit[2] == fac(A2, {{1, 2, 1}, {1}}));
}

TEST(HurwitzOrbit, SingleEntry) {
  auto A2 = testsys::A(2);
  auto orbit = hurwitz_orbit(fac(A2, {{1, 2, 1}}));
  ASSERT_EQ(orbit.size(), 1u);
}

TEST(HurwitzOrbit, DihedralAllPairs) {
  auto sys = testsys::I2(5);
  auto orbit = hurwitz_orbit(fac(sys, {{1}, {2}}));
  auto oracle = tuples_with_product(sys, sys.element({1, 2}), 2);
  EXPECT_EQ(orbit.size(), 5u);
  EXPECT_EQ(oracle.size(), 5u);
  for (const auto& f : oracle) EXPECT_NE(std::find(orbit.begin(), orbit.end(), f), orbit.end());
}

TEST(HurwitzOrbit, BudgetCarriesPartialSet) {
  auto A3 = testsys::A(3);
  try {
    hurwitz_orbit(fac(A3, {{1}, {2}, {3}}), 5);
    FAIL() << "expected OrbitBudgetError";
  } catch (const OrbitBudgetError& e) {
    EXPECT_EQ(e.partial().size(), 5u);
  }
  EXPECT_THROW(hurwitz_orbit(fac(A3, {{1}}), 0), ContractError);
}

TEST(HurwitzOrbit, TransitivityAgainstBruteForce) {
  for (auto sys : {testsys::A(3), testsys::B(3), testsys::H3()}) {
    Word c{1, 2, 3};
    auto orbit = hurwitz_orbit(Factorization::of_generators(sys, c));
    auto oracle = tuples_with_product(sys, sys.element(c), 3);
    EXPECT_EQ(orbit.size(), oracle.size());
    for (const auto& f : oracle) EXPECT_NE(std::find(orbit.begin(), orbit.end(), f), orbit.end());
  }
}

TEST(ResolveDescent, A2) {
  auto A2 = testsys::A(2);
  auto r = resolve_descent(A2.element({2}), A2.element({2, 1, 2}), A2.element({2}));
  EXPECT_TRUE(r.t1 == A2.element({2}));
  EXPECT_TRUE(r.t2 == A2.element({1}));
  EXPECT_EQ(r.power, -1);
  EXPECT_TRUE(apply_sigma(fac(A2, {{2, 1, 2}, {2}}), 1, -1) == fac(A2, {{2}, {1}}));
}

TEST(ResolveDescent, B2FromIdentity) {
  auto B2 = testsys::B(2);
  auto r = resolve_descent(B2.identity(), B2.element({1, 2, 1}), B2.element({1}));
  EXPECT_TRUE(r.t1 * r.t2 == B2.element({1, 2}));
  EXPECT_EQ(r.t1.length(), 1u);
  EXPECT_EQ((r.t1 * r.t2).length(), 2u);
}

TEST(ResolveDescent, Preconditions) {
  auto A2 = testsys::A(2);
  EXPECT_THROW(resolve_descent(A2.identity(), A2.element({1}), A2.element({1})), ContractError);
  EXPECT_THROW(resolve_descent(A2.identity(), A2.element({1}), A2.element({2})), ContractError);
}

TEST(ResolveDescent, ExhaustivePeakDrop) {
  for (auto sys : {testsys::A(3), testsys::B(3), testsys::I2(7)}) {
    auto T = enumerate_reflections(sys).elements();
    for (const auto& z : enumerate_group(sys))
      for (const auto& t1 : T)
        for (const auto& t2 : T) {
          if (t1 == t2) continue;
          const std::size_t lz = z.length(), lm = (z * t1).length(), le = (z * t1 * t2).length();
          if (!(lz < lm && le < lm)) continue;
          auto r = resolve_descent(z, t1, t2);
          EXPECT_TRUE(r.t1 * r.t2 == t1 * t2);
          EXPECT_LT((z * r.t1).length(), std::max(lz, le));
          BraidWord b;
          for (long k = 0; k < std::labs(r.power); ++k) b.apply_after({1, r.power > 0 ? 1 : -1});
          EXPECT_TRUE(apply_braid(Factorization(sys, {t1, t2}), b) == Factorization(sys, {r.t1, r.t2}));
        }
  }
}

TEST(Straighten, Examples) {
  auto A2 = testsys::A(2);
  auto res = straighten(fac(A2, {{1, 2, 1}, {1}}), A2.identity());
  EXPECT_TRUE(res.factorization == fac(A2, {{1}, {2}}));
  EXPECT_EQ(res.witness.letters, (std::vector<BraidLetter>{{1, -1}}));
  EXPECT_EQ(res.pivot, 0u);

  auto up = fac(A2, {{1}, {2}});
  auto same = straighten(up, A2.identity());
  EXPECT_TRUE(same.factorization == up);
  EXPECT_TRUE(same.witness.empty());

  auto B2 = testsys::B(2);
  auto valley = straighten(fac(B2, {{1}, {2}}), B2.element({1}));
  EXPECT_TRUE(valley.factorization == fac(B2, {{1}, {2}}));
  EXPECT_EQ(valley.pivot, 1u);
}

TEST(Straighten, RejectsNonReduced) {
  auto A2 = testsys::A(2);
  EXPECT_THROW(straighten(fac(A2, {{1}, {1}}), A2.identity()), ContractError);
}

TEST(Straighten, RandomInputs) {
  std::mt19937 rng(5);
  for (auto sys : {testsys::A(4), testsys::B(3), testsys::H3()}) {
    auto group = elements_up_to_length(sys, 4);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (std::size_t n : {2u, 3u})
      for (const auto& f : random_reduced(sys, n, rng)) {
        const Element& x = group[pick(rng)];
        auto res = straighten(f, x);
        EXPECT_TRUE(apply_braid(f, res.witness) == res.factorization);
        EXPECT_TRUE(res.factorization.product() == f.product());
        auto shape = classify_shape(path_of_factorization(x, res.factorization.entries()));
        ASSERT_TRUE(shape.is_valley());
        EXPECT_EQ(*shape.pivot, res.pivot);
        if (x.is_identity()) {
          EXPECT_EQ(res.pivot, 0u);
        }
        auto again = straighten(res.factorization, x);
        EXPECT_TRUE(again.witness.empty());
      }
  }
}

TEST(InsertionPermutation, Examples) {
  auto A5 = testsys::A(5);
  auto id = extract_insertion_permutation(Factorization::of_generators(A5, {1, 2, 3, 4, 5}), {1, 2, 3, 4, 5});
  EXPECT_TRUE(id.is_identity());

  auto a5_tuple = fac(A5, {{2}, {5}, {5, 3, 5}, {5, 3, 2, 1, 2, 3, 5}, {5, 4, 5}});
  EXPECT_EQ(extract_insertion_permutation(a5_tuple, {1, 2, 3, 4, 5}).values,
            (std::vector<std::size_t>{2, 5, 3, 1, 4}));

  auto A2 = testsys::A(2);
  EXPECT_EQ(extract_insertion_permutation(fac(A2, {{2}, {2, 1, 2}}), {1, 2}).values,
            (std::vector<std::size_t>{2, 1}));
  EXPECT_THROW(extract_insertion_permutation(fac(A2, {{1, 2, 1}, {1}}), {1, 2}), ContractError);
  EXPECT_THROW(extract_insertion_permutation(fac(A2, {{1}, {2}}), {1, 1}), ContractError);
  EXPECT_THROW(InsertionPermutation({1, 1}), ContractError);
}

TEST(PermutationToBraid, Examples) {
  EXPECT_TRUE(permutation_to_braid(InsertionPermutation({1, 2, 3})).empty());
  EXPECT_EQ(permutation_to_braid(InsertionPermutation({2, 1})), positive_braid({1}));
  auto b = permutation_to_braid(InsertionPermutation({2, 5, 3, 1, 4}));
  EXPECT_EQ(b.size(), 5u);
  EXPECT_EQ(b, positive_braid({4, 1, 2, 3, 2}));
  auto A5 = testsys::A(5);
  auto a5_tuple = fac(A5, {{2}, {5}, {5, 3, 5}, {5, 3, 2, 1, 2, 3, 5}, {5, 4, 5}});
  EXPECT_TRUE(apply_braid(a5_tuple, b) == Factorization::of_generators(A5, {1, 2, 3, 4, 5}));
}

TEST(TransitivityBraid, Examples) {
  auto A2 = testsys::A(2);
  auto b = transitivity_braid(fac(A2, {{1, 2, 1}, {1}}), {1, 2});
  EXPECT_TRUE(apply_braid(fac(A2, {{1, 2, 1}, {1}}), b) == fac(A2, {{1}, {2}}));
  EXPECT_TRUE(transitivity_braid(fac(A2, {{1}, {2}}), {1, 2}).empty());

  auto A5 = testsys::A(5);
  auto a5_tuple = fac(A5, {{2}, {5}, {5, 3, 5}, {5, 3, 2, 1, 2, 3, 5}, {5, 4, 5}});
  auto pb = transitivity_braid(a5_tuple, {1, 2, 3, 4, 5});
  EXPECT_TRUE(apply_braid(a5_tuple, pb) == apply_braid(a5_tuple, positive_braid({1, 2, 4, 3, 2})));
}

TEST(TransitivityBraid, WholeOrbits) {
  for (auto sys : {testsys::A(3), testsys::B(3)}) {
    for (Word c : {Word{1, 2, 3}, Word{2, 1, 3}, Word{3, 1, 2}}) {
      auto target = Factorization::of_generators(sys, c);
      for (const auto& f : hurwitz_orbit(target)) EXPECT_TRUE(apply_braid(f, transitivity_braid(f, c)) == target);
    }
  }
}
