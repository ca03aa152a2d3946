#include <gtest/gtest.h>

#include <random>

#include "njordan/freealg.hpp"
#include "oracle.hpp"

using namespace njordan;

namespace {

constexpr Mode com = Mode::commutative;
constexpr Mode noncom = Mode::noncommutative;

Polynomial poly(Mode mode, std::initializer_list<std::pair<std::initializer_list<unsigned>, long>> terms) {
  Polynomial p(mode);
  for (const auto& [letters, c] : terms) p.add_term(Word(letters, mode), c);
  return p;
}

Polynomial random_poly(Mode mode, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 3), len(0, 2), letter(1, 3), num(-4, 4), den(1, 3);
  Polynomial p(mode);
  const int k = n_terms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<GeneratorId> letters;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) letters.push_back(make_generator_id(letter(rng)));
    const int a = num(rng);
    const int b = den(rng);
    p.add_term(Word(letters, mode), make_rational(a, b));
  }
  return p;
}

} // namespace

TEST(Generator, SingleTermWithUnitCoefficient) {
  EXPECT_EQ(render(generator(1, noncom)), "x1");
  const Polynomial x3 = generator(3, com);
  ASSERT_EQ(x3.size(), 1u);
  EXPECT_EQ(x3.coefficient(Word({3}, com)), 1);
  EXPECT_EQ(x3.mode(), com);
}

TEST(Generator, RejectsIndexOutsideCap) {
  EXPECT_THROW(generator(0, noncom), precondition_error);
  EXPECT_THROW(generator(9, noncom), precondition_error);
  EXPECT_NO_THROW(generator(9, noncom, 9));
}

TEST(Add, CancelsToZeroAndMerges) {
  EXPECT_TRUE(add(poly(noncom, {{{1}, 1}}), poly(noncom, {{{1}, -1}})).is_zero());
  EXPECT_EQ(render(add(generator(1, noncom), scale(2, generator(2, noncom)))), "x1 + 2*x2");
  EXPECT_THROW(add(generator(1, com), generator(1, noncom)), mode_mismatch);
}

TEST(Scale, Examples) {
  EXPECT_TRUE(scale(0, generator(1, noncom)).is_zero());
  EXPECT_EQ(render(scale(-1, poly(noncom, {{{1, 2}, 1}}))), "-x1*x2");
  EXPECT_EQ(render(scale(make_rational(1, 2), poly(noncom, {{{1}, 3}}))), "3/2*x1");
}

TEST(Mul, ConcatenationVersusSortedMerge) {
  EXPECT_EQ(render(mul(generator(2, noncom), generator(1, noncom))), "x2*x1");
  EXPECT_EQ(render(mul(generator(2, com), generator(1, com))), "x1*x2");
  const Polynomial s = sum_of_generators({1, 2}, noncom);
  EXPECT_EQ(render(mul(s, s)), "x1*x1 + x1*x2 + x2*x1 + x2*x2");
  EXPECT_THROW(mul(generator(1, com), generator(1, noncom)), mode_mismatch);
}

TEST(Pow, Examples) {
  const Polynomial s2n = sum_of_generators({1, 2}, noncom);
  const Polynomial sq = pow(s2n, 2);
  EXPECT_EQ(sq.size(), 4u);
  for (const auto& [w, c] : sq.terms()) EXPECT_EQ(c, 1);
  EXPECT_EQ(render(pow(sum_of_generators({1, 2}, com), 2)), "x1*x1 + 2*x1*x2 + x2*x2");
  EXPECT_EQ(pow(s2n, 0), unit(noncom));
  EXPECT_THROW(pow(s2n, -1), precondition_error);
}

TEST(Pow, FourLettersFourthPowerMatchesEnumeration) {
  const Polynomial p = pow(sum_of_generators(VarSet::full(4), noncom), 4);
  oracle::TermTable expected;
  for (const auto& s : oracle::all_sequences({1, 2, 3, 4}, 4)) oracle::bump(expected, oracle::word_text(s, false), 1);
  ASSERT_EQ(expected.size(), 256u);
  EXPECT_EQ(oracle::table_of(p), expected);
}

TEST(Pow, CommutativeMatchesEnumeration) {
  const Polynomial p = pow(sum_of_generators(VarSet::full(3), com), 4);
  oracle::TermTable expected;
  for (const auto& s : oracle::all_sequences({1, 2, 3}, 4)) oracle::bump(expected, oracle::word_text(s, true), 1);
  EXPECT_EQ(oracle::table_of(p), expected);
}

TEST(SumOfGenerators, Examples) {
  EXPECT_EQ(render(sum_of_generators({1, 2}, noncom)), "x1 + x2");
  EXPECT_EQ(render(sum_of_generators({3}, noncom)), "x3");
  EXPECT_THROW(sum_of_generators(VarSet{}, noncom), precondition_error);
}

TEST(Varset, Examples) {
  EXPECT_EQ(varset(Word({1, 2, 1}, noncom)), (VarSet{1, 2}));
  EXPECT_TRUE(varset(Word{}).empty());
  EXPECT_EQ(varset(Word({3}, noncom)), (VarSet{3}));
}

TEST(ExactVarsetComponent, Examples) {
  const Polynomial sq = pow(sum_of_generators({1, 2}, noncom), 2);
  EXPECT_EQ(render(exact_varset_component(sq, {1, 2})), "x1*x2 + x2*x1");

  const Polynomial with_const = add(sq, scale(5, unit(noncom)));
  EXPECT_EQ(render(exact_varset_component(with_const, VarSet{})), "5");

  // 27 words of length 3 over three letters; the 3! = 6 using every letter survive.
  const Polynomial cube = pow(sum_of_generators(VarSet::full(3), noncom), 3);
  oracle::TermTable expected;
  for (const auto& s : oracle::all_sequences({1, 2, 3}, 3))
    if (oracle::used(s).size() == 3) oracle::bump(expected, oracle::word_text(s, false), 1);
  ASSERT_EQ(expected.size(), 6u);
  EXPECT_EQ(oracle::table_of(exact_varset_component(cube, VarSet::full(3))), expected);
}

TEST(MultilinearComponent, Examples) {
  EXPECT_EQ(render(multilinear_component(pow(sum_of_generators({1, 2}, noncom), 2), 2)),
            "x1*x2 + x2*x1");
  EXPECT_TRUE(multilinear_component(poly(com, {{{1, 1}, 5}}), 2).is_zero());

  const Polynomial p = multilinear_component(pow(sum_of_generators(VarSet::full(4), noncom), 4), 4);
  oracle::TermTable expected;
  for (const auto& s : oracle::all_sequences({1, 2, 3, 4}, 4))
    if (oracle::used(s).size() == 4) oracle::bump(expected, oracle::word_text(s, false), 1);
  ASSERT_EQ(expected.size(), 24u);
  EXPECT_EQ(oracle::table_of(p), expected);
}

TEST(MultilinearComponent, FactorialCount) {
  for (unsigned n = 2; n <= 6; ++n) {
    const Polynomial nc = multilinear_component(pow(sum_of_generators(VarSet::full(n), noncom), n), n);
    EXPECT_EQ(Coefficient(nc.size()), factorial(n)) << n;
    for (const auto& [w, c] : nc.terms()) EXPECT_EQ(c, 1);
    const Polynomial cm = multilinear_component(pow(sum_of_generators(VarSet::full(n), com), n), n);
    ASSERT_EQ(cm.size(), 1u);
    EXPECT_EQ(cm.terms().begin()->second, factorial(n));
    EXPECT_EQ(cm, exact_varset_component(pow(sum_of_generators(VarSet::full(n), com), n), VarSet::full(n)));
  }
}

TEST(Render, OrderAndFractions) {
  Polynomial p(noncom);
  p.add_term(Word({2, 1}, noncom), make_rational(-3, 2));
  p.add_term(Word({3}, noncom), 1);
  p.add_term(Word{}, 2);
  EXPECT_EQ(render(p), "2 + x3 - 3/2*x2*x1");
  EXPECT_EQ(render(Polynomial(noncom)), "0");
}

// Property suites.

TEST(RingAxioms, RandomPolynomialsBothModes) {
  std::mt19937_64 rng(20261019);
  for (Mode mode : {com, noncom}) {
    for (int i = 0; i < 1000; ++i) {
      const Polynomial p = random_poly(mode, rng), q = random_poly(mode, rng), r = random_poly(mode, rng);
      ASSERT_EQ(mul(mul(p, q), r), mul(p, mul(q, r)));
      ASSERT_EQ(mul(p, add(q, r)), add(mul(p, q), mul(p, r)));
      ASSERT_EQ(mul(add(p, q), r), add(mul(p, r), mul(q, r)));
      ASSERT_EQ(add(p, q), add(q, p));
      ASSERT_TRUE(sub(p, p).is_zero());
    }
  }
}

TEST(ModeCoherence, CommutativeMulCommutesNoncommutativeHasWitness) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = random_poly(com, rng), q = random_poly(com, rng);
    ASSERT_EQ(mul(p, q), mul(q, p));
  }
  EXPECT_NE(mul(generator(1, noncom), generator(2, noncom)), mul(generator(2, noncom), generator(1, noncom)));
}

TEST(Canonicalization, Idempotent) {
  std::mt19937_64 rng(11);
  for (Mode mode : {com, noncom}) {
    for (int i = 0; i < 1000; ++i) {
      const Polynomial p = mul(random_poly(mode, rng), random_poly(mode, rng));
      Polynomial again(mode);
      for (const auto& [w, c] : p.terms()) {
        ASSERT_TRUE(w.is_canonical(mode));
        ASSERT_NE(sgn(c), 0);
        again.add_term(Word(w.letters(), mode), c);
      }
      ASSERT_EQ(again, p);
    }
  }
}

TEST(Counting, PowerOfGeneratorSumHasKToTheNWords) {
  for (unsigned k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 6; ++n) {
      const Polynomial p = pow(sum_of_generators(VarSet::full(k), noncom), n);
      std::size_t expected = 1;
      for (int i = 0; i < n; ++i) expected *= k;
      ASSERT_EQ(p.size(), expected) << "k=" << k << " n=" << n;
      for (const auto& [w, c] : p.terms()) ASSERT_EQ(c, 1);
    }
  }
}

TEST(Partition, ComponentsReassemble) {
  std::mt19937_64 rng(3);
  for (Mode mode : {com, noncom}) {
    for (int i = 0; i < 300; ++i) {
      const Polynomial p = mul(random_poly(mode, rng), random_poly(mode, rng));
      Polynomial sum(mode);
      for (std::uint32_t m = 0; m < 8; ++m) sum = add(sum, exact_varset_component(p, VarSet(m)));
      ASSERT_EQ(sum, p);
    }
  }
}

TEST(Parallel, ThreadedMulMatchesSequential) {
  const Polynomial s = sum_of_generators(VarSet::full(4), noncom);
  const Polynomial p = pow(s, 3);
  EXPECT_EQ(mul(p, s, 4), mul(p, s, 1));
  EXPECT_EQ(pow(s, 4, 3), pow(s, 4));
}
