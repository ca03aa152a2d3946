#include <gtest/gtest.h>

#include <random>

#include "njordan/concrete.hpp"

using namespace njordan;

namespace {

constexpr Mode com = Mode::commutative;
constexpr Mode noncom = Mode::noncommutative;

VectorElem vec(std::initializer_list<long> xs) {
  VectorElem v;
  for (long x : xs) v.coords.emplace_back(x);
  return v;
}

// Matrix units of M2 in basis order E11, E12, E21, E22.
const VectorElem E11 = vec({1, 0, 0, 0});
const VectorElem E12 = vec({0, 1, 0, 0});
const VectorElem E21 = vec({0, 0, 1, 0});
const VectorElem E22 = vec({0, 0, 0, 1});

JordanConfig config(unsigned n, Mode a, Mode b) {
  JordanConfig cfg;
  cfg.n = n;
  cfg.a_mode = a;
  cfg.b_mode = b;
  return cfg;
}

/// Plain 2x2 product on [[a, b], [c, d]] stored as (a, b, c, d).
VectorElem matmul(const VectorElem& x, const VectorElem& y) {
  const auto& p = x.coords;
  const auto& q = y.coords;
  return VectorElem(std::vector<Coefficient>{p[0] * q[0] + p[1] * q[2], p[0] * q[1] + p[1] * q[3],
                                             p[2] * q[0] + p[3] * q[2], p[2] * q[1] + p[3] * q[3]});
}

Polynomial random_poly(Mode mode, unsigned letters, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_terms(0, 3), len(1, 3), letter(1, static_cast<int>(letters)),
      num(-4, 4);
  Polynomial p(mode);
  const int k = n_terms(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<GeneratorId> w;
    const int l = len(rng);
    for (int i = 0; i < l; ++i) w.push_back(make_generator_id(letter(rng)));
    p.add_term(Word(w, mode), num(rng));
  }
  return p;
}

} // namespace

TEST(BuildAlgebra, BuiltinFlags) {
  const StructureAlgebra d3 = diagonal_algebra(3);
  EXPECT_TRUE(d3.commutative());
  EXPECT_TRUE(d3.associative());
  const StructureAlgebra m2 = matrix_algebra_2();
  EXPECT_FALSE(m2.commutative());
  EXPECT_TRUE(truncated_polynomial_algebra(4).commutative());
  EXPECT_EQ(builtin_algebra("trunc4").dim(), 4u);
  EXPECT_EQ(builtin_algebra("diag3").name(), "diag3");
  EXPECT_THROW(builtin_algebra("diag5"), precondition_error);
  EXPECT_THROW(builtin_algebra("foo"), precondition_error);
}

TEST(BuildAlgebra, RejectsNonAssociativeWithWitness) {
  // Dimension 2: e1*e1 = e2, e2*e1 = e1, everything else 0.
  // (e1 e1) e1 = e2 e1 = e1 but e1 (e1 e1) = e1 e2 = 0.
  std::vector<Coefficient> c(8, Coefficient(0));
  c[(0 * 2 + 0) * 2 + 1] = 1;
  c[(1 * 2 + 0) * 2 + 0] = 1;
  try {
    build_algebra(2, c);
    FAIL() << "expected non_associative_error";
  } catch (const non_associative_error& e) {
    EXPECT_EQ(e.witness[0], 0u);
    EXPECT_EQ(e.witness[1], 0u);
    EXPECT_EQ(e.witness[2], 0u);
  }
  EXPECT_THROW(build_algebra(2, std::vector<Coefficient>(7)), shape_error);
}

TEST(Multiply, Examples) {
  EXPECT_EQ(multiply(diagonal_algebra(2), vec({1, 2}), vec({3, 4})), vec({3, 8}));
  EXPECT_EQ(multiply(matrix_algebra_2(), E12, E21), E11);
  const StructureAlgebra t3 = truncated_polynomial_algebra(3);
  EXPECT_TRUE(power(t3, vec({0, 1, 0}), 3).is_zero());
  EXPECT_EQ(power(t3, vec({0, 1, 0}), 2), vec({0, 0, 1}));
  EXPECT_THROW(multiply(t3, vec({1, 2}), vec({1, 2, 3})), shape_error);
}

TEST(Multiply, MatchesDirectMatrixProduct) {
  std::mt19937_64 rng(1);
  const StructureAlgebra m2 = matrix_algebra_2();
  for (int i = 0; i < 200; ++i) {
    const VectorElem a = random_vector(4, rng), b = random_vector(4, rng);
    ASSERT_EQ(m2.multiply(a, b), matmul(a, b));
  }
}

TEST(AlgebraFile, RoundTripAndErrors) {
  const StructureAlgebra m2 = matrix_algebra_2();
  const StructureAlgebra back = parse_algebra(write_algebra(m2), "m2");
  EXPECT_EQ(back.constants(), m2.constants());
  EXPECT_EQ(back.labels(), m2.labels());

  const std::string text = "njordan-algebra v1\n# Q[t]/(t^2)\ndim 2\n1 0  0 1\n0 1  0 0\n";
  const StructureAlgebra dual = parse_algebra(text);
  EXPECT_TRUE(dual.commutative());
  EXPECT_EQ(dual.multiply(vec({0, 1}), vec({0, 1})), vec({0, 0}));

  EXPECT_THROW(parse_algebra("dim 1\n1\n"), precondition_error);
  EXPECT_THROW(parse_algebra("njordan-algebra v1\ndim 2\n1 0 0\n"), shape_error);
  EXPECT_THROW(parse_algebra("njordan-algebra v1\ndim 1\n1/0\n"), precondition_error);
}

TEST(EvalAPoly, Examples) {
  const StructureAlgebra m2 = matrix_algebra_2();
  Polynomial x1x2(noncom);
  x1x2.add_term(Word({1, 2}, noncom), 1);
  EXPECT_EQ(eval_a_poly(x1x2, {E12, E21}, m2), E11);

  const StructureAlgebra d2 = diagonal_algebra(2);
  EXPECT_EQ(eval_a_poly(pow(sum_of_generators({1, 2}, com), 2), {vec({1, 0}), vec({0, 1})}, d2),
            vec({1, 1}));
  EXPECT_TRUE(eval_a_poly(Polynomial(noncom), {}, m2).is_zero());
}

TEST(EvalAPoly, Errors) {
  const StructureAlgebra m2 = matrix_algebra_2();
  EXPECT_THROW(eval_a_poly(generator(2, noncom), {E11}, m2), precondition_error);
  EXPECT_THROW(eval_a_poly(generator(1, com), {E11}, m2), mode_mismatch);
}

TEST(EvalBPoly, Examples) {
  const StructureAlgebra m2 = matrix_algebra_2();
  const BPolynomial h1 = lift(generator(1, noncom), noncom);
  EXPECT_EQ(eval_b_poly(h1, {E12}, LinearMapMatrix::identity(4), m2, m2), E12);

  JordanConfig cfg = config(2, noncom, noncom);
  const BPolynomial plain = plain_defect(cfg);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    const Assignment x{random_vector(4, rng), random_vector(4, rng)};
    EXPECT_TRUE(eval_b_poly(plain, x, LinearMapMatrix::identity(4), m2, m2).is_zero());
  }
  // (E12 E21)^T - E12^T E21^T = E11 - E21 E12 = E11 - E22.
  EXPECT_EQ(eval_b_poly(plain, {E12, E21}, transpose_map_m2(), m2, m2), E11 - E22);
  EXPECT_THROW(eval_b_poly(plain, {E12, E21}, LinearMapMatrix(3, 4), m2, m2), shape_error);
}

TEST(JordanDefectConcrete, Examples) {
  const StructureAlgebra m2 = matrix_algebra_2();
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    const VectorElem a = random_vector(4, rng);
    for (unsigned n = 1; n <= 4; ++n)
      ASSERT_TRUE(jordan_defect_concrete(LinearMapMatrix::identity(4), m2, m2, a, n).is_zero());
    // (a^2)^T = (a^T)^2, checked with plain matrix arithmetic too.
    const VectorElem at = transpose_map_m2().apply(a);
    ASSERT_EQ(transpose_map_m2().apply(matmul(a, a)), matmul(at, at));
    ASSERT_TRUE(jordan_defect_concrete(transpose_map_m2(), m2, m2, a, 2).is_zero());
  }
  LinearMapMatrix p11(4, 4);
  p11.at(0, 0) = 1;
  // a = E12 + E21: a^2 = E11 + E22 -> E11, while h(a) = 0.
  EXPECT_EQ(jordan_defect_concrete(p11, m2, m2, E12 + E21, 2), E11);
}

TEST(HomDefectConcrete, Examples) {
  // p(t) -> p(2t) on Q[t]/(t^3) is an algebra homomorphism.
  const StructureAlgebra t3 = truncated_polynomial_algebra(3);
  LinearMapMatrix dilate(3, 3);
  dilate.at(0, 0) = 1;
  dilate.at(1, 1) = 2;
  dilate.at(2, 2) = 4;
  EXPECT_TRUE(is_algebra_homomorphism(dilate, t3, t3));
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i)
    ASSERT_TRUE(hom_defect_concrete(dilate, t3, t3, {random_vector(3, rng), random_vector(3, rng)}).is_zero());

  const StructureAlgebra m2 = matrix_algebra_2();
  EXPECT_EQ(hom_defect_concrete(transpose_map_m2(), m2, m2, {E12, E21}), E11 - E22);
  EXPECT_FALSE(is_algebra_homomorphism(transpose_map_m2(), m2, m2));

  const LinearMapMatrix h = random_linear_map(4, 4, rng);
  EXPECT_TRUE(hom_defect_concrete(h, m2, m2, {random_vector(4, rng)}).is_zero());
}

TEST(Evaluation, IsAHomomorphismOfTheSymbolicLayer) {
  std::mt19937_64 rng(31);
  struct Case {
    Mode mode;
    StructureAlgebra alg;
  };
  const Case cases[] = {{com, diagonal_algebra(3)}, {com, truncated_polynomial_algebra(4)},
                        {noncom, matrix_algebra_2()}};
  for (const auto& [mode, alg] : cases) {
    for (int i = 0; i < 200; ++i) {
      const Polynomial p = random_poly(mode, 3, rng), q = random_poly(mode, 3, rng);
      const Assignment x{random_vector(alg.dim(), rng), random_vector(alg.dim(), rng),
                         random_vector(alg.dim(), rng)};
      ASSERT_EQ(eval_a_poly(add(p, q), x, alg), eval_a_poly(p, x, alg) + eval_a_poly(q, x, alg));
      ASSERT_EQ(eval_a_poly(mul(p, q), x, alg), alg.multiply(eval_a_poly(p, x, alg), eval_a_poly(q, x, alg)));
    }
  }
}

TEST(Evaluation, SymbolicZeroEvaluatesToZero) {
  // psi_n - symmetrized defect is symbolically zero; so is phi minus the
  // Mobius-reassembled phi.
  std::mt19937_64 rng(37);
  for (Mode a : {com, noncom}) {
    for (Mode b : {com, noncom}) {
      const JordanConfig cfg = config(3, a, b);
      const BPolynomial zero = b_sub(psi_recursive(SubsetId(cfg.full()), cfg), symmetrized_defect(cfg));
      ASSERT_TRUE(zero.is_zero());
      const BPolynomial nonzero_looking = b_sub(mobius_psi({1, 2}, cfg), psi_extract({1, 2}, cfg));
      const StructureAlgebra alg_a = builtin_algebra(default_algebra_for(a));
      const StructureAlgebra alg_b = builtin_algebra(default_algebra_for(b));
      for (int i = 0; i < 20; ++i) {
        const Assignment x{random_vector(alg_a.dim(), rng), random_vector(alg_a.dim(), rng),
                           random_vector(alg_a.dim(), rng)};
        const LinearMapMatrix h = random_linear_map(alg_b.dim(), alg_a.dim(), rng);
        ASSERT_TRUE(eval_b_poly(zero, x, h, alg_a, alg_b).is_zero());
        ASSERT_TRUE(eval_b_poly(nonzero_looking, x, h, alg_a, alg_b).is_zero());
      }
    }
  }
}

TEST(Counterexample, TransposeIsJordanButNotHomomorphism) {
  const Report r = transpose_counterexample(2, 50, 2026);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.payload["jordan_defect_zero"], 50);
  EXPECT_EQ(r.payload["hom_defect"], "E11 - E22");
  EXPECT_EQ(render_in_basis(vec({0, -2, 0, 0}), matrix_algebra_2().labels()), "-2*E12");
  EXPECT_EQ(render_in_basis(vec({0, 0, 0, 0}), matrix_algebra_2().labels()), "0");
  for (unsigned n = 3; n <= 4; ++n) EXPECT_TRUE(transpose_counterexample(n, 20, 1).pass);
}

TEST(HomomorphismKill, BothDefectsVanish) {
  std::mt19937_64 rng(41);
  const StructureAlgebra t3 = truncated_polynomial_algebra(3);
  LinearMapMatrix dilate(3, 3);
  dilate.at(0, 0) = 1;
  dilate.at(1, 1) = -3;
  dilate.at(2, 2) = 9;
  const StructureAlgebra m2 = matrix_algebra_2();
  // Conjugation by [[1, 1], [0, 1]] is an automorphism of M2.
  LinearMapMatrix conj(4, 4);
  {
    const VectorElem s = vec({1, 1, 0, 1}), s_inv = vec({1, -1, 0, 1});
    for (std::size_t j = 0; j < 4; ++j) {
      const VectorElem img = matmul(matmul(s, basis_vector(4, j)), s_inv);
      for (std::size_t i = 0; i < 4; ++i) conj.at(i, j) = img.coords[i];
    }
  }
  struct Case {
    const StructureAlgebra* alg;
    const LinearMapMatrix* h;
  };
  for (const Case c : {Case{&t3, &dilate}, Case{&m2, &conj}}) {
    ASSERT_TRUE(is_algebra_homomorphism(*c.h, *c.alg, *c.alg));
    for (unsigned n = 2; n <= 4; ++n)
      for (int i = 0; i < 20; ++i) {
        std::vector<VectorElem> xs;
        for (unsigned k = 0; k < n; ++k) xs.push_back(random_vector(c.alg->dim(), rng));
        ASSERT_TRUE(jordan_defect_concrete(*c.h, *c.alg, *c.alg, xs[0], n).is_zero());
        ASSERT_TRUE(hom_defect_concrete(*c.h, *c.alg, *c.alg, xs).is_zero());
      }
  }
}

TEST(CrossValidate, Examples) {
  const Report d = cross_validate(config(3, com, com), 100, 1);
  EXPECT_TRUE(d.pass);
  EXPECT_EQ(d.payload["algebra_a"], "diag3");
  EXPECT_EQ(d.payload["theorem_equal"], 100);

  const Report m = cross_validate(config(4, noncom, noncom), 50, 1);
  EXPECT_TRUE(m.pass);
  EXPECT_EQ(m.payload["algebra_a"], "m2");
  EXPECT_EQ(m.payload["decomposition_equal"], 50);

  EXPECT_THROW(cross_validate(config(3, com, com), 0, 1), precondition_error);
  EXPECT_THROW(cross_validate(config(3, com, com), 1, 1, {"m2", "m2"}), mode_mismatch);
}

TEST(CrossValidate, DeterministicAndThreadIndependent) {
  JordanConfig cfg = config(3, noncom, com);
  const Report a = cross_validate(cfg, 10, 99, {"m2", "trunc4"});
  cfg.threads = 3;
  const Report b = cross_validate(cfg, 10, 99, {"m2", "trunc4"});
  EXPECT_EQ(render_report(a, ReportFormat::json), render_report(b, ReportFormat::json));
  EXPECT_TRUE(a.pass);
}

TEST(RandomDraws, RationalRange) {
  std::mt19937_64 rng(0);
  for (int i = 0; i < 2000; ++i) {
    const Coefficient q = random_rational(rng);
    ASSERT_LE(abs(q), 9);
    ASSERT_TRUE(q.get_den() == 1 || q.get_den() == 2 || q.get_den() == 3);
  }
}
