#ifndef NJORDAN_CONCRETE_HPP
#define NJORDAN_CONCRETE_HPP

// Finite-dimensional associative algebras given by structure constants,
// e_i * e_j = sum_k c[i][j][k] e_k, over exact rationals, and the evaluation
// of free-algebra expressions in them. This is the numeric oracle for the
// symbolic verifiers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jordan.hpp"

namespace njordan {

/// Coordinates of an algebra element in the basis.
struct VectorElem {
  std::vector<Coefficient> coords;

  VectorElem() = default;
  explicit VectorElem(std::size_t dim) : coords(dim, Coefficient(0)) {}
  explicit VectorElem(std::vector<Coefficient> c) : coords(std::move(c)) {}

  std::size_t dim() const { return coords.size(); }
  bool is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Coefficient& c) { return sgn(c) == 0; });
  }

  VectorElem& operator+=(const VectorElem& o) {
    if (o.dim() != dim()) throw shape_error("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  VectorElem& operator-=(const VectorElem& o) {
    if (o.dim() != dim()) throw shape_error("vector dimension mismatch");
    for (std::size_t i = 0; i < dim(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  VectorElem& operator*=(const Coefficient& s) {
    for (auto& c : coords) c *= s;
    return *this;
  }

  friend VectorElem operator+(VectorElem a, const VectorElem& b) { return a += b; }
  friend VectorElem operator-(VectorElem a, const VectorElem& b) { return a -= b; }
  friend VectorElem operator*(const Coefficient& s, VectorElem a) { return a *= s; }
  friend bool operator==(const VectorElem&, const VectorElem&) = default;
};

/// `(1, -3/2, 0)`
inline std::string render(const VectorElem& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i != 0) out += ", ";
    out += to_string(v.coords[i]);
  }
  return out + ")";
}

/// `E11 - 3/2*E22` in the given basis labels; `0` for the zero vector.
inline std::string render_in_basis(const VectorElem& v, const std::vector<std::string>& labels) {
  if (labels.size() != v.dim()) throw shape_error("label count does not match vector dimension");
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Coefficient& c = v.coords[i];
    if (sgn(c) == 0) continue;
    if (out.empty()) {
      if (sgn(c) < 0) out += '-';
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const Coefficient mag = abs(c);
    if (mag != 1) out += to_string(mag) + "*";
    out += labels[i];
  }
  return out.empty() ? "0" : out;
}

inline VectorElem basis_vector(std::size_t dim, std::size_t i) {
  VectorElem v(dim);
  v.coords.at(i) = 1;
  return v;
}

/// Thrown by build_algebra when (e_i e_j) e_k != e_i (e_j e_k).
class non_associative_error : public precondition_error {
public:
  non_associative_error(std::size_t i, std::size_t j, std::size_t k)
      : precondition_error("structure constants are not associative: (e" + std::to_string(i + 1) +
                           "*e" + std::to_string(j + 1) + ")*e" + std::to_string(k + 1) + " != e" +
                           std::to_string(i + 1) + "*(e" + std::to_string(j + 1) + "*e" +
                           std::to_string(k + 1) + ")"),
        witness{i, j, k} {}

  /// Zero-based basis indices of the failing triple.
  std::size_t witness[3];
};

class StructureAlgebra {
public:
  std::size_t dim() const { return dim_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& labels() const { return labels_; }
  bool commutative() const { return commutative_; }
  bool associative() const { return true; }
  const std::optional<VectorElem>& unit() const { return unit_; }

  const Coefficient& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return constants_[(i * dim_ + j) * dim_ + k];
  }
  const std::vector<Coefficient>& constants() const { return constants_; }

  VectorElem multiply(const VectorElem& u, const VectorElem& v) const {
    if (u.dim() != dim_ || v.dim() != dim_) throw shape_error("multiply: dimension mismatch");
    VectorElem out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (sgn(u.coords[i]) == 0) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (sgn(v.coords[j]) == 0) continue;
        const Coefficient uv = u.coords[i] * v.coords[j];
        for (std::size_t k = 0; k < dim_; ++k) {
          const Coefficient& c = constant(i, j, k);
          if (sgn(c) != 0) out.coords[k] += uv * c;
        }
      }
    }
    return out;
  }

private:
  friend StructureAlgebra build_algebra(std::size_t, std::vector<Coefficient>, std::string,
                                        std::vector<std::string>, std::optional<VectorElem>);

  std::size_t dim_ = 0;
  std::string name_;
  std::vector<std::string> labels_;
  std::vector<Coefficient> constants_;
  bool commutative_ = false;
  std::optional<VectorElem> unit_;
};

/// Validates shape and associativity; computes the commutativity flag.
/// A supplied unit is checked to be a two-sided identity.
inline StructureAlgebra build_algebra(std::size_t dim, std::vector<Coefficient> constants,
                                      std::string name = "custom",
                                      std::vector<std::string> labels = {},
                                      std::optional<VectorElem> unit = std::nullopt) {
  if (dim == 0) throw precondition_error("algebra dimension must be at least 1");
  if (constants.size() != dim * dim * dim)
    throw shape_error("expected " + std::to_string(dim * dim * dim) + " structure constants, got " +
                      std::to_string(constants.size()));
  if (labels.empty())
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i + 1));
  if (labels.size() != dim) throw shape_error("label count does not match dimension");

  StructureAlgebra alg;
  alg.dim_ = dim;
  alg.name_ = std::move(name);
  alg.labels_ = std::move(labels);
  alg.constants_ = std::move(constants);
  for (auto& c : alg.constants_) c.canonicalize();

  std::vector<VectorElem> basis;
  for (std::size_t i = 0; i < dim; ++i) basis.push_back(basis_vector(dim, i));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const VectorElem ij = alg.multiply(basis[i], basis[j]);
      for (std::size_t k = 0; k < dim; ++k)
        if (alg.multiply(ij, basis[k]) != alg.multiply(basis[i], alg.multiply(basis[j], basis[k])))
          throw non_associative_error(i, j, k);
    }

  alg.commutative_ = true;
  for (std::size_t i = 0; i < dim && alg.commutative_; ++i)
    for (std::size_t j = i + 1; j < dim && alg.commutative_; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (alg.constant(i, j, k) != alg.constant(j, i, k)) {
          alg.commutative_ = false;
          break;
        }

  if (unit) {
    if (unit->dim() != dim) throw shape_error("unit has wrong dimension");
    for (const auto& e : basis)
      if (alg.multiply(*unit, e) != e || alg.multiply(e, *unit) != e)
        throw precondition_error("supplied unit is not a two-sided identity");
    alg.unit_ = std::move(unit);
  }
  return alg;
}

inline VectorElem multiply(const StructureAlgebra& alg, const VectorElem& u, const VectorElem& v) {
  return alg.multiply(u, v);
}

/// u^n by iterated multiplication; u^0 needs a unit.
inline VectorElem power(const StructureAlgebra& alg, const VectorElem& u, unsigned n) {
  if (u.dim() != alg.dim()) throw shape_error("power: dimension mismatch");
  if (n == 0) {
    if (!alg.unit()) throw precondition_error("power 0 in an algebra without a known unit");
    return *alg.unit();
  }
  VectorElem out = u;
  for (unsigned i = 1; i < n; ++i) out = alg.multiply(out, u);
  return out;
}

// Builtin catalogue.

/// Q^d with e_i e_j = delta_ij e_i.
inline StructureAlgebra diagonal_algebra(std::size_t d) {
  if (d < 1 || d > 4) throw precondition_error("diagonal algebra dimension must be in 1..4");
  std::vector<Coefficient> c(d * d * d, Coefficient(0));
  for (std::size_t i = 0; i < d; ++i) c[(i * d + i) * d + i] = 1;
  return build_algebra(d, std::move(c), "diag" + std::to_string(d), {},
                       VectorElem(std::vector<Coefficient>(d, Coefficient(1))));
}

/// Q[t]/(t^d) on the basis 1, t, ..., t^{d-1}.
inline StructureAlgebra truncated_polynomial_algebra(std::size_t d) {
  if (d < 1 || d > 5) throw precondition_error("truncated polynomial algebra dimension must be in 1..5");
  std::vector<Coefficient> c(d * d * d, Coefficient(0));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "t" : "t^" + std::to_string(i)));
    for (std::size_t j = 0; i + j < d; ++j) c[(i * d + j) * d + (i + j)] = 1;
  }
  return build_algebra(d, std::move(c), "trunc" + std::to_string(d), std::move(labels),
                       basis_vector(d, 0));
}

/// M_2(Q) on the matrix units E11, E12, E21, E22 (in that order).
inline StructureAlgebra matrix_algebra_2() {
  constexpr std::size_t d = 4;
  std::vector<Coefficient> c(d * d * d, Coefficient(0));
  // E_ab E_cd = [b == c] E_ad, with E_ab at index 2a + b (zero-based).
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t cc = 0; cc < 2; ++cc)
        for (std::size_t dd = 0; dd < 2; ++dd)
          if (b == cc) c[((2 * a + b) * d + (2 * cc + dd)) * d + (2 * a + dd)] = 1;
  VectorElem id(d);
  id.coords[0] = 1;
  id.coords[3] = 1;
  return build_algebra(d, std::move(c), "m2", {"E11", "E12", "E21", "E22"}, id);
}

/// `diagD` (D <= 4), `truncD` (D <= 5), `m2`.
inline StructureAlgebra builtin_algebra(std::string_view name) {
  auto suffix_dim = [&](std::string_view prefix) -> std::size_t {
    const std::string_view rest = name.substr(prefix.size());
    if (rest.size() != 1 || rest[0] < '1' || rest[0] > '9')
      throw precondition_error("unknown builtin algebra '" + std::string(name) + "'");
    return static_cast<std::size_t>(rest[0] - '0');
  };
  if (name == "m2") return matrix_algebra_2();
  if (name.starts_with("diag")) return diagonal_algebra(suffix_dim("diag"));
  if (name.starts_with("trunc")) return truncated_polynomial_algebra(suffix_dim("trunc"));
  throw precondition_error("unknown builtin algebra '" + std::string(name) + "'");
}

inline constexpr std::string_view algebra_file_header = "njordan-algebra v1";

/// Text format:
///
///   njordan-algebra v1
///   dim <d>
///   [labels <l1> ... <ld>]
///   <d^3 rationals, row-major c[i][j][k]>
///
/// `#` starts a comment.
inline StructureAlgebra parse_algebra(std::string_view text, std::string name = "file") {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> tokens;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != algebra_file_header)
        throw precondition_error("algebra file must start with '" + std::string(algebra_file_header) + "'");
      header_seen = true;
      continue;
    }
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
  }
  if (!header_seen) throw precondition_error("empty algebra file");

  std::size_t pos = 0;
  if (tokens.size() < 2 || tokens[0] != "dim") throw precondition_error("algebra file: expected 'dim <d>'");
  std::size_t dim = 0;
  try {
    dim = std::stoul(tokens[1]);
  } catch (const std::exception&) {
    throw precondition_error("algebra file: bad dimension '" + tokens[1] + "'");
  }
  if (dim == 0 || dim > 64) throw precondition_error("algebra file: dimension out of range");
  pos = 2;
  std::vector<std::string> labels;
  if (pos < tokens.size() && tokens[pos] == "labels") {
    ++pos;
    for (std::size_t i = 0; i < dim; ++i, ++pos) {
      if (pos >= tokens.size()) throw precondition_error("algebra file: too few labels");
      labels.push_back(tokens[pos]);
    }
  }
  std::vector<Coefficient> constants;
  for (; pos < tokens.size(); ++pos) constants.push_back(parse_rational(tokens[pos]));
  return build_algebra(dim, std::move(constants), std::move(name), std::move(labels));
}

inline std::string write_algebra(const StructureAlgebra& alg) {
  const std::size_t d = alg.dim();
  std::string out = std::string(algebra_file_header) + "\n";
  out += "dim " + std::to_string(d) + "\n";
  out += "labels";
  for (const auto& l : alg.labels()) out += " " + l;
  out += "\n";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (k != 0) out += ' ';
        out += to_string(alg.constant(i, j, k));
      }
      out += '\n';
    }
  return out;
}

/// Linear map A -> B as a dim_B x dim_A matrix (row-major).
class LinearMapMatrix {
public:
  LinearMapMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Coefficient(0)) {}

  static LinearMapMatrix identity(std::size_t dim) {
    LinearMapMatrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coefficient& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const Coefficient& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

  VectorElem apply(const VectorElem& v) const {
    if (v.dim() != cols_) throw shape_error("linear map: input dimension mismatch");
    VectorElem out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn(at(r, c)) != 0 && sgn(v.coords[c]) != 0) out.coords[r] += at(r, c) * v.coords[c];
    return out;
  }

  void require_shape(const StructureAlgebra& a, const StructureAlgebra& b) const {
    if (cols_ != a.dim() || rows_ != b.dim())
      throw shape_error("linear map is " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                        ", algebras need " + std::to_string(b.dim()) + "x" + std::to_string(a.dim()));
  }

  friend bool operator==(const LinearMapMatrix&, const LinearMapMatrix&) = default;

private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coefficient> entries_;
};

/// Transpose on M_2 in the matrix-unit basis (swaps E12 and E21).
inline LinearMapMatrix transpose_map_m2() {
  LinearMapMatrix t(4, 4);
  t.at(0, 0) = 1;
  t.at(1, 2) = 1;
  t.at(2, 1) = 1;
  t.at(3, 3) = 1;
  return t;
}

/// Value of x_i is assignment[i-1].
using Assignment = std::vector<VectorElem>;

namespace detail {

inline void require_mode_fits(Mode mode, const StructureAlgebra& alg, const char* what) {
  if (mode == Mode::commutative && !alg.commutative())
    throw mode_mismatch(std::string(what) +
                        ": commutative-mode expression evaluated in a noncommutative algebra");
}

inline VectorElem eval_word(const Word& w, const Assignment& x, const StructureAlgebra& alg) {
  if (w.empty()) {
    if (!alg.unit()) throw precondition_error("constant term needs an algebra with a unit");
    return *alg.unit();
  }
  auto value_of = [&](GeneratorId g) -> const VectorElem& {
    if (g.index > x.size())
      throw precondition_error("no assignment for generator x" + std::to_string(g.index));
    const VectorElem& v = x[g.index - 1];
    if (v.dim() != alg.dim()) throw shape_error("assignment vector has wrong dimension");
    return v;
  };
  VectorElem acc = value_of(w.letters().front());
  for (std::size_t i = 1; i < w.degree(); ++i) acc = alg.multiply(acc, value_of(w.letters()[i]));
  return acc;
}

} // namespace detail

inline VectorElem eval_a_poly(const Polynomial& p, const Assignment& x, const StructureAlgebra& alg) {
  detail::require_mode_fits(p.mode(), alg, "eval_a_poly");
  VectorElem out(alg.dim());
  for (const auto& [w, c] : p.terms()) out += c * detail::eval_word(w, x, alg);
  return out;
}

/// h(w) is interpreted as hmat * eval(w); h-factors multiply in B.
inline VectorElem eval_b_poly(const BPolynomial& bp, const Assignment& x, const LinearMapMatrix& hmat,
                              const StructureAlgebra& alg_a, const StructureAlgebra& alg_b) {
  hmat.require_shape(alg_a, alg_b);
  detail::require_mode_fits(bp.a_mode(), alg_a, "eval_b_poly");
  detail::require_mode_fits(bp.b_mode(), alg_b, "eval_b_poly");
  std::map<Word, VectorElem> image_cache;
  auto image = [&](const Word& w) -> const VectorElem& {
    auto it = image_cache.find(w);
    if (it == image_cache.end())
      it = image_cache.emplace(w, hmat.apply(detail::eval_word(w, x, alg_a))).first;
    return it->second;
  };
  VectorElem out(alg_b.dim());
  for (const auto& [bw, c] : bp.terms()) {
    VectorElem term;
    if (bw.factors().empty()) {
      if (!alg_b.unit()) throw precondition_error("empty product needs a unit in B");
      term = *alg_b.unit();
    } else {
      term = image(bw.factors().front().arg);
      for (std::size_t i = 1; i < bw.length(); ++i)
        term = alg_b.multiply(term, image(bw.factors()[i].arg));
    }
    out += c * term;
  }
  return out;
}

/// h(a^n) - h(a)^n.
inline VectorElem jordan_defect_concrete(const LinearMapMatrix& hmat, const StructureAlgebra& alg_a,
                                         const StructureAlgebra& alg_b, const VectorElem& a,
                                         unsigned n) {
  hmat.require_shape(alg_a, alg_b);
  if (n < 1) throw precondition_error("jordan defect needs n >= 1");
  return hmat.apply(power(alg_a, a, n)) - power(alg_b, hmat.apply(a), n);
}

/// h(a1*...*an) - h(a1)*...*h(an).
inline VectorElem hom_defect_concrete(const LinearMapMatrix& hmat, const StructureAlgebra& alg_a,
                                      const StructureAlgebra& alg_b, const std::vector<VectorElem>& a) {
  hmat.require_shape(alg_a, alg_b);
  if (a.empty()) throw precondition_error("hom defect needs at least one factor");
  VectorElem prod = a.front();
  VectorElem image_prod = hmat.apply(a.front());
  for (std::size_t i = 1; i < a.size(); ++i) {
    prod = alg_a.multiply(prod, a[i]);
    image_prod = alg_b.multiply(image_prod, hmat.apply(a[i]));
  }
  return hmat.apply(prod) - image_prod;
}

/// True when hmat is multiplicative on basis pairs (hence on everything).
inline bool is_algebra_homomorphism(const LinearMapMatrix& hmat, const StructureAlgebra& alg_a,
                                    const StructureAlgebra& alg_b) {
  hmat.require_shape(alg_a, alg_b);
  for (std::size_t i = 0; i < alg_a.dim(); ++i)
    for (std::size_t j = 0; j < alg_a.dim(); ++j)
      if (!hom_defect_concrete(hmat, alg_a, alg_b,
                               {basis_vector(alg_a.dim(), i), basis_vector(alg_a.dim(), j)})
               .is_zero())
        return false;
  return true;
}

// Random sampling. Numerators in [-9, 9], denominators in {1, 2, 3}.

/// Independent, reproducible stream for trial `trial` under `seed`.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

inline Coefficient random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 3);
  const int p = num(rng);
  const int q = den(rng);
  return make_rational(p, q);
}

inline VectorElem random_vector(std::size_t dim, std::mt19937_64& rng) {
  VectorElem v(dim);
  for (auto& c : v.coords) c = random_rational(rng);
  return v;
}

inline LinearMapMatrix random_linear_map(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  LinearMapMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = random_rational(rng);
  return m;
}

struct CrossValidateOptions {
  /// Builtin names; empty picks diag3 for commutative modes and m2 otherwise.
  std::string algebra_a;
  std::string algebra_b;
};

inline std::string default_algebra_for(Mode mode) {
  return mode == Mode::commutative ? "diag3" : "m2";
}

/// Evaluates both sides of the theorem identity and of the decomposition
/// identity on random assignments and random linear maps, plus a purely
/// numeric inclusion-exclusion route that never touches the symbolic layer.
inline Report cross_validate(const JordanConfig& cfg, std::size_t trials, std::uint64_t seed,
                             const CrossValidateOptions& opts = {}) {
  cfg.validate();
  if (trials < 1) throw precondition_error("cross_validate needs at least one trial");
  const StructureAlgebra alg_a =
      builtin_algebra(opts.algebra_a.empty() ? default_algebra_for(cfg.a_mode) : opts.algebra_a);
  const StructureAlgebra alg_b =
      builtin_algebra(opts.algebra_b.empty() ? default_algebra_for(cfg.b_mode) : opts.algebra_b);
  detail::require_mode_fits(cfg.a_mode, alg_a, "cross_validate");
  detail::require_mode_fits(cfg.b_mode, alg_b, "cross_validate");

  const SubsetId full(cfg.full());
  const PhiTable phis = phi_table(full, cfg);
  const PhiTable psis = psi_table(full, phis);
  const BPolynomial& theorem_lhs = psis.at(full.set().mask());
  const BPolynomial theorem_rhs = symmetrized_defect(cfg);
  const BPolynomial& decomposition_lhs = phis.at(full.set().mask());
  const auto masks = detail::nonempty_submasks(full.set());

  struct Outcome {
    bool theorem = false;
    bool decomposition = false;
    bool numeric = false;
    std::string witness;
  };
  std::vector<Outcome> outcomes(trials);

  parallel_for(trials, cfg.threads, [&](std::size_t t) {
    auto rng = trial_rng(seed, t);
    Assignment x;
    for (unsigned i = 0; i < cfg.n; ++i) x.push_back(random_vector(alg_a.dim(), rng));
    const LinearMapMatrix h = random_linear_map(alg_b.dim(), alg_a.dim(), rng);

    const VectorElem th_l = eval_b_poly(theorem_lhs, x, h, alg_a, alg_b);
    const VectorElem th_r = eval_b_poly(theorem_rhs, x, h, alg_a, alg_b);
    const VectorElem dc_l = eval_b_poly(decomposition_lhs, x, h, alg_a, alg_b);
    VectorElem dc_r(alg_b.dim());
    for (std::uint32_t m : masks) dc_r += eval_b_poly(psis.at(m), x, h, alg_a, alg_b);

    // Numeric route: signed sum of concrete Jordan defects vs the
    // symmetrized multiplicative defect computed by direct products.
    VectorElem signed_jordan(alg_b.dim());
    for (std::uint32_t m : masks) {
      VectorElem a(alg_a.dim());
      for (unsigned i : VarSet(m).members()) a += x[i - 1];
      const int sign = ((cfg.n - std::popcount(m)) % 2 == 0) ? 1 : -1;
      signed_jordan += Coefficient(sign) * jordan_defect_concrete(h, alg_a, alg_b, a, cfg.n);
    }
    VectorElem symmetrized(alg_b.dim());
    std::vector<unsigned> perm(cfg.n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
      std::vector<VectorElem> factors;
      for (unsigned i : perm) factors.push_back(x[i]);
      symmetrized += hom_defect_concrete(h, alg_a, alg_b, factors);
    } while (std::next_permutation(perm.begin(), perm.end()));

    Outcome& o = outcomes[t];
    o.theorem = th_l == th_r;
    o.decomposition = dc_l == dc_r;
    o.numeric = signed_jordan == symmetrized && symmetrized == th_r;
    if (!(o.theorem && o.decomposition && o.numeric)) {
      o.witness = "trial " + std::to_string(t) + ": theorem " + render(th_l) + " vs " + render(th_r) +
                  "; decomposition " + render(dc_l) + " vs " + render(dc_r) + "; numeric " +
                  render(signed_jordan) + " vs " + render(symmetrized);
    }
  });

  std::size_t theorem_ok = 0, decomposition_ok = 0, numeric_ok = 0;
  std::string first_witness;
  for (const auto& o : outcomes) {
    theorem_ok += o.theorem;
    decomposition_ok += o.decomposition;
    numeric_ok += o.numeric;
    if (first_witness.empty() && !o.witness.empty()) first_witness = o.witness;
  }

  Report r = detail::base_report("cross-validate", cfg);
  r.pass = theorem_ok == trials && decomposition_ok == trials && numeric_ok == trials;
  r.payload["algebra_a"] = alg_a.name();
  r.payload["algebra_b"] = alg_b.name();
  r.payload["seed"] = seed;
  r.payload["trials"] = trials;
  r.payload["theorem_equal"] = theorem_ok;
  r.payload["decomposition_equal"] = decomposition_ok;
  r.payload["numeric_equal"] = numeric_ok;
  if (!first_witness.empty()) r.payload["witness"] = first_witness;
  return r;
}

/// Transpose on M_2: Jordan defect on random samples and the multiplicative
/// defect on the witness tuple (E12, E21, E11, ..., E11).
inline Report transpose_counterexample(unsigned n, std::size_t samples, std::uint64_t seed) {
  if (n < 2) throw precondition_error("n must be at least 2");
  if (samples < 1) throw precondition_error("need at least one sample");
  const StructureAlgebra m2 = matrix_algebra_2();
  const LinearMapMatrix t = transpose_map_m2();

  std::size_t jordan_zero = 0;
  std::string jordan_witness;
  for (std::size_t s = 0; s < samples; ++s) {
    auto rng = trial_rng(seed, s);
    const VectorElem a = random_vector(4, rng);
    const VectorElem d = jordan_defect_concrete(t, m2, m2, a, n);
    if (d.is_zero()) ++jordan_zero;
    else if (jordan_witness.empty())
      jordan_witness = render_in_basis(a, m2.labels()) + " -> " + render_in_basis(d, m2.labels());
  }

  std::vector<VectorElem> tuple{basis_vector(4, 1), basis_vector(4, 2)};
  while (tuple.size() < n) tuple.push_back(basis_vector(4, 0));
  const VectorElem hom = hom_defect_concrete(t, m2, m2, tuple);

  Report r;
  r.command = "concrete";
  r.n = n;
  r.a_mode = Mode::noncommutative;
  r.b_mode = Mode::noncommutative;
  r.pass = jordan_zero == samples && !hom.is_zero();
  r.payload["algebra"] = "m2";
  r.payload["map"] = "transpose";
  r.payload["seed"] = seed;
  r.payload["samples"] = samples;
  r.payload["jordan_defect_zero"] = jordan_zero;
  if (!jordan_witness.empty()) r.payload["jordan_witness"] = jordan_witness;
  r.payload["hom_witness"] = n == 2 ? "(E12, E21)" : "(E12, E21, E11^" + std::to_string(n - 2) + ")";
  r.payload["hom_defect"] = render_in_basis(hom, m2.labels());
  r.payload["message"] = r.pass ? "transpose is n-Jordan but not an n-homomorphism on M2"
                                : "counterexample not reproduced";
  return r;
}

} // namespace njordan

#endif // NJORDAN_CONCRETE_HPP
