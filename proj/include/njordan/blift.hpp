#ifndef NJORDAN_BLIFT_HPP
#define NJORDAN_BLIFT_HPP

// The codomain side. B is modelled as the free algebra whose letters are
// formal images h(w) of domain words; h is a linear symbol and nothing more.

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "freealg.hpp"

namespace njordan {

/// Formal image h(w) of a canonical domain word.
struct HSymbol {
  Word arg;

  friend bool operator==(const HSymbol&, const HSymbol&) = default;
  friend std::strong_ordering operator<=>(const HSymbol& a, const HSymbol& b) {
    return a.arg <=> b.arg;
  }
};

/// Monomial of B: a product of h-factors. In commutative B-mode the factors
/// are kept sorted by the HSymbol order.
class BWord {
public:
  BWord() = default;
  BWord(std::vector<HSymbol> factors, Mode b_mode) : factors_(std::move(factors)) {
    if (b_mode == Mode::commutative) std::sort(factors_.begin(), factors_.end());
  }

  const std::vector<HSymbol>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }
  bool is_canonical(Mode b_mode) const {
    return b_mode == Mode::noncommutative || std::is_sorted(factors_.begin(), factors_.end());
  }

  static BWord product(const BWord& a, const BWord& b, Mode b_mode) {
    BWord out;
    out.factors_.reserve(a.length() + b.length());
    if (b_mode == Mode::commutative) {
      std::merge(a.factors_.begin(), a.factors_.end(), b.factors_.begin(), b.factors_.end(),
                 std::back_inserter(out.factors_));
    } else {
      out.factors_.insert(out.factors_.end(), a.factors_.begin(), a.factors_.end());
      out.factors_.insert(out.factors_.end(), b.factors_.begin(), b.factors_.end());
    }
    return out;
  }

  friend bool operator==(const BWord&, const BWord&) = default;
  /// Number of factors first, then lexicographic over factors.
  friend std::strong_ordering operator<=>(const BWord& a, const BWord& b) {
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                  b.factors_.begin(), b.factors_.end());
  }

private:
  std::vector<HSymbol> factors_;
};

/// `h(x1*x2)*h(x3)`; the empty product renders as "".
inline std::string render(const BWord& bw) {
  std::string out;
  for (std::size_t i = 0; i < bw.factors().size(); ++i) {
    if (i != 0) out += '*';
    out += "h(";
    out += render(bw.factors()[i].arg);
    out += ')';
  }
  return out;
}

/// Union of the variable sets of the factors.
inline VarSet b_varset(const BWord& bw) {
  VarSet s;
  for (const HSymbol& f : bw.factors()) s = s | varset(f.arg);
  return s;
}

/// Element of B. Carries the domain mode (of the h-arguments) and the
/// codomain mode (of the products) so mixed combinations are rejected.
class BPolynomial {
public:
  using Terms = sparse::TermMap<BWord>;

  BPolynomial(Mode a_mode, Mode b_mode) : a_mode_(a_mode), b_mode_(b_mode) {}

  Mode a_mode() const { return a_mode_; }
  Mode b_mode() const { return b_mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const BWord& bw) const {
    auto it = terms_.find(bw);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds c * bw; factors must be canonical for both modes.
  void add_term(const BWord& bw, const Coefficient& c) {
    if (!bw.is_canonical(b_mode_)) throw precondition_error("BWord is not canonical for B-mode");
    for (const HSymbol& f : bw.factors())
      if (!f.arg.is_canonical(a_mode_)) throw precondition_error("h-argument is not canonical");
    sparse::accumulate(terms_, bw, c);
  }

  /// *this += c * q.
  BPolynomial& add_scaled(const BPolynomial& q, const Coefficient& c) {
    require_same_mode(a_mode_, q.a_mode_, "add_scaled");
    require_same_mode(b_mode_, q.b_mode_, "add_scaled");
    if (sgn(c) == 0) return *this;
    Coefficient term;
    for (const auto& [k, v] : q.terms_) {
      term = c * v;
      sparse::accumulate(terms_, k, term);
    }
    return *this;
  }

  friend bool operator==(const BPolynomial&, const BPolynomial&) = default;

private:
  friend BPolynomial b_add(const BPolynomial&, const BPolynomial&);
  friend BPolynomial b_scale(const Coefficient&, const BPolynomial&);
  friend BPolynomial b_sub(const BPolynomial&, const BPolynomial&);
  friend BPolynomial b_mul(const BPolynomial&, const BPolynomial&, unsigned);
  friend BPolynomial b_exact_varset_component(const BPolynomial&, VarSet);

  BPolynomial(Mode a_mode, Mode b_mode, Terms terms)
      : a_mode_(a_mode), b_mode_(b_mode), terms_(std::move(terms)) {}

  Mode a_mode_;
  Mode b_mode_;
  Terms terms_;
};

inline void require_same_modes(const BPolynomial& p, const BPolynomial& q, const char* op) {
  require_same_mode(p.a_mode(), q.a_mode(), op);
  require_same_mode(p.b_mode(), q.b_mode(), op);
}

/// Linear extension of h: c*w |-> c*[h(w)]. The B-mode is a separate
/// choice, so lift takes it explicitly.
inline BPolynomial lift(const Polynomial& p, Mode b_mode) {
  BPolynomial out(p.mode(), b_mode);
  for (const auto& [w, c] : p.terms()) out.add_term(BWord({HSymbol{w}}, b_mode), c);
  return out;
}

inline BPolynomial b_unit(Mode a_mode, Mode b_mode) {
  BPolynomial out(a_mode, b_mode);
  out.add_term(BWord{}, 1);
  return out;
}

inline BPolynomial b_add(const BPolynomial& p, const BPolynomial& q) {
  require_same_modes(p, q, "b_add");
  return BPolynomial(p.a_mode(), p.b_mode(), sparse::add(p.terms_, q.terms_));
}

inline BPolynomial b_scale(const Coefficient& c, const BPolynomial& p) {
  return BPolynomial(p.a_mode(), p.b_mode(), sparse::scale(c, p.terms_));
}

inline BPolynomial b_sub(const BPolynomial& p, const BPolynomial& q) {
  require_same_modes(p, q, "b_sub");
  return BPolynomial(p.a_mode(), p.b_mode(), sparse::add(p.terms(), q.terms(), Coefficient(-1)));
}

inline BPolynomial b_mul(const BPolynomial& p, const BPolynomial& q, unsigned threads = 1) {
  require_same_modes(p, q, "b_mul");
  const Mode b_mode = p.b_mode();
  return BPolynomial(
      p.a_mode(), b_mode,
      sparse::multiply(
          p.terms_, q.terms_,
          [b_mode](const BWord& a, const BWord& b) { return BWord::product(a, b, b_mode); },
          threads));
}

inline BPolynomial b_pow(const BPolynomial& p, int n, unsigned threads = 1) {
  if (n < 0) throw precondition_error("negative exponent " + std::to_string(n));
  BPolynomial out = b_unit(p.a_mode(), p.b_mode());
  for (int i = 0; i < n; ++i) out = b_mul(out, p, threads);
  return out;
}

inline BPolynomial operator+(const BPolynomial& p, const BPolynomial& q) { return b_add(p, q); }
inline BPolynomial operator-(const BPolynomial& p, const BPolynomial& q) { return b_sub(p, q); }
inline BPolynomial operator*(const BPolynomial& p, const BPolynomial& q) { return b_mul(p, q); }

/// Terms whose h-factors together use exactly the generators in `s`.
inline BPolynomial b_exact_varset_component(const BPolynomial& p, VarSet s) {
  return BPolynomial(p.a_mode(), p.b_mode(),
                     sparse::filter(p.terms_, [s](const BWord& bw) { return b_varset(bw) == s; }));
}

/// `h(x1*x2)*h(x3) - h(x1)*h(x2)*h(x3)`
inline std::string render(const BPolynomial& p) {
  return sparse::render(p.terms(), [](const BWord& bw) { return render(bw); });
}

/// Renders one monomial with its coefficient, e.g. `-2*h(x1)*h(x2)`.
inline std::string render_term(const BWord& bw, const Coefficient& c) {
  sparse::TermMap<BWord> single;
  single.emplace(bw, c);
  return sparse::render(single, [](const BWord& k) { return render(k); });
}

} // namespace njordan

#endif // NJORDAN_BLIFT_HPP
