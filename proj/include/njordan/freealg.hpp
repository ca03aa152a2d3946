#ifndef NJORDAN_FREEALG_HPP
#define NJORDAN_FREEALG_HPP

// Free associative algebra over generators x1..xn with exact rational
// coefficients, in commutative or noncommutative mode. The algebra is not
// assumed unital; the empty word is admitted so that p^0 is defined.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coefficient.hpp"
#include "error.hpp"
#include "sparse.hpp"

namespace njordan {

enum class Mode { commutative, noncommutative };

inline std::string_view to_string(Mode m) {
  return m == Mode::commutative ? "com" : "noncom";
}

inline Mode parse_mode(std::string_view s) {
  if (s == "com" || s == "commutative") return Mode::commutative;
  if (s == "noncom" || s == "noncommutative") return Mode::noncommutative;
  throw precondition_error("unknown algebra mode '" + std::string(s) + "'");
}

/// Guard on the number of generators: (x1+...+xn)^n has n^n words.
inline constexpr unsigned default_generator_cap = 8;
/// Hard representation limit of VarSet.
inline constexpr unsigned max_generators = 31;

/// Index of a generator x_i, 1-based.
struct GeneratorId {
  std::uint8_t index = 1;

  friend auto operator<=>(GeneratorId, GeneratorId) = default;
};

inline GeneratorId make_generator_id(unsigned i, unsigned cap = default_generator_cap) {
  if (i < 1 || i > std::min(cap, max_generators))
    throw precondition_error("generator index " + std::to_string(i) + " outside 1.." +
                             std::to_string(std::min(cap, max_generators)));
  return GeneratorId{static_cast<std::uint8_t>(i)};
}

/// A set of generator indices, stored as a bitmask (bit i-1 for x_i).
class VarSet {
public:
  constexpr VarSet() = default;
  constexpr explicit VarSet(std::uint32_t mask) : mask_(mask) {}
  VarSet(std::initializer_list<unsigned> members) {
    for (unsigned i : members) insert(make_generator_id(i, max_generators));
  }

  /// {1..n}
  static VarSet full(unsigned n) {
    if (n > max_generators) throw precondition_error("too many generators");
    return VarSet(n == 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool empty() const { return mask_ == 0; }
  int size() const { return std::popcount(mask_); }
  constexpr bool contains(GeneratorId g) const { return (mask_ >> (g.index - 1)) & 1u; }
  constexpr bool is_subset_of(VarSet other) const { return (mask_ & ~other.mask_) == 0; }
  void insert(GeneratorId g) { mask_ |= 1u << (g.index - 1); }
  /// Highest member index, 0 for the empty set.
  unsigned max_index() const { return mask_ == 0 ? 0 : 32 - std::countl_zero(mask_); }

  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint32_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr VarSet operator|(VarSet a, VarSet b) { return VarSet(a.mask_ | b.mask_); }
  friend constexpr bool operator==(VarSet, VarSet) = default;
  /// Orders by size, then by sorted member list.
  friend std::strong_ordering operator<=>(VarSet a, VarSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.members() <=> b.members();
  }

private:
  std::uint32_t mask_ = 0;
};

/// `{1,2,4}`
inline std::string to_string(VarSet s) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : s.members()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(i);
  }
  out += '}';
  return out;
}

/// A monomial. Commutative-mode words are kept sorted ascending, so a word
/// is canonical for the mode it was built in. Mode is carried by the
/// enclosing polynomial, not by the word.
class Word {
public:
  Word() = default;
  Word(std::vector<GeneratorId> letters, Mode mode) : letters_(std::move(letters)) {
    if (mode == Mode::commutative) std::sort(letters_.begin(), letters_.end());
  }
  Word(std::initializer_list<unsigned> letters, Mode mode) {
    letters_.reserve(letters.size());
    for (unsigned i : letters) letters_.push_back(make_generator_id(i, max_generators));
    if (mode == Mode::commutative) std::sort(letters_.begin(), letters_.end());
  }

  const std::vector<GeneratorId>& letters() const { return letters_; }
  std::size_t degree() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  bool is_canonical(Mode mode) const {
    return mode == Mode::noncommutative || std::is_sorted(letters_.begin(), letters_.end());
  }

  /// Concatenation (noncommutative) or sorted merge (commutative).
  static Word product(const Word& a, const Word& b, Mode mode) {
    Word out;
    out.letters_.reserve(a.degree() + b.degree());
    if (mode == Mode::commutative) {
      std::merge(a.letters_.begin(), a.letters_.end(), b.letters_.begin(), b.letters_.end(),
                 std::back_inserter(out.letters_));
    } else {
      out.letters_.insert(out.letters_.end(), a.letters_.begin(), a.letters_.end());
      out.letters_.insert(out.letters_.end(), b.letters_.begin(), b.letters_.end());
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  /// Degree first, then lexicographic on generator indices.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

private:
  std::vector<GeneratorId> letters_;
};

/// `x1*x2*x1`; the empty word renders as "".
inline std::string render(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.letters().size(); ++i) {
    if (i != 0) out += '*';
    out += 'x';
    out += std::to_string(w.letters()[i].index);
  }
  return out;
}

/// Set of distinct generators occurring in a word.
inline VarSet varset(const Word& w) {
  VarSet s;
  for (GeneratorId g : w.letters()) s.insert(g);
  return s;
}

/// Sparse element of the free algebra.
class Polynomial {
public:
  using Terms = sparse::TermMap<Word>;

  explicit Polynomial(Mode mode = Mode::noncommutative) : mode_(mode) {}

  /// Builds from (word, coefficient) pairs; words are canonicalized and
  /// equal words combined.
  Polynomial(Mode mode, std::initializer_list<std::pair<Word, Coefficient>> terms) : mode_(mode) {
    for (const auto& [w, c] : terms) add_term(Word(w.letters(), mode), c);
  }

  Mode mode() const { return mode_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Coefficient coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Adds c * w; `w` must already be canonical for the mode.
  void add_term(const Word& w, const Coefficient& c) {
    if (!w.is_canonical(mode_)) throw precondition_error("word is not canonical for the mode");
    sparse::accumulate(terms_, w, c);
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  friend Polynomial add(const Polynomial&, const Polynomial&);
  friend Polynomial scale(const Coefficient&, const Polynomial&);
  friend Polynomial mul(const Polynomial&, const Polynomial&, unsigned);
  friend Polynomial exact_varset_component(const Polynomial&, VarSet);
  friend Polynomial multilinear_component(const Polynomial&, unsigned);

  Polynomial(Mode mode, Terms terms) : mode_(mode), terms_(std::move(terms)) {}

  Mode mode_;
  Terms terms_;
};

inline void require_same_mode(Mode a, Mode b, const char* op) {
  if (a != b)
    throw mode_mismatch(std::string(op) + ": operands in " + std::string(to_string(a)) + " and " +
                        std::string(to_string(b)) + " mode");
}

inline Polynomial generator(unsigned i, Mode mode, unsigned cap = default_generator_cap) {
  Polynomial p(mode);
  p.add_term(Word({make_generator_id(i, cap)}, mode), 1);
  return p;
}

/// The unit monomial (empty word) with coefficient 1.
inline Polynomial unit(Mode mode) {
  Polynomial p(mode);
  p.add_term(Word{}, 1);
  return p;
}

inline Polynomial add(const Polynomial& p, const Polynomial& q) {
  require_same_mode(p.mode(), q.mode(), "add");
  return Polynomial(p.mode(), sparse::add(p.terms_, q.terms_));
}

inline Polynomial scale(const Coefficient& c, const Polynomial& p) {
  return Polynomial(p.mode(), sparse::scale(c, p.terms_));
}

inline Polynomial sub(const Polynomial& p, const Polynomial& q) { return add(p, scale(-1, q)); }

inline Polynomial mul(const Polynomial& p, const Polynomial& q, unsigned threads = 1) {
  require_same_mode(p.mode(), q.mode(), "mul");
  const Mode mode = p.mode();
  return Polynomial(mode, sparse::multiply(
                              p.terms_, q.terms_,
                              [mode](const Word& a, const Word& b) { return Word::product(a, b, mode); },
                              threads));
}

inline Polynomial pow(const Polynomial& p, int n, unsigned threads = 1) {
  if (n < 0) throw precondition_error("negative exponent " + std::to_string(n));
  Polynomial out = unit(p.mode());
  for (int i = 0; i < n; ++i) out = mul(out, p, threads);
  return out;
}

inline Polynomial operator+(const Polynomial& p, const Polynomial& q) { return add(p, q); }
inline Polynomial operator-(const Polynomial& p, const Polynomial& q) { return sub(p, q); }
inline Polynomial operator*(const Polynomial& p, const Polynomial& q) { return mul(p, q); }

inline Polynomial sum_of_generators(VarSet s, Mode mode, unsigned cap = default_generator_cap) {
  if (s.empty()) throw precondition_error("sum_of_generators: empty generator set");
  Polynomial p(mode);
  for (unsigned i : s.members()) p = add(p, generator(i, mode, cap));
  return p;
}

/// Terms whose word uses exactly the generators in `s`.
inline Polynomial exact_varset_component(const Polynomial& p, VarSet s) {
  return Polynomial(p.mode(),
                    sparse::filter(p.terms_, [s](const Word& w) { return varset(w) == s; }));
}

/// Terms in which each of x1..xn occurs exactly once (and nothing else).
inline Polynomial multilinear_component(const Polynomial& p, unsigned n) {
  auto multilinear = [n](const Word& w) {
    if (w.degree() != n) return false;
    std::uint32_t seen = 0;
    for (GeneratorId g : w.letters()) {
      if (g.index > n) return false;
      const std::uint32_t bit = 1u << (g.index - 1);
      if (seen & bit) return false;
      seen |= bit;
    }
    return true;
  };
  return Polynomial(p.mode(), sparse::filter(p.terms_, multilinear));
}

/// Terms sorted by (degree, lexicographic word), e.g. `x1*x2 + x2*x1`.
inline std::string render(const Polynomial& p) {
  return sparse::render(p.terms(), [](const Word& w) { return render(w); });
}

} // namespace njordan

#endif // NJORDAN_FREEALG_HPP
