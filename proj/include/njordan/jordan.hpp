#ifndef NJORDAN_JORDAN_HPP
#define NJORDAN_JORDAN_HPP

// Jordan defects on the subset lattice of {1..n}.
//
//   phi(S)            = h((sum_{i in S} x_i)^n) - h(sum_{i in S} x_i)^n
//   psi_recursive(S)  = phi(S) - sum_{0 != T < S} psi_recursive(T)
//   psi_extract(S)    = the part of phi(S) whose terms use exactly S
//   mobius_psi(S)     = sum_{0 != T <= S} (-1)^{|S|-|T|} phi(T)
//
// psi({1..n}) is the symmetrized multiplicative defect, so it is a signed
// sum of Jordan defects and vanishes for every n-Jordan map.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "blift.hpp"
#include "parallel.hpp"
#include "report.hpp"

namespace njordan {

/// Nonempty subset of {1..n} indexing a phi / psi instance.
class SubsetId {
public:
  explicit SubsetId(VarSet s) : set_(s) {
    if (s.empty()) throw precondition_error("subset must be nonempty");
  }
  SubsetId(std::initializer_list<unsigned> members) : SubsetId(VarSet(members)) {}

  VarSet set() const { return set_; }
  int size() const { return set_.size(); }
  std::vector<unsigned> members() const { return set_.members(); }

  friend bool operator==(SubsetId, SubsetId) = default;
  friend auto operator<=>(SubsetId a, SubsetId b) { return a.set_ <=> b.set_; }

private:
  VarSet set_;
};

inline std::string to_string(SubsetId s) { return to_string(s.set()); }

struct JordanConfig {
  unsigned n = 2;
  Mode a_mode = Mode::commutative;
  Mode b_mode = Mode::commutative;
  unsigned generator_cap = default_generator_cap;
  /// Worker threads for independent lattice evaluations.
  unsigned threads = 1;

  void validate() const {
    if (n < 2) throw precondition_error("n must be at least 2, got " + std::to_string(n));
    if (generator_cap > max_generators)
      throw precondition_error("generator cap above " + std::to_string(max_generators));
    if (n > generator_cap)
      throw precondition_error("n = " + std::to_string(n) + " exceeds the generator cap " +
                               std::to_string(generator_cap));
  }

  VarSet full() const { return VarSet::full(n); }
};

namespace detail {

inline void require_within(SubsetId s, const JordanConfig& cfg) {
  cfg.validate();
  if (!s.set().is_subset_of(cfg.full()))
    throw precondition_error("subset " + to_string(s) + " not contained in {1.." +
                             std::to_string(cfg.n) + "}");
}

inline Report base_report(std::string command, const JordanConfig& cfg) {
  Report r;
  r.command = std::move(command);
  r.n = cfg.n;
  r.a_mode = cfg.a_mode;
  r.b_mode = cfg.b_mode;
  return r;
}

/// Nonempty submasks of `s`, ordered by popcount then value.
inline std::vector<std::uint32_t> nonempty_submasks(VarSet s) {
  std::vector<std::uint32_t> out;
  const std::uint32_t m = s.mask();
  for (std::uint32_t t = m; t != 0; t = (t - 1) & m) out.push_back(t);
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

} // namespace detail

/// Renders at most `max_terms` terms of a (typically nonzero) witness.
inline std::string render_witness(const BPolynomial& p, std::size_t max_terms = 200) {
  if (p.size() <= max_terms) return render(p);
  BPolynomial head(p.a_mode(), p.b_mode());
  std::size_t k = 0;
  for (const auto& [bw, c] : p.terms()) {
    if (k++ == max_terms) break;
    head.add_term(bw, c);
  }
  return render(head) + " ... (" + std::to_string(p.size() - max_terms) + " more terms)";
}

/// h(a^n) - h(a)^n.
inline BPolynomial jordan_defect(const Polynomial& a, const JordanConfig& cfg) {
  cfg.validate();
  if (a.mode() != cfg.a_mode) throw mode_mismatch("jordan_defect: element not in the domain mode");
  for (const auto& [w, c] : a.terms())
    for (GeneratorId g : w.letters())
      if (g.index > cfg.n)
        throw precondition_error("jordan_defect: generator x" + std::to_string(g.index) +
                                 " outside x1..x" + std::to_string(cfg.n));
  const int n = static_cast<int>(cfg.n);
  BPolynomial power_image = lift(pow(a, n), cfg.b_mode);
  const BPolynomial image_power = b_pow(lift(a, cfg.b_mode), n);
  return power_image.add_scaled(image_power, -1);
}

/// Jordan defect of the sum of the generators in S (the |S|-argument map
/// with subscript |S|-1 in the usual notation).
inline BPolynomial phi(SubsetId s, const JordanConfig& cfg) {
  detail::require_within(s, cfg);
  return jordan_defect(sum_of_generators(s.set(), cfg.a_mode, cfg.generator_cap), cfg);
}

/// phi on every nonempty subset of `s`, keyed by mask.
using PhiTable = std::unordered_map<std::uint32_t, BPolynomial>;

inline PhiTable phi_table(SubsetId s, const JordanConfig& cfg) {
  detail::require_within(s, cfg);
  const auto masks = detail::nonempty_submasks(s.set());
  std::vector<BPolynomial> values(masks.size(), BPolynomial(cfg.a_mode, cfg.b_mode));
  parallel_for(masks.size(), cfg.threads,
               [&](std::size_t i) { values[i] = phi(SubsetId(VarSet(masks[i])), cfg); });
  PhiTable table;
  for (std::size_t i = 0; i < masks.size(); ++i) table.emplace(masks[i], std::move(values[i]));
  return table;
}

/// h(x1*...*xn) - h(x1)*...*h(xn).
inline BPolynomial plain_defect(const JordanConfig& cfg) {
  cfg.validate();
  std::vector<GeneratorId> letters;
  std::vector<HSymbol> factors;
  for (unsigned i = 1; i <= cfg.n; ++i) {
    const GeneratorId g = make_generator_id(i, cfg.generator_cap);
    letters.push_back(g);
    factors.push_back(HSymbol{Word({g}, cfg.a_mode)});
  }
  BPolynomial out(cfg.a_mode, cfg.b_mode);
  out.add_term(BWord({HSymbol{Word(letters, cfg.a_mode)}}, cfg.b_mode), 1);
  out.add_term(BWord(factors, cfg.b_mode), -1);
  return out;
}

/// psi_recursive on every nonempty subset of `s`, given phi on the same
/// lattice. Subsets are visited smallest first.
inline PhiTable psi_table(SubsetId s, const PhiTable& phis) {
  PhiTable psi;
  for (std::uint32_t t : detail::nonempty_submasks(s.set())) {
    BPolynomial value = phis.at(t);
    for (std::uint32_t u = (t - 1) & t; u != 0; u = (u - 1) & t) value.add_scaled(psi.at(u), -1);
    psi.emplace(t, std::move(value));
  }
  return psi;
}

/// phi(S) minus psi_recursive of every nonempty proper subset.
inline BPolynomial psi_recursive(SubsetId s, const JordanConfig& cfg) {
  const PhiTable phis = phi_table(s, cfg);
  return psi_table(s, phis).at(s.set().mask());
}

/// The exact-S component of phi(S).
inline BPolynomial psi_extract(SubsetId s, const JordanConfig& cfg) {
  return b_exact_varset_component(phi(s, cfg), s.set());
}

/// Inclusion-exclusion form: sum over nonempty T <= S of (-1)^{|S|-|T|} phi(T).
inline BPolynomial mobius_psi(SubsetId s, const JordanConfig& cfg) {
  const PhiTable phis = phi_table(s, cfg);
  BPolynomial out(cfg.a_mode, cfg.b_mode);
  for (std::uint32_t t : detail::nonempty_submasks(s.set())) {
    const int sign = ((s.size() - std::popcount(t)) % 2 == 0) ? 1 : -1;
    out.add_scaled(phis.at(t), sign);
  }
  return out;
}

/// sum over sigma in S_n of h(x_s(1)*...*x_s(n)) - h(x_s(1))*...*h(x_s(n)).
inline BPolynomial symmetrized_defect(const JordanConfig& cfg) {
  cfg.validate();
  std::vector<GeneratorId> perm;
  for (unsigned i = 1; i <= cfg.n; ++i) perm.push_back(make_generator_id(i, cfg.generator_cap));
  BPolynomial out(cfg.a_mode, cfg.b_mode);
  std::vector<HSymbol> factors(cfg.n);
  do {
    for (unsigned i = 0; i < cfg.n; ++i) factors[i] = HSymbol{Word({perm[i]}, cfg.a_mode)};
    out.add_term(BWord({HSymbol{Word(perm, cfg.a_mode)}}, cfg.b_mode), 1);
    out.add_term(BWord(factors, cfg.b_mode), -1);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Checks phi({1..n}) against the sum of its exact-coordinate pieces, both
/// as the recursive psi and as the literal components of phi({1..n}).
inline Report verify_decomposition(const JordanConfig& cfg) {
  cfg.validate();
  Report r = detail::base_report("decompose", cfg);
  const SubsetId full(cfg.full());
  const PhiTable phis = phi_table(full, cfg);
  const PhiTable psi = psi_table(full, phis);
  const BPolynomial& lhs = phis.at(full.set().mask());

  BPolynomial recursive_sum(cfg.a_mode, cfg.b_mode);
  BPolynomial extract_sum(cfg.a_mode, cfg.b_mode);
  for (std::uint32_t t : detail::nonempty_submasks(full.set())) {
    recursive_sum.add_scaled(psi.at(t), 1);
    extract_sum.add_scaled(b_exact_varset_component(lhs, VarSet(t)), 1);
  }
  const BPolynomial recursive_diff = b_sub(lhs, recursive_sum);
  const BPolynomial extract_diff = b_sub(lhs, extract_sum);
  r.pass = recursive_diff.is_zero() && extract_diff.is_zero();
  r.payload["subsets"] = (std::uint64_t{1} << cfg.n) - 1;
  r.payload["lhs_terms"] = lhs.size();
  r.payload["message"] = r.pass ? "decomposition identity holds" : "decomposition identity fails";
  if (!recursive_diff.is_zero()) r.payload["recursive_difference"] = render_witness(recursive_diff);
  if (!extract_diff.is_zero()) r.payload["extract_difference"] = render_witness(extract_diff);
  return r;
}

/// Checks psi_recursive({1..n}) == symmetrized_defect.
inline Report verify_theorem(const JordanConfig& cfg) {
  cfg.validate();
  Report r = detail::base_report("verify", cfg);
  const BPolynomial lhs = psi_recursive(SubsetId(cfg.full()), cfg);
  const BPolynomial rhs = symmetrized_defect(cfg);
  const BPolynomial diff = b_sub(lhs, rhs);
  r.pass = diff.is_zero();
  r.payload["lhs_terms"] = lhs.size();
  r.payload["rhs_terms"] = rhs.size();
  r.payload["message"] = r.pass ? "theorem identity holds" : "theorem identity fails";
  if (!r.pass) r.payload["difference"] = render_witness(diff);
  return r;
}

/// With both algebras commutative, checks symmetrized_defect == n! * plain_defect
/// and reports the scalar factor actually found.
inline Report verify_collapse(const JordanConfig& cfg) {
  cfg.validate();
  if (cfg.a_mode != Mode::commutative || cfg.b_mode != Mode::commutative)
    throw precondition_error("collapse requires both algebras commutative");
  Report r = detail::base_report("collapse", cfg);
  const BPolynomial sym = symmetrized_defect(cfg);
  const BPolynomial plain = plain_defect(cfg);
  const auto& [lead_word, lead_coeff] = *plain.terms().begin();
  const Coefficient factor = sym.coefficient(lead_word) / lead_coeff;
  const bool proportional = sym == b_scale(factor, plain);
  const Coefficient expected = factorial(cfg.n);
  r.pass = proportional && factor == expected;
  r.payload["factor"] = proportional ? to_string(factor) : std::string("none");
  r.payload["expected_factor"] = to_string(expected);
  r.payload["plain_defect"] = render(plain);
  r.payload["message"] = r.pass ? "symmetrized defect collapses to n! times the plain defect"
                                : "collapse fails";
  if (!r.pass) r.payload["difference"] = render_witness(b_sub(sym, b_scale(expected, plain)));
  return r;
}

/// Right-hand side of the incorrect decomposition formula: phi over every
/// subset of size 2..n-1, plus n! * plain_defect.
inline BPolynomial cheshmavar_rhs(const JordanConfig& cfg) {
  cfg.validate();
  if (cfg.n < 4) throw precondition_error("the refuted formula is stated for n >= 4");
  const PhiTable phis = phi_table(SubsetId(cfg.full()), cfg);
  BPolynomial out = b_scale(factorial(cfg.n), plain_defect(cfg));
  for (std::uint32_t t : detail::nonempty_submasks(cfg.full())) {
    const int k = std::popcount(t);
    if (k >= 2 && k <= static_cast<int>(cfg.n) - 1) out.add_scaled(phis.at(t), 1);
  }
  return out;
}

struct Multiplicity {
  int lhs = 0;
  int rhs = 0;
  /// True when the residual's exact-P component equals (lhs - rhs) * psi_extract(P).
  bool component_matches = false;
};

struct RefutationReport {
  unsigned n = 0;
  Mode a_mode = Mode::commutative;
  Mode b_mode = Mode::commutative;
  BPolynomial residual{Mode::commutative, Mode::commutative};
  /// Keyed by 2-subset.
  std::map<VarSet, Multiplicity> multiplicities;
};

/// Residual phi({1..n}) - cheshmavar_rhs and, for each pair P, how many phi
/// instances on each side carry a nonzero exact-P component.
inline RefutationReport refute_cheshmavar(const JordanConfig& cfg) {
  cfg.validate();
  if (cfg.n < 4) throw precondition_error("the refuted formula is stated for n >= 4");
  const VarSet full = cfg.full();
  const PhiTable phis = phi_table(SubsetId(full), cfg);

  BPolynomial rhs = b_scale(factorial(cfg.n), plain_defect(cfg));
  std::vector<std::uint32_t> rhs_subsets;
  for (std::uint32_t t : detail::nonempty_submasks(full)) {
    const int k = std::popcount(t);
    if (k >= 2 && k <= static_cast<int>(cfg.n) - 1) {
      rhs.add_scaled(phis.at(t), 1);
      rhs_subsets.push_back(t);
    }
  }

  RefutationReport out;
  out.n = cfg.n;
  out.a_mode = cfg.a_mode;
  out.b_mode = cfg.b_mode;
  const BPolynomial& lhs = phis.at(full.mask());
  out.residual = b_sub(lhs, rhs);

  for (std::uint32_t p : detail::nonempty_submasks(full)) {
    if (std::popcount(p) != 2) continue;
    const VarSet pair(p);
    Multiplicity m;
    m.lhs = b_exact_varset_component(lhs, pair).is_zero() ? 0 : 1;
    for (std::uint32_t t : rhs_subsets)
      if (!b_exact_varset_component(phis.at(t), pair).is_zero()) ++m.rhs;
    const BPolynomial piece = b_exact_varset_component(phis.at(p), pair);
    m.component_matches =
        b_exact_varset_component(out.residual, pair) == b_scale(m.lhs - m.rhs, piece);
    out.multiplicities.emplace(pair, m);
  }
  return out;
}

/// Refutation succeeds (pass) when the residual is nonzero.
inline Report to_report(const RefutationReport& rr) {
  Report r;
  r.command = "refute";
  r.n = rr.n;
  r.a_mode = rr.a_mode;
  r.b_mode = rr.b_mode;
  r.pass = !rr.residual.is_zero();
  r.payload["message"] = r.pass ? "formula refuted: residual is nonzero" : "residual vanishes";
  r.payload["residual_terms"] = rr.residual.size();
  r.payload["residual"] = render_witness(rr.residual, 40);
  Json table = Json::object();
  for (const auto& [pair, m] : rr.multiplicities) {
    Json row;
    row["lhs"] = m.lhs;
    row["rhs"] = m.rhs;
    row["residual_component_factor"] = m.lhs - m.rhs;
    row["component_matches"] = m.component_matches;
    table[to_string(pair)] = row;
  }
  r.payload["multiplicities"] = table;
  return r;
}

struct CertificateEntry {
  int sign = 1;
  SubsetId subset;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

/// Signed list of phi instances summing to a target expression.
struct Certificate {
  std::vector<CertificateEntry> entries;
  /// fnv1a64 of the rendered target.
  std::string target_hash;
};

inline BPolynomial evaluate_certificate(const Certificate& cert, const JordanConfig& cfg) {
  VarSet support;
  for (const auto& e : cert.entries) support = support | e.subset.set();
  BPolynomial out(cfg.a_mode, cfg.b_mode);
  if (support.empty()) return out;
  const PhiTable phis = phi_table(SubsetId(support), cfg);
  for (const auto& e : cert.entries) out.add_scaled(phis.at(e.subset.set().mask()), e.sign);
  return out;
}

/// Inclusion-exclusion certificate for the symmetrized defect, checked by
/// evaluation before it is returned.
inline Certificate emit_certificate(const JordanConfig& cfg) {
  cfg.validate();
  std::vector<std::uint32_t> masks = detail::nonempty_submasks(cfg.full());
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) > std::popcount(b);
  });
  Certificate cert;
  for (std::uint32_t t : masks) {
    const int sign = ((cfg.n - std::popcount(t)) % 2 == 0) ? 1 : -1;
    cert.entries.push_back({sign, SubsetId(VarSet(t))});
  }
  const BPolynomial target = symmetrized_defect(cfg);
  if (evaluate_certificate(cert, cfg) != target)
    throw internal_error("certificate does not reproduce the symmetrized defect");
  cert.target_hash = fnv1a64(render(target));
  return cert;
}

/// One `<sign> phi {i1,...}` line per entry, then `target <hash>`.
inline std::string write_certificate(const Certificate& cert) {
  std::string out;
  for (const auto& e : cert.entries)
    out += (e.sign > 0 ? "+1" : "-1") + std::string(" phi ") + to_string(e.subset) + "\n";
  out += "target " + cert.target_hash + "\n";
  return out;
}

inline Certificate parse_certificate(std::string_view text) {
  Certificate cert;
  bool have_target = false;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    auto fail = [&](const std::string& why) {
      throw precondition_error("certificate line " + std::to_string(line_no) + ": " + why);
    };
    if (have_target) fail("content after target line");
    if (line.starts_with("target ")) {
      cert.target_hash = std::string(line.substr(7));
      have_target = true;
      continue;
    }
    int sign = 0;
    if (line.starts_with("+1 phi {")) sign = 1;
    else if (line.starts_with("-1 phi {")) sign = -1;
    else fail("expected '<sign> phi {...}'");
    if (line.back() != '}') fail("unterminated subset");
    std::string_view body = line.substr(8, line.size() - 9);
    VarSet s;
    while (!body.empty()) {
      const std::size_t comma = body.find(',');
      const std::string_view item = body.substr(0, comma);
      unsigned v = 0;
      if (item.empty() || item.size() > 2) fail("bad subset member");
      for (char c : item) {
        if (c < '0' || c > '9') fail("bad subset member");
        v = v * 10 + static_cast<unsigned>(c - '0');
      }
      s.insert(make_generator_id(v, max_generators));
      body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    }
    if (s.empty()) fail("empty subset");
    cert.entries.push_back({sign, SubsetId(s)});
  }
  if (!have_target) throw precondition_error("certificate has no target line");
  return cert;
}

/// Re-evaluates a certificate and compares it with the symmetrized defect
/// and with the recorded target hash.
inline Report verify_certificate(const Certificate& cert, const JordanConfig& cfg) {
  cfg.validate();
  Report r = detail::base_report("certificate", cfg);
  for (const auto& e : cert.entries)
    if (!e.subset.set().is_subset_of(cfg.full()))
      throw precondition_error("certificate subset " + to_string(e.subset) + " outside {1..n}");
  const BPolynomial value = evaluate_certificate(cert, cfg);
  const BPolynomial target = symmetrized_defect(cfg);
  const bool matches_target = value == target;
  const bool hash_matches = fnv1a64(render(value)) == cert.target_hash;
  r.pass = matches_target && hash_matches;
  r.payload["entries"] = cert.entries.size();
  r.payload["matches_symmetrized_defect"] = matches_target;
  r.payload["hash_matches"] = hash_matches;
  if (!matches_target) r.payload["difference"] = render_witness(b_sub(value, target));
  return r;
}

inline Report certificate_report(const Certificate& cert, const JordanConfig& cfg) {
  Report r = detail::base_report("certificate", cfg);
  r.pass = true;
  Json lines = Json::array();
  for (const auto& e : cert.entries)
    lines.push_back((e.sign > 0 ? "+1" : "-1") + std::string(" phi ") + to_string(e.subset));
  r.payload["entries"] = lines;
  r.payload["target"] = cert.target_hash;
  return r;
}

} // namespace njordan

#endif // NJORDAN_JORDAN_HPP
