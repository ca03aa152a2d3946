#ifndef NJORDAN_SPARSE_HPP
#define NJORDAN_SPARSE_HPP

// Term-map machinery shared by the domain algebra (keys: Word) and the
// codomain algebra (keys: BWord). A term map never stores a zero
// coefficient; std::map keeps keys in the rendering order.

#include <cstddef>
#include <iterator>
#include <map>
#include <string>
#include <vector>

#include "coefficient.hpp"
#include "parallel.hpp"

namespace njordan::sparse {

template <class Key>
using TermMap = std::map<Key, Coefficient>;

template <class Key>
void accumulate(TermMap<Key>& terms, const Key& key, const Coefficient& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms.erase(it);
  }
}

template <class Key>
void drop_zeros(TermMap<Key>& terms) {
  std::erase_if(terms, [](const auto& kv) { return sgn(kv.second) == 0; });
}

template <class Key>
TermMap<Key> add(const TermMap<Key>& p, const TermMap<Key>& q, const Coefficient& q_factor = 1) {
  TermMap<Key> out = p;
  for (const auto& [k, c] : q) accumulate(out, k, q_factor * c);
  return out;
}

template <class Key>
TermMap<Key> scale(const Coefficient& factor, const TermMap<Key>& p) {
  TermMap<Key> out;
  if (sgn(factor) == 0) return out;
  for (const auto& [k, c] : p) out.emplace_hint(out.end(), k, factor * c);
  return out;
}

/// Distributive product. `key_product(a, b)` must return the canonical key of
/// the monomial product. With threads > 1 the left operand is split into
/// blocks whose partial products are merged in block order; exact arithmetic
/// makes the result identical to the sequential one.
template <class Key, class KeyProduct>
TermMap<Key> multiply(const TermMap<Key>& p, const TermMap<Key>& q, KeyProduct&& key_product,
                      unsigned threads = 1) {
  auto block_product = [&](auto first, auto last) {
    TermMap<Key> acc;
    Coefficient prod;
    for (auto i = first; i != last; ++i) {
      for (const auto& [kq, cq] : q) {
        prod = i->second * cq;
        auto [it, inserted] = acc.try_emplace(key_product(i->first, kq), prod);
        if (!inserted) it->second += prod;
      }
    }
    drop_zeros(acc);
    return acc;
  };

  if (threads <= 1 || p.size() < 2 * threads) return block_product(p.begin(), p.end());

  std::vector<typename TermMap<Key>::const_iterator> cuts;
  const std::size_t step = (p.size() + threads - 1) / threads;
  std::size_t pos = 0;
  for (auto it = p.begin(); it != p.end(); ++it, ++pos)
    if (pos % step == 0) cuts.push_back(it);
  cuts.push_back(p.end());

  std::vector<TermMap<Key>> partial(cuts.size() - 1);
  parallel_for(partial.size(), threads,
               [&](std::size_t b) { partial[b] = block_product(cuts[b], cuts[b + 1]); });
  TermMap<Key> out = std::move(partial.front());
  for (std::size_t b = 1; b < partial.size(); ++b)
    for (const auto& [k, c] : partial[b]) accumulate(out, k, c);
  return out;
}

template <class Key, class KeyPred>
TermMap<Key> filter(const TermMap<Key>& p, KeyPred&& keep) {
  TermMap<Key> out;
  for (const auto& [k, c] : p)
    if (keep(k)) out.emplace_hint(out.end(), k, c);
  return out;
}

/// `x1*x2 - 3/2*x2*x1 + 1`. The monomial renderer returns "" for the unit.
template <class Key, class KeyRender>
std::string render(const TermMap<Key>& p, KeyRender&& render_key) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : p) {
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Coefficient mag = abs(c);
    const std::string mono = render_key(k);
    if (mono.empty()) {
      out += to_string(mag);
    } else {
      if (mag != 1) {
        out += to_string(mag);
        out += '*';
      }
      out += mono;
    }
  }
  return out;
}

} // namespace njordan::sparse

#endif // NJORDAN_SPARSE_HPP
