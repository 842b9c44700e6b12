#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "polya/permutation.hpp"
#include "polya/rational.hpp"

namespace polya {

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// Explicit finite permutation group: all elements of one degree,
/// verified closed under composition and inverse and containing the
/// identity.
class PermutationGroup {
public:
  PermutationGroup(int degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    verify();
  }

  int degree() const { return degree_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }

  bool contains(const Permutation& p) const {
    return std::binary_search(elements_.begin(), elements_.end(), p);
  }

  bool operator==(const PermutationGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

  struct trusted {};
  PermutationGroup(trusted, int degree, std::vector<Permutation> elements)
      : degree_(degree), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
  }

private:
  void verify() const {
    if (elements_.empty())
      throw std::invalid_argument("group must be nonempty");
    for (const Permutation& p : elements_) {
      if (p.degree() != degree_)
        throw std::invalid_argument("group element of wrong degree");
      if (!contains(p.inverse()))
        throw std::invalid_argument("element set not closed under inverse");
    }
    if (!contains(Permutation::identity(degree_)))
      throw std::invalid_argument("group must contain the identity");
    for (const Permutation& p : elements_)
      for (const Permutation& q : elements_)
        if (!contains(p.compose(q)))
          throw std::invalid_argument("element set not closed under composition");
  }

  int degree_;
  std::vector<Permutation> elements_;
};

inline PermutationGroup symmetric_group(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 0);
  std::vector<Permutation> elems;
  do {
    elems.emplace_back(Permutation::trusted{}, w);
  } while (std::next_permutation(w.begin(), w.end()));
  return PermutationGroup(PermutationGroup::trusted{}, n, std::move(elems));
}

inline bool is_even(const Permutation& p) {
  int transpositions = 0;
  for (const Cycle& c : cycle_decomposition(p))
    transpositions += c.length() - 1;
  return transpositions % 2 == 0;
}

inline PermutationGroup alternating_group(int n) {
  PermutationGroup sym = symmetric_group(n);
  std::vector<Permutation> elems;
  for (const Permutation& p : sym.elements())
    if (is_even(p)) elems.push_back(p);
  return PermutationGroup(PermutationGroup::trusted{}, n, std::move(elems));
}

inline PermutationGroup cyclic_group(int n) {
  std::vector<Permutation> elems;
  for (int s = 0; s < std::max(n, 1); ++s) {
    std::vector<int> w(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = (i + s) % n;
    elems.emplace_back(Permutation::trusted{}, std::move(w));
  }
  if (elems.empty()) elems.push_back(Permutation::identity(0));
  return PermutationGroup(PermutationGroup::trusted{}, n, std::move(elems));
}

/// Closure of a generating set under composition; the cap guards memory.
inline PermutationGroup group_closure(const std::vector<Permutation>& gens,
                                      std::size_t cap = kDefaultClosureCap) {
  if (gens.empty()) throw std::invalid_argument("closure needs generators");
  int n = gens.front().degree();
  for (const Permutation& g : gens)
    if (g.degree() != n)
      throw std::invalid_argument("generators of mixed degree");

  std::set<Permutation> elems{Permutation::identity(n)};
  std::vector<Permutation> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& g : gens) {
        Permutation q = g.compose(p);
        if (elems.insert(q).second) {
          if (elems.size() > cap)
            throw resource_error("group closure exceeds cap of " +
                                 std::to_string(cap) + " elements");
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return PermutationGroup(PermutationGroup::trusted{}, n,
                          std::vector<Permutation>(elems.begin(), elems.end()));
}

/// Elementwise intransitive product; always order |G1|*|G2|.
inline PermutationGroup group_intransitive(const PermutationGroup& g1,
                                           const PermutationGroup& g2) {
  std::vector<Permutation> elems;
  elems.reserve(g1.order() * g2.order());
  for (const Permutation& a : g1.elements())
    for (const Permutation& b : g2.elements())
      elems.push_back(intransitive_product(a, b));
  return PermutationGroup(PermutationGroup::trusted{},
                          g1.degree() + g2.degree(), std::move(elems));
}

/// Elementwise Cartesian product.  The pair map is injective whenever
/// both degrees are positive; `injective`, when given, reports it.
inline PermutationGroup group_cartesian(const PermutationGroup& g1,
                                        const PermutationGroup& g2,
                                        bool* injective = nullptr) {
  std::set<Permutation> elems;
  for (const Permutation& a : g1.elements())
    for (const Permutation& b : g2.elements())
      elems.insert(cartesian_product(a, b));
  if (injective) *injective = elems.size() == g1.order() * g2.order();
  return PermutationGroup(PermutationGroup::trusted{},
                          g1.degree() * g2.degree(),
                          std::vector<Permutation>(elems.begin(), elems.end()));
}

// Group spec grammar used by the CLI and tests: "S:n", "A:n", "C:n",
// "gens:w1;w2;...", "file:path" (one word per line, '#' comments).
inline PermutationGroup parse_group_spec(const std::string& spec,
                                         bool one_indexed = false) {
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw parse_error("group spec needs a ':' (S:n, A:n, C:n, gens:..., file:...)");
  std::string kind = spec.substr(0, colon);
  std::string rest = spec.substr(colon + 1);
  if (kind == "S" || kind == "A" || kind == "C") {
    if (rest.empty() || rest.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad degree in group spec: '" + rest + "'");
    int n = std::stoi(rest);
    if (kind == "S") return symmetric_group(n);
    if (kind == "A") return alternating_group(n);
    return cyclic_group(n);
  }
  if (kind == "gens") {
    std::vector<Permutation> gens;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t semi = rest.find(';', pos);
      std::string tok = rest.substr(
          pos, semi == std::string::npos ? std::string::npos : semi - pos);
      if (!tok.empty()) gens.push_back(parse_permutation(tok, one_indexed));
      if (semi == std::string::npos) break;
      pos = semi + 1;
    }
    if (gens.empty()) throw parse_error("no generators in group spec");
    return group_closure(gens);
  }
  if (kind == "file") {
    std::ifstream in(rest);
    if (!in) throw parse_error("cannot open group file '" + rest + "'");
    std::vector<Permutation> elems;
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
        line.pop_back();
      std::size_t start = line.find_first_not_of(' ');
      if (start == std::string::npos) continue;
      elems.push_back(parse_permutation(line.substr(start), one_indexed));
    }
    if (elems.empty()) throw parse_error("empty group file '" + rest + "'");
    return PermutationGroup(elems.front().degree(), std::move(elems));
  }
  throw parse_error("unknown group spec kind '" + kind + "'");
}

}  // namespace polya
