#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// A permutation of {0..n-1} stored as its image word: word[i] is the
/// image of i.  The degree-0 permutation is allowed (unit for the
/// intransitive product).
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<int> sorted = word_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != static_cast<int>(i))
        throw std::invalid_argument("word is not a permutation of 0..n-1");
  }

  static Permutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    return Permutation(trusted{}, std::move(w));
  }

  int degree() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& word() const { return word_; }

  int apply(int i) const {
    if (i < 0 || i >= degree())
      throw std::domain_error("index " + std::to_string(i) +
                              " out of range for degree " +
                              std::to_string(degree()));
    return word_[static_cast<std::size_t>(i)];
  }

  Permutation inverse() const {
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < word_.size(); ++i)
      w[static_cast<std::size_t>(word_[i])] = static_cast<int>(i);
    return Permutation(trusted{}, std::move(w));
  }

  /// (this o other)(i) = this(other(i)); degrees must match.
  Permutation compose(const Permutation& other) const {
    if (degree() != other.degree())
      throw std::domain_error("compose: degree mismatch (" +
                              std::to_string(degree()) + " vs " +
                              std::to_string(other.degree()) + ")");
    std::vector<int> w(word_.size());
    for (std::size_t i = 0; i < w.size(); ++i)
      w[i] = word_[static_cast<std::size_t>(other.word_[i])];
    return Permutation(trusted{}, std::move(w));
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < word_.size(); ++i)
      if (word_[i] != static_cast<int>(i)) return false;
    return true;
  }

  auto operator<=>(const Permutation&) const = default;

  struct trusted {};
  Permutation(trusted, std::vector<int> word) : word_(std::move(word)) {}

private:
  std::vector<int> word_;
};

/// A cycle in canonical form: minimal element first.
class Cycle {
public:
  explicit Cycle(std::vector<int> elems) : elements_(std::move(elems)) {
    if (elements_.empty()) throw std::invalid_argument("empty cycle");
    auto it = std::min_element(elements_.begin(), elements_.end());
    std::rotate(elements_.begin(), it, elements_.end());
  }

  const std::vector<int>& elements() const { return elements_; }
  int length() const { return static_cast<int>(elements_.size()); }
  int min_element() const { return elements_.front(); }

  auto operator<=>(const Cycle&) const = default;

private:
  std::vector<int> elements_;
};

/// Cycles of sigma, fixed points included, sorted by minimal element.
inline std::vector<Cycle> cycle_decomposition(const Permutation& sigma) {
  int n = sigma.degree();
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  std::vector<Cycle> cycles;
  for (int i = 0; i < n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    std::vector<int> c;
    int j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      c.push_back(j);
      j = sigma.apply(j);
    }
    cycles.emplace_back(std::move(c));
  }
  return cycles;
}

inline Permutation permutation_from_cycles(int degree,
                                           const std::vector<Cycle>& cycles) {
  std::vector<int> w(static_cast<std::size_t>(degree));
  std::iota(w.begin(), w.end(), 0);
  for (const Cycle& c : cycles) {
    const auto& e = c.elements();
    for (std::size_t k = 0; k < e.size(); ++k)
      w[static_cast<std::size_t>(e[k])] = e[(k + 1) % e.size()];
  }
  return Permutation(Permutation::trusted{}, std::move(w));
}

/// Shifted concatenation: degree n+m, sigma2's entries shifted by +n.
inline Permutation intransitive_product(const Permutation& s1,
                                        const Permutation& s2) {
  int n = s1.degree();
  std::vector<int> w = s1.word();
  w.reserve(static_cast<std::size_t>(n + s2.degree()));
  for (int x : s2.word()) w.push_back(x + n);
  return Permutation(Permutation::trusted{}, std::move(w));
}

/// Cartesian product on n*m points, pointwise: the image of i+n*j is
/// s1(i) + n*s2(j).  This is the default implementation.
inline Permutation cartesian_product(const Permutation& s1,
                                     const Permutation& s2) {
  int n = s1.degree(), m = s2.degree();
  std::vector<int> w(static_cast<std::size_t>(n) * static_cast<std::size_t>(m));
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i)
      w[static_cast<std::size_t>(i + n * j)] =
          s1.word()[static_cast<std::size_t>(i)] +
          n * s2.word()[static_cast<std::size_t>(j)];
  return Permutation(Permutation::trusted{}, std::move(w));
}

/// Cartesian product built cycle pair by cycle pair: an l-cycle times an
/// l'-cycle yields gcd(l,l') cycles of length lcm(l,l').  Kept alongside
/// the pointwise version and cross-tested against it.
inline Permutation cartesian_product_cycles(const Permutation& s1,
                                            const Permutation& s2) {
  int n = s1.degree(), m = s2.degree();
  std::vector<Cycle> result;
  for (const Cycle& c : cycle_decomposition(s1)) {
    for (const Cycle& cp : cycle_decomposition(s2)) {
      int l = c.length(), lp = cp.length();
      int g = std::gcd(l, lp), L = std::lcm(l, lp);
      for (int s = 0; s < g; ++s) {
        std::vector<int> elems(static_cast<std::size_t>(L));
        for (int t = 0; t < L; ++t)
          elems[static_cast<std::size_t>(t)] =
              c.elements()[static_cast<std::size_t>((s + t) % l)] +
              n * cp.elements()[static_cast<std::size_t>(t % lp)];
        result.emplace_back(std::move(elems));
      }
    }
  }
  return permutation_from_cycles(n * m, result);
}

/// Std(w): entry i is (number of letters equal to w[i] among w[0..i])
/// + (number of letters smaller than w[i] in w), minus one for the
/// 0-indexed convention.
template <typename Word>
Permutation standardize(const Word& w) {
  std::size_t n = w.size();
  std::vector<int> word(n);
  for (std::size_t i = 0; i < n; ++i) {
    int rank = 0;
    for (std::size_t k = 0; k <= i; ++k)
      if (w[k] == w[i]) ++rank;
    for (std::size_t k = 0; k < n; ++k)
      if (w[k] < w[i]) ++rank;
    word[i] = rank - 1;
  }
  return Permutation(Permutation::trusted{}, std::move(word));
}

/// Connected: no proper initial segment {0..k}, k < n-1, is invariant.
inline bool is_connected(const Permutation& sigma) {
  int n = sigma.degree();
  if (n == 0) return false;
  int running_max = -1;
  for (int k = 0; k < n - 1; ++k) {
    running_max = std::max(running_max, sigma.word()[static_cast<std::size_t>(k)]);
    if (running_max == k) return false;
  }
  return true;
}

/// Unique maximal factorization into connected permutations under the
/// intransitive product.  Cut points are the prefixes {0..k} mapped to
/// themselves.
inline std::vector<Permutation> connected_factorization(
    const Permutation& sigma) {
  int n = sigma.degree();
  std::vector<Permutation> factors;
  int start = 0, running_max = -1;
  for (int k = 0; k < n; ++k) {
    running_max = std::max(running_max, sigma.word()[static_cast<std::size_t>(k)]);
    if (running_max == k) {
      std::vector<int> w;
      w.reserve(static_cast<std::size_t>(k - start + 1));
      for (int i = start; i <= k; ++i)
        w.push_back(sigma.word()[static_cast<std::size_t>(i)] - start);
      factors.emplace_back(Permutation::trusted{}, std::move(w));
      start = k + 1;
      running_max = k;
    }
  }
  return factors;
}

// --- text formats ------------------------------------------------------
// Comma-free digit word when n <= 10 ("1320"), comma-separated otherwise.

inline std::string to_string(const Permutation& sigma, bool one_indexed = false) {
  int shift = one_indexed ? 1 : 0;
  std::string out;
  if (sigma.degree() <= (one_indexed ? 9 : 10)) {
    for (int x : sigma.word()) out += static_cast<char>('0' + x + shift);
  } else {
    for (std::size_t i = 0; i < sigma.word().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(sigma.word()[i] + shift);
    }
  }
  return out;
}

inline std::string to_string(const std::vector<Cycle>& cycles) {
  std::string out;
  for (const Cycle& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.elements().size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c.elements()[i]);
    }
    out += ')';
  }
  return out;
}

inline Permutation parse_permutation(const std::string& text,
                                     bool one_indexed = false) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string tok = text.substr(pos, comma == std::string::npos
                                             ? std::string::npos
                                             : comma - pos);
      if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("malformed permutation entry '" + tok + "'", pos);
      w.push_back(std::stoi(tok));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw parse_error(std::string("unexpected character '") + text[i] +
                              "' in permutation word",
                          i);
      w.push_back(text[i] - '0');
    }
  }
  if (one_indexed)
    for (int& x : w) --x;
  try {
    return Permutation(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw parse_error(std::string(e.what()) + ": '" + text + "'");
  }
}

}  // namespace polya
