#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "polya/rational.hpp"

namespace polya {

/// Integer partition: weakly decreasing positive parts; the empty
/// partition has degree 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned degree() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
  }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity map: count of each distinct part size.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (unsigned p : parts_) {
      if (!out.empty() && out.back().first == p)
        ++out.back().second;
      else
        out.emplace_back(p, 1u);
    }
    return out;
  }

  /// Multiset union of parts (indexing the product of power-sum monomials).
  Partition merged_with(const Partition& other) const {
    std::vector<unsigned> parts;
    parts.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(),
               other.parts_.end(), std::back_inserter(parts), std::greater<>());
    Partition out;
    out.parts_ = std::move(parts);
    return out;
  }

  bool operator==(const Partition&) const = default;

private:
  std::vector<unsigned> parts_;
};

/// Canonical iteration order: by degree, then lexicographically on the
/// parts ("1/6*p[1,1,1] + 1/2*p[2,1] + 1/3*p[3]").
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.parts() < b.parts();
  }
};

/// All partitions of n, largest part first within each partition.
inline std::vector<Partition> partitions_of(unsigned n) {
  std::vector<Partition> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest,
                                                    unsigned max_part) {
    if (rest == 0) {
      out.emplace_back(current);
      return;
    }
    for (unsigned p = std::min(rest, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(rest - p, p);
      current.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return out;
}

/// z_lambda = prod over part sizes i of i^{n_i} * n_i!.
inline Integer z_of(const Partition& lambda) {
  Integer z = 1;
  for (auto [part, mult] : lambda.multiplicities()) {
    for (unsigned k = 0; k < mult; ++k) z *= part;
    for (unsigned k = 2; k <= mult; ++k) z *= k;
  }
  return z;
}

inline std::string to_string(const Partition& lambda) {
  std::string out = "[";
  for (std::size_t i = 0; i < lambda.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.parts()[i]);
  }
  return out + "]";
}

}  // namespace polya
