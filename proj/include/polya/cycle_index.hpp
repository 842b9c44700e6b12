#pragma once

#include <map>

#include "polya/group.hpp"
#include "polya/permutation.hpp"
#include "polya/powersum.hpp"

namespace polya {

/// Cycle type of sigma as a partition of its degree.
inline Partition cycle_type(const Permutation& sigma) {
  std::vector<unsigned> parts;
  for (const Cycle& c : cycle_decomposition(sigma))
    parts.push_back(static_cast<unsigned>(c.length()));
  return Partition(std::move(parts));
}

/// The monomial prod_j psi_j^{c_j(sigma)}, c_j = number of j-cycles.
inline PowerSumPolynomial frak_Z(const Permutation& sigma) {
  return PowerSumPolynomial::monomial(cycle_type(sigma));
}

/// A finite rational combination of permutations (mixed degrees allowed).
using PermutationCombination = std::map<Permutation, Rational>;

inline PowerSumPolynomial frak_Z_linear(const PermutationCombination& x) {
  PowerSumPolynomial out;
  for (const auto& [sigma, c] : x)
    out.add_term(cycle_type(sigma), c);
  return out;
}

/// Polya's cycle index polynomial: the average of frak_Z over G.
inline PowerSumPolynomial Z(const PermutationGroup& g) {
  if (g.elements().empty()) throw std::domain_error("cycle index of empty set");
  PowerSumPolynomial out;
  Rational inv(1, Integer(g.order()));
  for (const Permutation& sigma : g.elements())
    out.add_term(cycle_type(sigma), inv);
  return out;
}

}  // namespace polya
