#pragma once

#include <map>
#include <string>
#include <vector>

#include "polya/partition.hpp"
#include "polya/powersum.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Prime-exponent vector of n >= 1 over the primes 2, 3, 5, ...;
/// trailing zeroes trimmed so that nu(1) is the empty vector.
inline std::vector<unsigned> prime_signature(unsigned n) {
  std::vector<unsigned> nu;
  unsigned rest = n;
  for (unsigned p = 2; rest > 1; ++p) {
    bool prime = true;
    for (unsigned q = 2; q * q <= p; ++q)
      if (p % q == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    nu.push_back(e);
  }
  while (!nu.empty() && nu.back() == 0) nu.pop_back();
  return nu;
}

/// Integer combination of basis vectors delta_v, v a finitely supported
/// prime-exponent vector; the target of the phi embedding.
class PrimeSignatureElement {
public:
  using TermMap = std::map<std::vector<unsigned>, Integer>;

  PrimeSignatureElement() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(std::vector<unsigned> v, const Integer& c) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    auto it = terms_.find(v);
    if (it == terms_.end()) {
      if (c != 0) terms_[std::move(v)] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PrimeSignatureElement& operator+=(const PrimeSignatureElement& g) {
    for (const auto& [v, c] : g.terms_) add_term(v, c);
    return *this;
  }
  friend PrimeSignatureElement operator+(PrimeSignatureElement f,
                                         const PrimeSignatureElement& g) {
    return f += g;
  }

  bool operator==(const PrimeSignatureElement&) const = default;

private:
  TermMap terms_;
};

/// phi(prod psi_i^{a_i}) = sum_i i*a_i * delta_{nu(i)}.
inline PrimeSignatureElement phi(const Partition& monomial) {
  PrimeSignatureElement out;
  for (auto [i, a] : monomial.multiplicities())
    out.add_term(prime_signature(i), Integer(i) * a);
  return out;
}

/// Checked entry point: the input must be a single monic psi-monomial.
inline PrimeSignatureElement phi(const PowerSumPolynomial& f) {
  if (f.terms().size() != 1 || f.terms().begin()->second != 1)
    throw std::domain_error("phi requires a single monic power-sum monomial");
  return phi(f.terms().begin()->first);
}

/// Product in the monoid algebra of (N^primes, sup): coefficients
/// multiply, exponent vectors take the componentwise sup.
inline PrimeSignatureElement sup_product(const PrimeSignatureElement& a,
                                         const PrimeSignatureElement& b) {
  PrimeSignatureElement out;
  for (const auto& [va, ca] : a.terms())
    for (const auto& [vb, cb] : b.terms()) {
      std::vector<unsigned> v(std::max(va.size(), vb.size()), 0);
      for (std::size_t i = 0; i < va.size(); ++i) v[i] = va[i];
      for (std::size_t i = 0; i < vb.size(); ++i) v[i] = std::max(v[i], vb[i]);
      out.add_term(std::move(v), ca * cb);
    }
  return out;
}

inline std::string to_string(const PrimeSignatureElement& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  for (const auto& [v, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += c.str() + "*d[";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
    out += "]";
  }
  return out;
}

}  // namespace polya
