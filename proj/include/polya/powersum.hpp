#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polya/partition.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Exact symmetric function in the power-sum basis: a finite rational
/// combination of monomials psi_lambda, keyed by the partition of
/// psi-indices.  Zero coefficients are never stored.
class PowerSumPolynomial {
public:
  using TermMap = std::map<Partition, Rational, PartitionLess>;

  PowerSumPolynomial() = default;

  static PowerSumPolynomial monomial(Partition lambda, Rational coeff = 1) {
    PowerSumPolynomial f;
    if (coeff != 0) f.terms_[std::move(lambda)] = std::move(coeff);
    return f;
  }

  static PowerSumPolynomial one() { return monomial(Partition{}); }

  /// The single power sum psi_k.
  static PowerSumPolynomial psi(unsigned k) {
    return monomial(Partition{{k}});
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Max degree over the support, 0 for the zero polynomial.
  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [p, c] : terms_) d = std::max(d, p.degree());
    return d;
  }

  void add_term(const Partition& lambda, const Rational& coeff) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
      if (coeff != 0) terms_[lambda] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  PowerSumPolynomial& operator+=(const PowerSumPolynomial& g) {
    for (const auto& [p, c] : g.terms_) add_term(p, c);
    return *this;
  }
  PowerSumPolynomial& operator-=(const PowerSumPolynomial& g) {
    for (const auto& [p, c] : g.terms_) add_term(p, -c);
    return *this;
  }
  PowerSumPolynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [p, c] : terms_) c *= s;
    }
    return *this;
  }

  friend PowerSumPolynomial operator+(PowerSumPolynomial f,
                                      const PowerSumPolynomial& g) {
    return f += g;
  }
  friend PowerSumPolynomial operator-(PowerSumPolynomial f,
                                      const PowerSumPolynomial& g) {
    return f -= g;
  }
  friend PowerSumPolynomial operator*(PowerSumPolynomial f, const Rational& s) {
    return f *= s;
  }
  friend PowerSumPolynomial operator*(const Rational& s, PowerSumPolynomial f) {
    return f *= s;
  }

  /// Usual product of Sym: multiset union of psi-indices on basis terms.
  friend PowerSumPolynomial operator*(const PowerSumPolynomial& f,
                                      const PowerSumPolynomial& g) {
    PowerSumPolynomial out;
    for (const auto& [pf, cf] : f.terms_)
      for (const auto& [pg, cg] : g.terms_)
        out.add_term(pf.merged_with(pg), cf * cg);
    return out;
  }

  bool operator==(const PowerSumPolynomial&) const = default;

private:
  TermMap terms_;
};

/// Star product on basis monomials:
///   prod psi_i^{a_i} * prod psi_j^{b_j} = prod_{i,j} psi_{lcm(i,j)}^{a_i b_j gcd(i,j)}
/// extended bilinearly.  psi_1 is the star unit.
inline Partition star_basis(const Partition& lambda, const Partition& mu) {
  std::map<unsigned, unsigned> mult;
  for (auto [i, a] : lambda.multiplicities())
    for (auto [j, b] : mu.multiplicities())
      mult[std::lcm(i, j)] += a * b * std::gcd(i, j);
  std::vector<unsigned> parts;
  for (auto [part, m] : mult)
    for (unsigned k = 0; k < m; ++k) parts.push_back(part);
  return Partition(std::move(parts));
}

inline PowerSumPolynomial psum_star(const PowerSumPolynomial& f,
                                    const PowerSumPolynomial& g) {
  PowerSumPolynomial out;
  for (const auto& [pf, cf] : f.terms())
    for (const auto& [pg, cg] : g.terms())
      out.add_term(star_basis(pf, pg), cf * cg);
  return out;
}

/// Complete homogeneous symmetric function: h_n = sum_{|lambda|=n} psi_lambda / z_lambda.
inline PowerSumPolynomial h(unsigned n) {
  PowerSumPolynomial out;
  for (const Partition& lambda : partitions_of(n))
    out.add_term(lambda, Rational(1, z_of(lambda)));
  return out;
}

/// Elementary symmetric function: e_n = sum (-1)^{n - l(lambda)} psi_lambda / z_lambda.
inline PowerSumPolynomial e(unsigned n) {
  PowerSumPolynomial out;
  for (const Partition& lambda : partitions_of(n)) {
    Rational c(1, z_of(lambda));
    if ((n - lambda.length()) % 2 == 1) c = -c;
    out.add_term(lambda, c);
  }
  return out;
}

inline std::string to_string(const PowerSumPolynomial& f,
                             const char* basis_letter = "p") {
  if (f.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : f.terms()) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    if (a != 1 || lambda.empty()) {
      out += to_string(a);
      if (!lambda.empty()) out += "*";
    }
    if (!lambda.empty()) out += std::string(basis_letter) + to_string(lambda);
  }
  return out;
}

}  // namespace polya
