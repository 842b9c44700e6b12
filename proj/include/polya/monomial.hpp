#pragma once

#include <map>
#include <string>

#include "polya/partition.hpp"
#include "polya/powersum.hpp"
#include "polya/ypoly.hpp"

namespace polya {

/// Symmetric function in the monomial basis: sum d_lambda m_lambda.
class MonomialPolynomial {
public:
  using TermMap = std::map<Partition, Rational, PartitionLess>;

  MonomialPolynomial() = default;

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Partition& lambda, const Rational& c) {
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
      if (c != 0) terms_[lambda] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  bool operator==(const MonomialPolynomial&) const = default;

private:
  TermMap terms_;
};

/// Expand f in the monomial basis.  Works in exactly d = deg(f) fresh
/// variables (enough to be faithful for degree-d symmetric functions):
/// the coefficient of m_lambda is the coefficient of the monomial
/// y_0^{lambda_1} y_1^{lambda_2} ... in the specialization.
inline MonomialPolynomial to_monomial(const PowerSumPolynomial& f) {
  MonomialPolynomial out;
  if (f.is_zero()) return out;
  unsigned d = f.degree();
  YPolynomial expanded = specialize(f, d == 0 ? 0 : d - 1);
  for (const auto& [exps, c] : expanded.terms()) {
    bool decreasing = true;
    for (std::size_t i = 0; i + 1 < exps.size(); ++i)
      if (exps[i] < exps[i + 1]) {
        decreasing = false;
        break;
      }
    if (!decreasing) continue;
    out.add_term(Partition(exps), c);
  }
  return out;
}

inline std::string to_string(const MonomialPolynomial& f) {
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
    if (!lambda.empty()) out += "m" + to_string(lambda);
  }
  return out;
}

}  // namespace polya
