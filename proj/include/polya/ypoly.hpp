#pragma once

#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "polya/powersum.hpp"
#include "polya/rational.hpp"

namespace polya {

/// Exponent-vector order for printing: higher total degree first, ties
/// broken by lexicographically larger vector first.
struct GradedLexDesc {
  bool operator()(const std::vector<unsigned>& a,
                  const std::vector<unsigned>& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Exact multivariate polynomial in y_0..y_P.  Exponent vectors all have
/// length P+1.
class YPolynomial {
public:
  using TermMap = std::map<std::vector<unsigned>, Rational, GradedLexDesc>;

  explicit YPolynomial(unsigned num_vars = 1) : num_vars_(num_vars) {}

  static YPolynomial constant(unsigned num_vars, Rational c) {
    YPolynomial out(num_vars);
    if (c != 0) out.terms_[std::vector<unsigned>(num_vars, 0)] = std::move(c);
    return out;
  }

  /// y_k^e as a polynomial.
  static YPolynomial variable_power(unsigned num_vars, unsigned k, unsigned e,
                                    Rational c = 1) {
    YPolynomial out(num_vars);
    std::vector<unsigned> exps(num_vars, 0);
    exps.at(k) = e;
    if (c != 0) out.terms_[std::move(exps)] = std::move(c);
    return out;
  }

  unsigned num_vars() const { return num_vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coeff(const std::vector<unsigned>& exps) const {
    std::vector<unsigned> key = exps;
    key.resize(num_vars_, 0);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(std::vector<unsigned> exps, const Rational& c) {
    exps.resize(num_vars_, 0);
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      if (c != 0) terms_[std::move(exps)] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  YPolynomial& operator+=(const YPolynomial& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
  }
  YPolynomial& operator-=(const YPolynomial& g) {
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
  }
  friend YPolynomial operator+(YPolynomial f, const YPolynomial& g) {
    return f += g;
  }
  friend YPolynomial operator-(YPolynomial f, const YPolynomial& g) {
    return f -= g;
  }

  friend YPolynomial operator*(const YPolynomial& f, const YPolynomial& g) {
    YPolynomial out(std::max(f.num_vars_, g.num_vars_));
    for (const auto& [ef, cf] : f.terms_)
      for (const auto& [eg, cg] : g.terms_) {
        std::vector<unsigned> e(out.num_vars_, 0);
        for (std::size_t i = 0; i < ef.size(); ++i) e[i] += ef[i];
        for (std::size_t i = 0; i < eg.size(); ++i) e[i] += eg[i];
        out.add_term(std::move(e), cf * cg);
      }
    return out;
  }

  /// Substitute y_k = 1 for every k.
  Rational evaluate_all_ones() const {
    Rational total = 0;
    for (const auto& [e, c] : terms_) total += c;
    return total;
  }

  bool operator==(const YPolynomial&) const = default;

private:
  unsigned num_vars_;
  TermMap terms_;
};

/// Substitute psi_k -> y_0^k + ... + y_P^k and expand exactly.
inline YPolynomial specialize(const PowerSumPolynomial& f, unsigned P) {
  unsigned vars = P + 1;
  YPolynomial out(vars);
  for (const auto& [lambda, c] : f.terms()) {
    YPolynomial prod = YPolynomial::constant(vars, 1);
    for (unsigned k : lambda.parts()) {
      YPolynomial sum(vars);
      for (unsigned t = 0; t < vars; ++t)
        sum += YPolynomial::variable_power(vars, t, k);
      prod = prod * sum;
    }
    for (const auto& [e, pc] : prod.terms()) out.add_term(e, c * pc);
  }
  return out;
}

inline std::string to_string(const YPolynomial& f) {
  if (f.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exps, c] : f.terms()) {
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
    std::string mono;
    for (std::size_t k = 0; k < exps.size(); ++k) {
      if (exps[k] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "y" + std::to_string(k);
      if (exps[k] > 1) mono += "^" + std::to_string(exps[k]);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else {
      if (a != 1) out += to_string(a) + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace polya
