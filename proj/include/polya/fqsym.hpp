#pragma once

#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "polya/cycle_index.hpp"
#include "polya/group.hpp"
#include "polya/permutation.hpp"
#include "polya/powersum.hpp"

namespace polya {

/// Element of FQSym read in the F^sigma basis: a finite rational
/// combination of permutations.
class FQSymElement {
public:
  using TermMap = std::map<Permutation, Rational>;

  FQSymElement() = default;

  static FQSymElement basis(Permutation sigma, Rational coeff = 1) {
    FQSymElement x;
    if (coeff != 0) x.terms_[std::move(sigma)] = std::move(coeff);
    return x;
  }

  /// Unit: F of the empty permutation.
  static FQSymElement one() { return basis(Permutation::identity(0)); }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coeff(const Permutation& sigma) const {
    auto it = terms_.find(sigma);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Permutation& sigma, const Rational& c) {
    auto it = terms_.find(sigma);
    if (it == terms_.end()) {
      if (c != 0) terms_[sigma] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  FQSymElement& operator+=(const FQSymElement& y) {
    for (const auto& [s, c] : y.terms_) add_term(s, c);
    return *this;
  }
  FQSymElement& operator-=(const FQSymElement& y) {
    for (const auto& [s, c] : y.terms_) add_term(s, -c);
    return *this;
  }
  friend FQSymElement operator+(FQSymElement x, const FQSymElement& y) {
    return x += y;
  }
  friend FQSymElement operator-(FQSymElement x, const FQSymElement& y) {
    return x -= y;
  }

  bool operator==(const FQSymElement&) const = default;

private:
  TermMap terms_;
};

/// F^sigma F^tau = F^{sigma ->+ tau}, extended bilinearly.
inline FQSymElement fq_product(const FQSymElement& x, const FQSymElement& y) {
  FQSymElement out;
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms())
      out.add_term(intransitive_product(s, t), cs * ct);
  return out;
}

/// F^sigma star F^tau = F^{sigma cartesian tau}, extended bilinearly.
inline FQSymElement fq_star(const FQSymElement& x, const FQSymElement& y) {
  FQSymElement out;
  for (const auto& [s, cs] : x.terms())
    for (const auto& [t, ct] : y.terms())
      out.add_term(cartesian_product(s, t), cs * ct);
  return out;
}

/// The words of F_sigma over a k-letter alphabet {0 < 1 < ... < k-1}:
/// all w with Std(w) = sigma^{-1}.
inline std::set<std::vector<int>> realize_F(const Permutation& sigma,
                                            int alphabet_size) {
  Permutation target = sigma.inverse();
  std::set<std::vector<int>> words;
  std::size_t n = static_cast<std::size_t>(sigma.degree());
  std::vector<int> w(n, 0);
  bool done = false;
  while (!done) {
    if (standardize(w) == target) words.insert(w);
    done = true;
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (w[pos] < alphabet_size - 1) {
        ++w[pos];
        done = false;
        break;
      }
      w[pos] = 0;
    }
  }
  return words;
}

/// Free quasi-symmetric cycle index: the average of F^sigma over G.
inline FQSymElement underline_Z(const PermutationGroup& g) {
  FQSymElement out;
  Rational inv(1, Integer(g.order()));
  for (const Permutation& sigma : g.elements()) out.add_term(sigma, inv);
  return out;
}

inline FQSymElement H(int n) { return underline_Z(symmetric_group(n)); }

inline FQSymElement E(int n) {
  return underline_Z(alternating_group(n)) - underline_Z(symmetric_group(n));
}

/// Projection onto Sym: z(F^sigma) = frak_Z(sigma), linearly.
inline PowerSumPolynomial z_morphism(const FQSymElement& x) {
  PowerSumPolynomial out;
  for (const auto& [sigma, c] : x.terms())
    out.add_term(cycle_type(sigma), c);
  return out;
}

/// G^sigma = F^{sigma^{-1}}: the basis relabeling is an involution.
inline Permutation g_basis_index(const Permutation& sigma) {
  return sigma.inverse();
}

inline FQSymElement g_of(const Permutation& sigma) {
  return FQSymElement::basis(sigma.inverse());
}

inline std::string to_string(const FQSymElement& x, bool one_indexed = false) {
  if (x.terms().empty()) return "0";
  int shift = one_indexed ? 1 : 0;
  std::string out;
  bool first = true;
  for (const auto& [sigma, c] : x.terms()) {
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
    if (a != 1) out += to_string(a) + "*";
    out += "F[";
    for (std::size_t i = 0; i < sigma.word().size(); ++i) {
      if (i) out += ',';
      out += std::to_string(sigma.word()[i] + shift);
    }
    out += "]";
  }
  return out;
}

/// Parse "1/2*F[0,1] + F[1,0] - 1/3*F[]" style expressions.
inline FQSymElement parse_fqsym(const std::string& text,
                                bool one_indexed = false) {
  FQSymElement out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_ws();
  if (pos == text.size()) throw parse_error("empty FQSym expression");
  bool first = true;
  while (pos < text.size()) {
    int sign = 1;
    skip_ws();
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = -1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw parse_error("expected '+' or '-' in FQSym expression", pos);
    }
    first = false;
    Rational coeff = 1;
    if (pos < text.size() && (std::isdigit(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isdigit(text[pos]) || text[pos] == '/'))
        ++pos;
      coeff = rational_from_string(text.substr(start, pos - start));
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size() || text[pos] != 'F')
      throw parse_error("expected 'F[...]' in FQSym expression", pos);
    ++pos;
    if (pos >= text.size() || text[pos] != '[')
      throw parse_error("expected '[' after F", pos);
    std::size_t close = text.find(']', pos);
    if (close == std::string::npos)
      throw parse_error("unterminated F[...]", pos);
    std::string inner = text.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    Permutation sigma =
        inner.empty() ? Permutation::identity(0)
                      : parse_permutation(inner, one_indexed);
    out.add_term(sigma, sign * coeff);
    skip_ws();
  }
  return out;
}

}  // namespace polya
