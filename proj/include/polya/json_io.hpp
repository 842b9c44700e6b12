#pragma once

#include <json.hpp>

#include "polya/fqsym.hpp"
#include "polya/monomial.hpp"
#include "polya/powersum.hpp"
#include "polya/ypoly.hpp"

// JSON term lists, all exact values as "num/den" strings:
//   {"basis":"p"|"m"|"y"|"F","terms":[{"index":[...],"coeff":"1/2"}]}

namespace polya {

inline nlohmann::json to_json(const PowerSumPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"index", lambda.parts()}, {"coeff", to_string(c)}});
  return {{"basis", "p"}, {"terms", terms}};
}

inline nlohmann::json to_json(const MonomialPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"index", lambda.parts()}, {"coeff", to_string(c)}});
  return {{"basis", "m"}, {"terms", terms}};
}

inline nlohmann::json to_json(const YPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [exps, c] : f.terms())
    terms.push_back({{"index", exps}, {"coeff", to_string(c)}});
  return {{"basis", "y"}, {"terms", terms}};
}

inline nlohmann::json to_json(const FQSymElement& x) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [sigma, c] : x.terms())
    terms.push_back({{"index", sigma.word()}, {"coeff", to_string(c)}});
  return {{"basis", "F"}, {"terms", terms}};
}

}  // namespace polya
