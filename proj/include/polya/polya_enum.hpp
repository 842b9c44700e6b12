#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <tuple>
#include <vector>

#include "polya/cycle_index.hpp"
#include "polya/diagrams.hpp"
#include "polya/monomial.hpp"
#include "polya/powersum.hpp"
#include "polya/ypoly.hpp"

namespace polya {

inline constexpr std::uint64_t kDefaultCensusBudget = 100'000'000;

/// Shape generating function of weighted n x m bipartite graphs:
/// Z(S_n) star Z(S_m) = h_n star h_m, homogeneous of degree n*m.
inline PowerSumPolynomial g_power_sum(unsigned n, unsigned m) {
  return psum_star(h(n), h(m));
}

/// Number of orbit classes of n x m matrices with shape lambda.
inline Integer shape_count(unsigned n, unsigned m, const Partition& lambda) {
  if (lambda.degree() != n * m)
    throw std::domain_error("shape must have size n*m");
  Rational c = to_monomial(g_power_sum(n, m)).coeff(lambda);
  return numerator(c);  // orbit counts are integers
}

/// Type generating function with weights bounded by P: the coefficient
/// of prod y_k^{i_k} counts orbits of matrices with exact type I.
inline YPolynomial type_gf(unsigned n, unsigned m, unsigned P) {
  return specialize(g_power_sum(n, m), P);
}

/// Generating series of Feynman diagram types (packed matrices), via the
/// recursion  type_gf(n,m) = y_0^{nm} + sum_{1<=k<=n, 1<=p<=m} F(k,p) y_0^{nm-kp}.
/// Memoized over (n, m, P).
inline YPolynomial feynman_series(unsigned n, unsigned m, unsigned P) {
  static std::map<std::tuple<unsigned, unsigned, unsigned>, YPolynomial> memo;
  auto key = std::make_tuple(n, m, P);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  YPolynomial f = type_gf(n, m, P);
  f -= YPolynomial::variable_power(P + 1, 0, n * m);
  for (unsigned k = 1; k <= n; ++k)
    for (unsigned p = 1; p <= m; ++p) {
      if (k == n && p == m) continue;
      f -= feynman_series(k, p, P) *
           YPolynomial::variable_power(P + 1, 0, n * m - k * p);
    }
  memo[key] = f;
  return f;
}

using EdgeType = std::vector<unsigned>;
using Census = std::map<EdgeType, std::uint64_t>;

namespace detail {

/// Enumerate matrices in {0..P}^{n x m} whose first cell equals `first`
/// (or all matrices when first is nullopt), canonicalize, and tally the
/// distinct canonical forms per type.  Used both for counting and for
/// materializing representatives.
inline void census_block(unsigned n, unsigned m, unsigned P, bool packed_only,
                         std::optional<unsigned> first,
                         std::map<EdgeType, std::vector<WeightMatrix>>& reps) {
  std::size_t cells = static_cast<std::size_t>(n) * m;
  std::vector<unsigned> entries(cells, 0);
  std::size_t start = 0;
  if (first) {
    entries[0] = *first;
    start = 1;
  }
  std::map<EdgeType, std::set<WeightMatrix>> seen;
  bool done = false;
  while (!done) {
    WeightMatrix mat(n, m, entries);
    if (!packed_only || is_packed(mat)) {
      WeightMatrix canon = canonical_form(mat);
      seen[type_of(mat, P + 1)].insert(std::move(canon));
    }
    // odometer over positions start..cells-1
    done = true;
    std::size_t pos = cells;
    while (pos > start) {
      --pos;
      if (entries[pos] < P) {
        ++entries[pos];
        done = false;
        break;
      }
      entries[pos] = 0;
    }
  }
  for (auto& [t, s] : seen)
    reps[t] = std::vector<WeightMatrix>(s.begin(), s.end());
}

inline std::uint64_t pow_u64_checked(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

}  // namespace detail

/// Exhaustive enumeration of canonical representatives, grouped by type.
/// Throws resource_error when (P+1)^(n*m) exceeds the budget.  jobs > 1
/// partitions the space by the value of the first cell.
inline std::map<EdgeType, std::vector<WeightMatrix>> census_representatives(
    unsigned n, unsigned m, unsigned P, bool packed_only,
    std::uint64_t budget = kDefaultCensusBudget, unsigned jobs = 1) {
  std::uint64_t required =
      detail::pow_u64_checked(P + 1, n * m);
  if (required > budget)
    throw resource_error(
        "census requires " + std::to_string(required) +
        " canonicalization steps, over the budget of " + std::to_string(budget));

  std::map<EdgeType, std::vector<WeightMatrix>> reps;
  if (n * m == 0) {
    WeightMatrix empty;
    reps[type_of(empty, P + 1)] = {empty};
    return reps;
  }
  if (jobs <= 1 || P == 0) {
    detail::census_block(n, m, P, packed_only, std::nullopt, reps);
    return reps;
  }
  std::vector<std::map<EdgeType, std::vector<WeightMatrix>>> partial(P + 1);
  std::vector<std::thread> workers;
  unsigned cap = std::min(jobs, P + 1);
  for (unsigned chunk = 0; chunk <= P; chunk += cap) {
    for (unsigned v = chunk; v < std::min(chunk + cap, P + 1); ++v)
      workers.emplace_back([&, v] {
        detail::census_block(n, m, P, packed_only, v, partial[v]);
      });
    for (auto& t : workers) t.join();
    workers.clear();
  }
  // merge; a canonical form can show up in several first-cell blocks
  std::map<EdgeType, std::set<WeightMatrix>> merged;
  for (const auto& block : partial)
    for (const auto& [t, ms] : block)
      merged[t].insert(ms.begin(), ms.end());
  for (auto& [t, s] : merged)
    reps[t] = std::vector<WeightMatrix>(s.begin(), s.end());
  return reps;
}

/// Independent oracle for the generating functions: distinct canonical
/// forms per type over the full matrix space.
inline Census brute_force_census(unsigned n, unsigned m, unsigned P,
                                 bool packed_only,
                                 std::uint64_t budget = kDefaultCensusBudget,
                                 unsigned jobs = 1) {
  Census counts;
  for (const auto& [t, ms] :
       census_representatives(n, m, P, packed_only, budget, jobs))
    counts[t] = ms.size();
  return counts;
}

/// Sorted canonical representatives, optionally restricted to one type.
inline std::vector<WeightMatrix> enumerate_diagrams(
    unsigned n, unsigned m, unsigned P,
    std::optional<EdgeType> type_filter = std::nullopt, bool packed_only = true,
    std::uint64_t budget = kDefaultCensusBudget, unsigned jobs = 1) {
  auto reps = census_representatives(n, m, P, packed_only, budget, jobs);
  std::vector<WeightMatrix> out;
  if (type_filter) {
    EdgeType key = *type_filter;
    key.resize(P + 1, 0);
    if (auto it = reps.find(key); it != reps.end()) out = it->second;
  } else {
    for (const auto& [t, ms] : reps)
      out.insert(out.end(), ms.begin(), ms.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

}  // namespace polya
