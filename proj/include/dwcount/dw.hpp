#pragma once

// Dijkgraaf-Witten invariants Z^l(M) of MO(g; (a_j,b_j)) with gauge group Z/m:
//
//   Z^l(M) = m^{2g-2} sum_{h,s in Z/m} prod_j sum_{z : a_j z = h}
//            zeta_{m^2}^{ l~ a_j b_j z~^2 - (2 l~ h~ + m s~) b_j z~ }
//
// where x~ is the lift of a residue to {0, ..., m-1}. Everything is computed
// exactly in Z[zeta_{m^2}].

#include "dwcount/bigint.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/error.hpp"
#include "dwcount/seifert.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

namespace dwcount {

/// Caps the estimated number of multiply-accumulate steps a computation may
/// take. The estimate is computed up front, before any real work.
struct WorkBudget {
  static constexpr double kDefaultCap = 1e8;
  double cap = kDefaultCap;

  void require(double estimate, const std::string& what) const {
    if (estimate > cap) throw WorkLimitError(estimate, cap, what);
  }
};

inline void require_group_order(std::int64_t m) {
  if (m <= 0) {
    throw Error(ErrorKind::InvalidGroupOrder, "group order must be >= 1, got " + std::to_string(m));
  }
}

struct CongruenceSolutions {
  std::int64_t m = 1;
  std::vector<std::int64_t> solutions;  // ascending residues in [0, m)
};

namespace detail {

// Inverse of a modulo n for gcd(a, n) = 1, n >= 1.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
  if (n == 1) return 0;
  std::int64_t old_r = mod_floor(a, n), r = n;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return mod_floor(old_s, n);
}

inline std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t n) {
  return static_cast<std::int64_t>(static_cast<__int128>(x) * y % n);
}

}  // namespace detail

/// Residues z in [0, m) with a z = h (mod m).
inline CongruenceSolutions solve_congruence(std::int64_t a, std::int64_t h, std::int64_t m) {
  require_group_order(m);
  CongruenceSolutions out;
  out.m = m;
  const std::int64_t a_mod = mod_floor(a, m);
  const std::int64_t h_mod = mod_floor(h, m);
  const std::int64_t d = gcd64(a_mod, m);  // gcd(0, m) = m
  if (h_mod % d != 0) return out;
  const std::int64_t step = m / d;
  const std::int64_t z0 = detail::mul_mod(detail::inverse_mod(a_mod / d, step), h_mod / d, step);
  out.solutions.reserve(static_cast<std::size_t>(d));
  for (std::int64_t t = 0; t < d; ++t) out.solutions.push_back(z0 + t * step);
  return out;
}

/// ( l~ a b z~^2 - (2 l~ h~ + m s~) b z~ ) mod m^2, residues lifted to [0, m).
/// a and b enter as given; only the final value is reduced.
inline std::int64_t exponent(std::int64_t l, std::int64_t h, std::int64_t s, std::int64_t a,
                             std::int64_t b, std::int64_t z, std::int64_t m) {
  using detail::mul_mod;
  const std::int64_t n = m * m;
  const std::int64_t lt = mod_floor(l, m), ht = mod_floor(h, m);
  const std::int64_t st = mod_floor(s, m), zt = mod_floor(z, m);
  // Reducing a and b mod m^2 first does not change the value mod m^2.
  const std::int64_t ar = mod_floor(a, n), br = mod_floor(b, n);
  const std::int64_t quadratic = mul_mod(mul_mod(mul_mod(lt, ar, n), br, n), mul_mod(zt, zt, n), n);
  const std::int64_t linear = mul_mod(mod_floor(2 * lt * ht + m * st, n), mul_mod(br, zt, n), n);
  return mod_floor(quadratic - linear, n);
}

/// sum over solutions z of a z = h of zeta_{m^2}^{exponent(...)}; zero when
/// there are none.
inline CycloValue inner_factor(std::int64_t l, std::int64_t h, std::int64_t s, const FiberPair& pair,
                               std::int64_t m) {
  CycloValue out = CycloValue::zero(m * m);
  for (std::int64_t z : solve_congruence(pair.a, h, m).solutions) {
    out.add_term(exponent(l, h, s, pair.a, pair.b, z, m));
  }
  return out;
}

struct DwVector {
  std::int64_t m = 1;
  std::vector<CycloValue> values;  // index l in [0, m), modulus m^2
};

namespace detail {

// Solution sets of a_j z = h for every h; independent of l and s.
inline std::vector<std::vector<CongruenceSolutions>> solution_table(const SeifertData& manifold,
                                                                    std::int64_t m) {
  std::vector<std::vector<CongruenceSolutions>> table(static_cast<std::size_t>(m));
  for (std::int64_t h = 0; h < m; ++h) {
    auto& row = table[static_cast<std::size_t>(h)];
    for (const auto& pair : manifold.pairs) row.push_back(solve_congruence(pair.a, h, m));
  }
  return table;
}

// Upper bound on the largest coefficient the accumulation for one l can reach:
// m (choices of s) times the total number of product terms over h.
inline BigInt coefficient_bound(const std::vector<std::vector<CongruenceSolutions>>& table,
                                std::int64_t m) {
  BigInt total = 0;
  for (const auto& row : table) {
    BigInt terms = 1;
    for (const auto& sols : row) terms *= sols.solutions.size();
    total += terms;
  }
  return total * m * m;
}

inline bool fits_int64(const BigInt& bound) {
  return bound < BigInt(std::numeric_limits<std::int64_t>::max() / 4);
}

// Multiply-accumulate steps for one l, literal path: for every (h, s) the
// running product keeps a sparse support of at most m^2 exponents.
inline double literal_steps_per_l(const std::vector<std::vector<CongruenceSolutions>>& table,
                                  std::int64_t m) {
  const double n = static_cast<double>(m) * static_cast<double>(m);
  double per_s = 0.0;
  for (const auto& row : table) {
    double support = 1.0, cost = 1.0;
    for (const auto& sols : row) {
      const double d = static_cast<double>(sols.solutions.size());
      if (d == 0.0) break;
      cost += std::min(n, support) * d;
      support = std::min(n, support * d);
    }
    per_s += cost;
  }
  return per_s * static_cast<double>(m);
}

template <class Int>
CycloValue to_cyclo(std::int64_t n, const std::vector<Int>& acc, const SeifertData& manifold, std::int64_t m) {
  std::vector<BigInt> coeffs(acc.begin(), acc.end());
  if (manifold.genus == 0) {
    return CycloValue::from_coeffs(n, std::move(coeffs), BigInt(m) * m);
  }
  const BigInt prefactor = big_pow(BigInt(m), static_cast<unsigned>(2 * manifold.genus - 2));
  for (auto& c : coeffs) c *= prefactor;
  return CycloValue::from_coeffs(n, std::move(coeffs));
}

template <class Int>
CycloValue dw_literal(const SeifertData& manifold, std::int64_t m, std::int64_t l,
                      const std::vector<std::vector<CongruenceSolutions>>& table) {
  const std::int64_t n = m * m;
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Int> acc(nn, Int(0));
  std::vector<Int> cur(nn, Int(0)), next(nn, Int(0));
  std::vector<std::size_t> support, next_support;
  std::vector<char> in_next(nn, 0);

  for (std::int64_t h = 0; h < m; ++h) {
    const auto& row = table[static_cast<std::size_t>(h)];
    bool empty = false;
    for (const auto& sols : row) empty = empty || sols.solutions.empty();
    if (empty) continue;  // some inner sum is empty: the product vanishes

    for (std::int64_t s = 0; s < m; ++s) {
      support.assign(1, 0);
      cur[0] = 1;
      for (std::size_t j = 0; j < row.size(); ++j) {
        const auto& pair = manifold.pairs[j];
        next_support.clear();
        for (std::int64_t z : row[j].solutions) {
          const std::int64_t e = exponent(l, h, s, pair.a, pair.b, z, m);
          for (std::size_t idx : support) {
            std::size_t target = idx + static_cast<std::size_t>(e);
            if (target >= nn) target -= nn;
            if (!in_next[target]) {
              in_next[target] = 1;
              next_support.push_back(target);
            }
            next[target] += cur[idx];
          }
        }
        for (std::size_t idx : support) cur[idx] = 0;
        for (std::size_t idx : next_support) {
          cur[idx] = next[idx];
          next[idx] = 0;
          in_next[idx] = 0;
        }
        support.swap(next_support);
      }
      for (std::size_t idx : support) {
        acc[idx] += cur[idx];
        cur[idx] = 0;
      }
    }
  }
  return to_cyclo(n, acc, manifold, m);
}

// Summing zeta_m^{-s~ sum_j b_j z~_j} over s leaves m [sum_j b_j z~_j = 0 mod m],
// so the s loop collapses to a constraint tracked alongside the exponent.
template <class Int>
CycloValue dw_collapsed(const SeifertData& manifold, std::int64_t m, std::int64_t l,
                        const std::vector<std::vector<CongruenceSolutions>>& table) {
  const std::int64_t n = m * m;
  const auto nn = static_cast<std::size_t>(n);
  const auto mm = static_cast<std::size_t>(m);
  std::vector<Int> acc(nn, Int(0));
  // state index = exponent * m + (sum_j b_j z_j mod m)
  std::vector<Int> cur(nn * mm, Int(0)), next(nn * mm, Int(0));

  for (std::int64_t h = 0; h < m; ++h) {
    const auto& row = table[static_cast<std::size_t>(h)];
    bool empty = false;
    for (const auto& sols : row) empty = empty || sols.solutions.empty();
    if (empty) continue;

    std::fill(cur.begin(), cur.end(), Int(0));
    cur[0] = 1;
    for (std::size_t j = 0; j < row.size(); ++j) {
      const auto& pair = manifold.pairs[j];
      std::fill(next.begin(), next.end(), Int(0));
      for (std::int64_t z : row[j].solutions) {
        // s = 0 drops the m s~ b z~ part of the exponent.
        const auto e = static_cast<std::size_t>(exponent(l, h, 0, pair.a, pair.b, z, m));
        const auto t = static_cast<std::size_t>(detail::mul_mod(mod_floor(pair.b, m), z, m));
        for (std::size_t idx = 0; idx < cur.size(); ++idx) {
          if (cur[idx] == 0) continue;
          std::size_t ne = idx / mm + e;
          if (ne >= nn) ne -= nn;
          std::size_t nt = idx % mm + t;
          if (nt >= mm) nt -= mm;
          next[ne * mm + nt] += cur[idx];
        }
      }
      cur.swap(next);
    }
    for (std::size_t e = 0; e < nn; ++e) acc[e] += cur[e * mm] * Int(m);
  }
  return to_cyclo(n, acc, manifold, m);
}

}  // namespace detail

/// Estimated multiply-accumulate steps for computing Z^l for every l.
inline double estimate_dw_work(const SeifertData& manifold, std::int64_t m) {
  require_group_order(m);
  return detail::literal_steps_per_l(detail::solution_table(manifold, m), m) * static_cast<double>(m);
}

/// Z^l(M) by literal evaluation of the (h, s) double sum. The result has
/// denominator m^2 for genus 0 and 1 otherwise.
inline CycloValue dw_invariant(const SeifertData& manifold, std::int64_t m, std::int64_t l,
                               const WorkBudget& budget = {}) {
  require_group_order(m);
  const auto table = detail::solution_table(manifold, m);
  budget.require(detail::literal_steps_per_l(table, m), "Dijkgraaf-Witten evaluation");
  const std::int64_t lt = mod_floor(l, m);
  if (detail::fits_int64(detail::coefficient_bound(table, m))) {
    return detail::dw_literal<std::int64_t>(manifold, m, lt, table);
  }
  return detail::dw_literal<BigInt>(manifold, m, lt, table);
}

/// Same value as dw_invariant, with the s sum collapsed into a congruence on
/// sum_j b_j z_j. Used to cross-check the literal path.
inline CycloValue dw_invariant_collapsed(const SeifertData& manifold, std::int64_t m, std::int64_t l,
                                         const WorkBudget& budget = {}) {
  require_group_order(m);
  const auto table = detail::solution_table(manifold, m);
  const double steps = static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m) *
                       static_cast<double>(m) * static_cast<double>(manifold.pairs.size() + 1);
  budget.require(steps, "collapsed Dijkgraaf-Witten evaluation");
  const std::int64_t lt = mod_floor(l, m);
  if (detail::fits_int64(detail::coefficient_bound(table, m))) {
    return detail::dw_collapsed<std::int64_t>(manifold, m, lt, table);
  }
  return detail::dw_collapsed<BigInt>(manifold, m, lt, table);
}

inline DwVector dw_all(const SeifertData& manifold, std::int64_t m, const WorkBudget& budget = {}) {
  budget.require(estimate_dw_work(manifold, m), "Dijkgraaf-Witten evaluation");
  DwVector out;
  out.m = m;
  out.values.reserve(static_cast<std::size_t>(m));
  const WorkBudget unlimited{std::numeric_limits<double>::infinity()};
  for (std::int64_t l = 0; l < m; ++l) out.values.push_back(dw_invariant(manifold, m, l, unlimited));
  return out;
}

}  // namespace dwcount
