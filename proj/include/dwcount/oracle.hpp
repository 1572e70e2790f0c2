#pragma once

// Independent checks for the exact pipeline: exhaustive enumeration of
// homomorphisms at the abelianized level, and a double-precision evaluation
// of the DW sum that shares no code with the exact path.
//
// Per-residue degree counts have no independent oracle here; only totals, the
// trivial character and numerical agreement are validated.

#include "dwcount/bigint.hpp"
#include "dwcount/counting.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/dw.hpp"
#include "dwcount/error.hpp"
#include "dwcount/seifert.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace dwcount {

struct OracleBudget {
  static constexpr double kDefaultTupleCap = 1e7;
  static constexpr double kDefaultTermCap = 1e8;
  double tuple_cap = kDefaultTupleCap;
  double term_cap = kDefaultTermCap;
};

/// Residues x_1..x_r, w satisfying a_j x_j + b_j w = 0 and sum_j x_j = 0 mod m.
struct HomTuple {
  std::vector<std::int64_t> x;
  std::int64_t w = 0;
};

inline bool satisfies_relations(const SeifertData& manifold, const HomTuple& t, std::int64_t m) {
  std::int64_t sum = 0;
  for (std::size_t j = 0; j < manifold.pairs.size(); ++j) {
    const auto& p = manifold.pairs[j];
    const __int128 rel = static_cast<__int128>(p.a) * t.x[j] + static_cast<__int128>(p.b) * t.w;
    if (rel % m != 0) return false;
    sum += t.x[j];
  }
  return sum % m == 0;
}

/// m^{2g} times the number of tuples in (Z/m)^{r+1} satisfying the relations.
inline BigInt brute_count_homs(const SeifertData& manifold, std::int64_t m, const OracleBudget& budget = {}) {
  require_group_order(m);
  const std::size_t r = manifold.pairs.size();
  const double tuples = std::pow(static_cast<double>(m), static_cast<double>(r + 1));
  if (tuples > budget.tuple_cap) throw WorkLimitError(tuples, budget.tuple_cap, "homomorphism enumeration");

  HomTuple t;
  t.x.assign(r, 0);
  std::uint64_t count = 0;
  for (;;) {
    if (satisfies_relations(manifold, t, m)) ++count;
    // Odometer over (x_1, ..., x_r, w).
    std::size_t pos = 0;
    for (; pos < r; ++pos) {
      if (++t.x[pos] < m) break;
      t.x[pos] = 0;
    }
    if (pos < r) continue;
    if (++t.w == m) break;
  }
  return big_pow(BigInt(m), static_cast<unsigned>(2 * manifold.genus)) * count;
}

/// Double-precision evaluation of the DW sum. Solutions of a_j z = h are found
/// by scanning z, and exponents are formed directly in 128-bit arithmetic.
inline std::complex<double> approx_dw_float(const SeifertData& manifold, std::int64_t m, std::int64_t l,
                                            const OracleBudget& budget = {}) {
  require_group_order(m);
  const double terms = static_cast<double>(m) * static_cast<double>(m) * static_cast<double>(m) *
                       static_cast<double>(manifold.pairs.size() + 1);
  if (terms > budget.term_cap) throw WorkLimitError(terms, budget.term_cap, "floating-point DW sum");

  const __int128 n = static_cast<__int128>(m) * m;
  const __int128 lt = mod_floor(l, m);
  std::complex<double> total = 0.0;
  for (std::int64_t h = 0; h < m; ++h) {
    for (std::int64_t s = 0; s < m; ++s) {
      std::complex<double> product = 1.0;
      for (const auto& p : manifold.pairs) {
        std::complex<double> inner = 0.0;
        for (std::int64_t z = 0; z < m; ++z) {
          if (mod_floor(static_cast<std::int64_t>(static_cast<__int128>(p.a) * z % m), m) != h) continue;
          const __int128 a = p.a % n, b = p.b % n;
          __int128 e = (lt * a % n) * b % n * (z * z % n) % n;
          e -= (2 * lt * h + static_cast<__int128>(m) * s) % n * (b * z % n) % n;
          e %= n;
          if (e < 0) e += n;
          const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(n);
          inner += std::complex<double>(std::cos(angle), std::sin(angle));
        }
        product *= inner;
      }
      total += product;
    }
  }
  return total * std::pow(static_cast<double>(m), static_cast<double>(2 * manifold.genus - 2));
}

/// Adds the brute-force #hom comparison to a report.
inline void check_brute_force(const SeifertData& manifold, std::int64_t m, ConsistencyReport& report,
                              const OracleBudget& oracle = {}) {
  const BigInt brute = brute_count_homs(manifold, m, oracle);
  report.brute_force_homs = brute == report.hom_count;
  if (!*report.brute_force_homs) {
    report.failures.push_back("brute_force: enumeration gives " + brute.str() + ", closed form " +
                              report.hom_count.str());
  }
}

/// Adds the float-vs-exact comparison of every Z^l to a report.
inline void check_float_agreement(const SeifertData& manifold, const DwVector& dw, ConsistencyReport& report,
                                  const OracleBudget& oracle = {}, double tolerance = 1e-6) {
  report.float_agreement = true;
  for (std::int64_t l = 0; l < dw.m; ++l) {
    const auto exact = approx_complex(dw.values[static_cast<std::size_t>(l)]);
    const auto approx = approx_dw_float(manifold, dw.m, l, oracle);
    const double gap = std::abs(exact - approx);
    if (!(gap < tolerance)) {
      report.float_agreement = false;
      report.failures.push_back("float: |exact - float| = " + std::to_string(gap) + " at l=" + std::to_string(l));
    }
  }
}

/// verify_consistency on precomputed DW values, plus brute-force #hom and
/// float-vs-exact agreement.
inline ConsistencyReport cross_validate(const SeifertData& manifold, const DwVector& dw, const BigInt& homs,
                                        const OracleBudget& oracle = {}, double float_tolerance = 1e-6) {
  ConsistencyReport report = verify_consistency(dw, homs);
  check_brute_force(manifold, dw.m, report, oracle);
  check_float_agreement(manifold, dw, report, oracle, float_tolerance);
  return report;
}

inline ConsistencyReport cross_validate(const SeifertData& manifold, std::int64_t m,
                                        const WorkBudget& budget = {}, const OracleBudget& oracle = {},
                                        double float_tolerance = 1e-6) {
  return cross_validate(manifold, dw_all(manifold, m, budget), count_homs(manifold, m), oracle,
                        float_tolerance);
}

}  // namespace dwcount
