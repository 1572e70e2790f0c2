#pragma once

// Counts of based homotopy classes M -> S^3/(Z/m) per degree class, obtained
// from the DW invariants by Fourier inversion over Z/m:
//
//   #deg^{-1}(k) = sum_l Z^l(M) zeta_m^{-k l},   Z^l(M) = (1/m) sum_k #deg^{-1}(k) zeta_m^{k l}.
//
// zeta_m is embedded in Z[zeta_{m^2}] as zeta_{m^2}^m so both directions stay
// in one ring.

#include "dwcount/bigint.hpp"
#include "dwcount/cyclotomic.hpp"
#include "dwcount/dw.hpp"
#include "dwcount/error.hpp"
#include "dwcount/seifert.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dwcount {

struct DegreeCountTable {
  std::int64_t m = 1;
  std::vector<BigInt> counts;  // index k~ in [0, m)

  /// Entry for any integer degree k; depends only on k mod m.
  const BigInt& at(std::int64_t k) const { return counts[static_cast<std::size_t>(mod_floor(k, m))]; }

  BigInt total() const {
    BigInt sum = 0;
    for (const auto& c : counts) sum += c;
    return sum;
  }
};

/// sum_l Z^l zeta_{m^2}^{-m k~ l~}, checked to be a nonnegative integer.
inline BigInt degree_count(const DwVector& dw, std::int64_t k) {
  const std::int64_t m = dw.m;
  require_group_order(m);
  const std::int64_t kt = mod_floor(k, m);
  CycloValue sum = CycloValue::zero(m * m);
  for (std::int64_t l = 0; l < m; ++l) {
    sum = cyclo_add(sum, cyclo_times_root(dw.values[static_cast<std::size_t>(l)], -m * kt * l));
  }
  auto value = try_extract_integer(sum);
  if (!value) {
    throw Error(ErrorKind::IntegralityViolation,
                "count for k=" + std::to_string(kt) + " reduced to " + to_text(sum));
  }
  if (*value < 0) {
    throw Error(ErrorKind::NegativeCount, "count for k=" + std::to_string(kt) + " is " + value->str());
  }
  return *value;
}

inline DegreeCountTable degree_count_table(const DwVector& dw) {
  DegreeCountTable out;
  out.m = dw.m;
  out.counts.reserve(static_cast<std::size_t>(dw.m));
  for (std::int64_t k = 0; k < dw.m; ++k) out.counts.push_back(degree_count(dw, k));
  return out;
}

inline BigInt degree_count(const SeifertData& manifold, std::int64_t m, std::int64_t k,
                           const WorkBudget& budget = {}) {
  return degree_count(dw_all(manifold, m, budget), k);
}

inline DegreeCountTable degree_count_table(const SeifertData& manifold, std::int64_t m,
                                           const WorkBudget& budget = {}) {
  return degree_count_table(dw_all(manifold, m, budget));
}

/// Z^l = (1/m) sum_k counts[k] zeta_{m^2}^{m k l~}.
inline DwVector fourier_forward(const DegreeCountTable& table) {
  const std::int64_t m = table.m;
  require_group_order(m);
  DwVector out;
  out.m = m;
  for (std::int64_t l = 0; l < m; ++l) {
    CycloValue z = CycloValue::zero(m * m);
    for (std::int64_t k = 0; k < m; ++k) z.add_term(m * k * l, table.counts[static_cast<std::size_t>(k)]);
    out.values.push_back(cyclo_scale(z, 1, m));
  }
  return out;
}

struct ConsistencyReport {
  BigInt hom_count = 0;
  BigInt sum_of_counts = 0;
  bool trivial_class_check = false;  // m Z^0 = #hom
  bool nonnegativity = false;        // every count a nonnegative integer
  bool roundtrip = false;            // forward transform of counts = DW vector
  bool conjugation_symmetry = false; // Z^{m-l} = conj(Z^l)
  bool total_check = false;          // sum of counts = #hom
  // Filled in by the oracle cross-validation only.
  std::optional<bool> brute_force_homs;
  std::optional<bool> float_agreement;
  std::vector<std::string> failures;

  bool all_passed() const { return failures.empty(); }
};

/// Runs the consistency checks against precomputed results. Failures are
/// recorded, never thrown.
inline ConsistencyReport verify_consistency(const DwVector& dw, const BigInt& hom_count) {
  ConsistencyReport report;
  report.hom_count = hom_count;
  const std::int64_t m = dw.m;

  // Counts are computed without the integrality guard so every residue can
  // be inspected.
  std::vector<std::optional<BigInt>> counts;
  report.nonnegativity = true;
  for (std::int64_t k = 0; k < m; ++k) {
    CycloValue sum = CycloValue::zero(m * m);
    for (std::int64_t l = 0; l < m; ++l) {
      sum = cyclo_add(sum, cyclo_times_root(dw.values[static_cast<std::size_t>(l)], -m * k * l));
    }
    auto value = try_extract_integer(sum);
    if (!value) {
      report.nonnegativity = false;
      report.failures.push_back("integrality: count for k=" + std::to_string(k) + " is " + to_text(sum));
    } else if (*value < 0) {
      report.nonnegativity = false;
      report.failures.push_back("nonnegativity: count for k=" + std::to_string(k) + " is " + value->str());
    }
    counts.push_back(value);
  }

  bool all_integral = true;
  DegreeCountTable table;
  table.m = m;
  for (const auto& c : counts) {
    all_integral = all_integral && c.has_value();
    table.counts.push_back(c.value_or(BigInt(0)));
  }
  report.sum_of_counts = table.total();
  report.total_check = all_integral && report.sum_of_counts == hom_count;
  if (!report.total_check) {
    report.failures.push_back("total: sum of counts " + report.sum_of_counts.str() + " != #hom " +
                              hom_count.str());
  }

  const auto trivial = try_extract_integer(cyclo_scale(dw.values.front(), m));
  report.trivial_class_check = trivial && *trivial == hom_count;
  if (!report.trivial_class_check) {
    report.failures.push_back("trivial_class: m*Z^0 = " + to_text(cyclo_scale(dw.values.front(), m)) +
                              " != #hom " + hom_count.str());
  }

  report.roundtrip = all_integral;
  if (all_integral) {
    const DwVector back = fourier_forward(table);
    for (std::int64_t l = 0; l < m; ++l) {
      const auto i = static_cast<std::size_t>(l);
      if (!semantically_equal(back.values[i], dw.values[i])) {
        report.roundtrip = false;
        report.failures.push_back("roundtrip: forward transform differs at l=" + std::to_string(l));
      }
    }
  } else {
    report.failures.push_back("roundtrip: skipped, counts are not all integers");
  }

  report.conjugation_symmetry = true;
  for (std::int64_t l = 0; l < m; ++l) {
    const std::int64_t mirror_l = (m - l) % m;
    const auto& z = dw.values[static_cast<std::size_t>(l)];
    const auto& mirror = dw.values[static_cast<std::size_t>(mirror_l)];
    if (!semantically_equal(mirror, conjugate(z))) {
      report.conjugation_symmetry = false;
      report.failures.push_back("conjugation: Z^" + std::to_string(mirror_l) + " != conj(Z^" +
                                std::to_string(l) + ")");
    }
  }
  return report;
}

inline ConsistencyReport verify_consistency(const SeifertData& manifold, std::int64_t m,
                                            const WorkBudget& budget = {}) {
  return verify_consistency(dw_all(manifold, m, budget), count_homs(manifold, m));
}

}  // namespace dwcount
