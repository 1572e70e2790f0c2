#pragma once

// Exact arithmetic in (1/D) Z[zeta_N]. Values are kept as unreduced
// group-ring vectors indexed by the exponent of zeta_N; reduction modulo the
// N-th cyclotomic polynomial only happens for comparison and extraction.

#include "dwcount/bigint.hpp"
#include "dwcount/error.hpp"

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwcount {

/// Dense integer polynomial, coefficient of x^i at index i. Trailing zeros
/// are trimmed by the routines below; the zero polynomial is empty.
using IntPoly = std::vector<BigInt>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  if (x.empty() || y.empty()) return {};
  IntPoly out(x.size() + y.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  }
  trim(out);
  return out;
}

struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};

/// Exact division by a monic polynomial; stays in Z[x].
inline PolyDivision poly_divmod_monic(IntPoly num, const IntPoly& den) {
  trim(num);
  if (den.empty() || den.back() != 1) {
    throw std::invalid_argument("poly_divmod_monic: divisor must be monic");
  }
  const std::size_t dd = den.size() - 1;
  PolyDivision out;
  if (num.size() <= dd) {
    out.remainder = std::move(num);
    return out;
  }
  out.quotient.assign(num.size() - dd, BigInt(0));
  for (std::size_t i = num.size(); i-- > dd;) {
    const BigInt c = num[i];
    if (c == 0) continue;
    out.quotient[i - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  num.resize(dd);
  trim(num);
  trim(out.quotient);
  out.remainder = std::move(num);
  return out;
}

namespace detail {

inline IntPoly compute_cyclotomic(std::int64_t n);

struct CyclotomicCache {
  std::mutex mutex;
  std::map<std::int64_t, std::shared_ptr<const IntPoly>> table;
};

inline CyclotomicCache& cyclotomic_cache() {
  static CyclotomicCache cache;
  return cache;
}

}  // namespace detail

/// The N-th cyclotomic polynomial, via Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
inline const IntPoly& cyclotomic_polynomial(std::int64_t n) {
  if (n <= 0) {
    throw Error(ErrorKind::InvalidModulus, "cyclotomic index must be >= 1, got " + std::to_string(n));
  }
  auto& cache = detail::cyclotomic_cache();
  {
    std::lock_guard lock(cache.mutex);
    if (auto it = cache.table.find(n); it != cache.table.end()) return *it->second;
  }
  auto poly = std::make_shared<const IntPoly>(detail::compute_cyclotomic(n));
  std::lock_guard lock(cache.mutex);
  // Another thread may have inserted meanwhile; either copy is identical.
  auto [it, inserted] = cache.table.emplace(n, std::move(poly));
  return *it->second;
}

namespace detail {

inline IntPoly compute_cyclotomic(std::int64_t n) {
  IntPoly divisor{BigInt(1)};
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d == 0) divisor = poly_mul(divisor, cyclotomic_polynomial(d));
  }
  IntPoly xn_minus_one(static_cast<std::size_t>(n) + 1, BigInt(0));
  xn_minus_one.front() = -1;
  xn_minus_one.back() = 1;
  auto division = poly_divmod_monic(std::move(xn_minus_one), divisor);
  if (!division.remainder.empty()) {
    throw std::logic_error("cyclotomic division left a remainder");
  }
  return division.quotient;
}

}  // namespace detail

inline std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

/// (1/denom) * sum_e coeffs[e] * zeta_N^e with zeta_N = exp(2 pi i / N).
class CycloValue {
 public:
  static CycloValue zero(std::int64_t n) { return CycloValue(n); }

  static CycloValue constant(std::int64_t n, const BigInt& c, const BigInt& denom = 1) {
    CycloValue out(n);
    out.coeffs_[0] = c;
    out.set_denom(denom);
    return out;
  }

  static CycloValue from_coeffs(std::int64_t n, std::vector<BigInt> coeffs, const BigInt& denom = 1) {
    CycloValue out(n);
    if (coeffs.size() != out.coeffs_.size()) {
      throw std::invalid_argument("CycloValue: expected " + std::to_string(n) + " coefficients");
    }
    out.coeffs_ = std::move(coeffs);
    out.set_denom(denom);
    return out;
  }

  std::int64_t modulus() const { return n_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& denom() const { return denom_; }

  const BigInt& coeff(std::int64_t exponent) const { return coeffs_[index(exponent)]; }

  /// Adds c * zeta_N^exponent to the numerator.
  void add_term(std::int64_t exponent, const BigInt& c = 1) { coeffs_[index(exponent)] += c; }

  bool numerator_is_zero() const {
    for (const auto& c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }

  friend bool operator==(const CycloValue&, const CycloValue&) = default;

 private:
  explicit CycloValue(std::int64_t n) : n_(n), denom_(1) {
    if (n <= 0) {
      throw Error(ErrorKind::InvalidModulus, "modulus must be >= 1, got " + std::to_string(n));
    }
    coeffs_.assign(static_cast<std::size_t>(n), BigInt(0));
  }

  void set_denom(const BigInt& denom) {
    if (denom <= 0) throw std::invalid_argument("CycloValue: denominator must be positive");
    denom_ = denom;
  }

  std::size_t index(std::int64_t exponent) const {
    return static_cast<std::size_t>(mod_floor(exponent, n_));
  }

  std::int64_t n_;
  std::vector<BigInt> coeffs_;
  BigInt denom_;

  friend CycloValue with_numerator(const CycloValue&, std::vector<BigInt>, const BigInt&);
};

inline CycloValue with_numerator(const CycloValue& like, std::vector<BigInt> coeffs, const BigInt& denom) {
  CycloValue out(like.n_);
  out.coeffs_ = std::move(coeffs);
  out.set_denom(denom);
  return out;
}

inline CycloValue cyclo_root_power(std::int64_t n, std::int64_t exponent) {
  CycloValue out = CycloValue::zero(n);
  out.add_term(exponent);
  return out;
}

inline CycloValue cyclo_one(std::int64_t n) { return CycloValue::constant(n, 1); }

namespace detail {

inline void require_same_modulus(const CycloValue& x, const CycloValue& y) {
  if (x.modulus() != y.modulus()) {
    throw Error(ErrorKind::ModulusMismatch, "moduli " + std::to_string(x.modulus()) + " and " +
                                                std::to_string(y.modulus()) + " differ");
  }
}

}  // namespace detail

inline CycloValue cyclo_add(const CycloValue& x, const CycloValue& y) {
  detail::require_same_modulus(x, y);
  const BigInt g = big_gcd(x.denom(), y.denom());
  const BigInt lcm = x.denom() / g * y.denom();
  const BigInt sx = lcm / x.denom();
  const BigInt sy = lcm / y.denom();
  std::vector<BigInt> out(x.coeffs().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = x.coeffs()[e] * sx + y.coeffs()[e] * sy;
  return with_numerator(x, std::move(out), lcm);
}

inline CycloValue cyclo_neg(const CycloValue& x) {
  std::vector<BigInt> out(x.coeffs().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = -x.coeffs()[e];
  return with_numerator(x, std::move(out), x.denom());
}

inline CycloValue cyclo_sub(const CycloValue& x, const CycloValue& y) { return cyclo_add(x, cyclo_neg(y)); }

/// Cyclic convolution of exponents modulo N; denominators multiply.
inline CycloValue cyclo_mul(const CycloValue& x, const CycloValue& y) {
  detail::require_same_modulus(x, y);
  const std::size_t n = x.coeffs().size();
  std::vector<BigInt> out(n, BigInt(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y.coeffs()[j] == 0) continue;
      std::size_t e = i + j;
      if (e >= n) e -= n;
      out[e] += x.coeffs()[i] * y.coeffs()[j];
    }
  }
  return with_numerator(x, std::move(out), x.denom() * y.denom());
}

/// Multiplication by zeta_N^shift, a rotation of the coefficient vector.
inline CycloValue cyclo_times_root(const CycloValue& x, std::int64_t shift) {
  const auto n = static_cast<std::int64_t>(x.coeffs().size());
  std::vector<BigInt> out(x.coeffs().size());
  for (std::int64_t e = 0; e < n; ++e) {
    out[static_cast<std::size_t>(mod_floor(e + shift, n))] = x.coeffs()[static_cast<std::size_t>(e)];
  }
  return with_numerator(x, std::move(out), x.denom());
}

inline CycloValue cyclo_scale(const CycloValue& x, const BigInt& numerator, const BigInt& denominator = 1) {
  std::vector<BigInt> out(x.coeffs().size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = x.coeffs()[e] * numerator;
  return with_numerator(x, std::move(out), x.denom() * denominator);
}

/// zeta^e -> zeta^{-e}: complex conjugation.
inline CycloValue conjugate(const CycloValue& x) {
  const auto n = static_cast<std::int64_t>(x.coeffs().size());
  std::vector<BigInt> out(x.coeffs().size());
  for (std::int64_t e = 0; e < n; ++e) {
    out[static_cast<std::size_t>(mod_floor(-e, n))] = x.coeffs()[static_cast<std::size_t>(e)];
  }
  return with_numerator(x, std::move(out), x.denom());
}

/// Canonical representative in the power basis 1, z, ..., z^{phi(N)-1}.
struct ReducedForm {
  std::int64_t modulus = 1;
  std::vector<BigInt> basis_coeffs;
  BigInt denom = 1;

  bool is_zero() const {
    for (const auto& c : basis_coeffs) {
      if (c != 0) return false;
    }
    return true;
  }

  friend bool operator==(const ReducedForm&, const ReducedForm&) = default;
};

inline ReducedForm reduce_canonical(const CycloValue& x) {
  const IntPoly& phi = cyclotomic_polynomial(x.modulus());
  const std::size_t degree = phi.size() - 1;
  IntPoly remainder = poly_divmod_monic(x.coeffs(), phi).remainder;
  remainder.resize(degree, BigInt(0));

  ReducedForm out;
  out.modulus = x.modulus();
  BigInt content = 0;
  for (const auto& c : remainder) content = big_gcd(content, c);
  if (content == 0) {
    out.basis_coeffs = std::move(remainder);
    out.denom = 1;
    return out;
  }
  const BigInt g = big_gcd(content, x.denom());
  for (auto& c : remainder) c /= g;
  out.basis_coeffs = std::move(remainder);
  out.denom = x.denom() / g;
  return out;
}

/// Re-expands a reduced form as a group-ring value (inverse of reduction up
/// to semantic equality).
inline CycloValue expand(const ReducedForm& form) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(form.modulus), BigInt(0));
  for (std::size_t i = 0; i < form.basis_coeffs.size(); ++i) coeffs[i] = form.basis_coeffs[i];
  return CycloValue::from_coeffs(form.modulus, std::move(coeffs), form.denom);
}

inline bool semantically_equal(const CycloValue& x, const CycloValue& y) {
  return reduce_canonical(cyclo_sub(x, y)).is_zero();
}

inline std::optional<BigInt> try_extract_integer(const CycloValue& x) {
  const ReducedForm form = reduce_canonical(x);
  for (std::size_t i = 1; i < form.basis_coeffs.size(); ++i) {
    if (form.basis_coeffs[i] != 0) return std::nullopt;
  }
  const BigInt constant = form.basis_coeffs.empty() ? BigInt(0) : form.basis_coeffs[0];
  if (constant % form.denom != 0) return std::nullopt;
  return constant / form.denom;
}

inline BigInt extract_integer(const CycloValue& x) {
  auto value = try_extract_integer(x);
  if (!value) {
    throw Error(ErrorKind::NotAnInteger, "value does not reduce to a rational integer");
  }
  return *value;
}

inline std::complex<double> approx_complex(const CycloValue& x) {
  const double n = static_cast<double>(x.modulus());
  std::complex<double> sum = 0.0;
  for (std::size_t e = 0; e < x.coeffs().size(); ++e) {
    if (x.coeffs()[e] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
    sum += x.coeffs()[e].convert_to<double>() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum / x.denom().convert_to<double>();
}

/// "(c0 + c1*z + c2*z^2 ...)/D" with z = zeta_N, zero terms omitted. The
/// parentheses are dropped for a single term and "/D" for D = 1.
inline std::string to_text(const ReducedForm& form) {
  std::string body;
  std::size_t terms = 0;
  for (std::size_t e = 0; e < form.basis_coeffs.size(); ++e) {
    const BigInt& c = form.basis_coeffs[e];
    if (c == 0) continue;
    const BigInt mag = big_abs(c);
    std::string monomial;
    if (e == 0) {
      monomial = mag.str();
    } else {
      monomial = mag == 1 ? std::string() : mag.str() + "*";
      monomial += e == 1 ? "z" : "z^" + std::to_string(e);
    }
    if (terms == 0) {
      body = (c < 0 ? "-" : "") + monomial;
    } else {
      body += (c < 0 ? " - " : " + ") + monomial;
    }
    ++terms;
  }
  if (terms == 0) return "0";
  if (form.denom == 1) return body;
  if (terms > 1) body = "(" + body + ")";
  return body + "/" + form.denom.str();
}

inline std::string to_text(const CycloValue& x) { return to_text(reduce_canonical(x)); }

}  // namespace dwcount
