#pragma once

// Seifert invariants MO(g; (a_1,b_1), ..., (a_r,b_r)) over an orientable base,
// the abelianized presentation of pi_1, its Smith normal form, and the
// closed-form count of homomorphisms pi_1(M) -> Z/m.

#include "dwcount/bigint.hpp"
#include "dwcount/error.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dwcount {

struct FiberPair {
  std::int64_t a = 1;  // multiplicity, >= 1
  std::int64_t b = 0;

  friend bool operator==(const FiberPair&, const FiberPair&) = default;
};

/// Validated Seifert data. Pairs keep the order they were given in.
struct SeifertData {
  std::int64_t genus = 0;
  std::vector<FiberPair> pairs;

  std::size_t fiber_count() const { return pairs.size(); }

  friend bool operator==(const SeifertData&, const SeifertData&) = default;
};

/// Indices of pairs with gcd(a, b) != 1. Such data is evaluated anyway;
/// callers surface these as warnings.
inline std::vector<std::size_t> noncoprime_pairs(const SeifertData& manifold) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < manifold.pairs.size(); ++j) {
    if (gcd64(manifold.pairs[j].a, manifold.pairs[j].b) != 1) out.push_back(j);
  }
  return out;
}

inline std::vector<std::string> seifert_warnings(const SeifertData& manifold) {
  std::vector<std::string> out;
  for (std::size_t j : noncoprime_pairs(manifold)) {
    const auto& p = manifold.pairs[j];
    out.push_back("pair " + std::to_string(j + 1) + " (" + std::to_string(p.a) + "," +
                  std::to_string(p.b) + ") is not coprime; evaluating the formula literally");
  }
  return out;
}

inline SeifertData validate_seifert(std::int64_t genus,
                                    std::vector<std::pair<std::int64_t, std::int64_t>> pairs) {
  if (genus < 0) {
    throw Error(ErrorKind::NegativeGenus, "genus must be >= 0, got " + std::to_string(genus));
  }
  SeifertData out;
  out.genus = genus;
  out.pairs.reserve(pairs.size());
  for (std::size_t j = 0; j < pairs.size(); ++j) {
    const auto [a, b] = pairs[j];
    if (a <= 0) {
      throw Error(ErrorKind::NonpositiveMultiplicity,
                  "pair " + std::to_string(j + 1) + " has multiplicity " + std::to_string(a));
    }
    out.pairs.push_back({a, b});
  }
  return out;
}

inline std::string render_seifert(const SeifertData& manifold) {
  std::string s = "MO(" + std::to_string(manifold.genus) + ";";
  for (std::size_t j = 0; j < manifold.pairs.size(); ++j) {
    if (j != 0) s += ",";
    s += "(" + std::to_string(manifold.pairs[j].a) + "," + std::to_string(manifold.pairs[j].b) + ")";
  }
  return s + ")";
}

using IntMatrix = std::vector<std::vector<BigInt>>;

struct PresentationMatrix {
  IntMatrix entries;  // (r+1) x (r+1) relation matrix
  std::int64_t free_rank = 0;
};

/// Relations a_j x_j + b_j w = 0 (rows 1..r) and sum_j x_j = 0 (last row)
/// over the generators x_1..x_r, w. The 2g surface generators are free.
inline PresentationMatrix presentation_matrix(const SeifertData& manifold) {
  const std::size_t r = manifold.pairs.size();
  PresentationMatrix out;
  out.free_rank = 2 * manifold.genus;
  out.entries.assign(r + 1, std::vector<BigInt>(r + 1, BigInt(0)));
  for (std::size_t j = 0; j < r; ++j) {
    out.entries[j][j] = manifold.pairs[j].a;
    out.entries[j][r] = manifold.pairs[j].b;
    out.entries[r][j] = 1;
  }
  return out;
}

struct SnfResult {
  std::vector<BigInt> diag;
};

/// Invariant factors of an integer matrix. Nonzero factors come first, each
/// dividing the next; zeros trail. The result has min(rows, cols) entries.
inline SnfResult smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  const std::size_t n = std::min(rows, cols);

  auto swap_cols = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
  };

  for (std::size_t t = 0; t < n; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pr == rows || big_abs(a[i][j]) < big_abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;  // trailing block is zero
    std::swap(a[t], a[pr]);
    swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (clean) break;
      // Remainders are strictly smaller than the pivot; move the smallest in.
      std::size_t br = t, bc = t;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] != 0 && big_abs(a[i][t]) < big_abs(a[br][bc])) {
          br = i;
          bc = t;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0 && big_abs(a[t][j]) < big_abs(a[br][bc])) {
          br = t;
          bc = j;
        }
      }
      std::swap(a[t], a[br]);
      swap_cols(t, bc);
    }
  }

  std::vector<BigInt> nonzero;
  std::size_t zeros = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (a[t][t] == 0) {
      ++zeros;
    } else {
      nonzero.push_back(big_abs(a[t][t]));
    }
  }
  // diag(x, y) ~ diag(gcd, lcm); one sweep per position yields the chain.
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    for (std::size_t j = i + 1; j < nonzero.size(); ++j) {
      const BigInt g = big_gcd(nonzero[i], nonzero[j]);
      const BigInt l = nonzero[i] / g * nonzero[j];
      nonzero[i] = g;
      nonzero[j] = l;
    }
  }
  SnfResult out;
  out.diag = std::move(nonzero);
  out.diag.insert(out.diag.end(), zeros, BigInt(0));
  return out;
}

/// #hom(pi_1(M), Z/m) = m^{2g} * prod_i gcd*(d_i, m), with gcd*(0, m) = m.
inline BigInt count_homs(const SeifertData& manifold, std::int64_t m) {
  if (m <= 0) {
    throw Error(ErrorKind::InvalidGroupOrder, "group order must be >= 1, got " + std::to_string(m));
  }
  const BigInt mm = m;
  BigInt total = big_pow(mm, static_cast<unsigned>(2 * manifold.genus));
  for (const BigInt& d : smith_normal_form(presentation_matrix(manifold).entries).diag) {
    total *= d == 0 ? mm : big_gcd(d, mm);
  }
  return total;
}

}  // namespace dwcount
