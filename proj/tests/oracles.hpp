// Brute-force reference computations shared by the test suites.  None of
// these call into the library's own algorithms.

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "nilcert/engine.hpp"
#include "nilcert/poly.hpp"

namespace oracle {

/// {sum r_k g_k mod n} over all coefficient choices (at most two generators).
inline std::set<std::uint64_t> ideal(std::uint64_t n, const std::vector<std::uint64_t>& gens) {
  std::set<std::uint64_t> out{0};
  if (gens.empty()) return out;
  if (gens.size() == 1) {
    for (std::uint64_t r = 0; r < n; ++r) out.insert(r * gens[0] % n);
    return out;
  }
  std::set<std::uint64_t> rest =
      ideal(n, std::vector<std::uint64_t>(gens.begin() + 1, gens.end()));
  for (std::uint64_t r = 0; r < n; ++r)
    for (auto s : rest) out.insert((r * gens[0] + s) % n);
  return out;
}

inline std::set<std::uint64_t> radical(std::uint64_t n, const std::set<std::uint64_t>& id) {
  std::set<std::uint64_t> out;
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t p = x;
    for (std::uint64_t e = 1; e <= 64; ++e) {
      if (id.count(p)) {
        out.insert(x);
        break;
      }
      p = p * x % n;
    }
  }
  return out;
}

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Exponent of the generic root by dynamic programming over (a's added,
/// b's added), written independently of the library's grid.
inline std::uint64_t grid_dp(unsigned n, unsigned m) {
  std::function<std::uint64_t(unsigned, unsigned)> e = [&](unsigned k, unsigned p) {
    if (k == n || p == m) return std::uint64_t{1};
    return e(k + 1, p) + e(k, p + 1);
  };
  return e(0, 0);
}

/// Leaves of the unfolded tree, by walking every root-to-sink path.
inline std::uint64_t unfolded_leaves(const nilcert::Digraph& d, std::size_t k = 0) {
  const auto& node = d.node(k);
  if (node.is_sink()) return 1;
  return unfolded_leaves(d, node.first) + unfolded_leaves(d, node.second);
}

/// Every pair (f, g) over Z/mod with formal degrees (n, m) and fg = 1.  Runs
/// over all f with a unit constant term; g is then forced to be the power
/// series inverse of f, which must stop at degree m.
inline void for_each_unit_pair(
    unsigned long mod, unsigned n, unsigned m,
    const std::function<void(const std::vector<mpz_class>&, const std::vector<mpz_class>&)>& visit) {
  std::vector<unsigned long> a(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k <= n) {
      for (a[k] = 0; a[k] < mod; ++a[k]) rec(k + 1);
      return;
    }
    long inv = -1;
    for (unsigned long x = 1; x < mod; ++x)
      if (a[0] * x % mod == 1) inv = static_cast<long>(x);
    if (inv < 0) return;
    // b_k = -inv * sum_{i>=1} a_i b_{k-i}, continued until every c_k is known
    std::vector<long> b(n + m + 1, 0);
    b[0] = inv;
    for (unsigned k2 = 1; k2 <= n + m; ++k2) {
      long s = 0;
      for (unsigned i = 1; i <= std::min(k2, n); ++i)
        s = (s + static_cast<long>(a[i]) * b[k2 - i]) % static_cast<long>(mod);
      b[k2] = ((-inv * s) % static_cast<long>(mod) + static_cast<long>(mod)) % static_cast<long>(mod);
    }
    for (unsigned k2 = m + 1; k2 <= n + m; ++k2)
      if (b[k2] != 0) return;
    std::vector<mpz_class> A(a.begin(), a.end());
    std::vector<mpz_class> B(b.begin(), b.begin() + m + 1);
    visit(A, B);
  };
  rec(0);
}

inline nilcert::MultiPoly random_poly(std::mt19937_64& rng, unsigned max_terms = 8) {
  using nilcert::MultiPoly;
  std::uniform_int_distribution<int> terms(0, static_cast<int>(max_terms));
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> var(0, 3);
  std::uniform_int_distribution<int> exp(0, 3);
  MultiPoly p;
  const int count = terms(rng);
  for (int t = 0; t < count; ++t) {
    nilcert::Monomial mono;
    for (int f = 0; f < 3; ++f) {
      const int v = var(rng);
      const auto ind = v < 2 ? nilcert::coeff_a(v) : nilcert::coeff_b(v - 2);
      mono = mono * nilcert::Monomial(ind, exp(rng));
    }
    p += MultiPoly::term(coeff(rng), mono);
  }
  return p;
}

}  // namespace oracle
