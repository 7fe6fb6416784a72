// Exact sparse multivariate polynomials over the integers.
//
// The ambient ring is Z[a0..an, b0..bm]: the indeterminate coefficients of
// f = sum a_i T^i and g = sum b_j T^j.  Polynomials are immutable values kept
// in normal form (no zero coefficients, no zero exponents).

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "nilcert/ring.hpp"

namespace nilcert {

enum class Kind : std::uint8_t { A, B };

/// One of the symbols a_i (coefficients of f) or b_j (coefficients of g).
/// Ordered with every A before every B, then by ascending index.
struct Indeterminate {
  Kind kind = Kind::A;
  std::uint32_t index = 0;

  auto operator<=>(const Indeterminate&) const = default;

  std::string name() const;
};

inline Indeterminate coeff_a(std::uint32_t i) { return {Kind::A, i}; }
inline Indeterminate coeff_b(std::uint32_t j) { return {Kind::B, j}; }

class Monomial {
 public:
  using Factor = std::pair<Indeterminate, std::uint32_t>;

  Monomial() = default;  // the empty product, 1
  explicit Monomial(Indeterminate v, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent(Indeterminate v) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial&) const = default;

  std::string to_string() const;

 private:
  // sorted ascending by indeterminate; exponents are positive
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, a0 > a1 > ... > an > b0 > ... > bm.
/// Acts as "greater than" so that map iteration is in descending order.
struct GrlexDescending {
  bool operator()(const Monomial& x, const Monomial& y) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Monomial, mpz_class, GrlexDescending>;

  MultiPoly() = default;  // zero
  MultiPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit MultiPoly(const mpz_class& constant);

  static MultiPoly variable(Indeterminate v);
  static MultiPoly term(const mpz_class& coefficient, const Monomial& m);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::uint64_t degree() const;
  std::set<Indeterminate> indeterminates() const;
  /// Coefficient of m, zero if absent.
  mpz_class coefficient(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& q) const;
  MultiPoly operator-(const MultiPoly& q) const;
  MultiPoly operator*(const MultiPoly& q) const;
  MultiPoly& operator+=(const MultiPoly& q);
  MultiPoly& operator-=(const MultiPoly& q);
  MultiPoly& operator*=(const MultiPoly& q) { return *this = *this * q; }

  bool operator==(const MultiPoly& q) const { return terms_ == q.terms_; }

  /// Canonical rendering, e.g. "-1*a0*b0 + 2*a1^2"; "0" for the zero polynomial.
  std::string to_string() const;
  /// Inverse of to_string.  Also accepts implicit unit coefficients ("a1*b2 - 3").
  static MultiPoly parse(std::string_view text);

 private:
  void add_term(const Monomial& m, const mpz_class& c);

  TermMap terms_;
};

MultiPoly pow(const MultiPoly& p, std::uint64_t e);

class MissingAssignment : public std::runtime_error {
 public:
  explicit MissingAssignment(Indeterminate v)
      : std::runtime_error("no value assigned to " + v.name()), indeterminate(v) {}
  Indeterminate indeterminate;
};

using Assignment = std::map<Indeterminate, mpz_class>;

/// Image of p under the homomorphism fixed by `assignment` into `ring`.
mpz_class eval(const MultiPoly& p, const Assignment& assignment, const RingHandle& ring);

}  // namespace nilcert
