// Concrete coefficient rings and the gcd membership oracle for Z/n.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace nilcert {

/// Either the integers or Z/n with n >= 2.  Modular values are always kept
/// as representatives in [0, n).
class RingHandle {
 public:
  static RingHandle integers() { return RingHandle(); }
  static RingHandle modular(const mpz_class& modulus);

  bool is_modular() const { return modulus_ != 0; }
  const mpz_class& modulus() const { return modulus_; }

  mpz_class reduce(const mpz_class& x) const;
  mpz_class add(const mpz_class& x, const mpz_class& y) const { return reduce(x + y); }
  mpz_class sub(const mpz_class& x, const mpz_class& y) const { return reduce(x - y); }
  mpz_class mul(const mpz_class& x, const mpz_class& y) const { return reduce(x * y); }
  mpz_class pow(const mpz_class& x, unsigned long e) const;

  bool operator==(const RingHandle&) const = default;

  std::string to_string() const;  // "Z" or "Z/8"

 private:
  RingHandle() = default;
  mpz_class modulus_ = 0;
};

struct MembershipDecision {
  bool member = false;
  /// One coefficient per generator (same positions) with r = sum w_k g_k.
  std::optional<std::vector<mpz_class>> witness;
};

/// Decides r in (generators) inside Z/n.  The ideal is (gcd(generators, n)),
/// so membership is divisibility; the witness comes from extended gcd.
/// An empty generator list is the zero ideal.
MembershipDecision mod_membership(const RingHandle& ring,
                                  const std::vector<mpz_class>& generators,
                                  const mpz_class& r);

}  // namespace nilcert
