// Radical decomposition in Z/n: the strong primality test, radicals of
// principal ideals, and a prime decomposition of the radical obtained by
// induction over the radical ideals of Z/n.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "nilcert/induction.hpp"

namespace nilcert {

class BadInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The ideal (d) of Z/n for a divisor d of n; d = n is the zero ideal.
/// (d) is contained in (d') iff d' divides d.
struct ModIdeal {
  std::uint64_t n = 1;
  std::uint64_t d = 1;

  static ModIdeal make(std::uint64_t n, std::uint64_t d);

  bool subset_of(const ModIdeal& other) const { return d % other.d == 0; }
  bool contains(std::uint64_t r) const { return (r % n) % d == 0; }
  auto operator<=>(const ModIdeal&) const = default;
};

struct SptResult {
  enum class Kind { UnitIdeal, PrimeIdeal, CompositeWitness };
  Kind kind = Kind::UnitIdeal;
  // for CompositeWitness: x y in (d) while x, y are not
  std::uint64_t x = 0;
  std::uint64_t y = 0;
};

/// Strong primality test for (d) in Z/n.
SptResult spt_modn(std::uint64_t n, std::uint64_t d);

/// Generator of the radical of (d): the product of the distinct primes of d.
std::uint64_t radical_modn(std::uint64_t n, std::uint64_t d);

/// Distinct primes p_1 < ... < p_k with sqrt((d)) = (p_1) /\ ... /\ (p_k).
std::vector<std::uint64_t> ln_decompose(std::uint64_t n, std::uint64_t d);

/// The radical ideals of Z/n under inclusion, with intersection as meet.
FinitePoset<ModIdeal> radical_ideal_poset(std::uint64_t n);

// --- brute force ---------------------------------------------------------------

inline constexpr std::uint64_t kBruteForceBound = 256;

/// Membership table of the ideal generated by `generators` in Z/n, built as
/// the additive closure of the generators.
std::vector<bool> enumerate_ideal(std::uint64_t n, const std::vector<std::uint64_t>& generators);

/// {x : x^e in ideal for some 1 <= e <= n}.
std::vector<bool> enumerate_radical(std::uint64_t n, const std::vector<bool>& ideal);

/// sqrt(I + Ra) /\ sqrt(I + Rb) == sqrt(I + Rab) for I = (d), by enumeration.
bool check_key_lemma(std::uint64_t n, std::uint64_t d, std::uint64_t a, std::uint64_t b);

std::vector<std::uint64_t> prime_factors(std::uint64_t x);
bool is_prime(std::uint64_t x);

}  // namespace nilcert
