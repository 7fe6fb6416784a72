#include "nilcert/ln.hpp"

#include <algorithm>
#include <numeric>

namespace nilcert {

namespace {

void require_divisor(std::uint64_t n, std::uint64_t d) {
  if (n < 2) throw BadInput("modulus must be at least 2");
  if (d == 0 || n % d != 0)
    throw BadInput(std::to_string(d) + " does not divide " + std::to_string(n));
}

}  // namespace

ModIdeal ModIdeal::make(std::uint64_t n, std::uint64_t d) {
  require_divisor(n, d);
  return {n, d};
}

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p != 0) continue;
    out.push_back(p);
    while (x % p == 0) x /= p;
  }
  if (x > 1) out.push_back(x);
  return out;
}

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p = 2; p * p <= x; ++p)
    if (x % p == 0) return false;
  return true;
}

SptResult spt_modn(std::uint64_t n, std::uint64_t d) {
  require_divisor(n, d);
  SptResult out;
  if (d == 1) return out;
  if (is_prime(d)) {
    out.kind = SptResult::Kind::PrimeIdeal;
    return out;
  }
  // split off the full power of the least prime; a prime power splits as p * p^(k-1)
  const std::uint64_t p = prime_factors(d).front();
  std::uint64_t power = 1;
  for (std::uint64_t r = d; r % p == 0; r /= p) power *= p;
  out.kind = SptResult::Kind::CompositeWitness;
  out.x = power == d ? p : power;
  out.y = d / out.x;
  return out;
}

std::uint64_t radical_modn(std::uint64_t n, std::uint64_t d) {
  require_divisor(n, d);
  std::uint64_t r = 1;
  for (auto p : prime_factors(d)) r *= p;
  return r;
}

FinitePoset<ModIdeal> radical_ideal_poset(std::uint64_t n) {
  if (n < 2) throw BadInput("modulus must be at least 2");
  // squarefree divisors of n, one per subset of its primes
  FinitePoset<ModIdeal> poset;
  const auto primes = prime_factors(n);
  for (std::uint64_t subset = 0; subset < (1ULL << primes.size()); ++subset) {
    std::uint64_t d = 1;
    for (std::size_t k = 0; k < primes.size(); ++k)
      if ((subset >> k) & 1U) d *= primes[k];
    poset.elements.push_back({n, d});
  }
  poset.leq = [](const ModIdeal& x, const ModIdeal& y) { return x.subset_of(y); };
  poset.meet = [](const ModIdeal& x, const ModIdeal& y) -> std::optional<ModIdeal> {
    return ModIdeal{x.n, std::lcm(x.d, y.d)};
  };
  return poset;
}

std::vector<std::uint64_t> ln_decompose(std::uint64_t n, std::uint64_t d) {
  require_divisor(n, d);
  using Evidence = std::vector<std::uint64_t>;
  Induction<ModIdeal, Evidence> induction(
      radical_ideal_poset(n),
      [](const ModIdeal& x) -> GoodnessOutcome<ModIdeal, Evidence> {
        const auto spt = spt_modn(x.n, x.d);
        switch (spt.kind) {
          case SptResult::Kind::UnitIdeal:
            return Holds<Evidence>{{}};
          case SptResult::Kind::PrimeIdeal:
            return Holds<Evidence>{{x.d}};
          case SptResult::Kind::CompositeWitness:
            break;
        }
        // I + Rx and I + Ry; already radical because x.d is squarefree
        return Reduce<ModIdeal>{{x.n, std::gcd(x.d, spt.x)}, {x.n, std::gcd(x.d, spt.y)}};
      },
      [](const ModIdeal&, const ModIdeal&, const ModIdeal&, const Evidence& ey,
         const Evidence& ez) {
        Evidence out = ey;
        out.insert(out.end(), ez.begin(), ez.end());
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      });
  return induction.evidence_for({n, radical_modn(n, d)});
}

std::vector<bool> enumerate_ideal(std::uint64_t n, const std::vector<std::uint64_t>& generators) {
  if (n < 1 || n > kBruteForceBound) throw BadInput("modulus outside the brute-force bound");
  std::vector<bool> in(n, false);
  std::vector<std::uint64_t> frontier{0};
  in[0] = true;
  while (!frontier.empty()) {
    const auto s = frontier.back();
    frontier.pop_back();
    for (auto g : generators) {
      const auto t = (s + g) % n;
      if (!in[t]) {
        in[t] = true;
        frontier.push_back(t);
      }
    }
  }
  return in;
}

std::vector<bool> enumerate_radical(std::uint64_t n, const std::vector<bool>& ideal) {
  std::vector<bool> out(n, false);
  for (std::uint64_t x = 0; x < n; ++x) {
    std::uint64_t power = x % n;
    for (std::uint64_t e = 1; e <= n && !out[x]; ++e) {
      if (ideal[power]) out[x] = true;
      power = power * x % n;
    }
  }
  return out;
}

bool check_key_lemma(std::uint64_t n, std::uint64_t d, std::uint64_t a, std::uint64_t b) {
  require_divisor(n, d);
  a %= n;
  b %= n;
  const auto ra = enumerate_radical(n, enumerate_ideal(n, {d % n, a}));
  const auto rb = enumerate_radical(n, enumerate_ideal(n, {d % n, b}));
  const auto rab = enumerate_radical(n, enumerate_ideal(n, {d % n, a * b % n}));
  for (std::uint64_t x = 0; x < n; ++x)
    if ((ra[x] && rb[x]) != rab[x]) return false;
  return true;
}

}  // namespace nilcert
