#include "nilcert/ring.hpp"

#include <stdexcept>

namespace nilcert {

RingHandle RingHandle::modular(const mpz_class& modulus) {
  if (modulus < 2) throw std::invalid_argument("modulus must be at least 2");
  RingHandle r;
  r.modulus_ = modulus;
  return r;
}

mpz_class RingHandle::reduce(const mpz_class& x) const {
  if (!is_modular()) return x;
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), modulus_.get_mpz_t());
  return r;
}

mpz_class RingHandle::pow(const mpz_class& x, unsigned long e) const {
  mpz_class r;
  if (is_modular()) {
    const mpz_class base = reduce(x);
    mpz_powm_ui(r.get_mpz_t(), base.get_mpz_t(), e, modulus_.get_mpz_t());
  } else {
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
  }
  return r;
}

std::string RingHandle::to_string() const {
  return is_modular() ? "Z/" + modulus_.get_str() : "Z";
}

MembershipDecision mod_membership(const RingHandle& ring,
                                  const std::vector<mpz_class>& generators,
                                  const mpz_class& r) {
  if (!ring.is_modular()) throw std::invalid_argument("mod_membership needs a modular ring");
  const mpz_class& n = ring.modulus();

  // Invariant: acc == sum coeff[k] * generators[k]  (mod n), acc | n.
  mpz_class acc = n;
  std::vector<mpz_class> coeff(generators.size(), 0);
  for (std::size_t k = 0; k < generators.size(); ++k) {
    const mpz_class g = ring.reduce(generators[k]);
    mpz_class d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), acc.get_mpz_t(), g.get_mpz_t());
    for (auto& c : coeff) c = ring.mul(c, s);
    coeff[k] = ring.add(coeff[k], t);
    acc = d;
  }

  MembershipDecision out;
  const mpz_class target = ring.reduce(r);
  if (target % acc != 0) return out;
  out.member = true;
  const mpz_class scale = target / acc;
  for (auto& c : coeff) c = ring.mul(c, scale);
  out.witness = std::move(coeff);
  return out;
}

}  // namespace nilcert
