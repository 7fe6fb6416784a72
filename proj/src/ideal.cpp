#include "nilcert/ideal.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nilcert {

namespace {

std::uint64_t low_bits(unsigned k) { return k >= 64 ? ~0ULL : (1ULL << k) - 1; }

}  // namespace

IdealLabel::IdealLabel(unsigned n, unsigned m) : IdealLabel(n, m, 0, 0) {}

IdealLabel::IdealLabel(unsigned n, unsigned m, std::uint64_t a_mask, std::uint64_t b_mask)
    : n_(n), m_(m), a_mask_(a_mask), b_mask_(b_mask) {
  if (n > kMaxSide || m > kMaxSide) throw std::invalid_argument("label side too large");
  if ((a_mask & ~low_bits(n)) != 0 || (b_mask & ~low_bits(m)) != 0)
    throw std::invalid_argument("label mask exceeds its length");
}

bool IdealLabel::contains(Indeterminate e) const {
  if (e.index == 0) return false;
  if (e.kind == Kind::A) return e.index <= n_ && has_a(e.index);
  return e.index <= m_ && has_b(e.index);
}

IdealLabel IdealLabel::with(Indeterminate e) const {
  const unsigned bound = e.kind == Kind::A ? n_ : m_;
  if (e.index < 1 || e.index > bound) throw std::out_of_range("not an element of E: " + e.name());
  IdealLabel out = *this;
  (e.kind == Kind::A ? out.a_mask_ : out.b_mask_) |= 1ULL << (e.index - 1);
  return out;
}

bool IdealLabel::is_full() const { return a_mask_ == low_bits(n_) && b_mask_ == low_bits(m_); }

unsigned IdealLabel::size() const {
  return static_cast<unsigned>(std::popcount(a_mask_) + std::popcount(b_mask_));
}

std::vector<Indeterminate> IdealLabel::generators() const {
  std::vector<Indeterminate> out;
  for (unsigned i = 1; i <= n_; ++i)
    if (has_a(i)) out.push_back(coeff_a(i));
  for (unsigned j = 1; j <= m_; ++j)
    if (has_b(j)) out.push_back(coeff_b(j));
  return out;
}

bool IdealLabel::subset_of(const IdealLabel& other) const {
  return n_ == other.n_ && m_ == other.m_ && (a_mask_ & ~other.a_mask_) == 0 &&
         (b_mask_ & ~other.b_mask_) == 0;
}

IdealLabel IdealLabel::meet(const IdealLabel& other) const {
  if (n_ != other.n_ || m_ != other.m_) throw std::invalid_argument("label shapes differ");
  return {n_, m_, a_mask_ & other.a_mask_, b_mask_ & other.b_mask_};
}

std::string IdealLabel::to_string() const {
  std::string s = "(";
  for (unsigned i = 1; i <= n_; ++i) s += has_a(i) ? '1' : '0';
  s += ',';
  for (unsigned j = 1; j <= m_; ++j) s += has_b(j) ? '1' : '0';
  s += ')';
  return s;
}

std::vector<Indeterminate> nonconstant_coefficients(unsigned n, unsigned m) {
  std::vector<Indeterminate> out;
  for (unsigned i = 1; i <= n; ++i) out.push_back(coeff_a(i));
  for (unsigned j = 1; j <= m; ++j) out.push_back(coeff_b(j));
  return out;
}

Closure::Rule Closure::rule(Indeterminate e) const {
  auto it = rules_.find(e);
  if (it == rules_.end()) throw std::out_of_range(e.name() + " is not in the closure");
  return it->second;
}

bool Closure::all_a() const {
  for (unsigned i = 1; i <= label_.n(); ++i)
    if (!contains(coeff_a(i))) return false;
  return true;
}

bool Closure::all_b() const {
  for (unsigned j = 1; j <= label_.m(); ++j)
    if (!contains(coeff_b(j))) return false;
  return true;
}

IdealLabel Closure::as_label() const {
  IdealLabel out(label_.n(), label_.m());
  for (const auto& e : order_) out = out.with(e);
  return out;
}

Closure generic_closure(const IdealLabel& label) {
  Closure cl;
  cl.label_ = label;
  for (const auto& g : label.generators()) {
    cl.order_.push_back(g);
    cl.rules_.emplace(g, Closure::Rule::Generator);
  }
  const unsigned n = label.n();
  const unsigned m = label.m();
  auto premises_hold = [&](Kind other, unsigned upto) {
    for (unsigned k = 1; k <= upto; ++k)
      if (!cl.contains({other, k})) return false;
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned i = 1; i <= n; ++i) {
      const auto e = coeff_a(i);
      if (!cl.contains(e) && premises_hold(Kind::B, std::min(i, m))) {
        cl.order_.push_back(e);
        cl.rules_.emplace(e, Closure::Rule::Derived);
        changed = true;
      }
    }
    for (unsigned j = 1; j <= m; ++j) {
      const auto e = coeff_b(j);
      if (!cl.contains(e) && premises_hold(Kind::A, std::min(j, n))) {
        cl.order_.push_back(e);
        cl.rules_.emplace(e, Closure::Rule::Derived);
        changed = true;
      }
    }
  }
  return cl;
}

MembershipDecision generic_membership(const IdealLabel& label, Indeterminate e) {
  MembershipDecision out;
  out.member = generic_closure(label).contains(e);
  return out;
}

}  // namespace nilcert
