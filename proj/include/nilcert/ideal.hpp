// Ideal labels and the generic membership oracle.
//
// A label is a subset D of E = {a1..an, b1..bm}, stored as two bitmasks, and
// stands for the ideal (D).  In the generic situation membership of an
// element of E in (D) is decided by the closure of D under the two rules
//
//   a_i joins if b_1 .. b_min(i,m) are already in,
//   b_j joins if a_1 .. a_min(j,n) are already in,
//
// which come from c_i = a_0 b_i + ... + a_i b_0 = 0 together with a_0 b_0 = 1.

#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nilcert/poly.hpp"

namespace nilcert {

class IdealLabel {
 public:
  static constexpr unsigned kMaxSide = 63;

  IdealLabel() = default;
  IdealLabel(unsigned n, unsigned m);  // the empty generator set
  IdealLabel(unsigned n, unsigned m, std::uint64_t a_mask, std::uint64_t b_mask);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  // bit i-1 of a_mask is a_i
  std::uint64_t a_mask() const { return a_mask_; }
  std::uint64_t b_mask() const { return b_mask_; }

  bool has_a(unsigned i) const { return (a_mask_ >> (i - 1)) & 1U; }
  bool has_b(unsigned j) const { return (b_mask_ >> (j - 1)) & 1U; }
  bool contains(Indeterminate e) const;
  IdealLabel with(Indeterminate e) const;
  IdealLabel with_a(unsigned i) const { return with(coeff_a(i)); }
  IdealLabel with_b(unsigned j) const { return with(coeff_b(j)); }

  bool is_empty() const { return a_mask_ == 0 && b_mask_ == 0; }
  bool is_full() const;
  unsigned size() const;
  std::vector<Indeterminate> generators() const;

  /// Pointwise order of the masks, i.e. inclusion of generator sets.
  bool subset_of(const IdealLabel& other) const;
  IdealLabel meet(const IdealLabel& other) const;

  /// "(λ,μ)" with λ = λ1..λn and μ = μ1..μm as binary digits, e.g. "(01,1)".
  std::string to_string() const;

  auto operator<=>(const IdealLabel&) const = default;

 private:
  unsigned n_ = 0;
  unsigned m_ = 0;
  std::uint64_t a_mask_ = 0;
  std::uint64_t b_mask_ = 0;
};

/// The element set E of the instance, a1..an then b1..bm.
std::vector<Indeterminate> nonconstant_coefficients(unsigned n, unsigned m);

class Closure {
 public:
  enum class Rule { Generator, Derived };

  const IdealLabel& label() const { return label_; }
  bool contains(Indeterminate e) const { return rules_.count(e) != 0; }
  Rule rule(Indeterminate e) const;
  /// Admission order; every premise of a derived element precedes it.
  const std::vector<Indeterminate>& order() const { return order_; }
  bool all_a() const;
  bool all_b() const;
  /// Closure as a label of its own (used for idempotence checks).
  IdealLabel as_label() const;

 private:
  friend Closure generic_closure(const IdealLabel& label);
  IdealLabel label_;
  std::vector<Indeterminate> order_;
  std::map<Indeterminate, Rule> rules_;
};

Closure generic_closure(const IdealLabel& label);

/// Membership of e in (label) in the generic ring.  Witnesses involve the
/// relation polynomials and are built by the certificate layer, so the
/// decision carries none.
MembershipDecision generic_membership(const IdealLabel& label, Indeterminate e);

}  // namespace nilcert
