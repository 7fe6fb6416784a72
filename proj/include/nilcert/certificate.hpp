// Polynomial identities certifying u^e in (D) at every node of the digraph.
//
// A witness for `subject` at label D is an identity in Z[a, b]
//
//   subject = sum_{d in D} gen(d) d + sum_{k=1}^{n+m} rel(k) c_k + unit (a0 b0 - 1)
//
// where c_k is the k-th coefficient of fg.  At the root D is empty and the
// identity says u^e vanishes whenever fg = 1.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilcert/engine.hpp"
#include "nilcert/ideal.hpp"
#include "nilcert/poly.hpp"

namespace nilcert {

struct MembershipWitness {
  MultiPoly subject;
  IdealLabel label;
  std::map<Indeterminate, MultiPoly> gen_coeffs;
  std::vector<MultiPoly> rel_coeffs;  // rel_coeffs[k - 1] multiplies c_k
  MultiPoly unit_coeff;

  /// The zero witness for 0 at `label`.
  static MembershipWitness zero(const IdealLabel& label);

  const MultiPoly& rel(std::size_t k) const { return rel_coeffs.at(k - 1); }
  MultiPoly gen(Indeterminate d) const;

  /// Right-hand side of the identity, expanded.
  MultiPoly expand() const;
  bool holds() const { return expand() == subject; }

  /// Witness for factor * subject.
  MembershipWitness scaled(const MultiPoly& factor) const;
  MembershipWitness& operator+=(const MembershipWitness& other);
};

class NotInClosure : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds witnesses for one shape (n, m).  Closure and product witnesses
/// are memoized per label.
class WitnessBuilder {
 public:
  WitnessBuilder(unsigned n, unsigned m);

  unsigned n() const { return n_; }
  unsigned m() const { return m_; }
  /// c_0 .. c_{n+m}
  const std::vector<MultiPoly>& relations() const { return c_; }
  const MultiPoly& unit_relation() const { return unit_; }

  /// Witness for e in (label), following the closure derivation:
  ///   a_i = a0 c_i - a0 sum_{k=1}^{min(i,m)} a_{i-k} b_k - a_i (a0 b0 - 1)
  /// with each b_k replaced by its own witness; symmetrically for b_j.
  const MembershipWitness& membership_witness(const IdealLabel& label, Indeterminate e);

  /// Witness for a_i b_j at a label split as Branch(i, j):
  ///   a_i b_j = c_{i+j} - sum_{p>i} b_q a_p - sum_{q>j} a_p b_q   (p + q = i + j)
  /// where every a_p (p > i) and b_q (q > j) carries its membership witness.
  MembershipWitness gauss_product_witness(unsigned i, unsigned j, const IdealLabel& label);

  /// From u^k at label + a_i and u^l at label + b_j to u^(k+l) at label.
  /// Writes u^k = v + s a_i and u^l = w + t b_j, so that
  ///   u^(k+l) = v u^l + s a_i w + s t (a_i b_j)
  /// and substitutes the product witness for a_i b_j.
  MembershipWitness combine(const MembershipWitness& with_a, const MembershipWitness& with_b,
                            const MembershipWitness& product, unsigned i, unsigned j) const;

 private:
  MembershipWitness derive(const IdealLabel& label, Indeterminate e, const Closure& cl);

  unsigned n_;
  unsigned m_;
  std::vector<MultiPoly> c_;
  MultiPoly unit_;
  std::map<IdealLabel, Closure> closures_;
  std::map<std::pair<IdealLabel, Indeterminate>, MembershipWitness> memo_;
};

struct NilpotencyCertificate {
  unsigned n = 0;
  unsigned m = 0;
  unsigned target = 1;
  std::uint64_t exponent = 0;
  MembershipWitness root;  // subject a_target^exponent, empty label
};

/// Witnesses of u^e at every node of a generic digraph, indexed like d.nodes().
std::vector<MembershipWitness> node_witnesses(const Digraph& d, unsigned target,
                                              WitnessBuilder& builder);

NilpotencyCertificate extract_certificate(const Digraph& d, unsigned target,
                                          WitnessBuilder& builder);
NilpotencyCertificate extract_certificate(const Digraph& d, unsigned target);

struct SymbolicCheck {
  bool pass = false;
  MultiPoly diff;  // rhs - a_target^e, zero on success
};

/// Independent expansion of the root identity.
SymbolicCheck verify_symbolic(const NilpotencyCertificate& cert);

struct ConcreteCheck {
  bool pass = false;
  mpz_class power;                        // u^e in the ring
  std::optional<std::uint64_t> minimal;   // least e' <= e with u^e' = 0
};

/// Evaluates a_target^e in the concrete ring of `instance`.
ConcreteCheck verify_concrete(const ProblemInstance& instance, unsigned target,
                              std::uint64_t exponent);

/// Specialization of a generic certificate: evaluates the right-hand side at
/// the concrete coefficients.  Passes iff u^e = 0 and the right-hand side
/// agrees with it.
ConcreteCheck specialize(const NilpotencyCertificate& cert, const ProblemInstance& instance);

/// Line-oriented dump: header, n, m, i0, e, one "rel k <poly>" per relation,
/// "unit <poly>".
std::string dump_certificate(const NilpotencyCertificate& cert);
NilpotencyCertificate parse_certificate(const std::string& text);
/// Several dumps concatenated, e.g. one per target.
std::vector<NilpotencyCertificate> parse_certificates(const std::string& text);

}  // namespace nilcert
