// The induction over ideal labels: grow the tree of cases, share equal
// subtrees, and push exponents from the sinks back to the root.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nilcert/ideal.hpp"
#include "nilcert/poly.hpp"
#include "nilcert/ring.hpp"

namespace nilcert {

struct GenericMode {};

struct ConcreteMode {
  RingHandle ring;
  std::vector<mpz_class> a;  // a_0..a_n, reduced
  std::vector<mpz_class> b;  // b_0..b_m, reduced
};

/// f = sum a_i T^i of formal degree n >= 1, g = sum b_j T^j of formal degree
/// m >= 0, and the target indices i0 in [1, n] whose nilpotency is sought.
struct ProblemInstance {
  unsigned n = 1;
  unsigned m = 0;
  std::variant<GenericMode, ConcreteMode> mode;
  std::vector<unsigned> targets;

  static ProblemInstance generic(unsigned n, unsigned m, std::vector<unsigned> targets = {});
  /// Coefficients are reduced into the ring.  Does not check fg = 1.
  static ProblemInstance concrete(const RingHandle& ring, std::vector<mpz_class> a,
                                  std::vector<mpz_class> b, std::vector<unsigned> targets = {});

  bool is_generic() const { return std::holds_alternative<GenericMode>(mode); }
  const ConcreteMode& concrete_mode() const { return std::get<ConcreteMode>(mode); }
};

class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// --- convolution and the unit condition --------------------------------------

/// c_k = sum_{i+j=k} a_i b_j in `ring`.
std::vector<mpz_class> convolution(const std::vector<mpz_class>& a,
                                   const std::vector<mpz_class>& b, const RingHandle& ring);

/// The same with indeterminate coefficients: c_0..c_{n+m} in Z[a, b].
std::vector<MultiPoly> convolution(unsigned n, unsigned m);

struct UnitViolation {
  std::size_t index = 0;
  mpz_class value;
};

/// nullopt iff c_0 = 1 and c_k = 0 for k >= 1; otherwise the first offender.
std::optional<UnitViolation> check_unit(const std::vector<mpz_class>& c);

class NotAUnit : public std::runtime_error {
 public:
  explicit NotAUnit(UnitViolation v);
  UnitViolation violation;
};

// --- oracles -----------------------------------------------------------------

class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;
  virtual bool contains(const IdealLabel& label, Indeterminate e) const = 0;
};

/// Closure-based membership for indeterminate coefficients.
class GenericOracle final : public MembershipOracle {
 public:
  bool contains(const IdealLabel& label, Indeterminate e) const override;

 private:
  mutable std::map<IdealLabel, Closure> cache_;
};

/// gcd membership of coefficient values in Z/n.
class ConcreteOracle final : public MembershipOracle {
 public:
  explicit ConcreteOracle(ConcreteMode mode) : mode_(std::move(mode)) {}
  bool contains(const IdealLabel& label, Indeterminate e) const override;

 private:
  const mpz_class& value(Indeterminate e) const;
  ConcreteMode mode_;
};

std::unique_ptr<MembershipOracle> make_oracle(const ProblemInstance& instance);

// --- case split and the digraph ----------------------------------------------

struct Leaf {
  bool operator==(const Leaf&) const = default;
};
/// a_i and b_j are the largest-index coefficients outside the ideal.
struct Branch {
  unsigned i = 0;
  unsigned j = 0;
  bool operator==(const Branch&) const = default;
};
using CaseTag = std::variant<Leaf, Branch>;

std::string to_string(const CaseTag& tag);

struct SplitOptions {
  /// Also stop as soon as the target itself lies in the ideal.
  bool early_stop = false;
  unsigned target = 1;
};

CaseTag case_split(const IdealLabel& label, const MembershipOracle& oracle,
                   const SplitOptions& options = {});

class Digraph {
 public:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Node {
    IdealLabel label;
    CaseTag tag;
    std::size_t first = kNone;   // child with a_i added
    std::size_t second = kNone;  // child with b_j added
    std::uint64_t exponent = 0;

    bool is_sink() const { return first == kNone; }
  };

  /// Node 0 is the root; the rest follow in depth-first preorder.
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& root() const { return nodes_.front(); }
  const Node& node(std::size_t k) const { return nodes_.at(k); }
  std::optional<std::size_t> find(const IdealLabel& label) const;
  std::size_t edge_count() const;
  unsigned n() const { return root().label.n(); }
  unsigned m() const { return root().label.m(); }

 private:
  friend Digraph grow_digraph(const ProblemInstance&, const MembershipOracle&,
                              const SplitOptions&);
  std::vector<Node> nodes_;
  std::map<IdealLabel, std::size_t> index_;
};

/// Memoized depth-first growth from the empty label.  Children of
/// Branch(i, j) are label + a_i and label + b_j.
Digraph grow_digraph(const ProblemInstance& instance, const MembershipOracle& oracle,
                     const SplitOptions& options = {});
Digraph grow_digraph(const ProblemInstance& instance, const SplitOptions& options = {});

/// Exponents recomputed from the shape alone: 1 at sinks, sum of the two
/// children elsewhere.  Throws std::overflow_error past 64 bits.
std::vector<std::uint64_t> node_exponents(const Digraph& d);
std::uint64_t root_exponent(const Digraph& d);

struct StructuralMetrics {
  unsigned height = 0;               // longest root-to-sink path
  unsigned shortest_sink_path = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t leaf_count = 0;        // sinks of the digraph
  std::uint64_t tree_leaf_count = 0; // leaves of the unfolded tree
};

StructuralMetrics structural_metrics(const Digraph& d);

/// Exponents on the (n+1) x (m+1) grid indexed by how many a's (rows) and
/// b's (columns) have been added.  Sinks are the last row and column; the
/// corner (n, m) is unreachable and holds 0.
std::vector<std::vector<std::uint64_t>> pascal_grid(unsigned n, unsigned m);

/// Graphviz rendering: one node per label, sinks double-circled, exponents
/// annotated.  Byte-identical across runs.
std::string emit_dot(const Digraph& d);

}  // namespace nilcert
