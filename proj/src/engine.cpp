#include "nilcert/engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nilcert {

namespace {

std::vector<unsigned> default_targets(unsigned n, std::vector<unsigned> targets) {
  if (targets.empty()) {
    targets.resize(n);
    std::iota(targets.begin(), targets.end(), 1U);
  }
  for (unsigned t : targets)
    if (t < 1 || t > n) throw std::invalid_argument("target index out of range [1, n]");
  return targets;
}

std::uint64_t checked_add(std::uint64_t x, std::uint64_t y) {
  std::uint64_t out;
  if (__builtin_add_overflow(x, y, &out)) throw std::overflow_error("exponent exceeds 64 bits");
  return out;
}

// Sink-first order: every child has strictly more generators than its parent.
std::vector<std::size_t> by_decreasing_size(const Digraph& d) {
  std::vector<std::size_t> order(d.nodes().size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return d.node(x).label.size() > d.node(y).label.size();
  });
  return order;
}

}  // namespace

ProblemInstance ProblemInstance::generic(unsigned n, unsigned m, std::vector<unsigned> targets) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (n > IdealLabel::kMaxSide || m > IdealLabel::kMaxSide)
    throw std::invalid_argument("degree too large");
  ProblemInstance p;
  p.n = n;
  p.m = m;
  p.mode = GenericMode{};
  p.targets = default_targets(n, std::move(targets));
  return p;
}

ProblemInstance ProblemInstance::concrete(const RingHandle& ring, std::vector<mpz_class> a,
                                          std::vector<mpz_class> b,
                                          std::vector<unsigned> targets) {
  if (a.size() < 2) throw std::invalid_argument("f needs at least two coefficients");
  if (b.empty()) throw std::invalid_argument("g needs at least one coefficient");
  for (auto& x : a) x = ring.reduce(x);
  for (auto& x : b) x = ring.reduce(x);
  ProblemInstance p = generic(static_cast<unsigned>(a.size() - 1),
                              static_cast<unsigned>(b.size() - 1), std::move(targets));
  p.mode = ConcreteMode{ring, std::move(a), std::move(b)};
  return p;
}

std::vector<mpz_class> convolution(const std::vector<mpz_class>& a,
                                   const std::vector<mpz_class>& b, const RingHandle& ring) {
  if (a.empty() || b.empty()) throw std::invalid_argument("convolution of an empty list");
  std::vector<mpz_class> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = ring.reduce(x);
  return c;
}

std::vector<MultiPoly> convolution(unsigned n, unsigned m) {
  std::vector<MultiPoly> c(n + m + 1);
  for (unsigned i = 0; i <= n; ++i)
    for (unsigned j = 0; j <= m; ++j)
      c[i + j] += MultiPoly::term(1, Monomial(coeff_a(i)) * Monomial(coeff_b(j)));
  return c;
}

std::optional<UnitViolation> check_unit(const std::vector<mpz_class>& c) {
  for (std::size_t k = 0; k < c.size(); ++k) {
    const mpz_class expected = k == 0 ? 1 : 0;
    if (c[k] != expected) return UnitViolation{k, c[k]};
  }
  return std::nullopt;
}

NotAUnit::NotAUnit(UnitViolation v)
    : std::runtime_error("fg is not 1: convolution coefficient c" + std::to_string(v.index) +
                         " = " + v.value.get_str()),
      violation(std::move(v)) {}

bool GenericOracle::contains(const IdealLabel& label, Indeterminate e) const {
  auto it = cache_.find(label);
  if (it == cache_.end()) it = cache_.emplace(label, generic_closure(label)).first;
  return it->second.contains(e);
}

const mpz_class& ConcreteOracle::value(Indeterminate e) const {
  return e.kind == Kind::A ? mode_.a.at(e.index) : mode_.b.at(e.index);
}

bool ConcreteOracle::contains(const IdealLabel& label, Indeterminate e) const {
  std::vector<mpz_class> generators;
  for (const auto& g : label.generators()) generators.push_back(value(g));
  return mod_membership(mode_.ring, generators, value(e)).member;
}

std::unique_ptr<MembershipOracle> make_oracle(const ProblemInstance& instance) {
  if (instance.is_generic()) return std::make_unique<GenericOracle>();
  return std::make_unique<ConcreteOracle>(instance.concrete_mode());
}

std::string to_string(const CaseTag& tag) {
  if (std::holds_alternative<Leaf>(tag)) return "Leaf";
  const auto& br = std::get<Branch>(tag);
  return "Branch(" + std::to_string(br.i) + "," + std::to_string(br.j) + ")";
}

CaseTag case_split(const IdealLabel& label, const MembershipOracle& oracle,
                   const SplitOptions& options) {
  if (options.early_stop && oracle.contains(label, coeff_a(options.target))) return Leaf{};
  unsigned i = 0;
  for (unsigned k = label.n(); k >= 1; --k) {
    if (!oracle.contains(label, coeff_a(k))) {
      i = k;
      break;
    }
  }
  if (i == 0) return Leaf{};
  unsigned j = 0;
  for (unsigned k = label.m(); k >= 1; --k) {
    if (!oracle.contains(label, coeff_b(k))) {
      j = k;
      break;
    }
  }
  if (j == 0)
    throw InternalInconsistency("a" + std::to_string(i) + " is outside " + label.to_string() +
                                " while every b_j is inside");
  return Branch{i, j};
}

std::optional<std::size_t> Digraph::find(const IdealLabel& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Digraph::edge_count() const {
  std::size_t edges = 0;
  for (const auto& node : nodes_)
    if (!node.is_sink()) edges += 2;
  return edges;
}

Digraph grow_digraph(const ProblemInstance& instance, const MembershipOracle& oracle,
                     const SplitOptions& options) {
  Digraph d;
  auto visit = [&](auto&& self, const IdealLabel& label) -> std::size_t {
    if (auto it = d.index_.find(label); it != d.index_.end()) return it->second;
    const std::size_t k = d.nodes_.size();
    d.nodes_.push_back({label, case_split(label, oracle, options)});
    d.index_.emplace(label, k);
    if (const auto* br = std::get_if<Branch>(&d.nodes_[k].tag)) {
      const IdealLabel with_a = label.with_a(br->i);
      const IdealLabel with_b = label.with_b(br->j);
      const std::size_t first = self(self, with_a);
      const std::size_t second = self(self, with_b);
      d.nodes_[k].first = first;
      d.nodes_[k].second = second;
    }
    return k;
  };
  visit(visit, IdealLabel(instance.n, instance.m));
  const auto exponents = node_exponents(d);
  for (std::size_t k = 0; k < d.nodes_.size(); ++k) d.nodes_[k].exponent = exponents[k];
  return d;
}

Digraph grow_digraph(const ProblemInstance& instance, const SplitOptions& options) {
  const auto oracle = make_oracle(instance);
  return grow_digraph(instance, *oracle, options);
}

std::vector<std::uint64_t> node_exponents(const Digraph& d) {
  std::vector<std::uint64_t> e(d.nodes().size(), 0);
  for (std::size_t k : by_decreasing_size(d)) {
    const auto& node = d.node(k);
    e[k] = node.is_sink() ? 1 : checked_add(e[node.first], e[node.second]);
  }
  return e;
}

std::uint64_t root_exponent(const Digraph& d) { return node_exponents(d).front(); }

StructuralMetrics structural_metrics(const Digraph& d) {
  const std::size_t count = d.nodes().size();
  std::vector<unsigned> longest(count, 0);
  std::vector<unsigned> shortest(count, 0);
  for (std::size_t k : by_decreasing_size(d)) {
    const auto& node = d.node(k);
    if (node.is_sink()) continue;
    longest[k] = 1 + std::max(longest[node.first], longest[node.second]);
    shortest[k] = 1 + std::min(shortest[node.first], shortest[node.second]);
  }
  StructuralMetrics s;
  s.height = longest.front();
  s.shortest_sink_path = shortest.front();
  s.vertex_count = count;
  s.edge_count = d.edge_count();
  s.leaf_count = static_cast<std::size_t>(
      std::count_if(d.nodes().begin(), d.nodes().end(), [](const auto& x) { return x.is_sink(); }));
  s.tree_leaf_count = root_exponent(d);
  return s;
}

std::vector<std::vector<std::uint64_t>> pascal_grid(unsigned n, unsigned m) {
  std::vector<std::vector<std::uint64_t>> grid(n + 1, std::vector<std::uint64_t>(m + 1, 0));
  for (unsigned k = n + 1; k-- > 0;) {
    for (unsigned p = m + 1; p-- > 0;) {
      if (k == n && p == m) continue;
      grid[k][p] = (k == n || p == m) ? 1 : checked_add(grid[k + 1][p], grid[k][p + 1]);
    }
  }
  return grid;
}

std::string emit_dot(const Digraph& d) {
  std::ostringstream out;
  out << "digraph nilcert {\n";
  out << "  node [shape=circle, fontname=\"monospace\"];\n";
  for (const auto& node : d.nodes()) {
    const std::string name = node.label.to_string();
    out << "  \"" << name << "\" [";
    if (node.is_sink()) out << "shape=doublecircle, ";
    out << "label=\"" << name << "\\ne=" << node.exponent << "\"];\n";
  }
  for (const auto& node : d.nodes()) {
    if (node.is_sink()) continue;
    const std::string from = node.label.to_string();
    out << "  \"" << from << "\" -> \"" << d.node(node.first).label.to_string() << "\";\n";
    out << "  \"" << from << "\" -> \"" << d.node(node.second).label.to_string() << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nilcert
