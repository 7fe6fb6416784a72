#include "nilcert/nc_induction.hpp"

#include <bit>

namespace nilcert {

namespace {

template <class E>
GoodnessOutcome<IdealLabel, E> reduce_by_case(const IdealLabel& x, const CaseTag& tag, E leaf) {
  if (std::holds_alternative<Leaf>(tag)) return Holds<E>{std::move(leaf)};
  const auto& br = std::get<Branch>(tag);
  return Reduce<IdealLabel>{x.with_a(br.i), x.with_b(br.j)};
}

// the generator in `child` that `parent` lacks
Indeterminate added_generator(const IdealLabel& parent, const IdealLabel& child) {
  const auto a = child.a_mask() & ~parent.a_mask();
  if (a != 0) return coeff_a(static_cast<std::uint32_t>(std::countr_zero(a)) + 1);
  const auto b = child.b_mask() & ~parent.b_mask();
  return coeff_b(static_cast<std::uint32_t>(std::countr_zero(b)) + 1);
}

}  // namespace

FinitePoset<IdealLabel> label_poset(unsigned n, unsigned m) {
  if (n + m > 20) throw std::invalid_argument("label poset too large to enumerate");
  FinitePoset<IdealLabel> poset;
  for (std::uint64_t a = 0; a < (1ULL << n); ++a)
    for (std::uint64_t b = 0; b < (1ULL << m); ++b) poset.elements.emplace_back(n, m, a, b);
  poset.leq = [](const IdealLabel& x, const IdealLabel& y) { return x.subset_of(y); };
  poset.meet = [](const IdealLabel& x, const IdealLabel& y) -> std::optional<IdealLabel> {
    return x.meet(y);
  };
  return poset;
}

InductionResult<IdealLabel, NodeEvidence> nc_by_induction(const ProblemInstance& instance) {
  const auto oracle = make_oracle(instance);
  auto goodness = [&](const IdealLabel& x) {
    const CaseTag tag = case_split(x, *oracle);
    return reduce_by_case(x, tag, NodeEvidence{tag, 1});
  };
  auto combine = [&](const IdealLabel& x, const IdealLabel&, const IdealLabel&,
                     const NodeEvidence& ey, const NodeEvidence& ez) {
    return NodeEvidence{case_split(x, *oracle), ey.exponent + ez.exponent};
  };
  return run_induction<IdealLabel, NodeEvidence>(label_poset(instance.n, instance.m), goodness,
                                                 combine);
}

MembershipWitness root_witness_by_induction(unsigned n, unsigned m, unsigned target) {
  GenericOracle oracle;
  WitnessBuilder builder(n, m);
  Induction<IdealLabel, MembershipWitness> runner(
      label_poset(n, m),
      [&](const IdealLabel& x) -> GoodnessOutcome<IdealLabel, MembershipWitness> {
        const CaseTag tag = case_split(x, oracle);
        if (std::holds_alternative<Leaf>(tag))
          return Holds<MembershipWitness>{builder.membership_witness(x, coeff_a(target))};
        const auto& br = std::get<Branch>(tag);
        return Reduce<IdealLabel>{x.with_a(br.i), x.with_b(br.j)};
      },
      [&](const IdealLabel& x, const IdealLabel& y, const IdealLabel& z,
          const MembershipWitness& wy, const MembershipWitness& wz) {
        const unsigned i = added_generator(x, y).index;
        const unsigned j = added_generator(x, z).index;
        return builder.combine(wy, wz, builder.gauss_product_witness(i, j, x), i, j);
      });
  return runner.evidence_for(IdealLabel(n, m));
}

}  // namespace nilcert
