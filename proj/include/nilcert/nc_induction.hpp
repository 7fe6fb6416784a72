// The nilpotency induction phrased through the generic poset runner: labels
// under inclusion, goodness from the case split, and either exponents or
// full witnesses as evidence.

#pragma once

#include <cstdint>

#include "nilcert/certificate.hpp"
#include "nilcert/engine.hpp"
#include "nilcert/induction.hpp"

namespace nilcert {

/// All 2^(n+m) labels of shape (n, m), ordered by inclusion, meet = intersection.
FinitePoset<IdealLabel> label_poset(unsigned n, unsigned m);

struct NodeEvidence {
  CaseTag tag;
  std::uint64_t exponent = 0;
};

/// Evidence at every label of the instance's poset.
InductionResult<IdealLabel, NodeEvidence> nc_by_induction(const ProblemInstance& instance);

/// Witness of a_target^e at the empty label, produced by the runner with
/// WitnessBuilder::combine as the meet step.
MembershipWitness root_witness_by_induction(unsigned n, unsigned m, unsigned target);

}  // namespace nilcert
