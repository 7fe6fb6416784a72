#include <random>

#include <gtest/gtest.h>

#include "nilcert/ideal.hpp"
#include "nilcert/ring.hpp"
#include "oracles.hpp"

using namespace nilcert;

TEST(Ring, Basics) {
  const auto z8 = RingHandle::modular(8);
  EXPECT_EQ(z8.to_string(), "Z/8");
  EXPECT_EQ(RingHandle::integers().to_string(), "Z");
  EXPECT_EQ(z8.reduce(-3), 5);
  EXPECT_EQ(z8.reduce(24), 0);
  EXPECT_EQ(z8.pow(2, 3), 0);
  EXPECT_EQ(z8.pow(3, 0), 1);
  EXPECT_EQ(RingHandle::integers().reduce(-3), -3);
  EXPECT_THROW(RingHandle::modular(1), std::invalid_argument);
  EXPECT_THROW(RingHandle::modular(0), std::invalid_argument);
}

TEST(ModMembership, Examples) {
  const auto z8 = RingHandle::modular(8);
  const auto six = mod_membership(z8, {6}, 2);
  EXPECT_TRUE(six.member);
  ASSERT_TRUE(six.witness);
  EXPECT_EQ(z8.mul((*six.witness)[0], 6), 2);

  const auto empty = mod_membership(z8, {}, 0);
  EXPECT_TRUE(empty.member);
  ASSERT_TRUE(empty.witness);
  EXPECT_TRUE(empty.witness->empty());

  EXPECT_FALSE(mod_membership(z8, {4}, 2).member);
  EXPECT_FALSE(mod_membership(z8, {}, 4).member);
  EXPECT_TRUE(mod_membership(z8, {3}, 5).member);  // 3 is a unit
}

TEST(ModMembership, AgreesWithEnumerationUpTo30) {
  for (std::uint64_t n = 2; n <= 30; ++n) {
    const auto ring = RingHandle::modular(static_cast<unsigned long>(n));
    for (std::uint64_t g1 = 0; g1 < n; ++g1) {
      for (std::uint64_t g2 = g1; g2 < n; ++g2) {
        const std::vector<std::vector<std::uint64_t>> sets{{g1}, {g1, g2}};
        for (const auto& gens : sets) {
          const auto truth = oracle::ideal(n, gens);
          std::vector<mpz_class> g(gens.begin(), gens.end());
          for (std::uint64_t r = 0; r < n; ++r) {
            const auto dec = mod_membership(ring, g, static_cast<unsigned long>(r));
            ASSERT_EQ(dec.member, truth.count(r) == 1) << "n=" << n << " r=" << r;
            if (!dec.member) {
              EXPECT_FALSE(dec.witness);
              continue;
            }
            ASSERT_TRUE(dec.witness);
            ASSERT_EQ(dec.witness->size(), g.size());
            mpz_class sum = 0;
            for (std::size_t k = 0; k < g.size(); ++k) sum += (*dec.witness)[k] * g[k];
            EXPECT_EQ(ring.reduce(sum), r);
          }
        }
      }
    }
  }
}

// --- labels and closure ---------------------------------------------------------

TEST(IdealLabel, RenderingAndOrder) {
  const IdealLabel root(2, 1);
  EXPECT_EQ(root.to_string(), "(00,0)");
  EXPECT_EQ(root.with_a(2).to_string(), "(01,0)");
  EXPECT_EQ(root.with_a(2).with_b(1).to_string(), "(01,1)");
  EXPECT_EQ(IdealLabel(1, 0).to_string(), "(0,)");
  EXPECT_TRUE(root.subset_of(root.with_a(1)));
  EXPECT_FALSE(root.with_a(1).subset_of(root.with_a(2)));
  EXPECT_EQ(root.with_a(1).meet(root.with_a(1).with_b(1)), root.with_a(1));
  EXPECT_EQ(root.with_a(1).with_a(2).with_b(1).size(), 3u);
  EXPECT_TRUE(root.with_a(1).with_a(2).with_b(1).is_full());
  EXPECT_THROW(IdealLabel(2, 1, 0b100, 0), std::invalid_argument);
  EXPECT_THROW(IdealLabel(64, 0), std::invalid_argument);
}

namespace {

std::set<Indeterminate> closure_set(const IdealLabel& l) {
  const auto cl = generic_closure(l);
  return {cl.order().begin(), cl.order().end()};
}

}  // namespace

TEST(Closure, Examples) {
  const IdealLabel root(2, 1);
  EXPECT_EQ(closure_set(root.with_b(1)),
            (std::set<Indeterminate>{coeff_a(1), coeff_a(2), coeff_b(1)}));
  EXPECT_EQ(closure_set(root.with_a(2)), (std::set<Indeterminate>{coeff_a(2)}));
  for (unsigned n = 1; n <= 6; ++n) {
    const auto cl = generic_closure(IdealLabel(n, 0));
    EXPECT_TRUE(cl.all_a());
    EXPECT_EQ(cl.rule(coeff_a(n)), Closure::Rule::Derived);
  }
  EXPECT_TRUE(closure_set(root).empty());
}

TEST(GenericMembership, Examples) {
  const IdealLabel root(2, 1);
  EXPECT_FALSE(generic_membership(root.with_a(2), coeff_a(1)).member);
  EXPECT_TRUE(generic_membership(root.with_a(1).with_a(2), coeff_a(1)).member);
  EXPECT_TRUE(generic_membership(root.with_a(2).with_b(1), coeff_a(1)).member);
  EXPECT_FALSE(generic_membership(root.with_a(2).with_b(1), coeff_a(1)).witness);
}

// Monotone, extensive, idempotent; the closure of E is E; a label whose closure
// holds every a also holds every b (leaf symmetry).
TEST(ClosureProperties, ClosureOperatorLaws) {
  for (unsigned n = 1; n <= 5; ++n) {
    for (unsigned m = 0; n + m <= 8; ++m) {
      const std::uint64_t amax = 1ULL << n, bmax = 1ULL << m;
      const IdealLabel full(n, m, amax - 1, bmax - 1);
      EXPECT_EQ(generic_closure(full).as_label(), full);
      for (std::uint64_t am = 0; am < amax; ++am) {
        for (std::uint64_t bm = 0; bm < bmax; ++bm) {
          const IdealLabel l(n, m, am, bm);
          const auto cl = generic_closure(l);
          const auto c = cl.as_label();
          ASSERT_TRUE(l.subset_of(c));
          ASSERT_EQ(generic_closure(c).as_label(), c);
          for (const auto& g : l.generators())
            ASSERT_EQ(cl.rule(g), Closure::Rule::Generator);
          if (m > 0) {
            ASSERT_EQ(cl.all_a(), cl.all_b()) << l.to_string();
          }
          // monotone under adding any single generator
          for (const auto& e : nonconstant_coefficients(n, m))
            ASSERT_TRUE(c.subset_of(generic_closure(l.with(e)).as_label()));
        }
      }
    }
  }
}

TEST(ClosureProperties, DerivationOrderRespectsPremises) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned n = 1 + rng() % 6, m = rng() % 6;
    const IdealLabel l(n, m, rng() & ((1ULL << n) - 1), rng() & ((1ULL << m) - 1));
    const auto cl = generic_closure(l);
    std::set<Indeterminate> seen;
    for (const auto& e : cl.order()) {
      if (cl.rule(e) == Closure::Rule::Derived) {
        const unsigned bound = e.kind == Kind::A ? std::min(e.index, m) : std::min(e.index, n);
        for (unsigned k = 1; k <= bound; ++k)
          EXPECT_TRUE(seen.count(e.kind == Kind::A ? coeff_b(k) : coeff_a(k)));
      }
      seen.insert(e);
    }
  }
}
