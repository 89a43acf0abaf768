#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "finring/error.hpp"
#include "finring/isomorphism.hpp"
#include "finring/presentation.hpp"
#include "finring/structure.hpp"
#include "oracles.hpp"
#include "samples.hpp"

using namespace finring;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const RingError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a RingError";
  return ErrorCode::InvalidArgument;
}

ElementSet cyclic(std::initializer_list<std::uint32_t> values) {
  ElementSet s;
  for (auto v : values) s.push_back(Element{v});
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

TEST(Element, ValueSemantics) {
  const Element a{1, 2}, b{1, 3}, c{2, 0};
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
  EXPECT_EQ(a, (Element{1, 2}));
  EXPECT_EQ(a.to_string(), "(1,2)");
  EXPECT_EQ((Element{5}).to_string(), "5");
  EXPECT_TRUE(Element(3).is_zero());
  const std::vector<std::uint32_t> wide(17, 0);
  EXPECT_EQ(code_of([&] { Element(std::span<const std::uint32_t>(wide)); }),
            ErrorCode::IllFormedTable);
}

TEST(MakeRing, ValidationOrder) {
  // factor order below 2
  EXPECT_EQ(code_of([] { make_ring({1}, {Element{0}}, Element{0}, "bad"); }),
            ErrorCode::IllFormedTable);
  // wrong table size
  EXPECT_EQ(code_of([] { make_ring({2, 2}, {Element{1, 0}}, Element{1, 0}, "bad"); }),
            ErrorCode::IllFormedTable);
  // coordinate out of range
  EXPECT_EQ(code_of([] { make_ring({4}, {Element{5}}, Element{1}, "bad"); }),
            ErrorCode::IllFormedTable);
  // g0 has order 2, so g0*g1 must be killed by 2; (0,1) in Z2 x Z4 is not
  EXPECT_EQ(code_of([] {
              make_ring({2, 4}, {Element{1, 0}, Element{0, 1}, Element{0, 1}, Element{0, 1}},
                        Element{1, 0}, "bad");
            }),
            ErrorCode::NotWellDefined);
  // Z2 x Z2 with g0*g0 = g1, g1*g0 = g0, rest zero: (g1 g0) g0 = g1 but g1 (g0 g0) = 0
  EXPECT_EQ(code_of([] {
              make_ring({2, 2}, {Element{0, 1}, Element{0, 0}, Element{1, 0}, Element{0, 0}},
                        Element{1, 0}, "bad");
            }),
            ErrorCode::NotAssociative);
  // Z4 with 1*1 = 1 but unity 2
  EXPECT_EQ(code_of([] { make_ring({4}, {Element{1}}, Element{2}, "bad"); }),
            ErrorCode::UnityLawFails);
}

TEST(MakeRing, WitnessesNameTheFailingGenerators) {
  try {
    make_ring({2, 2}, {Element{0, 1}, Element{0, 0}, Element{1, 0}, Element{0, 0}},
              Element{1, 0}, "bad");
    FAIL();
  } catch (const RingError& e) {
    ASSERT_EQ(e.witness().size(), 3u);
  }
}

TEST(MakeRing, ZeroRingIsAllowed) {
  const FiniteRing z = make_ring({}, {}, Element(0), "0");
  EXPECT_EQ(z.order(), 1u);
  EXPECT_EQ(characteristic(z), 1u);
  EXPECT_TRUE(is_commutative(z));
}

TEST(Arithmetic, CyclicMatchesModularIntegers) {
  const FiniteRing z = cyclic_ring(12);
  for (std::uint32_t a = 0; a < 12; ++a) {
    for (std::uint32_t b = 0; b < 12; ++b) {
      EXPECT_EQ(z.add(Element{a}, Element{b}), Element{(a + b) % 12});
      EXPECT_EQ(z.mul(Element{a}, Element{b}), Element{(a * b) % 12});
      EXPECT_EQ(z.sub(Element{a}, Element{b}), Element{(a + 12 - b) % 12});
    }
  }
  EXPECT_EQ(z.scale(-1, Element{5}), Element{7});
  EXPECT_EQ(z.pow(Element{2}, 3), Element{8});
  EXPECT_EQ(code_of([&] { z.pow(Element{2}, 0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { z.check_element(Element{12}); }), ErrorCode::OutOfRangeCoordinate);
  EXPECT_EQ(code_of([&] { z.mul(Element{1, 0}, Element{1}); }), ErrorCode::DimensionMismatch);
}

TEST(Arithmetic, IndexRoundTrip) {
  for (const FiniteRing& r : samples::pool()) {
    std::uint64_t idx = 0;
    for (const Element& x : elements(r)) {
      EXPECT_EQ(r.index_of(x), idx);
      EXPECT_EQ(r.element_at(idx), x);
      ++idx;
    }
    EXPECT_EQ(idx, r.order());
  }
}

TEST(Properties, RingAxiomsOnRandomTriples) {
  std::mt19937 rng(20240611);
  for (const FiniteRing& r : samples::pool()) {
    for (int trial = 0; trial < 300; ++trial) {
      const Element x = samples::random_element(r, rng);
      const Element y = samples::random_element(r, rng);
      const Element z = samples::random_element(r, rng);
      ASSERT_EQ(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z))) << r.name();
      ASSERT_EQ(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z))) << r.name();
      ASSERT_EQ(r.mul(r.add(x, y), z), r.add(r.mul(x, z), r.mul(y, z))) << r.name();
      ASSERT_EQ(r.mul(r.unity(), x), x);
      ASSERT_EQ(r.mul(x, r.unity()), x);
      ASSERT_TRUE(r.add(x, r.neg(x)).is_zero());
    }
  }
}

TEST(PowerCycle, KnownCases) {
  const FiniteRing z8 = cyclic_ring(8);
  const PowerCycle two = power_cycle(z8, Element{2});
  EXPECT_EQ(two.tail_length, 2u);
  EXPECT_EQ(two.cycle_length, 1u);
  EXPECT_TRUE(two.eventual_idempotent.is_zero());
  const PowerCycle three = power_cycle(z8, Element{3});
  EXPECT_EQ(three.tail_length, 0u);
  EXPECT_EQ(three.cycle_length, 2u);
  EXPECT_EQ(three.eventual_idempotent, Element{1});
  const PowerCycle four = power_cycle(cyclic_ring(12), Element{2});
  EXPECT_EQ(four.eventual_idempotent, Element{4});
}

TEST(Properties, PowerCycleInvariants) {
  std::mt19937 rng(7);
  for (const FiniteRing& r : samples::pool()) {
    for (int trial = 0; trial < 60; ++trial) {
      const Element x = samples::random_element(r, rng);
      const PowerCycle pc = power_cycle(r, x);
      const std::uint64_t t = pc.tail_length, c = pc.cycle_length;
      ASSERT_EQ(r.pow(x, t + c + 1), r.pow(x, t + 1));
      for (std::uint64_t j = 1; j < c; ++j) ASSERT_NE(r.pow(x, t + 1 + j), r.pow(x, t + 1));
      if (t > 0) ASSERT_NE(r.pow(x, t), r.pow(x, t + c));
      ASSERT_TRUE(is_idempotent(r, pc.eventual_idempotent));
      // nilpotent iff the idempotent is 0, unit iff it is 1
      ASSERT_EQ(is_nilpotent(r, x), pc.eventual_idempotent.is_zero());
      ASSERT_EQ(is_unit(r, x).is_unit, pc.eventual_idempotent == r.unity());
    }
  }
}

TEST(Structure, CyclicRingScansMatchArithmetic) {
  for (std::uint32_t m : {2u, 4u, 6u, 8u, 9u, 12u, 30u}) {
    const FiniteRing z = cyclic_ring(m);
    ElementSet nil, idem, unit;
    for (std::uint32_t a = 0; a < m; ++a) {
      std::uint64_t p = a;
      for (std::uint32_t k = 0; k < m; ++k) p = p * a % m;
      if (p == 0) nil.push_back(Element{a});
      if (a * a % m == a) idem.push_back(Element{a});
      if (std::gcd(a, m) == 1) unit.push_back(Element{a});
    }
    EXPECT_EQ(nilpotents(z), nil) << m;
    EXPECT_EQ(idempotents(z), idem) << m;
    EXPECT_EQ(units(z), unit) << m;
    EXPECT_EQ(center(z).size(), m);
    EXPECT_EQ(characteristic(z), m);
  }
}

TEST(Structure, KnownCases) {
  EXPECT_EQ(nilpotents(cyclic_ring(8)), cyclic({0, 2, 4, 6}));
  EXPECT_EQ(idempotents(cyclic_ring(12)), cyclic({0, 1, 4, 9}));
  EXPECT_EQ(units(cyclic_ring(8)), cyclic({1, 3, 5, 7}));
  const FiniteRing m2 = matrix_ring(cyclic_ring(2), 2).ring;
  EXPECT_EQ(nilpotents(m2).size(), 4u);
  EXPECT_EQ(center(m2).size(), 2u);
  EXPECT_EQ(units(m2).size(), 6u);
  EXPECT_FALSE(is_commutative(m2));
  EXPECT_EQ(units(samples::f4()).size(), 3u);
  EXPECT_TRUE(is_field(samples::f4()));
  EXPECT_FALSE(is_field(samples::dual2()));
  EXPECT_FALSE(is_field(cyclic_ring(4)));
}

TEST(Structure, UnitInverse) {
  const FiniteRing z = cyclic_ring(9);
  const UnitTest t = is_unit(z, Element{2});
  ASSERT_TRUE(t.is_unit);
  EXPECT_EQ(z.mul(Element{2}, *t.inverse), Element{1});
  EXPECT_FALSE(is_unit(z, Element{3}).is_unit);
  EXPECT_FALSE(is_unit(z, Element{3}).inverse.has_value());
}

TEST(Properties, CenterIsClosedSubringAndCommutatorsVanishOnIt) {
  for (const FiniteRing& r : samples::pool()) {
    const ElementSet c = center(r);
    ASSERT_TRUE(contains(c, r.unity()));
    for (const Element& x : c) {
      for (const Element& y : c) {
        ASSERT_TRUE(contains(c, r.add(x, y)));
        ASSERT_TRUE(contains(c, r.mul(x, y)));
      }
      for (const Element& y : elements(r)) ASSERT_TRUE(commutator(r, x, y).is_zero());
    }
    // is_central agrees with a full scan
    for (const Element& x : elements(r)) {
      bool all = true;
      for (const Element& y : elements(r)) all = all && r.mul(x, y) == r.mul(y, x);
      ASSERT_EQ(is_central(r, x), all);
      ASSERT_EQ(contains(c, x), all);
    }
  }
}

TEST(Ideals, GeneratedIdealAndValidation) {
  const FiniteRing z = cyclic_ring(12);
  EXPECT_EQ(ideal_generated(z, {Element{8}}).members, cyclic({0, 4, 8}));
  EXPECT_EQ(make_ideal(z, cyclic({0, 6})).size(), 2u);
  EXPECT_EQ(code_of([&] { make_ideal(z, cyclic({0, 5})); }), ErrorCode::NotAnIdeal);
  const FiniteRing m2 = matrix_ring(cyclic_ring(2), 2).ring;
  // M2(F2) is simple: any nonzero element generates everything
  EXPECT_EQ(commutator_ideal(m2).size(), 16u);
  EXPECT_EQ(commutator_ideal(cyclic_ring(6)).size(), 1u);
}

TEST(Properties, QuotientProjectionIsHomomorphism) {
  std::mt19937 rng(11);
  for (const FiniteRing& r : samples::pool()) {
    const Ideal n_ideal = ideal_generated(r, nilpotents(r));
    const Quotient q = quotient(r, n_ideal);
    ASSERT_EQ(q.ring.order() * n_ideal.size(), r.order()) << r.name();
    for (int trial = 0; trial < 100; ++trial) {
      const Element x = samples::random_element(r, rng);
      const Element y = samples::random_element(r, rng);
      ASSERT_EQ(q.project(r, r.add(x, y)), q.ring.add(q.project(r, x), q.project(r, y)));
      ASSERT_EQ(q.project(r, r.mul(x, y)), q.ring.mul(q.project(r, x), q.project(r, y)));
    }
    ASSERT_EQ(q.project(r, r.unity()), q.ring.unity());
  }
}

TEST(Quotient, FieldQuotients) {
  EXPECT_TRUE(is_field(quotient(cyclic_ring(4), make_ideal(cyclic_ring(4), cyclic({0, 2}))).ring));
  const FiniteRing ut = upper_triangular_ring(cyclic_ring(2), 2);
  const Quotient q = quotient(ut, ideal_generated(ut, nilpotents(ut)));
  EXPECT_EQ(q.ring.order(), 4u);
  EXPECT_FALSE(is_field(q.ring));  // F2 x F2
}

TEST(Presentation, ExplicitTablesRoundTrip) {
  // Z2 x Z4 given by index arithmetic on pairs
  ExplicitRing src;
  src.size = 8;
  src.add = [](std::size_t x, std::size_t y) {
    return ((x / 4 + y / 4) % 2) * 4 + (x % 4 + y % 4) % 4;
  };
  src.mul = [](std::size_t x, std::size_t y) {
    return ((x / 4) * (y / 4) % 2) * 4 + (x % 4) * (y % 4) % 4;
  };
  src.zero = 0;
  src.one = 5;
  const Presentation p = present(src, "Z2xZ4");
  EXPECT_EQ(p.ring.order(), 8u);
  const FiniteRing expected = direct_sum(cyclic_ring(2), cyclic_ring(4));
  EXPECT_TRUE(find_isomorphism(p.ring, expected).has_value());
  for (std::size_t x = 0; x < 8; ++x)
    for (std::size_t y = 0; y < 8; ++y)
      ASSERT_EQ(p.ring.mul(p.coordinates[x], p.coordinates[y]), p.coordinates[src.mul(x, y)]);
}

TEST(Isomorphism, KnownPairs) {
  const FiniteRing z6 = cyclic_ring(6);
  const FiniteRing z2z3 = direct_sum(cyclic_ring(2), cyclic_ring(3));
  const auto iso = find_isomorphism(z6, z2z3);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(is_ring_isomorphism(z6, z2z3, *iso));
  EXPECT_FALSE(find_isomorphism(cyclic_ring(4), direct_sum(cyclic_ring(2), cyclic_ring(2))));
  EXPECT_FALSE(find_isomorphism(samples::f4(), samples::dual2()));
  EXPECT_FALSE(find_isomorphism(cyclic_ring(4), cyclic_ring(5)));
  const FiniteRing ut = upper_triangular_ring(cyclic_ring(2), 2);
  EXPECT_TRUE(find_isomorphism(ut, ut).has_value());
  EXPECT_EQ(code_of([&] {
              find_isomorphism(matrix_ring(cyclic_ring(2), 2).ring,
                               matrix_ring(cyclic_ring(2), 2).ring, 8);
            }),
            ErrorCode::SizeLimitExceeded);
}

TEST(Isomorphism, AgreesWithPermutationOracle) {
  const std::vector<FiniteRing> rings = {
      cyclic_ring(4), samples::f4(), samples::dual2(),
      direct_sum(cyclic_ring(2), cyclic_ring(2)), cyclic_ring(6),
      direct_sum(cyclic_ring(2), cyclic_ring(3)),
  };
  for (const FiniteRing& a : rings) {
    for (const FiniteRing& b : rings) {
      const bool lib = find_isomorphism(a, b).has_value();
      const bool ref = oracle::isomorphic_by_permutation(oracle::table_of(a), oracle::table_of(b));
      EXPECT_EQ(lib, ref) << a.name() << " vs " << b.name();
    }
  }
}

TEST(Properties, IsomorphismImagesAreValidMaps) {
  for (const FiniteRing& r : samples::pool()) {
    if (r.order() > kIsomorphismLimit) continue;
    const auto iso = find_isomorphism(r, r);
    ASSERT_TRUE(iso.has_value()) << r.name();
    EXPECT_TRUE(is_ring_isomorphism(r, r, *iso));
  }
}

TEST(Limits, ScansRefuseHugeRings) {
  const FiniteRing big = cyclic_ring(5000);
  EXPECT_EQ(code_of([&] { nilpotents(big); }), ErrorCode::SizeLimitExceeded);
  EXPECT_EQ(code_of([&] { structure_report(big); }), ErrorCode::SizeLimitExceeded);
}
