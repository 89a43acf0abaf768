#include <gtest/gtest.h>

#include "finring/decompose.hpp"
#include "finring/error.hpp"
#include "finring/isomorphism.hpp"
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

bool is_prime_power(std::uint64_t n) { return factorize(n).size() == 1; }

// F4 as {0, 1, w, w+1} with w^2 = w + 1, written out by hand.
oracle::Table f4_by_hand() {
  oracle::Table t;
  t.n = 4;
  t.add = {0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0};
  t.mul = {0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2};
  return t;
}

}  // namespace

TEST(Constructors, Names) {
  EXPECT_EQ(cyclic_ring(12).name(), "Z12");
  EXPECT_EQ(samples::f4().name(), "Z2[x]/(x^2+x+1)");
  EXPECT_EQ(samples::dual2().name(), "Z2[x]/(x^2)");
  EXPECT_EQ(matrix_ring(cyclic_ring(2), 2).ring.name(), "M2(Z2)");
  EXPECT_EQ(upper_triangular_ring(cyclic_ring(2), 2).name(), "UT2(Z2)");
  EXPECT_EQ(heisenberg_ring(3).name(), "H3(Z3)");
  EXPECT_EQ(direct_sum(cyclic_ring(2), cyclic_ring(3)).name(), "Z2xZ3");
}

TEST(PolyQuotient, F4MatchesHandTable) {
  const FiniteRing f4 = samples::f4();
  const oracle::Table t = oracle::table_of(f4);
  EXPECT_TRUE(oracle::associative(t));
  EXPECT_TRUE(oracle::isomorphic_by_permutation(t, f4_by_hand()));
  EXPECT_TRUE(is_field(f4));
  EXPECT_EQ(characteristic(f4), 2u);
}

TEST(PolyQuotient, F9AndErrors) {
  const std::int64_t x2_plus_1[] = {1, 0, 1};
  const FiniteRing f9 = poly_quotient(3, x2_plus_1);
  EXPECT_EQ(f9.order(), 9u);
  EXPECT_TRUE(is_field(f9));
  // x^2 + 1 = (x+1)^2 over F2
  const FiniteRing not_field = poly_quotient(2, x2_plus_1);
  EXPECT_FALSE(is_field(not_field));
  EXPECT_EQ(nilpotents(not_field).size(), 2u);
  EXPECT_EQ(code_of([&] { poly_quotient(4, x2_plus_1); }), ErrorCode::NotPrime);
  const std::int64_t leading_two[] = {1, 1, 2};
  EXPECT_EQ(code_of([&] { poly_quotient(2, leading_two); }), ErrorCode::NotMonic);
  // leading coefficient -1 is not monic either
  const std::int64_t negative[] = {1, 0, -1};
  EXPECT_EQ(code_of([&] { poly_quotient(3, negative); }), ErrorCode::NotMonic);
}

TEST(MatrixRing, NilpotentCountsAgreeWithDirectPowering) {
  struct Case {
    std::uint32_t m;
    std::size_t n;
    std::size_t expected;
  };
  for (const Case& c : {Case{2, 2, 4}, Case{4, 2, 0}, Case{2, 3, 64}, Case{3, 2, 9}}) {
    const FiniteRing r = matrix_ring(cyclic_ring(c.m), c.n).ring;
    const std::size_t ref = oracle::count_nilpotent_matrices(c.n, c.m);
    EXPECT_EQ(nilpotents(r).size(), ref) << r.name();
    if (c.expected) EXPECT_EQ(ref, c.expected) << r.name();
  }
}

TEST(MatrixRing, EntryHelpers) {
  const MatrixRing m = matrix_ring(cyclic_ring(3), 2);
  const Element e12 = m.elementary(0, 1, Element{2});
  EXPECT_EQ(m.entry(e12, 0, 1), Element{2});
  EXPECT_EQ(m.entry(e12, 1, 0), Element{0});
  EXPECT_EQ(m.transpose(e12), m.elementary(1, 0, Element{2}));
  EXPECT_EQ(m.scalar(Element{1}), m.ring.unity());
  EXPECT_TRUE(m.ring.mul(e12, e12).is_zero());
  const std::vector<Element> entries = {Element{1}, Element{2}, Element{0}, Element{1}};
  const Element a = m.from_entries(entries);
  EXPECT_EQ(m.entry(a, 0, 1), Element{2});
  EXPECT_EQ(m.coordinate(1, 0, 0), 2u);
}

TEST(MatrixRing, SizeLimit) {
  EXPECT_EQ(code_of([] { matrix_ring(cyclic_ring(2), 4); }), ErrorCode::SizeLimitExceeded);
  EXPECT_EQ(code_of([] { matrix_ring(cyclic_ring(2), 1); }), ErrorCode::InvalidArgument);
}

TEST(MatrixRing, CentreOfMatricesOverZ4) {
  const MatrixRing m = matrix_ring(cyclic_ring(4), 2);
  ElementSet scalars;
  for (std::uint32_t c = 0; c < 4; ++c) scalars.push_back(m.scalar(Element{c}));
  std::sort(scalars.begin(), scalars.end());
  EXPECT_EQ(center(m.ring), scalars);
}

TEST(UpperTriangular, Structure) {
  const FiniteRing ut = upper_triangular_ring(cyclic_ring(2), 2);
  EXPECT_EQ(ut.order(), 8u);
  EXPECT_FALSE(is_commutative(ut));
  const StructureReport rep = structure_report(ut);
  EXPECT_FALSE(rep.nilpotents_central);
  EXPECT_EQ(rep.nilpotents.size(), 2u);
  // [[a,b],[0,c]]: a = c forces b = 0, a != c leaves b free
  EXPECT_EQ(rep.idempotents.size(), 6u);
}

TEST(Heisenberg, CommutatorsAreCentral) {
  for (std::uint32_t p : {2u, 3u}) {
    const FiniteRing h = heisenberg_ring(p);
    EXPECT_EQ(h.order(), std::uint64_t(p) * p * p * p);
    EXPECT_FALSE(is_commutative(h));
    EXPECT_TRUE(is_subset(commutators(h), center(h)));
    EXPECT_EQ(characteristic(h), p);
  }
  EXPECT_EQ(code_of([] { heisenberg_ring(1); }), ErrorCode::InvalidArgument);
}

TEST(DirectSum, OrdersAndCharacteristic) {
  const FiniteRing s = direct_sum(cyclic_ring(4), cyclic_ring(6));
  EXPECT_EQ(s.order(), 24u);
  EXPECT_EQ(characteristic(s), 12u);
  EXPECT_EQ(idempotents(s).size(), 8u);
}

TEST(Decompose, CrtIdempotentsOfZ12) {
  const auto parts = crt_decompose(cyclic_ring(12));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].modulus, 4u);
  EXPECT_EQ(parts[0].idempotent, Element{9});
  EXPECT_EQ(parts[1].modulus, 3u);
  EXPECT_EQ(parts[1].idempotent, Element{4});
  EXPECT_TRUE(find_isomorphism(parts[0].ring, cyclic_ring(4)).has_value());
  EXPECT_TRUE(find_isomorphism(parts[1].ring, cyclic_ring(3)).has_value());
  EXPECT_EQ(crt_decompose(cyclic_ring(8)).size(), 1u);
}

TEST(Decompose, PeirceErrors) {
  const FiniteRing z6 = cyclic_ring(6);
  EXPECT_EQ(code_of([&] { peirce_decompose(z6, Element{2}); }), ErrorCode::NotIdempotent);
  EXPECT_EQ(code_of([&] { peirce_decompose(z6, Element{1}); }), ErrorCode::TrivialIdempotent);
  const FiniteRing ut = upper_triangular_ring(cyclic_ring(2), 2);
  EXPECT_EQ(code_of([&] { peirce_decompose(ut, Element{1, 0, 0}); }), ErrorCode::NotCentral);
  const auto [a, b] = peirce_decompose(z6, Element{3});
  EXPECT_EQ(a.order() * b.order(), 6u);
}

TEST(Decompose, CornerRing) {
  const FiniteRing z12 = cyclic_ring(12);
  const FiniteRing corner = corner_ring(z12, Element{4}, "4R");
  EXPECT_EQ(corner.order(), 3u);
  EXPECT_TRUE(find_isomorphism(corner, cyclic_ring(3)).has_value());
  const FiniteRing ut = upper_triangular_ring(cyclic_ring(2), 2);
  EXPECT_EQ(code_of([&] { corner_ring(ut, Element{1, 0, 0}, "eR"); }), ErrorCode::NotCentral);
  EXPECT_EQ(code_of([&] { corner_ring(z12, Element{2}, "2R"); }), ErrorCode::NotIdempotent);
}

TEST(Decompose, LeavesOfKnownCases) {
  struct Case {
    FiniteRing ring;
    std::vector<std::uint64_t> leaves;
  };
  const std::vector<Case> cases = {
      {cyclic_ring(6), {2, 3}},
      {direct_sum(direct_sum(cyclic_ring(2), cyclic_ring(2)), cyclic_ring(3)), {2, 2, 3}},
      {matrix_ring(cyclic_ring(2), 2).ring, {16}},
      {cyclic_ring(12), {4, 3}},
  };
  for (const Case& c : cases) {
    const DecompositionTree tree = indecomposable_components(c.ring);
    std::vector<std::uint64_t> orders;
    for (const FiniteRing& leaf : tree.leaves()) {
      orders.push_back(leaf.order());
      EXPECT_TRUE(is_prime_power(characteristic(leaf))) << leaf.name();
      // no nontrivial central idempotent survives in a leaf
      for (const Element& e : idempotents(leaf)) {
        if (is_central(leaf, e)) EXPECT_TRUE(e.is_zero() || e == leaf.unity());
      }
    }
    EXPECT_EQ(orders, c.leaves) << c.ring.name();
    const auto iso = find_isomorphism(reassemble(tree), c.ring);
    ASSERT_TRUE(iso.has_value()) << c.ring.name();
    EXPECT_TRUE(is_ring_isomorphism(reassemble(tree), c.ring, *iso));
  }
}

TEST(Decompose, Factorize) {
  using PF = std::vector<std::pair<std::uint64_t, std::uint32_t>>;
  EXPECT_EQ(factorize(360), (PF{{2, 3}, {3, 2}, {5, 1}}));
  EXPECT_EQ(factorize(1), PF{});
  EXPECT_EQ(factorize(97), (PF{{97, 1}}));
}
