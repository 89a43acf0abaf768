#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Sorted (lexicographic) list of distinct elements of one ring.
using ElementSet = std::vector<Element>;

bool contains(const ElementSet& set, const Element& x);
bool is_subset(const ElementSet& a, const ElementSet& b);

// Tail/cycle decomposition of the power sequence x, x^2, x^3, ...
// With 1-based exponents, x^(tail + cycle + 1) = x^(tail + 1) and the
// powers x^(tail+1) ... x^(tail+cycle) form the cycle. The cycle contains
// exactly one idempotent, x^m for the multiple m of cycle_length in
// (tail_length, tail_length + cycle_length].
struct PowerCycle {
  Element element;
  std::uint64_t tail_length = 0;
  std::uint64_t cycle_length = 1;
  Element eventual_idempotent;
};

PowerCycle power_cycle(const FiniteRing& ring, const Element& x);

bool is_nilpotent(const FiniteRing& ring, const Element& x);
bool is_idempotent(const FiniteRing& ring, const Element& x);

struct UnitTest {
  bool is_unit = false;
  std::optional<Element> inverse;
};
UnitTest is_unit(const FiniteRing& ring, const Element& x);

// Exhaustive scans; all throw SizeLimitExceeded above kScanLimit.
ElementSet nilpotents(const FiniteRing& ring);
ElementSet idempotents(const FiniteRing& ring);
ElementSet units(const FiniteRing& ring);
ElementSet center(const FiniteRing& ring);
ElementSet commutators(const FiniteRing& ring);

bool is_central(const FiniteRing& ring, const Element& x);
Element commutator(const FiniteRing& ring, const Element& x,
                   const Element& y);

// Two-sided ideal given by its full member set.
struct Ideal {
  ElementSet members;

  std::uint64_t size() const noexcept { return members.size(); }
  bool contains(const Element& x) const { return finring::contains(members, x); }
};

// Smallest two-sided ideal containing `generators`.
Ideal ideal_generated(const FiniteRing& ring, const ElementSet& generators);
Ideal commutator_ideal(const FiniteRing& ring);

// Checks the ideal axioms; throws NotAnIdeal naming the violated axiom,
// with the offending elements as witness.
Ideal make_ideal(const FiniteRing& ring, ElementSet members);

// R/I re-emitted in structure-constant form over the transversal of
// lexicographically least coset representatives.
struct Quotient {
  FiniteRing ring;
  // Coset representatives, one per element of `ring`, indexed by
  // ring.index_of(image).
  std::vector<Element> representatives;
  // Projection R -> R/I, indexed by the parent's element index.
  std::vector<Element> projection;

  const Element& project(const FiniteRing& parent, const Element& x) const {
    return projection[parent.index_of(x)];
  }
};

Quotient quotient(const FiniteRing& ring, const Ideal& ideal);

bool is_commutative(const FiniteRing& ring);
bool is_field(const FiniteRing& ring);
// Additive order of the unity.
std::uint64_t characteristic(const FiniteRing& ring);

struct StructureReport {
  std::uint64_t order = 0;
  ElementSet nilpotents;
  ElementSet center;
  ElementSet idempotents;
  ElementSet units;
  ElementSet commutators;
  Ideal commutator_ideal;
  std::uint64_t characteristic = 0;
  bool is_commutative = false;
  bool nilpotents_central = false;
};

StructureReport structure_report(const FiniteRing& ring);

}  // namespace finring
