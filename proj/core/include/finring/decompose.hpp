#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// eR for a central idempotent e, re-emitted in structure-constant form
// with unity e. Throws NotIdempotent or NotCentral.
FiniteRing corner_ring(const FiniteRing& ring, const Element& e,
                       std::string name);

struct CrtComponent {
  std::uint64_t modulus = 0;  // p^k, annihilates `ring`
  Element idempotent;         // central idempotent of the parent
  FiniteRing ring;
};

// Splits along the prime-power factorization of the characteristic. The
// idempotent for the part with modulus q is v * (m/q) * 1, where
// v * (m/q) = 1 (mod q). A single component (the ring itself) is returned
// when the characteristic is already a prime power.
std::vector<CrtComponent> crt_decompose(const FiniteRing& ring);

// (Re, R(1-e)) for a central idempotent e not in {0, 1}.
// Throws NotIdempotent, TrivialIdempotent, NotCentral.
std::pair<FiniteRing, FiniteRing> peirce_decompose(const FiniteRing& ring,
                                                   const Element& e);

struct DecompositionTree {
  FiniteRing ring;
  // Parallel to `children`: "char=<q>" for CRT parts, "e=<coords>" and
  // "1-e=<coords>" for Peirce parts, coordinates taken in `ring`.
  std::vector<std::string> tags;
  std::vector<DecompositionTree> children;

  bool is_leaf() const noexcept { return children.empty(); }
  std::vector<FiniteRing> leaves() const;
};

// CRT splitting first, then the lexicographically least nontrivial central
// idempotent, until no node has one. Throws SizeLimitExceeded above the
// scan limit.
DecompositionTree indecomposable_components(const FiniteRing& ring);

// Direct sum of the leaves, left to right.
FiniteRing reassemble(const DecompositionTree& tree);

// Factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

}  // namespace finring
