#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// Isomorphism-invariant data attached to a single element.
struct ElementFingerprint {
  std::uint64_t additive_order = 0;
  std::uint64_t power_tail = 0;
  std::uint64_t power_cycle = 0;
  bool idempotent = false;
  bool nilpotent = false;
  bool unit = false;
  bool central = false;

  friend auto operator<=>(const ElementFingerprint&,
                          const ElementFingerprint&) = default;
};

// Invariants compared before any search: order, characteristic, |N|, |C|,
// |idempotents|, |units| and the full multiset of element fingerprints.
struct RingFingerprint {
  std::uint64_t order = 0;
  std::uint64_t characteristic = 0;
  std::uint64_t nilpotents = 0;
  std::uint64_t center = 0;
  std::uint64_t idempotents = 0;
  std::uint64_t units = 0;
  std::vector<ElementFingerprint> profile;  // sorted

  friend auto operator<=>(const RingFingerprint&,
                          const RingFingerprint&) = default;
};

ElementFingerprint element_fingerprint(const FiniteRing& ring,
                                       const Element& x);
RingFingerprint ring_fingerprint(const FiniteRing& ring);

// A unital ring isomorphism, tabulated over the whole domain.
struct RingIsomorphism {
  std::vector<Element> images;  // indexed by the domain's element index

  const Element& operator()(const FiniteRing& domain, const Element& x) const {
    return images[domain.index_of(x)];
  }
};

// Backtracks over images of the generators of `from`, pruning every
// partial assignment whose span is not injective, mismatches element
// fingerprints or already violates a generator product. Throws
// SizeLimitExceeded when either ring is larger than `limit`.
std::optional<RingIsomorphism> find_isomorphism(
    const FiniteRing& from, const FiniteRing& to,
    std::uint64_t limit = kIsomorphismLimit);

// Exhaustive check that `map` is a bijective unital homomorphism.
bool is_ring_isomorphism(const FiniteRing& from, const FiniteRing& to,
                         const RingIsomorphism& map);

}  // namespace finring
