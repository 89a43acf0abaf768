#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "finring/ring.hpp"

namespace finring {

// A ring handed over as an explicit carrier {0, ..., size-1} with
// operations on point indices. Used for corner rings eR and for quotients,
// which are both computed pointwise before being re-emitted in
// structure-constant form.
struct ExplicitRing {
  std::size_t size = 0;
  std::function<std::size_t(std::size_t, std::size_t)> add;
  std::function<std::size_t(std::size_t, std::size_t)> mul;
  std::size_t zero = 0;
  std::size_t one = 0;
};

struct Presentation {
  FiniteRing ring;
  // Point index -> element of `ring`.
  std::vector<Element> coordinates;
};

// Finds a cyclic decomposition of the additive group (repeatedly taking an
// element of maximal order modulo the current span and lifting it to an
// element of that same order), then reads off the structure constants.
// Throws whatever make_ring throws if the operations do not form a ring.
Presentation present(const ExplicitRing& source, std::string name);

}  // namespace finring
