#include "finring/structure.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "finring/presentation.hpp"

namespace finring {

namespace {

void require_scannable(const FiniteRing& ring, std::string_view what) {
  require_order_at_most(ring, kScanLimit, what);
}

template <typename Pred>
ElementSet scan(const FiniteRing& ring, std::string_view what, Pred pred) {
  require_scannable(ring, what);
  ElementSet out;
  for (const Element& x : elements(ring)) {
    if (pred(x)) out.push_back(x);
  }
  return out;
}

ElementSet from_mask(const FiniteRing& ring, const std::vector<bool>& mask) {
  ElementSet out;
  for (std::uint64_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(ring.element_at(i));
  }
  return out;
}

}  // namespace

bool contains(const ElementSet& set, const Element& x) {
  return std::binary_search(set.begin(), set.end(), x);
}

bool is_subset(const ElementSet& a, const ElementSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

PowerCycle power_cycle(const FiniteRing& ring, const Element& x) {
  ring.check_element(x);
  // exponent at which each power was first seen
  std::unordered_map<std::uint64_t, std::uint64_t> seen;
  std::vector<Element> powers;
  Element current = x;
  for (std::uint64_t e = 1;; ++e) {
    auto [it, inserted] = seen.emplace(ring.index_of(current), e);
    if (!inserted) {
      PowerCycle pc;
      pc.element = x;
      pc.tail_length = it->second - 1;
      pc.cycle_length = e - it->second;
      // the multiple of cycle_length in (tail, tail + cycle]
      const std::uint64_t m =
          (pc.tail_length / pc.cycle_length + 1) * pc.cycle_length;
      pc.eventual_idempotent = powers[m - 1];
      return pc;
    }
    powers.push_back(current);
    current = ring.mul(current, x);
  }
}

bool is_nilpotent(const FiniteRing& ring, const Element& x) {
  return power_cycle(ring, x).eventual_idempotent.is_zero();
}

bool is_idempotent(const FiniteRing& ring, const Element& x) {
  ring.check_element(x);
  return ring.mul(x, x) == x;
}

UnitTest is_unit(const FiniteRing& ring, const Element& x) {
  const PowerCycle pc = power_cycle(ring, x);
  if (pc.eventual_idempotent != ring.unity()) return {};
  // 1 lies on the cycle, so the sequence is purely periodic and
  // x^cycle_length = 1.
  if (pc.cycle_length == 1) return {true, ring.unity()};
  return {true, ring.pow(x, pc.cycle_length - 1)};
}

ElementSet nilpotents(const FiniteRing& ring) {
  return scan(ring, "nilpotents",
              [&](const Element& x) { return is_nilpotent(ring, x); });
}

ElementSet idempotents(const FiniteRing& ring) {
  return scan(ring, "idempotents",
              [&](const Element& x) { return is_idempotent(ring, x); });
}

ElementSet units(const FiniteRing& ring) {
  return scan(ring, "units",
              [&](const Element& x) { return is_unit(ring, x).is_unit; });
}

bool is_central(const FiniteRing& ring, const Element& x) {
  ring.check_element(x);
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    const Element g = ring.generator(i);
    if (ring.mul(x, g) != ring.mul(g, x)) return false;
  }
  return true;
}

ElementSet center(const FiniteRing& ring) {
  return scan(ring, "center",
              [&](const Element& x) { return is_central(ring, x); });
}

Element commutator(const FiniteRing& ring, const Element& x,
                   const Element& y) {
  return ring.sub(ring.mul(x, y), ring.mul(y, x));
}

ElementSet commutators(const FiniteRing& ring) {
  require_scannable(ring, "commutators");
  std::vector<bool> mask(ring.order(), false);
  for (const Element& x : elements(ring)) {
    for (const Element& y : elements(ring)) {
      if (y < x) continue;  // [y,x] = -[x,y]
      const Element c = commutator(ring, x, y);
      mask[ring.index_of(c)] = true;
      mask[ring.index_of(ring.neg(c))] = true;
    }
  }
  return from_mask(ring, mask);
}

Ideal ideal_generated(const FiniteRing& ring, const ElementSet& generators) {
  require_scannable(ring, "ideal_generated");
  std::vector<bool> mask(ring.order(), false);
  std::vector<Element> members;
  std::deque<Element> pending;
  auto push = [&](const Element& x) {
    const auto i = ring.index_of(x);
    if (!mask[i]) {
      mask[i] = true;
      pending.push_back(x);
    }
  };
  push(ring.zero());
  for (const Element& s : generators) {
    ring.check_element(s);
    push(s);
  }
  // Additive closure plus closure under multiplication by generators on
  // both sides already gives closure under multiplication by any element.
  while (!pending.empty()) {
    const Element a = pending.front();
    pending.pop_front();
    push(ring.neg(a));
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const Element g = ring.generator(i);
      push(ring.mul(g, a));
      push(ring.mul(a, g));
    }
    for (std::size_t m = 0; m < members.size(); ++m) push(ring.add(a, members[m]));
    members.push_back(a);
  }
  return {from_mask(ring, mask)};
}

Ideal commutator_ideal(const FiniteRing& ring) {
  return ideal_generated(ring, commutators(ring));
}

Ideal make_ideal(const FiniteRing& ring, ElementSet members) {
  require_scannable(ring, "make_ideal");
  for (const Element& x : members) ring.check_element(x);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  auto fail = [&](const std::string& axiom, std::vector<Element> witness) {
    throw RingError(ErrorCode::NotAnIdeal, axiom, std::move(witness));
  };
  if (!contains(members, ring.zero())) fail("does not contain 0", {});
  for (const Element& a : members) {
    if (!contains(members, ring.neg(a))) fail("not closed under negation", {a});
    for (const Element& b : members) {
      if (!contains(members, ring.add(a, b))) {
        fail("not closed under addition", {a, b});
      }
    }
    for (std::size_t i = 0; i < ring.rank(); ++i) {
      const Element g = ring.generator(i);
      if (!contains(members, ring.mul(g, a))) {
        fail("not closed under left multiplication", {g, a});
      }
      if (!contains(members, ring.mul(a, g))) {
        fail("not closed under right multiplication", {a, g});
      }
    }
  }
  return {std::move(members)};
}

Quotient quotient(const FiniteRing& ring, const Ideal& ideal) {
  const Ideal checked = make_ideal(ring, ideal.members);
  const std::uint64_t n = ring.order();

  // Walking elements in lexicographic order, the first unassigned element
  // of each coset is its least member.
  std::vector<std::size_t> coset_of(n, static_cast<std::size_t>(-1));
  std::vector<Element> reps;
  for (const Element& x : elements(ring)) {
    if (coset_of[ring.index_of(x)] != static_cast<std::size_t>(-1)) continue;
    const std::size_t id = reps.size();
    reps.push_back(x);
    for (const Element& i : checked.members) {
      coset_of[ring.index_of(ring.add(x, i))] = id;
    }
  }

  ExplicitRing cosets;
  cosets.size = reps.size();
  cosets.add = [&](std::size_t a, std::size_t b) {
    return coset_of[ring.index_of(ring.add(reps[a], reps[b]))];
  };
  cosets.mul = [&](std::size_t a, std::size_t b) {
    return coset_of[ring.index_of(ring.mul(reps[a], reps[b]))];
  };
  cosets.zero = coset_of[ring.index_of(ring.zero())];
  cosets.one = coset_of[ring.index_of(ring.unity())];

  Presentation p = present(cosets, ring.name() + "/I");
  Quotient q{std::move(p.ring), {}, {}};
  q.representatives.resize(reps.size());
  for (std::size_t c = 0; c < reps.size(); ++c) {
    q.representatives[q.ring.index_of(p.coordinates[c])] = reps[c];
  }
  q.projection.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    q.projection.push_back(p.coordinates[coset_of[i]]);
  }
  return q;
}

bool is_commutative(const FiniteRing& ring) {
  for (std::size_t i = 0; i < ring.rank(); ++i) {
    for (std::size_t j = i + 1; j < ring.rank(); ++j) {
      if (ring.structure_constant(i, j) != ring.structure_constant(j, i)) {
        return false;
      }
    }
  }
  return true;
}

bool is_field(const FiniteRing& ring) {
  if (ring.order() < 2 || !is_commutative(ring)) return false;
  require_scannable(ring, "is_field");
  for (const Element& x : elements(ring)) {
    if (!x.is_zero() && !is_unit(ring, x).is_unit) return false;
  }
  return true;
}

std::uint64_t characteristic(const FiniteRing& ring) {
  return ring.additive_order(ring.unity());
}

StructureReport structure_report(const FiniteRing& ring) {
  StructureReport r;
  r.order = ring.order();
  r.nilpotents = nilpotents(ring);
  r.center = center(ring);
  r.idempotents = idempotents(ring);
  r.units = units(ring);
  r.commutators = commutators(ring);
  r.commutator_ideal = ideal_generated(ring, r.commutators);
  r.characteristic = characteristic(ring);
  r.is_commutative = is_commutative(ring);
  r.nilpotents_central = is_subset(r.nilpotents, r.center);
  return r;
}

}  // namespace finring
