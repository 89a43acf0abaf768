#include "finring/decompose.hpp"

#include <optional>
#include <tuple>

#include "finring/constructors.hpp"
#include "finring/presentation.hpp"
#include "finring/structure.hpp"

namespace finring {

namespace {

// Modular inverse of a modulo q, gcd(a, q) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t q) {
  std::int64_t r0 = q, r1 = ((a % q) + q) % q;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t f = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - f * r1};
    std::tie(s0, s1) = std::pair{s1, s0 - f * s1};
  }
  return ((s0 % q) + q) % q;
}

std::optional<Element> least_nontrivial_central_idempotent(
    const FiniteRing& ring) {
  for (const Element& x : elements(ring)) {
    if (x.is_zero() || x == ring.unity()) continue;
    if (is_idempotent(ring, x) && is_central(ring, x)) return x;
  }
  return std::nullopt;
}

void collect_leaves(const DecompositionTree& node,
                    std::vector<FiniteRing>& out) {
  if (node.is_leaf()) {
    out.push_back(node.ring);
    return;
  }
  for (const auto& child : node.children) collect_leaves(child, out);
}

}  // namespace

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    std::uint32_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

FiniteRing corner_ring(const FiniteRing& ring, const Element& e,
                       std::string name) {
  require_order_at_most(ring, kScanLimit, "corner_ring");
  ring.check_element(e);
  if (!is_idempotent(ring, e)) {
    throw RingError(ErrorCode::NotIdempotent,
                    e.to_string() + " squared is " + ring.mul(e, e).to_string(),
                    {e});
  }
  if (!is_central(ring, e)) {
    throw RingError(ErrorCode::NotCentral, e.to_string() + " is not central",
                    {e});
  }
  std::vector<bool> mask(ring.order(), false);
  for (const Element& x : elements(ring)) mask[ring.index_of(ring.mul(x, e))] = true;
  std::vector<Element> members;
  std::vector<std::size_t> position(ring.order(), 0);
  for (std::uint64_t i = 0; i < ring.order(); ++i) {
    if (!mask[i]) continue;
    position[i] = members.size();
    members.push_back(ring.element_at(i));
  }

  ExplicitRing corner;
  corner.size = members.size();
  corner.add = [&](std::size_t a, std::size_t b) {
    return position[ring.index_of(ring.add(members[a], members[b]))];
  };
  corner.mul = [&](std::size_t a, std::size_t b) {
    return position[ring.index_of(ring.mul(members[a], members[b]))];
  };
  corner.zero = position[ring.index_of(ring.zero())];
  corner.one = position[ring.index_of(e)];
  return present(corner, std::move(name)).ring;
}

std::vector<CrtComponent> crt_decompose(const FiniteRing& ring) {
  const std::uint64_t m = characteristic(ring);
  const auto factors = factorize(m);
  if (factors.size() <= 1) {
    return {CrtComponent{m, ring.unity(), ring}};
  }
  std::vector<CrtComponent> out;
  for (const auto& [p, k] : factors) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) q *= p;
    const std::uint64_t cofactor = m / q;
    const auto v = inverse_mod(static_cast<std::int64_t>(cofactor % q),
                               static_cast<std::int64_t>(q));
    const auto multiplier =
        static_cast<std::int64_t>((static_cast<std::uint64_t>(v) * cofactor) % m);
    const Element e = ring.scale(multiplier, ring.unity());
    out.push_back({q, e,
                   corner_ring(ring, e, ring.name() + "_char" + std::to_string(q))});
  }
  return out;
}

std::pair<FiniteRing, FiniteRing> peirce_decompose(const FiniteRing& ring,
                                                   const Element& e) {
  ring.check_element(e);
  if (!is_idempotent(ring, e)) {
    throw RingError(ErrorCode::NotIdempotent,
                    e.to_string() + " squared is " + ring.mul(e, e).to_string(),
                    {e});
  }
  if (e.is_zero() || e == ring.unity()) {
    throw RingError(ErrorCode::TrivialIdempotent,
                    e.to_string() + " is a trivial idempotent", {e});
  }
  if (!is_central(ring, e)) {
    throw RingError(ErrorCode::NotCentral, e.to_string() + " is not central",
                    {e});
  }
  const Element complement = ring.sub(ring.unity(), e);
  return {corner_ring(ring, e, ring.name() + "_e"),
          corner_ring(ring, complement, ring.name() + "_1-e")};
}

std::vector<FiniteRing> DecompositionTree::leaves() const {
  std::vector<FiniteRing> out;
  collect_leaves(*this, out);
  return out;
}

DecompositionTree indecomposable_components(const FiniteRing& ring) {
  require_order_at_most(ring, kScanLimit, "indecomposable_components");
  DecompositionTree node{ring, {}, {}};

  auto parts = crt_decompose(ring);
  if (parts.size() > 1) {
    for (auto& part : parts) {
      node.tags.push_back("char=" + std::to_string(part.modulus));
      node.children.push_back(indecomposable_components(part.ring));
    }
    return node;
  }

  const auto e = least_nontrivial_central_idempotent(ring);
  if (!e) return node;
  auto [left, right] = peirce_decompose(ring, *e);
  node.tags.push_back("e=" + e->to_string());
  node.children.push_back(indecomposable_components(left));
  node.tags.push_back("1-e=" + ring.sub(ring.unity(), *e).to_string());
  node.children.push_back(indecomposable_components(right));
  return node;
}

FiniteRing reassemble(const DecompositionTree& tree) {
  const auto parts = tree.leaves();
  FiniteRing sum = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) sum = direct_sum(sum, parts[i]);
  return sum;
}

}  // namespace finring
