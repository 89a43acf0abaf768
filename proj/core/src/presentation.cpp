#include "finring/presentation.hpp"

#include <optional>

namespace finring {

namespace {

struct GroupOps {
  const ExplicitRing& src;

  std::size_t times(std::uint64_t c, std::size_t a) const {
    std::size_t acc = src.zero;
    for (std::uint64_t i = 0; i < c; ++i) acc = src.add(acc, a);
    return acc;
  }
  std::uint64_t order(std::size_t a) const {
    std::uint64_t m = 1;
    for (std::size_t cur = a; cur != src.zero; cur = src.add(cur, a)) ++m;
    return m;
  }
  std::size_t neg(std::size_t a) const { return times(order(a) - 1, a); }
};

}  // namespace

Presentation present(const ExplicitRing& source, std::string name) {
  const GroupOps ops{source};
  const std::size_t n = source.size;

  std::vector<bool> in_span(n, false);
  std::vector<std::size_t> span{source.zero};
  in_span[source.zero] = true;

  std::vector<std::size_t> basis;
  std::vector<std::uint32_t> basis_orders;

  while (span.size() < n) {
    // Order of each point modulo the current span.
    std::uint64_t best = 0;
    std::vector<std::size_t> candidates;
    for (std::size_t x = 0; x < n; ++x) {
      if (in_span[x]) continue;
      std::uint64_t m = 1;
      for (std::size_t cur = x; !in_span[cur]; cur = source.add(cur, x)) ++m;
      if (m > best) {
        best = m;
        candidates.clear();
      }
      if (m == best) candidates.push_back(x);
    }

    std::optional<std::size_t> lifted;
    for (std::size_t x : candidates) {
      for (std::size_t s : span) {
        const std::size_t y = source.add(x, ops.neg(s));
        if (ops.order(y) == best) {
          lifted = y;
          break;
        }
      }
      if (lifted) break;
    }
    if (!lifted) {
      throw RingError(ErrorCode::InvalidArgument,
                      "additive structure of " + name +
                          " admits no cyclic decomposition; not a group");
    }

    std::vector<std::size_t> grown;
    grown.reserve(span.size() * best);
    std::size_t multiple = source.zero;
    for (std::uint64_t c = 0; c < best; ++c) {
      for (std::size_t s : span) {
        const std::size_t p = source.add(s, multiple);
        if (c > 0 && in_span[p]) {
          throw RingError(ErrorCode::InvalidArgument,
                          "cyclic decomposition of " + name +
                              " is not direct; not a group");
        }
        in_span[p] = true;
        grown.push_back(p);
      }
      multiple = source.add(multiple, *lifted);
    }
    span = std::move(grown);
    basis.push_back(*lifted);
    basis_orders.push_back(static_cast<std::uint32_t>(best));
  }

  const std::size_t k = basis.size();
  std::vector<Element> coordinates(n, Element(k));
  Element coeffs(k);
  auto walk = [&](auto&& self, std::size_t t, std::size_t point) -> void {
    if (t == k) {
      coordinates[point] = coeffs;
      return;
    }
    for (std::uint32_t c = 0; c < basis_orders[t]; ++c) {
      coeffs[t] = c;
      self(self, t + 1, point);
      point = source.add(point, basis[t]);
    }
    coeffs[t] = 0;
  };
  walk(walk, 0, source.zero);

  std::vector<Element> table;
  table.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table.push_back(coordinates[source.mul(basis[i], basis[j])]);
    }
  }
  Element unity = coordinates[source.one];
  return {make_ring(std::move(basis_orders), std::move(table), unity,
                    std::move(name)),
          std::move(coordinates)};
}

}  // namespace finring
