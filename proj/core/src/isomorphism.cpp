#include "finring/isomorphism.hpp"

#include <algorithm>

#include "finring/structure.hpp"

namespace finring {

ElementFingerprint element_fingerprint(const FiniteRing& ring,
                                       const Element& x) {
  const PowerCycle pc = power_cycle(ring, x);
  ElementFingerprint fp;
  fp.additive_order = ring.additive_order(x);
  fp.power_tail = pc.tail_length;
  fp.power_cycle = pc.cycle_length;
  fp.idempotent = ring.mul(x, x) == x;
  fp.nilpotent = pc.eventual_idempotent.is_zero();
  fp.unit = pc.eventual_idempotent == ring.unity();
  fp.central = is_central(ring, x);
  return fp;
}

namespace {

std::vector<ElementFingerprint> fingerprint_table(const FiniteRing& ring) {
  std::vector<ElementFingerprint> table;
  table.reserve(ring.order());
  for (const Element& x : elements(ring)) {
    table.push_back(element_fingerprint(ring, x));
  }
  return table;
}

RingFingerprint summarize(const FiniteRing& ring,
                          std::vector<ElementFingerprint> table) {
  RingFingerprint fp;
  fp.order = ring.order();
  fp.characteristic = characteristic(ring);
  for (const auto& e : table) {
    fp.nilpotents += e.nilpotent;
    fp.center += e.central;
    fp.idempotents += e.idempotent;
    fp.units += e.unit;
  }
  std::sort(table.begin(), table.end());
  fp.profile = std::move(table);
  return fp;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteRing& from, const FiniteRing& to,
                    std::vector<ElementFingerprint> from_fp,
                    std::vector<ElementFingerprint> to_fp)
      : from_(from),
        to_(to),
        from_fp_(std::move(from_fp)),
        to_fp_(std::move(to_fp)),
        image_(from.order(), kUnset),
        used_(to.order(), false) {}

  std::optional<RingIsomorphism> run() {
    const Element zero = from_.zero();
    image_[from_.index_of(zero)] = to_.index_of(to_.zero());
    used_[to_.index_of(to_.zero())] = true;
    span_.push_back(zero);
    if (!extend(0)) return std::nullopt;
    RingIsomorphism iso;
    iso.images.reserve(from_.order());
    for (std::uint64_t idx : image_) iso.images.push_back(to_.element_at(idx));
    return iso;
  }

 private:
  static constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  // `level` generators have been assigned and span_ lists their span.
  bool extend(std::size_t level) {
    if (level == from_.rank()) {
      return image_[from_.index_of(from_.unity())] ==
             to_.index_of(to_.unity());
    }
    const Element g = from_.generator(level);
    const ElementFingerprint& want = from_fp_[from_.index_of(g)];
    const std::uint32_t d = from_.factor_orders()[level];

    for (const Element& y : elements(to_)) {
      if (to_fp_[to_.index_of(y)] != want) continue;
      const std::size_t base = span_.size();
      if (assign(level, y, d) && products_hold(level) && extend(level + 1)) {
        return true;
      }
      undo(base);
    }
    return false;
  }

  // Extends the span by multiples of g_level mapped to multiples of y.
  bool assign(std::size_t level, const Element& y, std::uint32_t d) {
    const std::size_t base = span_.size();
    const Element g = from_.generator(level);
    Element step = g;
    Element step_image = y;
    for (std::uint32_t c = 1; c < d; ++c) {
      for (std::size_t s = 0; s < base; ++s) {
        const Element src = from_.add(span_[s], step);
        const Element dst =
            to_.add(to_.element_at(image_[from_.index_of(span_[s])]),
                    step_image);
        const std::uint64_t si = from_.index_of(src);
        const std::uint64_t di = to_.index_of(dst);
        if (used_[di] || from_fp_[si] != to_fp_[di]) return false;
        used_[di] = true;
        image_[si] = di;
        span_.push_back(src);
      }
      step = from_.add(step, g);
      step_image = to_.add(step_image, y);
    }
    // d * y must vanish for the additive map to be well defined.
    return step_image.is_zero();
  }

  void undo(std::size_t base) {
    for (std::size_t s = base; s < span_.size(); ++s) {
      const std::uint64_t si = from_.index_of(span_[s]);
      used_[image_[si]] = false;
      image_[si] = kUnset;
    }
    span_.resize(base);
  }

  Element image_of(const Element& x) const {
    return to_.element_at(image_[from_.index_of(x)]);
  }

  // Every generator product among g_0..g_level whose value is already
  // spanned; once all generators are placed this covers the whole table.
  bool products_hold(std::size_t level) const {
    for (std::size_t i = 0; i <= level; ++i) {
      for (std::size_t j = 0; j <= level; ++j) {
        const Element& p = from_.structure_constant(i, j);
        if (image_[from_.index_of(p)] == kUnset) continue;
        const Element lhs =
            to_.mul(image_of(from_.generator(i)), image_of(from_.generator(j)));
        if (lhs != image_of(p)) return false;
      }
    }
    return true;
  }

  const FiniteRing& from_;
  const FiniteRing& to_;
  std::vector<ElementFingerprint> from_fp_;
  std::vector<ElementFingerprint> to_fp_;
  std::vector<std::uint64_t> image_;
  std::vector<bool> used_;
  std::vector<Element> span_;
};

}  // namespace

RingFingerprint ring_fingerprint(const FiniteRing& ring) {
  require_order_at_most(ring, kScanLimit, "ring_fingerprint");
  return summarize(ring, fingerprint_table(ring));
}

std::optional<RingIsomorphism> find_isomorphism(const FiniteRing& from,
                                                const FiniteRing& to,
                                                std::uint64_t limit) {
  require_order_at_most(from, limit, "find_isomorphism");
  require_order_at_most(to, limit, "find_isomorphism");
  if (from.order() != to.order()) return std::nullopt;
  auto from_fp = fingerprint_table(from);
  auto to_fp = fingerprint_table(to);
  if (summarize(from, from_fp) != summarize(to, to_fp)) return std::nullopt;
  return IsomorphismSearch(from, to, std::move(from_fp), std::move(to_fp))
      .run();
}

bool is_ring_isomorphism(const FiniteRing& from, const FiniteRing& to,
                         const RingIsomorphism& map) {
  if (from.order() != to.order() || map.images.size() != from.order()) {
    return false;
  }
  std::vector<bool> hit(to.order(), false);
  for (const Element& y : map.images) {
    if (!to.contains(y) || hit[to.index_of(y)]) return false;
    hit[to.index_of(y)] = true;
  }
  if (map(from, from.unity()) != to.unity()) return false;
  for (const Element& x : elements(from)) {
    for (const Element& y : elements(from)) {
      if (map(from, from.add(x, y)) != to.add(map(from, x), map(from, y)) ||
          map(from, from.mul(x, y)) != to.mul(map(from, x), map(from, y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace finring
