#include "finring/ring.hpp"

#include <numeric>

namespace finring {

namespace {

// Orders are capped so that every intermediate x_i * y_j product fits in 64
// bits without further care.
constexpr std::uint64_t kMaxRingOrder = std::uint64_t{1} << 31;

std::string generator_name(std::size_t i) { return "g" + std::to_string(i); }

}  // namespace

Element FiniteRing::generator(std::size_t i) const {
  if (i >= rank()) {
    throw RingError(ErrorCode::InvalidArgument,
                    "generator index " + std::to_string(i) + " out of range");
  }
  Element g(rank());
  g[i] = 1;
  return g;
}

bool FiniteRing::contains(const Element& x) const noexcept {
  if (x.size() != rank()) return false;
  for (std::size_t t = 0; t < rank(); ++t) {
    if (x[t] >= orders_[t]) return false;
  }
  return true;
}

void FiniteRing::check_element(const Element& x) const {
  if (x.size() != rank()) {
    throw RingError(ErrorCode::DimensionMismatch,
                    "element " + x.to_string() + " has " +
                        std::to_string(x.size()) + " coordinates, ring " +
                        name_ + " has " + std::to_string(rank()),
                    {x});
  }
  for (std::size_t t = 0; t < rank(); ++t) {
    if (x[t] >= orders_[t]) {
      throw RingError(ErrorCode::OutOfRangeCoordinate,
                      "coordinate " + std::to_string(t) + " of " +
                          x.to_string() + " is not below " +
                          std::to_string(orders_[t]),
                      {x});
    }
  }
}

namespace {

// Arithmetic checks only the coordinate count; full range checks would
// dominate the scan loops.
void require_rank(const FiniteRing& ring, const Element& x) {
  if (x.size() != ring.rank()) [[unlikely]] {
    throw RingError(ErrorCode::DimensionMismatch,
                    "element " + x.to_string() + " has " +
                        std::to_string(x.size()) + " coordinates, ring " +
                        ring.name() + " has " + std::to_string(ring.rank()),
                    {x});
  }
}

}  // namespace

Element FiniteRing::reduce(std::span<const std::int64_t> coords) const {
  if (coords.size() != rank()) {
    throw RingError(ErrorCode::DimensionMismatch,
                    "expected " + std::to_string(rank()) + " coordinates");
  }
  Element x(rank());
  for (std::size_t t = 0; t < rank(); ++t) {
    const auto d = static_cast<std::int64_t>(orders_[t]);
    x[t] = static_cast<std::uint32_t>(((coords[t] % d) + d) % d);
  }
  return x;
}

Element FiniteRing::add(const Element& x, const Element& y) const {
  require_rank(*this, x);
  require_rank(*this, y);
  Element z(rank());
  for (std::size_t t = 0; t < rank(); ++t) {
    const std::uint64_t s = std::uint64_t{x[t]} + y[t];
    z[t] = static_cast<std::uint32_t>(s >= orders_[t] ? s - orders_[t] : s);
  }
  return z;
}

Element FiniteRing::neg(const Element& x) const {
  require_rank(*this, x);
  Element z(rank());
  for (std::size_t t = 0; t < rank(); ++t) {
    z[t] = x[t] == 0 ? 0 : orders_[t] - x[t];
  }
  return z;
}

Element FiniteRing::sub(const Element& x, const Element& y) const {
  return add(x, neg(y));
}

Element FiniteRing::scale(std::int64_t m, const Element& x) const {
  require_rank(*this, x);
  Element z(rank());
  for (std::size_t t = 0; t < rank(); ++t) {
    const auto d = static_cast<std::int64_t>(orders_[t]);
    const auto mm = static_cast<std::uint64_t>(((m % d) + d) % d);
    z[t] = static_cast<std::uint32_t>((mm * x[t]) % orders_[t]);
  }
  return z;
}

Element FiniteRing::mul(const Element& x, const Element& y) const {
  require_rank(*this, x);
  require_rank(*this, y);
  const std::size_t k = rank();
  std::array<std::uint64_t, kMaxFactors> acc{};
  for (std::size_t i = 0; i < k; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (y[j] == 0) continue;
      const std::uint64_t c = std::uint64_t{x[i]} * y[j];
      const Element& p = table_[i * k + j];
      for (std::size_t t = 0; t < k; ++t) {
        if (p[t] == 0) continue;
        acc[t] = (acc[t] + (c % orders_[t]) * p[t]) % orders_[t];
      }
    }
  }
  Element z(k);
  for (std::size_t t = 0; t < k; ++t) z[t] = static_cast<std::uint32_t>(acc[t]);
  return z;
}

Element FiniteRing::pow(const Element& x, std::uint64_t n) const {
  if (n == 0) {
    throw RingError(ErrorCode::InvalidArgument,
                    "exponents start at 1; write the unity explicitly");
  }
  Element result = x;
  Element base = x;
  --n;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

std::uint64_t FiniteRing::index_of(const Element& x) const noexcept {
  std::uint64_t idx = 0;
  for (std::size_t t = 0; t < rank(); ++t) idx = idx * orders_[t] + x[t];
  return idx;
}

Element FiniteRing::element_at(std::uint64_t index) const {
  Element x(rank());
  for (std::size_t t = rank(); t-- > 0;) {
    x[t] = static_cast<std::uint32_t>(index % orders_[t]);
    index /= orders_[t];
  }
  return x;
}

std::uint64_t FiniteRing::additive_order(const Element& x) const {
  std::uint64_t result = 1;
  for (std::size_t t = 0; t < rank(); ++t) {
    if (x[t] == 0) continue;
    const std::uint64_t ord = orders_[t] / std::gcd<std::uint64_t>(orders_[t], x[t]);
    result = std::lcm(result, ord);
  }
  return result;
}

FiniteRing FiniteRing::renamed(std::string name) const {
  FiniteRing copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FiniteRing make_ring(std::vector<std::uint32_t> factor_orders,
                     std::vector<Element> structure_constants, Element unity,
                     std::string name) {
  const std::size_t k = factor_orders.size();
  if (k > kMaxFactors) {
    throw RingError(ErrorCode::IllFormedTable,
                    std::to_string(k) + " cyclic factors, at most " +
                        std::to_string(kMaxFactors) + " are supported");
  }
  std::uint64_t order = 1;
  for (std::uint32_t d : factor_orders) {
    if (d < 2) {
      throw RingError(ErrorCode::IllFormedTable,
                      "factor order " + std::to_string(d) + " is below 2");
    }
    order *= d;
    if (order > kMaxRingOrder) {
      throw RingError(ErrorCode::IllFormedTable, "ring order exceeds 2^31");
    }
  }
  if (structure_constants.size() != k * k) {
    throw RingError(ErrorCode::IllFormedTable,
                    "expected " + std::to_string(k * k) +
                        " generator products, got " +
                        std::to_string(structure_constants.size()));
  }

  FiniteRing ring;
  ring.name_ = std::move(name);
  ring.orders_ = std::move(factor_orders);
  ring.order_ = order;

  auto in_range = [&](const Element& x, const std::string& what) {
    if (x.size() != k) {
      throw RingError(ErrorCode::IllFormedTable,
                      what + " has " + std::to_string(x.size()) +
                          " coordinates, expected " + std::to_string(k));
    }
    for (std::size_t t = 0; t < k; ++t) {
      if (x[t] >= ring.orders_[t]) {
        throw RingError(ErrorCode::IllFormedTable,
                        what + " coordinate " + std::to_string(t) + " = " +
                            std::to_string(x[t]) + " is out of range");
      }
    }
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      in_range(structure_constants[i * k + j],
               "product " + generator_name(i) + "*" + generator_name(j));
    }
  }
  in_range(unity, "unity");
  ring.table_ = std::move(structure_constants);
  ring.unity_ = unity;

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element& p = ring.table_[i * k + j];
      if (!ring.scale(ring.orders_[i], p).is_zero() ||
          !ring.scale(ring.orders_[j], p).is_zero()) {
        throw RingError(ErrorCode::NotWellDefined,
                        "product " + generator_name(i) + "*" +
                            generator_name(j) + " = " + p.to_string() +
                            " is not annihilated by the generator orders",
                        {ring.generator(i), ring.generator(j)});
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        const Element left = ring.mul(ring.table_[i * k + j], ring.generator(l));
        const Element right = ring.mul(ring.generator(i), ring.table_[j * k + l]);
        if (left != right) {
          throw RingError(ErrorCode::NotAssociative,
                          "(" + generator_name(i) + generator_name(j) + ")" +
                              generator_name(l) + " = " + left.to_string() +
                              " but " + generator_name(i) + "(" +
                              generator_name(j) + generator_name(l) + ") = " +
                              right.to_string(),
                          {ring.generator(i), ring.generator(j),
                           ring.generator(l)});
        }
      }
    }
  }

  for (std::size_t i = 0; i < k; ++i) {
    const Element g = ring.generator(i);
    if (ring.mul(unity, g) != g || ring.mul(g, unity) != g) {
      throw RingError(ErrorCode::UnityLawFails,
                      "unity " + unity.to_string() +
                          " does not act as identity on " + generator_name(i),
                      {g});
    }
  }
  return ring;
}

ElementRange::iterator& ElementRange::iterator::operator++() {
  ++index_;
  const auto orders = ring_->factor_orders();
  for (std::size_t t = orders.size(); t-- > 0;) {
    if (++current_[t] < orders[t]) return *this;
    current_[t] = 0;
  }
  return *this;
}

void require_order_at_most(const FiniteRing& ring, std::uint64_t limit,
                           std::string_view what) {
  if (ring.order() > limit) {
    throw RingError(ErrorCode::SizeLimitExceeded,
                    std::string(what) + ": ring " + ring.name() + " has order " +
                        std::to_string(ring.order()) + ", limit is " +
                        std::to_string(limit));
  }
}

}  // namespace finring
