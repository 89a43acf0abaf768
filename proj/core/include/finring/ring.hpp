#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "finring/element.hpp"
#include "finring/error.hpp"

namespace finring {

// Hard cap on the order of any ring that is scanned element by element.
inline constexpr std::uint64_t kScanLimit = 4096;
// Default bound for the isomorphism search.
inline constexpr std::uint64_t kIsomorphismLimit = 64;

// A finite unital ring given by structure constants. The additive group is
// Z_{d_0} x ... x Z_{d_{k-1}} with generators g_i, and products extend
// bilinearly from the generator products g_i * g_j. Immutable once built;
// the only way to obtain one is make_ring, which validates the ring axioms.
class FiniteRing {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return orders_.size(); }
  std::span<const std::uint32_t> factor_orders() const noexcept {
    return orders_;
  }
  std::uint64_t order() const noexcept { return order_; }

  // g_i * g_j
  const Element& structure_constant(std::size_t i, std::size_t j) const {
    return table_[i * rank() + j];
  }
  const Element& unity() const noexcept { return unity_; }
  Element zero() const { return Element(rank()); }
  Element generator(std::size_t i) const;

  // Throws DimensionMismatch / OutOfRangeCoordinate unless x is a stored
  // element of this ring.
  void check_element(const Element& x) const;
  bool contains(const Element& x) const noexcept;
  // Builds an element, reducing every coordinate into range.
  Element reduce(std::span<const std::int64_t> coords) const;

  Element add(const Element& x, const Element& y) const;
  Element sub(const Element& x, const Element& y) const;
  Element neg(const Element& x) const;
  // m * x for any integer m.
  Element scale(std::int64_t m, const Element& x) const;
  Element mul(const Element& x, const Element& y) const;
  // x^n with n >= 1; x^0 is rejected with InvalidArgument.
  Element pow(const Element& x, std::uint64_t n) const;

  // Mixed-radix index in lexicographic coordinate order, first coordinate
  // most significant.
  std::uint64_t index_of(const Element& x) const noexcept;
  Element element_at(std::uint64_t index) const;

  // Smallest m >= 1 with m * x = 0.
  std::uint64_t additive_order(const Element& x) const;

  // Returns the same ring under a different label.
  FiniteRing renamed(std::string name) const;

 private:
  friend FiniteRing make_ring(std::vector<std::uint32_t>, std::vector<Element>,
                              Element, std::string);
  FiniteRing() = default;

  std::string name_;
  std::vector<std::uint32_t> orders_;
  std::vector<Element> table_;
  Element unity_;
  std::uint64_t order_ = 1;
};

// Validates and builds a ring. structure_constants is the k*k table of
// generator products in row-major order (entry i*k + j holds g_i * g_j).
//
// Errors: IllFormedTable on a dimension or range violation,
// NotWellDefined when d_i * (g_i g_j) != 0 or d_j * (g_i g_j) != 0,
// NotAssociative with the witness generator triple, UnityLawFails with the
// witness generator.
FiniteRing make_ring(std::vector<std::uint32_t> factor_orders,
                     std::vector<Element> structure_constants, Element unity,
                     std::string name);

// Stream of all elements in lexicographic coordinate order.
class ElementRange {
 public:
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using reference = const Element&;
    using pointer = const Element*;
    using iterator_category = std::forward_iterator_tag;

    iterator() = default;
    iterator(const FiniteRing* ring, Element current, std::uint64_t index)
        : ring_(ring), current_(current), index_(index) {}

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.index_ == b.index_;
    }

   private:
    const FiniteRing* ring_ = nullptr;
    Element current_;
    std::uint64_t index_ = 0;
  };

  explicit ElementRange(const FiniteRing& ring) : ring_(&ring) {}
  iterator begin() const { return {ring_, ring_->zero(), 0}; }
  iterator end() const { return {ring_, ring_->zero(), ring_->order()}; }

 private:
  const FiniteRing* ring_;
};

inline ElementRange elements(const FiniteRing& ring) {
  return ElementRange(ring);
}

// Throws SizeLimitExceeded if the ring is larger than `limit`.
void require_order_at_most(const FiniteRing& ring, std::uint64_t limit,
                           std::string_view what);

}  // namespace finring
