#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>

namespace finring {

// Upper bound on the number of cyclic factors of a ring's additive group.
// Every factor has order >= 2, so this admits all rings up to order 2^16.
inline constexpr std::size_t kMaxFactors = 16;

// Coordinate vector over the additive cyclic factors of some ring. Elements
// carry no reference to their ring; operations take the ring explicitly.
class Element {
 public:
  using value_type = std::uint32_t;

  Element() = default;
  explicit Element(std::size_t rank) : size_(static_cast<std::uint8_t>(rank)) {}
  Element(std::initializer_list<value_type> coords);
  explicit Element(std::span<const value_type> coords);

  std::size_t size() const noexcept { return size_; }
  value_type operator[](std::size_t i) const noexcept { return coords_[i]; }
  value_type& operator[](std::size_t i) noexcept { return coords_[i]; }

  std::span<const value_type> coords() const noexcept {
    return {coords_.data(), size_};
  }
  bool is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.begin() + size_,
                       [](value_type c) { return c == 0; });
  }

  // Lexicographic in the coordinates; unused slots are always zero.
  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;

  // "(c_0,c_1,...)", or "c_0" for single-factor rings.
  std::string to_string() const;

 private:
  std::array<value_type, kMaxFactors> coords_{};
  std::uint8_t size_ = 0;
};

}  // namespace finring
