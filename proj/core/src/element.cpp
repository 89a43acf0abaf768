#include "finring/element.hpp"

#include "finring/error.hpp"

namespace finring {

Element::Element(std::initializer_list<value_type> coords)
    : Element(std::span<const value_type>(coords.begin(), coords.size())) {}

Element::Element(std::span<const value_type> coords) {
  if (coords.size() > kMaxFactors) {
    throw RingError(ErrorCode::IllFormedTable,
                    "element has " + std::to_string(coords.size()) +
                        " coordinates, at most " +
                        std::to_string(kMaxFactors) + " are supported");
  }
  std::copy(coords.begin(), coords.end(), coords_.begin());
  size_ = static_cast<std::uint8_t>(coords.size());
}

std::string Element::to_string() const {
  if (size_ == 1) return std::to_string(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string(coords_[i]);
  }
  out += ')';
  return out;
}

}  // namespace finring
