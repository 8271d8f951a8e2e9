#pragma once

#include <ostream>

namespace tqft2d {

enum class Orientation : bool { Plus, Minus };

constexpr Orientation operator-(Orientation o) noexcept {
  return o == Orientation::Plus ? Orientation::Minus : Orientation::Plus;
}

constexpr char to_char(Orientation o) noexcept {
  return o == Orientation::Plus ? '+' : '-';
}

inline std::ostream& operator<<(std::ostream& os, Orientation o) {
  return os << to_char(o);
}

}  // namespace tqft2d
