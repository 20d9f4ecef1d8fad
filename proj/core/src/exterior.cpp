#include "g2forge/exterior.hpp"

#include <array>

namespace g2forge {

namespace {

std::array<std::vector<Blade>, kDim + 1> build_grade_tables() {
  std::array<std::vector<Blade>, kDim + 1> t;
  for (unsigned m = 0; m <= kFullMask; ++m) t[std::popcount(m)].push_back(Blade{static_cast<std::uint8_t>(m)});
  return t;
}

std::array<std::size_t, 128> build_positions() {
  std::array<std::size_t, 128> pos{};
  std::array<std::size_t, kDim + 1> next{};
  for (unsigned m = 0; m <= kFullMask; ++m) pos[m] = next[std::popcount(m)]++;
  return pos;
}

}  // namespace

const std::vector<Blade>& blades_of_grade(int grade) {
  static const auto tables = build_grade_tables();
  if (grade < 0 || grade > kDim) throw GradeError("grade out of range");
  return tables[grade];
}

std::size_t blade_position(Blade b) {
  static const auto pos = build_positions();
  return pos[b.mask & kFullMask];
}

std::pair<std::uint8_t, int> blade_from_indices(const std::vector<int>& indices) {
  std::uint8_t mask = 0;
  int sign = 1;
  for (int idx : indices) {
    if (idx < 1 || idx > kDim) throw GradeError("index out of range 1..7");
    const auto bit = static_cast<std::uint8_t>(1U << (idx - 1));
    if (mask & bit) return {0, 0};
    // Moving e^idx past the already placed larger indices.
    if (std::popcount(static_cast<unsigned>(mask & ~((bit << 1) - 1U))) & 1) sign = -sign;
    mask |= bit;
  }
  return {mask, sign};
}

std::pair<std::uint8_t, int> blade_from_indices(std::initializer_list<int> indices) {
  return blade_from_indices(std::vector<int>(indices));
}

std::string blade_name(Blade b) {
  if (b.mask == 0) return "1";
  std::string s = "e";
  for (int k : b.indices()) s += static_cast<char>('0' + k);
  return s;
}

}  // namespace g2forge
