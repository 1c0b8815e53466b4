// Copyright 2026 The AGA Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AGA_GLYPHS_HPP
#define AGA_GLYPHS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace aga {

// A letter glyph on a 5x5 grid (rows x columns), optionally carrying a color
// index for colored-alphabet worlds. Row bit x corresponds to column x.
struct Glyph {
  char letter = '?';
  int color = 0;
  std::array<std::uint8_t, 5> rows{};  // 5 bits used per row

  bool pixel(int col, int row) const { return (rows[row] >> col) & 1u; }

  bool empty() const {
    for (auto r : rows)
      if (r) return false;
    return true;
  }

  // Horizontal bounding box [first, last] of set columns.
  int bbox_first_col() const;
  int bbox_last_col() const;
  int bbox_width() const { return bbox_last_col() - bbox_first_col() + 1; }

  std::string id() const;

  bool operator==(const Glyph&) const = default;
};

// The 26-letter alphabet of the synthetic worlds.
const std::array<Glyph, 26>& full_alphabet();

// The 11 letters without axial symmetry: F, G, J, L, N, P, Q, R, S, Y, Z.
const std::vector<Glyph>& reduced_alphabet();

// Lookup by letter, throws std::invalid_argument for anything outside A..Z.
const Glyph& glyph_for(char letter);

}  // namespace aga

#endif  // AGA_GLYPHS_HPP
