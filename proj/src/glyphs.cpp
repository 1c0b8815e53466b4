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

#include "aga/glyphs.hpp"

#include <stdexcept>

namespace aga {

namespace {

// Each letter as five rows of five cells, 'X' = set pixel. The glyphs are
// the interiors of the 7x7 letter frames (one empty border cell all around).
constexpr const char* kLetterArt[26] = {
    // A
    "XXXX."
    "X..X."
    "X..X."
    "XXXX."
    "X..X.",
    // B
    "XXX.."
    "X..X."
    "XXX.."
    "X..X."
    "XXX..",
    // C
    "XXXX."
    "X...."
    "X...."
    "X...."
    "XXXX.",
    // D
    "XXX.."
    "X..X."
    "X..X."
    "X..X."
    "XXX..",
    // E
    "XXXX."
    "X...."
    "XXX.."
    "X...."
    "XXXX.",
    // F
    "XXXX."
    "X...."
    "XXX.."
    "X...."
    "X....",
    // G
    ".XXX."
    "X...."
    "X.XX."
    "X..X."
    ".XXX.",
    // H
    "X..X."
    "X..X."
    "XXXX."
    "X..X."
    "X..X.",
    // I
    "X...."
    "X...."
    "X...."
    "X...."
    "X....",
    // J
    ".XXX."
    "...X."
    "...X."
    "X..X."
    ".XX..",
    // K
    "X..X."
    "X.X.."
    "XX..."
    "X.X.."
    "X..X.",
    // L
    "X...."
    "X...."
    "X...."
    "X...."
    "XXXX.",
    // M
    "X...X"
    "XX.XX"
    "X.X.X"
    "X...X"
    "X...X",
    // N
    "X...X"
    "XX..X"
    "X.X.X"
    "X..XX"
    "X...X",
    // O
    ".XXX."
    "X...X"
    "X...X"
    "X...X"
    ".XXX.",
    // P
    "XXX.."
    "X..X."
    "XXX.."
    "X...."
    "X....",
    // Q
    ".XXX."
    "X...X"
    "X.X.X"
    "X..X."
    ".XX.X",
    // R
    "XXX.."
    "X..X."
    "XXX.."
    "X.X.."
    "X..X.",
    // S
    "XXXX."
    "X...."
    "XXXX."
    "...X."
    "XXXX.",
    // T
    "XXXXX"
    "..X.."
    "..X.."
    "..X.."
    "..X..",
    // U
    "X...X"
    "X...X"
    "X...X"
    "X...X"
    ".XXX.",
    // V
    "X...X"
    "X...X"
    "X...X"
    ".X.X."
    "..X..",
    // W
    "X...X"
    "X...X"
    "X.X.X"
    "XX.XX"
    "X...X",
    // X
    "X...X"
    ".X.X."
    "..X.."
    ".X.X."
    "X...X",
    // Y
    "X...X"
    ".X.X."
    "..X.."
    ".X..."
    "X....",
    // Z
    "XXXX."
    "...X."
    ".XX.."
    "X...."
    "XXXX.",
};

Glyph parse_glyph(char letter, const char* art) {
  Glyph g;
  g.letter = letter;
  for (int row = 0; row < 5; ++row) {
    std::uint8_t bits = 0;
    for (int col = 0; col < 5; ++col) {
      if (art[row * 5 + col] == 'X') bits |= static_cast<std::uint8_t>(1u << col);
    }
    g.rows[row] = bits;
  }
  return g;
}

std::array<Glyph, 26> build_alphabet() {
  std::array<Glyph, 26> out;
  for (int i = 0; i < 26; ++i)
    out[i] = parse_glyph(static_cast<char>('A' + i), kLetterArt[i]);
  return out;
}

}  // namespace

int Glyph::bbox_first_col() const {
  std::uint8_t any = 0;
  for (auto r : rows) any |= r;
  for (int col = 0; col < 5; ++col)
    if ((any >> col) & 1u) return col;
  return 0;
}

int Glyph::bbox_last_col() const {
  std::uint8_t any = 0;
  for (auto r : rows) any |= r;
  for (int col = 4; col >= 0; --col)
    if ((any >> col) & 1u) return col;
  return 0;
}

std::string Glyph::id() const {
  std::string s(1, letter);
  if (color > 0) s += std::to_string(color);
  return s;
}

const std::array<Glyph, 26>& full_alphabet() {
  static const std::array<Glyph, 26> alphabet = build_alphabet();
  return alphabet;
}

const std::vector<Glyph>& reduced_alphabet() {
  static const std::vector<Glyph> reduced = [] {
    std::vector<Glyph> out;
    for (char c : {'F', 'G', 'J', 'L', 'N', 'P', 'Q', 'R', 'S', 'Y', 'Z'})
      out.push_back(glyph_for(c));
    return out;
  }();
  return reduced;
}

const Glyph& glyph_for(char letter) {
  if (letter < 'A' || letter > 'Z')
    throw std::invalid_argument("glyph_for: letter out of range");
  return full_alphabet()[letter - 'A'];
}

}  // namespace aga
