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

#include "aga/worlds.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "aga/random.hpp"

namespace aga {

std::string to_string(WorldName name) {
  switch (name) {
    case WorldName::T: return "T";
    case WorldName::TR1: return "TR1";
    case WorldName::TR2: return "TR2";
    case WorldName::TC: return "TC";
    case WorldName::TL: return "TL";
    case WorldName::Custom: return "Custom";
  }
  return "?";
}

std::optional<WorldName> world_name_from_string(const std::string& s) {
  if (s == "T") return WorldName::T;
  if (s == "TR1") return WorldName::TR1;
  if (s == "TR2") return WorldName::TR2;
  if (s == "TC") return WorldName::TC;
  if (s == "TL") return WorldName::TL;
  if (s == "Custom") return WorldName::Custom;
  return std::nullopt;
}

WorldSpec WorldSpec::named(WorldName name) {
  WorldSpec spec;
  spec.name = name;
  switch (name) {
    case WorldName::T:
      spec.width = 20;
      spec.height = 10;
      spec.alphabet.assign(full_alphabet().begin(), full_alphabet().end());
      spec.letters_per_observation = 2;
      spec.transforms = {Transform::GlobalTranslation};
      break;
    case WorldName::TR1:
      spec.width = 15;
      spec.height = 15;
      spec.alphabet.assign(full_alphabet().begin(), full_alphabet().end());
      spec.letters_per_observation = 2;
      spec.transforms = {Transform::GlobalTranslation, Transform::Rotation90Steps};
      break;
    case WorldName::TR2:
      spec.width = 15;
      spec.height = 15;
      spec.alphabet = reduced_alphabet();
      spec.letters_per_observation = 2;
      spec.transforms = {Transform::GlobalTranslation, Transform::Rotation90Steps};
      break;
    case WorldName::TC: {
      spec.width = 13;
      spec.height = 7;
      spec.colors = 3;
      // Alphabet of 33 colored glyphs: every reduced letter in each color.
      for (int color = 0; color < 3; ++color) {
        for (const Glyph& g : reduced_alphabet()) {
          Glyph colored = g;
          colored.color = color;
          spec.alphabet.push_back(colored);
        }
      }
      spec.letters_per_observation = 2;
      spec.transforms = {Transform::GlobalTranslation, Transform::ColorPermutation};
      break;
    }
    case WorldName::TL:
      spec.width = 20;
      spec.height = 20;
      spec.alphabet.assign(full_alphabet().begin(), full_alphabet().end());
      spec.letters_per_observation = 3;
      spec.transforms = {Transform::GlobalTranslation, Transform::Rotation90Steps,
                         Transform::IndividualVerticalShift};
      break;
    case WorldName::Custom:
      throw std::invalid_argument("WorldSpec::named: Custom has no preset");
  }
  return spec;
}

BitImage render_word(const WorldSpec& spec, std::span<const Glyph> letters,
                     const Placement& placement) {
  if (static_cast<int>(letters.size()) != spec.letters_per_observation)
    throw std::invalid_argument("render_word: wrong number of letters");
  if (placement.rotation != 0 && !spec.transforms.has(Transform::Rotation90Steps))
    throw std::invalid_argument("render_word: rotation not available in this world");
  if (!placement.offsets.empty() &&
      !spec.transforms.has(Transform::IndividualVerticalShift))
    throw std::invalid_argument("render_word: individual offsets not available");
  if (!placement.offsets.empty() && placement.offsets.size() != letters.size())
    throw std::invalid_argument("render_word: offsets size mismatch");
  if (!placement.colors.empty() && spec.colors <= 1)
    throw std::invalid_argument("render_word: color assignment in a binary world");
  if (!placement.colors.empty() && placement.colors.size() != letters.size())
    throw std::invalid_argument("render_word: colors size mismatch");

  BitImage image(spec.shape());
  const int r = ((placement.rotation % 4) + 4) % 4;

  int cursor = 0;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const Glyph& glyph = letters[k];
    if (glyph.empty()) throw std::invalid_argument("render_word: empty glyph");
    const int c0 = glyph.bbox_first_col();
    const int dy = placement.offsets.empty() ? 0 : placement.offsets[k];
    const int color = placement.colors.empty() ? glyph.color : placement.colors[k];
    if (color < 0 || color >= spec.colors)
      throw std::invalid_argument("render_word: color index out of range");
    for (int row = 0; row < 5; ++row) {
      for (int col = c0; col <= glyph.bbox_last_col(); ++col) {
        if (!glyph.pixel(col, row)) continue;
        int px = cursor + (col - c0);
        int py = row + dy;
        // Rotate about the origin, (x, y) -> (-y, x) per step, then translate.
        for (int step = 0; step < r; ++step) {
          const int tmp = px;
          px = -py;
          py = tmp;
        }
        image.set(px + placement.x, py + placement.y, color);
      }
    }
    cursor += glyph.bbox_width() + 1;
  }
  return image;
}

namespace {

struct ImageCollector {
  std::size_t words_per_image;
  std::vector<std::uint64_t> data;

  void add(const BitImage& image) {
    const auto w = image.words();
    data.insert(data.end(), w.begin(), w.end());
  }

  // Sort images canonically and drop duplicates.
  ObservationSet finish(const WorldSpec& spec) {
    const std::size_t n = data.size() / words_per_image;
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    const std::uint64_t* base = data.data();
    const std::size_t wpi = words_per_image;
    auto image_of = [&](std::uint32_t i) {
      return std::span<const std::uint64_t>{base + i * wpi, wpi};
    };
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      return bits_less(image_of(a), image_of(b));
    });

    ObservationSet out;
    out.spec = spec;
    out.words_per_image = wpi;
    out.data.reserve(data.size());
    for (std::size_t i = 0; i < n; ++i) {
      const auto img = image_of(order[i]);
      if (i > 0) {
        std::span<const std::uint64_t> prev{out.data.data() + out.data.size() - wpi,
                                            wpi};
        if (compare_bits(prev, img) == 0) continue;
      }
      out.data.insert(out.data.end(), img.begin(), img.end());
    }
    return out;
  }
};

// Iterates all (letter tuple, placement) combinations of an enumerable world.
template <typename F>
void for_each_combination(const WorldSpec& spec, F&& emit) {
  const int k = spec.letters_per_observation;
  const std::size_t a = spec.alphabet.size();
  const int rotations = spec.transforms.has(Transform::Rotation90Steps) ? 4 : 1;

  std::vector<std::size_t> tuple(k, 0);
  std::vector<Glyph> letters(k);
  for (;;) {
    for (int i = 0; i < k; ++i) letters[i] = spec.alphabet[tuple[i]];
    for (int r = 0; r < rotations; ++r) {
      Placement placement;
      placement.rotation = r;
      for (int y = 0; y < spec.height; ++y) {
        for (int x = 0; x < spec.width; ++x) {
          placement.x = x;
          placement.y = y;
          emit(letters, placement);
        }
      }
    }
    // Advance the letter tuple (odometer).
    int pos = k - 1;
    while (pos >= 0 && ++tuple[pos] == a) tuple[pos--] = 0;
    if (pos < 0) break;
  }
}

}  // namespace

ObservationSet enumerate_observations(const WorldSpec& spec) {
  if (spec.name == WorldName::TL ||
      spec.transforms.has(Transform::IndividualVerticalShift))
    throw std::invalid_argument(
        "enumerate_observations: enumeration infeasible for this world");
  if (spec.alphabet.empty())
    throw std::invalid_argument("enumerate_observations: empty alphabet");

  ImageCollector collector;
  collector.words_per_image = (spec.node_count() + 63) / 64;
  collector.data.reserve(collector.words_per_image * spec.alphabet.size() *
                         spec.alphabet.size() * spec.width * spec.height);
  for_each_combination(spec, [&](std::span<const Glyph> letters,
                                 const Placement& placement) {
    collector.add(render_word(spec, letters, placement));
  });
  return collector.finish(spec);
}

namespace {

ObservationSet take_sample(const ObservationSet& all, std::uint64_t count,
                           std::uint64_t seed) {
  const std::size_t total = all.total();
  if (count > total)
    throw std::invalid_argument("sample_observations: requested count exceeds total");

  // Partial Fisher-Yates over the canonical index order.
  std::vector<std::uint32_t> idx(total);
  std::iota(idx.begin(), idx.end(), 0u);
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.next_below(total - i);
    std::swap(idx[i], idx[j]);
  }
  idx.resize(count);
  std::sort(idx.begin(), idx.end());  // canonical order is index order

  ObservationSet out;
  out.spec = all.spec;
  out.words_per_image = all.words_per_image;
  out.data.reserve(count * all.words_per_image);
  for (auto i : idx) {
    const auto img = all.image(i);
    out.data.insert(out.data.end(), img.begin(), img.end());
  }
  return out;
}

struct WordHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x2545f4914f6cdd1dULL;
    for (auto w : v) h = hash_combine(h, w);
    return static_cast<std::size_t>(h);
  }
};

ObservationSet sample_by_rejection(const WorldSpec& spec, std::uint64_t count,
                                   std::uint64_t seed) {
  SplitMix64 rng(seed);
  const int k = spec.letters_per_observation;
  std::unordered_set<std::vector<std::uint64_t>, WordHash> seen;
  seen.reserve(count * 2);

  std::vector<Glyph> letters(k);
  while (seen.size() < count) {
    for (int i = 0; i < k; ++i)
      letters[i] = spec.alphabet[rng.next_below(spec.alphabet.size())];
    Placement placement;
    placement.x = static_cast<int>(rng.next_below(spec.width));
    placement.y = static_cast<int>(rng.next_below(spec.height));
    placement.rotation = spec.transforms.has(Transform::Rotation90Steps)
                             ? static_cast<int>(rng.next_below(4))
                             : 0;
    if (spec.transforms.has(Transform::IndividualVerticalShift)) {
      placement.offsets.assign(k, 0);
      // The first letter's shift is absorbed by the global translation.
      for (int i = 1; i < k; ++i)
        placement.offsets[i] = static_cast<int>(rng.next_below(spec.height));
    }
    const BitImage image = render_word(spec, letters, placement);
    seen.insert({image.words().begin(), image.words().end()});
  }

  ImageCollector collector;
  collector.words_per_image = (spec.node_count() + 63) / 64;
  for (const auto& w : seen)
    collector.data.insert(collector.data.end(), w.begin(), w.end());
  return collector.finish(spec);
}

}  // namespace

ObservationSet sample_observations(const WorldSpec& spec, double fraction,
                                   std::uint64_t seed) {
  if (!(fraction > 0.0) || fraction > 1.0)
    throw std::invalid_argument("sample_observations: fraction must be in (0,1]");
  const ObservationSet all = enumerate_observations(spec);
  const auto count =
      static_cast<std::uint64_t>(fraction * static_cast<double>(all.total()));
  return take_sample(all, count, seed);
}

ObservationSet sample_observations_count(const WorldSpec& spec,
                                         std::uint64_t count,
                                         std::uint64_t seed) {
  if (count == 0)
    throw std::invalid_argument("sample_observations_count: count must be positive");
  if (spec.name == WorldName::TL ||
      spec.transforms.has(Transform::IndividualVerticalShift))
    return sample_by_rejection(spec, count, seed);
  const ObservationSet all = enumerate_observations(spec);
  return take_sample(all, count, seed);
}

std::uint64_t letter_transformation_count(const WorldSpec& spec) {
  std::uint64_t product = 1;
  if (spec.transforms.has(Transform::GlobalTranslation))
    product *= static_cast<std::uint64_t>(spec.width) * spec.height;
  if (spec.transforms.has(Transform::Rotation90Steps)) product *= 4;
  if (spec.transforms.has(Transform::ColorPermutation)) {
    std::uint64_t factorial = 1;
    for (int c = 2; c <= spec.colors; ++c) factorial *= c;
    product *= factorial;
  }
  if (spec.transforms.has(Transform::IndividualVerticalShift)) {
    for (int i = 1; i < spec.letters_per_observation; ++i) product *= spec.height;
  }
  return product;
}

void save_observations(const ObservationSet& obs, std::ostream& out) {
  const int bits = obs.spec.node_count();
  const int bytes = (bits + 7) / 8;
  out << "aga-obs " << obs.spec.width << ' ' << obs.spec.height << ' '
      << obs.spec.colors << ' ' << obs.total() << '\n';
  static const char* hex = "0123456789abcdef";
  std::string line(static_cast<std::size_t>(bytes) * 2, '0');
  for (std::size_t i = 0; i < obs.total(); ++i) {
    const auto img = obs.image(i);
    for (int b = 0; b < bytes; ++b) {
      const unsigned byte =
          static_cast<unsigned>((img[b / 8] >> (8 * (b % 8))) & 0xffu);
      line[2 * b] = hex[byte >> 4];
      line[2 * b + 1] = hex[byte & 0xf];
    }
    out << line << '\n';
  }
}

ObservationSet load_observations(std::istream& in) {
  std::string magic;
  int width = 0, height = 0, colors = 0;
  std::uint64_t total = 0;
  if (!(in >> magic >> width >> height >> colors >> total) || magic != "aga-obs")
    throw std::runtime_error("load_observations: bad header");
  if (width <= 0 || height <= 0 || colors <= 0)
    throw std::runtime_error("load_observations: bad dimensions");

  ObservationSet out;
  out.spec.name = WorldName::Custom;
  out.spec.width = width;
  out.spec.height = height;
  out.spec.colors = colors;
  const int bits = width * height * colors;
  const int bytes = (bits + 7) / 8;
  out.words_per_image = (bits + 63) / 64;
  out.data.reserve(out.words_per_image * total);

  auto nibble = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };

  std::string line;
  std::getline(in, line);  // consume rest of header line
  for (std::uint64_t i = 0; i < total; ++i) {
    if (!std::getline(in, line))
      throw std::runtime_error("load_observations: truncated file");
    if (line.size() != static_cast<std::size_t>(bytes) * 2)
      throw std::runtime_error("load_observations: bad record length");
    std::vector<std::uint64_t> words(out.words_per_image, 0);
    for (int b = 0; b < bytes; ++b) {
      const int hi = nibble(line[2 * b]);
      const int lo = nibble(line[2 * b + 1]);
      if (hi < 0 || lo < 0) throw std::runtime_error("load_observations: bad hex");
      words[b / 8] |= static_cast<std::uint64_t>((hi << 4) | lo) << (8 * (b % 8));
    }
    out.data.insert(out.data.end(), words.begin(), words.end());
  }
  return out;
}

void save_observations_file(const ObservationSet& obs, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  save_observations(obs, out);
}

ObservationSet load_observations_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return load_observations(in);
}

}  // namespace aga
