#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "wordseq/word.hpp"

namespace wordseq {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  bool operator==(const LatticePoint&) const = default;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Axis directions in counter-clockwise order (y axis points up).
enum class Heading : int { east = 0, north = 1, west = 2, south = 3 };

Heading turn_right(Heading h);
Heading turn_left(Heading h);
LatticePoint step(LatticePoint p, Heading h);

struct Polyline {
  std::vector<LatticePoint> points;
};

/// Walks one unit, then for each letter turns (1 = right, 3 = left) and
/// walks one more unit. A word of length L gives L + 2 points.
Polyline turns_to_path(const Word& turns, LatticePoint origin = {}, Heading initial = Heading::east);

inline constexpr double kDefaultSvgScale = 4.0;

/// SVG 1.1 document with a single <polyline>. Coordinates are scaled and
/// the y axis flipped; the viewBox encloses every point with a margin of
/// one lattice unit. Output is byte-identical for identical inputs.
std::string render_svg(const Polyline& path, double scale = kDefaultSvgScale);

/// Writes render_svg(path, scale) to `destination`; throws std::ios_base::failure.
void emit_svg(const Polyline& path, double scale, const std::filesystem::path& destination);

}  // namespace wordseq
