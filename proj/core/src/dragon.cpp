#include "wordseq/dragon.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ios>

#include "wordseq/errors.hpp"

namespace wordseq {

namespace {

// Shortest round-trip decimal form; whole numbers print without a fraction.
std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void check_unit_steps(const Polyline& path) {
  if (path.points.empty()) throw DomainError("polyline has no points");
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    const auto dx = std::llabs(path.points[i].x - path.points[i - 1].x);
    const auto dy = std::llabs(path.points[i].y - path.points[i - 1].y);
    if (dx + dy != 1) throw DomainError("polyline step is not a unit axis step");
  }
}

}  // namespace

Heading turn_right(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 3) % 4); }
Heading turn_left(Heading h) { return static_cast<Heading>((static_cast<int>(h) + 1) % 4); }

LatticePoint step(LatticePoint p, Heading h) {
  switch (h) {
    case Heading::east: return {p.x + 1, p.y};
    case Heading::north: return {p.x, p.y + 1};
    case Heading::west: return {p.x - 1, p.y};
    case Heading::south: return {p.x, p.y - 1};
  }
  return p;
}

Polyline turns_to_path(const Word& turns, LatticePoint origin, Heading initial) {
  Polyline path;
  path.points.reserve(turns.size() + 2);
  path.points.push_back(origin);
  Heading h = initial;
  LatticePoint p = step(origin, h);
  path.points.push_back(p);
  for (Letter t : turns) {
    if (t == 1) {
      h = turn_right(h);
    } else if (t == 3) {
      h = turn_left(h);
    } else {
      throw DomainError("turning letters must be 1 (right) or 3 (left), got " + std::to_string(t));
    }
    p = step(p, h);
    path.points.push_back(p);
  }
  return path;
}

std::string render_svg(const Polyline& path, double scale) {
  if (!(scale > 0)) throw DomainError("SVG scale must be positive");
  check_unit_steps(path);

  const auto [min_x, max_x] = std::minmax_element(
      path.points.begin(), path.points.end(), [](auto& a, auto& b) { return a.x < b.x; });
  const auto [min_y, max_y] = std::minmax_element(
      path.points.begin(), path.points.end(), [](auto& a, auto& b) { return a.y < b.y; });

  // SVG y grows downward, so the top edge comes from the largest y.
  const double left = (static_cast<double>(min_x->x) - 1) * scale;
  const double top = -(static_cast<double>(max_y->y) + 1) * scale;
  const double width = (static_cast<double>(max_x->x - min_x->x) + 2) * scale;
  const double height = (static_cast<double>(max_y->y - min_y->y) + 2) * scale;

  std::string out;
  out.reserve(path.points.size() * 12 + 512);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"";
  out += format_number(left) + ' ' + format_number(top) + ' ' + format_number(width) + ' ' +
         format_number(height) + "\">\n";
  out += "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"" +
         format_number(scale / 10) + "\" stroke-linecap=\"square\" points=\"";
  for (std::size_t i = 0; i < path.points.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += format_number(static_cast<double>(path.points[i].x) * scale);
    out.push_back(',');
    out += format_number(-static_cast<double>(path.points[i].y) * scale);
  }
  out += "\"/>\n</svg>\n";
  return out;
}

void emit_svg(const Polyline& path, double scale, const std::filesystem::path& destination) {
  const std::string svg = render_svg(path, scale);
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open " + destination.string() + " for writing");
  file.write(svg.data(), static_cast<std::streamsize>(svg.size()));
  file.close();
  if (!file) throw std::ios_base::failure("failed writing " + destination.string());
}

}  // namespace wordseq
