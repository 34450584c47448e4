#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "wordseq/dragon.hpp"
#include "wordseq/errors.hpp"
#include "wordseq/seqcore.hpp"
#include "xml_check.hpp"

namespace wordseq {
namespace {

using Segment = std::pair<LatticePoint, LatticePoint>;

Segment undirected(LatticePoint a, LatticePoint b) { return a < b ? Segment{a, b} : Segment{b, a}; }

TEST(TurnsToPathTest, Examples) {
  EXPECT_EQ(turns_to_path(Word{}).points, (std::vector<LatticePoint>{{0, 0}, {1, 0}}));
  EXPECT_EQ(turns_to_path(Word{1}).points, (std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, -1}}));
  EXPECT_EQ(turns_to_path(Word{3}).points, (std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}}));
  EXPECT_EQ(turns_to_path(Word{1}, {5, 5}, Heading::north).points,
            (std::vector<LatticePoint>{{5, 5}, {5, 6}, {6, 6}}));
  EXPECT_THROW(turns_to_path(Word{2}), DomainError);
}

TEST(TurnsToPathTest, HeadingAlgebra) {
  const Word turns = fold_sequence(10);
  const auto path = turns_to_path(turns);
  long lefts = 0, rights = 0;
  for (Letter t : turns) (t == 3 ? lefts : rights)++;
  const auto& p = path.points;
  const LatticePoint last_step{p.back().x - p[p.size() - 2].x, p.back().y - p[p.size() - 2].y};
  const int quarter_turns = static_cast<int>(((lefts - rights) % 4 + 4) % 4);
  Heading expected = Heading::east;
  for (int i = 0; i < quarter_turns; ++i) expected = turn_left(expected);
  EXPECT_EQ(step({0, 0}, expected), last_step);
}

TEST(TurnsToPathTest, DragonCurveNeverRetracesAnEdge) {
  for (unsigned k = 1; k <= 14; ++k) {
    const auto path = turns_to_path(fold_sequence(k));
    ASSERT_EQ(path.points.size(), (std::size_t{1} << k) + 1);
    std::set<Segment> seen;
    for (std::size_t i = 1; i < path.points.size(); ++i) {
      const auto& a = path.points[i - 1];
      const auto& b = path.points[i];
      ASSERT_EQ(std::llabs(a.x - b.x) + std::llabs(a.y - b.y), 1);
      ASSERT_TRUE(seen.insert(undirected(a, b)).second) << "k=" << k << " step " << i;
    }
  }
}

TEST(SvgTest, TwoPointPath) {
  const std::string svg = render_svg(turns_to_path(Word{}), 1);
  EXPECT_NE(svg.find("points=\"0,0 1,0\""), std::string::npos);
  EXPECT_NE(svg.find("viewBox=\"-1 -1 3 2\""), std::string::npos);
  EXPECT_NE(svg.find("xmlns=\"http://www.w3.org/2000/svg\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"0.1\""), std::string::npos);
  EXPECT_TRUE(testing_xml::well_formed(svg));
}

TEST(SvgTest, DefaultScaleAndFlip) {
  const std::string svg = render_svg(turns_to_path(Word{1}));
  EXPECT_NE(svg.find("points=\"0,0 4,0 4,4\""), std::string::npos);
  EXPECT_NE(svg.find("stroke-width=\"0.4\""), std::string::npos);
}

TEST(SvgTest, PointCountAndDeterminism) {
  const auto path = turns_to_path(fold_sequence(10));
  const std::string svg = render_svg(path);
  const auto begin = svg.find("points=\"") + 8;
  const auto end = svg.find('"', begin);
  std::istringstream pts(svg.substr(begin, end - begin));
  std::size_t pairs = 0;
  for (std::string tok; pts >> tok;) ++pairs;
  EXPECT_EQ(pairs, 1025U);
  EXPECT_EQ(svg, render_svg(turns_to_path(fold_sequence(10))));
  EXPECT_TRUE(testing_xml::well_formed(svg));
}

TEST(SvgTest, EmitWritesFileAndReportsErrors) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto file = dir / "wordseq_dragon_test.svg";
  const auto path = turns_to_path(fold_sequence(6));
  emit_svg(path, 4, file);
  std::ifstream in(file, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  EXPECT_EQ(buf.str(), render_svg(path, 4));
  std::filesystem::remove(file);

  EXPECT_THROW(emit_svg(path, 4, dir / "no-such-dir" / "x.svg"), std::ios_base::failure);
  EXPECT_THROW(render_svg(path, 0), DomainError);
  EXPECT_THROW(render_svg(Polyline{{{0, 0}, {2, 0}}}), DomainError);
}

}  // namespace
}  // namespace wordseq
