// Acceptance suite: one line per criterion, non-zero exit if any fails.
// Each criterion also carries a wall-clock budget that counts as part of it.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wordseq/wordseq.hpp"
#include "xml_check.hpp"

namespace {

using namespace wordseq;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> body;
};

std::string cli_output(std::vector<std::string> args, int* status = nullptr) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  if (status) *status = s;
  return out.str();
}

Outcome prefix_fidelity() {
  Outcome o;
  int status = -1;
  o.require(cli_output({"generate", "arshon", "--length", "9"}, &status) == "123132312\n",
            "generate arshon --length 9 != 123132312");
  o.require(status == 0, "generate exit status != 0");
  o.require(cli_output({"generate", "arshon", "--length", "3"}) == "123\n", "length-3 prefix != 123");
  o.require(render(arshon_prefix(9)) == "123132312", "arshon_prefix(9)");
  return o;
}

Outcome sigma_equivalence() {
  Outcome o;
  for (unsigned k = 1; k <= 20; ++k) {
    const std::size_t len = (std::size_t{1} << k) - 1;
    const Word a = sigma_prefix_twoadic(len);
    const Word b = sigma_prefix_recursive(k);
    const Word c = fold_sequence(k);
    o.require(a.size() == len && b.size() == len && c.size() == len, "length mismatch at k=" + std::to_string(k));
    o.require(a == b && b == c, "methods differ at k=" + std::to_string(k));
  }
  o.require(render(sigma_prefix_twoadic(14)) == "11311331113313", "length-14 prefix");
  return o;
}

Outcome square_free_at_scale() {
  Outcome o;
  const Word w = arshon_prefix(1'000'000);
  o.require(w.size() == 1'000'000, "prefix length");
  const auto sq = find_square(w);
  o.require(!sq, sq ? "square at " + std::to_string(sq->start) + " period " +
                          std::to_string(sq->period)
                    : "");
  return o;
}

Outcome arshon_theorem() {
  Outcome o;
  const auto report = search_arshon_morphisms(30, 10'000);
  o.require(report.survivors() == std::vector<CandidateSpec>{{{1, 1, 1}}},
            "survivors != {(1,1,1)}");
  o.require(report.undecided().empty(), std::to_string(report.undecided().size()) + " undecided");
  o.require(report.records.size() == 33 * 32 * 31 / 6, "candidate count");
  return o;
}

Outcome sigma_theorem() {
  Outcome o;
  const auto report = search_sigma_morphisms(64, 64, std::size_t{1} << 17);
  o.require(report.survivors().empty(), std::to_string(report.survivors().size()) + " survivors");
  o.require(report.undecided().empty(), std::to_string(report.undecided().size()) + " undecided");
  o.require(report.records.size() == 63 * 64, "candidate count");
  return o;
}

Outcome lemmas() {
  Outcome o;
  o.require(verify_odd_position_alternation(1'000'000), "odd-position alternation up to 10^6");
  o.require(verify_sigma_product_rule(2000), "sigma product rule up to 2000");
  return o;
}

Outcome balance_and_parity() {
  Outcome o;
  const auto report = verify_arshon_invariants(300'000);
  for (Letter a : {1U, 2U, 3U}) {
    o.require(report.counts.contains(a) && report.counts.at(a) == 100'000,
              "count of letter " + std::to_string(a));
  }
  for (const auto& c : report.checks) {
    if (c.name == "square-free") continue;
    o.require(c.passed, c.name + " failed at " +
                            (c.counterexample ? std::to_string(*c.counterexample) : "?"));
  }
  return o;
}

Outcome even_morphism() {
  Outcome o;
  const Morphism f4 = arshon_even_morphism(4);
  const char* expected[] = {"1234", "1432", "3412", "3214"};
  for (Letter i = 1; i <= 4; ++i) {
    o.require(render(f4.image(i)) == expected[i - 1], "f_4(" + std::to_string(i) + ")");
  }
  const Word fp = fixed_point_prefix(f4, 1, 100'000);
  o.require(fp.size() == 100'000, "prefix length");
  o.require(!find_square(fp), "f_4 fixed point has a square");
  return o;
}

Outcome dragon_geometry() {
  Outcome o;
  const auto path = turns_to_path(fold_sequence(14));
  o.require(path.points.size() == (std::size_t{1} << 14) + 1, "point count");
  std::set<std::pair<LatticePoint, LatticePoint>> segments;
  for (std::size_t i = 1; i < path.points.size(); ++i) {
    auto a = path.points[i - 1], b = path.points[i];
    if (std::llabs(a.x - b.x) + std::llabs(a.y - b.y) != 1) {
      o.require(false, "non-unit step at " + std::to_string(i));
      break;
    }
    if (b < a) std::swap(a, b);
    if (!segments.insert({a, b}).second) {
      o.require(false, "repeated segment at step " + std::to_string(i));
      break;
    }
  }
  const auto dir = std::filesystem::temp_directory_path();
  const auto f1 = dir / "wordseq_acceptance_1.svg";
  const auto f2 = dir / "wordseq_acceptance_2.svg";
  emit_svg(path, kDefaultSvgScale, f1);
  emit_svg(turns_to_path(fold_sequence(14)), kDefaultSvgScale, f2);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  const std::string a = slurp(f1), b = slurp(f2);
  o.require(!a.empty() && a == b, "SVG output differs between runs");
  o.require(testing_xml::well_formed(a), "SVG is not well-formed XML");
  o.require(a.find("xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos, "SVG namespace");
  std::filesystem::remove(f1);
  std::filesystem::remove(f2);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "prefix fidelity", 1, prefix_fidelity},
      {2, "sigma cross-definition equivalence k=1..20", 10, sigma_equivalence},
      {3, "Arshon prefix of 10^6 letters is square-free", 60, square_free_at_scale},
      {4, "Arshon morphism search: bound 30, check 10^4", 120, arshon_theorem},
      {5, "sigma morphism search: 64 x 64, check 2^17", 300, sigma_theorem},
      {6, "odd-position alternation 10^6 and product rule 2000", 60, lemmas},
      {7, "letter balance and block parity over 3*10^5", 10, balance_and_parity},
      {8, "f_4 images and square-free fixed point of 10^5", 30, even_morphism},
      {9, "dragon geometry and deterministic SVG", 10, dragon_geometry},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) o.require(false, "exceeded time budget");
    if (!o.ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.3f s, budget %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), secs, c.budget_seconds, o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
