#pragma once

// Brute-force reference implementations used only by tests. They follow
// the textbook definitions directly and share no code with the library.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace wordseq::oracle {

// sigma(n) by repeated halving.
inline unsigned sigma_by_division(std::uint64_t n) {
  while (n % 2 == 0) n /= 2;
  return static_cast<unsigned>(n % 4);
}

// Leftmost-then-shortest square by trying every (start, period).
inline std::optional<std::pair<std::size_t, std::size_t>> brute_square(
    const std::vector<std::uint32_t>& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + 2 * p <= n; ++p) {
      bool eq = true;
      for (std::size_t k = 0; k < p && eq; ++k) eq = w[i + k] == w[i + p + k];
      if (eq) return std::make_pair(i + 1, p);
    }
  }
  return std::nullopt;
}

// Arshon prefix straight from the two substitution tables.
inline std::vector<std::uint32_t> arshon_by_tables(std::size_t len) {
  static const std::uint32_t odd[4][3] = {{}, {1, 2, 3}, {2, 3, 1}, {3, 1, 2}};
  static const std::uint32_t even[4][3] = {{}, {3, 2, 1}, {1, 3, 2}, {2, 1, 3}};
  std::vector<std::uint32_t> w{1};
  while (w.size() < len) {
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const auto& t = (i % 2 == 0) ? odd[w[i]] : even[w[i]];
      next.insert(next.end(), t, t + 3);
    }
    w = std::move(next);
  }
  w.resize(len);
  return w;
}

}  // namespace wordseq::oracle
