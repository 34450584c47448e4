// Square detection by Main-Lorentz divide and conquer.
//
// Every occurrence of a square XX in s = uv either lies inside u, lies
// inside v, or crosses the split point. Crossing squares are enumerated
// per "centre" position with four Z-arrays; each (centre, half length)
// describes a contiguous run of start positions, so the leftmost start of
// that run is found in O(1). Total cost is O(n log n).
#include <algorithm>
#include <optional>
#include <vector>

#include "wordseq/errors.hpp"
#include "wordseq/seqcore.hpp"

namespace wordseq {

namespace {

using Letters = std::vector<Letter>;

constexpr Letter kSeparator = 0;  // never a letter

void z_function(const Letters& s, std::vector<std::size_t>& z) {
  const std::size_t n = s.size();
  z.assign(n, 0);
  std::size_t l = 0, r = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
}

std::size_t z_at(const std::vector<std::size_t>& z, std::ptrdiff_t i) {
  return (i >= 0 && static_cast<std::size_t>(i) < z.size()) ? z[static_cast<std::size_t>(i)] : 0;
}

class SquareFinder {
 public:
  explicit SquareFinder(std::span<const Letter> text) : text_(text) {}

  std::optional<SquareOccurrence> run() {
    if (text_.size() >= 2) search(0, text_.size());
    return best_;
  }

 private:
  void offer(std::size_t start0, std::size_t period) {
    SquareOccurrence occ{start0 + 1, period};
    if (!best_ || occ.start < best_->start ||
        (occ.start == best_->start && occ.period < best_->period)) {
      best_ = occ;
    }
  }

  // Squares inside text_[shift, shift + n).
  void search(std::size_t shift, std::size_t n) {
    if (n < 2) return;
    // Everything in this range starts at or after `shift`.
    if (best_ && best_->start - 1 < shift) return;

    const std::size_t nu = n / 2;
    const std::size_t nv = n - nu;
    search(shift, nu);
    search(shift + nu, nv);

    const auto u = text_.subspan(shift, nu);
    const auto v = text_.subspan(shift + nu, nv);

    Letters ru(u.rbegin(), u.rend());
    Letters rv(v.rbegin(), v.rend());

    z_function(ru, z1_);

    buf_.assign(v.begin(), v.end());
    buf_.push_back(kSeparator);
    buf_.insert(buf_.end(), u.begin(), u.end());
    z_function(buf_, z2_);

    buf_ = ru;
    buf_.push_back(kSeparator);
    buf_.insert(buf_.end(), rv.begin(), rv.end());
    z_function(buf_, z3_);

    buf_.assign(v.begin(), v.end());
    z_function(buf_, z4_);

    const auto inu = static_cast<std::ptrdiff_t>(nu);
    const auto inv = static_cast<std::ptrdiff_t>(nv);
    for (std::ptrdiff_t cntr = 0; cntr < static_cast<std::ptrdiff_t>(n); ++cntr) {
      const bool left = cntr < inu;
      std::ptrdiff_t l, k1, k2;
      if (left) {
        l = inu - cntr;
        k1 = static_cast<std::ptrdiff_t>(z_at(z1_, inu - cntr));
        k2 = static_cast<std::ptrdiff_t>(z_at(z2_, inv + 1 + cntr));
      } else {
        l = cntr - inu + 1;
        k1 = static_cast<std::ptrdiff_t>(z_at(z3_, inu + 1 + inv - 1 - (cntr - inu)));
        k2 = static_cast<std::ptrdiff_t>(z_at(z4_, (cntr - inu) + 1));
      }
      if (k1 + k2 < l) continue;
      const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(1, l - k2);
      const std::ptrdiff_t hi = left ? std::min(l - 1, k1) : std::min(l, k1);
      if (lo > hi) continue;
      // Start position decreases as l1 grows, so l1 = hi is the leftmost.
      const std::ptrdiff_t pos = left ? cntr - hi : cntr - l - hi + 1;
      offer(shift + static_cast<std::size_t>(pos), static_cast<std::size_t>(l));
    }
  }

  std::span<const Letter> text_;
  std::optional<SquareOccurrence> best_;
  Letters buf_;
  std::vector<std::size_t> z1_, z2_, z3_, z4_;
};

}  // namespace

std::optional<SquareOccurrence> find_square(const Word& w) {
  auto found = SquareFinder(w.letters()).run();
  if (found) {
    const auto letters = w.letters();
    const std::size_t first = found->start - 1;
    const std::size_t p = found->period;
    if (p == 0 || first + 2 * p > letters.size() ||
        !std::equal(letters.begin() + static_cast<std::ptrdiff_t>(first),
                    letters.begin() + static_cast<std::ptrdiff_t>(first + p),
                    letters.begin() + static_cast<std::ptrdiff_t>(first + p))) {
      throw ConsistencyError("square candidate failed direct confirmation");
    }
  }
  return found;
}

}  // namespace wordseq
