#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wordseq/word.hpp"

namespace wordseq {

/// A morphism on {1..n}, given by the image of each letter. Images may be
/// empty (erasing morphisms are representable; they are never prolongable).
class Morphism {
 public:
  /// images[i] is the image of letter i + 1.
  explicit Morphism(std::vector<Word> images);

  static Morphism identity(std::size_t alphabet_size);

  /// Reads rules in the form `i -> word`, one per line. Blank lines and
  /// lines starting with '#' are ignored; every letter 1..n must have
  /// exactly one rule, where n is the largest letter mentioned.
  static Morphism parse(std::string_view text);

  std::size_t alphabet_size() const noexcept { return images_.size(); }
  const Word& image(Letter a) const;
  const std::vector<Word>& images() const noexcept { return images_; }

  bool operator==(const Morphism&) const = default;

 private:
  std::vector<Word> images_;
};

/// One `i -> word` rule per line, ending in a newline.
std::string to_text(const Morphism& m);

Word apply(const Morphism& m, const Word& w);

/// Iteration count used by the empirical growth check in is_prolongable.
inline constexpr int kGrowthCheckIterations = 16;

/// True when m(a) = a X with X non-empty, no letter reachable from `a`
/// is erased, and |m^k(a)| strictly increases over the first
/// kGrowthCheckIterations iterations.
bool is_prolongable(const Morphism& m, Letter a);

/// First `target_len` letters of lim m^k(a). Throws PreconditionError if
/// (m, a) is not prolongable and ConsistencyError if the generated prefix
/// is not reproduced by one more application of m.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t target_len);

/// The morphism f_n on {1..n} for even n >= 4:
///   f_n(i) = i (i+1) ... n 1 2 ... (i-1)        for odd i
///   f_n(i) = (i-1) (i-2) ... 1 n (n-1) ... i    for even i
Morphism arshon_even_morphism(std::size_t n);

struct FixedPointCheck {
  bool agrees = false;
  std::optional<std::size_t> mismatch;  // 1-based, set iff !agrees
};

/// Compares the first `check_len` letters of m(reference) with `reference`.
///
/// Only the shortest prefix of `reference` whose image reaches `check_len`
/// letters is consumed. Throws InputError when reference is shorter than
/// check_len, or when the image of all of reference is too short and no
/// mismatch was seen in the part it does cover.
FixedPointCheck check_fixed_point_prefix(const Morphism& m, const Word& reference,
                                         std::size_t check_len);

}  // namespace wordseq
