#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wordseq/word.hpp"

namespace wordseq {

/// Position-dependent substitution: letters at odd (1-based) positions are
/// rewritten with one table, letters at even positions with the other.
class PositionalMorphism {
 public:
  /// Both tables are indexed by letter - 1 and must cover the whole alphabet.
  PositionalMorphism(std::vector<Word> odd_table, std::vector<Word> even_table);

  /// The Arshon map on {1..n}: odd(i) is the cyclic ascending run of length
  /// n starting at i, even(i) its reversal. n = 3 gives
  /// 1->123 2->231 3->312 (odd) and 1->321 2->132 3->213 (even).
  static PositionalMorphism arshon(std::size_t alphabet_size = 3);

  std::size_t alphabet_size() const noexcept { return odd_.size(); }
  const Word& odd_image(Letter a) const;
  const Word& even_image(Letter a) const;

 private:
  std::vector<Word> odd_;
  std::vector<Word> even_;
};

Word apply_positional(const PositionalMorphism& pm, const Word& w);

/// First `target_len` letters of the Arshon sequence, iterating the
/// positional map from "1" until the iterate is long enough.
Word arshon_prefix(std::size_t target_len);

/// n = 2^t (4s + sigma) with sigma in {1, 3}.
struct TwoAdicDecomposition {
  unsigned t = 0;
  std::uint64_t s = 0;
  Letter sigma = 1;

  std::uint64_t value() const noexcept { return (std::uint64_t{4} * s + sigma) << t; }
  bool operator==(const TwoAdicDecomposition&) const = default;
};

TwoAdicDecomposition two_adic_decompose(std::uint64_t n);

/// n-th letter (1-based) of the sigma-sequence, the regular paper-folding word.
Letter sigma_letter(std::uint64_t n);

/// sigma_letter(1) ... sigma_letter(length).
Word sigma_prefix_twoadic(std::size_t length);

/// C_k from C_1 = 1, D_1 = 3, C_{k+1} = C_k 1 D_k, D_{k+1} = C_k 3 D_k.
Word sigma_prefix_recursive(unsigned k);

/// Reversal with 1 <-> 3 swapped. Letters must be 1 or 3.
Word complement_reverse(const Word& w);

/// Crease sequence after `depth` folds: S_1 = 1, S_{k+1} = S_k 1 complement_reverse(S_k).
Word fold_sequence(unsigned depth);

enum class SigmaMethod { twoadic, recursive, fold };

/// First `length` letters of the sigma-sequence computed by the chosen route.
Word sigma_prefix(std::size_t length, SigmaMethod method);

/// Largest k accepted by the recursive and folding generators (|C_k| = 2^k - 1).
inline constexpr unsigned kMaxSigmaDepth = 26;

struct SquareOccurrence {
  std::size_t start = 0;   // 1-based
  std::size_t period = 0;  // |X| for the square XX

  bool operator==(const SquareOccurrence&) const = default;
};

/// Leftmost square factor XX of `w`; among squares with the same start the
/// one with the shortest X. Runs in O(n log n) and confirms the reported
/// occurrence letter by letter.
std::optional<SquareOccurrence> find_square(const Word& w);

enum class BlockParity { odd, even };

/// Odd blocks are 123, 231, 312; even blocks are 321, 132, 213.
BlockParity classify_3block(const Word& block);

std::map<Letter, std::size_t> letter_counts(const Word& w);

}  // namespace wordseq
