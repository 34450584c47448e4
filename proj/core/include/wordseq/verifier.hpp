#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wordseq/word.hpp"

namespace wordseq {

/// A candidate morphism f with f(w) = w, identified by its image lengths.
/// The images themselves are forced by the target sequence w.
struct CandidateSpec {
  std::vector<std::size_t> image_lengths;

  auto operator<=>(const CandidateSpec&) const = default;
  bool operator==(const CandidateSpec&) const = default;
};

std::string to_string(const CandidateSpec& spec);

enum class Verdict { survivor, refuted, undecided };

std::string_view to_string(Verdict v);

struct CandidateRecord {
  CandidateSpec spec;
  Verdict verdict = Verdict::undecided;
  std::optional<std::size_t> mismatch;  // first 1-based mismatch when refuted
  std::vector<std::string> filters;     // shortcut filters that would have pruned it
  std::string note;
};

struct SearchReport {
  std::string kind;  // "arshon-search" or "sigma-search"
  std::vector<std::size_t> bounds;
  std::size_t check_len = 0;
  std::vector<CandidateRecord> records;  // enumeration order
  std::map<std::string, std::size_t> filter_stats;

  std::vector<CandidateSpec> survivors() const;
  std::vector<CandidateSpec> undecided() const;
  std::map<CandidateSpec, std::size_t> refutations() const;
};

/// One record per line plus a summary; stable across runs for diffing.
std::string to_text(const SearchReport& report);

/// Names of the shortcut filters recorded on Arshon candidates.
inline constexpr const char* kFilterLengthSumMod3 = "length-sum-mod3";
inline constexpr const char* kFilterAllLengthsMod3 = "all-lengths-mod3";
inline constexpr const char* kFilterEmptyImage = "empty-image";

/// Sigma-search tallies for candidates whose first mismatch lies beyond
/// 4|X|. For |X| >= 4 such a candidate must have |X| = 0 (mod 4), so
/// kLateMismatchNotMod4 is expected to stay 0. Short images (|X| < 4) are
/// refuted by a different argument and may mismatch late; they are tallied
/// under kLateMismatchShortX.
inline constexpr const char* kLateMismatch = "late-mismatch";
inline constexpr const char* kLateMismatchNotMod4 = "late-mismatch-x-not-mod4";
inline constexpr const char* kLateMismatchShortX = "late-mismatch-short-x";

struct SearchOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

inline constexpr std::size_t kDefaultArshonCheckLen = 10'000;
inline constexpr std::size_t kDefaultSigmaCheckLen = std::size_t{1} << 17;

/// Every (|X|,|Y|,|Z|) with |X|+|Y|+|Z| <= max_total_len, in lexicographic
/// order, with X, Y, Z read off consecutively from the Arshon sequence and
/// tested for f(w) = w on the first check_len letters.
SearchReport search_arshon_morphisms(std::size_t max_total_len,
                                     std::size_t check_len = kDefaultArshonCheckLen,
                                     SearchOptions options = {});

/// Every (|X|,|Y|) with 2 <= |X| <= max_x_len and 1 <= |Y| <= max_y_len.
/// X is the sigma prefix of length |X|; since w = 1 1 3 ..., f(w) = X X Y ...
/// so Y is read from positions 2|X|+1 .. 2|X|+|Y|.
SearchReport search_sigma_morphisms(std::size_t max_x_len, std::size_t max_y_len,
                                    std::size_t check_len = kDefaultSigmaCheckLen,
                                    SearchOptions options = {});

/// Odd positions of the sigma-sequence alternate 1, 3, 1, 3, ... up to `limit`.
bool verify_odd_position_alternation(std::uint64_t limit);

/// sigma(ab) = 1 when sigma(a) = sigma(b), and 3 otherwise, for all a, b <= limit.
bool verify_sigma_product_rule(std::uint64_t limit);

struct InvariantCheck {
  std::string name;
  bool passed = true;
  std::optional<std::size_t> counterexample;  // 1-based position
};

struct InvariantReport {
  std::size_t limit = 0;
  std::map<Letter, std::size_t> counts;
  std::vector<InvariantCheck> checks;  // square-free, letter-balance, block-parity

  bool passed() const;
};

/// Square-freeness, exact letter balance and 3-block parity alternation
/// over the Arshon prefix of length `limit` (a multiple of 3).
InvariantReport verify_arshon_invariants(std::size_t limit);

std::string to_text(const InvariantReport& report);

}  // namespace wordseq
