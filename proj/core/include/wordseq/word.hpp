#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wordseq {

/// A letter of a small integer alphabet {1, ..., n}. Zero is never a letter.
using Letter = std::uint32_t;

/// Finite word over a positive integer alphabet.
///
/// Storage is 0-based; every accessor that takes a position is 1-based,
/// so `at(1)` is the first letter and "odd position" means odd `at` index.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);
  Word(std::initializer_list<Letter> letters);

  /// Parses the canonical text form: either unseparated digits 1-9
  /// ("123132312") or whitespace-separated decimals ("10 2 11").
  static Word parse(std::string_view text);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  /// 1-based access; throws std::out_of_range.
  Letter at(std::size_t position) const;

  std::span<const Letter> letters() const noexcept { return letters_; }
  const Letter* data() const noexcept { return letters_.data(); }
  Letter operator[](std::size_t index0) const noexcept { return letters_[index0]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// First `length` letters (the whole word if shorter).
  Word prefix(std::size_t length) const;
  /// `length` letters starting at 1-based `start`, clipped to the word end.
  Word factor(std::size_t start, std::size_t length) const;
  bool starts_with(const Word& other) const noexcept;

  /// Largest letter, or 0 for the empty word.
  Letter max_letter() const noexcept;

  void push_back(Letter letter);
  void append(const Word& other);
  void append(std::span<const Letter> letters);
  void reserve(std::size_t n) { letters_.reserve(n); }
  void truncate(std::size_t length);

  friend Word operator+(Word lhs, const Word& rhs) {
    lhs.append(rhs);
    return lhs;
  }
  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Text rendering: unseparated digits when the alphabet has at most nine
/// letters, space-separated decimals otherwise. An alphabet size of 0 means
/// "infer from the largest letter present".
std::string render(const Word& w, std::size_t alphabet_size = 0);

std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace wordseq
