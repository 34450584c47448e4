#include "wordseq/word.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <ostream>
#include <stdexcept>

#include "wordseq/errors.hpp"

namespace wordseq {

namespace {

void require_letter(Letter letter) {
  if (letter == 0) throw DomainError("letter 0 is not part of any alphabet");
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (Letter l : letters_) require_letter(l);
}

Word::Word(std::initializer_list<Letter> letters) : letters_(letters) {
  for (Letter l : letters_) require_letter(l);
}

Word Word::parse(std::string_view text) {
  const bool separated = std::any_of(text.begin(), text.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c));
  });
  Word w;
  if (!separated) {
    w.reserve(text.size());
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw InputError(std::string("invalid letter character '") + c + "'");
      }
      w.letters_.push_back(static_cast<Letter>(c - '0'));
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i == text.size()) break;
    Letter value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
    if (ec != std::errc() || value == 0) {
      throw InputError("invalid letter in '" + std::string(text) + "'");
    }
    i = static_cast<std::size_t>(ptr - text.data());
    if (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      throw InputError("invalid letter in '" + std::string(text) + "'");
    }
    w.letters_.push_back(value);
  }
  return w;
}

Letter Word::at(std::size_t position) const {
  if (position == 0 || position > letters_.size()) {
    throw std::out_of_range("word position " + std::to_string(position) +
                            " outside 1.." + std::to_string(letters_.size()));
  }
  return letters_[position - 1];
}

Word Word::prefix(std::size_t length) const {
  Word w;
  const auto n = std::min(length, letters_.size());
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

Word Word::factor(std::size_t start, std::size_t length) const {
  if (start == 0) throw std::out_of_range("word positions are 1-based");
  Word w;
  if (start > letters_.size()) return w;
  const auto first = start - 1;
  const auto n = std::min(length, letters_.size() - first);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(first),
                    letters_.begin() + static_cast<std::ptrdiff_t>(first + n));
  return w;
}

bool Word::starts_with(const Word& other) const noexcept {
  return other.size() <= size() &&
         std::equal(other.letters_.begin(), other.letters_.end(), letters_.begin());
}

Letter Word::max_letter() const noexcept {
  return letters_.empty() ? 0 : *std::max_element(letters_.begin(), letters_.end());
}

void Word::push_back(Letter letter) {
  require_letter(letter);
  letters_.push_back(letter);
}

void Word::append(const Word& other) {
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
}

void Word::append(std::span<const Letter> letters) {
  for (Letter l : letters) require_letter(l);
  letters_.insert(letters_.end(), letters.begin(), letters.end());
}

void Word::truncate(std::size_t length) {
  if (length < letters_.size()) letters_.resize(length);
}

std::string render(const Word& w, std::size_t alphabet_size) {
  const std::size_t n = std::max<std::size_t>(alphabet_size, w.max_letter());
  std::string out;
  if (n <= 9) {
    out.reserve(w.size());
    for (Letter l : w) out.push_back(static_cast<char>('0' + l));
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out.push_back(' ');
    out += std::to_string(w[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << render(w); }

}  // namespace wordseq
