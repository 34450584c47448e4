#include "wordseq/seqcore.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "wordseq/errors.hpp"

namespace wordseq {

namespace {

void check_table(const std::vector<Word>& table, std::size_t n, const char* name) {
  if (table.size() != n) {
    throw DomainError(std::string(name) + " table must have one image per letter");
  }
  for (const Word& image : table) {
    if (image.max_letter() > n) {
      throw DomainError(std::string(name) + " table image leaves the alphabet");
    }
  }
}

Letter complement(Letter a) {
  switch (a) {
    case 1: return 3;
    case 3: return 1;
    default: throw DomainError("complement is defined on {1,3} only, got " + std::to_string(a));
  }
}

void check_sigma_depth(unsigned k) {
  if (k == 0) throw DomainError("sigma depth must be at least 1");
  if (k > kMaxSigmaDepth) {
    throw DomainError("sigma depth " + std::to_string(k) + " exceeds the supported maximum " +
                      std::to_string(kMaxSigmaDepth));
  }
}

}  // namespace

PositionalMorphism::PositionalMorphism(std::vector<Word> odd_table, std::vector<Word> even_table)
    : odd_(std::move(odd_table)), even_(std::move(even_table)) {
  if (odd_.empty()) throw DomainError("positional morphism needs a non-empty alphabet");
  check_table(odd_, odd_.size(), "odd");
  check_table(even_, odd_.size(), "even");
}

PositionalMorphism PositionalMorphism::arshon(std::size_t alphabet_size) {
  if (alphabet_size < 2) throw DomainError("Arshon map needs at least two letters");
  std::vector<Word> odd;
  std::vector<Word> even;
  for (std::size_t i = 1; i <= alphabet_size; ++i) {
    std::vector<Letter> run;
    for (std::size_t j = 0; j < alphabet_size; ++j) {
      run.push_back(static_cast<Letter>((i - 1 + j) % alphabet_size + 1));
    }
    odd.emplace_back(run);
    std::reverse(run.begin(), run.end());
    even.emplace_back(std::move(run));
  }
  return PositionalMorphism(std::move(odd), std::move(even));
}

const Word& PositionalMorphism::odd_image(Letter a) const {
  if (a == 0 || a > odd_.size()) throw DomainError("letter outside alphabet: " + std::to_string(a));
  return odd_[a - 1];
}

const Word& PositionalMorphism::even_image(Letter a) const {
  if (a == 0 || a > even_.size()) throw DomainError("letter outside alphabet: " + std::to_string(a));
  return even_[a - 1];
}

Word apply_positional(const PositionalMorphism& pm, const Word& w) {
  Word out;
  out.reserve(w.size() * pm.odd_image(1).size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    // index 0 is position 1, an odd position
    out.append(i % 2 == 0 ? pm.odd_image(w[i]) : pm.even_image(w[i]));
  }
  return out;
}

Word arshon_prefix(std::size_t target_len) {
  if (target_len == 0) throw DomainError("prefix length must be at least 1");
  static const PositionalMorphism psi = PositionalMorphism::arshon(3);
  Word w{1};
  while (w.size() < target_len) {
    Word next = apply_positional(psi, w);
    if (!next.starts_with(w)) {
      throw ConsistencyError("Arshon iterate is not a prefix of its successor");
    }
    w = std::move(next);
  }
  w.truncate(target_len);
  return w;
}

TwoAdicDecomposition two_adic_decompose(std::uint64_t n) {
  if (n == 0) throw DomainError("0 has no 2-adic decomposition");
  const auto t = static_cast<unsigned>(std::countr_zero(n));
  const std::uint64_t odd = n >> t;
  return {t, odd >> 2, static_cast<Letter>(odd & 3U)};
}

Letter sigma_letter(std::uint64_t n) { return two_adic_decompose(n).sigma; }

Word sigma_prefix_twoadic(std::size_t length) {
  std::vector<Letter> letters(length);
  for (std::size_t i = 0; i < length; ++i) letters[i] = sigma_letter(i + 1);
  return Word(std::move(letters));
}

Word sigma_prefix_recursive(unsigned k) {
  check_sigma_depth(k);
  Word c{1};
  Word d{3};
  for (unsigned level = 1; level < k; ++level) {
    Word next_c = c;
    next_c.reserve(2 * c.size() + 1);
    next_c.push_back(1);
    next_c.append(d);
    c.push_back(3);
    c.append(d);
    d = std::move(c);
    c = std::move(next_c);
  }
  if (c.size() != (std::size_t{1} << k) - 1) {
    throw ConsistencyError("C_k has unexpected length");
  }
  return c;
}

Word complement_reverse(const Word& w) {
  std::vector<Letter> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[w.size() - 1 - i] = complement(w[i]);
  return Word(std::move(out));
}

Word fold_sequence(unsigned depth) {
  check_sigma_depth(depth);
  Word s{1};
  for (unsigned k = 1; k < depth; ++k) {
    Word tail = complement_reverse(s);
    s.reserve(2 * s.size() + 1);
    s.push_back(1);
    s.append(tail);
  }
  return s;
}

Word sigma_prefix(std::size_t length, SigmaMethod method) {
  if (method == SigmaMethod::twoadic) return sigma_prefix_twoadic(length);
  if (length == 0) return {};
  unsigned k = 1;
  while (((std::size_t{1} << k) - 1) < length) ++k;
  check_sigma_depth(k);
  Word w = method == SigmaMethod::recursive ? sigma_prefix_recursive(k) : fold_sequence(k);
  w.truncate(length);
  return w;
}

BlockParity classify_3block(const Word& block) {
  if (block.size() == 3) {
    const Letter a = block[0], b = block[1], c = block[2];
    const bool permutation = a != b && b != c && a != c && block.max_letter() <= 3;
    if (permutation) {
      // An odd block steps +1 (mod 3) from each letter to the next.
      return (b == a % 3 + 1) ? BlockParity::odd : BlockParity::even;
    }
  }
  throw DomainError("'" + render(block) + "' is not a 3-block of the Arshon map");
}

std::map<Letter, std::size_t> letter_counts(const Word& w) {
  std::map<Letter, std::size_t> counts;
  for (Letter a : w) ++counts[a];
  return counts;
}

}  // namespace wordseq
