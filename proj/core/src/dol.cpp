#include "wordseq/dol.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "wordseq/errors.hpp"

namespace wordseq {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Letter parse_letter(std::string_view text) {
  std::size_t value = 0;
  if (text.empty()) throw InputError("missing letter in morphism rule");
  for (char c : text) {
    if (c < '0' || c > '9') throw InputError("bad letter '" + std::string(text) + "'");
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > std::numeric_limits<Letter>::max()) throw InputError("letter too large");
  }
  if (value == 0) throw InputError("letter 0 is not allowed");
  return static_cast<Letter>(value);
}

std::vector<bool> reachable_from(const Morphism& m, Letter a) {
  std::vector<bool> seen(m.alphabet_size() + 1, false);
  std::vector<Letter> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    const Letter b = stack.back();
    stack.pop_back();
    for (Letter c : m.image(b)) {
      if (!seen[c]) {
        seen[c] = true;
        stack.push_back(c);
      }
    }
  }
  return seen;
}

}  // namespace

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("morphism needs a non-empty alphabet");
  for (const Word& w : images_) {
    if (w.max_letter() > images_.size()) {
      throw DomainError("morphism image uses a letter outside 1.." +
                        std::to_string(images_.size()));
    }
  }
}

Morphism Morphism::identity(std::size_t alphabet_size) {
  std::vector<Word> images;
  for (std::size_t i = 1; i <= alphabet_size; ++i) images.push_back(Word{static_cast<Letter>(i)});
  return Morphism(std::move(images));
}

Morphism Morphism::parse(std::string_view text) {
  std::vector<std::optional<Word>> rules;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    auto line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const auto line = trim(text.substr(line_start, line_end - line_start));
    line_start = line_end + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) {
      throw InputError("morphism rule without '->': " + std::string(line));
    }
    const Letter a = parse_letter(trim(line.substr(0, arrow)));
    const Word image = Word::parse(trim(line.substr(arrow + 2)));
    if (rules.size() < a) rules.resize(a);
    if (rules[a - 1]) throw InputError("duplicate rule for letter " + std::to_string(a));
    rules[a - 1] = image;
  }
  std::size_t n = rules.size();
  for (const auto& r : rules) {
    if (r) n = std::max<std::size_t>(n, r->max_letter());
  }
  if (n == 0) throw InputError("empty morphism description");
  rules.resize(n);
  std::vector<Word> images;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rules[i]) throw InputError("no rule for letter " + std::to_string(i + 1));
    images.push_back(*rules[i]);
  }
  return Morphism(std::move(images));
}

const Word& Morphism::image(Letter a) const {
  if (a == 0 || a > images_.size()) {
    throw DomainError("letter " + std::to_string(a) + " outside alphabet 1.." +
                      std::to_string(images_.size()));
  }
  return images_[a - 1];
}

std::string to_text(const Morphism& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.alphabet_size(); ++i) {
    os << (i + 1) << " -> " << render(m.images()[i], m.alphabet_size()) << '\n';
  }
  return os.str();
}

Word apply(const Morphism& m, const Word& w) {
  std::size_t total = 0;
  for (Letter a : w) total += m.image(a).size();
  Word out;
  out.reserve(total);
  for (Letter a : w) out.append(m.image(a));
  return out;
}

bool is_prolongable(const Morphism& m, Letter a) {
  if (a == 0 || a > m.alphabet_size()) return false;
  const Word& first = m.image(a);
  if (first.size() < 2 || first[0] != a) return false;

  const auto reachable = reachable_from(m, a);
  for (Letter b = 1; b <= m.alphabet_size(); ++b) {
    if (reachable[b] && m.image(b).empty()) return false;
  }

  // Track letter multiplicities of m^k(a) instead of the words themselves.
  constexpr std::size_t kCap = std::size_t{1} << 48;
  std::vector<std::size_t> counts(m.alphabet_size() + 1, 0);
  counts[a] = 1;
  std::size_t length = 1;
  for (int k = 0; k < kGrowthCheckIterations; ++k) {
    std::vector<std::size_t> next(counts.size(), 0);
    for (Letter b = 1; b <= m.alphabet_size(); ++b) {
      if (counts[b] == 0) continue;
      for (Letter c : m.image(b)) next[c] = std::min(kCap, next[c] + counts[b]);
    }
    std::size_t next_length = 0;
    for (std::size_t c : next) next_length = std::min(kCap, next_length + c);
    if (next_length <= length && next_length < kCap) return false;
    if (next_length >= kCap) break;
    counts = std::move(next);
    length = next_length;
  }
  return true;
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t target_len) {
  if (target_len == 0) throw DomainError("prefix length must be at least 1");
  if (!is_prolongable(m, a)) {
    throw PreconditionError("letter " + std::to_string(a) + " is not prolongable");
  }
  // Since m(a) starts with a, the fixed point w satisfies w = m(w): reading
  // w left to right and appending the image of each letter reproduces w.
  Word w = m.image(a);
  for (std::size_t i = 1; w.size() < target_len; ++i) w.append(m.image(w[i]));
  w.truncate(target_len);

  const auto check = check_fixed_point_prefix(m, w, w.size());
  if (!check.agrees) {
    throw ConsistencyError("generated prefix is not stable under the morphism (position " +
                           std::to_string(*check.mismatch) + ")");
  }
  return w;
}

Morphism arshon_even_morphism(std::size_t n) {
  if (n < 4 || n % 2 != 0) {
    throw DomainError("f_n is defined for even n >= 4, got " + std::to_string(n));
  }
  std::vector<Word> images;
  for (std::size_t i = 1; i <= n; ++i) {
    Word image;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t letter = (i % 2 == 1) ? (i - 1 + j) % n + 1   // i, i+1, ..., n, 1, ..., i-1
                                              : (i + n - 2 - j) % n + 1;  // i-1, ..., 1, n, ..., i
      image.push_back(static_cast<Letter>(letter));
    }
    images.push_back(std::move(image));
  }
  return Morphism(std::move(images));
}

FixedPointCheck check_fixed_point_prefix(const Morphism& m, const Word& reference,
                                         std::size_t check_len) {
  if (check_len == 0) throw DomainError("check length must be at least 1");
  if (reference.size() < check_len) {
    throw InputError("reference has " + std::to_string(reference.size()) +
                     " letters, need at least " + std::to_string(check_len));
  }
  const bool erases_everything = std::all_of(
      m.images().begin(), m.images().end(), [](const Word& w) { return w.empty(); });
  if (erases_everything) {
    // m(reference) is empty while reference is not.
    return {false, 1};
  }

  std::size_t pos = 0;  // letters of the image compared so far
  for (std::size_t i = 0; i < reference.size() && pos < check_len; ++i) {
    for (Letter b : m.image(reference[i])) {
      if (b != reference[pos]) return {false, pos + 1};
      if (++pos == check_len) break;
    }
  }
  if (pos < check_len) {
    throw InputError("image of the reference covers only " + std::to_string(pos) + " of " +
                     std::to_string(check_len) + " letters; supply a longer reference");
  }
  return {true, std::nullopt};
}

}  // namespace wordseq
