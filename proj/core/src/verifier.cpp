#include "wordseq/verifier.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <thread>

#include "wordseq/dol.hpp"
#include "wordseq/errors.hpp"
#include "wordseq/seqcore.hpp"

namespace wordseq {

namespace {

// Runs fn(i) for i in [0, count) on a pool of threads. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
}

// Tests f(reference) against reference and fills verdict/mismatch. Agreement
// up to check_len is only a survivor when `provable` says f(w) = w holds
// for the whole infinite word.
void judge(CandidateRecord& rec, const Morphism& f, const Word& reference, std::size_t check_len,
           bool provable) {
  try {
    const auto result = check_fixed_point_prefix(f, reference, check_len);
    if (result.agrees) {
      rec.verdict = provable ? Verdict::survivor : Verdict::undecided;
      if (!provable) rec.note = "no mismatch within check length; undecided at this bound";
    } else {
      rec.verdict = Verdict::refuted;
      rec.mismatch = result.mismatch;
    }
  } catch (const InputError& e) {
    rec.verdict = Verdict::undecided;
    rec.note = std::string("undecided at this bound: ") + e.what();
  }
}

bool is_identity_lengths(const CandidateSpec& spec) {
  return std::all_of(spec.image_lengths.begin(), spec.image_lengths.end(),
                     [](std::size_t n) { return n == 1; });
}

void tally_filters(SearchReport& report) {
  for (const auto& rec : report.records) {
    for (const auto& f : rec.filters) ++report.filter_stats[f];
  }
}

}  // namespace

std::string to_string(const CandidateSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.image_lengths.size(); ++i) {
    if (i != 0) out.push_back(',');
    out += std::to_string(spec.image_lengths[i]);
  }
  return out;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::survivor: return "survivor";
    case Verdict::refuted: return "refuted";
    case Verdict::undecided: return "undecided";
  }
  return "?";
}

std::vector<CandidateSpec> SearchReport::survivors() const {
  std::vector<CandidateSpec> out;
  for (const auto& r : records) {
    if (r.verdict == Verdict::survivor) out.push_back(r.spec);
  }
  return out;
}

std::vector<CandidateSpec> SearchReport::undecided() const {
  std::vector<CandidateSpec> out;
  for (const auto& r : records) {
    if (r.verdict == Verdict::undecided) out.push_back(r.spec);
  }
  return out;
}

std::map<CandidateSpec, std::size_t> SearchReport::refutations() const {
  std::map<CandidateSpec, std::size_t> out;
  for (const auto& r : records) {
    if (r.verdict == Verdict::refuted) out.emplace(r.spec, *r.mismatch);
  }
  return out;
}

std::string to_text(const SearchReport& report) {
  std::ostringstream os;
  os << "# " << report.kind << " bounds=";
  for (std::size_t i = 0; i < report.bounds.size(); ++i) {
    os << (i ? "," : "") << report.bounds[i];
  }
  os << " check-len=" << report.check_len << '\n';

  std::array<std::size_t, 3> by_verdict{};
  for (const auto& rec : report.records) {
    ++by_verdict[static_cast<std::size_t>(rec.verdict)];
    os << "candidate=" << to_string(rec.spec) << " verdict=" << to_string(rec.verdict)
       << " mismatch=";
    if (rec.mismatch) {
      os << *rec.mismatch;
    } else {
      os << '-';
    }
    os << " filters=";
    if (rec.filters.empty()) os << '-';
    for (std::size_t i = 0; i < rec.filters.size(); ++i) os << (i ? "," : "") << rec.filters[i];
    if (!rec.note.empty()) os << " note=\"" << rec.note << '"';
    os << '\n';
  }
  os << "summary candidates=" << report.records.size()
     << " survivors=" << by_verdict[static_cast<std::size_t>(Verdict::survivor)]
     << " refuted=" << by_verdict[static_cast<std::size_t>(Verdict::refuted)]
     << " undecided=" << by_verdict[static_cast<std::size_t>(Verdict::undecided)] << '\n';
  for (const auto& [name, count] : report.filter_stats) {
    os << "filter " << name << '=' << count << '\n';
  }
  return os.str();
}

SearchReport search_arshon_morphisms(std::size_t max_total_len, std::size_t check_len,
                                     SearchOptions options) {
  if (max_total_len == 0 || check_len == 0) throw DomainError("search bounds must be positive");
  const Word reference = arshon_prefix(std::max(check_len, max_total_len));

  SearchReport report;
  report.kind = "arshon-search";
  report.bounds = {max_total_len};
  report.check_len = check_len;
  for (std::size_t x = 0; x <= max_total_len; ++x) {
    for (std::size_t y = 0; x + y <= max_total_len; ++y) {
      for (std::size_t z = 0; x + y + z <= max_total_len; ++z) {
        report.records.push_back({CandidateSpec{{x, y, z}}, Verdict::undecided, {}, {}, {}});
      }
    }
  }

  parallel_for(report.records.size(), options.threads, [&](std::size_t i) {
    CandidateRecord& rec = report.records[i];
    const auto& len = rec.spec.image_lengths;
    const bool identity = is_identity_lengths(rec.spec);
    const std::size_t sum = len[0] + len[1] + len[2];

    if (len[0] == 0 || len[1] == 0 || len[2] == 0) rec.filters.emplace_back(kFilterEmptyImage);
    if (!identity && sum % 3 != 0) rec.filters.emplace_back(kFilterLengthSumMod3);
    if (len[0] % 3 == 0 && len[1] % 3 == 0 && len[2] % 3 == 0) {
      rec.filters.emplace_back(kFilterAllLengthsMod3);
    }

    const Morphism f({reference.factor(1, len[0]), reference.factor(len[0] + 1, len[1]),
                      reference.factor(len[0] + len[1] + 1, len[2])});
    judge(rec, f, reference, check_len, identity);
    if (identity && rec.verdict == Verdict::survivor) {
      rec.note = "identity; excluded by |f(123)| > 3";
    }
  });

  tally_filters(report);
  for (const auto& rec : report.records) {
    if (!rec.filters.empty() && rec.verdict != Verdict::refuted) {
      ++report.filter_stats["filtered-but-not-refuted"];
    }
  }
  return report;
}

SearchReport search_sigma_morphisms(std::size_t max_x_len, std::size_t max_y_len,
                                    std::size_t check_len, SearchOptions options) {
  if (max_x_len < 2 || max_y_len == 0 || check_len == 0) {
    throw DomainError("sigma search needs max_x >= 2, max_y >= 1 and a positive check length");
  }
  const Word reference = sigma_prefix_twoadic(std::max(check_len, 2 * max_x_len + max_y_len));

  SearchReport report;
  report.kind = "sigma-search";
  report.bounds = {max_x_len, max_y_len};
  report.check_len = check_len;
  for (std::size_t x = 2; x <= max_x_len; ++x) {
    for (std::size_t y = 1; y <= max_y_len; ++y) {
      report.records.push_back({CandidateSpec{{x, y}}, Verdict::undecided, {}, {}, {}});
    }
  }

  parallel_for(report.records.size(), options.threads, [&](std::size_t i) {
    CandidateRecord& rec = report.records[i];
    const std::size_t x = rec.spec.image_lengths[0];
    const std::size_t y = rec.spec.image_lengths[1];
    const Word image1 = reference.prefix(x);
    if (image1[0] != 1) {
      rec.verdict = Verdict::refuted;
      rec.mismatch = 1;
      rec.note = "f(1) does not begin with 1";
      return;
    }
    // Letter 2 never occurs in the sigma-sequence; it maps to itself.
    const Morphism f({image1, Word{2}, reference.factor(2 * x + 1, y)});
    judge(rec, f, reference, check_len, false);
    if (rec.mismatch && *rec.mismatch > 4 * x) {
      rec.filters.emplace_back(kLateMismatch);
      if (x < 4) {
        rec.filters.emplace_back(kLateMismatchShortX);
      } else if (x % 4 != 0) {
        rec.filters.emplace_back(kLateMismatchNotMod4);
      }
    }
  });

  tally_filters(report);
  return report;
}

bool verify_odd_position_alternation(std::uint64_t limit) {
  if (limit == 0) throw DomainError("limit must be at least 1");
  for (std::uint64_t n = 1; n <= limit; n += 2) {
    const std::uint64_t k = (n + 1) / 2;
    if (sigma_letter(n) != (k % 2 == 1 ? 1U : 3U)) return false;
  }
  return true;
}

bool verify_sigma_product_rule(std::uint64_t limit) {
  if (limit < 2) throw DomainError("limit must be at least 2");
  std::vector<Letter> sigma(limit + 1);
  for (std::uint64_t a = 1; a <= limit; ++a) sigma[a] = sigma_letter(a);
  for (std::uint64_t a = 1; a <= limit; ++a) {
    for (std::uint64_t b = 1; b <= limit; ++b) {
      const Letter expected = sigma[a] == sigma[b] ? 1 : 3;
      if (sigma_letter(a * b) != expected) return false;
    }
  }
  return true;
}

bool InvariantReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

InvariantReport verify_arshon_invariants(std::size_t limit) {
  if (limit == 0 || limit % 3 != 0) {
    throw DomainError("invariant limit must be a positive multiple of 3");
  }
  const Word w = arshon_prefix(limit);
  InvariantReport report;
  report.limit = limit;
  report.counts = letter_counts(w);

  InvariantCheck square{"square-free", true, std::nullopt};
  if (auto occ = find_square(w)) {
    square.passed = false;
    square.counterexample = occ->start;
  }

  InvariantCheck balance{"letter-balance", true, std::nullopt};
  InvariantCheck parity{"block-parity", true, std::nullopt};
  std::array<std::size_t, 4> running{};
  for (std::size_t block = 1; 3 * block <= limit; ++block) {
    const std::size_t first = 3 * (block - 1);
    for (std::size_t j = 0; j < 3; ++j) {
      const Letter a = w[first + j];
      if (a <= 3) ++running[a];
    }
    if (balance.passed &&
        (running[1] != block || running[2] != block || running[3] != block)) {
      balance.passed = false;
      balance.counterexample = 3 * block;
    }
    if (parity.passed) {
      const BlockParity expected = block % 2 == 1 ? BlockParity::odd : BlockParity::even;
      bool ok = false;
      try {
        ok = classify_3block(w.factor(first + 1, 3)) == expected;
      } catch (const DomainError&) {
        ok = false;
      }
      if (!ok) {
        parity.passed = false;
        parity.counterexample = first + 1;
      }
    }
  }
  report.checks = {square, balance, parity};
  return report;
}

std::string to_text(const InvariantReport& report) {
  std::ostringstream os;
  os << "# invariants limit=" << report.limit << '\n';
  os << "counts";
  for (const auto& [letter, count] : report.counts) os << ' ' << letter << '=' << count;
  os << '\n';
  for (const auto& c : report.checks) {
    os << "check=" << c.name << " result=" << (c.passed ? "pass" : "fail");
    if (c.counterexample) os << " position=" << *c.counterexample;
    os << '\n';
  }
  return os.str();
}

}  // namespace wordseq
