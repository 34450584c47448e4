#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "wordseq/wordseq.hpp"

namespace wordseq::cli {

namespace {

struct Config {
  std::string kind;
  std::size_t length = 0;
  std::string method = "twoadic";
  std::size_t alphabet = 4;
  std::string input;
  std::size_t bound = 0;
  std::size_t check_len = 0;
  std::size_t limit = 0;
  std::size_t max_x = 0;
  std::size_t max_y = 0;
  unsigned threads = 0;
  bool verbose = false;
  std::string format = "text";
  unsigned depth = 0;
  double scale = kDefaultSvgScale;
  std::string out;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --out when given, otherwise to the caller's stream.
void deliver(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::ios_base::failure("cannot open " + cfg.out + " for writing");
  file << text;
  if (!file) throw std::ios_base::failure("failed writing " + cfg.out);
}

int cmd_generate(const Config& cfg, std::ostream& out) {
  Word w;
  std::size_t alphabet = 0;
  if (cfg.kind == "arshon") {
    w = arshon_prefix(cfg.length);
    alphabet = 3;
  } else if (cfg.kind == "sigma") {
    static const std::map<std::string, SigmaMethod> methods{
        {"twoadic", SigmaMethod::twoadic},
        {"recursive", SigmaMethod::recursive},
        {"fold", SigmaMethod::fold}};
    w = sigma_prefix(cfg.length, methods.at(cfg.method));
    alphabet = 3;
  } else {
    w = fixed_point_prefix(arshon_even_morphism(cfg.alphabet), 1, cfg.length);
    alphabet = cfg.alphabet;
  }
  deliver(cfg, out, render(w, alphabet) + '\n');
  return kExitOk;
}

std::string read_word_source(const std::string& input) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream file(input, std::ios::binary);
    std::ostringstream buf;
    buf << file.rdbuf();
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
  return input;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const Word w = Word::parse(read_word_source(cfg.input));
  const auto occ = find_square(w);
  if (!occ) {
    deliver(cfg, out, "square-free length=" + std::to_string(w.size()) + '\n');
    return kExitOk;
  }
  const Word x = w.factor(occ->start, occ->period);
  deliver(cfg, out,
          "square start=" + std::to_string(occ->start) + " period=" +
              std::to_string(occ->period) + " factor=" + render(x + x) + '\n');
  return kExitVerificationFailed;
}

std::string offending_records(const SearchReport& report, bool (*is_bad)(const CandidateRecord&)) {
  SearchReport subset = report;
  subset.records.clear();
  subset.filter_stats.clear();
  for (const auto& rec : report.records) {
    if (is_bad(rec)) subset.records.push_back(rec);
  }
  // Drop header and summary lines; keep the records only.
  std::istringstream lines(to_text(subset));
  std::string line, kept;
  while (std::getline(lines, line)) {
    if (line.rfind("candidate=", 0) == 0) kept += line + '\n';
  }
  return kept;
}

std::string search_summary(const SearchReport& report) {
  std::ostringstream os;
  const auto survivors = report.survivors();
  os << report.kind << " candidates: " << report.records.size() << '\n';
  os << "survivors: " << survivors.size();
  for (const auto& rec : report.records) {
    if (rec.verdict == Verdict::survivor) {
      os << " (" << to_string(rec.spec);
      if (!rec.note.empty()) os << "; " << rec.note;
      os << ')';
    }
  }
  os << '\n';
  os << "undecided: " << report.undecided().size() << '\n';
  os << "refuted: " << report.refutations().size() << '\n';
  for (const auto& [name, count] : report.filter_stats) {
    os << "filter " << name << ": " << count << '\n';
  }
  return os.str();
}

int finish_search(const Config& cfg, const SearchReport& report, bool ok,
                  bool (*is_bad)(const CandidateRecord&), std::ostream& out) {
  std::string text;
  if (cfg.format == "report") {
    text = to_text(report);
  } else {
    if (cfg.verbose) text += offending_records(report, [](const CandidateRecord&) { return true; });
    text += search_summary(report);
    if (!ok) text += offending_records(report, is_bad);
  }
  deliver(cfg, out, text);
  return ok ? kExitOk : kExitVerificationFailed;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const SearchOptions options{cfg.threads};
  if (cfg.kind == "arshon-search") {
    const auto report = search_arshon_morphisms(cfg.bound ? cfg.bound : 30,
                                                cfg.check_len ? cfg.check_len : kDefaultArshonCheckLen,
                                                options);
    const bool ok = report.survivors() == std::vector{CandidateSpec{{1, 1, 1}}} &&
                    report.undecided().empty() &&
                    !report.filter_stats.contains("filtered-but-not-refuted");
    return finish_search(cfg, report, ok, [](const CandidateRecord& r) {
      return r.verdict != Verdict::refuted && r.spec != CandidateSpec{{1, 1, 1}};
    }, out);
  }
  if (cfg.kind == "sigma-search") {
    const std::size_t bound = cfg.bound ? cfg.bound : 64;
    const auto report = search_sigma_morphisms(cfg.max_x ? cfg.max_x : bound,
                                               cfg.max_y ? cfg.max_y : bound,
                                               cfg.check_len ? cfg.check_len : kDefaultSigmaCheckLen,
                                               options);
    const bool ok = report.survivors().empty() && report.undecided().empty() &&
                    !report.filter_stats.contains(kLateMismatchNotMod4);
    return finish_search(cfg, report, ok, [](const CandidateRecord& r) {
      return r.verdict != Verdict::refuted ||
             std::find(r.filters.begin(), r.filters.end(), kLateMismatchNotMod4) != r.filters.end();
    }, out);
  }
  if (cfg.kind == "lemma11") {
    const std::size_t limit = cfg.limit ? cfg.limit : 1'000'000;
    const bool ok = verify_odd_position_alternation(limit);
    deliver(cfg, out, "lemma11 limit=" + std::to_string(limit) + ": " + (ok ? "pass" : "fail") + '\n');
    return ok ? kExitOk : kExitVerificationFailed;
  }
  if (cfg.kind == "lemma13") {
    const std::size_t limit = cfg.limit ? cfg.limit : 2000;
    const bool ok = verify_sigma_product_rule(limit);
    deliver(cfg, out, "lemma13 limit=" + std::to_string(limit) + ": " + (ok ? "pass" : "fail") + '\n');
    return ok ? kExitOk : kExitVerificationFailed;
  }
  const auto report = verify_arshon_invariants(cfg.limit ? cfg.limit : 300'000);
  deliver(cfg, out, to_text(report));
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_dragon(const Config& cfg, std::ostream& out) {
  const Polyline path = turns_to_path(fold_sequence(cfg.depth));
  if (cfg.out.empty()) {
    out << render_svg(path, cfg.scale);
  } else {
    emit_svg(path, cfg.scale, cfg.out);
    out << "wrote " << path.points.size() << " points to " << cfg.out << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Arshon and sigma-sequence toolkit: generation, square checks, morphism searches",
               "wordseq"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Print a prefix of a sequence");
  generate->add_option("kind", cfg.kind, "arshon | sigma | arshon-n")
      ->required()
      ->check(CLI::IsMember({"arshon", "sigma", "arshon-n"}));
  generate->add_option("--length", cfg.length, "Number of letters")
      ->required()
      ->check(CLI::PositiveNumber);
  generate->add_option("--method", cfg.method, "sigma construction: twoadic | recursive | fold")
      ->check(CLI::IsMember({"twoadic", "recursive", "fold"}));
  generate->add_option("--n", cfg.alphabet, "Alphabet size for arshon-n (even, >= 4)");
  generate->add_option("--out", cfg.out, "Write to this file instead of stdout");

  auto* check = app.add_subcommand("check", "Check a word for squares");
  check->add_option("what", cfg.kind, "squares")->required()->check(CLI::IsMember({"squares"}));
  check->add_option("--input", cfg.input, "File containing the word, or the word itself")
      ->required();
  check->add_option("--out", cfg.out, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run a bounded search or invariant suite");
  verify->add_option("what", cfg.kind, "arshon-search | sigma-search | lemma11 | lemma13 | invariants")
      ->required()
      ->check(CLI::IsMember({"arshon-search", "sigma-search", "lemma11", "lemma13", "invariants"}));
  verify->add_option("--bound", cfg.bound, "Search bound on image lengths")->check(CLI::PositiveNumber);
  verify->add_option("--check-len", cfg.check_len, "Prefix length compared against f(w)")
      ->check(CLI::PositiveNumber);
  verify->add_option("--limit", cfg.limit, "Range limit for lemma and invariant checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-x", cfg.max_x, "sigma-search: maximum |f(1)|")->check(CLI::PositiveNumber);
  verify->add_option("--max-y", cfg.max_y, "sigma-search: maximum |f(3)|")->check(CLI::PositiveNumber);
  verify->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  verify->add_option("--format", cfg.format, "text | report")->check(CLI::IsMember({"text", "report"}));
  verify->add_flag("--verbose", cfg.verbose, "Print one line per candidate");
  verify->add_option("--out", cfg.out, "Write to this file instead of stdout");

  auto* dragon = app.add_subcommand("dragon", "Render the dragon curve as SVG");
  dragon->add_option("--depth", cfg.depth, "Number of folds")->required()->check(CLI::Range(1U, kMaxSigmaDepth));
  dragon->add_option("--scale", cfg.scale, "Pixels per lattice unit")->check(CLI::PositiveNumber);
  dragon->add_option("--out", cfg.out, "SVG destination (stdout if omitted)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      if (cfg.kind != "sigma" && generate->count("--method") != 0) {
        throw UsageError("--method applies to 'generate sigma' only");
      }
      return cmd_generate(cfg, out);
    }
    if (check->parsed()) return cmd_check(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    return cmd_dragon(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace wordseq::cli
