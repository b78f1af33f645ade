#include "cli.h"

#include <algorithm>
#include <charconv>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "tenhundred/analyzer.h"
#include "tenhundred/error.h"
#include "tenhundred/report.h"
#include "tenhundred/service.h"

namespace tenhundred::cli {
namespace {

using nlohmann::ordered_json;

struct LineColumn {
  std::size_t line;
  std::size_t column;  // 1-based, in code points
};

class LineIndex {
 public:
  explicit LineIndex(std::string_view text) : text_(text) {
    starts_.push_back(0);
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '\n') starts_.push_back(i + 1);
    }
  }

  LineColumn locate(std::size_t offset) const {
    auto it = std::upper_bound(starts_.begin(), starts_.end(), offset);
    std::size_t line = static_cast<std::size_t>(it - starts_.begin());
    std::size_t column = 1;
    for (std::size_t i = starts_[line - 1]; i < offset; ++i) {
      if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) ++column;
    }
    return {line, column};
  }

 private:
  std::string_view text_;
  std::vector<std::size_t> starts_;
};

std::string Join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out += sep;
    out += items[i];
  }
  return out;
}

std::string RulesText(const std::vector<int>& rules) {
  std::vector<std::string> parts;
  for (int r : rules) parts.push_back(std::to_string(r));
  return Join(parts, ",");
}

bool WriteFile(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

ordered_json HistogramJson(const StreamClassification& sc) {
  ordered_json bins = ordered_json::array();
  for (Bin b : AllBins()) {
    ordered_json j;
    j["key"] = std::string(BinKey(b));
    j["label"] = std::string(BinLabel(b));
    j["aggregate"] = IsAggregate(b);
    j["forms"] = sc.forms.count(b);
    j["occurrences"] = sc.occurrences.count(b);
    bins.push_back(std::move(j));
  }
  ordered_json out;
  out["tokens"] = sc.token_count;
  out["distinct_forms"] = sc.results.size();
  out["totals"] = {{"forms", sc.forms.total()},
                   {"occurrences", sc.occurrences.total()}};
  if (sc.forms.total() > 0) {
    Coverage c = ComputeCoverage(sc.forms, sc.occurrences);
    out["coverage"] = {{"token", c.token_coverage}, {"form", c.form_coverage}};
  } else {
    out["coverage"] = nullptr;
  }
  out["bins"] = std::move(bins);
  ordered_json under = ordered_json::array();
  for (const auto& [surface, n] : sc.underivable) {
    under.push_back({{"surface", surface}, {"count", n}});
  }
  out["underivable"] = std::move(under);
  return out;
}

std::string FormatDouble(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace

DataPaths ResolvePaths(const RunConfig& config) {
  DataPaths p =
      DataPaths::InDirectory(config.data_dir ? *config.data_dir : DefaultDataDir());
  if (config.word_list) p.word_list = *config.word_list;
  if (config.irregular) p.irregular = *config.irregular;
  if (config.doubling) p.doubling = *config.doubling;
  if (config.contractions) p.contractions = *config.contractions;
  return p;
}

std::optional<std::string> ReadInput(const std::string& path) {
  if (path == "-") {
    std::string s{std::istreambuf_iterator<char>(std::cin),
                  std::istreambuf_iterator<char>()};
    if (std::cin.bad()) return std::nullopt;
    return s;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::string s{std::istreambuf_iterator<char>(in),
                std::istreambuf_iterator<char>()};
  if (in.bad()) return std::nullopt;
  return s;
}

int CmdCheck(const Toolkit& toolkit, const RunConfig& config,
             std::string_view text, std::ostream& out, std::ostream& err) {
  CheckReport report;
  try {
    report = RunCheck(toolkit, text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnreadable;
  }
  LineIndex index(text);
  switch (config.format) {
    case Format::kJson: {
      ordered_json j = ordered_json::parse(CheckReportJson(report));
      for (std::size_t i = 0; i < report.annotations.size(); ++i) {
        LineColumn lc = index.locate(report.annotations[i].span.begin);
        j["annotations"][i]["line"] = lc.line;
        j["annotations"][i]["column"] = lc.column;
      }
      out << j.dump() << "\n";
      break;
    }
    case Format::kTsv:
      out << "line\tcolumn\tstart\tend\tsurface\tverdict\trules\tsuggestions\n";
      for (const Annotation& a : report.annotations) {
        LineColumn lc = index.locate(a.span.begin);
        out << lc.line << '\t' << lc.column << '\t' << a.span.begin << '\t'
            << a.span.end << '\t' << a.surface << '\t' << VerdictName(a.verdict)
            << '\t' << RulesText(a.rules) << '\t' << Join(a.suggestions, ",")
            << "\n";
      }
      break;
    case Format::kPlain:
      for (const Annotation& a : report.annotations) {
        LineColumn lc = index.locate(a.span.begin);
        out << lc.line << ':' << lc.column << ": " << a.surface << " ("
            << VerdictName(a.verdict) << ")";
        if (!a.suggestions.empty()) {
          out << " try: " << Join(a.suggestions, ", ");
        }
        out << "\n";
      }
      break;
  }
  if (report.stats.rejected > 0) return kExitRejected;
  if (report.stats.extra > 0) return kExitExtra;
  return kExitOk;
}

int CmdAnalyze(const Toolkit& toolkit, const RunConfig& config,
               const std::vector<std::string>& texts, std::ostream& out,
               std::ostream& err) {
  std::vector<Token> tokens;
  try {
    for (const std::string& text : texts) {
      std::vector<Token> part = toolkit.pipeline().normalize_and_tokenize(text);
      std::move(part.begin(), part.end(), std::back_inserter(tokens));
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnreadable;
  }
  if (tokens.empty()) {
    err << "error: corpus contains no tokens\n";
    return kExitEmptyCorpus;
  }

  StreamClassification sc = ClassifyStream(tokens, toolkit.morphology());
  ordered_json hist = HistogramJson(sc);
  std::vector<RankedTerm> surface =
      RankFrequency(tokens, RankMode::kSurface, toolkit.morphology());
  std::vector<RankedTerm> lemmas =
      RankFrequency(tokens, RankMode::kLemmatized, toolkit.morphology());

  std::error_code ec;
  std::filesystem::create_directories(config.out_dir, ec);
  const std::filesystem::path dir = config.out_dir;
  if (!WriteFile(dir / "histogram.json", hist.dump(2) + "\n") ||
      !WriteFile(dir / "rank_surface.tsv", RankFrequencyTsv(surface)) ||
      !WriteFile(dir / "rank_lemmatized.tsv", RankFrequencyTsv(lemmas))) {
    err << "error: cannot write reports to " << dir.string() << "\n";
    return kExitUnreadable;
  }

  switch (config.format) {
    case Format::kJson:
      out << hist.dump() << "\n";
      break;
    case Format::kTsv:
    case Format::kPlain:
      out << "tokens\t" << sc.token_count << "\n";
      out << "distinct_forms\t" << sc.results.size() << "\n";
      if (!hist["coverage"].is_null()) {
        out << "token_coverage\t"
            << FormatDouble(hist["coverage"]["token"].get<double>()) << "\n";
        out << "form_coverage\t"
            << FormatDouble(hist["coverage"]["form"].get<double>()) << "\n";
      }
      for (Bin b : AllBins()) {
        out << BinKey(b) << '\t' << sc.forms.count(b) << '\t'
            << sc.occurrences.count(b) << "\n";
      }
      out << "underivable\t" << sc.underivable.size() << "\n";
      break;
  }
  return kExitOk;
}

std::vector<std::uint64_t> ParseCounts(std::string_view tsv) {
  std::vector<std::uint64_t> counts;
  std::size_t lineno = 0, pos = 0;
  while (pos < tsv.size()) {
    std::size_t nl = tsv.find('\n', pos);
    std::string_view line =
        tsv.substr(pos, nl == std::string_view::npos ? tsv.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? tsv.size() : nl + 1;
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == '#') continue;
    std::string_view field = line.substr(line.rfind('\t') + 1);
    std::uint64_t v = 0;
    auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || end != field.data() + field.size()) {
      // A header row is tolerated on the first line only.
      if (lineno == 1 && counts.empty()) continue;
      throw ParseError(lineno, "count is not a non-negative integer");
    }
    counts.push_back(v);
  }
  return counts;
}

int CmdFit(const RunConfig& config, std::string_view tsv, std::ostream& out,
           std::ostream& err) {
  std::vector<std::uint64_t> counts;
  try {
    counts = ParseCounts(tsv);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnreadable;
  }
  std::erase(counts, 0);

  PowerLawFit pl;
  ExponentialFit ex;
  LRTestResult lr;
  std::size_t n = counts.size();
  try {
    CountSample sample(std::move(counts));
    pl = config.xmin ? FitPowerLawAt(sample, *config.xmin) : FitPowerLaw(sample);
    ex = FitExponential(sample, pl.xmin);
    lr = LikelihoodRatioTest(sample, pl, ex, config.threshold);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDegenerate;
  }

  if (config.format == Format::kJson) {
    ordered_json j;
    j["n"] = n;
    j["power_law"] = {{"alpha", pl.alpha},
                      {"xmin", pl.xmin},
                      {"ks", pl.ks},
                      {"ntail", pl.ntail},
                      {"small_tail", pl.small_tail}};
    j["exponential"] = {{"rate", ex.rate}, {"xmin", ex.xmin}, {"ntail", ex.ntail}};
    j["likelihood_ratio"] = {{"ratio", lr.ratio},
                             {"p_value", lr.p_value},
                             {"threshold", config.threshold},
                             {"preferred", PreferenceName(lr.preferred)}};
    out << j.dump() << "\n";
  } else {
    out << "n\t" << n << "\n"
        << "alpha\t" << FormatDouble(pl.alpha) << "\n"
        << "xmin\t" << pl.xmin << "\n"
        << "ks\t" << FormatDouble(pl.ks) << "\n"
        << "ntail\t" << pl.ntail << "\n"
        << "rate\t" << FormatDouble(ex.rate) << "\n"
        << "ratio\t" << FormatDouble(lr.ratio) << "\n"
        << "p_value\t" << FormatDouble(lr.p_value) << "\n"
        << "preferred\t" << PreferenceName(lr.preferred) << "\n";
  }
  if (pl.small_tail) {
    err << "warning: only " << pl.ntail << " points at or above xmin\n";
  }
  return kExitOk;
}

int CmdExpand(const Toolkit& toolkit, const RunConfig& config,
              std::string_view word, std::ostream& out, std::ostream& err) {
  std::string folded(word);
  std::transform(folded.begin(), folded.end(), folded.begin(), [](char c) {
    return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
  });
  std::vector<Derivation> ds;
  if (config.reverse) {
    ds = toolkit.morphology().check_token(folded).derivations;
  } else {
    std::optional<std::size_t> index = toolkit.word_list().index_of(folded);
    if (!index) {
      err << "error: '" << folded << "' is not on the word list\n";
      return kExitNotListed;
    }
    ds = toolkit.morphology().derive_forms(*index);
  }
  if (config.format == Format::kJson) {
    out << DerivationsJson(folded, ds, config.reverse) << "\n";
    return kExitOk;
  }
  if (config.format == Format::kTsv) out << "surface\trule\troot\tsuffix\n";
  for (const Derivation& d : ds) {
    out << d.surface << '\t' << RuleLabel(d.rule) << '\t'
        << (d.rule == Rule::kExtra ? "-" : d.root) << '\t'
        << SuffixName(d.suffix) << "\n";
  }
  return kExitOk;
}

int CmdServe(std::shared_ptr<const Toolkit> toolkit, const RunConfig& config,
             std::ostream& err) {
  std::string host = config.serve_addr;
  int port = 8080;
  if (std::size_t colon = host.rfind(':'); colon != std::string::npos) {
    std::string_view p = std::string_view(host).substr(colon + 1);
    auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), port);
    if (ec != std::errc() || end != p.data() + p.size() || port < 0 ||
        port > 65535) {
      err << "error: bad --serve-addr '" << config.serve_addr << "'\n";
      return kExitUsage;
    }
    host.resize(colon);
  }
  ServiceOptions options;
  options.cors_origin = config.cors_origin;
  options.max_body_bytes = config.max_body_bytes;
  auto service = std::make_shared<const CheckService>(std::move(toolkit), options);
  HttpServer server(service);

  // Handle SIGINT/SIGTERM synchronously in this thread; the server threads
  // inherit the blocked mask.
  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  int bound = 0;
  try {
    bound = server.bind(host, port);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnreadable;
  }
  err << "listening on http://" << host << ":" << bound << "\n";
  std::thread worker([&server] { server.serve(); });
  int sig = 0;
  sigwait(&signals, &sig);
  server.stop();
  worker.join();
  return kExitOk;
}

}  // namespace tenhundred::cli
