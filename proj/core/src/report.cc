#include "tenhundred/report.h"

#include <unordered_map>

#include "json.hpp"

namespace tenhundred {
namespace {

using nlohmann::ordered_json;

ordered_json DerivationJson(const Derivation& d) {
  ordered_json j;
  j["surface"] = d.surface;
  if (d.rule == Rule::kExtra) {
    j["root"] = nullptr;
    j["rule"] = "extra";
  } else {
    j["root"] = d.root;
    j["rule"] = RuleNumber(d.rule);
  }
  j["suffix"] = std::string(SuffixName(d.suffix));
  j["irregular"] = d.irregular;
  return j;
}

}  // namespace

CheckReport RunCheck(const Toolkit& toolkit, std::string_view text) {
  std::vector<Token> tokens = toolkit.pipeline().normalize_and_tokenize(text);
  std::unordered_map<std::string, CheckResult> memo;
  CheckReport report;
  report.stats.tokens = tokens.size();
  for (const Token& t : tokens) {
    auto it = memo.find(t.surface);
    if (it == memo.end()) {
      it = memo.emplace(t.surface, toolkit.morphology().check_token(t.surface))
               .first;
    }
    const CheckResult& r = it->second;
    switch (r.verdict) {
      case Verdict::kAllowed: ++report.stats.allowed; continue;
      case Verdict::kExtra: ++report.stats.extra; break;
      case Verdict::kRejected: ++report.stats.rejected; break;
    }
    Annotation a;
    a.span = t.span;
    a.surface = t.surface;
    a.verdict = r.verdict;
    for (const Derivation& d : r.derivations) {
      if (d.rule != Rule::kExtra) a.rules.push_back(RuleNumber(d.rule));
    }
    a.suggestions = r.suggestions;
    report.annotations.push_back(std::move(a));
  }
  if (report.stats.tokens > 0) {
    report.stats.coverage = static_cast<double>(report.stats.allowed) /
                            static_cast<double>(report.stats.tokens);
  }
  return report;
}

std::string CheckReportJson(const CheckReport& report) {
  ordered_json annotations = ordered_json::array();
  for (const Annotation& a : report.annotations) {
    ordered_json j;
    j["start"] = a.span.begin;
    j["end"] = a.span.end;
    j["surface"] = a.surface;
    j["verdict"] = std::string(VerdictName(a.verdict));
    j["rules"] = a.rules;
    j["suggestions"] = a.suggestions;
    annotations.push_back(std::move(j));
  }
  ordered_json stats;
  stats["tokens"] = report.stats.tokens;
  stats["allowed"] = report.stats.allowed;
  stats["extra"] = report.stats.extra;
  stats["rejected"] = report.stats.rejected;
  if (report.stats.coverage) {
    stats["coverage"] = *report.stats.coverage;
  } else {
    stats["coverage"] = nullptr;
  }
  ordered_json out;
  out["annotations"] = std::move(annotations);
  out["stats"] = std::move(stats);
  return out.dump();
}

std::string DerivationsJson(std::string_view word,
                            std::span<const Derivation> derivations,
                            bool reverse) {
  ordered_json out;
  out["word"] = std::string(word);
  out["direction"] = reverse ? "analyze" : "generate";
  ordered_json list = ordered_json::array();
  for (const Derivation& d : derivations) list.push_back(DerivationJson(d));
  out["derivations"] = std::move(list);
  return out.dump();
}

std::string WordListJson(const WordList& word_list) {
  ordered_json entries = ordered_json::array();
  for (const Lexeme& lex : word_list.entries()) {
    ordered_json pos = ordered_json::array();
    for (Pos p : lex.pos.items()) pos.push_back(std::string(PosName(p)));
    entries.push_back({{"surface", lex.surface}, {"pos", std::move(pos)}});
  }
  ordered_json out;
  out["version"] = word_list.ContentHash();
  out["size"] = word_list.size();
  out["entries"] = std::move(entries);
  return out.dump();
}

}  // namespace tenhundred
