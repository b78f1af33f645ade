#include "tenhundred/analyzer.h"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "tenhundred/error.h"

namespace tenhundred {
namespace {

struct BinInfo {
  std::string_view key;
  std::string_view label;
};

constexpr std::array<BinInfo, kNumBins> kBinInfo = {{
    {"listed_form", "listed form"},
    {"any_s", "* + s"},
    {"noun_verb_s", "noun-verb + s"},
    {"any_er", "* + er"},
    {"verb_ing", "verb + ing"},
    {"verb_er", "verb + er"},
    {"verb_ed", "verb + ed"},
    {"irregular_verb", "irr. verb form"},
    {"noun_s", "noun + s"},
    {"verb_s", "verb + s"},
    {"adj_er", "adj. + er"},
    {"adj_est", "adj. + est"},
    {"verb_adj_er", "verb-adj. + er"},
    {"noun_y", "noun + y"},
    {"extra_word", "extra word"},
    {"basic_form", "basic form"},
    {"pronoun_form", "pronoun form"},
    {"adj_ly", "adj. + ly"},
    {"noun_to_verb", "noun to verb"},
    {"adj_ness", "adj. + ness"},
    {"irregular_noun", "irr. noun form"},
    {"adj_to_verb", "adj. to verb"},
    {"verb_to_noun", "verb to noun"},
    {"other_s", "other + s"},
    {"ful_form", "-ful form"},
    {"acronym", "acronym"},
}};

constexpr std::array<Bin, kNumBins> kAllBins = {
    Bin::kListedForm,  Bin::kAnyS,          Bin::kNounVerbS,  Bin::kAnyEr,
    Bin::kVerbIng,     Bin::kVerbEr,        Bin::kVerbEd,     Bin::kIrregularVerb,
    Bin::kNounS,       Bin::kVerbS,         Bin::kAdjEr,      Bin::kAdjEst,
    Bin::kVerbAdjEr,   Bin::kNounY,         Bin::kExtraWord,  Bin::kBasicForm,
    Bin::kPronounForm, Bin::kAdjLy,         Bin::kNounToVerb, Bin::kAdjNess,
    Bin::kIrregularNoun, Bin::kAdjToVerb,   Bin::kVerbToNoun, Bin::kOtherS,
    Bin::kFulForm,     Bin::kAcronym,
};

std::size_t Idx(Bin b) { return static_cast<std::size_t>(b); }

Bin BinOfDerivation(const Derivation& d, const WordList& wl) {
  switch (d.rule) {
    case Rule::kListed:
      return Bin::kListedForm;
    case Rule::kVerbInflection:
      if (d.irregular) return Bin::kIrregularVerb;
      if (d.suffix == Suffix::kS) return Bin::kVerbS;
      if (d.suffix == Suffix::kEd) return Bin::kVerbEd;
      return Bin::kVerbIng;
    case Rule::kVerbAgent:
      return Bin::kVerbEr;
    case Rule::kNounPlural:
      if (d.root == "other") return Bin::kOtherS;
      return d.irregular ? Bin::kIrregularNoun : Bin::kNounS;
    case Rule::kAdjectiveDegree:
      return d.suffix == Suffix::kEst ? Bin::kAdjEst : Bin::kAdjEr;
    case Rule::kNounAdjective:
      return d.suffix == Suffix::kFul ? Bin::kFulForm : Bin::kNounY;
    case Rule::kAdjectiveAdverb:
      return Bin::kAdjLy;
    case Rule::kAdjectiveNoun:
      return Bin::kAdjNess;
    case Rule::kPronounForm:
      return Bin::kPronounForm;
    case Rule::kNounVerbPair:
      return wl.at(d.root_index).pos.has(Pos::kNoun) ? Bin::kNounToVerb
                                                     : Bin::kVerbToNoun;
    case Rule::kBaseForm:
      return Bin::kBasicForm;
    case Rule::kAdjectiveVerb:
      return Bin::kAdjToVerb;
    case Rule::kAcronym:
      return Bin::kAcronym;
    case Rule::kExtra:
      return Bin::kExtraWord;
  }
  return Bin::kExtraWord;
}

bool HasSameRootPair(std::span<const Derivation> ds, Rule a, Suffix sa, Rule b,
                     Suffix sb) {
  for (const Derivation& x : ds) {
    if (x.rule != a || x.suffix != sa) continue;
    for (const Derivation& y : ds) {
      if (y.rule == b && y.suffix == sb && y.root_index == x.root_index) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::string_view BinKey(Bin bin) { return kBinInfo[Idx(bin)].key; }
std::string_view BinLabel(Bin bin) { return kBinInfo[Idx(bin)].label; }
bool IsAggregate(Bin bin) { return bin == Bin::kAnyS || bin == Bin::kAnyEr; }
std::span<const Bin> AllBins() { return kAllBins; }

void RuleHistogram::add(Bin bin, std::uint64_t n) {
  if (IsAggregate(bin)) {
    throw Error(ErrorCode::kDomain, "cannot add to an aggregate bin");
  }
  counts_[Idx(bin)] += n;
  total_ += n;
  switch (bin) {
    case Bin::kNounVerbS:
    case Bin::kNounS:
    case Bin::kVerbS:
    case Bin::kOtherS:
      counts_[Idx(Bin::kAnyS)] += n;
      break;
    case Bin::kVerbEr:
    case Bin::kAdjEr:
    case Bin::kVerbAdjEr:
      counts_[Idx(Bin::kAnyEr)] += n;
      break;
    default:
      break;
  }
}

void RuleHistogram::merge(const RuleHistogram& other) {
  for (Bin b : kAllBins) {
    if (!IsAggregate(b) && other.count(b) > 0) add(b, other.count(b));
  }
}

std::uint64_t RuleHistogram::count(Bin bin) const { return counts_[Idx(bin)]; }

Bin ClassifyDerivations(std::span<const Derivation> ds, const WordList& wl) {
  if (ds.empty()) throw Error(ErrorCode::kDomain, "no derivations to classify");
  for (const Derivation& d : ds) {
    if (d.rule == Rule::kListed) return Bin::kListedForm;
  }
  for (const Derivation& d : ds) {
    if (d.rule == Rule::kExtra) return Bin::kExtraWord;
  }
  if (HasSameRootPair(ds, Rule::kVerbInflection, Suffix::kS, Rule::kNounPlural,
                      Suffix::kS)) {
    return Bin::kNounVerbS;
  }
  if (HasSameRootPair(ds, Rule::kVerbAgent, Suffix::kEr,
                      Rule::kAdjectiveDegree, Suffix::kEr)) {
    return Bin::kVerbAdjEr;
  }
  const Derivation* pick = &ds.front();
  for (const Derivation& d : ds) {
    if (d.rule < pick->rule) pick = &d;
  }
  return BinOfDerivation(*pick, wl);
}

StreamClassification ClassifyStream(std::span<const Token> tokens,
                                    const Morphology& morphology) {
  std::map<std::string, std::uint64_t, std::less<>> counts;
  for (const Token& t : tokens) ++counts[t.surface];

  StreamClassification out;
  out.token_count = tokens.size();
  for (const auto& [surface, n] : counts) {
    CheckResult r = morphology.check_token(surface);
    if (r.verdict == Verdict::kRejected) {
      out.underivable.emplace_back(surface, n);
    } else {
      Bin bin = ClassifyDerivations(r.derivations, morphology.word_list());
      out.forms.add(bin, 1);
      out.occurrences.add(bin, n);
    }
    out.results.push_back(std::move(r));
  }
  return out;
}

Coverage ComputeCoverage(const RuleHistogram& forms,
                         const RuleHistogram& occurrences) {
  if (forms.total() == 0 || occurrences.total() == 0) {
    throw Error(ErrorCode::kUndefined, "coverage of an empty corpus");
  }
  Coverage c;
  c.token_coverage = static_cast<double>(occurrences.count(Bin::kListedForm)) /
                     static_cast<double>(occurrences.total());
  c.form_coverage = static_cast<double>(forms.count(Bin::kListedForm)) /
                    static_cast<double>(forms.total());
  return c;
}

std::string Lemmatize(std::string_view surface, const Morphology& morphology) {
  const WordList& wl = morphology.word_list();
  if (wl.is_listed(surface) || morphology.is_extra(surface)) {
    return std::string(surface);
  }
  std::vector<Derivation> ds = morphology.analyze(surface);
  if (ds.empty()) return std::string(surface);
  std::string best = ds.front().root;
  for (const Derivation& d : ds) best = std::min(best, d.root);
  return best;
}

std::vector<RankedTerm> RankFrequency(std::span<const Token> tokens,
                                      RankMode mode,
                                      const Morphology& morphology) {
  std::unordered_map<std::string, std::uint64_t> surface_counts;
  for (const Token& t : tokens) ++surface_counts[t.surface];

  std::unordered_map<std::string, std::uint64_t> counts;
  if (mode == RankMode::kSurface) {
    counts = std::move(surface_counts);
  } else {
    for (const auto& [surface, n] : surface_counts) {
      counts[Lemmatize(surface, morphology)] += n;
    }
  }

  std::vector<RankedTerm> table;
  table.reserve(counts.size());
  for (auto& [term, n] : counts) table.push_back({0, term, n});
  std::sort(table.begin(), table.end(),
            [](const RankedTerm& a, const RankedTerm& b) {
              if (a.count != b.count) return a.count > b.count;
              return a.term < b.term;
            });
  for (std::size_t i = 0; i < table.size(); ++i) table[i].rank = i + 1;
  return table;
}

std::string RankFrequencyTsv(std::span<const RankedTerm> table) {
  std::string out;
  for (const RankedTerm& r : table) {
    out += std::to_string(r.rank);
    out += '\t';
    out += r.term;
    out += '\t';
    out += std::to_string(r.count);
    out += '\n';
  }
  return out;
}

}  // namespace tenhundred
