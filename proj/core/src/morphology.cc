#include "tenhundred/morphology.h"

#include <algorithm>
#include <limits>
#include <tuple>
#include <utility>

#include "tenhundred/error.h"

namespace tenhundred {
namespace {

Suffix SuffixOfKind(IrregularKind kind) {
  switch (kind) {
    case IrregularKind::kPast:
    case IrregularKind::kPastParticiple:
      return Suffix::kEd;
    case IrregularKind::kPresentParticiple:
      return Suffix::kIng;
    case IrregularKind::kThirdSingular:
    case IrregularKind::kPlural:
      return Suffix::kS;
    case IrregularKind::kComparative:
      return Suffix::kEr;
    case IrregularKind::kSuperlative:
      return Suffix::kEst;
    case IrregularKind::kFulForm:
      return Suffix::kFul;
    default:
      return Suffix::kNone;
  }
}

std::vector<Derivation> DeriveForms(const WordList& wl, const Orthography& ortho,
                                    std::size_t index) {
  const Lexeme& lex = wl.at(index);
  const std::vector<const IrregularForm*> irregulars = wl.irregulars_of(index);
  std::vector<Derivation> out;

  auto add = [&](Rule rule, std::string surface, Suffix suffix, bool irregular) {
    if (rule != Rule::kListed && surface == lex.surface) return;
    out.push_back(
        {lex.surface, index, rule, std::move(surface), suffix, irregular});
  };
  auto has_kind = [&](IrregularKind kind) {
    return std::any_of(irregulars.begin(), irregulars.end(),
                       [kind](const IrregularForm* f) { return f->kind == kind; });
  };
  auto add_irregular = [&](Rule rule, IrregularKind kind) {
    for (const IrregularForm* f : irregulars) {
      if (f->kind == kind) add(rule, f->form, SuffixOfKind(kind), true);
    }
  };

  add(Rule::kListed, lex.surface, Suffix::kNone, false);

  if (lex.pos.has(Pos::kVerb)) {
    for (IrregularKind k :
         {IrregularKind::kPast, IrregularKind::kPastParticiple,
          IrregularKind::kPresentParticiple, IrregularKind::kThirdSingular,
          IrregularKind::kPresent}) {
      add_irregular(Rule::kVerbInflection, k);
    }
    if (!has_kind(IrregularKind::kThirdSingular)) {
      add(Rule::kVerbInflection, ortho.apply_suffix(lex.surface, Suffix::kS),
          Suffix::kS, false);
    }
    if (!has_kind(IrregularKind::kPast)) {
      add(Rule::kVerbInflection, ortho.apply_suffix(lex.surface, Suffix::kEd),
          Suffix::kEd, false);
    }
    if (!has_kind(IrregularKind::kPresentParticiple)) {
      add(Rule::kVerbInflection, ortho.apply_suffix(lex.surface, Suffix::kIng),
          Suffix::kIng, false);
    }
    add(Rule::kVerbAgent, ortho.apply_suffix(lex.surface, Suffix::kEr),
        Suffix::kEr, false);
  }

  // "other" takes a plural although it is not a noun.
  if (lex.pos.has(Pos::kNoun) || lex.surface == "other") {
    if (has_kind(IrregularKind::kPlural)) {
      add_irregular(Rule::kNounPlural, IrregularKind::kPlural);
    } else {
      add(Rule::kNounPlural, ortho.apply_suffix(lex.surface, Suffix::kS),
          Suffix::kS, false);
    }
  }
  if (lex.pos.has(Pos::kNoun)) {
    add(Rule::kNounAdjective, ortho.apply_suffix(lex.surface, Suffix::kY),
        Suffix::kY, false);
  }

  if (lex.pos.has(Pos::kAdjective)) {
    if (has_kind(IrregularKind::kComparative)) {
      add_irregular(Rule::kAdjectiveDegree, IrregularKind::kComparative);
    } else {
      add(Rule::kAdjectiveDegree, ortho.apply_suffix(lex.surface, Suffix::kEr),
          Suffix::kEr, false);
    }
    if (has_kind(IrregularKind::kSuperlative)) {
      add_irregular(Rule::kAdjectiveDegree, IrregularKind::kSuperlative);
    } else {
      add(Rule::kAdjectiveDegree,
          ortho.apply_suffix(lex.surface, Suffix::kEst), Suffix::kEst, false);
    }
    add(Rule::kAdjectiveAdverb, ortho.apply_suffix(lex.surface, Suffix::kLy),
        Suffix::kLy, false);
    add(Rule::kAdjectiveNoun, ortho.apply_suffix(lex.surface, Suffix::kNess),
        Suffix::kNess, false);
  }

  add_irregular(Rule::kNounAdjective, IrregularKind::kFulForm);
  add_irregular(Rule::kPronounForm, IrregularKind::kPronounVariant);
  add_irregular(Rule::kNounVerbPair, IrregularKind::kNounVerbPair);
  add_irregular(Rule::kBaseForm, IrregularKind::kBaseFormPair);
  add_irregular(Rule::kAdjectiveVerb, IrregularKind::kAdjectiveVerb);
  add_irregular(Rule::kAcronym, IrregularKind::kAcronym);

  std::sort(out.begin(), out.end(), DerivationLess);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Bounded Levenshtein: exact when the distance is <= bound, otherwise any
// value > bound.
std::size_t BoundedEditDistance(std::string_view a, std::string_view b,
                                std::size_t bound) {
  const std::size_t n = a.size(), m = b.size();
  const std::size_t diff = n > m ? n - m : m - n;
  if (diff > bound) return bound + 1;
  std::vector<std::size_t> prev(m + 1), cur(m + 1);
  for (std::size_t j = 0; j <= m; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = i;
    std::size_t row_min = cur[0];
    for (std::size_t j = 1; j <= m; ++j) {
      std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
      row_min = std::min(row_min, cur[j]);
    }
    if (row_min > bound) return bound + 1;
    std::swap(prev, cur);
  }
  return prev[m];
}

}  // namespace

std::string RuleLabel(Rule r) {
  if (r == Rule::kExtra) return "extra";
  return std::to_string(RuleNumber(r));
}

bool DerivationLess(const Derivation& a, const Derivation& b) {
  return std::tie(a.root_index, a.rule, a.suffix, a.irregular, a.surface) <
         std::tie(b.root_index, b.rule, b.suffix, b.irregular, b.surface);
}

std::string_view VerdictName(Verdict v) {
  switch (v) {
    case Verdict::kAllowed: return "allowed";
    case Verdict::kExtra: return "extra";
    case Verdict::kRejected: return "rejected";
  }
  return "rejected";
}

std::size_t EditDistance(std::string_view a, std::string_view b) {
  return BoundedEditDistance(a, b, std::numeric_limits<std::size_t>::max() - 1);
}

Closure BuildClosure(const WordList& word_list, const Orthography& ortho) {
  Closure c;
  for (std::size_t i = 0; i < word_list.size(); ++i) {
    for (Derivation& d : DeriveForms(word_list, ortho, i)) {
      auto [it, inserted] = c.by_surface.try_emplace(d.surface);
      if (inserted) c.ordered.push_back(d.surface);
      it->second.push_back(std::move(d));
    }
  }
  for (auto& [surface, derivations] : c.by_surface) {
    std::sort(derivations.begin(), derivations.end(), DerivationLess);
  }
  return c;
}

Morphology::Morphology(std::shared_ptr<const WordList> word_list,
                       Orthography ortho, MorphologyOptions options)
    : word_list_(std::move(word_list)),
      ortho_(std::move(ortho)),
      options_(std::move(options)) {
  closure_ = BuildClosure(*word_list_, ortho_);
  BuildSuggestionIndex();
}

void Morphology::BuildSuggestionIndex() {
  for (std::size_t pos = 0; pos < closure_.ordered.size(); ++pos) {
    std::size_t len = closure_.ordered[pos].size();
    if (by_length_.size() <= len) by_length_.resize(len + 1);
    by_length_[len].push_back(static_cast<std::uint32_t>(pos));
  }
}

std::vector<Derivation> Morphology::derive_forms(const Lexeme& lexeme) const {
  std::optional<std::size_t> index = word_list_->index_of(lexeme.surface);
  if (!index || !(word_list_->at(*index).pos == lexeme.pos)) {
    throw Error(ErrorCode::kDomain,
                "'" + lexeme.surface + "' is not an entry of the word list");
  }
  return DeriveForms(*word_list_, ortho_, *index);
}

std::vector<Derivation> Morphology::derive_forms(std::size_t index) const {
  if (index >= word_list_->size()) {
    throw Error(ErrorCode::kDomain, "word list index out of range");
  }
  return DeriveForms(*word_list_, ortho_, index);
}

std::vector<Derivation> Morphology::analyze(std::string_view surface) const {
  auto it = closure_.by_surface.find(std::string(surface));
  if (it == closure_.by_surface.end()) return {};
  return it->second;
}

bool Morphology::is_extra(std::string_view surface) const {
  return std::find(options_.extra_words.begin(), options_.extra_words.end(),
                   surface) != options_.extra_words.end();
}

CheckResult Morphology::check_token(std::string_view surface) const {
  CheckResult r;
  r.surface = std::string(surface);
  if (is_extra(surface)) {
    r.verdict = Verdict::kExtra;
    r.derivations.push_back({"", Derivation::kNoRoot, Rule::kExtra,
                             r.surface, Suffix::kNone, false});
  } else {
    r.derivations = analyze(surface);
    r.verdict = r.derivations.empty() ? Verdict::kRejected : Verdict::kAllowed;
  }
  if (r.verdict != Verdict::kAllowed) {
    r.suggestions = suggest(surface, options_.suggestion_count);
  }
  return r;
}

std::vector<std::string> Morphology::suggest(std::string_view surface,
                                             std::size_t count) const {
  if (count == 0) return {};
  // (distance, not-listed, closure position), kept sorted; at most `count`
  // entries.
  using Entry = std::tuple<std::size_t, bool, std::uint32_t>;
  std::vector<Entry> best;
  auto bound = [&]() {
    return best.size() < count ? std::numeric_limits<std::size_t>::max() - 1
                               : std::get<0>(best.back());
  };
  auto consider = [&](std::uint32_t pos) {
    const std::string& cand = closure_.ordered[pos];
    if (cand == surface) return;
    std::size_t d = BoundedEditDistance(surface, cand, bound());
    Entry entry{d, !word_list_->is_listed(cand), pos};
    if (best.size() == count && !(entry < best.back())) return;
    best.insert(std::upper_bound(best.begin(), best.end(), entry), entry);
    if (best.size() > count) best.pop_back();
  };

  const std::size_t len = surface.size();
  for (std::size_t delta = 0;; ++delta) {
    if (delta > bound()) break;
    bool any_bucket = false;
    if (len + delta < by_length_.size()) {
      any_bucket = true;
      for (std::uint32_t pos : by_length_[len + delta]) consider(pos);
    }
    if (delta > 0 && delta <= len) {
      any_bucket = true;
      if (len - delta < by_length_.size()) {
        for (std::uint32_t pos : by_length_[len - delta]) consider(pos);
      }
    }
    if (!any_bucket) break;
  }

  std::vector<std::string> out;
  out.reserve(best.size());
  for (const auto& [d, unlisted, pos] : best) {
    out.push_back(closure_.ordered[pos]);
  }
  return out;
}

std::string Morphology::ExportClosureTsv() const {
  std::string out;
  for (const std::string& surface : closure_.ordered) {
    for (const Derivation& d : closure_.by_surface.at(surface)) {
      out += surface;
      out += '\t';
      out += d.root;
      out += '\t';
      out += RuleLabel(d.rule);
      out += '\n';
    }
  }
  return out;
}

}  // namespace tenhundred
