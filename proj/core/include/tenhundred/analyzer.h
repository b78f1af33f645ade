#ifndef TENHUNDRED_ANALYZER_H_
#define TENHUNDRED_ANALYZER_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tenhundred/morphology.h"
#include "tenhundred/textpipe.h"

namespace tenhundred {

// Rule-origin categories. kAnyS and kAnyEr are aggregates; every other bin is
// disjoint.
enum class Bin : std::uint8_t {
  kListedForm,
  kAnyS,
  kNounVerbS,
  kAnyEr,
  kVerbIng,
  kVerbEr,
  kVerbEd,
  kIrregularVerb,
  kNounS,
  kVerbS,
  kAdjEr,
  kAdjEst,
  kVerbAdjEr,
  kNounY,
  kExtraWord,
  kBasicForm,
  kPronounForm,
  kAdjLy,
  kNounToVerb,
  kAdjNess,
  kIrregularNoun,
  kAdjToVerb,
  kVerbToNoun,
  kOtherS,
  kFulForm,
  kAcronym,
};

inline constexpr std::size_t kNumBins = 26;

std::string_view BinKey(Bin bin);    // stable machine key, e.g. "noun_verb_s"
std::string_view BinLabel(Bin bin);  // display label, e.g. "noun-verb + s"
bool IsAggregate(Bin bin);
std::span<const Bin> AllBins();

enum class HistogramMode : std::uint8_t { kWordForms, kWordOccurrences };

class RuleHistogram {
 public:
  explicit RuleHistogram(HistogramMode mode) : mode_(mode) {}

  HistogramMode mode() const { return mode_; }

  // Adds to a disjoint bin; aggregates follow automatically.
  void add(Bin bin, std::uint64_t n = 1);
  void merge(const RuleHistogram& other);

  std::uint64_t count(Bin bin) const;
  std::uint64_t total() const { return total_; }

 private:
  HistogramMode mode_;
  std::array<std::uint64_t, kNumBins> counts_{};
  std::uint64_t total_ = 0;
};

// The bin of one derivable or extra surface. Listed forms win; -s forms
// derivable both as plural and third person of the same root are
// noun-verb + s; -er forms derivable both as agent noun and comparative of
// the same root are verb-adj. + er; otherwise the lowest-numbered rule
// decides.
Bin ClassifyDerivations(std::span<const Derivation> derivations,
                        const WordList& word_list);

struct StreamClassification {
  RuleHistogram forms{HistogramMode::kWordForms};
  RuleHistogram occurrences{HistogramMode::kWordOccurrences};
  // One result per distinct surface, alphabetical.
  std::vector<CheckResult> results;
  // Distinct underivable surfaces with their occurrence counts,
  // alphabetical. Excluded from both histograms.
  std::vector<std::pair<std::string, std::uint64_t>> underivable;
  std::uint64_t token_count = 0;
};

StreamClassification ClassifyStream(std::span<const Token> tokens,
                                    const Morphology& morphology);

struct Coverage {
  double token_coverage = 0;
  double form_coverage = 0;
};

// Listed-form share of occurrences and of forms. Throws Error(kUndefined)
// when either histogram is empty.
Coverage ComputeCoverage(const RuleHistogram& forms,
                         const RuleHistogram& occurrences);

enum class RankMode : std::uint8_t { kSurface, kLemmatized };

struct RankedTerm {
  std::size_t rank = 0;
  std::string term;
  std::uint64_t count = 0;

  friend bool operator==(const RankedTerm&, const RankedTerm&) = default;
};

// Listed surfaces lemmatize to themselves; otherwise the shared root of all
// derivations, or the alphabetically first root when they disagree.
// Extra and underivable surfaces stay as they are.
std::string Lemmatize(std::string_view surface, const Morphology& morphology);

// Counts sorted descending, ties alphabetical, ranks from 1.
std::vector<RankedTerm> RankFrequency(std::span<const Token> tokens,
                                      RankMode mode,
                                      const Morphology& morphology);

// `rank<TAB>term<TAB>count` lines.
std::string RankFrequencyTsv(std::span<const RankedTerm> table);

}  // namespace tenhundred

#endif  // TENHUNDRED_ANALYZER_H_
