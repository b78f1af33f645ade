#ifndef TENHUNDRED_MORPHOLOGY_H_
#define TENHUNDRED_MORPHOLOGY_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tenhundred/lexicon.h"
#include "tenhundred/orthography.h"

namespace tenhundred {

// The thirteen production rules, numbered as they are reported everywhere
// (reports, TSV exports, the HTTP API), plus the tolerated extra words.
enum class Rule : std::uint8_t {
  kListed = 1,          // the list entry itself
  kVerbInflection = 2,  // -s, -ed, -ing and irregular conjugations
  kVerbAgent = 3,       // verb + -er ("carrier", "talker")
  kNounPlural = 4,      // noun + -s, irregular plurals, "others"
  kAdjectiveDegree = 5, // -er / -est, irregular comparatives ("worse")
  kNounAdjective = 6,   // noun + -y, table-driven -ful ("colorful")
  kAdjectiveAdverb = 7, // adjective + -ly
  kAdjectiveNoun = 8,   // adjective + -ness
  kPronounForm = 9,     // case/possessive variants (them -> they)
  kNounVerbPair = 10,   // think -> thought, life -> live (+ deduced forms)
  kBaseForm = 11,       // personal -> person, building -> build
  kAdjectiveVerb = 12,  // low -> lower, lowering, lowered
  kAcronym = 13,        // television -> tv
  kExtra = 14,          // used but not licensed by any rule
};

inline constexpr int RuleNumber(Rule r) { return static_cast<int>(r); }
std::string RuleLabel(Rule r);  // "1".."13" or "extra"

struct Derivation {
  static constexpr std::size_t kNoRoot = static_cast<std::size_t>(-1);

  std::string root;  // list surface of the root ("" for extra words)
  std::size_t root_index = kNoRoot;
  Rule rule = Rule::kListed;
  std::string surface;
  Suffix suffix = Suffix::kNone;
  bool irregular = false;

  friend bool operator==(const Derivation&, const Derivation&) = default;
};

// Deterministic order: root list position, rule, suffix, irregular, surface.
bool DerivationLess(const Derivation& a, const Derivation& b);

enum class Verdict : std::uint8_t { kAllowed, kExtra, kRejected };
std::string_view VerdictName(Verdict v);

struct CheckResult {
  std::string surface;
  Verdict verdict = Verdict::kRejected;
  std::vector<Derivation> derivations;
  std::vector<std::string> suggestions;
};

// Every permitted surface with all of its derivations.
struct Closure {
  std::unordered_map<std::string, std::vector<Derivation>> by_surface;
  // Surfaces ordered by the list position of their first root, then by
  // generation order. This is the tie-break order for suggestions.
  std::vector<std::string> ordered;

  std::size_t size() const { return ordered.size(); }
  bool contains(std::string_view s) const {
    return by_surface.contains(std::string(s));
  }
};

struct MorphologyOptions {
  std::vector<std::string> extra_words = {"some", "mad",   "hat",
                                          "apart", "rid", "worth"};
  std::size_t suggestion_count = 5;
};

// Generator (root -> forms) and recognizer (surface -> derivations) over an
// immutable word list. Construction materializes the closure; afterwards
// every method is const and thread-safe.
class Morphology {
 public:
  Morphology(std::shared_ptr<const WordList> word_list, Orthography ortho,
             MorphologyOptions options = {});

  const WordList& word_list() const { return *word_list_; }
  const Orthography& orthography() const { return ortho_; }
  const Closure& closure() const { return closure_; }

  // All forms licensed by one list entry. Throws Error(kDomain) when the
  // lexeme is not an entry of this word list.
  std::vector<Derivation> derive_forms(const Lexeme& lexeme) const;
  std::vector<Derivation> derive_forms(std::size_t index) const;

  // All derivations of `surface`; empty when not derivable.
  std::vector<Derivation> analyze(std::string_view surface) const;

  bool is_extra(std::string_view surface) const;
  CheckResult check_token(std::string_view surface) const;

  // Closest permitted surfaces by edit distance. Ties go to list entries
  // first, then closure order.
  std::vector<std::string> suggest(std::string_view surface,
                                   std::size_t count) const;

  // `surface<TAB>root<TAB>rule` rows in closure order.
  std::string ExportClosureTsv() const;

 private:
  void BuildSuggestionIndex();

  std::shared_ptr<const WordList> word_list_;
  Orthography ortho_;
  MorphologyOptions options_;
  Closure closure_;
  // closure_.ordered positions bucketed by surface length.
  std::vector<std::vector<std::uint32_t>> by_length_;
};

// Builds the closure of `word_list` without the rest of the engine.
Closure BuildClosure(const WordList& word_list, const Orthography& ortho);

// Levenshtein distance with unit costs.
std::size_t EditDistance(std::string_view a, std::string_view b);

}  // namespace tenhundred

#endif  // TENHUNDRED_MORPHOLOGY_H_
