#ifndef TENHUNDRED_LEXICON_H_
#define TENHUNDRED_LEXICON_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tenhundred {

enum class Pos : std::uint8_t {
  kNoun,
  kVerb,
  kAdjective,
  kAdverb,
  kPronoun,
  kDeterminer,
  kPreposition,
  kConjunction,
  kInterjection,
  kNumber,
};

inline constexpr std::size_t kNumPos = 10;

std::string_view PosName(Pos pos);
std::optional<Pos> ParsePos(std::string_view name);

// Small value set of parts of speech, iterated in enum order.
class PosSet {
 public:
  constexpr PosSet() = default;
  constexpr PosSet(std::initializer_list<Pos> items) {
    for (Pos p : items) insert(p);
  }

  constexpr void insert(Pos p) { bits_ |= Bit(p); }
  constexpr bool has(Pos p) const { return (bits_ & Bit(p)) != 0; }
  constexpr bool empty() const { return bits_ == 0; }
  std::vector<Pos> items() const;

  friend constexpr bool operator==(PosSet, PosSet) = default;

 private:
  static constexpr std::uint16_t Bit(Pos p) {
    return static_cast<std::uint16_t>(1u << static_cast<unsigned>(p));
  }
  std::uint16_t bits_ = 0;
};

enum class IrregularKind : std::uint8_t {
  kPast,
  kPastParticiple,
  kPresentParticiple,
  kThirdSingular,
  kPresent,  // non-third-person present forms that differ from the base (am, are)
  kPlural,
  kComparative,
  kSuperlative,
  kPronounVariant,
  kNounVerbPair,
  kBaseFormPair,
  kAdjectiveVerb,
  kFulForm,
  kAcronym,
};

std::string_view IrregularKindName(IrregularKind kind);
std::optional<IrregularKind> ParseIrregularKind(std::string_view name);

struct IrregularForm {
  std::string root;
  IrregularKind kind;
  std::string form;

  friend bool operator==(const IrregularForm&, const IrregularForm&) = default;
};

struct Lexeme {
  std::string surface;
  PosSet pos;
  // Irregular forms given inline in the word-list file (third column). They
  // are also present in WordList::irregulars().
  std::vector<IrregularForm> inline_irregulars;
};

// True iff `s` is non-empty and only contains a-z, '-' and '\''.
bool IsValidSurface(std::string_view s);

// The immutable word list: entries in file order plus the irregular-form
// table. Safe to share across threads once constructed.
class WordList {
 public:
  WordList() = default;

  // Parses the word-list format (`surface<TAB>pos,pos[<TAB>kind:form,...]`,
  // '#' comment lines) and optionally an irregular-forms table
  // (`root<TAB>kind<TAB>form`). Throws ParseError / Error(kValidation).
  static WordList Parse(std::istream& list, std::istream* irregular = nullptr);
  static WordList ParseString(std::string_view list,
                              std::string_view irregular = {});
  static WordList Load(const std::filesystem::path& list,
                       const std::optional<std::filesystem::path>& irregular);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::span<const Lexeme> entries() const { return entries_; }
  const Lexeme& at(std::size_t index) const { return entries_.at(index); }

  // Exact-match lookup; nullptr when absent. No morphology.
  const Lexeme* lookup(std::string_view surface) const;
  std::optional<std::size_t> index_of(std::string_view surface) const;
  bool is_listed(std::string_view surface) const {
    return lookup(surface) != nullptr;
  }

  std::span<const IrregularForm> irregulars() const { return irregulars_; }
  // Irregular forms whose root is entry `index`, in table order.
  std::vector<const IrregularForm*> irregulars_of(std::size_t index) const;

  // Re-serializes the word-list file (comments are not preserved).
  std::string Serialize() const;
  // Serializes the irregular entries that came from a separate table.
  std::string SerializeIrregulars() const;

  // Stable FNV-1a hash over Serialize() + SerializeIrregulars(), hex encoded.
  std::string ContentHash() const;

 private:
  void AddIrregular(IrregularForm form, bool from_table, std::size_t line);
  void Validate() const;

  std::vector<Lexeme> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<IrregularForm> irregulars_;
  std::vector<bool> irregular_from_table_;
  std::vector<std::vector<std::size_t>> irregulars_by_root_;
};

}  // namespace tenhundred

#endif  // TENHUNDRED_LEXICON_H_
