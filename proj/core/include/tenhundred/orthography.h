#ifndef TENHUNDRED_ORTHOGRAPHY_H_
#define TENHUNDRED_ORTHOGRAPHY_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tenhundred {

enum class Suffix : std::uint8_t {
  kNone,
  kS,
  kEd,
  kIng,
  kEr,
  kEst,
  kY,
  kFul,
  kLy,
  kNess,
};

std::string_view SuffixName(Suffix suffix);

// Regular English suffixation. Final-consonant doubling defaults to
// monosyllabic consonant-vowel-consonant stems (stop -> stopped); the bundled
// exception table flips that per stem (begin -> beginning, visit -> visited).
class Orthography {
 public:
  enum class Doubling : std::uint8_t { kDouble, kSingle };

  Orthography() = default;

  // `stem<TAB>double|single` per line; '#' comments.
  static Orthography Parse(std::istream& in);
  static Orthography ParseString(std::string_view text);
  static Orthography Load(const std::filesystem::path& path);

  std::string apply_suffix(std::string_view stem, Suffix suffix) const;

  bool doubles_final_consonant(std::string_view stem) const;
  std::size_t exception_count() const { return exceptions_.size(); }

 private:
  std::unordered_map<std::string, Doubling> exceptions_;
};

// Monosyllabic stem ending consonant-vowel-consonant, last consonant not
// w/x/y.
bool IsMonosyllabicCvc(std::string_view stem);

}  // namespace tenhundred

#endif  // TENHUNDRED_ORTHOGRAPHY_H_
