#ifndef TENHUNDRED_TEXTPIPE_H_
#define TENHUNDRED_TEXTPIPE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tenhundred/morphology.h"

namespace tenhundred {

enum class NormalizationStep : std::uint8_t {
  kCharFilter,
  kLowercase,
  kDehyphenate,
  kContractionExpand,
  kAnNormalize,
  kGenitiveStrip,
  kCompoundSplit,
};

std::string_view StepName(NormalizationStep step);

// Half-open byte range into the original text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
  std::string surface;
  Span span;
  std::vector<NormalizationStep> trace;
};

// Fixed contraction expansions (`contraction<TAB>word word...`). The "'s"
// forms listed here are the only ones read as "is"; every other "'s" is a
// genitive.
class ContractionTable {
 public:
  ContractionTable() = default;

  static ContractionTable Parse(std::istream& in);
  static ContractionTable ParseString(std::string_view text);
  static ContractionTable Load(const std::filesystem::path& path);

  const std::vector<std::string>* find(std::string_view word) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> table_;
};

// Normalizes raw UTF-8 text into analyzer tokens. In order: character
// filtering (letters, hyphens and apostrophes survive), lowercasing,
// de-hyphenation, contraction expansion, "an" -> "a", genitive stripping,
// whitespace tokenization, compound splitting.
class TextPipeline {
 public:
  TextPipeline(std::shared_ptr<const Morphology> morphology,
               ContractionTable contractions);

  // Throws Error(kInput) on malformed UTF-8.
  std::vector<Token> normalize_and_tokenize(std::string_view text) const;

  // [a, b] when `surface` is not itself derivable but splits into two
  // derivable parts of length >= 3 (longest first part wins); else
  // [surface].
  std::vector<std::string> split_compound(std::string_view surface) const;

  std::vector<std::string> expand_contraction(std::string_view surface) const;

  const Morphology& morphology() const { return *morphology_; }

 private:
  std::shared_ptr<const Morphology> morphology_;
  ContractionTable contractions_;
};

}  // namespace tenhundred

#endif  // TENHUNDRED_TEXTPIPE_H_
