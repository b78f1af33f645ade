#include "tenhundred/textpipe.h"

#include <fstream>
#include <sstream>
#include <utility>

#include "tenhundred/error.h"
#include "text_util.h"

namespace tenhundred {
namespace {

struct CodePoint {
  char32_t value;
  std::size_t length;
};

// Input is validated up front, so decoding cannot fail here.
CodePoint Decode(std::string_view s, std::size_t i) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c < 0x80) return {c, 1};
  std::size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : 4;
  char32_t cp = c & (len == 2 ? 0x1F : len == 3 ? 0x0F : 0x07);
  for (std::size_t k = 1; k < len; ++k) {
    cp = (cp << 6) | (static_cast<unsigned char>(s[i + k]) & 0x3F);
  }
  return {cp, len};
}

// Unicode spaces and dashes separate words like ASCII whitespace does.
bool IsSeparator(char32_t c) {
  switch (c) {
    case ' ': case '\t': case '\n': case '\r': case '\f': case '\v':
    case 0x00A0: case 0x1680: case 0x2028: case 0x2029: case 0x202F:
    case 0x205F: case 0x3000: case 0x2013: case 0x2014: case 0x2015:
      return true;
    default:
      return c >= 0x2000 && c <= 0x200B;
  }
}

bool IsApostrophe(char32_t c) {
  return c == '\'' || c == 0x2018 || c == 0x2019 || c == 0x02BC;
}

bool IsHyphen(char32_t c) { return c == '-' || c == 0x2010 || c == 0x2011; }

void Note(std::vector<NormalizationStep>& trace, NormalizationStep step) {
  if (trace.empty() || trace.back() != step) trace.push_back(step);
}

bool EndsWith(std::string_view s, std::string_view tail) {
  return s.size() >= tail.size() && s.substr(s.size() - tail.size()) == tail;
}

struct Chunk {
  std::string text;
  Span span;
  std::vector<NormalizationStep> trace;
};

// Character filtering and lowercasing of one whitespace-delimited chunk. The
// span is trimmed to the first and last surviving character.
std::optional<Chunk> FilterChunk(std::string_view text, std::size_t begin,
                                 std::size_t end) {
  Chunk chunk;
  bool filtered = false, lowered = false;
  std::optional<std::size_t> first;
  std::size_t last_end = begin;
  for (std::size_t i = begin; i < end;) {
    CodePoint cp = Decode(text, i);
    char kept = 0;
    if (cp.value >= 'a' && cp.value <= 'z') {
      kept = static_cast<char>(cp.value);
    } else if (cp.value >= 'A' && cp.value <= 'Z') {
      kept = static_cast<char>(cp.value - 'A' + 'a');
      lowered = true;
    } else if (IsApostrophe(cp.value)) {
      kept = '\'';
      if (cp.value != '\'') filtered = true;
    } else if (IsHyphen(cp.value)) {
      kept = '-';
      if (cp.value != '-') filtered = true;
    } else {
      filtered = true;
    }
    if (kept != 0) {
      chunk.text += kept;
      if (!first) first = i;
      last_end = i + cp.length;
    }
    i += cp.length;
  }
  if (!first) return std::nullopt;
  chunk.span = {*first, last_end};
  if (filtered) chunk.trace.push_back(NormalizationStep::kCharFilter);
  if (lowered) chunk.trace.push_back(NormalizationStep::kLowercase);
  return chunk;
}

}  // namespace

std::string_view StepName(NormalizationStep step) {
  switch (step) {
    case NormalizationStep::kCharFilter: return "char-filter";
    case NormalizationStep::kLowercase: return "lowercase";
    case NormalizationStep::kDehyphenate: return "dehyphenate";
    case NormalizationStep::kContractionExpand: return "contraction-expand";
    case NormalizationStep::kAnNormalize: return "an-normalize";
    case NormalizationStep::kGenitiveStrip: return "genitive-strip";
    case NormalizationStep::kCompoundSplit: return "compound-split";
  }
  return "";
}

ContractionTable ContractionTable::Parse(std::istream& in) {
  ContractionTable t;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = internal::StripTrailing(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string_view> cols = internal::Split(view, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw ParseError(lineno, "expected contraction<TAB>expansion");
    }
    std::vector<std::string> words;
    for (std::string_view w : internal::Split(cols[1], ' ')) {
      if (w.empty()) continue;
      if (!IsValidSurface(w) || w.find('\'') != std::string_view::npos) {
        throw ParseError(lineno, "invalid expansion word '" + std::string(w) +
                                     "'");
      }
      words.emplace_back(w);
    }
    if (!t.table_.emplace(std::string(cols[0]), std::move(words)).second) {
      throw ParseError(lineno, "duplicate contraction '" +
                                   std::string(cols[0]) + "'");
    }
  }
  return t;
}

ContractionTable ContractionTable::ParseString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

ContractionTable ContractionTable::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInput,
                "cannot open contraction table " + path.string());
  }
  return Parse(in);
}

const std::vector<std::string>* ContractionTable::find(
    std::string_view word) const {
  auto it = table_.find(std::string(word));
  return it == table_.end() ? nullptr : &it->second;
}

TextPipeline::TextPipeline(std::shared_ptr<const Morphology> morphology,
                           ContractionTable contractions)
    : morphology_(std::move(morphology)),
      contractions_(std::move(contractions)) {}

std::vector<std::string> TextPipeline::expand_contraction(
    std::string_view surface) const {
  if (const auto* words = contractions_.find(surface)) return *words;

  static constexpr std::pair<std::string_view, std::string_view> kSuffixes[] = {
      {"n't", "not"}, {"'re", "are"}, {"'ll", "will"},
      {"'ve", "have"}, {"'m", "am"},   {"'d", "would"},
  };
  for (const auto& [tail, expansion] : kSuffixes) {
    if (surface.size() > tail.size() && EndsWith(surface, tail)) {
      std::string stem(surface.substr(0, surface.size() - tail.size()));
      if (stem.find('\'') != std::string::npos) continue;
      return {std::move(stem), std::string(expansion)};
    }
  }
  return {std::string(surface)};
}

std::vector<std::string> TextPipeline::split_compound(
    std::string_view surface) const {
  const Closure& closure = morphology_->closure();
  if (closure.contains(surface)) return {std::string(surface)};
  constexpr std::size_t kMinPart = 3;
  if (surface.size() >= 2 * kMinPart) {
    for (std::size_t k = surface.size() - kMinPart; k >= kMinPart; --k) {
      std::string_view head = surface.substr(0, k);
      std::string_view tail = surface.substr(k);
      if (closure.contains(head) && closure.contains(tail)) {
        return {std::string(head), std::string(tail)};
      }
    }
  }
  return {std::string(surface)};
}

std::vector<Token> TextPipeline::normalize_and_tokenize(
    std::string_view text) const {
  if (!internal::IsValidUtf8(text)) {
    throw Error(ErrorCode::kInput, "input is not valid UTF-8");
  }
  std::vector<Token> tokens;

  auto process = [&](std::size_t begin, std::size_t end) {
    std::optional<Chunk> chunk = FilterChunk(text, begin, end);
    if (!chunk) return;

    std::string word;
    for (char c : chunk->text) {
      if (c != '-') word += c;
    }
    if (word.size() != chunk->text.size()) {
      Note(chunk->trace, NormalizationStep::kDehyphenate);
    }
    // Opening quotes are not part of the word.
    std::size_t lead = word.find_first_not_of('\'');
    if (lead == std::string::npos) return;
    if (lead > 0) {
      word.erase(0, lead);
      Note(chunk->trace, NormalizationStep::kCharFilter);
    }

    std::vector<std::string> parts = expand_contraction(word);
    if (parts.size() != 1 || parts.front() != word) {
      Note(chunk->trace, NormalizationStep::kContractionExpand);
    }

    for (std::string& part : parts) {
      std::vector<NormalizationStep> trace = chunk->trace;
      std::string stripped = part;
      if (EndsWith(stripped, "'s")) {
        stripped.resize(stripped.size() - 2);
      }
      std::erase(stripped, '\'');
      // Stray apostrophes must not hide an "an".
      if (stripped == "an") {
        stripped = "a";
        trace.push_back(NormalizationStep::kAnNormalize);
      }
      if (stripped != part && part != "an") {
        trace.push_back(NormalizationStep::kGenitiveStrip);
      }
      if (stripped.empty()) continue;

      std::vector<std::string> pieces = split_compound(stripped);
      if (pieces.size() > 1) trace.push_back(NormalizationStep::kCompoundSplit);
      for (std::string& piece : pieces) {
        tokens.push_back({std::move(piece), chunk->span, trace});
      }
    }
  };

  std::size_t i = 0, start = 0;
  bool in_word = false;
  while (i < text.size()) {
    CodePoint cp = Decode(text, i);
    if (IsSeparator(cp.value)) {
      if (in_word) process(start, i);
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      start = i;
    }
    i += cp.length;
  }
  if (in_word) process(start, text.size());
  return tokens;
}

}  // namespace tenhundred
