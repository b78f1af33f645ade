#include "tenhundred/lexicon.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "tenhundred/error.h"
#include "text_util.h"

namespace tenhundred {
namespace {

constexpr std::array<std::string_view, kNumPos> kPosNames = {
    "noun",        "verb",        "adjective",   "adverb",       "pronoun",
    "determiner",  "preposition", "conjunction", "interjection", "number",
};

constexpr std::array<std::string_view, 14> kKindNames = {
    "past",           "past-participle", "present-participle",
    "third-singular", "present",         "plural",
    "comparative",    "superlative",     "pronoun-variant",
    "noun-verb-pair", "base-form-pair",  "adjective-verb",
    "ful-form",       "acronym",
};

// Which parts of speech the root must carry for an irregular kind to apply.
// An empty set means any.
PosSet RequiredPos(IrregularKind kind) {
  switch (kind) {
    case IrregularKind::kPast:
    case IrregularKind::kPastParticiple:
    case IrregularKind::kPresentParticiple:
    case IrregularKind::kThirdSingular:
    case IrregularKind::kPresent:
      return {Pos::kVerb};
    case IrregularKind::kPlural:
    case IrregularKind::kFulForm:
      return {Pos::kNoun};
    case IrregularKind::kComparative:
    case IrregularKind::kSuperlative:
    case IrregularKind::kAdjectiveVerb:
      return {Pos::kAdjective};
    case IrregularKind::kPronounVariant:
      return {Pos::kPronoun, Pos::kDeterminer};
    case IrregularKind::kNounVerbPair:
      return {Pos::kNoun, Pos::kVerb};
    case IrregularKind::kBaseFormPair:
    case IrregularKind::kAcronym:
      return {};
  }
  return {};
}

bool PosCompatible(PosSet have, PosSet required) {
  if (required.empty()) return true;
  for (Pos p : required.items()) {
    if (have.has(p)) return true;
  }
  return false;
}

}  // namespace

std::string_view PosName(Pos pos) {
  return kPosNames[static_cast<std::size_t>(pos)];
}

std::optional<Pos> ParsePos(std::string_view name) {
  for (std::size_t i = 0; i < kPosNames.size(); ++i) {
    if (kPosNames[i] == name) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

std::vector<Pos> PosSet::items() const {
  std::vector<Pos> out;
  for (std::size_t i = 0; i < kNumPos; ++i) {
    if (has(static_cast<Pos>(i))) out.push_back(static_cast<Pos>(i));
  }
  return out;
}

std::string_view IrregularKindName(IrregularKind kind) {
  return kKindNames[static_cast<std::size_t>(kind)];
}

std::optional<IrregularKind> ParseIrregularKind(std::string_view name) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == name) return static_cast<IrregularKind>(i);
  }
  return std::nullopt;
}

bool IsValidSurface(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || c == '-' || c == '\'')) return false;
  }
  return true;
}

WordList WordList::Parse(std::istream& list, std::istream* irregular) {
  WordList wl;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(list, line)) {
    ++lineno;
    std::string_view view = internal::StripTrailing(line);
    if (view.empty() || view.front() == '#') continue;

    std::vector<std::string_view> cols = internal::Split(view, '\t');
    if (cols.size() < 2 || cols.size() > 3) {
      throw ParseError(lineno, "expected 2 or 3 tab-separated columns");
    }
    Lexeme lex;
    lex.surface = std::string(cols[0]);
    if (!IsValidSurface(lex.surface)) {
      throw ParseError(lineno, "invalid surface '" + lex.surface + "'");
    }
    for (std::string_view name : internal::Split(cols[1], ',')) {
      std::optional<Pos> pos = ParsePos(name);
      if (!pos) {
        throw ParseError(lineno, "unknown part of speech '" +
                                     std::string(name) + "'");
      }
      lex.pos.insert(*pos);
    }
    if (wl.index_.contains(lex.surface)) {
      throw Error(ErrorCode::kValidation, "line " + std::to_string(lineno) +
                                              ": duplicate surface '" +
                                              lex.surface + "'");
    }
    if (cols.size() == 3 && !cols[2].empty()) {
      for (std::string_view item : internal::Split(cols[2], ',')) {
        std::size_t colon = item.find(':');
        if (colon == std::string_view::npos) {
          throw ParseError(lineno, "inline irregular must be kind:form");
        }
        std::optional<IrregularKind> kind =
            ParseIrregularKind(item.substr(0, colon));
        if (!kind) {
          throw ParseError(lineno, "unknown irregular kind '" +
                                       std::string(item.substr(0, colon)) +
                                       "'");
        }
        lex.inline_irregulars.push_back(
            {lex.surface, *kind, std::string(item.substr(colon + 1))});
      }
    }
    wl.index_.emplace(lex.surface, wl.entries_.size());
    wl.entries_.push_back(std::move(lex));
  }
  wl.irregulars_by_root_.resize(wl.entries_.size());
  for (const Lexeme& lex : wl.entries_) {
    for (const IrregularForm& f : lex.inline_irregulars) {
      wl.AddIrregular(f, /*from_table=*/false, 0);
    }
  }

  if (irregular != nullptr) {
    lineno = 0;
    while (std::getline(*irregular, line)) {
      ++lineno;
      std::string_view view = internal::StripTrailing(line);
      if (view.empty() || view.front() == '#') continue;
      std::vector<std::string_view> cols = internal::Split(view, '\t');
      if (cols.size() != 3) {
        throw ParseError(lineno, "expected root<TAB>kind<TAB>form");
      }
      std::optional<IrregularKind> kind = ParseIrregularKind(cols[1]);
      if (!kind) {
        throw ParseError(lineno, "unknown irregular kind '" +
                                     std::string(cols[1]) + "'");
      }
      wl.AddIrregular({std::string(cols[0]), *kind, std::string(cols[2])},
                      /*from_table=*/true, lineno);
    }
  }
  wl.Validate();
  return wl;
}

WordList WordList::ParseString(std::string_view list,
                               std::string_view irregular) {
  std::istringstream ls{std::string(list)};
  std::istringstream is{std::string(irregular)};
  return Parse(ls, irregular.empty() ? nullptr : &is);
}

WordList WordList::Load(const std::filesystem::path& list,
                        const std::optional<std::filesystem::path>& irregular) {
  std::ifstream ls(list);
  if (!ls) {
    throw Error(ErrorCode::kInput, "cannot open word list " + list.string());
  }
  if (!irregular) return Parse(ls);
  std::ifstream is(*irregular);
  if (!is) {
    throw Error(ErrorCode::kInput,
                "cannot open irregular table " + irregular->string());
  }
  return Parse(ls, &is);
}

void WordList::AddIrregular(IrregularForm form, bool from_table,
                            std::size_t line) {
  auto it = index_.find(form.root);
  if (it == index_.end()) {
    throw Error(ErrorCode::kValidation,
                "irregular table line " + std::to_string(line) + ": root '" +
                    form.root + "' is not a list entry");
  }
  if (!IsValidSurface(form.form)) {
    throw Error(ErrorCode::kValidation,
                "irregular form '" + form.form + "' of '" + form.root +
                    "' has invalid characters");
  }
  if (!PosCompatible(entries_[it->second].pos, RequiredPos(form.kind))) {
    throw Error(ErrorCode::kValidation,
                "irregular kind " + std::string(IrregularKindName(form.kind)) +
                    " does not fit the part of speech of '" + form.root + "'");
  }
  irregulars_by_root_[it->second].push_back(irregulars_.size());
  irregulars_.push_back(std::move(form));
  irregular_from_table_.push_back(from_table);
}

void WordList::Validate() const {
  for (const Lexeme& lex : entries_) {
    if (lex.pos.empty()) {
      throw Error(ErrorCode::kValidation,
                  "entry '" + lex.surface + "' has no part of speech");
    }
  }
}

const Lexeme* WordList::lookup(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

std::optional<std::size_t> WordList::index_of(std::string_view surface) const {
  auto it = index_.find(std::string(surface));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<const IrregularForm*> WordList::irregulars_of(
    std::size_t index) const {
  std::vector<const IrregularForm*> out;
  for (std::size_t i : irregulars_by_root_.at(index)) {
    out.push_back(&irregulars_[i]);
  }
  return out;
}

std::string WordList::Serialize() const {
  std::string out;
  for (const Lexeme& lex : entries_) {
    out += lex.surface;
    out += '\t';
    bool first = true;
    for (Pos p : lex.pos.items()) {
      if (!first) out += ',';
      out += PosName(p);
      first = false;
    }
    if (!lex.inline_irregulars.empty()) {
      out += '\t';
      for (std::size_t i = 0; i < lex.inline_irregulars.size(); ++i) {
        if (i > 0) out += ',';
        out += IrregularKindName(lex.inline_irregulars[i].kind);
        out += ':';
        out += lex.inline_irregulars[i].form;
      }
    }
    out += '\n';
  }
  return out;
}

std::string WordList::SerializeIrregulars() const {
  std::string out;
  for (std::size_t i = 0; i < irregulars_.size(); ++i) {
    if (!irregular_from_table_[i]) continue;
    const IrregularForm& f = irregulars_[i];
    out += f.root;
    out += '\t';
    out += IrregularKindName(f.kind);
    out += '\t';
    out += f.form;
    out += '\n';
  }
  return out;
}

std::string WordList::ContentHash() const {
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  mix(Serialize());
  mix("\x1f");
  mix(SerializeIrregulars());
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace tenhundred
