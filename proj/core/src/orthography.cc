#include "tenhundred/orthography.h"

#include <fstream>
#include <sstream>

#include "tenhundred/error.h"
#include "text_util.h"

namespace tenhundred {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool EndsWith(std::string_view s, std::string_view tail) {
  return s.size() >= tail.size() && s.substr(s.size() - tail.size()) == tail;
}

// "carry", "easy": a consonant followed by a final y.
bool EndsConsonantY(std::string_view s) {
  return s.size() >= 2 && s.back() == 'y' && !IsVowel(s[s.size() - 2]);
}

int VowelGroups(std::string_view s) {
  int n = 0;
  bool prev = false;
  for (char c : s) {
    bool v = IsVowel(c);
    if (v && !prev) ++n;
    prev = v;
  }
  return n;
}

std::string Cat(std::string_view a, std::string_view b) {
  std::string out(a);
  out += b;
  return out;
}

}  // namespace

std::string_view SuffixName(Suffix suffix) {
  switch (suffix) {
    case Suffix::kNone: return "none";
    case Suffix::kS: return "s";
    case Suffix::kEd: return "ed";
    case Suffix::kIng: return "ing";
    case Suffix::kEr: return "er";
    case Suffix::kEst: return "est";
    case Suffix::kY: return "y";
    case Suffix::kFul: return "ful";
    case Suffix::kLy: return "ly";
    case Suffix::kNess: return "ness";
  }
  return "none";
}

bool IsMonosyllabicCvc(std::string_view w) {
  if (w.size() < 3) return false;
  char a = w[w.size() - 3], b = w[w.size() - 2], c = w.back();
  return !IsVowel(a) && IsVowel(b) && !IsVowel(c) && c != 'w' && c != 'x' &&
         c != 'y' && VowelGroups(w) == 1;
}

Orthography Orthography::Parse(std::istream& in) {
  Orthography o;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view = internal::StripTrailing(line);
    if (view.empty() || view.front() == '#') continue;
    std::vector<std::string_view> cols = internal::Split(view, '\t');
    if (cols.size() != 2) throw ParseError(lineno, "expected stem<TAB>mode");
    Doubling mode;
    if (cols[1] == "double") {
      mode = Doubling::kDouble;
    } else if (cols[1] == "single") {
      mode = Doubling::kSingle;
    } else {
      throw ParseError(lineno, "mode must be 'double' or 'single'");
    }
    o.exceptions_[std::string(cols[0])] = mode;
  }
  return o;
}

Orthography Orthography::ParseString(std::string_view text) {
  std::istringstream in{std::string(text)};
  return Parse(in);
}

Orthography Orthography::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kInput, "cannot open doubling table " +
                                       path.string());
  }
  return Parse(in);
}

bool Orthography::doubles_final_consonant(std::string_view stem) const {
  auto it = exceptions_.find(std::string(stem));
  if (it != exceptions_.end()) return it->second == Doubling::kDouble;
  return IsMonosyllabicCvc(stem);
}

std::string Orthography::apply_suffix(std::string_view w, Suffix suffix) const {
  if (w.empty()) return std::string(SuffixName(suffix));
  const std::string_view stem_but_last = w.substr(0, w.size() - 1);
  const std::string doubled = Cat(w, std::string_view(&w.back(), 1));

  switch (suffix) {
    case Suffix::kNone:
      return std::string(w);

    case Suffix::kS:
      if (EndsWith(w, "s") || EndsWith(w, "x") || EndsWith(w, "z") ||
          EndsWith(w, "ch") || EndsWith(w, "sh")) {
        return Cat(w, "es");
      }
      if (EndsConsonantY(w)) return Cat(stem_but_last, "ies");
      if (w.size() >= 2 && w.back() == 'o' && !IsVowel(w[w.size() - 2])) {
        return Cat(w, "es");
      }
      return Cat(w, "s");

    case Suffix::kEd:
      if (w.back() == 'e') return Cat(w, "d");
      if (EndsConsonantY(w)) return Cat(stem_but_last, "ied");
      if (doubles_final_consonant(w)) return Cat(doubled, "ed");
      return Cat(w, "ed");

    case Suffix::kIng:
      if (EndsWith(w, "ie")) return Cat(w.substr(0, w.size() - 2), "ying");
      if (w.back() == 'e' && w.size() > 2 && !EndsWith(w, "ee") &&
          !EndsWith(w, "ye") && !EndsWith(w, "oe")) {
        return Cat(stem_but_last, "ing");
      }
      if (doubles_final_consonant(w)) return Cat(doubled, "ing");
      return Cat(w, "ing");

    case Suffix::kEr:
    case Suffix::kEst: {
      std::string_view tail = suffix == Suffix::kEr ? "er" : "est";
      if (w.back() == 'e') return Cat(w, tail.substr(1));
      if (EndsConsonantY(w)) return Cat(Cat(stem_but_last, "i"), tail);
      if (doubles_final_consonant(w)) return Cat(doubled, tail);
      return Cat(w, tail);
    }

    case Suffix::kY:
      if (w.back() == 'e' && w.size() > 2 && !EndsWith(w, "ee")) {
        return Cat(stem_but_last, "y");
      }
      if (doubles_final_consonant(w)) return Cat(doubled, "y");
      return Cat(w, "y");

    case Suffix::kFul:
      if (EndsConsonantY(w)) return Cat(stem_but_last, "iful");
      return Cat(w, "ful");

    case Suffix::kLy:
      if (EndsConsonantY(w)) return Cat(stem_but_last, "ily");
      if (w.size() >= 3 && EndsWith(w, "le") && !IsVowel(w[w.size() - 3])) {
        return Cat(stem_but_last, "y");
      }
      if (EndsWith(w, "ll")) return Cat(w, "y");
      if (EndsWith(w, "ic")) return Cat(w, "ally");
      if (EndsWith(w, "ue")) return Cat(stem_but_last, "ly");
      return Cat(w, "ly");

    case Suffix::kNess:
      if (EndsConsonantY(w)) return Cat(stem_but_last, "iness");
      return Cat(w, "ness");
  }
  return std::string(w);
}

}  // namespace tenhundred
