#ifndef TENHUNDRED_REPORT_H_
#define TENHUNDRED_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tenhundred/morphology.h"
#include "tenhundred/textpipe.h"
#include "tenhundred/toolkit.h"

namespace tenhundred {

// One flagged (extra or rejected) token.
struct Annotation {
  Span span;  // byte offsets into the checked text
  std::string surface;
  Verdict verdict = Verdict::kRejected;
  std::vector<int> rules;  // empty for extra and rejected words
  std::vector<std::string> suggestions;
};

struct CheckStats {
  std::uint64_t tokens = 0;
  std::uint64_t allowed = 0;
  std::uint64_t extra = 0;
  std::uint64_t rejected = 0;
  // allowed / tokens; unset for an empty text.
  std::optional<double> coverage;
};

struct CheckReport {
  std::vector<Annotation> annotations;  // text order
  CheckStats stats;
};

// Runs the pipeline and the checker. Throws Error(kInput) on bad UTF-8.
CheckReport RunCheck(const Toolkit& toolkit, std::string_view text);

// Serializers with fixed key order; output is byte-stable for equal input.
std::string CheckReportJson(const CheckReport& report);
std::string DerivationsJson(std::string_view word,
                            std::span<const Derivation> derivations,
                            bool reverse);
std::string WordListJson(const WordList& word_list);

}  // namespace tenhundred

#endif  // TENHUNDRED_REPORT_H_
