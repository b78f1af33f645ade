#ifndef TENHUNDRED_TOOLS_CLI_H_
#define TENHUNDRED_TOOLS_CLI_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tenhundred/distfit.h"
#include "tenhundred/toolkit.h"

namespace tenhundred::cli {

enum class Format { kPlain, kJson, kTsv };

// Process exit statuses.
enum ExitCode : int {
  kExitOk = 0,
  kExitExtra = 1,          // check: some token is an extra word
  kExitRejected = 2,       // check: some token is not derivable
  kExitUnreadable = 3,     // input missing, unreadable or not UTF-8
  kExitEmptyCorpus = 4,    // analyze: no tokens
  kExitDegenerate = 5,     // fit: fewer than two distinct counts
  kExitNotListed = 6,      // expand: word is not a list entry
  kExitDataError = 7,      // word list or tables failed to load
  kExitUsage = 64,
};

struct RunConfig {
  std::optional<std::filesystem::path> data_dir;
  std::optional<std::filesystem::path> word_list;
  std::optional<std::filesystem::path> irregular;
  std::optional<std::filesystem::path> doubling;
  std::optional<std::filesystem::path> contractions;
  Format format = Format::kPlain;
  double threshold = kDefaultSignificance;
  std::optional<std::uint64_t> xmin;  // fit: fixed lower bound
  bool reverse = false;
  std::filesystem::path out_dir = ".";
  std::string serve_addr = "127.0.0.1:8080";
  std::string cors_origin = "*";
  std::size_t max_body_bytes = 1 << 20;
};

// Explicit file flags override files found in the data directory.
DataPaths ResolvePaths(const RunConfig& config);

// Reads a file, or stdin for "-". Returns nullopt when unreadable.
std::optional<std::string> ReadInput(const std::string& path);

int CmdCheck(const Toolkit& toolkit, const RunConfig& config,
             std::string_view text, std::ostream& out, std::ostream& err);
int CmdAnalyze(const Toolkit& toolkit, const RunConfig& config,
               const std::vector<std::string>& texts, std::ostream& out,
               std::ostream& err);
int CmdFit(const RunConfig& config, std::string_view tsv, std::ostream& out,
           std::ostream& err);
int CmdExpand(const Toolkit& toolkit, const RunConfig& config,
              std::string_view word, std::ostream& out, std::ostream& err);
int CmdServe(std::shared_ptr<const Toolkit> toolkit, const RunConfig& config,
             std::ostream& err);

// Counts from a rank-frequency TSV (`rank<TAB>term<TAB>count`) or a file
// of bare counts, one per line. Throws ParseError on malformed rows.
std::vector<std::uint64_t> ParseCounts(std::string_view tsv);

}  // namespace tenhundred::cli

#endif  // TENHUNDRED_TOOLS_CLI_H_
