#ifndef TENHUNDRED_TOOLKIT_H_
#define TENHUNDRED_TOOLKIT_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

#include "tenhundred/lexicon.h"
#include "tenhundred/morphology.h"
#include "tenhundred/textpipe.h"

namespace tenhundred {

inline constexpr char kDataDirEnv[] = "TENHUNDRED_DATA_DIR";

struct DataPaths {
  std::filesystem::path word_list;
  std::optional<std::filesystem::path> irregular;
  std::optional<std::filesystem::path> doubling;
  std::optional<std::filesystem::path> contractions;

  // wordlist.tsv, irregular.tsv, doubling.tsv and contractions.tsv under
  // `dir`. Missing optional files are left unset.
  static DataPaths InDirectory(const std::filesystem::path& dir);
};

// $TENHUNDRED_DATA_DIR if set, else the install-time data directory.
std::filesystem::path DefaultDataDir();

// The loaded engine: word list, morphology (with its closure) and text
// pipeline. Immutable once built; share it freely across threads.
class Toolkit {
 public:
  static std::shared_ptr<const Toolkit> Load(const DataPaths& paths,
                                             MorphologyOptions options = {});
  static std::shared_ptr<const Toolkit> LoadDefault();

  const WordList& word_list() const { return *word_list_; }
  const Morphology& morphology() const { return *morphology_; }
  const TextPipeline& pipeline() const { return *pipeline_; }
  std::shared_ptr<const Morphology> morphology_ptr() const {
    return morphology_;
  }

 private:
  std::shared_ptr<const WordList> word_list_;
  std::shared_ptr<const Morphology> morphology_;
  std::unique_ptr<TextPipeline> pipeline_;
};

}  // namespace tenhundred

#endif  // TENHUNDRED_TOOLKIT_H_
