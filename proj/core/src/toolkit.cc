#include "tenhundred/toolkit.h"

#include <cstdlib>

#ifndef TENHUNDRED_DEFAULT_DATA_DIR
#define TENHUNDRED_DEFAULT_DATA_DIR "data"
#endif

namespace tenhundred {

DataPaths DataPaths::InDirectory(const std::filesystem::path& dir) {
  DataPaths p;
  p.word_list = dir / "wordlist.tsv";
  auto optional_file =
      [&](const char* name) -> std::optional<std::filesystem::path> {
    std::filesystem::path f = dir / name;
    if (std::filesystem::exists(f)) return f;
    return std::nullopt;
  };
  p.irregular = optional_file("irregular.tsv");
  p.doubling = optional_file("doubling.tsv");
  p.contractions = optional_file("contractions.tsv");
  return p;
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv(kDataDirEnv); env != nullptr && *env) {
    return env;
  }
  return TENHUNDRED_DEFAULT_DATA_DIR;
}

std::shared_ptr<const Toolkit> Toolkit::Load(const DataPaths& paths,
                                             MorphologyOptions options) {
  auto kit = std::shared_ptr<Toolkit>(new Toolkit());
  kit->word_list_ = std::make_shared<const WordList>(
      WordList::Load(paths.word_list, paths.irregular));
  Orthography ortho =
      paths.doubling ? Orthography::Load(*paths.doubling) : Orthography();
  kit->morphology_ = std::make_shared<const Morphology>(
      kit->word_list_, std::move(ortho), std::move(options));
  ContractionTable contractions = paths.contractions
                                      ? ContractionTable::Load(*paths.contractions)
                                      : ContractionTable();
  kit->pipeline_ =
      std::make_unique<TextPipeline>(kit->morphology_, std::move(contractions));
  return kit;
}

std::shared_ptr<const Toolkit> Toolkit::LoadDefault() {
  return Load(DataPaths::InDirectory(DefaultDataDir()));
}

}  // namespace tenhundred
