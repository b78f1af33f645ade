#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "cli.h"
#include "tenhundred/error.h"

namespace th = tenhundred;
namespace cli = tenhundred::cli;

int main(int argc, char** argv) {
  CLI::App app{"Check and analyze text written with the ten hundred most used words."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tenhundred 0.1.0");

  cli::RunConfig config;
  std::string data_dir, word_list, irregular, doubling, contractions;
  app.add_option("--data-dir", data_dir,
                 "Directory with wordlist.tsv and tables (default: $" +
                     std::string(th::kDataDirEnv) + " or the installed data)");
  app.add_option("--word-list", word_list, "Word list file")
      ->check(CLI::ExistingFile);
  app.add_option("--irregular", irregular, "Irregular-form table")
      ->check(CLI::ExistingFile);
  app.add_option("--doubling", doubling, "Consonant-doubling exceptions")
      ->check(CLI::ExistingFile);
  app.add_option("--contractions", contractions, "Contraction table")
      ->check(CLI::ExistingFile);
  const std::map<std::string, cli::Format> formats = {
      {"plain", cli::Format::kPlain},
      {"json", cli::Format::kJson},
      {"tsv", cli::Format::kTsv}};
  app.add_option("--format", config.format, "Output format: plain, json, tsv")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case).description(""))
      ->type_name("plain|json|tsv");

  CLI::App* check = app.add_subcommand("check", "Flag words outside the closure");
  std::string check_input = "-";
  check->add_option("input", check_input, "Text file, or - for stdin");

  CLI::App* analyze =
      app.add_subcommand("analyze", "Rule histograms, coverage and rank tables");
  std::vector<std::string> corpus = {"-"};
  analyze->add_option("inputs", corpus, "Corpus files, or - for stdin");
  analyze->add_option("--out-dir", config.out_dir, "Where reports are written");

  CLI::App* fit =
      app.add_subcommand("fit", "Power-law vs. exponential fit of a rank table");
  std::string fit_input = "-";
  fit->add_option("input", fit_input, "Rank-frequency TSV, or - for stdin");
  fit->add_option("--xmin", config.xmin,
                  "Fit both models from this lower bound instead of choosing it "
                  "by minimum KS distance")
      ->check(CLI::PositiveNumber);
  fit->add_option("--threshold", config.threshold, "Significance level")
      ->check([](const std::string& s) -> std::string {
        double v = 0;
        try {
          v = std::stod(s);
        } catch (...) {
          return "not a number";
        }
        return v > 0 && v < 1 ? "" : "must lie in (0, 1)";
      });

  CLI::App* expand = app.add_subcommand("expand", "List the forms of a word");
  std::string word;
  expand->add_option("word", word, "List entry (or any surface with --reverse)")
      ->required();
  expand->add_flag("--reverse", config.reverse,
                   "Explain a surface form instead of generating");

  CLI::App* serve = app.add_subcommand("serve", "Run the HTTP checking service");
  serve->add_option("--serve-addr", config.serve_addr, "host:port to listen on");
  serve->add_option("--cors-origin", config.cors_origin,
                    "Access-Control-Allow-Origin value (empty disables)");
  serve->add_option("--max-body", config.max_body_bytes,
                    "Largest accepted request body in bytes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kExitUsage;
  }

  if (!data_dir.empty()) config.data_dir = data_dir;
  if (!word_list.empty()) config.word_list = word_list;
  if (!irregular.empty()) config.irregular = irregular;
  if (!doubling.empty()) config.doubling = doubling;
  if (!contractions.empty()) config.contractions = contractions;

  if (*fit) {
    std::optional<std::string> tsv = cli::ReadInput(fit_input);
    if (!tsv) {
      std::cerr << "error: cannot read " << fit_input << "\n";
      return cli::kExitUnreadable;
    }
    return cli::CmdFit(config, *tsv, std::cout, std::cerr);
  }

  std::shared_ptr<const th::Toolkit> toolkit;
  try {
    toolkit = th::Toolkit::Load(cli::ResolvePaths(config));
  } catch (const th::Error& e) {
    std::cerr << "error: loading word list: " << e.what() << "\n";
    return cli::kExitDataError;
  }

  if (*check) {
    std::optional<std::string> text = cli::ReadInput(check_input);
    if (!text) {
      std::cerr << "error: cannot read " << check_input << "\n";
      return cli::kExitUnreadable;
    }
    return cli::CmdCheck(*toolkit, config, *text, std::cout, std::cerr);
  }
  if (*analyze) {
    std::vector<std::string> texts;
    for (const std::string& path : corpus) {
      std::optional<std::string> text = cli::ReadInput(path);
      if (!text) {
        std::cerr << "error: cannot read " << path << "\n";
        return cli::kExitUnreadable;
      }
      texts.push_back(std::move(*text));
    }
    return cli::CmdAnalyze(*toolkit, config, texts, std::cout, std::cerr);
  }
  if (*expand) {
    return cli::CmdExpand(*toolkit, config, word, std::cout, std::cerr);
  }
  return cli::CmdServe(toolkit, config, std::cerr);
}
