#include "tenhundred/textpipe.h"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "tenhundred/error.h"
#include "test_support.h"

namespace tenhundred {
namespace {

const TextPipeline& Pipe() { return testing::ReferenceToolkit()->pipeline(); }

nlohmann::json Golden() {
  std::ifstream in(testing::FixtureDir() / "pipeline_golden.json");
  return nlohmann::json::parse(in);
}

std::vector<std::string> Surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

TEST(PipelineGoldenTest, FixturesMatchExactly) {
  nlohmann::json golden = Golden();
  ASSERT_EQ(golden.size(), 25u);
  for (const auto& fx : golden) {
    std::vector<Token> tokens =
        Pipe().normalize_and_tokenize(fx["input"].get<std::string>());
    EXPECT_EQ(testing::TokensJson(tokens), fx["tokens"].dump())
        << fx["name"].get<std::string>();
  }
}

TEST(PipelineTest, ReferenceExamples) {
  EXPECT_EQ(Surfaces(Pipe().normalize_and_tokenize("Earth's heat!")),
            (std::vector<std::string>{"earth", "heat"}));
  EXPECT_TRUE(Pipe().normalize_and_tokenize("").empty());
  EXPECT_TRUE(Pipe().normalize_and_tokenize(" \n\t ").empty());
}

TEST(PipelineTest, InvalidUtf8) {
  for (std::string bad : {std::string("abc\xff"), std::string("\xc3"),
                          std::string("\xe2\x80"), std::string("a\xc0\xafz"),
                          std::string("\xed\xa0\x80")}) {
    EXPECT_THROW(
        {
          try {
            Pipe().normalize_and_tokenize(bad);
          } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::kInput);
            throw;
          }
        },
        Error);
  }
}

std::string RandomText(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "the", "The", "cat's", "dogs'", "don't", "It's", "an", "An", "apple",
      "well-known", "sunlight", "spaceboat", "e-mail", "café", "—", "–", " ",
      "  ", "\n", ".", ",", "!", "'", "’", "-", "--", "42", "“", "”", "HEAT",
      "thing", "talker", "won't", "I'd", "x", "ours", "tv"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(0, 30);
  std::string out;
  for (int i = len(rng); i > 0; --i) out += pieces[pick(rng)];
  return out;
}

TEST(PipelineTest, OutputInvariants) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 500; ++iter) {
    std::string text = RandomText(rng);
    std::vector<Token> tokens = Pipe().normalize_and_tokenize(text);
    std::size_t last_begin = 0;
    for (const Token& t : tokens) {
      EXPECT_FALSE(t.surface.empty()) << text;
      EXPECT_TRUE(std::all_of(t.surface.begin(), t.surface.end(),
                              [](char c) { return c >= 'a' && c <= 'z'; }))
          << t.surface << " from " << text;
      EXPECT_LT(t.span.begin, t.span.end);
      EXPECT_LE(t.span.end, text.size());
      EXPECT_GE(t.span.begin, last_begin);
      last_begin = t.span.begin;
    }
    // Deterministic.
    EXPECT_EQ(testing::TokensJson(tokens),
              testing::TokensJson(Pipe().normalize_and_tokenize(text)));
  }
}

TEST(PipelineTest, Idempotent) {
  std::mt19937_64 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    std::string text = RandomText(rng);
    std::vector<std::string> once = Surfaces(Pipe().normalize_and_tokenize(text));
    std::string joined;
    for (const std::string& s : once) joined += s + " ";
    EXPECT_EQ(Surfaces(Pipe().normalize_and_tokenize(joined)), once) << text;
  }
}

// Exhaustive scan over every split point, independent of the pipeline's
// search order.
std::vector<std::string> SplitOracle(const Morphology& m, const std::string& s) {
  if (!m.analyze(s).empty() || m.is_extra(s)) return {s};
  auto known = [&](const std::string& part) {
    return part.size() >= 3 && (!m.analyze(part).empty() || m.is_extra(part));
  };
  for (std::size_t cut = s.size(); cut-- > 0;) {
    std::string a = s.substr(0, cut), b = s.substr(cut);
    if (known(a) && known(b)) return {a, b};
  }
  return {s};
}

TEST(SplitCompoundTest, MatchesOracle) {
  const Morphology& m = Pipe().morphology();
  EXPECT_EQ(Pipe().split_compound("sunlight"),
            (std::vector<std::string>{"sun", "light"}));
  EXPECT_EQ(Pipe().split_compound("spaceboat"),
            (std::vector<std::string>{"space", "boat"}));
  EXPECT_EQ(Pipe().split_compound("thing"), (std::vector<std::string>{"thing"}));
  EXPECT_EQ(Pipe().split_compound("zzzzzz"), (std::vector<std::string>{"zzzzzz"}));
  const std::vector<std::string>& words = m.closure().ordered;
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  for (int i = 0; i < 2000; ++i) {
    std::string s = words[pick(rng)] + words[pick(rng)];
    EXPECT_EQ(Pipe().split_compound(s), SplitOracle(m, s)) << s;
  }
  for (const std::string& w : words) {
    EXPECT_EQ(Pipe().split_compound(w), (std::vector<std::string>{w}));
  }
}

TEST(ContractionTest, Expand) {
  EXPECT_EQ(Pipe().expand_contraction("don't"),
            (std::vector<std::string>{"do", "not"}));
  EXPECT_EQ(Pipe().expand_contraction("won't"),
            (std::vector<std::string>{"will", "not"}));
  EXPECT_EQ(Pipe().expand_contraction("it's"),
            (std::vector<std::string>{"it", "is"}));
  EXPECT_EQ(Pipe().expand_contraction("thing"),
            (std::vector<std::string>{"thing"}));
}

TEST(ContractionTest, ParseErrors) {
  EXPECT_EQ(ContractionTable::ParseString("").size(), 0u);
  ContractionTable t = ContractionTable::ParseString("can't\tcan not\n");
  ASSERT_NE(t.find("can't"), nullptr);
  EXPECT_EQ(*t.find("can't"), (std::vector<std::string>{"can", "not"}));
  EXPECT_EQ(t.find("won't"), nullptr);
  for (const char* bad : {"can't\n", "can't\t\n", "a\tb\na\tc\n", "\tnot\n"}) {
    EXPECT_THROW(ContractionTable::ParseString(bad), Error) << bad;
  }
  EXPECT_THROW(ContractionTable::Load("/nonexistent/contractions.tsv"), Error);
}

TEST(StepNameTest, Names) {
  EXPECT_EQ(StepName(NormalizationStep::kCharFilter), "char-filter");
  EXPECT_EQ(StepName(NormalizationStep::kCompoundSplit), "compound-split");
}

}  // namespace
}  // namespace tenhundred
