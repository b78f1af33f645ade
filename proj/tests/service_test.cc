#include "tenhundred/service.h"

#include <chrono>
#include <set>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>
#include <nlohmann/json.hpp>

#include "tenhundred/error.h"
#include "test_support.h"

namespace tenhundred {
namespace {

using nlohmann::json;

const CheckService& Svc() {
  static const CheckService svc(testing::ReferenceToolkit(), ServiceOptions{});
  return svc;
}

json Check(const std::string& text) {
  HttpResponse r = Svc().handle_check(json{{"text", text}}.dump());
  EXPECT_EQ(r.status, 200) << r.body;
  return json::parse(r.body);
}

std::string Header(const HttpResponse& r, const std::string& name) {
  for (const auto& [k, v] : r.headers) {
    if (k == name) return v;
  }
  return "";
}

TEST(CheckHandlerTest, Verdicts) {
  json ok = Check("the heat");
  EXPECT_TRUE(ok["annotations"].empty());
  EXPECT_EQ(ok["stats"]["tokens"], 2);
  EXPECT_EQ(ok["stats"]["allowed"], 2);
  EXPECT_EQ(ok["stats"]["coverage"], 1.0);

  json extra = Check("mad heat");
  ASSERT_EQ(extra["annotations"].size(), 1u);
  const json& a = extra["annotations"][0];
  EXPECT_EQ(a["surface"], "mad");
  EXPECT_EQ(a["verdict"], "extra");
  EXPECT_EQ(a["start"], 0);
  EXPECT_EQ(a["end"], 3);
  EXPECT_EQ(a["rules"], json::array());
  EXPECT_FALSE(a["suggestions"].empty());
  EXPECT_EQ(extra["stats"]["extra"], 1);

  EXPECT_TRUE(Check("space boat")["annotations"].empty());

  json bad = Check("the xylophone");
  ASSERT_EQ(bad["annotations"].size(), 1u);
  EXPECT_EQ(bad["annotations"][0]["verdict"], "rejected");
  EXPECT_EQ(bad["annotations"][0]["start"], 4);
  EXPECT_EQ(bad["annotations"][0]["end"], 13);

  json empty = Check("");
  EXPECT_EQ(empty["stats"]["tokens"], 0);
  EXPECT_TRUE(empty["stats"]["coverage"].is_null());
}

TEST(CheckHandlerTest, SpansAreByteOffsets) {
  json r = Check("café xylophone");
  ASSERT_EQ(r["annotations"].size(), 2u);  // "caf" after filtering
  EXPECT_EQ(r["annotations"][1]["start"], 6);
  EXPECT_EQ(r["annotations"][1]["end"], 15);
}

TEST(CheckHandlerTest, BadRequests) {
  for (const char* body : {"", "{", "[]", "\"text\"", "{}", "{\"text\": 3}",
                           "{\"text\": null}", "{\"txt\": \"a\"}"}) {
    HttpResponse r = Svc().handle_check(body);
    EXPECT_EQ(r.status, 400) << body;
    EXPECT_TRUE(json::parse(r.body).contains("error")) << body;
  }
  EXPECT_EQ(Svc().handle_check("{\"text\": \"\xff\"}").status, 400);

  CheckService small(testing::ReferenceToolkit(), ServiceOptions{64, "*"});
  std::string big = json{{"text", std::string(100, 'a')}}.dump();
  EXPECT_EQ(small.handle_check(big).status, 413);
  EXPECT_EQ(small.handle_check(json{{"text", "the"}}.dump()).status, 200);
}

TEST(CheckHandlerTest, Deterministic) {
  std::string text;
  for (int i = 0; i < 500; ++i) text += "the mad xylophone talked happily ";
  std::string body = json{{"text", text}}.dump();
  std::string first = Svc().handle_check(body).body;
  for (int i = 0; i < 5; ++i) EXPECT_EQ(Svc().handle_check(body).body, first);
}

TEST(WordlistHandlerTest, ContentAndEtag) {
  HttpResponse r = Svc().handle_wordlist(std::nullopt);
  ASSERT_EQ(r.status, 200);
  json j = json::parse(r.body);
  EXPECT_EQ(j["size"], 998);
  EXPECT_EQ(j["entries"].size(), 998u);
  std::set<std::string> surfaces;
  for (const json& e : j["entries"]) surfaces.insert(e["surface"].get<std::string>());
  EXPECT_TRUE(surfaces.contains("television"));
  EXPECT_FALSE(surfaces.contains("mad"));
  std::string etag = Header(r, "ETag");
  EXPECT_EQ(etag, "\"" + j["version"].get<std::string>() + "\"");
  EXPECT_EQ(etag, Svc().etag());

  HttpResponse cached = Svc().handle_wordlist(etag);
  EXPECT_EQ(cached.status, 304);
  EXPECT_TRUE(cached.body.empty());
  EXPECT_EQ(Svc().handle_wordlist("*").status, 304);
  EXPECT_EQ(Svc().handle_wordlist("\"stale\"").status, 200);
}

TEST(ExpandHandlerTest, Cases) {
  auto surfaces = [](std::string_view word) {
    HttpResponse r = Svc().handle_expand(word);
    EXPECT_EQ(r.status, 200) << word;
    std::set<std::string> out;
    json j = json::parse(r.body);
    EXPECT_EQ(j["word"], word);
    for (const json& d : j["derivations"]) out.insert(d["surface"].get<std::string>());
    return out;
  };
  std::set<std::string> low = surfaces("low");
  for (const char* f : {"low", "lower", "lowest", "lowering", "lowered"}) {
    EXPECT_TRUE(low.contains(f)) << f;
  }
  std::set<std::string> we = surfaces("we");
  EXPECT_TRUE(we.contains("us"));
  EXPECT_TRUE(we.contains("ours"));
  EXPECT_EQ(Svc().handle_expand("zzz").status, 404);
  EXPECT_EQ(Svc().handle_expand("").status, 400);
  EXPECT_EQ(Svc().handle_expand(std::nullopt).status, 400);
}

class HttpTest : public ::testing::Test {
 protected:
  void SetUp() override {
    auto svc = std::make_shared<const CheckService>(testing::ReferenceToolkit(),
                                                    ServiceOptions{4096, "*"});
    server_ = std::make_unique<HttpServer>(svc);
    port_ = server_->bind("127.0.0.1", 0);
    thread_ = std::thread([this] { server_->serve(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    for (int i = 0; i < 100 && !client_->Get("/v1/wordlist"); ++i) {
      std::this_thread::sleep_for(std::chrono::milliseconds(10));
    }
  }
  void TearDown() override {
    server_->stop();
    thread_.join();
  }

  std::unique_ptr<HttpServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(HttpTest, EndToEnd) {
  EXPECT_GT(port_, 0);
  auto r = client_->Post("/v1/check", R"({"text": "mad heat"})", "application/json");
  ASSERT_TRUE(r);
  EXPECT_EQ(r->status, 200);
  EXPECT_EQ(r->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_EQ(r->body, Svc().handle_check(R"({"text": "mad heat"})").body);

  auto w = client_->Get("/v1/wordlist");
  ASSERT_TRUE(w);
  EXPECT_EQ(w->status, 200);
  std::string etag = w->get_header_value("ETag");
  EXPECT_FALSE(etag.empty());
  auto w2 = client_->Get("/v1/wordlist", {{"If-None-Match", etag}});
  ASSERT_TRUE(w2);
  EXPECT_EQ(w2->status, 304);

  auto e = client_->Get("/v1/expand?word=talk");
  ASSERT_TRUE(e);
  EXPECT_EQ(e->status, 200);
  auto missing = client_->Get("/v1/expand?word=zzz");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 404);

  auto pre = client_->Options("/v1/check");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  EXPECT_FALSE(pre->get_header_value("Access-Control-Allow-Methods").empty());

  std::string big = json{{"text", std::string(5000, 'a')}}.dump();
  auto too_big = client_->Post("/v1/check", big, "application/json");
  ASSERT_TRUE(too_big);
  EXPECT_EQ(too_big->status, 413);

  auto bad = client_->Post("/v1/check", "nope", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

TEST_F(HttpTest, RepeatedRequestsAreIdentical) {
  std::string text;
  for (int i = 0; i < 200; ++i) text += "the things we thought about spaceships ";
  std::string body = json{{"text", text.substr(0, 3500)}}.dump();
  auto first = client_->Post("/v1/check", body, "application/json");
  ASSERT_TRUE(first);
  for (int i = 0; i < 10; ++i) {
    auto again = client_->Post("/v1/check", body, "application/json");
    ASSERT_TRUE(again);
    EXPECT_EQ(again->body, first->body);
  }
}

TEST(HttpServerTest, BindFailure) {
  auto svc = std::make_shared<const CheckService>(testing::ReferenceToolkit(),
                                                  ServiceOptions{});
  HttpServer server(svc);
  EXPECT_THROW(server.bind("256.0.0.1", 0), Error);
}

}  // namespace
}  // namespace tenhundred
