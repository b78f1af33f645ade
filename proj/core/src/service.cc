#include "tenhundred/service.h"

#include <cstddef>

// Bodies sent as form-encoded (curl's default) get a separate, small cap in
// httplib; the handler enforces the real limit.
#define CPPHTTPLIB_FORM_URL_ENCODED_PAYLOAD_MAX_LENGTH (std::size_t{1} << 30)
#include "httplib.h"
#include "json.hpp"
#include "tenhundred/error.h"
#include "tenhundred/report.h"

namespace tenhundred {
namespace {

HttpResponse ErrorResponse(int status, std::string_view message) {
  nlohmann::ordered_json j;
  j["error"] = std::string(message);
  return {status, j.dump(), "application/json", {}};
}

}  // namespace

CheckService::CheckService(std::shared_ptr<const Toolkit> toolkit,
                           ServiceOptions options)
    : toolkit_(std::move(toolkit)),
      options_(std::move(options)),
      etag_("\"" + toolkit_->word_list().ContentHash() + "\""),
      wordlist_body_(WordListJson(toolkit_->word_list())) {}

HttpResponse CheckService::handle_check(std::string_view body) const {
  if (body.size() > options_.max_body_bytes) {
    return ErrorResponse(413, "request body exceeds " +
                                  std::to_string(options_.max_body_bytes) +
                                  " bytes");
  }
  nlohmann::json request = nlohmann::json::parse(body, nullptr, false);
  if (request.is_discarded() || !request.is_object()) {
    return ErrorResponse(400, "body must be a JSON object");
  }
  auto text = request.find("text");
  if (text == request.end() || !text->is_string()) {
    return ErrorResponse(400, "missing string field 'text'");
  }
  try {
    CheckReport report = RunCheck(*toolkit_, text->get_ref<const std::string&>());
    return {200, CheckReportJson(report), "application/json", {}};
  } catch (const Error& e) {
    return ErrorResponse(400, e.what());
  }
}

HttpResponse CheckService::handle_wordlist(
    std::optional<std::string_view> if_none_match) const {
  HttpResponse r;
  r.headers.emplace_back("ETag", etag_);
  r.headers.emplace_back("Cache-Control", "no-cache");
  if (if_none_match && (*if_none_match == etag_ || *if_none_match == "*")) {
    r.status = 304;
    return r;
  }
  r.body = wordlist_body_;
  return r;
}

HttpResponse CheckService::handle_expand(
    std::optional<std::string_view> word) const {
  if (!word || word->empty()) {
    return ErrorResponse(400, "missing query parameter 'word'");
  }
  std::optional<std::size_t> index = toolkit_->word_list().index_of(*word);
  if (!index) {
    return ErrorResponse(404, "'" + std::string(*word) + "' is not listed");
  }
  std::vector<Derivation> forms = toolkit_->morphology().derive_forms(*index);
  return {200, DerivationsJson(*word, forms, false), "application/json", {}};
}

struct HttpServer::Impl {
  std::shared_ptr<const CheckService> service;
  httplib::Server server;
};

namespace {

void Send(const CheckService& service, const HttpResponse& r,
          httplib::Response& res) {
  res.status = r.status;
  for (const auto& [k, v] : r.headers) res.set_header(k, v);
  if (!service.options().cors_origin.empty()) {
    res.set_header("Access-Control-Allow-Origin", service.options().cors_origin);
    res.set_header("Access-Control-Expose-Headers", "ETag");
  }
  if (!r.body.empty()) res.set_content(r.body, r.content_type);
}

}  // namespace

HttpServer::HttpServer(std::shared_ptr<const CheckService> service)
    : impl_(std::make_unique<Impl>()) {
  impl_->service = std::move(service);
  const CheckService& svc = *impl_->service;
  httplib::Server& s = impl_->server;
  // Let the handler answer 413 with a JSON body instead of httplib's default.
  s.set_payload_max_length(svc.options().max_body_bytes + 1);

  s.Post("/v1/check", [&svc](const httplib::Request& req,
                             httplib::Response& res) {
    Send(svc, svc.handle_check(req.body), res);
  });
  s.Get("/v1/wordlist", [&svc](const httplib::Request& req,
                               httplib::Response& res) {
    std::string inm = req.get_header_value("If-None-Match");
    Send(svc,
         svc.handle_wordlist(req.has_header("If-None-Match")
                                 ? std::optional<std::string_view>(inm)
                                 : std::nullopt),
         res);
  });
  s.Get("/v1/expand", [&svc](const httplib::Request& req,
                             httplib::Response& res) {
    std::string word = req.get_param_value("word");
    Send(svc,
         svc.handle_expand(req.has_param("word")
                               ? std::optional<std::string_view>(word)
                               : std::nullopt),
         res);
  });
  s.Options(R"(/v1/.*)", [&svc](const httplib::Request&,
                                httplib::Response& res) {
    if (!svc.options().cors_origin.empty()) {
      res.set_header("Access-Control-Allow-Origin", svc.options().cors_origin);
      res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
      res.set_header("Access-Control-Allow-Headers",
                     "Content-Type, If-None-Match");
    }
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                        : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) {
    throw Error(ErrorCode::kInput,
                "cannot bind " + host + ":" + std::to_string(port));
  }
  return bound;
}

void HttpServer::serve() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace tenhundred
