#ifndef TENHUNDRED_SERVICE_H_
#define TENHUNDRED_SERVICE_H_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tenhundred/toolkit.h"

namespace tenhundred {

struct ServiceOptions {
  std::size_t max_body_bytes = 1 << 20;
  // Value of Access-Control-Allow-Origin; empty disables CORS headers.
  std::string cors_origin = "*";
};

struct HttpResponse {
  int status = 200;
  std::string body;
  std::string content_type = "application/json";
  std::vector<std::pair<std::string, std::string>> headers;
};

// Request handlers without any transport. Pure functions of the request and
// the loaded lexicon.
class CheckService {
 public:
  CheckService(std::shared_ptr<const Toolkit> toolkit, ServiceOptions options);

  // POST /v1/check
  HttpResponse handle_check(std::string_view body) const;
  // GET /v1/wordlist
  HttpResponse handle_wordlist(std::optional<std::string_view> if_none_match) const;
  // GET /v1/expand?word=
  HttpResponse handle_expand(std::optional<std::string_view> word) const;

  const ServiceOptions& options() const { return options_; }
  const std::string& etag() const { return etag_; }

 private:
  std::shared_ptr<const Toolkit> toolkit_;
  ServiceOptions options_;
  std::string etag_;
  std::string wordlist_body_;
};

// HTTP/1.1 front end for CheckService.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<const CheckService> service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds `host:port` (port 0 picks a free one) and returns the bound port.
  // Throws Error(kInput) when binding fails.
  int bind(const std::string& host, int port);
  // Serves until stop(). Call after bind().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace tenhundred

#endif  // TENHUNDRED_SERVICE_H_
