#pragma once

#include <memory>
#include <string>

#include "bpm/service.hpp"

namespace bpm::service {

// HTTP front end for GameService (cpp-httplib). Adds permissive CORS headers
// and answers preflight requests.
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds to `port` (0 picks a free one) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  // Blocks serving requests until stop().
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bpm::service
