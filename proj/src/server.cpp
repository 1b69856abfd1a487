#include "bpm/server.hpp"

#include <httplib.h>

namespace bpm::service {

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {}
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& srv = impl_->server;
  srv.set_default_headers({
      {"Access-Control-Allow-Origin", "*"},
      {"Access-Control-Allow-Methods", "GET, POST, DELETE, OPTIONS"},
      {"Access-Control-Allow-Headers", "Content-Type"},
  });

  auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    const Response out = impl_->service.handle(req.method, req.path, req.body);
    res.status = out.status;
    if (out.status != 204) res.set_content(out.body.dump(), "application/json");
  };
  srv.Get(R"(/api/.*)", forward);
  srv.Post(R"(/api/.*)", forward);
  srv.Delete(R"(/api/.*)", forward);
  srv.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace bpm::service
