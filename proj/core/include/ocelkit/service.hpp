#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <string_view>

namespace ocelkit {

struct ServiceOptions {
  /// Sessions idle for longer than this are dropped.
  std::chrono::milliseconds session_ttl = std::chrono::hours(1);
  /// Snapshots kept per session; older ones are evicted (410 on access).
  std::size_t max_depth = 16;
  /// Larger request bodies are answered with 413.
  std::size_t max_payload = std::size_t{512} << 20;
  /// Served under "/" when non-empty.
  std::filesystem::path static_dir;
};

struct HttpRequest {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
  std::string content_type;
};

struct HttpResponse {
  int status = 200;
  std::string content_type = "application/json";
  std::string body;
};

/// HTTP facade over the library. Each uploaded log opens a session holding
/// a stack of immutable snapshots; pipelines push, undo pops.
///
///   POST /api/logs                      JSON-OCEL body -> {log_id}
///   GET  /api/logs/{id}/summary         [?snapshot=i]
///   GET  /api/logs/{id}/matrix          [?snapshot=i]
///   GET  /api/logs/{id}/events          ?offset&limit[&snapshot=i]
///   POST /api/logs/{id}/pipeline        pipeline descriptor -> {new_snapshot_index, diff}
///   GET  /api/logs/{id}/samples         ?strategy=events|objects|types|connected&k&seed
///   GET  /api/logs/{id}/export          current snapshot as JSON-OCEL
///   POST /api/logs/{id}/undo
///   GET  /api/health
///
/// Reads take a reference to the current snapshot and never block on a
/// running pipeline; mutations are serialized per session.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Transport-independent dispatch; the HTTP server routes every /api
  /// request through here.
  HttpResponse handle(const HttpRequest& request);

  /// Binds the listening socket; port 0 picks a free one. Returns the bound
  /// port or -1.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  bool run();
  void stop();
  void wait_until_ready() const;

  std::size_t session_count() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace ocelkit
