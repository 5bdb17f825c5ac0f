#include "ocelkit/service.hpp"

#include <charconv>
#include <mutex>
#include <random>
#include <regex>
#include <unordered_map>
#include <vector>

#include "httplib.h"
#include "json_codec.hpp"
#include "ocelkit/errors.hpp"
#include "ocelkit/io.hpp"
#include "ocelkit/model.hpp"
#include "ocelkit/sampling.hpp"
#include "ocelkit/stats.hpp"

namespace ocelkit {

namespace {

using detail::json;
using Clock = std::chrono::steady_clock;

struct Snapshot {
  std::shared_ptr<const OcelLog> log;
  LogSummary summary;
};

struct Session {
  std::mutex writer;  // serializes pipeline/undo
  mutable std::mutex state;
  std::vector<std::shared_ptr<const Snapshot>> stack;
  std::size_t evicted = 0;  // absolute index of stack.front()
  Clock::time_point last_access;
};

struct HttpError {
  int status;
  std::string message;
};

HttpResponse reply(int status, const json& body) { return {status, "application/json", body.dump(2) + "\n"}; }

HttpResponse error(int status, std::string message, const std::string& location = {}) {
  json j = {{"error", std::move(message)}};
  if (!location.empty()) j["location"] = location;
  return reply(status, j);
}

std::shared_ptr<const Snapshot> make_snapshot(OcelLog log) {
  auto s = std::make_shared<Snapshot>();
  s->summary = summarize(log);
  s->log = std::make_shared<const OcelLog>(std::move(log));
  return s;
}

std::optional<std::uint64_t> query_uint(const HttpRequest& r, const std::string& key) {
  auto it = r.query.find(key);
  if (it == r.query.end()) return std::nullopt;
  std::uint64_t v = 0;
  const auto& s = it->second;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || p != s.data() + s.size())
    throw HttpError{422, "query parameter '" + key + "' must be a non-negative integer"};
  return v;
}

json event_row(const OcelLog& log, const Event& e) {
  const Dictionary& d = log.dict();
  json omap = json::array();
  for (ObjectId o : e.omap) omap.push_back(d.name(o));
  json vmap = json::object();
  for (const auto& [a, v] : e.vmap) vmap[d.name(a)] = format_value(v);
  return {{"id", d.name(e.id)},
          {"activity", d.name(e.activity)},
          {"timestamp", format_timestamp(e.time)},
          {"omap", std::move(omap)},
          {"vmap", std::move(vmap)}};
}

bool is_text_payload(const std::string& content_type) {
  if (content_type.empty()) return true;
  return content_type.find("json") != std::string::npos || content_type.rfind("text/", 0) == 0;
}

}  // namespace

struct Service::Impl {
  ServiceOptions options;
  mutable std::mutex sessions_mutex;
  std::unordered_map<std::string, std::shared_ptr<Session>> sessions;
  std::mt19937_64 id_rng{std::random_device{}()};
  httplib::Server server;

  std::string new_id() {
    static constexpr char hex[] = "0123456789abcdef";
    std::string id(16, '0');
    std::uint64_t bits = id_rng();
    for (char& c : id) {
      c = hex[bits & 15];
      bits >>= 4;
    }
    return id;
  }

  void sweep(Clock::time_point now) {
    for (auto it = sessions.begin(); it != sessions.end();) {
      std::lock_guard lk(it->second->state);
      if (now - it->second->last_access > options.session_ttl) it = sessions.erase(it);
      else ++it;
    }
  }

  std::string open_session(OcelLog log) {
    auto s = std::make_shared<Session>();
    s->stack.push_back(make_snapshot(std::move(log)));
    s->last_access = Clock::now();
    std::lock_guard lk(sessions_mutex);
    sweep(s->last_access);
    std::string id;
    do id = new_id(); while (sessions.contains(id));
    sessions.emplace(id, std::move(s));
    return id;
  }

  std::shared_ptr<Session> session(const std::string& id) {
    const auto now = Clock::now();
    std::lock_guard lk(sessions_mutex);
    sweep(now);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw HttpError{404, "unknown log id '" + id + "'"};
    std::lock_guard slk(it->second->state);
    it->second->last_access = now;
    return it->second;
  }

  /// Current snapshot, or the one named by ?snapshot=i.
  std::pair<std::shared_ptr<const Snapshot>, std::size_t> snapshot(Session& s, const HttpRequest& r) {
    const auto wanted = query_uint(r, "snapshot");
    std::lock_guard lk(s.state);
    const std::size_t top = s.evicted + s.stack.size() - 1;
    if (!wanted) return {s.stack.back(), top};
    if (*wanted < s.evicted) throw HttpError{410, "snapshot " + std::to_string(*wanted) + " has been evicted"};
    if (*wanted > top) throw HttpError{404, "no snapshot " + std::to_string(*wanted)};
    return {s.stack[*wanted - s.evicted], *wanted};
  }

  HttpResponse upload(const HttpRequest& r) {
    if (!is_text_payload(r.content_type)) return error(415, "expected a JSON-OCEL text body");
    Warnings warnings;
    OcelLog log;
    try {
      log = parse_json_ocel(r.body, &warnings);
    } catch (const ParseError& e) {
      return error(400, e.what(), e.where());
    }
    const auto report = validate(log);
    if (!report.ok()) {
      json problems = json::array();
      for (const auto& v : report.violations)
        problems.push_back({{"kind", std::string(to_string(v.kind))}, {"subject", v.subject}, {"message", v.message}});
      json body = {{"error", "log failed validation"}, {"violations", std::move(problems)}};
      return reply(400, body);
    }
    const LogSummary summary = summarize(log);
    const std::string id = open_session(std::move(log));
    return reply(200, {{"log_id", id}, {"snapshot_index", 0}, {"summary", detail::encode(summary)}, {"warnings", warnings}});
  }

  HttpResponse events(Session& s, const HttpRequest& r) {
    const std::uint64_t offset = query_uint(r, "offset").value_or(0);
    const std::uint64_t limit = query_uint(r, "limit").value_or(100);
    if (limit == 0 || limit > 10000) throw HttpError{422, "limit must lie in [1, 10000]"};
    auto [snap, index] = snapshot(s, r);
    const auto evs = snap->log->events();
    json rows = json::array();
    for (std::uint64_t i = offset; i < evs.size() && i < offset + limit; ++i) rows.push_back(event_row(*snap->log, evs[i]));
    return reply(200, {{"snapshot_index", index},
                       {"total", evs.size()},
                       {"offset", offset},
                       {"limit", limit},
                       {"events", std::move(rows)}});
  }

  HttpResponse pipeline(Session& s, const HttpRequest& r) {
    FilterPipeline p;
    try {
      p = parse_pipeline(r.body);
    } catch (const InvalidArgument& e) {
      return error(422, e.what());
    }
    std::lock_guard writer(s.writer);
    std::shared_ptr<const Snapshot> base;
    {
      std::lock_guard lk(s.state);
      base = s.stack.back();
    }
    PipelineResult result;
    try {
      result = apply_pipeline(*base->log, p);
    } catch (const InvalidArgument& e) {
      return error(422, e.what());
    }
    auto next = make_snapshot(std::move(result.log));
    std::size_t index;
    {
      std::lock_guard lk(s.state);
      s.stack.push_back(std::move(next));
      while (s.stack.size() > std::max<std::size_t>(options.max_depth, 1)) {
        s.stack.erase(s.stack.begin());
        ++s.evicted;
      }
      index = s.evicted + s.stack.size() - 1;
    }
    return reply(200, {{"new_snapshot_index", index}, {"diff", detail::encode(result.diff)}});
  }

  HttpResponse undo(Session& s) {
    std::lock_guard writer(s.writer);
    std::lock_guard lk(s.state);
    if (s.stack.size() <= 1) return error(409, "nothing to undo");
    s.stack.pop_back();
    return reply(200, {{"snapshot_index", s.evicted + s.stack.size() - 1},
                       {"summary", detail::encode(s.stack.back()->summary)}});
  }

  HttpResponse samples(Session& s, const HttpRequest& r) {
    auto it = r.query.find("strategy");
    const std::string strategy = it == r.query.end() ? "connected" : it->second;
    auto [snap, index] = snapshot(s, r);
    if (strategy == "connected") {
      const SamplePartition part = connected_event_samples(snap->log);
      return reply(200, {{"strategy", strategy},
                         {"snapshot_index", index},
                         {"blocks", part.size()},
                         {"block_sizes", part.block_sizes()}});
    }
    if (strategy != "events" && strategy != "objects" && strategy != "types")
      throw HttpError{422, "unknown strategy '" + strategy + "' (expected events, objects, types or connected)"};
    const auto k = query_uint(r, "k");
    if (!k) throw HttpError{422, "strategy '" + strategy + "' needs k"};
    const std::uint64_t seed = query_uint(r, "seed").value_or(0);
    OcelLog sample;
    try {
      if (strategy == "events") sample = sample_events(*snap->log, *k, seed);
      else if (strategy == "objects") sample = sample_objects(*snap->log, *k, seed);
      else sample = sample_object_types(*snap->log, *k, seed);
    } catch (const InvalidArgument& e) {
      throw HttpError{422, e.what()};
    }
    const LogSummary summary = summarize(sample);
    const std::string id = open_session(std::move(sample));
    return reply(200, {{"strategy", strategy},
                       {"k", *k},
                       {"seed", seed},
                       {"log_id", id},
                       {"summary", detail::encode(summary)}});
  }

  HttpResponse dispatch(const HttpRequest& r) {
    static const std::regex route(R"(^/api/logs/([^/]+)/([a-z]+)$)");
    if (r.body.size() > options.max_payload) return error(413, "payload exceeds the configured limit");
    if (r.path == "/api/health" && r.method == "GET") return reply(200, {{"status", "ok"}});
    if (r.path == "/api/logs") {
      if (r.method != "POST") return error(405, "use POST");
      return upload(r);
    }
    std::smatch m;
    if (!std::regex_match(r.path, m, route)) return error(404, "no such endpoint");
    const std::string action = m[2];
    const bool post = action == "pipeline" || action == "undo";
    const bool get = action == "summary" || action == "matrix" || action == "events" || action == "samples" ||
                     action == "export";
    if (!post && !get) return error(404, "no such endpoint");
    if ((post && r.method != "POST") || (get && r.method != "GET"))
      return error(405, std::string("use ") + (post ? "POST" : "GET"));

    auto s = session(m[1]);
    if (action == "summary") {
      auto [snap, index] = snapshot(*s, r);
      json j = detail::encode(snap->summary);
      j["snapshot_index"] = index;
      return reply(200, j);
    }
    if (action == "matrix") {
      auto [snap, index] = snapshot(*s, r);
      json j = detail::encode(relation_matrix(*snap->log));
      j["snapshot_index"] = index;
      return reply(200, j);
    }
    if (action == "events") return events(*s, r);
    if (action == "export") {
      auto [snap, index] = snapshot(*s, r);
      return {200, "application/json", write_json_ocel(*snap->log)};
    }
    if (action == "samples") return samples(*s, r);
    if (action == "pipeline") return pipeline(*s, r);
    return undo(*s);
  }
};

Service::Service(ServiceOptions options) : impl_(std::make_unique<Impl>()) {
  impl_->options = std::move(options);
  auto& srv = impl_->server;
  srv.set_payload_max_length(impl_->options.max_payload);
  const auto forward = [this](const httplib::Request& req, httplib::Response& res) {
    HttpRequest r{req.method, req.path, {}, req.body, req.get_header_value("Content-Type")};
    for (const auto& [k, v] : req.params) r.query.emplace(k, v);
    const HttpResponse out = handle(r);
    res.status = out.status;
    res.set_content(out.body, out.content_type);
  };
  srv.Get("/api/.*", forward);
  srv.Post("/api/.*", forward);
  srv.Put("/api/.*", forward);
  srv.Delete("/api/.*", forward);
  if (!impl_->options.static_dir.empty()) srv.set_mount_point("/", impl_->options.static_dir.string());
}

Service::~Service() { stop(); }

HttpResponse Service::handle(const HttpRequest& request) {
  try {
    return impl_->dispatch(request);
  } catch (const HttpError& e) {
    return error(e.status, e.message);
  } catch (const InvalidArgument& e) {
    return error(422, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::run() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_->server.is_running()) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

std::size_t Service::session_count() const {
  std::lock_guard lk(impl_->sessions_mutex);
  impl_->sweep(Clock::now());
  return impl_->sessions.size();
}

}  // namespace ocelkit
