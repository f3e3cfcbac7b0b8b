#include "lf/service.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "lf/cluster.hpp"
#include "lf/report.hpp"
#include "lf/weave.hpp"

namespace lf {

using nlohmann::json;

namespace {

struct Session {
  std::mutex mu;
  BraidWord braid;
  std::vector<Seed> states;  // states.back() is current
};

struct HttpError {
  int status;
  std::string message;
};

void send_json(httplib::Response& res, const std::string& body, int status = 200) {
  res.status = status;
  res.set_header("Access-Control-Allow-Origin", "*");
  res.set_content(body + "\n", "application/json; charset=utf-8");
}

void send_error(httplib::Response& res, int status, const std::string& message) {
  json j{{"schema", "error.v1"}, {"status", status}, {"error", message}};
  send_json(res, j.dump(), status);
}

json parse_body(const httplib::Request& req) {
  if (req.body.empty()) return json::object();
  try {
    auto j = json::parse(req.body);
    if (!j.is_object()) throw HttpError{400, "body must be a JSON object"};
    return j;
  } catch (const json::parse_error&) {
    throw HttpError{400, "malformed JSON body"};
  }
}

}  // namespace

struct Service::Impl {
  httplib::Server server;
  std::mutex sessions_mu;
  std::map<std::string, std::shared_ptr<Session>> sessions;
  std::mt19937_64 rng{std::random_device{}()};
  std::uint64_t counter = 0;

  std::string new_id() {
    std::ostringstream os;
    os << std::hex << ++counter << "a" << (rng() & 0xffffffffffffULL);
    return os.str();
  }

  std::shared_ptr<Session> find(const std::string& id) {
    std::lock_guard lock(sessions_mu);
    auto it = sessions.find(id);
    if (it == sessions.end()) throw HttpError{404, "unknown session " + id};
    return it->second;
  }

  static std::string snapshot(const std::string& id, Session& s) {
    return snapshot_json(id, s.states.back(), s.states.size() > 1);
  }

  template <class F>
  void route(httplib::Response& res, F&& f) {
    try {
      f();
    } catch (const HttpError& e) {
      send_error(res, e.status, e.message);
    } catch (const BraidParseError& e) {
      send_error(res, 400, e.what());
    } catch (const ClusterError& e) {
      send_error(res, 400, e.what());
    } catch (const BudgetExceeded& e) {
      send_error(res, 422, e.what());
    } catch (const std::invalid_argument& e) {
      send_error(res, 400, e.what());
    } catch (const std::exception& e) {
      send_error(res, 500, e.what());
    }
  }

  void install() {
    server.Get("/healthz", [this](const httplib::Request&, httplib::Response& res) {
      std::size_t n;
      {
        std::lock_guard lock(sessions_mu);
        n = sessions.size();
      }
      send_json(res, json{{"schema", "health.v1"}, {"status", "ok"}, {"sessions", n}}.dump());
    });

    server.Post("/session", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto body = parse_body(req);
        if (!body.contains("braid") || !body["braid"].is_string()) throw HttpError{400, "field 'braid' (string) required"};
        int n = body.value("n", 0);
        auto beta = parse_braid(body["braid"].get<std::string>(), n);
        auto s = std::make_shared<Session>();
        s->braid = beta;
        s->states.push_back(fence_seed(beta));
        std::string id;
        {
          std::lock_guard lock(sessions_mu);
          id = new_id();
          sessions[id] = s;
        }
        std::lock_guard lock(s->mu);
        send_json(res, snapshot(id, *s));
      });
    });

    server.Get(R"(/session/([0-9a-z]+))", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto id = req.matches[1].str();
        auto s = find(id);
        std::lock_guard lock(s->mu);
        send_json(res, snapshot(id, *s));
      });
    });

    server.Post(R"(/session/([0-9a-z]+)/mutate)", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto id = req.matches[1].str();
        auto s = find(id);
        auto body = parse_body(req);
        if (!body.contains("vertex") || !body["vertex"].is_number_integer())
          throw HttpError{400, "field 'vertex' (integer) required"};
        int v = body["vertex"].get<int>();
        std::lock_guard lock(s->mu);
        s->states.push_back(mutate_seed(s->states.back(), v));
        send_json(res, snapshot(id, *s));
      });
    });

    server.Post(R"(/session/([0-9a-z]+)/undo)", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto id = req.matches[1].str();
        auto s = find(id);
        std::lock_guard lock(s->mu);
        if (s->states.size() < 2) throw HttpError{400, "nothing to undo"};
        s->states.pop_back();
        send_json(res, snapshot(id, *s));
      });
    });

    server.Get(R"(/session/([0-9a-z]+)/exchange)", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto id = req.matches[1].str();
        auto s = find(id);
        int depth = 1;
        if (req.has_param("depth")) {
          auto d = req.get_param_value("depth");
          if (d == "inf" || d == "all") {
            depth = -1;
          } else {
            try {
              std::size_t used = 0;
              depth = std::stoi(d, &used);
              if (used != d.size() || depth < 0) throw std::invalid_argument(d);
            } catch (const std::exception&) {
              throw HttpError{400, "depth must be a non-negative integer or 'inf'"};
            }
          }
        }
        Seed cur;
        {
          std::lock_guard lock(s->mu);
          cur = s->states.back();
        }
        send_json(res, report_exchange_json(cur, depth));
      });
    });

    server.Get(R"(/session/([0-9a-z]+)/weave\.svgdata)", [this](const httplib::Request& req, httplib::Response& res) {
      route(res, [&] {
        auto s = find(req.matches[1].str());
        send_json(res, weave_svgdata(compile_fence_weave(s->braid)));
      });
    });

    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) send_error(res, res.status, res.status == 404 ? "no such endpoint" : "request failed");
    });
  }
};

Service::Service() : impl_(std::make_unique<Impl>()) { impl_->install(); }
Service::~Service() = default;

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

void Service::run() { impl_->server.listen_after_bind(); }
void Service::stop() { impl_->server.stop(); }

}  // namespace lf
