#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "lf/service.hpp"
#include "lf/weave.hpp"

using nlohmann::json;

#ifndef FILLINGS_BIN
#error "FILLINGS_BIN must point at the CLI binary"
#endif
#ifndef GOLDEN_DIR
#error "GOLDEN_DIR must point at tests/golden"
#endif

namespace {

struct Running {
  lf::Service svc;
  int port = -1;
  std::thread th;
  Running() {
    port = svc.bind("127.0.0.1", 0);
    REQUIRE(port > 0);
    th = std::thread([this] { svc.run(); });
  }
  ~Running() {
    svc.stop();
    th.join();
  }
  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port);
    c.set_read_timeout(120, 0);
    return c;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(GOLDEN_DIR) + "/" + name); }

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  std::string cmd = std::string(FILLINGS_BIN) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

json post(httplib::Client& c, const std::string& path, const json& body, int expect = 200) {
  auto r = c.Post(path, body.dump(), "application/json");
  REQUIRE(r);
  CHECK(r->status == expect);
  return json::parse(r->body);
}

json get(httplib::Client& c, const std::string& path, int expect = 200) {
  auto r = c.Get(path);
  REQUIRE(r);
  CHECK(r->status == expect);
  return json::parse(r->body);
}

}  // namespace

TEST_CASE("health and sessions") {
  Running srv;
  auto c = srv.client();
  auto h = get(c, "/healthz");
  CHECK(h["status"] == "ok");
  auto s = post(c, "/session", {{"braid", "(s1 s2)^3"}});
  CHECK(s["schema"] == "session.v1");
  CHECK(s["can_undo"] == false);
  CHECK(s["quiver"]["nodes"].size() == 6);
  CHECK(s["values"].size() == 6);
  auto id = s["id"].get<std::string>();
  CHECK(get(c, "/session/" + id) == s);
  CHECK(get(c, "/healthz")["sessions"] == 1);
}

TEST_CASE("mutation, involution and undo") {
  Running srv;
  auto c = srv.client();
  auto s0 = post(c, "/session", {{"braid", "(s1 s2)^3"}});
  auto id = s0["id"].get<std::string>();
  auto s1 = post(c, "/session/" + id + "/mutate", {{"vertex", 1}});
  CHECK(s1["history"] == json::array({1}));
  CHECK(s1["can_undo"] == true);
  CHECK(s1["values"] != s0["values"]);
  auto s2 = post(c, "/session/" + id + "/mutate", {{"vertex", 1}});
  CHECK(s2["values"] == s0["values"]);
  CHECK(s2["seed"]["epsilon"] == s0["seed"]["epsilon"]);
  CHECK(s2["quiver"] == s0["quiver"]);
  auto u = post(c, "/session/" + id + "/undo", json::object());
  CHECK(u == s1);
  auto u2 = post(c, "/session/" + id + "/undo", json::object());
  CHECK(u2 == s0);
  auto e = post(c, "/session/" + id + "/undo", json::object(), 400);
  CHECK(e["schema"] == "error.v1");
}

TEST_CASE("history replays in a fresh session") {
  Running srv;
  auto c = srv.client();
  auto a = post(c, "/session", {{"braid", "(s1 s2)^3"}});
  auto ida = a["id"].get<std::string>();
  json last;
  for (int v : {0, 2, 1, 3, 0}) last = post(c, "/session/" + ida + "/mutate", {{"vertex", v}});
  auto b = post(c, "/session", {{"braid", "(s1 s2)^3"}});
  auto idb = b["id"].get<std::string>();
  json replay;
  for (auto& v : last["history"]) replay = post(c, "/session/" + idb + "/mutate", {{"vertex", v}});
  replay.erase("id");
  last.erase("id");
  CHECK(replay == last);
}

TEST_CASE("error responses") {
  Running srv;
  auto c = srv.client();
  CHECK(post(c, "/session", {{"braid", "s1^"}}, 400)["schema"] == "error.v1");
  CHECK(post(c, "/session", {{"n", 3}}, 400)["status"] == 400);
  auto r = c.Post("/session", "{not json", "application/json");
  REQUIRE(r);
  CHECK(r->status == 400);
  CHECK(get(c, "/session/ffff", 404)["status"] == 404);
  CHECK(get(c, "/nowhere", 404)["error"] == "no such endpoint");
  auto s = post(c, "/session", {{"braid", "s1^3"}});
  auto id = s["id"].get<std::string>();
  CHECK(post(c, "/session/" + id + "/mutate", {{"vertex", 2}}, 400)["error"].get<std::string>().find("frozen") !=
        std::string::npos);
  post(c, "/session/" + id + "/mutate", {{"vertex", 9}}, 400);
  post(c, "/session/" + id + "/mutate", {{"vertex", "x"}}, 400);
  get(c, "/session/" + id + "/exchange?depth=-2", 400);
  get(c, "/session/" + id + "/exchange?depth=abc", 400);
}

TEST_CASE("exchange neighborhood") {
  Running srv;
  auto c = srv.client();
  auto s = post(c, "/session", {{"braid", "s1^3"}});
  auto id = s["id"].get<std::string>();
  auto all = get(c, "/session/" + id + "/exchange?depth=inf");
  CHECK(all["nodes"].size() == 5);
  CHECK(all["complete"] == true);
  auto one = get(c, "/session/" + id + "/exchange");
  CHECK(one["nodes"].size() == 3);
  auto w = get(c, "/session/" + id + "/weave.svgdata");
  CHECK(w["schema"] == "weave.v1");
  CHECK(w["vertices"].size() > 0);
}

TEST_CASE("concurrent sessions") {
  Running srv;
  std::vector<std::thread> ts;
  std::vector<json> finals(4);
  for (int t = 0; t < 4; ++t)
    ts.emplace_back([&, t] {
      auto c = srv.client();
      auto s = c.Post("/session", json{{"braid", "(s1 s2)^3"}}.dump(), "application/json");
      auto id = json::parse(s->body)["id"].get<std::string>();
      for (int v : {0, 1, 2, 3}) c.Post("/session/" + id + "/mutate", json{{"vertex", v}}.dump(), "application/json");
      auto r = c.Get("/session/" + id);
      finals[t] = json::parse(r->body);
    });
  for (auto& t : ts) t.join();
  for (auto& f : finals) {
    CHECK(f["history"] == json::array({0, 1, 2, 3}));
    CHECK(f["values"] == finals[0]["values"]);
  }
  std::set<std::string> ids;
  for (auto& f : finals) ids.insert(f["id"].get<std::string>());
  CHECK(ids.size() == 4);
}

TEST_CASE("CLI and service agree with the golden files") {
  auto seed_golden = golden("d4_seed.json");
  auto exchange_golden = golden("d4_exchange_depth2.json");
  REQUIRE_FALSE(seed_golden.empty());

  auto cli_seed = run_cli("export seed --braid '(s1 s2)^3'");
  CHECK(cli_seed.code == 0);
  CHECK(cli_seed.out == seed_golden);
  auto cli_ex = run_cli("export exchange --braid '(s1 s2)^3' --json --depth 2");
  CHECK(cli_ex.code == 0);
  CHECK(cli_ex.out == exchange_golden);
  CHECK(run_cli("export exchange --braid 's1^3' --json").out == golden("a2_exchange.json"));

  Running srv;
  auto c = srv.client();
  auto r = c.Post("/session", json{{"braid", "(s1 s2)^3"}}.dump(), "application/json");
  REQUIRE(r);
  auto s = json::parse(r->body);
  CHECK(s["seed"].dump() + "\n" == seed_golden);
  auto e = c.Get("/session/" + s["id"].get<std::string>() + "/exchange?depth=2");
  REQUIRE(e);
  CHECK(e->body == exchange_golden);

  auto w = c.Get("/session/" + s["id"].get<std::string>() + "/weave.svgdata");
  REQUIRE(w);
  CHECK(w->body == lf::weave_svgdata(lf::compile_fence_weave(lf::parse_braid("(s1 s2)^3"))) + "\n");
}

TEST_CASE("CLI reports") {
  auto clusters = run_cli("count clusters --braid '(s1 s2)^3'");
  CHECK(clusters.code == 0);
  CHECK(json::parse(clusters.out)["count"] == 50);
  auto sep = run_cli("count separated --k 3 --m 6");
  CHECK(json::parse(sep.out)["count"] == 34);
  auto orbit = run_cli("count plabic-orbit --k 2 --m 5");
  CHECK(json::parse(orbit.out)["count"] == 5);
  auto pinch = run_cli("count pinch --braid 's1^4'");
  CHECK(json::parse(pinch.out)["clusters"] == 14);
  auto minors = run_cli("verify minors --braid 's1^3' --trials 5");
  CHECK(minors.code == 0);
  CHECK(json::parse(minors.out)["result"] == "PASS");
  auto duality = run_cli("verify duality --braid '(s1 s2)^2' --trials 5");
  CHECK(duality.code == 0);
  auto sq = run_cli("verify square-move --trials 20");
  CHECK(sq.code == 0);
  auto weave = run_cli("compile weave --braid '(s1 s2)^2'");
  CHECK(json::parse(weave.out)["schema"] == "weave.v1");
  CHECK(run_cli("export exchange --braid 's1^3' --dot").out.find("graph") != std::string::npos);
  CHECK(json::parse(run_cli("export conf --braid 's1^3' --seed 4").out)["schema"] == "conf.v1");
  CHECK(run_cli("--pretty count separated --k 2 --m 5").out.find("count: 5") != std::string::npos);
}

TEST_CASE("CLI exit codes") {
  CHECK(run_cli("count clusters").code == 2);
  CHECK(run_cli("count clusters --braid 's1^'").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("count clusters --braid '(s1 s2)^4' --budget 10").code == 3);
  CHECK(run_cli("verify minors --braid '(s1 s2)^2' --convention mirrored").code == 4);
  CHECK(run_cli("verify minors --braid '(s1 s2)^2' --convention standard").code == 0);
}
