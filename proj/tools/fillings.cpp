// Command line front end; see README for the subcommands.
#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lf/cluster.hpp"
#include "lf/flags.hpp"
#include "lf/pinch.hpp"
#include "lf/report.hpp"
#include "lf/service.hpp"
#include "lf/weave.hpp"

namespace {

enum Exit { Ok = 0, Other = 1, BadFlags = 2, Budget = 3, IdentityFailed = 4 };

bool g_pretty = false;
std::string g_out;

void emit(const std::string& line) {
  std::string text = g_pretty ? lf::pretty(line) : line + "\n";
  if (g_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g_out);
    if (!f) throw std::runtime_error("cannot write " + g_out);
    f << text;
  }
}

void emit_raw(const std::string& text) {
  if (g_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(g_out);
    if (!f) throw std::runtime_error("cannot write " + g_out);
    f << text;
  }
}

lf::Service* g_service = nullptr;
void on_signal(int) {
  if (g_service) g_service->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster charts, weaves and pinching sequences of positive braids"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Human-readable output instead of JSON lines");
  app.add_option("--out", g_out, "Write the report to a file");

  std::string braid;
  int n = 0, k = 2, m = 5, trials = 5, depth = -1, port = 8080;
  std::size_t budget = 100000;
  std::uint64_t seed = 1;
  std::string svg;
  bool dot = false, as_json = false;
  std::string convention = "standard";

  auto* count = app.add_subcommand("count", "Counts")->require_subcommand(1);
  auto* c_sep = count->add_subcommand("separated", "Maximal weakly separated collections");
  c_sep->add_option("--k", k)->required();
  c_sep->add_option("--m", m)->required();
  auto* c_orb = count->add_subcommand("plabic-orbit", "Square-move orbit of the reduced plabic graph for Gr(k,m)");
  c_orb->add_option("--k", k);
  c_orb->add_option("--m", m);
  auto* c_clu = count->add_subcommand("clusters", "Exchange graph of the fence seed");
  c_clu->add_option("--braid", braid)->required();
  c_clu->add_option("--n", n, "Strand count (default: from the letters)");
  c_clu->add_option("--budget", budget);
  auto* c_pin = count->add_subcommand("pinch", "Distinct clusters over all pinching orders");
  c_pin->add_option("--braid", braid)->required();
  c_pin->add_option("--n", n);

  auto* compile = app.add_subcommand("compile", "Compilers")->require_subcommand(1);
  auto* c_wv = compile->add_subcommand("weave", "Weave of the fence");
  c_wv->add_option("--braid", braid)->required();
  c_wv->add_option("--n", n);
  c_wv->add_option("--svg", svg, "Also render an SVG file");

  auto* verify = app.add_subcommand("verify", "Exact identity checks")->require_subcommand(1);
  auto* v_min = verify->add_subcommand("minors", "Merodromies equal principal minors");
  auto* v_dua = verify->add_subcommand("duality", "Monodromies equal A-monomials; pairing duality");
  auto* v_sq = verify->add_subcommand("square-move", "Monodromy law under square moves");
  for (auto* v : {v_min, v_dua}) {
    v->add_option("--braid", braid)->required();
    v->add_option("--n", n);
    v->add_option("--trials", trials)->check(CLI::Range(1, 1000));
    v->add_option("--convention", convention, "Block of tau: standard [[z,-1],[1,0]] or mirrored [[z,1],[-1,0]]")
        ->check(CLI::IsMember({"standard", "mirrored"}));
  }
  v_sq->add_option("--braid", braid, "Ignored; the check runs on polygons");
  v_sq->add_option("--trials", trials)->check(CLI::Range(1, 100000));
  v_sq->add_option("--seed", seed);

  auto* exp = app.add_subcommand("export", "Exports")->require_subcommand(1);
  auto* e_ex = exp->add_subcommand("exchange", "Exchange graph of the fence seed");
  e_ex->add_option("--braid", braid)->required();
  e_ex->add_option("--n", n);
  e_ex->add_option("--depth", depth, "Breadth-first depth (default: full closure)");
  e_ex->add_option("--budget", budget);
  auto* fmt = e_ex->add_option_group("format");
  fmt->add_flag("--dot", dot);
  fmt->add_flag("--json", as_json);
  fmt->require_option(1);
  auto* e_seed = exp->add_subcommand("seed", "Fence seed (seed.v1)");
  e_seed->add_option("--braid", braid)->required();
  e_seed->add_option("--n", n);
  auto* e_conf = exp->add_subcommand("conf", "Sampled flag configuration (conf.v1)");
  e_conf->add_option("--braid", braid)->required();
  e_conf->add_option("--n", n);
  e_conf->add_option("--seed", seed);

  auto* serve = app.add_subcommand("serve", "HTTP session service");
  serve->add_option("--port", port)->check(CLI::Range(0, 65535));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? Ok : BadFlags;
  }

  try {
    auto beta = [&] { return lf::parse_braid(braid, n); };
    if (*c_sep) emit(lf::report_separated(k, m));
    if (*c_orb) emit(lf::report_plabic_orbit(k, m));
    if (*c_clu) emit(lf::report_clusters(beta(), budget));
    if (*c_pin) emit(lf::report_pinch(beta()));
    if (*c_wv) {
      auto b = beta();
      if (!svg.empty()) {
        std::ofstream f(svg);
        if (!f) throw std::runtime_error("cannot write " + svg);
        f << lf::weave_svg(lf::compile_fence_weave(b));
      }
      emit(lf::report_weave(b));
    }
    lf::VerifyResult vr;
    bool verified = false;
    auto conv = convention == "mirrored" ? lf::TauConvention::Mirrored : lf::TauConvention::Standard;
    if (*v_min) vr = lf::verify_minors(beta(), trials, conv), verified = true;
    if (*v_dua) vr = lf::verify_duality(beta(), trials, conv), verified = true;
    if (*v_sq) vr = lf::verify_square_move(trials, seed), verified = true;
    if (verified) {
      emit(vr.json);
      return vr.pass ? Ok : IdentityFailed;
    }
    if (*e_ex) {
      auto root = lf::fence_seed(beta());
      if (dot)
        emit_raw(lf::report_exchange_dot(root, depth, budget));
      else
        emit(lf::report_exchange_json(root, depth, budget));
    }
    if (*e_seed) emit(lf::seed_json(lf::fence_seed(beta())));
    if (*e_conf) emit(lf::conf_json(lf::sample_conf(beta(), seed)));
    if (*serve) {
      lf::Service svc;
      int bound = svc.bind("0.0.0.0", port);
      if (bound < 0) throw std::runtime_error("cannot bind port " + std::to_string(port));
      std::cerr << "listening on port " << bound << "\n";
      g_service = &svc;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      svc.run();
      g_service = nullptr;
    }
    return Ok;
  } catch (const lf::BraidParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadFlags;
  } catch (const lf::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Budget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return BadFlags;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return Other;
  }
}
