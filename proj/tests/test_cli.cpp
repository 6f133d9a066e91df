#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gfdiv/bounds.hpp"
#include "gfdiv/cli.hpp"
#include "gfdiv/json_io.hpp"
#include "oracles.hpp"

using namespace gfdiv;

namespace {

std::pair<int, std::string> run_cfg(const RunConfig& cfg) {
  std::ostringstream out, err;
  int code = run(cfg, out, err);
  return {code, code == 1 ? err.str() : out.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("div command returns the worked value") {
  RunConfig cfg;
  cfg.command = "div";
  cfg.f_spec = "kl";
  cfg.p = {0.5, 0.5};
  cfg.q = {0.25, 0.75};
  cfg.format = "json";
  auto [code, text] = run_cfg(cfg);
  REQUIRE(code == 0);
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("f_div").get<double>() ==
        doctest::Approx(0.14384103622589046).epsilon(1e-12));
}

TEST_CASE("identical configs produce byte-identical output") {
  RunConfig cfg;
  cfg.command = "subadd";
  cfg.f_spec = "squared_hellinger";
  cfg.grid_res = 7;
  cfg.samples = 4000;
  cfg.format = "json";
  auto [c1, t1] = run_cfg(cfg);
  auto [c2, t2] = run_cfg(cfg);
  CHECK(c1 == 0);
  CHECK(t1 == t2);
}

TEST_CASE("tables reproduce their columns") {
  RunConfig cfg;
  cfg.command = "tables";
  cfg.which_table = 1;
  cfg.format = "json";
  cfg.strict = true;
  auto [code, text] = run_cfg(cfg);
  CHECK(code == 0);  // strict, but everything matches
  auto j = nlohmann::json::parse(text);
  CHECK(j.at("matches_expected").get<bool>());
  REQUIRE(j.at("rows").size() == 8);
  CHECK(j.at("rows")[0].at("verdict") == "Yes");
  CHECK(j.at("rows")[5].at("verdict") == "No");

  cfg.which_table = 2;
  auto [code2, text2] = run_cfg(cfg);
  CHECK(code2 == 0);
  auto j2 = nlohmann::json::parse(text2);
  REQUIRE(j2.at("rows").size() == 3);
  CHECK(j2.at("rows")[0].at("verdict") == "Yes");
  CHECK(j2.at("rows")[1].at("verdict") == "No");
  CHECK(j2.at("rows")[2].at("verdict") == "No");
}

TEST_CASE("strict mode exits 2 on a scan FAIL") {
  RunConfig cfg;
  cfg.command = "subadd";
  cfg.f_spec = "pearson_chi2";
  cfg.grid_res = 7;
  cfg.samples = 2000;
  cfg.strict = true;
  auto [code, text] = run_cfg(cfg);
  CHECK(code == 2);
  cfg.strict = false;
  CHECK(run_cfg(cfg).first == 0);
}

TEST_CASE("domain errors map to exit 1 with a machine-parsable record") {
  RunConfig cfg;
  cfg.command = "div";
  cfg.f_spec = "not_a_generator";
  cfg.p = {0.5, 0.5};
  cfg.q = {0.5, 0.5};
  auto [code, err] = run_cfg(cfg);
  CHECK(code == 1);
  CHECK(err.find("kind=unknown_name") != std::string::npos);

  RunConfig dom;
  dom.command = "div";
  dom.g_spec = "neg_log1m";
  dom.f_spec = "pearson_chi2";
  dom.p = {0.5, 0.5};
  dom.q = {0.5, 0.5};
  auto [code2, err2] = run_cfg(dom);
  CHECK(code2 == 1);
  CHECK(err2.find("kind=domain_violation") != std::string::npos);
}

TEST_CASE("reports round-trip through the serializers") {
  AdmissiblePair chi = make_pair(catalog_g("x"), catalog_f("pearson_chi2"));
  ScanReport rep = binary_gap_scan(chi, 7, 3000, 0xC0FFEE);
  std::string text = to_json(rep);
  ScanReport back = scan_report_from_json(text);
  CHECK(to_json(back) == text);
  CHECK(back.min_gap == rep.min_gap);
  CHECK(back.witness == rep.witness);
}

TEST_CASE("bound results round-trip through the serializers") {
  AdmissiblePair kl = make_pair(catalog_g("x"), catalog_f("kl"));
  BoundResult r = blocklength_lower(kl, 4, 0.1, Channel::bsc(0.1));
  std::string text = to_json(r);
  BoundResult back = bound_result_from_json(text);
  CHECK(to_json(back) == text);
  CHECK(back.value == r.value);
  CHECK(back.condition("pair_subadditive_assumed"));
}

TEST_CASE("exponent bits toggle only rescales the interface") {
  RunConfig nats;
  nats.command = "exponent";
  nats.channel_spec = "bsc:0.1";
  nats.rates = {0.2};
  nats.format = "json";
  RunConfig bits = nats;
  bits.bits = true;
  bits.rates = {0.2 / std::log(2.0)};  // the same rate, expressed in bits
  auto [c1, t1] = run_cfg(nats);
  auto [c2, t2] = run_cfg(bits);
  REQUIRE(c1 == 0);
  REQUIRE(c2 == 0);
  double e_nats = nlohmann::json::parse(t1)["points"][0]["value"].get<double>();
  double e_bits = nlohmann::json::parse(t2)["points"][0]["value"].get<double>();
  CHECK(e_nats == doctest::Approx(e_bits * std::log(2.0)).epsilon(1e-9));
}

TEST_CASE("dist and channel JSON round-trips are bit exact") {
  Rng rng(401);
  for (int t = 0; t < 50; ++t) {
    Dist d = oracles::random_dist(rng, 2 + int(rng.next_below(6)));
    Dist back = dist_from_json(to_json(d));
    REQUIRE(back.size() == d.size());
    for (int i = 0; i < d.size(); ++i) CHECK(back[i] == d[i]);
  }
  Channel w = oracles::random_channel(rng, 3, 4);
  Channel back = channel_from_json(to_json(w));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 4; ++y) CHECK(back.row(x)[y] == w.row(x)[y]);
}

TEST_CASE("generator JSON spec resolves registry and tables") {
  FGenerator f = generator_from_json(
      R"({"name": "hellinger_order", "params": {"alpha": 2.0}})");
  CHECK(f.eval(3.0) == doctest::Approx(8.0));
  FGenerator tab = generator_from_json(
      R"({"table": [[0,0],[0.25,0.0625],[0.5,0.25],[0.75,0.5625],[1,1],[1.5,2.25],[2,4],[3,9],[4,16]],
          "norm": "one_at_one", "name": "sq"})");
  CHECK(tab.eval(1.0) == doctest::Approx(1.0));
  CHECK(tab.eval(2.5) == doctest::Approx(6.25).epsilon(0.02));
  CHECK_THROWS_AS(generator_from_json("{\"name\": 3}"), std::exception);
}

TEST_CASE("output files duplicate the stream bytes") {
  std::string path = "cli_test_out.json";
  RunConfig cfg;
  cfg.command = "div";
  cfg.f_spec = "kl";
  cfg.p = {0.5, 0.5};
  cfg.q = {0.25, 0.75};
  cfg.format = "json";
  cfg.output_path = path;
  auto [code, text] = run_cfg(cfg);
  REQUIRE(code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == text);
  std::remove(path.c_str());
}

TEST_CASE("config files feed run configs") {
  std::string path = "cli_test_cfg.json";
  {
    std::ofstream out(path);
    out << R"({"command":"div","f":"kl","p":[0.5,0.5],"q":[0.25,0.75],
               "format":"json","seed":7})";
  }
  RunConfig cfg = config_from_json_file(path);
  CHECK(cfg.command == "div");
  CHECK(cfg.f_spec == "kl");
  CHECK(cfg.seed == 7);
  auto [code, text] = run_cfg(cfg);
  CHECK(code == 0);
  std::remove(path.c_str());
}

TEST_CASE("exponent command emits a matching CSV curve") {
  RunConfig cfg;
  cfg.command = "exponent";
  cfg.channel_spec = "bsc:0.1";
  cfg.rates = {0.2};
  cfg.format = "csv";
  auto [code, text] = run_cfg(cfg);
  REQUIRE(code == 0);
  CHECK(text.rfind("R,E,s_star", 0) == 0);
  // value appears on the data row
  CHECK(text.find("0.0402923") != std::string::npos);
}

TEST_CASE("bounds table renders a CSV grid") {
  RunConfig cfg;
  cfg.command = "bounds";
  cfg.bound_kind = "fano";
  cfg.f_spec = "kl";
  cfg.m_grid = {2, 4};
  cfg.eps_grid = {0.0, 0.1};
  cfg.format = "csv";
  auto [code, text] = run_cfg(cfg);
  REQUIRE(code == 0);
  CHECK(text.rfind("M,eps,value", 0) == 0);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);  // header + 4 rows
}

}  // TEST_SUITE
