#include <iostream>

#include <CLI11.hpp>

#include "gfdiv/cli.hpp"

namespace {

std::vector<long long> to_ll(const std::vector<double>& v) {
  std::vector<long long> out;
  for (double x : v) out.push_back((long long)x);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(G,f)-divergence toolkit"};
  app.require_subcommand(1);

  gfdiv::RunConfig cfg;
  std::string config_path;
  std::string p_csv, q_csv, qy_csv, ry_csv, qz_csv, rz_csv, rates_csv,
      eps_csv, m_csv;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file (flags win)");
    sub->add_option("--seed", cfg.seed, "PRNG seed (default 0xC0FFEE)");
    sub->add_option("--output,-o", cfg.output_path, "write the report here too");
    sub->add_option("--format", cfg.format, "json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    sub->add_flag("--strict", cfg.strict, "exit 2 on scientific FAIL verdicts");
    sub->add_option("--restarts", cfg.solver.restarts, "solver restarts");
    sub->add_option("--max-iters", cfg.solver.max_iters, "solver iteration cap");
    sub->add_flag("--permutation-invariant",
                  cfg.solver.assume_permutation_invariant,
                  "assert the channel is permutation invariant");
  };

  CLI::App* div = app.add_subcommand("div", "evaluate D_f and D_{G,f}");
  div->add_option("--g", cfg.g_spec, "transform name[:param] or JSON");
  div->add_option("--f", cfg.f_spec, "generator name[:param] or JSON")->required();
  div->add_option("--p", p_csv, "first distribution, comma separated")->required();
  div->add_option("--q", q_csv, "second distribution, comma separated")->required();
  add_common(div);

  CLI::App* info = app.add_subcommand("info", "I_{G,f} and its input maximum");
  info->add_option("--g", cfg.g_spec);
  info->add_option("--f", cfg.f_spec)->required();
  info->add_option("--channel", cfg.channel_spec)->required();
  info->add_option("--p", p_csv, "input distribution (omit with --maximize)");
  info->add_flag("--maximize", cfg.maximize, "maximize over input distributions");
  add_common(info);

  CLI::App* subadd = app.add_subcommand("subadd", "gap scan + membership checks");
  subadd->add_option("--g", cfg.g_spec);
  subadd->add_option("--f", cfg.f_spec)->required();
  subadd->add_option("--grid-res", cfg.grid_res, "lattice resolution per axis");
  subadd->add_option("--samples", cfg.samples, "Sobol sample count");
  add_common(subadd);

  CLI::App* check = app.add_subcommand("check", "T / Tplus / Tminus / invg / roots");
  check->add_option("--kind", cfg.check_kind)->required()
      ->check(CLI::IsMember({"T", "Tplus", "Tminus", "invg", "roots"}));
  check->add_option("--f", cfg.f_spec);
  check->add_option("--g", cfg.g_spec);
  check->add_option("--shape", cfg.shape_spec, "shape name[:params]");
  check->add_option("--qZ", qz_csv);
  check->add_option("--rZ", rz_csv);
  check->add_option("--lambda", cfg.lambda);
  check->add_option("--lin-a", cfg.lin_a);
  check->add_option("--lin-b", cfg.lin_b);
  add_common(check);

  CLI::App* bounds = app.add_subcommand("bounds", "fano / blocklength / ht / klcmp");
  bounds->add_option("--bound", cfg.bound_kind)->required()
      ->check(CLI::IsMember({"fano", "blocklength", "ht", "klcmp"}));
  bounds->add_option("--g", cfg.g_spec);
  bounds->add_option("--f", cfg.f_spec)->required();
  bounds->add_option("--channel", cfg.channel_spec);
  bounds->add_option("--M", cfg.m);
  bounds->add_option("--M-list", m_csv, "comma separated M grid (CSV table)");
  bounds->add_option("--eps", cfg.eps);
  bounds->add_option("--eps-list", eps_csv, "comma separated eps grid");
  bounds->add_option("--n", cfg.n);
  bounds->add_option("--alpha", cfg.alpha);
  bounds->add_option("--beta", cfg.beta);
  bounds->add_option("--s", cfg.s);
  bounds->add_option("--c", cfg.c);
  bounds->add_option("--direction", cfg.direction)
      ->check(CLI::IsMember({"plus", "minus"}));
  bounds->add_option("--p", p_csv);
  bounds->add_option("--q", q_csv);
  add_common(bounds);

  CLI::App* expo = app.add_subcommand("exponent", "sphere-packing exponent curve");
  expo->add_option("--channel", cfg.channel_spec)->required();
  expo->add_option("--rates", rates_csv, "comma separated rates (nats)")->required();
  expo->add_option("--family", cfg.f_spec, "s-family (power)");
  expo->add_flag("--bits", cfg.bits, "rates and exponents in bits instead of nats");
  add_common(expo);

  CLI::App* tables = app.add_subcommand("tables", "reproduce the verdict matrices");
  tables->add_option("--which", cfg.which_table)->check(CLI::IsMember({1, 2}));
  add_common(tables);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  if (!config_path.empty()) {
    // config supplies defaults; explicit flags already wrote into cfg, so
    // merge only the fields the command line left untouched
    gfdiv::RunConfig file;
    try {
      file = gfdiv::config_from_json_file(config_path);
    } catch (const gfdiv::Error& e) {
      std::cerr << "error kind=bad_input msg=\"" << e.what() << "\"\n";
      return 1;
    }
    auto untouched = [&](const std::string& flag) {
      return sub->count(flag) == 0;
    };
    if (untouched("--seed") && file.seed) cfg.seed = file.seed;
    if (untouched("--format") && !file.format.empty()) cfg.format = file.format;
    if (!file.f_spec.empty() && (!sub->get_option_no_throw("--f") || untouched("--f")))
      cfg.f_spec = file.f_spec;
    if (!file.g_spec.empty() && file.g_spec != "x" &&
        (!sub->get_option_no_throw("--g") || untouched("--g")))
      cfg.g_spec = file.g_spec;
    if (!file.channel_spec.empty() &&
        (!sub->get_option_no_throw("--channel") || untouched("--channel")))
      cfg.channel_spec = file.channel_spec;
    if (!file.p.empty() && p_csv.empty()) cfg.p = file.p;
    if (!file.q.empty() && q_csv.empty()) cfg.q = file.q;
    if (!file.rates.empty() && rates_csv.empty()) cfg.rates = file.rates;
    if (untouched("--output") && !file.output_path.empty())
      cfg.output_path = file.output_path;
  }

  auto parse_csv = [](const std::string& s) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
  };
  if (!p_csv.empty()) cfg.p = parse_csv(p_csv);
  if (!q_csv.empty()) cfg.q = parse_csv(q_csv);
  if (!qy_csv.empty()) cfg.qY = parse_csv(qy_csv);
  if (!ry_csv.empty()) cfg.rY = parse_csv(ry_csv);
  if (!qz_csv.empty()) cfg.qZ = parse_csv(qz_csv);
  if (!rz_csv.empty()) cfg.rZ = parse_csv(rz_csv);
  if (!rates_csv.empty()) cfg.rates = parse_csv(rates_csv);
  if (!eps_csv.empty()) cfg.eps_grid = parse_csv(eps_csv);
  if (!m_csv.empty()) cfg.m_grid = to_ll(parse_csv(m_csv));

  cfg.command = sub->get_name();
  cfg.solver.seed = cfg.seed;
  return gfdiv::run(cfg, std::cout, std::cerr);
}
