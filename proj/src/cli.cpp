#include "gfdiv/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gfdiv/bounds.hpp"
#include "gfdiv/json_io.hpp"

namespace gfdiv {

namespace {

std::string fmt12(double v) { return fmt_g(v, 12); }

std::vector<double> split_values(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  return out;
}

// "name", "name:v" or "name:v1,v2" with positional parameter names from the
// registry family; JSON objects pass through to the JSON parser.
FGenerator resolve_f(const std::string& spec) {
  if (spec.empty()) throw BadInput("missing generator (--f)");
  if (spec.front() == '{' || spec.front() == '"') return generator_from_json(spec);
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog_f(spec);
  std::string name = spec.substr(0, colon);
  std::vector<double> vals = split_values(spec.substr(colon + 1));
  Params p;
  if (name == "alpha_div" || name == "hellinger_order") {
    p["alpha"] = vals.at(0);
  } else if (name == "power") {
    p["p"] = vals.at(0);
  } else if (name == "power_concave") {
    p["s"] = vals.at(0);
  } else if (name == "power_theta") {
    p["s"] = vals.at(0);
    p["theta"] = vals.at(1);
  } else {
    throw BadParameter("generator '" + name + "' takes no shorthand parameter");
  }
  return catalog_f(name, p);
}

GTransform resolve_g(const std::string& spec) {
  if (spec.empty()) throw BadInput("missing transform (--g)");
  if (spec.front() == '{' || spec.front() == '"') return gtransform_from_json(spec);
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog_g(spec);
  std::string name = spec.substr(0, colon);
  std::vector<double> vals = split_values(spec.substr(colon + 1));
  Params p;
  if (name == "renyi" || name == "renyi_G")
    p["alpha"] = vals.at(0);
  else if (name == "power")
    p["p"] = vals.at(0);
  else
    throw BadParameter("transform '" + name + "' takes no shorthand parameter");
  return catalog_g(name, p);
}

ScalarFunction resolve_shape(const std::string& spec) {
  if (spec.empty()) throw BadInput("missing shape (--shape)");
  auto colon = spec.find(':');
  if (colon == std::string::npos) return catalog_shape(spec);
  std::string name = spec.substr(0, colon);
  std::vector<double> vals = split_values(spec.substr(colon + 1));
  Params p;
  if (name == "power_shape")
    p["gamma"] = vals.at(0);
  else if (name == "tminus_power_shape")
    p["lambda"] = vals.at(0);
  else if (name == "ratio_shape") {
    p["b"] = vals.at(0);
    p["c"] = vals.at(1);
  } else if (name == "tminus_ratio_shape") {
    p["a"] = vals.at(0);
    p["s"] = vals.at(1);
  } else {
    throw BadParameter("shape '" + name + "' takes no shorthand parameter");
  }
  return catalog_shape(name, p);
}

Channel resolve_channel(const std::string& spec) {
  if (spec.empty()) throw BadInput("missing channel (--channel)");
  if (spec.front() == '[') return channel_from_json(spec);
  if (spec.front() == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw BadInput("cannot read channel file " + spec.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return channel_from_json(ss.str());
  }
  auto colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  if (name == "bsc") return Channel::bsc(std::stod(spec.substr(colon + 1)));
  if (name == "bec") return Channel::bec(std::stod(spec.substr(colon + 1)));
  if (name == "identity")
    return Channel::identity(std::stoi(spec.substr(colon + 1)));
  throw BadInput("unknown channel spec '" + spec + "'");
}

struct TableRow {
  std::string display;
  std::string f_name;
  Params params;
  bool expected_yes;
};

const std::vector<TableRow>& table1_rows() {
  static const std::vector<TableRow> rows = {
      {"KL Divergence", "kl", {}, true},
      {"Reverse KL", "reverse_kl", {}, true},
      {"Squared Hellinger", "squared_hellinger", {}, true},
      {"Jensen-Shannon", "jensen_shannon", {}, true},
      {"Alpha Divergence (alpha=0.5)", "alpha_div", {{"alpha", 0.5}}, true},
      {"Pearson Chi^2", "pearson_chi2", {}, false},
      {"Triangular Discrimination", "triangular", {}, false},
      {"Le Cam", "le_cam", {}, false},
  };
  return rows;
}

const std::vector<TableRow>& table2_rows() {
  static const std::vector<TableRow> rows = {
      {"Pearson Chi^2", "pearson_chi2", {}, true},
      {"Triangular Discrimination", "triangular", {}, false},
      {"Le Cam", "le_cam", {}, false},
  };
  return rows;
}

void append_scan_pretty(std::ostream& os, const ScanReport& r) {
  os << r.target << ": " << to_string(r.verdict) << "  min_gap=" << fmt12(r.min_gap)
     << "  samples=" << r.samples << "  tol=" << fmt12(r.tol);
  if (!r.witness.empty()) {
    os << "  witness=(";
    for (size_t i = 0; i < r.witness.size(); ++i)
      os << (i ? "," : "") << fmt12(r.witness[i]);
    os << ")";
  }
  os << "\n";
}

int verdict_exit(const RunConfig& cfg, bool any_fail) {
  return cfg.strict && any_fail ? 2 : 0;
}

struct CommandOutput {
  std::string text;
  bool any_fail = false;
};

CommandOutput cmd_div(const RunConfig& cfg) {
  AdmissiblePair pair = make_pair(resolve_g(cfg.g_spec), resolve_f(cfg.f_spec));
  Dist p{std::vector<double>(cfg.p)}, q{std::vector<double>(cfg.q)};
  double fd = f_div(p, q, pair.f);
  double gd = gf_div(p, q, pair);
  CommandOutput out;
  if (cfg.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").value(std::string("div"));
    w.key("g").value(pair.g.name);
    w.key("f").value(pair.f.name);
    w.key("f_div").value(fd);
    w.key("gf_div").value(gd);
    w.key("dm").value(pair.dm);
    w.end_object();
    out.text = w.str() + "\n";
  } else if (cfg.format == "csv") {
    out.text = "g,f,f_div,gf_div\n" + pair.g.name + "," + pair.f.name + "," +
               fmt12(fd) + "," + fmt12(gd) + "\n";
  } else {
    std::ostringstream os;
    os << "D_f(p||q)      = " << fmt12(fd) << "\n";
    os << "D_{G,f}(p||q)  = " << fmt12(gd) << "\n";
    out.text = os.str();
  }
  return out;
}

CommandOutput cmd_info(const RunConfig& cfg) {
  AdmissiblePair pair = make_pair(resolve_g(cfg.g_spec), resolve_f(cfg.f_spec));
  Channel w = resolve_channel(cfg.channel_spec);
  SolverOpts opts = cfg.solver;
  opts.seed = cfg.seed;
  CommandOutput out;
  JsonWriter jw;
  std::ostringstream os;
  if (cfg.maximize) {
    auto [value, p_star] = max_igf_over_input(w, pair, opts);
    if (cfg.format == "json") {
      jw.begin_object();
      jw.key("command").value(std::string("info_max"));
      jw.key("value").value(value);
      jw.key("argmax_p").raw(to_json(p_star));
      jw.end_object();
      out.text = jw.str() + "\n";
    } else if (cfg.format == "csv") {
      os << "value,argmax_p\n" << fmt12(value) << ",\"";
      for (int i = 0; i < p_star.size(); ++i) os << (i ? ";" : "") << fmt12(p_star[i]);
      os << "\"\n";
      out.text = os.str();
    } else {
      os << "max_p I_{G,f}(X;Y) = " << fmt12(value) << "\nargmax p = (";
      for (int i = 0; i < p_star.size(); ++i) os << (i ? ", " : "") << fmt12(p_star[i]);
      os << ")\n";
      out.text = os.str();
    }
    return out;
  }
  Dist p{std::vector<double>(cfg.p)};
  InfoResult r = igf_info(p, w, pair, opts);
  if (cfg.format == "json") {
    jw.begin_object();
    jw.key("command").value(std::string("info"));
    jw.key("value").value(r.value);
    jw.key("argmin_q").raw(to_json(r.argmin_q));
    jw.key("solver_iters").value((long long)r.solver_iters);
    jw.key("restarts_used").value((long long)r.restarts_used);
    jw.key("certified_gap").value(r.certified_gap);
    jw.key("kkt_residual").value(r.kkt_residual);
    jw.end_object();
    out.text = jw.str() + "\n";
  } else if (cfg.format == "csv") {
    os << "value,certified_gap,kkt_residual,iters\n"
       << fmt12(r.value) << "," << fmt12(r.certified_gap) << ","
       << fmt12(r.kkt_residual) << "," << r.solver_iters << "\n";
    out.text = os.str();
  } else {
    os << "I_{G,f}(X;Y) = " << fmt12(r.value) << "\n";
    os << "argmin q = (";
    for (int i = 0; i < r.argmin_q.size(); ++i)
      os << (i ? ", " : "") << fmt12(r.argmin_q[i]);
    os << ")\ncertified_gap = " << fmt12(r.certified_gap)
       << "  kkt_residual = " << fmt12(r.kkt_residual) << "\n";
    out.text = os.str();
  }
  return out;
}

CommandOutput cmd_subadd(const RunConfig& cfg) {
  AdmissiblePair pair = make_pair(resolve_g(cfg.g_spec), resolve_f(cfg.f_spec));
  std::vector<ScanReport> reports;
  reports.push_back(binary_gap_scan(pair, cfg.grid_res, cfg.samples, cfg.seed));
  // membership checks applicable to this transform
  if (pair.g.name == "x") {
    reports.push_back(check_T(pair.f));
  } else if (pair.g.name == "log1p") {
    reports.push_back(check_Tplus(class_shape(pair.f)));
  } else if (pair.g.name == "neg_log1m") {
    reports.push_back(check_Tminus(class_shape(pair.f)));
  }
  reports.push_back(check_inv_gprime_concave(pair.g));

  CommandOutput out;
  bool fail = false;
  for (const auto& r : reports)
    if (r.verdict == Verdict::kFail && r.target.rfind("binary_gap_scan", 0) == 0)
      fail = true;
  out.any_fail = fail;
  if (cfg.format == "json") {
    JsonWriter w;
    w.begin_object();
    w.key("command").value(std::string("subadd"));
    w.key("reports").begin_array();
    for (const auto& r : reports) w.raw(to_json(r));
    w.end_array();
    w.end_object();
    out.text = w.str() + "\n";
  } else {
    std::ostringstream os;
    for (const auto& r : reports) append_scan_pretty(os, r);
    out.text = os.str();
  }
  return out;
}

CommandOutput cmd_check(const RunConfig& cfg) {
  CommandOutput out;
  ScanReport rep;
  if (cfg.check_kind == "T") {
    rep = check_T(resolve_f(cfg.f_spec));
  } else if (cfg.check_kind == "Tplus") {
    rep = cfg.shape_spec.empty() ? check_Tplus(class_shape(resolve_f(cfg.f_spec)))
                                 : check_Tplus(resolve_shape(cfg.shape_spec));
  } else if (cfg.check_kind == "Tminus") {
    rep = cfg.shape_spec.empty() ? check_Tminus(class_shape(resolve_f(cfg.f_spec)))
                                 : check_Tminus(resolve_shape(cfg.shape_spec));
  } else if (cfg.check_kind == "invg") {
    rep = check_inv_gprime_concave(resolve_g(cfg.g_spec));
  } else if (cfg.check_kind == "roots") {
    Dist qz{std::vector<double>(cfg.qZ)}, rz{std::vector<double>(cfg.rZ)};
    int count = count_stationary_roots(resolve_f(cfg.f_spec), qz, rz, cfg.lambda,
                                       cfg.lin_a, cfg.lin_b);
    if (cfg.format == "json") {
      JsonWriter w;
      w.begin_object();
      w.key("command").value(std::string("check_roots"));
      w.key("count").value((long long)count);
      w.end_object();
      out.text = w.str() + "\n";
    } else {
      out.text = "stationary_roots = " + std::to_string(count) + "\n";
    }
    return out;
  } else {
    throw BadInput("unknown check kind '" + cfg.check_kind + "'");
  }
  out.any_fail = rep.verdict == Verdict::kFail;
  if (cfg.format == "json") {
    out.text = to_json(rep) + "\n";
  } else {
    std::ostringstream os;
    append_scan_pretty(os, rep);
    out.text = os.str();
  }
  return out;
}

CommandOutput cmd_bounds(const RunConfig& cfg) {
  CommandOutput out;
  SolverOpts opts = cfg.solver;
  opts.seed = cfg.seed;
  auto render = [&](const BoundResult& r, const std::string& label) {
    if (cfg.format == "json") return to_json(r) + "\n";
    std::ostringstream os;
    os << label << " = " << fmt12(r.value);
    for (const auto& [k, v] : r.side_conditions)
      os << "  [" << k << "=" << (v ? "yes" : "no") << "]";
    os << "\n";
    return os.str();
  };

  if (cfg.bound_kind == "fano" || cfg.bound_kind == "blocklength") {
    AdmissiblePair pair = make_pair(resolve_g(cfg.g_spec), resolve_f(cfg.f_spec));
    std::vector<long long> ms = cfg.m_grid.empty()
                                    ? std::vector<long long>{cfg.m}
                                    : cfg.m_grid;
    std::vector<double> eps = cfg.eps_grid.empty()
                                  ? std::vector<double>{cfg.eps}
                                  : cfg.eps_grid;
    bool grid = ms.size() > 1 || eps.size() > 1 || cfg.format == "csv";
    if (grid) {
      std::ostringstream os;
      os << "M,eps,value\n";
      for (long long m : ms)
        for (double e : eps) {
          double v = cfg.bound_kind == "fano"
                         ? fano_lower(pair, m, e).value
                         : blocklength_lower(pair, m, e,
                                             resolve_channel(cfg.channel_spec),
                                             opts)
                               .value;
          os << m << "," << fmt12(e) << "," << fmt12(v) << "\n";
        }
      out.text = os.str();
      return out;
    }
    BoundResult r =
        cfg.bound_kind == "fano"
            ? fano_lower(pair, cfg.m, cfg.eps)
            : blocklength_lower(pair, cfg.m, cfg.eps,
                                resolve_channel(cfg.channel_spec), opts);
    out.text = render(r, cfg.bound_kind);
    return out;
  }
  if (cfg.bound_kind == "ht") {
    AdmissiblePair pair = make_pair(resolve_g(cfg.g_spec), resolve_f(cfg.f_spec));
    Dist p{std::vector<double>(cfg.p)}, q{std::vector<double>(cfg.q)};
    BoundResult r = ht_bound_check(pair, p, q, cfg.n, cfg.alpha, cfg.beta);
    out.any_fail = r.value < -1e-10;
    out.text = render(r, "ht_slack");
    return out;
  }
  if (cfg.bound_kind == "klcmp") {
    FGenerator f = resolve_f(cfg.f_spec);
    Dist p{std::vector<double>(cfg.p)}, q{std::vector<double>(cfg.q)};
    KlDirection dir =
        cfg.direction == "minus" ? KlDirection::kMinus : KlDirection::kPlus;
    BoundResult r = kl_comparison(f, cfg.s, cfg.c, p, q, dir);
    out.any_fail = dir == KlDirection::kPlus && r.value < -1e-10;
    out.text = render(r, "klcmp_slack");
    return out;
  }
  throw BadInput("unknown bound kind '" + cfg.bound_kind + "'");
}

CommandOutput cmd_exponent(const RunConfig& cfg) {
  Channel w = resolve_channel(cfg.channel_spec);
  if (cfg.rates.empty()) throw BadInput("exponent: --rates required");
  if (!cfg.f_spec.empty() && cfg.f_spec != "power")
    throw UnknownName("exponent: unknown family '" + cfg.f_spec +
                      "' (available: power)");
  SolverOpts opts = cfg.solver;
  opts.seed = cfg.seed;
  // the engine works in nats; the bits toggle only rescales I/O
  const double unit = cfg.bits ? std::log(2.0) : 1.0;
  std::vector<double> rates_nats;
  for (double r : cfg.rates) rates_nats.push_back(r * unit);
  ExponentCurve curve = efsp_curve(w, rates_nats, power_family(), opts);
  for (size_t i = 0; i < curve.values.size(); ++i) {
    curve.rate_grid[i] = cfg.rates[i];
    curve.values[i] /= unit;
  }
  CommandOutput out;
  if (cfg.format == "json") {
    JsonWriter jw;
    jw.begin_object();
    jw.key("command").value(std::string("exponent"));
    jw.key("points").begin_array();
    for (size_t i = 0; i < curve.rate_grid.size(); ++i) {
      const EfspCert& c = curve.per_point[i];
      jw.begin_object();
      jw.key("rate").value(curve.rate_grid[i]);
      jw.key("value").value(curve.values[i]);
      jw.key("s_star").value(c.s_star);
      jw.key("p_star").begin_array();
      for (double v : c.p_star) jw.value(v);
      jw.end_array();
      jw.key("q_star").begin_array();
      for (double v : c.q_star) jw.value(v);
      jw.end_array();
      jw.key("lower").value(c.lower);
      jw.key("upper").value(c.upper);
      jw.key("converged").value(c.converged);
      jw.key("positive_channel").value(c.positive_channel);
      jw.end_object();
    }
    jw.end_array();
    jw.end_object();
    out.text = jw.str() + "\n";
  } else {
    std::ostringstream os;
    os << "R,E,s_star,p_star,q_star\n";
    for (size_t i = 0; i < curve.rate_grid.size(); ++i) {
      const EfspCert& c = curve.per_point[i];
      os << fmt12(curve.rate_grid[i]) << "," << fmt12(curve.values[i]) << ","
         << fmt12(c.s_star) << ",\"";
      for (size_t k = 0; k < c.p_star.size(); ++k)
        os << (k ? ";" : "") << fmt12(c.p_star[k]);
      os << "\",\"";
      for (size_t k = 0; k < c.q_star.size(); ++k)
        os << (k ? ";" : "") << fmt12(c.q_star[k]);
      os << "\"\n";
    }
    out.text = os.str();
  }
  return out;
}

CommandOutput cmd_tables(const RunConfig& cfg) {
  const auto& rows = cfg.which_table == 2 ? table2_rows() : table1_rows();
  CommandOutput out;
  std::vector<std::pair<const TableRow*, ScanReport>> results;
  for (const auto& row : rows) {
    FGenerator f = catalog_f(row.f_name, row.params);
    ScanReport rep =
        cfg.which_table == 2 ? check_Tplus(class_shape(f)) : check_T(f);
    results.emplace_back(&row, std::move(rep));
  }
  bool mismatch = false;
  std::ostringstream os;
  JsonWriter jw;
  if (cfg.format == "json") {
    jw.begin_object();
    jw.key("command").value(std::string("tables"));
    jw.key("which").value((long long)cfg.which_table);
    jw.key("rows").begin_array();
  }
  for (auto& [row, rep] : results) {
    bool yes = rep.verdict == Verdict::kPass;
    if (yes != row->expected_yes) mismatch = true;
    if (cfg.format == "json") {
      jw.begin_object();
      jw.key("name").value(row->display);
      jw.key("generator").value(row->f_name);
      jw.key("verdict").value(std::string(yes ? "Yes" : "No"));
      jw.key("expected").value(std::string(row->expected_yes ? "Yes" : "No"));
      jw.key("report").raw(to_json(rep));
      jw.end_object();
    } else {
      os.width(30);
      os << std::left << row->display;
      os.width(0);
      os << "  " << (yes ? "Yes" : "No ") << "  (expected "
         << (row->expected_yes ? "Yes" : "No") << ", min_gap "
         << fmt12(rep.min_gap) << ")\n";
    }
  }
  if (cfg.format == "json") {
    jw.end_array();
    jw.key("matches_expected").value(!mismatch);
    jw.end_object();
    out.text = jw.str() + "\n";
  } else {
    out.text = os.str();
  }
  out.any_fail = mismatch;
  return out;
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    CommandOutput result;
    if (cfg.command == "div") {
      result = cmd_div(cfg);
    } else if (cfg.command == "info") {
      result = cmd_info(cfg);
    } else if (cfg.command == "subadd") {
      result = cmd_subadd(cfg);
    } else if (cfg.command == "check") {
      result = cmd_check(cfg);
    } else if (cfg.command == "bounds") {
      result = cmd_bounds(cfg);
    } else if (cfg.command == "exponent") {
      result = cmd_exponent(cfg);
    } else if (cfg.command == "tables") {
      result = cmd_tables(cfg);
    } else {
      throw BadInput("unknown command '" + cfg.command + "'");
    }
    out << result.text;
    if (!cfg.output_path.empty()) {
      std::ofstream file(cfg.output_path, std::ios::binary);
      if (!file) throw BadInput("cannot write " + cfg.output_path);
      file << result.text;
    }
    return verdict_exit(cfg, result.any_fail);
  } catch (const Error& e) {
    const char* kind = "error";
    if (dynamic_cast<const DomainViolation*>(&e)) kind = "domain_violation";
    else if (dynamic_cast<const UnknownName*>(&e)) kind = "unknown_name";
    else if (dynamic_cast<const BadParameter*>(&e)) kind = "bad_parameter";
    else if (dynamic_cast<const SizeMismatch*>(&e)) kind = "size_mismatch";
    else if (dynamic_cast<const ConvexityRequired*>(&e)) kind = "convexity_required";
    else if (dynamic_cast<const NonFiniteObjective*>(&e)) kind = "non_finite_objective";
    else if (dynamic_cast<const InvalidTransform*>(&e)) kind = "invalid_transform";
    else if (dynamic_cast<const BadInput*>(&e)) kind = "bad_input";
    err << "error kind=" << kind << " msg=" << nlohmann::json(e.what()).dump()
        << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error kind=internal msg=" << nlohmann::json(e.what()).dump() << "\n";
    return 1;
  }
}

RunConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot read config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j = nlohmann::json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) throw BadInput("malformed config JSON");
  RunConfig cfg;
  auto get_str = [&](const char* k, std::string& dst) {
    if (j.contains(k)) dst = j.at(k).get<std::string>();
  };
  auto get_vec = [&](const char* k, std::vector<double>& dst) {
    if (j.contains(k)) dst = j.at(k).get<std::vector<double>>();
  };
  get_str("command", cfg.command);
  get_str("f", cfg.f_spec);
  get_str("g", cfg.g_spec);
  get_str("shape", cfg.shape_spec);
  get_str("channel", cfg.channel_spec);
  get_str("check_kind", cfg.check_kind);
  get_str("bound_kind", cfg.bound_kind);
  get_str("direction", cfg.direction);
  get_str("format", cfg.format);
  get_str("output", cfg.output_path);
  get_vec("p", cfg.p);
  get_vec("q", cfg.q);
  get_vec("qY", cfg.qY);
  get_vec("rY", cfg.rY);
  get_vec("qZ", cfg.qZ);
  get_vec("rZ", cfg.rZ);
  get_vec("rates", cfg.rates);
  get_vec("eps_grid", cfg.eps_grid);
  if (j.contains("M")) cfg.m = j.at("M").get<long long>();
  if (j.contains("eps")) cfg.eps = j.at("eps").get<double>();
  if (j.contains("n")) cfg.n = j.at("n").get<int>();
  if (j.contains("alpha")) cfg.alpha = j.at("alpha").get<double>();
  if (j.contains("beta")) cfg.beta = j.at("beta").get<double>();
  if (j.contains("s")) cfg.s = j.at("s").get<double>();
  if (j.contains("c")) cfg.c = j.at("c").get<double>();
  if (j.contains("which")) cfg.which_table = j.at("which").get<int>();
  if (j.contains("grid_res")) cfg.grid_res = j.at("grid_res").get<int>();
  if (j.contains("samples")) cfg.samples = j.at("samples").get<long long>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<uint64_t>();
  if (j.contains("strict")) cfg.strict = j.at("strict").get<bool>();
  if (j.contains("maximize")) cfg.maximize = j.at("maximize").get<bool>();
  if (j.contains("restarts")) cfg.solver.restarts = j.at("restarts").get<int>();
  if (j.contains("max_iters")) cfg.solver.max_iters = j.at("max_iters").get<int>();
  return cfg;
}

}  // namespace gfdiv
