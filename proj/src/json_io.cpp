#include "gfdiv/json_io.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace gfdiv {

using nlohmann::json;

namespace {

double parse_number(const json& j, const std::string& what) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string& s = j.get_ref<const std::string&>();
    if (s == "Infinity") return kInf;
    if (s == "-Infinity") return -kInf;
    if (s == "NaN") return indeterminate();
  }
  throw BadInput("expected a number for " + what);
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw BadInput("malformed JSON");
  return j;
}

}  // namespace

void JsonWriter::comma() {
  if (!first_stack_.empty() && !pending_key_) {
    if (!first_stack_.back()) out_ += ',';
    first_stack_.back() = false;
  }
  pending_key_ = false;
}

JsonWriter& JsonWriter::begin_object() {
  comma();
  out_ += '{';
  first_stack_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  comma();
  out_ += '[';
  first_stack_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& k) {
  comma();
  out_ += json(k).dump();
  out_ += ':';
  pending_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  comma();
  if (std::isfinite(v))
    out_ += fmt_g(v, 17);
  else
    out_ += json(fmt_g(v, 17)).dump();  // "Infinity" etc., quoted
  return *this;
}

JsonWriter& JsonWriter::value(long long v) {
  comma();
  out_ += std::to_string(v);
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  comma();
  out_ += v ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  comma();
  out_ += json(v).dump();
  return *this;
}

JsonWriter& JsonWriter::raw(const std::string& text) {
  comma();
  out_ += text;
  return *this;
}

std::string to_json(const Dist& d) {
  JsonWriter w;
  w.begin_array();
  for (int i = 0; i < d.size(); ++i) w.value(d[i]);
  w.end_array();
  return w.str();
}

std::string to_json(const Channel& c) {
  JsonWriter w;
  w.begin_array();
  for (int x = 0; x < c.nx(); ++x) {
    w.begin_array();
    for (int y = 0; y < c.ny(); ++y) w.value(c.row(x)[y]);
    w.end_array();
  }
  w.end_array();
  return w.str();
}

std::string to_json(const ScanReport& r) {
  JsonWriter w;
  w.begin_object();
  w.key("target").value(r.target);
  w.key("verdict").value(std::string(to_string(r.verdict)));
  w.key("min_gap").value(r.min_gap);
  w.key("witness").begin_array();
  for (double v : r.witness) w.value(v);
  w.end_array();
  w.key("witness_kind").value(r.witness_kind);
  w.key("samples").value(r.samples);
  w.key("grid_res").value(r.grid_res);
  w.key("tol").value(r.tol);
  w.key("inf_samples").value(r.inf_samples);
  w.end_object();
  return w.str();
}

std::string to_json(const BoundResult& r) {
  JsonWriter w;
  w.begin_object();
  w.key("value").value(r.value);
  w.key("inputs").begin_object();
  for (const auto& [k, v] : r.inputs_echo) w.key(k).value(v);
  w.end_object();
  w.key("side_conditions").begin_object();
  auto conditions = r.side_conditions;  // sorted so round-trips are stable
  std::sort(conditions.begin(), conditions.end());
  for (const auto& [k, v] : conditions) w.key(k).value(v);
  w.end_object();
  w.end_object();
  return w.str();
}

Dist dist_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array()) throw BadInput("Dist JSON must be an array");
  std::vector<double> v;
  for (const auto& e : j) v.push_back(parse_number(e, "Dist entry"));
  return Dist(std::move(v));
}

Channel channel_from_json(const std::string& text) {
  json j = parse(text);
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw BadInput("Channel JSON must be an array of row arrays");
  std::vector<Dist> rows;
  for (const auto& row : j) {
    std::vector<double> v;
    for (const auto& e : row) v.push_back(parse_number(e, "Channel entry"));
    rows.emplace_back(std::move(v));
  }
  return Channel(std::move(rows));
}

ScanReport scan_report_from_json(const std::string& text) {
  json j = parse(text);
  ScanReport r;
  r.target = j.at("target").get<std::string>();
  std::string v = j.at("verdict").get<std::string>();
  r.verdict = v == "PASS"   ? Verdict::kPass
              : v == "FAIL" ? Verdict::kFail
                            : Verdict::kInconclusive;
  r.min_gap = parse_number(j.at("min_gap"), "min_gap");
  for (const auto& e : j.at("witness")) r.witness.push_back(parse_number(e, "witness"));
  r.witness_kind = j.at("witness_kind").get<std::string>();
  r.samples = j.at("samples").get<long long>();
  r.grid_res = j.at("grid_res").get<int>();
  r.tol = parse_number(j.at("tol"), "tol");
  r.inf_samples = j.at("inf_samples").get<long long>();
  return r;
}

BoundResult bound_result_from_json(const std::string& text) {
  json j = parse(text);
  BoundResult r;
  r.value = parse_number(j.at("value"), "value");
  for (const auto& [k, v] : j.at("inputs").items())
    r.inputs_echo[k] = parse_number(v, "input " + k);
  for (const auto& [k, v] : j.at("side_conditions").items())
    r.side_conditions.emplace_back(k, v.get<bool>());
  return r;
}

namespace {

Params params_from(const json& j) {
  Params p;
  if (j.contains("params"))
    for (const auto& [k, v] : j.at("params").items())
      p[k] = parse_number(v, "param " + k);
  return p;
}

}  // namespace

FGenerator generator_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_string()) return catalog_f(j.get<std::string>());
  if (j.contains("table")) {
    std::vector<std::pair<double, double>> table;
    for (const auto& row : j.at("table")) {
      if (!row.is_array() || row.size() != 2)
        throw BadInput("table rows must be [x, f(x)] pairs");
      table.emplace_back(parse_number(row[0], "table x"),
                         parse_number(row[1], "table f(x)"));
    }
    NormTag tag = NormTag::kZeroAtOne;
    if (j.value("norm", "zero_at_one") == std::string("one_at_one"))
      tag = NormTag::kOneAtOne;
    return tabulated_f(j.value("name", "tabulated"), std::move(table), tag,
                       j.value("concave", false));
  }
  return catalog_f(j.at("name").get<std::string>(), params_from(j));
}

GTransform gtransform_from_json(const std::string& text) {
  json j = parse(text);
  if (j.is_string()) return catalog_g(j.get<std::string>());
  return catalog_g(j.at("name").get<std::string>(), params_from(j));
}

}  // namespace gfdiv
