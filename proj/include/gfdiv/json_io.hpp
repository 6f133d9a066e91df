#pragma once

#include <string>

#include "gfdiv/bounds.hpp"
#include "gfdiv/subadd.hpp"

namespace gfdiv {

// Deterministic JSON writer: fixed key order, 17-significant-digit decimals,
// non-finite values as the strings "Infinity"/"-Infinity"/"NaN". Reports
// written through this writer are byte-identical across runs.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& k);
  JsonWriter& value(double v);
  JsonWriter& value(long long v);
  JsonWriter& value(int v) { return value((long long)v); }
  JsonWriter& value(bool v);
  JsonWriter& value(const std::string& v);
  JsonWriter& raw(const std::string& text);
  const std::string& str() const { return out_; }

 private:
  void comma();
  std::string out_;
  std::vector<bool> first_stack_;
  bool pending_key_ = false;
};

std::string to_json(const Dist& d);
std::string to_json(const Channel& c);
std::string to_json(const ScanReport& r);
std::string to_json(const BoundResult& r);

// Parsers (tolerant of the writer's non-finite string tokens).
Dist dist_from_json(const std::string& text);
Channel channel_from_json(const std::string& text);
ScanReport scan_report_from_json(const std::string& text);
BoundResult bound_result_from_json(const std::string& text);

// Generator spec: {"name": ..., "params": {...}} resolved against the
// registry, or {"table": [[x, f(x)], ...], "norm": "zero_at_one"|"one_at_one",
// "concave": bool} for tabulated generators.
FGenerator generator_from_json(const std::string& text);
GTransform gtransform_from_json(const std::string& text);

}  // namespace gfdiv
