#include "qhilb/io.hpp"

#include <charconv>

#include "qhilb/error.hpp"

namespace qhilb::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<int> int_array(const json& j, const char* what) {
  require(j.is_array(), std::string(what) + ": expected an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    require(v.is_number_integer(), std::string(what) + ": expected an array of integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  text = trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    require(ec == std::errc{} && ptr == item.data() + item.size() && !item.empty(),
            "malformed integer list: '" + std::string(text) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

YoungDiagram parse_partition(std::string_view text) {
  return YoungDiagram(parse_int_list(text));
}

HilbertFunction parse_hilbert(std::string_view text) {
  return HilbertFunction(parse_int_list(text));
}

NestedHilbertFunctions parse_nested(std::string_view text) {
  std::vector<HilbertFunction> parts;
  while (true) {
    const auto semi = text.find(';');
    parts.push_back(parse_hilbert(text.substr(0, semi)));
    if (semi == std::string_view::npos) break;
    text.remove_prefix(semi + 1);
  }
  return NestedHilbertFunctions(std::move(parts));
}

json to_json(const MPoly& p, const std::string& main_var, const std::string& t_var) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back({{"e", {e.main, e.t}}, {"c", c.str()}});
  }
  return {{"vars", {main_var, t_var}}, {"terms", terms}};
}

MPoly poly_from_json(const json& j) {
  require(j.is_object() && j.contains("terms") && j["terms"].is_array(), "polynomial JSON: missing terms");
  MPoly p;
  for (const auto& term : j["terms"]) {
    const auto e = int_array(term.at("e"), "polynomial JSON exponent");
    require(e.size() == 2 && e[0] >= 0 && e[1] >= 0, "polynomial JSON: exponent must be two non-negative integers");
    p.add_term(Exponent{static_cast<std::uint32_t>(e[0]), static_cast<std::uint32_t>(e[1])},
               Integer(term.at("c").get<std::string>()));
  }
  return p;
}

json to_json(const DiagramSequence& p) {
  json parts = json::array();
  for (const auto& d : p.parts()) parts.push_back(d.rows());
  return {{"H", p.hilbert().values()}, {"k", p.k()}, {"parts", parts}};
}

DiagramSequence sequence_from_json(const json& j) {
  require(j.is_object() && j.contains("H") && j.contains("k") && j.contains("parts"),
          "sequence JSON: expected keys H, k, parts");
  require(j["k"].is_number_integer() && j["k"].get<int>() >= 1, "sequence JSON: k must be a positive integer");
  require(j["parts"].is_array(), "sequence JSON: parts must be an array");
  std::vector<YoungDiagram> parts;
  for (const auto& part : j["parts"]) parts.emplace_back(int_array(part, "sequence JSON part"));
  return DiagramSequence(HilbertFunction(int_array(j["H"], "sequence JSON H")), j["k"].get<int>(), std::move(parts));
}

json to_json(const NestedHilbertFunctions& bh) {
  json parts = json::array();
  for (const auto& h : bh.parts()) parts.push_back(h.values());
  return {{"k", bh.k()}, {"parts", parts}};
}

NestedHilbertFunctions nested_from_json(const json& j) {
  require(j.is_object() && j.contains("parts") && j["parts"].is_array(), "nested JSON: expected key parts");
  std::vector<HilbertFunction> parts;
  for (const auto& part : j["parts"]) parts.emplace_back(int_array(part, "nested JSON part"));
  NestedHilbertFunctions bh(std::move(parts));
  if (j.contains("k")) require(j["k"] == bh.k(), "nested JSON: k disagrees with the number of parts");
  return bh;
}

json to_json(const VerificationReport& r) {
  json out = {{"identity", r.identity}, {"order", r.order}, {"equal", r.equal}, {"instances", r.instances}};
  out["lhs"] = r.lhs ? to_json(*r.lhs, r.main_var, r.t_var) : json(nullptr);
  out["rhs"] = r.rhs ? to_json(*r.rhs, r.main_var, r.t_var) : json(nullptr);
  if (r.first_diff) {
    const Exponent e = *r.first_diff;
    out["first_diff"] = {{"e", {e.main, e.t}},
                         {"lhs", r.lhs ? r.lhs->coefficient(e).str() : "0"},
                         {"rhs", r.rhs ? r.rhs->coefficient(e).str() : "0"}};
  } else {
    out["first_diff"] = nullptr;
  }
  if (!r.failing_instance.empty()) out["failing_instance"] = r.failing_instance;
  return out;
}

}  // namespace qhilb::io
