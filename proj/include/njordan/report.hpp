#ifndef NJORDAN_REPORT_HPP
#define NJORDAN_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "freealg.hpp"

namespace njordan {

using Json = nlohmann::ordered_json;

enum class ReportFormat { text, json };

inline ReportFormat parse_report_format(std::string_view s) {
  if (s == "text") return ReportFormat::text;
  if (s == "json") return ReportFormat::json;
  throw precondition_error("unknown report format '" + std::string(s) + "'");
}

/// Outcome of a verifier run. `payload` holds the command-specific data;
/// both renderings are produced from the same fields.
struct Report {
  std::string command;
  unsigned n = 0;
  Mode a_mode = Mode::commutative;
  Mode b_mode = Mode::commutative;
  bool pass = false;
  /// Absent unless timing was requested, so untimed runs render identically.
  std::optional<std::int64_t> elapsed_ms;
  Json payload = Json::object();
};

inline Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  j["n"] = r.n;
  j["a_mode"] = std::string(to_string(r.a_mode));
  j["b_mode"] = std::string(to_string(r.b_mode));
  j["outcome"] = r.pass ? "pass" : "fail";
  j["elapsed_ms"] = r.elapsed_ms ? Json(*r.elapsed_ms) : Json(nullptr);
  j["payload"] = r.payload;
  return j;
}

namespace detail {

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void render_json_text(const Json& v, const std::string& indent, std::string& out) {
  for (auto it = v.begin(); it != v.end(); ++it) {
    const std::string key = v.is_object() ? it.key() : std::string("-");
    const Json& child = it.value();
    if (child.is_structured() && !child.empty()) {
      out += indent + key + ":\n";
      render_json_text(child, indent + "  ", out);
    } else if (child.is_structured()) {
      out += indent + key + ": " + (child.is_array() ? "[]" : "{}") + "\n";
    } else if (v.is_array()) {
      out += indent + "- " + scalar_text(child) + "\n";
    } else {
      out += indent + key + ": " + scalar_text(child) + "\n";
    }
  }
}

} // namespace detail

/// Deterministic rendering. Text is a `key: value` listing of the JSON
/// document followed by a `RESULT: PASS|FAIL` line.
inline std::string render_report(const Report& r, ReportFormat format) {
  const Json j = to_json(r);
  if (format == ReportFormat::json) return j.dump(2) + "\n";
  std::string out;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "payload" || it.key() == "outcome") continue;
    out += it.key() + ": " + detail::scalar_text(it.value()) + "\n";
  }
  if (!r.payload.empty()) {
    out += "payload:\n";
    detail::render_json_text(r.payload, "  ", out);
  }
  out += r.pass ? "RESULT: PASS\n" : "RESULT: FAIL\n";
  return out;
}

/// 64-bit FNV-1a, rendered as `fnv1a64:<16 hex digits>`.
inline std::string fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace njordan

#endif // NJORDAN_REPORT_HPP
