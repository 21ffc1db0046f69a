#include "nlb/report.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

namespace nlb {
namespace {

using Json = nlohmann::ordered_json;

Json detail_json(const DetailValue& v) {
  return std::visit([](const auto& x) { return Json(x); }, v);
}

std::string detail_text(const DetailValue& v) {
  if (const auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

std::string format_ms(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

}  // namespace

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed; });
}

void Report::canonicalize() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.check < b.check; });
}

std::string render_json(const Report& report, const RenderOptions& opts) {
  Json doc;
  doc["command"] = report.command;
  doc["subject"] = report.subject;
  doc["seed"] = report.seed;
  doc["passed"] = report.passed();
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json j;
    j["check"] = c.check;
    j["passed"] = c.passed;
    j["witness_inputs"] = c.witness_inputs;
    j["witness_defect"] = c.witness_defect ? Json(*c.witness_defect) : Json(nullptr);
    j["tuples_checked"] = c.tuples_checked;
    j["seed"] = c.seed;
    j["duration_ms"] = opts.timing ? c.duration_ms : 0.0;
    Json details = Json::object();
    for (const auto& d : c.details) details[d.key] = detail_json(d.value);
    j["details"] = std::move(details);
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  Json summary = Json::object();
  for (const auto& d : report.summary) summary[d.key] = detail_json(d.value);
  doc["summary"] = std::move(summary);
  return doc.dump(2) + "\n";
}

std::string render_text(const Report& report, const RenderOptions& opts) {
  std::string out = report.command + " " + report.subject + " (seed " +
                    std::to_string(report.seed) + ")\n";
  for (const auto& c : report.checks) {
    out += "  " + c.check + ": " + (c.passed ? "PASS" : "FAIL") + "  [" +
           std::to_string(c.tuples_checked) + " tuples";
    if (opts.timing) out += ", " + format_ms(c.duration_ms) + " ms";
    out += "]\n";
    for (const auto& d : c.details) out += "      " + d.key + " = " + detail_text(d.value) + "\n";
    if (!c.passed) {
      out += "      witness inputs:";
      for (const auto& w : c.witness_inputs) out += " [" + w + "]";
      out += "\n";
      if (c.witness_defect) out += "      defect: " + *c.witness_defect + "\n";
    }
  }
  for (const auto& d : report.summary) out += "  " + d.key + " = " + detail_text(d.value) + "\n";
  out += report.passed() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

CheckRecord make_record(std::string check, const Verdict& v, const Ring& ring, std::uint64_t seed) {
  CheckRecord r;
  r.check = std::move(check);
  r.passed = v.passed;
  r.tuples_checked = v.tuples_checked;
  r.seed = seed;
  r.details.push_back({"tuples_total", static_cast<std::int64_t>(v.tuples_total)});
  if (v.heuristic_pass) r.details.push_back({"heuristic_pass", true});
  if (v.witness) {
    for (const auto& p : v.witness->inputs) r.witness_inputs.push_back(p.str(ring));
    r.witness_defect = v.witness->defect.str(ring);
    if (v.witness->index) r.details.push_back({"witness_index", format_index(*v.witness->index)});
  }
  if (v.equal_slots) r.details.push_back({"equal_slots", static_cast<std::int64_t>(*v.equal_slots)});
  return r;
}

CheckRecord make_record(std::string check, const SectionVerdict& v, const Ring& base,
                        std::uint64_t seed) {
  CheckRecord r;
  r.check = std::move(check);
  r.passed = v.passed;
  r.tuples_checked = v.tuples_checked;
  r.seed = seed;
  r.details.push_back({"tuples_total", static_cast<std::int64_t>(v.tuples_total)});
  for (const auto& s : v.inputs) r.witness_inputs.push_back(s.str(base));
  if (v.defect) r.witness_defect = v.defect->str(base);
  return r;
}

}  // namespace nlb
