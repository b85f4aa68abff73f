#include "tqbc/report.hpp"

#include <cstdio>

namespace tqbc {

namespace {

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", s);
  return buf;
}

}  // namespace

nlohmann::ordered_json to_json(const Counterexample& cx, const Vocabulary& v) {
  const Frame f = Frame::propositional(v);
  nlohmann::ordered_json j;
  j["postulate"] = label(cx.postulate);
  j["atoms"] = v.atoms();
  j["state"] = format_tpo(cx.state, f);
  j["sentences"] = nlohmann::ordered_json::object();
  for (const auto& [name, ws] : cx.sentences) j["sentences"][name] = to_string(theory_of(ws, v), v);
  j["worlds"] = nlohmann::ordered_json::array();
  for (World w : cx.worlds) j["worlds"].push_back(f.name(w));
  j["narrative"] = cx.narrative;
  return j;
}

std::string render_text(const Counterexample& cx, const Vocabulary& v) {
  const Frame f = Frame::propositional(v);
  std::string out = label(cx.postulate) + " counterexample\n";
  out += "  state: " + format_tpo(cx.state, f) + "\n";
  for (const auto& [name, ws] : cx.sentences) {
    out += "  " + name + " = " + to_string(theory_of(ws, v), v) + "   models " + f.braced(ws) + "\n";
  }
  if (!cx.worlds.empty()) {
    out += "  worlds:";
    for (World w : cx.worlds) out += " " + f.name(w);
    out += "\n";
  }
  out += "  " + cx.narrative + "\n";
  return out;
}

nlohmann::ordered_json to_json(const RunReport& r, bool timing) {
  nlohmann::ordered_json j;
  j["theorem"] = token(r.theorem);
  j["title"] = title(r.theorem);
  j["size"] = r.size;
  j["size_unit"] = size_unit(r.theorem) == SizeUnit::Worlds ? "worlds" : "atoms";
  j["domain"] = r.domain;
  j["instances"] = r.instances;
  j["violation_count"] = r.violation_count;
  j["violations"] = nlohmann::ordered_json::array();
  for (const Violation& v : r.violations) {
    nlohmann::ordered_json e;
    e["summary"] = v.summary;
    if (v.counterexample && r.vocabulary) e["counterexample"] = to_json(*v.counterexample, *r.vocabulary);
    j["violations"].push_back(e);
  }
  j["exhibits"] = nlohmann::ordered_json::array();
  if (r.vocabulary) {
    for (const Counterexample& cx : r.exhibits) j["exhibits"].push_back(to_json(cx, *r.vocabulary));
  }
  j["notes"] = r.notes;
  j["pass"] = r.pass();
  if (timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

std::string render_text(const RunReport& r, bool timing) {
  std::string out;
  out += "theorem: " + token(r.theorem) + " (" + title(r.theorem) + ")\n";
  out += "size: " + std::to_string(r.size) + (size_unit(r.theorem) == SizeUnit::Worlds ? " worlds" : " atoms") + "\n";
  out += "domain: " + r.domain + "\n";
  out += "instances: " + std::to_string(r.instances) + "\n";
  out += "violations: " + std::to_string(r.violation_count) + "\n";
  for (const Violation& v : r.violations) out += "  - " + v.summary + "\n";
  if (r.violation_count > r.violations.size()) {
    out += "  ... " + std::to_string(r.violation_count - r.violations.size()) + " more\n";
  }
  for (const Counterexample& cx : r.exhibits) {
    out += "exhibit: ";
    out += r.vocabulary ? render_text(cx, *r.vocabulary) : cx.narrative + "\n";
  }
  for (const std::string& n : r.notes) out += "note: " + n + "\n";
  if (timing) out += "wall time: " + seconds(r.wall_seconds) + " s\n";
  out += std::string("result: ") + (r.pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace tqbc
