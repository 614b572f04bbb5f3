#include "mvlab/report_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace mvlab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json strategy_json(const SamplingStrategy& s) {
  ordered_json out;
  switch (s.kind) {
    case SamplingStrategy::Kind::exhaustive:
      out["kind"] = "exhaustive";
      break;
    case SamplingStrategy::Kind::grid:
      out["kind"] = "grid";
      out["q"] = s.q;
      break;
    case SamplingStrategy::Kind::random:
      out["kind"] = "random";
      out["seed"] = s.seed;
      out["count"] = s.count;
      out["denominator_bound"] = s.denominator_bound;
      break;
  }
  return out;
}

}  // namespace

std::string report_to_json(const CheckReport& report,
                           const std::function<std::string(const Element&)>& render) {
  ordered_json doc;
  doc["algebra"]["name"] = report.algebra;
  ordered_json params = ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = value;
  doc["algebra"]["params"] = params;
  doc["strategy"] = strategy_json(report.strategy);
  doc["axiom4_form"] = report.axiom4_form == Axiom4Form::standard ? "standard" : "as-printed";
  ordered_json verdicts = ordered_json::array();
  for (const auto& v : report.verdicts) {
    ordered_json jv;
    jv["axiom"] = std::string(axiom_name(v.axiom));
    jv["holds"] = v.holds;
    jv["cases"] = v.cases;
    jv["violations"] = v.violations;
    ordered_json ces = ordered_json::array();
    for (const auto& ce : v.counterexamples) {
      ordered_json jc;
      ordered_json inputs = ordered_json::array();
      for (const auto& e : ce.inputs) inputs.push_back(render(e));
      jc["inputs"] = inputs;
      jc["lhs"] = render(ce.lhs);
      jc["rhs"] = render(ce.rhs);
      ces.push_back(jc);
    }
    jv["counterexamples"] = ces;
    verdicts.push_back(jv);
  }
  doc["verdicts"] = verdicts;
  return doc.dump(2) + "\n";
}

std::string report_to_text(const CheckReport& report,
                           const std::function<std::string(const Element&)>& render) {
  std::ostringstream out;
  out << "algebra: " << report.algebra;
  if (!report.params.empty()) {
    out << " (";
    for (std::size_t i = 0; i < report.params.size(); ++i) {
      if (i) out << ", ";
      out << report.params[i].first << "=" << report.params[i].second;
    }
    out << ")";
  }
  out << "\n";
  const auto& s = report.strategy;
  switch (s.kind) {
    case SamplingStrategy::Kind::exhaustive:
      out << "strategy: exhaustive\n";
      break;
    case SamplingStrategy::Kind::grid:
      out << "strategy: grid q=" << s.q << "\n";
      break;
    case SamplingStrategy::Kind::random:
      out << "strategy: random seed=" << s.seed << " count=" << s.count
          << " denominator_bound=" << s.denominator_bound << "\n";
      break;
  }
  if (report.axiom4_form == Axiom4Form::as_printed) out << "axiom4_form: as-printed\n";
  for (const auto& v : report.verdicts) {
    out << "  " << axiom_name(v.axiom) << ": " << (v.holds ? "holds" : "FAILS") << " ("
        << v.cases << " cases";
    if (v.violations) out << ", " << v.violations << " violations";
    out << ")\n";
    for (const auto& ce : v.counterexamples) {
      out << "    (";
      for (std::size_t i = 0; i < ce.inputs.size(); ++i) {
        if (i) out << ", ";
        out << render(ce.inputs[i]);
      }
      out << ") -> lhs " << render(ce.lhs) << ", rhs " << render(ce.rhs) << "\n";
    }
  }
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp.string());
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

}  // namespace mvlab
