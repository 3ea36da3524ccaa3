// Copyright 2026 The fincat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fincat/dsl/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "fincat/error.hpp"

namespace fincat::dsl {

using nlohmann::ordered_json;

ExitCode status_of(const std::vector<CheckRecord>& checks) {
  return all_pass(checks) ? ExitCode::pass : ExitCode::fail;
}

namespace {

const char* verdict_key(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::not_applicable:
      return "not_applicable";
  }
  return "?";
}

Verdict verdict_from(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "fail") return Verdict::fail;
  if (s == "not_applicable") return Verdict::not_applicable;
  throw Error("unknown verdict '" + s + "'");
}

const char* status_key(ExitCode c) {
  switch (c) {
    case ExitCode::pass:
      return "pass";
    case ExitCode::fail:
      return "fail";
    case ExitCode::input_error:
      return "input_error";
    case ExitCode::cap_exceeded:
      return "cap_exceeded";
  }
  return "?";
}

ExitCode status_from(const std::string& s) {
  for (ExitCode c : {ExitCode::pass, ExitCode::fail, ExitCode::input_error, ExitCode::cap_exceeded})
    if (s == status_key(c)) return c;
  throw Error("unknown status '" + s + "'");
}

std::string fact_text(const ordered_json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

}  // namespace

std::string emit_json(const Report& r) {
  ordered_json j;
  j["version"] = kReportVersion;
  j["command"] = r.command;
  j["facts"] = r.facts;
  j["checks"] = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json cj;
    cj["name"] = c.name;
    cj["anchor"] = c.anchor;
    cj["verdict"] = verdict_key(c.verdict);
    cj["detail"] = c.detail;
    cj["witnesses"] = c.witnesses;
    j["checks"].push_back(std::move(cj));
  }
  j["warnings"] = r.warnings;
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  j["status"] = status_key(r.status);
  j["exit_code"] = static_cast<int>(r.status);
  return j.dump(2) + "\n";
}

std::string emit_human(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  std::size_t key_width = 0;
  for (const auto& [k, v] : r.facts.items()) key_width = std::max(key_width, k.size());
  for (const auto& [k, v] : r.facts.items())
    out << "  " << std::left << std::setw(static_cast<int>(key_width)) << k << "  " << fact_text(v) << "\n";
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
  if (!r.checks.empty()) {
    std::size_t vw = 7, aw = 6, nw = 5;
    for (const auto& c : r.checks) {
      vw = std::max(vw, std::string(to_string(c.verdict)).size());
      aw = std::max(aw, c.anchor.size());
      nw = std::max(nw, c.name.size());
    }
    auto row = [&](const std::string& v, const std::string& a, const std::string& n, const std::string& d) {
      std::ostringstream line;
      line << std::left << std::setw(static_cast<int>(vw)) << v << "  " << std::setw(static_cast<int>(aw)) << a
           << "  " << std::setw(static_cast<int>(nw)) << n << "  " << d;
      std::string s = line.str();
      s.erase(s.find_last_not_of(' ') + 1);
      out << s << "\n";
    };
    row("verdict", "anchor", "check", "detail");
    for (const auto& c : r.checks) {
      row(to_string(c.verdict), c.anchor, c.name, c.detail);
      if (!c.witnesses.empty()) {
        out << std::string(vw + 2, ' ') << "witnesses:";
        for (const auto& w : c.witnesses) out << " " << w;
        out << "\n";
      }
    }
  }
  if (r.timing_ms) out << "timing: " << std::fixed << std::setprecision(1) << *r.timing_ms << " ms\n";
  out << "status: " << status_key(r.status) << "\n";
  return out.str();
}

Report parse_report_json(const std::string& text) {
  try {
    auto j = ordered_json::parse(text);
    if (j.at("version") != kReportVersion) throw Error("unsupported report version");
    Report r;
    r.command = j.at("command").get<std::string>();
    r.facts = j.at("facts");
    for (const auto& cj : j.at("checks"))
      r.checks.push_back({cj.at("name").get<std::string>(), cj.at("anchor").get<std::string>(),
                          verdict_from(cj.at("verdict").get<std::string>()), cj.at("detail").get<std::string>(),
                          cj.at("witnesses").get<std::vector<std::string>>()});
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    if (j.contains("timing_ms")) r.timing_ms = j.at("timing_ms").get<double>();
    r.status = status_from(j.at("status").get<std::string>());
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed report: ") + e.what());
  }
}

bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.facts == b.facts && a.checks == b.checks && a.warnings == b.warnings &&
         a.timing_ms == b.timing_ms && a.status == b.status;
}

}  // namespace fincat::dsl
