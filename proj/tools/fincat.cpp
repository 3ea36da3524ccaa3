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

#include <iostream>

#include <CLI11.hpp>

#include "fincat/caps.hpp"
#include "fincat/dsl/commands.hpp"
#include "fincat/dsl/parser.hpp"
#include "fincat/dsl/printer.hpp"

using namespace fincat;
using namespace fincat::dsl;

namespace {

int usage_error(const std::string& message) {
  std::cerr << "error: " << message << "\nusage: fincat -i FILE [--format human|json] COMMAND\n";
  for (const auto& line : command_usage()) std::cerr << "  " << line << "\n";
  return static_cast<int>(ExitCode::input_error);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-category checks for nullhomotopy structures, torsion theories and factorization systems"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string input, format = "human", cap_spec;
  bool timing = false;
  app.add_option("-i,--input", input, "workspace file (.fincat)")->required();
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"human", "json"}));
  app.add_option("--caps", cap_spec, "cap overrides, e.g. arr=64,tt=12,fs=16,ladder=16");
  app.add_flag("--timing", timing, "include the elapsed time in the report");

  Invocation inv;
  std::vector<std::string> positional;
  std::string level, lift;
  long long cap = -1;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("args", positional, "arguments");
    return sub;
  };
  add("validate", "check every declaration");
  add("analyze", "classify the arrows of a category");
  add("arr", "build Arr(A), H(A) and Z1(A)");
  auto* kernel = add("kernel", "homotopy kernel of an arrow");
  kernel->add_flag("--via-pullback", inv.via_pullback, "also build the kernel from a pullback");
  kernel->add_flag("--strong", inv.strong, "check strongness");
  auto* htt = add("check-htt", "check a torsion pair");
  htt->add_flag("--weak", inv.weak, "accept weak theories");
  htt->add_flag("--quasi-proper", inv.quasi_proper, "require quasi-properness");
  auto* fs = add("check-fs", "check a factorization system");
  fs->add_flag("--weak", inv.weak, "accept weakly orthogonal systems");
  auto* conv = add("convert", "translate between systems and theories");
  conv->add_flag("--weak", inv.weak, "work at the weak level");
  auto* en = add("enumerate", "list systems or theories");
  en->add_option("--level", level, "level to enumerate");
  en->add_option("--cap", cap, "size cap");
  add("ladder", "verify the correspondence ladder");
  auto* pt = add("pointed", "build the pointed string on Arr(A)");
  pt->add_option("--lift", lift, "pair to lift to Arr(A)");
  add("print", "print the normalized workspace");
  std::string unknown;
  app.add_option("unknown", unknown)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    if (!unknown.empty()) return usage_error("unknown command '" + unknown + "'");
    return usage_error(e.what());
  }

  inv.command = app.get_subcommands().front()->get_name();
  inv.args = positional;
  if (!level.empty()) inv.level = level;
  if (!lift.empty()) inv.lift = lift;
  if (cap >= 0) inv.cap = cap;

  try {
    if (!cap_spec.empty()) apply_cap_overrides(caps(), cap_spec);
    auto ws = parse_file(input);
    if (inv.command == "print") {
      std::cout << print_workspace(*ws);
      return 0;
    }
    auto start = std::chrono::steady_clock::now();
    Report r = run_command(*ws, inv);
    if (timing)
      r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::cout << (format == "json" ? emit_json(r) : emit_human(r));
    return static_cast<int>(r.status);
  } catch (const ParseFailure& e) {
    std::cerr << e.what() << "\n";
    return static_cast<int>(ExitCode::input_error);
  } catch (const UsageError& e) {
    return usage_error(e.what());
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::cap_exceeded);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(ExitCode::input_error);
  }
}
