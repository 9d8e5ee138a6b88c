// Copyright 2026 The Ordinal Codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, each measured at the
// default configuration and held to its wall-clock limit. Exits nonzero when
// any criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.h"
#include "ordinal/experiment.h"
#include "ordinal/verify.h"

namespace {

struct Check {
  int id;
  const char* title;
  const char* suite;
  double limit_seconds;
};

constexpr Check kChecks[] = {
    {1, "worked-example weight vectors, exact", "fig3f", 1.0},
    {2, "unique response argmax, N <= 7", "argmax", 60.0},
    {3, "Dyck words and stack-sortable counts are Catalan", "catalan", 120.0},
    {4, "ordinal STDP recall, deletion and noise margin", "stdp-recall", 300.0},
    {5, "sequence autoencoder roundtrip", "roundtrip", 60.0},
    {6, "ordinal Huffman codec", "huffman", 60.0},
    {7, "structure tasks", "tasks", 1.0},
};

int RunCli(const std::vector<std::string>& args, std::string& out) {
  std::ostringstream o, e;
  const int code = ordinal::cli::Run(args, o, e);
  out = o.str();
  return code;
}

}  // namespace

int main() {
  const ordinal::ExperimentConfig config;
  int failures = 0;
  std::vector<std::string> first_renders;

  for (const Check& check : kChecks) {
    const auto start = std::chrono::steady_clock::now();
    const ordinal::RunReport report = ordinal::RunSuite(check.suite, config);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    first_renders.push_back(report.Render());
    const bool in_time = elapsed < check.limit_seconds;
    const bool pass = report.passed() && in_time;
    failures += !pass;
    std::cout << (pass ? "PASS" : "FAIL") << " [" << check.id << "] " << check.title
              << " (" << check.suite << ", " << elapsed << " s, limit "
              << check.limit_seconds << " s" << (in_time ? "" : ", TOO SLOW") << ")\n";
    for (const auto& c : report.criteria) {
      std::cout << "       " << (c.pass ? "ok  " : "BAD ") << c.name << " : " << c.detail
                << "\n";
    }
    for (const auto& m : report.metrics) {
      std::cout << "       metric " << m.name << " = " << m.value << "\n";
    }
  }

  // Determinism: a second in-process pass, in parallel this time, and two
  // CLI runs must all reproduce the reports byte for byte.
  std::vector<std::string> names;
  for (const Check& check : kChecks) names.push_back(check.suite);
  const int jobs = static_cast<int>(std::max(2u, std::thread::hardware_concurrency()));
  const auto second = ordinal::RunSuites(names, config, jobs);
  bool same = second.size() == first_renders.size();
  for (std::size_t i = 0; same && i < second.size(); ++i) {
    same = second[i].Render() == first_renders[i];
  }
  std::string cli_a, cli_b;
  const int code_a = RunCli({"ordinal", "verify", "all", "--jobs", std::to_string(jobs)}, cli_a);
  const int code_b = RunCli({"ordinal", "verify", "all"}, cli_b);
  const bool cli_same = code_a == code_b && cli_a == cli_b && !cli_a.empty();
  const bool deterministic = same && cli_same;
  failures += !deterministic;
  std::cout << (deterministic ? "PASS" : "FAIL")
            << " [8] repeated verify runs are byte-identical (in-process "
            << (same ? "identical" : "DIFFERENT") << ", CLI " << cli_a.size()
            << " bytes " << (cli_same ? "identical" : "DIFFERENT") << ")\n";

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED: ")
            << (failures == 0 ? "" : std::to_string(failures)) << "\n";
  return failures == 0 ? 0 : 1;
}
