// Copyright 2026 The amenlab Authors.
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


#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "amenlab/cli.hpp"

namespace {

using amenlab::Json;

enum class Kind { kInt, kRational, kJson, kString };

struct Flag {
  std::string name;  // without dashes
  std::string key;   // params key
  Kind kind;
  std::string help;
};

const std::map<std::string, std::vector<Flag>>& CommandFlags() {
  static const std::map<std::string, std::vector<Flag>> flags = {
      {"ramsey-check",
       {{"m", "m", Kind::kInt, "A = B_m"},
        {"n", "n", Kind::kInt, "B = B_n"},
        {"A", "A", Kind::kJson, "A as a JSON list of words"},
        {"B", "B", Kind::kJson, "B as a JSON list of words"},
        {"method", "method", Kind::kString, "direct or pictures"}}},
      {"ramsey-function",
       {{"m", "m", Kind::kInt, "radius of A"},
        {"n-max", "n_max", Kind::kInt, "largest n tried"},
        {"method", "method", Kind::kString, "direct or pictures"}}},
      {"folner-check",
       {{"A", "A", Kind::kJson, "A (default: generators)"},
        {"B", "B", Kind::kJson, "B as a JSON list of words"},
        {"n", "n", Kind::kInt, "B = B_n"}}},
      {"folner-function",
       {{"k", "k", Kind::kInt, "target 1/k"},
        {"radius", "radius", Kind::kInt, "search window radius"},
        {"window", "window", Kind::kJson, "explicit window"}}},
      {"weighted-folner",
       {{"m", "m", Kind::kInt, "radius of the translate window"},
        {"n", "n", Kind::kInt, "support ball radius"},
        {"n-max", "n_max", Kind::kInt, "search limit with --eps"},
        {"ball-cap", "ball_cap", Kind::kInt, "largest |B_n|"}}},
      {"balance", {{"family", "family", Kind::kJson, "{\"ground\":..,\"members\":..}"}}},
      {"unbalance-witness",
       {{"family", "family", Kind::kJson, "{\"ground\":..,\"members\":..}"}}},
      {"pictures",
       {{"A", "A", Kind::kJson, "window as words"},
        {"m", "m", Kind::kInt, "window = B_m"},
        {"E", "E", Kind::kJson, "set construction"},
        {"radius", "radius", Kind::kInt, "probe domain = B_radius"},
        {"domain", "domain", Kind::kJson, "probe domain as words"}}},
      {"realize-search",
       {{"A", "A", Kind::kJson, "window as words"},
        {"m", "m", Kind::kInt, "window = B_m"},
        {"f", "f", Kind::kJson, "f on the window, \"p/q\" list"},
        {"radius", "radius", Kind::kInt, "probe radius"}}},
      {"boost",
       {{"f", "f", Kind::kJson, "{\"set\":E} or {\"table\":[[w,v]..],\"default\":v}"},
        {"r0", "r0", Kind::kInt, "radius of the first window"},
        {"max-steps", "max_steps", Kind::kInt, "step limit"}}},
      {"f2-verify",
       {{"identities", "identities", Kind::kInt, "max word length L"},
        {"length", "length", Kind::kInt, "max word length for --disjoint"}}},
      {"f2-infeasible", {{"bisect", "bisect", Kind::kRational, "bisection tolerance"}}},
      {"function-table",
       {{"m-max", "m_max", Kind::kInt, ""},
        {"k-max", "k_max", Kind::kInt, ""},
        {"n-max", "n_max", Kind::kInt, ""},
        {"folner-window", "folner_window", Kind::kInt, ""},
        {"ball-cap", "ball_cap", Kind::kInt, ""}}},
  };
  return flags;
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

// Inline JSON, a short name (F2, Z, Z^3, C5) or a file path.
Json GroupArg(const std::string& text) {
  if (!text.empty() && text[0] == '{') return Json::parse(text);
  if (text.size() > 1 && text[0] == 'F' && std::isdigit(text[1])) {
    return {{"kind", "free"}, {"rank", std::stoi(text.substr(1))}};
  }
  if (text == "Z") return {{"kind", "free_abelian"}, {"rank", 1}};
  if (text.rfind("Z^", 0) == 0) {
    return {{"kind", "free_abelian"}, {"rank", std::stoi(text.substr(2))}};
  }
  if (text.size() > 1 && text[0] == 'C' && std::isdigit(text[1])) {
    return {{"kind", "cyclic"}, {"order", std::stoi(text.substr(1))}};
  }
  return Json::parse(ReadFile(text));
}

Json FlagValue(Kind kind, const std::string& text) {
  switch (kind) {
    case Kind::kInt: return std::stoi(text);
    case Kind::kRational: return text;
    case Kind::kJson: return Json::parse(text);
    case Kind::kString: return text;
  }
  return {};
}

struct Common {
  std::string group, eps, out, params, job, csv;
  int cap = -1;
  bool no_witnesses = false;
  std::map<std::string, std::string> flags;
  std::vector<int> disjoint;
  std::vector<std::string> positional;
};

int Emit(const amenlab::RunOutcome& run, const Common& c) {
  const std::string text = run.envelope.dump(2) + "\n";
  if (c.out.empty()) {
    std::cout << text;
  } else {
    amenlab::WriteFileAtomic(c.out, text);
  }
  if (!c.csv.empty() && run.envelope["result"].contains("csv")) {
    amenlab::WriteFileAtomic(c.csv, run.envelope["result"]["csv"].get<std::string>());
  }
  return run.exit_code;
}

const std::map<std::string, std::string>& Descriptions() {
  static const std::map<std::string, std::string> d = {
      {"ramsey-check", "is B eps-Ramsey for A"},
      {"ramsey-function", "least n with B_n eps-Ramsey for B_m"},
      {"folner-check", "is B eps-Folner for A"},
      {"folner-function", "least 1/k-Folner set in a window"},
      {"weighted-folner", "weighted Folner value F*(m, n)"},
      {"balance", "balance deficiency or eps-balance test"},
      {"unbalance-witness", "search for an unbalance witness"},
      {"pictures", "realized family of pictures of E"},
      {"realize-search", "non-amenability certificate search"},
      {"boost", "compose measures to shrink a translate gap"},
      {"f2-verify", "pointwise checks of the F2 set identities"},
      {"f2-infeasible", "simultaneous invariance LP on F2"},
      {"function-table", "small values of Fol, F and R with checks"},
  };
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations around amenability: Ramsey, Folner and "
               "balanced-family certificates."};
  app.require_subcommand(1);
  std::map<std::string, Common> commons;
  std::string verify_path;

  for (const auto& name : amenlab::Commands()) {
    Common& c = commons[name];
    CLI::App* sub = app.add_subcommand(name, Descriptions().at(name));
    sub->add_option("--group", c.group, "group: inline JSON, F2, Z, Z^d, Cn or a file");
    sub->add_option("--eps", c.eps, "epsilon as p/q");
    sub->add_option("--cap", c.cap, "enumeration cap");
    sub->add_option("--out", c.out, "write the envelope here");
    sub->add_flag("--no-witnesses", c.no_witnesses, "elide per-subset witnesses");
    sub->add_option("--params", c.params, "extra parameters as a JSON object");
    sub->add_option("--job", c.job, "read the whole job from a JSON file");
    for (const auto& f : CommandFlags().at(name)) {
      sub->add_option("--" + f.name, c.flags[f.key], f.help);
    }
    if (name == "f2-verify") {
      sub->add_option("--disjoint", c.disjoint, "K L: translate count and length")
          ->expected(1, 2);
    }
    if (name == "f2-infeasible") {
      sub->add_option("args", c.positional, "K delta r")->expected(0, 3);
      sub->add_option("--emit-certificate", c.out, "same as --out");
    }
    if (name == "function-table") {
      sub->add_option("--csv", c.csv, "also write the table as CSV");
    }
  }
  CLI::App* verify = app.add_subcommand("verify", "re-check an envelope");
  verify->add_option("envelope", verify_path, "envelope file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      auto out = amenlab::VerifyEnvelope(Json::parse(ReadFile(verify_path)));
      for (const auto& [name, ok] : out.checks) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
      }
      return out.ok ? 0 : 1;
    }
    for (auto* sub : app.get_subcommands()) {
      const std::string name = sub->get_name();
      Common& c = commons[name];
      amenlab::JobSpec job;
      if (!c.job.empty()) {
        job = amenlab::JobFromJson(Json::parse(ReadFile(c.job)));
        if (job.command.empty()) job.command = name;
      } else {
        job.command = name;
      }
      if (job.command != name) {
        throw amenlab::ParseError("job file is for " + job.command);
      }
      if (!c.group.empty()) job.group = GroupArg(c.group);
      if (!c.eps.empty()) job.eps = amenlab::ParseRational(c.eps);
      if (c.cap >= 0) job.cap = c.cap;
      if (c.no_witnesses) job.witnesses = false;
      if (!c.params.empty()) {
        const Json extra = Json::parse(c.params);
        if (!extra.is_object()) throw amenlab::ParseError("--params must be an object");
        for (const auto& [k, v] : extra.items()) job.params[k] = v;
      }
      for (const auto& f : CommandFlags().at(name)) {
        const std::string& text = c.flags[f.key];
        if (!text.empty()) job.params[f.key] = FlagValue(f.kind, text);
      }
      if (!c.disjoint.empty()) {
        job.params["disjoint"] = c.disjoint[0];
        if (c.disjoint.size() > 1) job.params["length"] = c.disjoint[1];
      }
      if (!c.positional.empty()) {
        if (c.positional.size() != 3) {
          throw amenlab::ParseError("f2-infeasible takes K delta r");
        }
        job.params["K"] = std::stoi(c.positional[0]);
        job.params["delta"] = c.positional[1];
        job.params["r"] = std::stoi(c.positional[2]);
      }
      amenlab::JobFromJson(amenlab::JobToJson(job));
      return Emit(amenlab::Run(job), c);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
