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


#ifndef AMENLAB_CLI_HPP_
#define AMENLAB_CLI_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "amenlab/folner.hpp"
#include "amenlab/serialize.hpp"

namespace amenlab {

inline constexpr const char* kToolName = "amenlab";
inline constexpr const char* kToolVersion = "0.1.0";

// One job. JSON keys: command, group, eps, cap, witnesses, params.
struct JobSpec {
  std::string command;
  std::optional<Json> group;
  std::optional<Rational> eps;
  std::optional<int> cap;
  bool witnesses = true;
  Json params = Json::object();

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

Json JobToJson(const JobSpec& job);
// Throws ParseError on unknown keys or wrong types.
JobSpec JobFromJson(const Json& j);

// Subcommands accepted by Run, in help order (verify is handled separately).
const std::vector<std::string>& Commands();

struct RunOutcome {
  Json envelope;
  int exit_code = 0;  // 0 success (negative verdicts too), 2 cap exhausted
};

// Envelope fields: tool, version, job, result, certificates, digest.
// Throws ParseError or std::invalid_argument on bad input.
RunOutcome Run(const JobSpec& job);

// "sha256:<hex>" of the canonical dump of `envelope` minus its digest.
std::string EnvelopeDigest(const Json& envelope);

struct VerifyOutcome {
  bool ok = false;
  std::vector<std::pair<std::string, bool>> checks;  // digest, then certificates
};

// Checks the digest and every embedded certificate without re-solving.
VerifyOutcome VerifyEnvelope(const Json& envelope);

// m, n, k, eps, function, value, exact, note; missing values print as "—".
std::string FunctionTableCsv(const HarnessReport& report);

// Writes to a sibling temporary file and renames it over `path`.
void WriteFileAtomic(const std::string& path, const std::string& content);

}  // namespace amenlab

#endif  // AMENLAB_CLI_HPP_
