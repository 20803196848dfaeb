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


#ifndef AMENLAB_SERIALIZE_HPP_
#define AMENLAB_SERIALIZE_HPP_

#include <string>
#include <vector>

#include "amenlab/balance.hpp"
#include "amenlab/f2_witness.hpp"
#include "amenlab/folner.hpp"
#include "amenlab/group.hpp"
#include "amenlab/lp.hpp"
#include "amenlab/pictures.hpp"
#include "amenlab/ramsey.hpp"
#include "amenlab/set_spec.hpp"
#include "json.hpp"

namespace amenlab {

// Objects keep sorted keys, so dump() is canonical.
using Json = nlohmann::json;

// Thrown on malformed input: wrong types, unknown keys, bad words.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Throws ParseError when `j` is not an object or has a key outside `allowed`.
void RequireKeys(const Json& j, const std::vector<std::string>& allowed,
                 const std::string& where);

// Rationals travel as "p/q" strings; integers are also accepted on input.
// Floating-point numbers are rejected.
Json ToJson(const Rational& r);
Rational RationalFromJson(const Json& j);
Json ToJson(const std::vector<Rational>& v);
std::vector<Rational> RationalsFromJson(const Json& j);

// {"kind":"free","generators":["a","b"]}, {"kind":"free_abelian","rank":2},
// {"kind":"cyclic","order":5}, {"kind":"finite_table","table":[[...]]}
// (optionally with "generators": [indices]).
Json GroupToJson(const Group& group);
Group GroupFromJson(const Json& j);

Json ToJson(const Group& group, const ElementSet& set);
ElementSet ElementsFromJson(const Group& group, const Json& j);
// [[word, "p/q"], ...] in canonical order.
Json ToJson(const Group& group, const RationalMeasure& nu);
RationalMeasure MeasureFromJson(const Group& group, const Json& j);

Json ToJson(const SetSpec& spec);
SetSpec SetSpecFromJson(const Json& j);

// {"ground":[...],"members":[[labels],...]}
Json ToJson(const SetFamily& family);
SetFamily FamilyFromJson(const Json& j);
Json ToJson(const BalanceWitness& w);
BalanceWitness BalanceWitnessFromJson(const Json& j);
Json ToJson(const UnbalanceWitness& w);
UnbalanceWitness UnbalanceWitnessFromJson(const Json& j);

// Rows are stored sparsely as [[var, "p/q"], ...].
Json ToJson(const LinearSystem& system);
LinearSystem SystemFromJson(const Json& j);
Json ToJson(const FeasibilityOutcome& out);
FeasibilityOutcome FeasibilityFromJson(const Json& j);
Json ToJson(const OptimizationOutcome& out);
OptimizationOutcome OptimizationFromJson(const Json& j);

Json ToJson(const Group& group, const RamseyVerdict& v);
RamseyVerdict RamseyVerdictFromJson(const Group& group, const Json& j);
Json ToJson(const RamseyFunctionResult& r);

Json ToJson(const Group& group, const NonAmenabilityCertificate& c);
NonAmenabilityCertificate NonAmenabilityFromJson(const Group& group,
                                                 const Json& j);

Json ToJson(const Group& group, const FolnerReport& r);
Json ToJson(const Group& group, const FolnerSearchResult& r);
Json ToJson(const Group& group, const WeightedFolnerValue& v);
Json ToJson(const HarnessReport& r);
Json ToJson(const IdentityReport& r);

}  // namespace amenlab

#endif  // AMENLAB_SERIALIZE_HPP_
