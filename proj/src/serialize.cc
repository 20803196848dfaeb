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


#include "amenlab/serialize.hpp"

#include <algorithm>

namespace amenlab {

void RequireKeys(const Json& j, const std::vector<std::string>& allowed,
                 const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ParseError(where + ": unknown field \"" + key + "\"");
    }
  }
}

namespace {

const Json& Field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(where + ": missing field \"" + std::string(key) + "\"");
  }
  return *it;
}

int IntFrom(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<int>();
}

bool BoolFrom(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw ParseError(where + ": expected a boolean");
  return j.get<bool>();
}

std::string StringFrom(const Json& j, const std::string& where) {
  if (!j.is_string()) throw ParseError(where + ": expected a string");
  return j.get<std::string>();
}

std::vector<std::string> StringsFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(StringFrom(x, where));
  return out;
}

std::vector<int> IntsFrom(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(IntFrom(x, where));
  return out;
}

}  // namespace

Json ToJson(const Rational& r) { return FormatRational(r); }

Rational RationalFromJson(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational: expected a \"p/q\" string");
  try {
    return ParseRational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("rational: ") + e.what());
  }
}

Json ToJson(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(ToJson(r));
  return out;
}

std::vector<Rational> RationalsFromJson(const Json& j) {
  if (!j.is_array()) throw ParseError("rationals: expected an array");
  std::vector<Rational> out;
  for (const auto& x : j) out.push_back(RationalFromJson(x));
  return out;
}

Json GroupToJson(const Group& group) {
  switch (group.kind()) {
    case GroupKind::kFree:
      return {{"kind", "free"}, {"generators", group.generator_names()}};
    case GroupKind::kFreeAbelian:
      return {{"kind", "free_abelian"}, {"rank", group.rank_or_order()}};
    case GroupKind::kCyclic:
      return {{"kind", "cyclic"}, {"order", group.rank_or_order()}};
    case GroupKind::kFiniteTable:
      return {{"kind", "finite_table"},
              {"table", group.table()},
              {"generators", group.table_generators()}};
  }
  return {};
}

Group GroupFromJson(const Json& j) {
  const std::string where = "group";
  if (!j.is_object()) throw ParseError("group: expected an object");
  const std::string kind = StringFrom(Field(j, "kind", where), where);
  try {
    if (kind == "free") {
      RequireKeys(j, {"kind", "generators", "rank"}, where);
      if (j.contains("generators")) {
        return Group::Free(StringsFrom(j["generators"], where));
      }
      return Group::Free(IntFrom(Field(j, "rank", where), where));
    }
    if (kind == "free_abelian") {
      RequireKeys(j, {"kind", "rank"}, where);
      return Group::FreeAbelian(IntFrom(Field(j, "rank", where), where));
    }
    if (kind == "cyclic") {
      RequireKeys(j, {"kind", "order"}, where);
      return Group::Cyclic(IntFrom(Field(j, "order", where), where));
    }
    if (kind == "finite_table") {
      RequireKeys(j, {"kind", "table", "generators"}, where);
      const Json& t = Field(j, "table", where);
      if (!t.is_array()) throw ParseError("group: table must be an array");
      std::vector<std::vector<int>> table;
      for (const auto& row : t) table.push_back(IntsFrom(row, where));
      std::vector<int> gens;
      if (j.contains("generators")) gens = IntsFrom(j["generators"], where);
      return Group::FiniteTable(std::move(table), std::move(gens));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("group: ") + e.what());
  }
  throw ParseError("group: unknown kind \"" + kind + "\"");
}

Json ToJson(const Group& group, const ElementSet& set) {
  Json out = Json::array();
  for (const auto& x : set) out.push_back(group.Format(x));
  return out;
}

namespace {

Element WordFrom(const Group& group, const Json& j) {
  try {
    return group.Parse(StringFrom(j, "element"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("element: ") + e.what());
  }
}

}  // namespace

ElementSet ElementsFromJson(const Group& group, const Json& j) {
  if (!j.is_array()) throw ParseError("elements: expected an array of words");
  std::vector<Element> v;
  for (const auto& x : j) v.push_back(WordFrom(group, x));
  return ElementSet(std::move(v));
}

Json ToJson(const Group& group, const RationalMeasure& nu) {
  Json out = Json::array();
  for (const auto& [x, p] : nu.weights()) {
    out.push_back({group.Format(x), ToJson(p)});
  }
  return out;
}

RationalMeasure MeasureFromJson(const Group& group, const Json& j) {
  if (!j.is_array()) throw ParseError("measure: expected an array");
  RationalMeasure::WeightMap w;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) {
      throw ParseError("measure: expected [word, weight] pairs");
    }
    w[WordFrom(group, pair[0])] += RationalFromJson(pair[1]);
  }
  try {
    return RationalMeasure::FromWeights(std::move(w));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("measure: ") + e.what());
  }
}

Json ToJson(const SetSpec& spec) {
  Json out = {{"kind", std::string(SetKindName(spec.kind))}};
  switch (spec.kind) {
    case SetSpec::Kind::kFirstLetter: out["letters"] = spec.letters; break;
    case SetSpec::Kind::kHAbove: out["k"] = spec.k; break;
    case SetSpec::Kind::kUnion:
    case SetSpec::Kind::kIntersection: {
      Json of = Json::array();
      for (const auto& s : spec.of) of.push_back(ToJson(s));
      out["of"] = of;
      break;
    }
    case SetSpec::Kind::kComplement: out["of"] = ToJson(spec.of.at(0)); break;
    case SetSpec::Kind::kExplicit: out["elements"] = spec.elements; break;
    case SetSpec::Kind::kResidue:
      out["coord"] = spec.coord;
      out["modulus"] = spec.modulus;
      out["residues"] = spec.residues;
      break;
  }
  return out;
}

SetSpec SetSpecFromJson(const Json& j) {
  const std::string where = "set";
  if (!j.is_object()) throw ParseError("set: expected an object");
  const std::string kind = StringFrom(Field(j, "kind", where), where);
  if (kind == "first_letter") {
    RequireKeys(j, {"kind", "letters"}, where);
    return SetSpec::FirstLetter(StringsFrom(Field(j, "letters", where), where));
  }
  if (kind == "h_above") {
    RequireKeys(j, {"kind", "k"}, where);
    return SetSpec::HAbove(IntFrom(Field(j, "k", where), where));
  }
  if (kind == "union" || kind == "intersection") {
    RequireKeys(j, {"kind", "of"}, where);
    const Json& of = Field(j, "of", where);
    if (!of.is_array()) throw ParseError("set: \"of\" must be an array");
    std::vector<SetSpec> parts;
    for (const auto& s : of) parts.push_back(SetSpecFromJson(s));
    return kind == "union" ? SetSpec::Union(std::move(parts))
                           : SetSpec::Intersection(std::move(parts));
  }
  if (kind == "complement") {
    RequireKeys(j, {"kind", "of"}, where);
    return SetSpec::Complement(SetSpecFromJson(Field(j, "of", where)));
  }
  if (kind == "explicit") {
    RequireKeys(j, {"kind", "elements"}, where);
    return SetSpec::Explicit(StringsFrom(Field(j, "elements", where), where));
  }
  if (kind == "residue") {
    RequireKeys(j, {"kind", "coord", "modulus", "residues"}, where);
    return SetSpec::Residue(IntFrom(Field(j, "coord", where), where),
                            IntFrom(Field(j, "modulus", where), where),
                            IntsFrom(Field(j, "residues", where), where));
  }
  throw ParseError("set: unknown kind \"" + kind + "\"");
}

Json ToJson(const SetFamily& family) {
  Json members = Json::array();
  for (Mask m : family.members()) members.push_back(family.Labels(m));
  return {{"ground", family.ground()}, {"members", members}};
}

SetFamily FamilyFromJson(const Json& j) {
  const std::string where = "family";
  RequireKeys(j, {"ground", "members"}, where);
  auto ground = StringsFrom(Field(j, "ground", where), where);
  try {
    SetFamily probe(ground, {});
    std::vector<Mask> masks;
    const Json& members = Field(j, "members", where);
    if (!members.is_array()) throw ParseError("family: members must be an array");
    for (const auto& m : members) {
      masks.push_back(probe.MaskOf(StringsFrom(m, where)));
    }
    return SetFamily(std::move(ground), std::move(masks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("family: ") + e.what());
  }
}

Json ToJson(const BalanceWitness& w) {
  return {{"weights", ToJson(w.weights)}, {"v", ToJson(w.v)}, {"gap", ToJson(w.gap)}};
}

BalanceWitness BalanceWitnessFromJson(const Json& j) {
  RequireKeys(j, {"weights", "v", "gap"}, "balance witness");
  BalanceWitness w;
  w.weights = RationalsFromJson(Field(j, "weights", "balance witness"));
  w.v = RationalsFromJson(Field(j, "v", "balance witness"));
  w.gap = RationalFromJson(Field(j, "gap", "balance witness"));
  return w;
}

Json ToJson(const UnbalanceWitness& w) {
  return {{"f", ToJson(w.f)}, {"margin", ToJson(w.margin)}};
}

UnbalanceWitness UnbalanceWitnessFromJson(const Json& j) {
  RequireKeys(j, {"f", "margin"}, "unbalance witness");
  UnbalanceWitness w;
  w.f = RationalsFromJson(Field(j, "f", "unbalance witness"));
  w.margin = RationalFromJson(Field(j, "margin", "unbalance witness"));
  return w;
}

namespace {

Json SparseRow(const std::vector<Rational>& coeffs) {
  Json terms = Json::array();
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) terms.push_back({i, ToJson(coeffs[i])});
  }
  return terms;
}

std::vector<std::pair<int, Rational>> SparseFrom(const Json& j, int n) {
  if (!j.is_array()) throw ParseError("system: terms must be an array");
  std::vector<std::pair<int, Rational>> out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) {
      throw ParseError("system: expected [var, coeff] terms");
    }
    const int var = IntFrom(t[0], "system");
    if (var < 0 || var >= n) throw ParseError("system: variable out of range");
    out.emplace_back(var, RationalFromJson(t[1]));
  }
  return out;
}

Relation RelationFrom(const std::string& s) {
  if (s == "<=") return Relation::kLessEqual;
  if (s == "=") return Relation::kEqual;
  if (s == ">=") return Relation::kGreaterEqual;
  throw ParseError("system: unknown relation \"" + s + "\"");
}

}  // namespace

Json ToJson(const LinearSystem& system) {
  Json rows = Json::array();
  for (const auto& r : system.rows()) {
    rows.push_back({{"terms", SparseRow(r.coeffs)},
                    {"rel", std::string(RelationSymbol(r.rel))},
                    {"rhs", ToJson(r.rhs)}});
  }
  std::vector<int> free_vars;
  for (int i = 0; i < system.num_vars(); ++i) {
    if (!system.nonnegative()[i]) free_vars.push_back(i);
  }
  Json out = {{"num_vars", system.num_vars()}, {"free", free_vars}, {"rows", rows}};
  if (system.objective()) {
    out["objective"] = {
        {"terms", SparseRow(system.objective()->coeffs)},
        {"sense", system.objective()->sense == Sense::kMinimize ? "min" : "max"}};
  }
  return out;
}

LinearSystem SystemFromJson(const Json& j) {
  const std::string where = "system";
  RequireKeys(j, {"num_vars", "free", "rows", "objective"}, where);
  const int n = IntFrom(Field(j, "num_vars", where), where);
  if (n < 1) throw ParseError("system: num_vars must be positive");
  LinearSystem sys(n);
  if (j.contains("free")) {
    for (int v : IntsFrom(j["free"], where)) {
      if (v < 0 || v >= n) throw ParseError("system: free variable out of range");
      sys.SetNonnegative(v, false);
    }
  }
  const Json& rows = Field(j, "rows", where);
  if (!rows.is_array()) throw ParseError("system: rows must be an array");
  for (const auto& r : rows) {
    RequireKeys(r, {"terms", "rel", "rhs"}, "system row");
    sys.AddSparseRow(SparseFrom(Field(r, "terms", where), n),
                     RelationFrom(StringFrom(Field(r, "rel", where), where)),
                     RationalFromJson(Field(r, "rhs", where)));
  }
  if (j.contains("objective")) {
    const Json& o = j["objective"];
    RequireKeys(o, {"terms", "sense"}, "objective");
    std::vector<Rational> c(n);
    for (const auto& [var, coeff] : SparseFrom(Field(o, "terms", where), n)) {
      c[var] += coeff;
    }
    const std::string sense = StringFrom(Field(o, "sense", where), where);
    if (sense != "min" && sense != "max") {
      throw ParseError("objective: sense must be min or max");
    }
    sys.SetObjective(std::move(c), sense == "min" ? Sense::kMinimize : Sense::kMaximize);
  }
  return sys;
}

Json ToJson(const FeasibilityOutcome& out) {
  Json j = {{"feasible", out.feasible}};
  if (out.feasible) {
    j["point"] = ToJson(out.point);
  } else {
    j["farkas"] = ToJson(out.farkas);
  }
  return j;
}

FeasibilityOutcome FeasibilityFromJson(const Json& j) {
  RequireKeys(j, {"feasible", "point", "farkas"}, "outcome");
  FeasibilityOutcome out;
  out.feasible = BoolFrom(Field(j, "feasible", "outcome"), "outcome");
  if (j.contains("point")) out.point = RationalsFromJson(j["point"]);
  if (j.contains("farkas")) out.farkas = RationalsFromJson(j["farkas"]);
  return out;
}

Json ToJson(const OptimizationOutcome& out) {
  switch (out.status) {
    case OptimizationStatus::kOptimal:
      return {{"status", "optimal"},
              {"value", ToJson(out.optimum.value)},
              {"point", ToJson(out.optimum.point)},
              {"duals", ToJson(out.optimum.duals)}};
    case OptimizationStatus::kInfeasible:
      return {{"status", "infeasible"}, {"farkas", ToJson(out.farkas)}};
    case OptimizationStatus::kUnbounded:
      return {{"status", "unbounded"},
              {"point", ToJson(out.point)},
              {"ray", ToJson(out.ray)}};
  }
  return {};
}

OptimizationOutcome OptimizationFromJson(const Json& j) {
  RequireKeys(j, {"status", "value", "point", "duals", "farkas", "ray"},
              "optimization");
  OptimizationOutcome out;
  const std::string s = StringFrom(Field(j, "status", "optimization"), "optimization");
  if (s == "optimal") {
    out.status = OptimizationStatus::kOptimal;
    out.optimum.value = RationalFromJson(Field(j, "value", "optimization"));
    out.optimum.point = RationalsFromJson(Field(j, "point", "optimization"));
    out.optimum.duals = RationalsFromJson(Field(j, "duals", "optimization"));
  } else if (s == "infeasible") {
    out.status = OptimizationStatus::kInfeasible;
    out.farkas = RationalsFromJson(Field(j, "farkas", "optimization"));
  } else if (s == "unbounded") {
    out.status = OptimizationStatus::kUnbounded;
    out.point = RationalsFromJson(Field(j, "point", "optimization"));
    out.ray = RationalsFromJson(Field(j, "ray", "optimization"));
  } else {
    throw ParseError("optimization: unknown status \"" + s + "\"");
  }
  return out;
}

namespace {

RamseyMethod MethodFrom(const std::string& s) {
  if (s == "direct") return RamseyMethod::kDirect;
  if (s == "pictures") return RamseyMethod::kPictures;
  throw ParseError("verdict: unknown method \"" + s + "\"");
}

NotRamseyReason ReasonFrom(const std::string& s) {
  for (auto r : {NotRamseyReason::kNone, NotRamseyReason::kEmptyInterior,
                 NotRamseyReason::kCounterexample}) {
    if (ReasonName(r) == s) return r;
  }
  throw ParseError("verdict: unknown reason \"" + s + "\"");
}

}  // namespace

Json ToJson(const Group& group, const RamseyVerdict& v) {
  Json j = {{"ramsey", v.ramsey},
            {"method", std::string(MethodName(v.method))},
            {"A", ToJson(group, v.a)},
            {"B", ToJson(group, v.b)},
            {"C", ToJson(group, v.c)},
            {"AC", ToJson(group, v.ac)},
            {"eps", ToJson(v.eps)},
            {"subsets_checked", v.subsets_checked},
            {"witnesses_elided", v.witnesses_elided},
            {"reason", std::string(ReasonName(v.reason))},
            {"minimal", v.minimal}};
  Json measures = Json::array();
  for (const auto& m : v.measures) {
    measures.push_back({{"E", m.e}, {"nu", ToJson(group, m.nu)}});
  }
  j["measures"] = measures;
  Json families = Json::array();
  for (const auto& f : v.families) {
    families.push_back({{"family", ToJson(f.family)}, {"witness", ToJson(f.witness)}});
  }
  j["families"] = families;
  if (!v.ramsey) {
    j["counterexample"] = ToJson(group, v.counterexample);
    j["farkas"] = ToJson(v.farkas);
    if (v.unbalance) j["unbalance"] = ToJson(*v.unbalance);
    if (v.counterexample_spec) j["counterexample_spec"] = ToJson(*v.counterexample_spec);
  }
  return j;
}

RamseyVerdict RamseyVerdictFromJson(const Group& group, const Json& j) {
  const std::string where = "verdict";
  RequireKeys(j, {"ramsey", "method", "A", "B", "C", "AC", "eps",
                  "subsets_checked", "witnesses_elided", "reason", "minimal",
                  "measures", "families", "counterexample", "farkas",
                  "unbalance", "counterexample_spec"},
              where);
  RamseyVerdict v;
  v.ramsey = BoolFrom(Field(j, "ramsey", where), where);
  v.method = MethodFrom(StringFrom(Field(j, "method", where), where));
  v.a = ElementsFromJson(group, Field(j, "A", where));
  v.b = ElementsFromJson(group, Field(j, "B", where));
  v.c = ElementsFromJson(group, Field(j, "C", where));
  v.ac = ElementsFromJson(group, Field(j, "AC", where));
  v.eps = RationalFromJson(Field(j, "eps", where));
  const Json& sc = Field(j, "subsets_checked", where);
  if (!sc.is_number_unsigned()) throw ParseError("verdict: bad subsets_checked");
  v.subsets_checked = sc.get<uint64_t>();
  v.witnesses_elided = BoolFrom(Field(j, "witnesses_elided", where), where);
  v.reason = ReasonFrom(StringFrom(Field(j, "reason", where), where));
  v.minimal = BoolFrom(Field(j, "minimal", where), where);
  for (const auto& m : Field(j, "measures", where)) {
    RequireKeys(m, {"E", "nu"}, "measure witness");
    const Json& e = Field(m, "E", where);
    if (!e.is_number_unsigned()) throw ParseError("verdict: bad subset mask");
    v.measures.push_back({e.get<Mask>(), MeasureFromJson(group, Field(m, "nu", where))});
  }
  for (const auto& f : Field(j, "families", where)) {
    RequireKeys(f, {"family", "witness"}, "family witness");
    v.families.push_back({FamilyFromJson(Field(f, "family", where)),
                          BalanceWitnessFromJson(Field(f, "witness", where))});
  }
  if (j.contains("counterexample")) {
    v.counterexample = ElementsFromJson(group, j["counterexample"]);
  }
  if (j.contains("farkas")) v.farkas = RationalsFromJson(j["farkas"]);
  if (j.contains("unbalance")) v.unbalance = UnbalanceWitnessFromJson(j["unbalance"]);
  if (j.contains("counterexample_spec")) {
    v.counterexample_spec = SetSpecFromJson(j["counterexample_spec"]);
  }
  return v;
}

Json ToJson(const RamseyFunctionResult& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n},
                    {"ramsey", row.ramsey},
                    {"reason", std::string(ReasonName(row.reason))},
                    {"minimal", row.minimal},
                    {"cap_exceeded", row.cap_exceeded}});
  }
  Json j = {{"status", std::string(FunctionStatusName(r.status))}, {"rows", rows}};
  if (r.status == FunctionStatus::kFound) j["value"] = r.value;
  return j;
}

Json ToJson(const Group& group, const NonAmenabilityCertificate& c) {
  return {{"window", ToJson(group, c.window)},
          {"f", ToJson(c.f)},
          {"radius", c.radius},
          {"E", ToJson(c.e)},
          {"family", ToJson(c.family)},
          {"witness", ToJson(c.witness)}};
}

NonAmenabilityCertificate NonAmenabilityFromJson(const Group& group,
                                                 const Json& j) {
  const std::string where = "non-amenability certificate";
  RequireKeys(j, {"window", "f", "radius", "E", "family", "witness"}, where);
  NonAmenabilityCertificate c;
  c.window = ElementsFromJson(group, Field(j, "window", where));
  c.f = RationalsFromJson(Field(j, "f", where));
  c.radius = IntFrom(Field(j, "radius", where), where);
  c.e = SetSpecFromJson(Field(j, "E", where));
  c.family = FamilyFromJson(Field(j, "family", where));
  c.witness = UnbalanceWitnessFromJson(Field(j, "witness", where));
  return c;
}

Json ToJson(const Group& group, const FolnerReport& r) {
  return {{"A", ToJson(group, r.a)},
          {"B", ToJson(group, r.b)},
          {"eps", ToJson(r.eps)},
          {"counts", r.counts},
          {"total", r.total},
          {"threshold", ToJson(r.threshold)},
          {"folner", r.folner}};
}

Json ToJson(const Group& group, const FolnerSearchResult& r) {
  Json j = {{"k", r.k}, {"found", r.found}, {"candidates", r.candidates}};
  if (r.found) {
    j["set"] = ToJson(group, r.set);
    j["size"] = r.set.size();
    j["exact"] = r.exact;
  }
  return j;
}

Json ToJson(const Group& group, const WeightedFolnerValue& v) {
  return {{"m", v.m}, {"n", v.n}, {"value", ToJson(v.value)}, {"nu", ToJson(group, v.nu)}};
}

Json ToJson(const HarnessReport& r) {
  Json cells = Json::array();
  for (const auto& c : r.cells) {
    Json j = {{"function", c.function}, {"exact", c.exact}};
    if (c.m >= 0) j["m"] = c.m;
    if (c.n >= 0) j["n"] = c.n;
    if (c.k >= 0) j["k"] = c.k;
    if (!c.eps.empty()) j["eps"] = c.eps;
    if (c.value) j["value"] = ToJson(*c.value);
    if (!c.note.empty()) j["note"] = c.note;
    cells.push_back(j);
  }
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"instance", c.instance},
                      {"status", std::string(CheckStatusName(c.status))},
                      {"detail", c.detail}});
  }
  return {{"cells", cells}, {"checks", checks}, {"ok", r.ok()}};
}

Json ToJson(const IdentityReport& r) {
  Json results = Json::array();
  for (const auto& x : r.results) {
    Json j = {{"name", x.name}, {"checked", x.checked}, {"failures", x.failures},
              {"pass", x.pass()}};
    results.push_back(j);
  }
  return {{"max_length", r.max_length}, {"results", results}, {"pass", r.pass()}};
}

}  // namespace amenlab
