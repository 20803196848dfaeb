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


#include "amenlab/cli.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "amenlab/f2_witness.hpp"

namespace amenlab {

Json JobToJson(const JobSpec& job) {
  Json j = {{"command", job.command}, {"witnesses", job.witnesses},
            {"params", job.params}};
  if (job.group) j["group"] = *job.group;
  if (job.eps) j["eps"] = ToJson(*job.eps);
  if (job.cap) j["cap"] = *job.cap;
  return j;
}

JobSpec JobFromJson(const Json& j) {
  RequireKeys(j, {"command", "group", "eps", "cap", "witnesses", "params"}, "job");
  JobSpec job;
  if (!j.contains("command") || !j["command"].is_string()) {
    throw ParseError("job: \"command\" must be a string");
  }
  job.command = j["command"].get<std::string>();
  if (j.contains("group")) {
    GroupFromJson(j["group"]);  // validate early
    job.group = j["group"];
  }
  if (j.contains("eps")) job.eps = RationalFromJson(j["eps"]);
  if (j.contains("cap")) {
    if (!j["cap"].is_number_integer()) throw ParseError("job: cap must be an integer");
    job.cap = j["cap"].get<int>();
  }
  if (j.contains("witnesses")) {
    if (!j["witnesses"].is_boolean()) throw ParseError("job: witnesses must be a boolean");
    job.witnesses = j["witnesses"].get<bool>();
  }
  if (j.contains("params")) {
    if (!j["params"].is_object()) throw ParseError("job: params must be an object");
    job.params = j["params"];
  }
  return job;
}

namespace {

struct Context {
  const JobSpec& job;
  Json certificates = Json::array();
  int exit_code = 0;

  const Json& params() const { return job.params; }

  void Allow(const std::vector<std::string>& keys) const {
    RequireKeys(job.params, keys, "params");
  }

  Group NeedGroup() const {
    if (!job.group) throw ParseError(job.command + ": a group is required");
    return GroupFromJson(*job.group);
  }

  Rational NeedEps() const {
    if (!job.eps) throw ParseError(job.command + ": --eps is required");
    return *job.eps;
  }

  bool Has(const char* key) const { return job.params.contains(key); }

  int Int(const char* key, std::optional<int> fallback = std::nullopt) const {
    if (!Has(key)) {
      if (fallback) return *fallback;
      throw ParseError("params: missing \"" + std::string(key) + "\"");
    }
    const Json& v = job.params[key];
    if (!v.is_number_integer()) {
      throw ParseError("params: \"" + std::string(key) + "\" must be an integer");
    }
    return v.get<int>();
  }

  Rational Rat(const char* key) const {
    if (!Has(key)) throw ParseError("params: missing \"" + std::string(key) + "\"");
    return RationalFromJson(job.params[key]);
  }

  // Words under `key`, or the ball of radius params[radius_key].
  ElementSet Set(const Group& g, const char* key, const char* radius_key,
                 std::optional<int> radius_default = std::nullopt) const {
    if (Has(key)) return ElementsFromJson(g, job.params[key]);
    return Ball(g, Int(radius_key, radius_default));
  }

  RamseyOptions Options() const {
    RamseyOptions o = DefaultRamseyOptions();
    if (job.cap) o.cap = *job.cap;
    o.keep_witnesses = job.witnesses;
    return o;
  }

  void Certify(Json cert) { certificates.push_back(std::move(cert)); }
};

RamseyMethod MethodParam(const Context& ctx) {
  if (!ctx.Has("method")) return RamseyMethod::kPictures;
  const Json& m = ctx.params()["method"];
  if (m == "direct") return RamseyMethod::kDirect;
  if (m == "pictures") return RamseyMethod::kPictures;
  throw ParseError("params: method must be \"direct\" or \"pictures\"");
}

Json RamseyCert(const Group& g, const RamseyVerdict& v) {
  return {{"type", "ramsey_verdict"}, {"group", GroupToJson(g)}, {"verdict", ToJson(g, v)}};
}

Json FolnerCert(const Group& g, const FolnerReport& r) {
  return {{"type", "folner_check"},
          {"group", GroupToJson(g)},
          {"A", ToJson(g, r.a)},
          {"B", ToJson(g, r.b)},
          {"eps", ToJson(r.eps)},
          {"total", r.total},
          {"folner", r.folner}};
}

// f for boost: {"set": E} is the indicator of E; {"table": [[w, v]...],
// "default": v} is a finite table.
ElementFunction FunctionFromJson(const Group& g, const Json& f) {
  RequireKeys(f, {"set", "table", "default"}, "f");
  if (f.contains("set")) {
    if (f.contains("table")) throw ParseError("f: give either set or table");
    ElementPredicate in = Compile(g, SetSpecFromJson(f["set"]));
    return [in](const Element& x) { return Rational(in(x) ? 1 : 0); };
  }
  if (!f.contains("table")) throw ParseError("f: needs set or table");
  std::map<Element, Rational> table;
  for (const auto& pair : f["table"]) {
    if (!pair.is_array() || pair.size() != 2) throw ParseError("f: bad table entry");
    table[g.Parse(pair[0].get<std::string>())] = RationalFromJson(pair[1]);
  }
  const Rational dflt = f.contains("default") ? RationalFromJson(f["default"]) : Rational(0);
  for (const auto& [x, v] : table) {
    if (v < 0 || v > 1) throw std::invalid_argument("f: values must lie in [0,1]");
  }
  if (dflt < 0 || dflt > 1) throw std::invalid_argument("f: values must lie in [0,1]");
  return [table, dflt](const Element& x) {
    auto it = table.find(x);
    return it == table.end() ? dflt : it->second;
  };
}

using Handler = std::function<Json(Context&)>;

Json RamseyCheck(Context& ctx) {
  ctx.Allow({"m", "n", "A", "B", "method"});
  const Group g = ctx.NeedGroup();
  const ElementSet a = ctx.Set(g, "A", "m");
  const ElementSet b = ctx.Set(g, "B", "n");
  auto v = IsEpsilonRamsey(g, a, b, ctx.NeedEps(), MethodParam(ctx), ctx.Options());
  ctx.Certify(RamseyCert(g, v));
  return ToJson(g, v);
}

Json RamseyFunctionCmd(Context& ctx) {
  ctx.Allow({"m", "n_max", "method"});
  const Group g = ctx.NeedGroup();
  const int m = ctx.Int("m");
  const Rational eps = ctx.NeedEps();
  const RamseyMethod method = MethodParam(ctx);
  const RamseyOptions options = ctx.Options();
  auto r = RamseyFunction(g, m, eps, ctx.Int("n_max", 8), method, options);
  if (r.status == FunctionStatus::kCapExceeded) ctx.exit_code = 2;
  if (r.status == FunctionStatus::kFound) {
    const ElementSet a = Ball(g, m);
    ctx.Certify(RamseyCert(g, IsEpsilonRamsey(g, a, Ball(g, r.value), eps, method, options)));
    if (r.value > 0) {
      ctx.Certify(RamseyCert(
          g, IsEpsilonRamsey(g, a, Ball(g, r.value - 1), eps, method, options)));
    }
  }
  return ToJson(r);
}

Json FolnerCheck(Context& ctx) {
  ctx.Allow({"A", "B", "n"});
  const Group g = ctx.NeedGroup();
  const ElementSet a =
      ctx.Has("A") ? ElementsFromJson(g, ctx.params()["A"]) : ElementSet(g.Generators());
  const ElementSet b = ctx.Set(g, "B", "n");
  auto r = IsEpsilonFolner(g, a, b, ctx.NeedEps());
  ctx.Certify(FolnerCert(g, r));
  return ToJson(g, r);
}

Json FolnerFunctionCmd(Context& ctx) {
  ctx.Allow({"k", "window", "radius"});
  const Group g = ctx.NeedGroup();
  const int k = ctx.Int("k");
  const ElementSet window = ctx.Set(g, "window", "radius", 6);
  const uint64_t cap = ctx.job.cap ? (uint64_t{1} << std::min(*ctx.job.cap, 62))
                                   : (uint64_t{1} << 24);
  auto r = FolnerFunction(g, k, window, cap);
  if (r.found) {
    ctx.Certify(FolnerCert(g, IsEpsilonFolner(g, ElementSet(g.Generators()), r.set,
                                              Rational(1, k))));
  }
  return ToJson(g, r);
}

Json WeightedFolnerCert(const Group& g, const WeightedFolnerValue& v) {
  return {{"type", "weighted_folner"}, {"group", GroupToJson(g)}, {"m", v.m},
          {"n", v.n}, {"value", ToJson(v.value)}, {"nu", ToJson(g, v.nu)}};
}

Json WeightedFolnerCmd(Context& ctx) {
  ctx.Allow({"m", "n", "n_max", "ball_cap"});
  const Group g = ctx.NeedGroup();
  const int m = ctx.Int("m");
  const int ball_cap = ctx.Int("ball_cap", 64);
  if (ctx.Has("n")) {
    auto v = WeightedFolner(g, m, ctx.Int("n"), ball_cap);
    if (!v) return {{"m", m}, {"n", ctx.Int("n")}, {"empty_interior", true}};
    ctx.Certify(WeightedFolnerCert(g, *v));
    return ToJson(g, *v);
  }
  auto r = WeightedFolnerSearch(g, m, ctx.NeedEps(), ctx.Int("n_max", 8), ball_cap);
  Json values = Json::array();
  for (const auto& v : r.values) values.push_back(v ? ToJson(*v) : Json(nullptr));
  Json out = {{"status", std::string(FunctionStatusName(r.status))}, {"values", values}};
  if (r.status == FunctionStatus::kCapExceeded) ctx.exit_code = 2;
  if (r.status == FunctionStatus::kFound) {
    out["value"] = r.value;
    ctx.Certify(WeightedFolnerCert(g, *WeightedFolner(g, m, r.value, ball_cap)));
  }
  return out;
}

Json BalanceCmd(Context& ctx) {
  ctx.Allow({"family"});
  if (!ctx.Has("family")) throw ParseError("params: missing \"family\"");
  const SetFamily fam = FamilyFromJson(ctx.params()["family"]);
  if (!ctx.job.eps) {
    auto [eps, w] = BalanceDeficiency(fam);
    ctx.Certify({{"type", "balance_witness"}, {"family", ToJson(fam)},
                 {"witness", ToJson(w)}, {"eps", ToJson(eps)}});
    return {{"deficiency", ToJson(eps)}, {"witness", ToJson(w)}};
  }
  const Rational eps = *ctx.job.eps;
  std::vector<Rational> farkas;
  auto w = IsEpsilonBalanced(fam, eps, &farkas);
  if (w) {
    ctx.Certify({{"type", "balance_witness"}, {"family", ToJson(fam)},
                 {"witness", ToJson(*w)}, {"eps", ToJson(eps)}});
    return {{"balanced", true}, {"eps", ToJson(eps)}, {"witness", ToJson(*w)}};
  }
  ctx.Certify({{"type", "lp_farkas"}, {"system", ToJson(EpsilonBalanceSystem(fam, eps))},
               {"farkas", ToJson(farkas)}});
  return {{"balanced", false}, {"eps", ToJson(eps)}, {"farkas", ToJson(farkas)}};
}

Json UnbalanceCmd(Context& ctx) {
  ctx.Allow({"family"});
  if (!ctx.Has("family")) throw ParseError("params: missing \"family\"");
  const SetFamily fam = FamilyFromJson(ctx.params()["family"]);
  auto u = FindUnbalanceWitness(fam);
  if (u) {
    ctx.Certify({{"type", "unbalance_witness"}, {"family", ToJson(fam)},
                 {"witness", ToJson(*u)}});
    return {{"unbalanced", true}, {"witness", ToJson(*u)}};
  }
  auto w = IsEpsilonBalanced(fam, Rational(0));
  ctx.Certify({{"type", "balance_witness"}, {"family", ToJson(fam)},
               {"witness", ToJson(*w)}, {"eps", "0"}});
  return {{"unbalanced", false}, {"witness", ToJson(*w)}};
}

Json PicturesCmd(Context& ctx) {
  ctx.Allow({"A", "m", "E", "domain", "radius"});
  const Group g = ctx.NeedGroup();
  const ElementSet a = ctx.Set(g, "A", "m", 1);
  if (!ctx.Has("E")) throw ParseError("params: missing \"E\"");
  const SetSpec e = SetSpecFromJson(ctx.params()["E"]);
  const ElementSet domain = ctx.Set(g, "domain", "radius", 2);
  PictureContext pc(g, a, Compile(g, e));
  const SetFamily fam = RealizedFamily(pc, domain);
  ctx.Certify({{"type", "realized_family"}, {"group", GroupToJson(g)},
               {"A", ToJson(g, a)}, {"E", ToJson(e)}, {"domain", ToJson(g, domain)},
               {"family", ToJson(fam)}});
  return {{"family", ToJson(fam)}, {"size", fam.size()}};
}

Json RealizeCmd(Context& ctx) {
  ctx.Allow({"A", "m", "f", "radius"});
  const Group g = ctx.NeedGroup();
  const ElementSet a = ctx.Set(g, "A", "m", 1);
  if (!ctx.Has("f")) throw ParseError("params: missing \"f\"");
  auto cert = RealizationSearch(g, a, RationalsFromJson(ctx.params()["f"]),
                                ctx.Int("radius", 2));
  if (!cert) return {{"found", false}};
  ctx.Certify({{"type", "non_amenability"}, {"group", GroupToJson(g)},
               {"certificate", ToJson(g, *cert)}});
  return {{"found", true}, {"certificate", ToJson(g, *cert)}};
}

Json BoostCmd(Context& ctx) {
  ctx.Allow({"f", "r0", "max_steps"});
  const Group g = ctx.NeedGroup();
  const Rational eps = ctx.NeedEps();
  if (!ctx.Has("f")) throw ParseError("params: missing \"f\"");
  const ElementFunction f = FunctionFromJson(g, ctx.params()["f"]);
  const int max_steps = ctx.Int("max_steps", 4);
  const int steps = BoostSteps(eps);
  auto windows = TripledBalls(g, ctx.Int("r0", 1), std::min(steps, max_steps) + 1);
  auto r = Boost(g, windows, eps, f, BinaryToUnitOracle(g), max_steps);
  Json chain = Json::array();
  for (const auto& nu : r.chain) chain.push_back(ToJson(g, nu));
  ctx.Certify({{"type", "boost"}, {"group", GroupToJson(g)}, {"f", ctx.params()["f"]},
               {"window", ToJson(g, windows[0])}, {"composed", ToJson(g, r.composed)},
               {"gap", ToJson(r.gap)}, {"eps", ToJson(eps)}});
  return {{"steps", r.steps}, {"gap", ToJson(r.gap)}, {"step_gaps", ToJson(r.step_gaps)},
          {"chain", chain}, {"composed", ToJson(g, r.composed)}};
}

Json F2Verify(Context& ctx) {
  ctx.Allow({"identities", "disjoint", "length"});
  if (ctx.Has("identities")) {
    const int l = ctx.Int("identities");
    auto rep = VerifyIdentities(l);
    ctx.Certify({{"type", "f2_identities"}, {"length", l}, {"pass", rep.pass()}});
    return ToJson(rep);
  }
  const int k = ctx.Int("disjoint");
  const int l = ctx.Int("length", 10);
  auto rep = VerifyDisjointTranslates(k, l);
  ctx.Certify({{"type", "f2_disjoint"}, {"count", k}, {"length", l}, {"pass", rep.pass()}});
  return ToJson(rep);
}

Json F2Cert(int k, const Rational& delta, int r, const FeasibilityOutcome& out) {
  return {{"type", "f2_invariance"}, {"K", k}, {"delta", ToJson(delta)}, {"r", r},
          {"outcome", ToJson(out)}};
}

Json F2Infeasible(Context& ctx) {
  ctx.Allow({"K", "delta", "r", "bisect"});
  const int k = ctx.Int("K");
  const int r = ctx.Int("r", 6);
  if (ctx.Has("bisect")) {
    auto s = BisectInvarianceThreshold(k, r, ctx.Rat("bisect"));
    ctx.Certify(F2Cert(k, s.lo, r, s.at_lo));
    ctx.Certify(F2Cert(k, s.hi, r, s.at_hi));
    return {{"K", k}, {"r", r}, {"lo", ToJson(s.lo)}, {"hi", ToJson(s.hi)},
            {"steps", s.steps}, {"infeasible_at", ToJson(s.lo)},
            {"feasible_at", ToJson(s.hi)}};
  }
  const Rational delta = ctx.Rat("delta");
  auto sys = SimultaneousInvarianceSystem(k, delta, r);
  auto out = SimultaneousInvariance(sys);
  ctx.Certify(F2Cert(k, delta, r, out));
  Json j = {{"K", k}, {"r", r}, {"delta", ToJson(delta)}, {"feasible", out.feasible},
            {"support_size", sys.support.size()}, {"rows", sys.system.num_rows()}};
  if (out.feasible) {
    RationalMeasure::WeightMap w;
    for (size_t i = 0; i < out.point.size(); ++i) {
      if (out.point[i] != 0) w[sys.support[i]] = out.point[i];
    }
    j["nu"] = ToJson(Group::Free(2), RationalMeasure::FromWeights(std::move(w)));
  }
  return j;
}

Json FunctionTable(Context& ctx) {
  ctx.Allow({"m_max", "k_max", "n_max", "f_n_max", "folner_window", "ball_cap"});
  const Group g = ctx.NeedGroup();
  HarnessOptions o;
  o.m_max = ctx.Int("m_max", 1);
  o.k_max = ctx.Int("k_max", 2);
  o.n_max = ctx.Int("n_max", 8);
  o.f_n_max = ctx.Int("f_n_max", 32);
  o.folner_window = ctx.Int("folner_window", 6);
  o.ball_cap = ctx.Int("ball_cap", 64);
  o.ramsey = ctx.Options();
  auto rep = InequalityHarness(g, o);
  if (!rep.ok()) ctx.exit_code = 1;
  Json j = ToJson(rep);
  j["csv"] = FunctionTableCsv(rep);
  return j;
}

const std::map<std::string, Handler>& Handlers() {
  static const std::map<std::string, Handler> handlers = {
      {"ramsey-check", RamseyCheck},       {"ramsey-function", RamseyFunctionCmd},
      {"folner-check", FolnerCheck},       {"folner-function", FolnerFunctionCmd},
      {"weighted-folner", WeightedFolnerCmd}, {"balance", BalanceCmd},
      {"unbalance-witness", UnbalanceCmd}, {"pictures", PicturesCmd},
      {"realize-search", RealizeCmd},      {"boost", BoostCmd},
      {"f2-verify", F2Verify},             {"f2-infeasible", F2Infeasible},
      {"function-table", FunctionTable},
  };
  return handlers;
}

std::string Hex(const unsigned char* p, size_t n) {
  static const char* kDigits = "0123456789abcdef";
  std::string s;
  for (size_t i = 0; i < n; ++i) {
    s += kDigits[p[i] >> 4];
    s += kDigits[p[i] & 15];
  }
  return s;
}

}  // namespace

const std::vector<std::string>& Commands() {
  static const std::vector<std::string> names = {
      "ramsey-check",   "ramsey-function", "folner-check",      "folner-function",
      "weighted-folner", "balance",        "unbalance-witness", "pictures",
      "realize-search", "boost",           "f2-verify",         "f2-infeasible",
      "function-table"};
  return names;
}

std::string EnvelopeDigest(const Json& envelope) {
  Json body = envelope;
  body.erase("digest");
  const std::string text = body.dump();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 failed");
  }
  return "sha256:" + Hex(md, len);
}

RunOutcome Run(const JobSpec& job) {
  auto it = Handlers().find(job.command);
  if (it == Handlers().end()) throw ParseError("unknown command \"" + job.command + "\"");
  Context ctx{job};
  Json result;
  try {
    result = it->second(ctx);
  } catch (const CapExceeded& e) {
    result = {{"status", "cap_exceeded"}, {"message", e.what()}};
    ctx.certificates = Json::array();
    ctx.exit_code = 2;
  }
  Json env = {{"tool", kToolName},
              {"version", kToolVersion},
              {"job", JobToJson(job)},
              {"result", result},
              {"certificates", ctx.certificates}};
  env["digest"] = EnvelopeDigest(env);
  return {env, ctx.exit_code};
}

namespace {

bool VerifyCertificateJson(const Json& c) {
  const std::string type = c.at("type").get<std::string>();
  if (type == "ramsey_verdict") {
    const Group g = GroupFromJson(c.at("group"));
    return VerifyRamseyVerdict(g, RamseyVerdictFromJson(g, c.at("verdict")));
  }
  if (type == "folner_check") {
    const Group g = GroupFromJson(c.at("group"));
    auto r = IsEpsilonFolner(g, ElementsFromJson(g, c.at("A")),
                             ElementsFromJson(g, c.at("B")),
                             RationalFromJson(c.at("eps")));
    return r.folner == c.at("folner").get<bool>() &&
           r.total == c.at("total").get<int64_t>();
  }
  if (type == "weighted_folner") {
    const Group g = GroupFromJson(c.at("group"));
    const int m = c.at("m").get<int>(), n = c.at("n").get<int>();
    const RationalMeasure nu = MeasureFromJson(g, c.at("nu"));
    const ElementSet bm = Ball(g, m);
    const ElementSet interior = Interior(g, bm, Ball(g, n));
    return nu.support().is_subset_of(interior) &&
           TranslationDefect(g, bm, nu) == RationalFromJson(c.at("value"));
  }
  if (type == "balance_witness") {
    return VerifyBalanceWitness(FamilyFromJson(c.at("family")),
                                BalanceWitnessFromJson(c.at("witness")),
                                RationalFromJson(c.at("eps")));
  }
  if (type == "unbalance_witness") {
    return VerifyUnbalanceWitness(FamilyFromJson(c.at("family")),
                                  UnbalanceWitnessFromJson(c.at("witness")));
  }
  if (type == "lp_farkas") {
    return VerifyFarkas(SystemFromJson(c.at("system")), RationalsFromJson(c.at("farkas")));
  }
  if (type == "realized_family") {
    const Group g = GroupFromJson(c.at("group"));
    PictureContext pc(g, ElementsFromJson(g, c.at("A")),
                      Compile(g, SetSpecFromJson(c.at("E"))));
    return RealizedFamily(pc, ElementsFromJson(g, c.at("domain"))) ==
           FamilyFromJson(c.at("family"));
  }
  if (type == "non_amenability") {
    const Group g = GroupFromJson(c.at("group"));
    return VerifyNonAmenabilityCertificate(g, NonAmenabilityFromJson(g, c.at("certificate")));
  }
  if (type == "boost") {
    const Group g = GroupFromJson(c.at("group"));
    const Rational gap = RationalFromJson(c.at("gap"));
    return FunctionGap(g, ElementsFromJson(g, c.at("window")),
                       MeasureFromJson(g, c.at("composed")),
                       FunctionFromJson(g, c.at("f"))) == gap &&
           gap <= RationalFromJson(c.at("eps"));
  }
  if (type == "f2_invariance") {
    auto sys = SimultaneousInvarianceSystem(c.at("K").get<int>(),
                                            RationalFromJson(c.at("delta")),
                                            c.at("r").get<int>());
    return VerifyCertificate(sys.system, FeasibilityFromJson(c.at("outcome")));
  }
  if (type == "f2_identities") {
    return VerifyIdentities(c.at("length").get<int>()).pass() == c.at("pass").get<bool>();
  }
  if (type == "f2_disjoint") {
    return VerifyDisjointTranslates(c.at("count").get<int>(), c.at("length").get<int>())
               .pass() == c.at("pass").get<bool>();
  }
  throw ParseError("unknown certificate type \"" + type + "\"");
}

}  // namespace

VerifyOutcome VerifyEnvelope(const Json& envelope) {
  RequireKeys(envelope, {"tool", "version", "job", "result", "certificates", "digest"},
              "envelope");
  VerifyOutcome out;
  const bool digest_ok = envelope.contains("digest") && envelope["digest"].is_string() &&
                         envelope["digest"] == EnvelopeDigest(envelope);
  out.checks.emplace_back("digest", digest_ok);
  JobFromJson(envelope.at("job"));
  const Json& certs = envelope.at("certificates");
  if (!certs.is_array()) throw ParseError("envelope: certificates must be an array");
  for (size_t i = 0; i < certs.size(); ++i) {
    bool ok = false;
    std::string name = "certificate " + std::to_string(i);
    try {
      name += " (" + certs[i].at("type").get<std::string>() + ")";
      ok = VerifyCertificateJson(certs[i]);
    } catch (const std::exception&) {
      ok = false;
    }
    out.checks.emplace_back(name, ok);
  }
  out.ok = true;
  for (const auto& [name, ok] : out.checks) out.ok = out.ok && ok;
  return out;
}

std::string FunctionTableCsv(const HarnessReport& report) {
  std::ostringstream s;
  s << "function,m,n,k,eps,value,exact,note\n";
  auto num = [](int v) { return v >= 0 ? std::to_string(v) : std::string(); };
  for (const auto& c : report.cells) {
    s << c.function << ',' << num(c.m) << ',' << num(c.n) << ',' << num(c.k) << ','
      << c.eps << ',' << (c.value ? FormatRational(*c.value) : std::string("—")) << ','
      << (c.exact ? "true" : "false") << ',' << c.note << '\n';
  }
  return s.str();
}

void WriteFileAtomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + tmp);
    f << content;
    f.flush();
    if (!f) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace amenlab
