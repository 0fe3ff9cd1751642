#include "mcurve/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcurve/duality.hpp"
#include "mcurve/moduli.hpp"
#include "mcurve/sampling.hpp"
#include "mcurve/sheaf.hpp"
#include "mcurve/stability.hpp"

namespace mcurve::cli {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON encodings. Rationals are always strings "p/q" (or "p").

json to_json(const Rational& r) { return r.str(); }

json to_json(const Invariants& inv) {
  return json{{"R", inv.rank}, {"Deg", inv.degree}};
}

json to_json(const BundleOnC& b) { return json{{"rank", b.rank}, {"deg", b.deg}}; }

json to_json(const Premise& p) {
  return json{{"subject", p.subject},
              {"status", std::string(to_string(p.status))},
              {"origin", std::string(to_string(p.origin))}};
}

json to_json(const Check& c) {
  return json{{"description", c.description},
              {"left", to_json(c.left)},
              {"relation", std::string(to_string(c.relation))},
              {"right", to_json(c.right)},
              {"holds", c.holds}};
}

template <typename T>
json to_json_list(const std::vector<T>& items) {
  json arr = json::array();
  for (const T& item : items) arr.push_back(to_json(item));
  return arr;
}

json slope_or_null(const Invariants& inv) {
  return inv.rank > 0 ? to_json(slope(inv)) : json(nullptr);
}

json invariants_with_slope(const Invariants& inv) {
  json j = to_json(inv);
  j["slope"] = slope_or_null(inv);
  return j;
}

struct Envelope {
  std::string command;
  json inputs = json::object();
  json result = json::object();
  json checks = json::array();
  int exit_code = kExitOk;
};

void attach_certificate(Envelope& env, const Certificate& cert) {
  env.result["conclusion"] = std::string(to_string(cert.conclusion));
  env.result["rule"] = std::string(to_string(cert.rule));
  env.result["premises"] = to_json_list(cert.premises);
  env.checks = to_json_list(cert.checks);
}

json envelope_json(const Envelope& env) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = env.command;
  j["inputs"] = env.inputs;
  j["result"] = env.result;
  j["checks"] = env.checks;
  return j;
}

// ---------------------------------------------------------------------------
// Table rendering

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_flat_object(const json& v) {
  return v.is_object() &&
         std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

std::string inline_text(const json& v) {
  if (is_flat_object(v)) {
    std::string s;
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!s.empty()) s += ", ";
      s += it.key() + "=" + scalar_text(it.value());
    }
    return "(" + s + ")";
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) {
        return x.is_primitive() || is_flat_object(x);
      })) {
    std::string s;
    for (const json& x : v) {
      if (!s.empty()) s += " ";
      s += inline_text(x);
    }
    return "[" + s + "]";
  }
  return scalar_text(v);
}

std::string colorize(const std::string& key, const std::string& text, bool color) {
  if (!color || key != "conclusion") return text;
  const char* code = text == "stable" ? "32" : text == "semistable" ? "33" : "31";
  return std::string("\x1b[") + code + "m" + text + "\x1b[0m";
}

void render_section(const json& obj, std::ostream& out, int indent, bool color) {
  std::size_t width = 0;
  for (auto it = obj.begin(); it != obj.end(); ++it) width = std::max(width, it.key().size());
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const json& v = it.value();
    out << pad << it.key() << std::string(width - it.key().size(), ' ') << "  ";
    const bool nested_array = v.is_array() && !v.empty() &&
                              v.front().is_object() && !is_flat_object(v.front());
    if (v.is_object() && !is_flat_object(v)) {
      out << "\n";
      render_section(v, out, indent + 2, color);
    } else if (nested_array || (v.is_array() && v.size() > 4 && v.front().is_object())) {
      out << "\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        out << pad << "  [" << i << "] " << inline_text(v[i]) << "\n";
      }
    } else {
      out << colorize(it.key(), inline_text(v), color) << "\n";
    }
  }
}

void render_checks(const json& checks, std::ostream& out) {
  std::size_t w_desc = 11, w_left = 4, w_right = 5;
  for (const json& c : checks) {
    w_desc = std::max(w_desc, c["description"].get<std::string>().size());
    w_left = std::max(w_left, c["left"].get<std::string>().size());
    w_right = std::max(w_right, c["right"].get<std::string>().size());
  }
  auto cell = [](const std::string& s, std::size_t w) {
    return s + std::string(w - std::min(w, s.size()), ' ');
  };
  out << "checks:\n";
  out << "  " << cell("description", w_desc) << "  " << cell("left", w_left)
      << "  rel  " << cell("right", w_right) << "  holds\n";
  for (const json& c : checks) {
    out << "  " << cell(c["description"].get<std::string>(), w_desc) << "  "
        << cell(c["left"].get<std::string>(), w_left) << "  "
        << cell(c["relation"].get<std::string>(), 3) << "  "
        << cell(c["right"].get<std::string>(), w_right) << "  "
        << (c["holds"].get<bool>() ? "yes" : "NO") << "\n";
  }
}

void render_table(const Envelope& env, std::ostream& out, bool color) {
  out << env.command << "\n";
  if (!env.inputs.empty()) {
    out << "inputs:\n";
    render_section(env.inputs, out, 2, color);
  }
  out << "result:\n";
  render_section(env.result, out, 2, color);
  if (!env.checks.empty()) render_checks(env.checks, out);
}

// ---------------------------------------------------------------------------
// CSV rendering for everything except scan: flattened key,value pairs.

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void flatten(const json& v, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      flatten(v[i], prefix + "." + std::to_string(i), rows);
    }
  } else {
    rows.emplace_back(prefix, scalar_text(v));
  }
}

void render_kv_csv(const Envelope& env, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(env.result, "", rows);
  flatten(env.checks, "checks", rows);
  out << "key,value\n";
  for (const auto& [k, v] : rows) out << csv_field(k) << "," << csv_field(v) << "\n";
}

// ---------------------------------------------------------------------------
// Parameters

struct ContextArgs {
  Int n = 2;
  Int g = 0;
  Int deg_l = 0;

  CurveContext make() const { return CurveContext(n, g, deg_l); }
  json echo() const { return json{{"n", n}, {"g", g}, {"degL", deg_l}}; }
};

void add_context(CLI::App* cmd, ContextArgs& c, bool genus_required,
                 bool n_required = true) {
  auto* n = cmd->add_option("--n", c.n, "multiplicity of the curve (>= 2)");
  if (n_required) n->required();
  auto* g = cmd->add_option("--g", c.g, "genus of the reduced curve C");
  if (genus_required) g->required();
  cmd->add_option("--degL", c.deg_l, "degree of L (< 0)")->required();
}

std::map<std::string, StabilityStatus> parse_premises(
    const std::vector<std::string>& raw) {
  std::map<std::string, StabilityStatus> out;
  for (const std::string& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--premise", "expected SUBJECT=STATUS, got '" + item + "'");
    }
    const std::string subject = item.substr(0, eq);
    const StabilityStatus status = parse_status(item.substr(eq + 1));
    auto [it, inserted] = out.emplace(subject, status);
    if (!inserted && it->second != status) {
      throw Error(ErrorKind::InvalidPremise,
                  "conflicting declarations for premise '" + subject + "'");
    }
  }
  return out;
}

/// Pulls the declared premises for a rule; undeclared subjects are Unknown,
/// and subjects the rule does not know are rejected.
std::vector<Premise> take_premises(std::map<std::string, StabilityStatus> declared,
                                   std::initializer_list<std::string_view> subjects) {
  std::vector<Premise> out;
  for (std::string_view s : subjects) {
    const std::string key(s);
    auto it = declared.find(key);
    const StabilityStatus st = it == declared.end() ? StabilityStatus::Unknown : it->second;
    if (it != declared.end()) declared.erase(it);
    out.push_back(Premise::declared(key, st));
  }
  if (!declared.empty()) {
    std::string valid;
    for (std::string_view s : subjects) valid += (valid.empty() ? "" : ", ") + std::string(s);
    throw Error(ErrorKind::InvalidPremise, "unknown premise subject '" +
                                               declared.begin()->first +
                                               "' (valid: " + valid + ")");
  }
  return out;
}

json premises_echo(const std::map<std::string, StabilityStatus>& declared) {
  json j = json::object();
  for (const auto& [k, v] : declared) j[k] = std::string(to_string(v));
  return j;
}

struct RigidArgs {
  ContextArgs ctx;
  Int a = 1, k = 1, deg_e = 0, deg_f = 0;

  RigidSheaf make() const {
    return RigidSheaf(ctx.make(), a, k, BundleOnC{a + 1, deg_e}, BundleOnC{a, deg_f});
  }
  json echo() const {
    json j = ctx.echo();
    j["a"] = a;
    j["k"] = k;
    j["degE"] = deg_e;
    j["degF"] = deg_f;
    return j;
  }
};

void add_rigid(CLI::App* cmd, RigidArgs& r) {
  add_context(cmd, r.ctx, false);
  cmd->add_option("--a", r.a, "number of O_n summands (>= 1)")->required();
  cmd->add_option("--k", r.k, "level of the extra O_k summand (1 <= k < n)")->required();
  cmd->add_option("--degE", r.deg_e, "degree of E = restriction to C")->required();
  cmd->add_option("--degF", r.deg_f, "degree of F")->required();
}

struct SliceArgs {
  ContextArgs ctx;
  Int total_r = 0, total_deg = 0, sub_r = 0, sub_deg = 0, k = 1, t = 0;

  FiltrationSlice make() const {
    return FiltrationSlice(ctx.make(), make_invariants(total_r, total_deg),
                           make_invariants(sub_r, sub_deg), k, t);
  }
  json echo() const {
    json j = ctx.echo();
    j["total"] = json{{"R", total_r}, {"Deg", total_deg}};
    j["sub"] = json{{"R", sub_r}, {"Deg", sub_deg}};
    j["k"] = k;
    j["t"] = t;
    return j;
  }
};

void add_slice(CLI::App* cmd, SliceArgs& s) {
  add_context(cmd, s.ctx, false);
  cmd->add_option("--total-R", s.total_r, "generalized rank of the sheaf")->required();
  cmd->add_option("--total-Deg", s.total_deg, "generalized degree of the sheaf")->required();
  cmd->add_option("--sub-R", s.sub_r, "generalized rank of E_k")->required();
  cmd->add_option("--sub-Deg", s.sub_deg, "generalized degree of E_k")->required();
  cmd->add_option("--k", s.k, "filtration level (1 <= k < n)")->required();
  cmd->add_option("--t", s.t, "torsion length h0(Sigma_k)")->default_val(0);
}

struct VbArgs {
  ContextArgs ctx;
  Int r = 1, delta = 0;
  json echo() const {
    json j = ctx.echo();
    j["r"] = r;
    j["delta"] = delta;
    return j;
  }
};

void add_vb(CLI::App* cmd, VbArgs& v) {
  add_context(cmd, v.ctx, false);
  cmd->add_option("--r", v.r, "rank of the restriction to C")->required();
  cmd->add_option("--delta", v.delta, "degree of the restriction to C")->required();
}

// ---------------------------------------------------------------------------
// Command handlers

Envelope cmd_invariants_rigid(const RigidArgs& args) {
  const RigidSheaf s = args.make();
  Envelope env{"invariants rigid", args.echo()};
  const Invariants inv = rigid_invariants(s);
  const BundleOnC v = rigid_V(s);
  std::vector<Int> type(static_cast<std::size_t>(s.context().n()), 0);
  type.back() = s.a();
  type[static_cast<std::size_t>(s.k() - 1)] = 1;
  const QlfType ty(s.context(), type);
  const ExactSeqWitness seq = star_sequence(s);

  env.result["R"] = inv.rank;
  env.result["Deg"] = inv.degree;
  env.result["slope"] = to_json(slope(inv));
  env.result["type"] = type;
  env.result["type_rank"] = qlf_rank(ty);
  env.result["E"] = to_json(s.e());
  env.result["F"] = to_json(s.f());
  env.result["V"] = to_json(v);
  env.result["slope_E"] = to_json(bundle_slope(s.e()));
  env.result["slope_F"] = to_json(bundle_slope(s.f()));
  env.result["slope_V"] = to_json(bundle_slope(v));
  env.result["first_graded"] = to_json_list(first_graded(s));
  env.result["second_graded"] = to_json_list(second_graded(s));
  env.result["star_sequence"] = to_json_list(seq.terms());
  env.result["star_sequence_additive"] = additivity_check(seq);
  return env;
}

Envelope cmd_invariants_vb(const VbArgs& args) {
  const VectorBundleCn v(args.ctx.make(), make_bundle(args.r, args.delta));
  Envelope env{"invariants vb", args.echo()};
  const Invariants inv = vb_invariants(v);
  env.result["R"] = inv.rank;
  env.result["Deg"] = inv.degree;
  env.result["slope"] = to_json(slope(inv));
  env.result["graded"] = to_json_list(vb_graded(v));
  return env;
}

Envelope cmd_invariants_qlf(const ContextArgs& ctx_args, const std::vector<Int>& type) {
  Envelope env{"invariants qlf", ctx_args.echo()};
  env.inputs["type"] = type;
  const QlfType ty(ctx_args.make(), type);
  env.result["R"] = qlf_rank(ty);
  const RigidClass cls = classify_rigid(ty);
  if (const auto* lf = std::get_if<LocallyFree>(&cls)) {
    env.result["class"] = "locally-free";
    env.result["a"] = lf->a;
  } else if (const auto* rg = std::get_if<Rigid>(&cls)) {
    env.result["class"] = "rigid";
    env.result["a"] = rg->a;
    env.result["k"] = rg->k;
  } else {
    env.result["class"] = "not-rigid";
  }
  return env;
}

Envelope cmd_invariants_dual(const ContextArgs& ctx_args, Int r, Int deg, Int torsion) {
  Envelope env{"invariants dual", ctx_args.echo()};
  env.inputs["R"] = r;
  env.inputs["Deg"] = deg;
  env.inputs["torsion"] = torsion;
  const Invariants dual = dual_invariants(make_invariants(r, deg), torsion, ctx_args.make());
  env.result["dual"] = invariants_with_slope(dual);
  return env;
}

Envelope cmd_invariants_slice(const SliceArgs& args) {
  const FiltrationSlice sl = args.make();
  Envelope env{"invariants slice", args.echo()};
  const SliceDerived d = slice_derived(sl);
  env.result["e_k_twist"] = invariants_with_slope(d.e_k_twist);
  env.result["e_up_k"] = invariants_with_slope(d.e_up_k);
  env.result["restriction"] = invariants_with_slope(d.restriction);
  env.result["bracket"] = invariants_with_slope(d.bracket);
  env.result["bidual_restriction"] = invariants_with_slope(d.bidual_restriction);
  env.result["dual_total"] = invariants_with_slope(d.dual_total);
  env.result["dual_sub"] = invariants_with_slope(d.dual_sub);
  env.result["dual_bracket"] = invariants_with_slope(d.dual_bracket);
  env.result["dual_up_k"] = invariants_with_slope(d.dual_up_k);
  env.result["dual_bidual_restriction"] = invariants_with_slope(d.dual_bidual_restriction);
  const FiltrationSlopeCheck x = eqX_check(sl);
  env.result["slope_inequalities"] = json{{"first", x.first},
                                          {"second", x.second},
                                          {"first_strict", x.first_strict},
                                          {"second_strict", x.second_strict}};
  const DualSlopeSides sides = dual_slope_sides(sl);
  env.result["dual_slope_identity"] =
      json{{"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}, {"holds", sides.lhs == sides.rhs}};
  return env;
}

Envelope cmd_certify_filtration(const SliceArgs& args,
                                const std::map<std::string, StabilityStatus>& declared,
                                bool relaxed) {
  const FiltrationSlice sl = args.make();
  const auto p = take_premises(declared, {subject::kBracket, subject::kBidual,
                                          subject::kDualBracket, subject::kDualBidual});
  Envelope env{"certify filtration", args.echo()};
  env.inputs["premises"] = premises_echo(declared);
  env.inputs["relaxed"] = relaxed;
  attach_certificate(env, theo1_certify(sl, p[0], p[1], p[2], p[3],
                                        relaxed ? StablePolicy::OnePerPair
                                                : StablePolicy::AllFour));
  return env;
}

Envelope cmd_certify_vb(const VbArgs& args,
                        const std::map<std::string, StabilityStatus>& declared) {
  const VectorBundleCn v(args.ctx.make(), make_bundle(args.r, args.delta));
  const auto p = take_premises(declared, {subject::kRestriction});
  Envelope env{"certify vb", args.echo()};
  env.inputs["premises"] = premises_echo(declared);
  attach_certificate(env, theo2_certify(v, p[0]));
  const Invariants inv = vb_invariants(v);
  env.result["invariants"] = invariants_with_slope(inv);
  return env;
}

Envelope cmd_certify_rigid(const RigidArgs& args,
                           const std::map<std::string, StabilityStatus>& declared) {
  const RigidSheaf s = args.make();
  const auto p = take_premises(declared, {subject::kE, subject::kF, subject::kV});
  Envelope env{"certify rigid", args.echo()};
  env.inputs["premises"] = premises_echo(declared);
  attach_certificate(env, theo3_certify(s, p[0], p[1], p[2]));
  const RigidBandCheck band = equCC3_check(s);
  env.result["band"] = json{{"holds", band.holds},
                            {"strict", band.strict},
                            {"combined", band.combined},
                            {"combined_strict", band.combined_strict}};
  env.result["filtration_route"] =
      std::string(to_string(rigid_via_filtration(s, p[0], p[1], p[2]).conclusion));
  return env;
}

Envelope cmd_certify_point_kernel(const VbArgs& args, Int z,
                                  const std::map<std::string, StabilityStatus>& declared) {
  const auto p = take_premises(declared, {subject::kE, subject::kEphi});
  Envelope env{"certify point-kernel", args.echo()};
  env.inputs["z"] = z;
  env.inputs["premises"] = premises_echo(declared);
  attach_certificate(env, theo5_certify(args.ctx.make(), make_bundle(args.r, args.delta),
                                        z, p[0], p[1]));
  return env;
}

struct ModuliArgs {
  ContextArgs ctx;
  Int a = 1, k = 1, eps = 0, delta = 0;
  json echo(bool with_degrees) const {
    json j = ctx.echo();
    j["a"] = a;
    j["k"] = k;
    if (with_degrees) {
      j["eps"] = eps;
      j["delta"] = delta;
    }
    return j;
  }
};

Envelope cmd_moduli_rd(const ModuliArgs& args) {
  const ModuliPoint p(args.ctx.make(), args.a, args.k, args.eps, args.delta);
  Envelope env{"moduli rd", args.echo(true)};
  const Invariants rd = moduli_rd(p);
  env.result["R"] = rd.rank;
  env.result["d"] = rd.degree;
  return env;
}

Envelope cmd_moduli_dim(const ModuliArgs& args) {
  Envelope env{"moduli dim", args.echo(false)};
  env.result["dim"] = moduli_dim(args.ctx.make(), args.a, args.k);
  return env;
}

Envelope cmd_moduli_nonempty(const ModuliArgs& args) {
  const ModuliPoint p(args.ctx.make(), args.a, args.k, args.eps, args.delta);
  Envelope env{"moduli nonempty", args.echo(true)};
  const Invariants rd = moduli_rd(p);
  env.result["R"] = rd.rank;
  env.result["d"] = rd.degree;
  env.result["nonempty"] = moduli_nonempty(p);
  env.result["dim"] = moduli_dim(p.context(), p.a(), p.k());
  return env;
}

Envelope cmd_moduli_vb(const VbArgs& args) {
  Envelope env{"moduli vb", args.echo()};
  const Invariants rd = vb_moduli_rd(args.ctx.make(), args.r, args.delta);
  env.result["R"] = rd.rank;
  env.result["d"] = rd.degree;
  return env;
}

struct ExtArgs {
  Int g = 0, src_r = 1, src_d = 0, tgt_r = 1, tgt_d = 0, hom = 0;
};

Envelope cmd_moduli_ext(const ExtArgs& a) {
  Envelope env{"moduli ext",
               json{{"g", a.g},
                    {"source", json{{"rank", a.src_r}, {"deg", a.src_d}}},
                    {"target", json{{"rank", a.tgt_r}, {"deg", a.tgt_d}}},
                    {"hom", a.hom}}};
  env.result["ext1"] = ext_dim_rr(a.g, make_bundle(a.src_r, a.src_d),
                                  make_bundle(a.tgt_r, a.tgt_d), a.hom);
  return env;
}

struct ScanArgs {
  ContextArgs ctx;
  Int a = 1, k = 1, delta_min = 0, delta_max = 0, eps_min = 0, eps_max = 0;
  std::uint64_t cap = kDefaultScanCap;
};

Envelope cmd_scan(const ScanArgs& args, std::vector<RegionRow>& rows) {
  rows = scan(args.ctx.make(), args.a, args.k, {args.delta_min, args.delta_max},
              {args.eps_min, args.eps_max}, args.cap);
  json inputs = args.ctx.echo();
  inputs["a"] = args.a;
  inputs["k"] = args.k;
  inputs["delta"] = json::array({args.delta_min, args.delta_max});
  inputs["eps"] = json::array({args.eps_min, args.eps_max});
  Envelope env{"scan", inputs};
  json arr = json::array();
  for (const RegionRow& r : rows) {
    arr.push_back(json{{"delta", r.delta},
                       {"epsilon", r.epsilon},
                       {"R", r.R},
                       {"d", r.d},
                       {"nonempty", r.nonempty},
                       {"dim", r.dim}});
  }
  env.result["rows"] = arr;
  return env;
}

json lemma_instance_json(const LemmaInstance& inst) {
  return json{{"A", to_json(inst.a())},   {"A2", to_json(inst.a2())},
              {"B", to_json(inst.b())},   {"B2", to_json(inst.b2())},
              {"E", to_json(inst.e())},   {"E2", to_json(inst.e2())}};
}

Envelope cmd_verify_lemma(Int rank_max, Int deg_max, std::uint64_t cap) {
  Envelope env{"verify-lemma", json{{"rank_max", rank_max}, {"deg_max", deg_max}}};
  const LemmaOracleReport rep = lemma_oracle(rank_max, deg_max, cap);
  env.result["enumerated"] = rep.enumerated;
  env.result["hypotheses_held"] = rep.hypotheses_held;
  env.result["strict_hypotheses_held"] = rep.strict_hypotheses_held;
  json cx = json::array();
  for (const LemmaInstance& inst : rep.counterexamples) cx.push_back(lemma_instance_json(inst));
  env.result["counterexamples"] = cx;
  if (!rep.counterexamples.empty()) env.exit_code = kExitDomainError;
  return env;
}

Envelope cmd_hn(const ContextArgs& ctx_args, Int d_d) {
  Envelope env{"hn", ctx_args.echo()};
  env.inputs["dD"] = d_d;
  const HnExample h = hn_analysis(ctx_args.make(), d_d);
  env.result["mu_ideal"] = to_json(h.mu_ideal);
  env.result["mu_sub"] = to_json(h.mu_sub);
  env.result["mu_total"] = to_json(h.mu_total);
  env.result["delta_restriction"] = h.delta_restriction;
  env.result["destabilizes"] = h.destabilizes;
  env.result["semistable_boundary"] = h.semistable_boundary;
  return env;
}

// Randomized identity checks, reproducible through --seed.
Envelope cmd_selftest(std::uint64_t seed, Int count) {
  if (count < 1) throw Error(ErrorKind::InvalidArgument, "--count must be >= 1");
  Envelope env{"selftest", json{{"seed", seed}, {"count", count}}};
  sampling::Rng rng(seed);
  std::uint64_t failures_total = 0;

  auto suite = [&](const char* name, auto&& property) {
    std::uint64_t failures = 0;
    for (Int i = 0; i < count; ++i) {
      if (!property()) ++failures;
    }
    failures_total += failures;
    env.result[name] = json{{"cases", count}, {"failures", failures}};
  };

  suite("dual_involution", [&] {
    const CurveContext ctx = sampling::random_context(rng);
    const Invariants inv = sampling::random_invariants(rng);
    return dual_invariants(dual_invariants(inv, 0, ctx), 0, ctx) == inv;
  });
  suite("dual_slope_identity", [&] { return cor2_check(sampling::random_slice(rng)); });
  suite("slice_torsion", [&] {
    const FiltrationSlice sl = sampling::random_slice(rng);
    const SliceDerived d = slice_derived(sl);
    return d.bracket.degree - sl.sub().degree == sl.torsion() &&
           d.restriction.degree - d.bidual_restriction.degree == sl.torsion();
  });
  suite("filtration_sums", [&] {
    const RigidSheaf s = sampling::random_rigid(rng);
    const Invariants inv = rigid_invariants(s);
    auto sum = [](const std::vector<BundleOnC>& g) {
      Invariants acc;
      for (const BundleOnC& b : g) acc = acc + as_invariants(b);
      return acc;
    };
    return sum(first_graded(s)) == inv && sum(second_graded(s)) == inv &&
           additivity_check(star_sequence(s));
  });
  suite("slope_inequality_pairing", [&] {
    const FiltrationSlice sl = sampling::random_slice(rng);
    const SliceDerived d = slice_derived(sl);
    const FiltrationSlopeCheck x = eqX_check(sl);
    const bool bracket_form = slope(d.bidual_restriction) >= slope(d.bracket);
    const bool dual_bracket_form =
        slope(d.dual_bidual_restriction) >= slope(d.dual_bracket);
    return x.first == dual_bracket_form && x.second == bracket_form;
  });
  env.result["failures"] = failures_total;
  if (failures_total != 0) env.exit_code = kExitDomainError;
  return env;
}

void emit(const Envelope& env, const std::string& format, std::ostream& out, bool color,
          const std::vector<RegionRow>* rows) {
  if (format == "json") {
    out << envelope_json(env).dump(2) << "\n";
  } else if (format == "csv") {
    if (rows != nullptr) {
      emit_csv(*rows, out);
    } else {
      render_kv_csv(env, out);
    }
  } else {
    render_table(env, out, color);
  }
}

}  // namespace

void emit_csv(const std::vector<RegionRow>& rows, std::ostream& out) {
  out << "delta,epsilon,R,d,nonempty,dim\n";
  for (const RegionRow& r : rows) {
    out << r.delta << ',' << r.epsilon << ',' << r.R << ',' << r.d << ','
        << (r.nonempty ? "true" : "false") << ',' << r.dim << '\n';
  }
  if (!out) throw Error(ErrorKind::IoError, "failed to write CSV output");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        Terminal term) {
  CLI::App app{"Invariants, stability certificates and moduli data for sheaves "
               "on primitive multiple curves.",
               "mcurve"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->default_val("table");

  // invariants
  auto* inv = app.add_subcommand("invariants", "generalized rank/degree computations");
  inv->require_subcommand(1);
  RigidArgs rigid_args;
  auto* inv_rigid = inv->add_subcommand("rigid", "rigid-type sheaf a*O_n + O_k");
  add_rigid(inv_rigid, rigid_args);
  VbArgs vb_args;
  auto* inv_vb = inv->add_subcommand("vb", "vector bundle on C_n");
  add_vb(inv_vb, vb_args);
  ContextArgs qlf_ctx;
  std::vector<Int> qlf_type;
  auto* inv_qlf = inv->add_subcommand("qlf", "quasi locally free type (m_1..m_n)");
  add_context(inv_qlf, qlf_ctx, false);
  inv_qlf->add_option("--type", qlf_type, "comma separated m_1,...,m_n")
      ->required()
      ->delimiter(',');
  ContextArgs dual_ctx;
  Int dual_r = 0, dual_deg = 0, dual_t = 0;
  auto* inv_dual = inv->add_subcommand("dual", "invariants of the dual sheaf");
  add_context(inv_dual, dual_ctx, false);
  inv_dual->add_option("--R", dual_r, "generalized rank")->required();
  inv_dual->add_option("--Deg", dual_deg, "generalized degree")->required();
  inv_dual->add_option("--torsion", dual_t, "length of the torsion subsheaf")->default_val(0);
  SliceArgs slice_args;
  auto* inv_slice = inv->add_subcommand("slice", "sheaves attached to a filtration level");
  add_slice(inv_slice, slice_args);

  // certify
  auto* cert = app.add_subcommand("certify", "stability certificates");
  cert->require_subcommand(1);
  std::vector<std::string> premises_raw;
  bool relaxed = false;
  SliceArgs cert_slice;
  auto* cert_filt = cert->add_subcommand("filtration", "criterion on a filtration slice");
  add_slice(cert_filt, cert_slice);
  cert_filt->add_flag("--relaxed", relaxed,
                      "stable case: one stable member per pair suffices");
  VbArgs cert_vb_args;
  auto* cert_vb = cert->add_subcommand("vb", "vector bundle on C_n");
  add_vb(cert_vb, cert_vb_args);
  RigidArgs cert_rigid_args;
  auto* cert_rigid = cert->add_subcommand("rigid", "rigid-type sheaf");
  add_rigid(cert_rigid, cert_rigid_args);
  VbArgs pk_args;
  Int pk_z = 0;
  auto* cert_pk = cert->add_subcommand("point-kernel", "kernel of a vector bundle onto O_Z");
  add_vb(cert_pk, pk_args);
  cert_pk->add_option("--z", pk_z, "h0(O_Z)")->required();
  for (auto* c : {cert_filt, cert_vb, cert_rigid, cert_pk}) {
    c->add_option("--premise", premises_raw, "SUBJECT=stable|semistable|unknown");
  }

  // moduli
  auto* mod = app.add_subcommand("moduli", "moduli space bookkeeping");
  mod->require_subcommand(1);
  ModuliArgs mod_args;
  auto* mod_rd = mod->add_subcommand("rd", "(R, d) of N(a,k,delta,eps)");
  add_context(mod_rd, mod_args.ctx, false);
  auto* mod_dim = mod->add_subcommand("dim", "dimension of N(a,k,delta,eps)");
  add_context(mod_dim, mod_args.ctx, true);
  auto* mod_ne = mod->add_subcommand("nonempty", "non-emptiness criterion for N(a,k,delta,eps)");
  add_context(mod_ne, mod_args.ctx, true);
  for (auto* c : {mod_rd, mod_dim, mod_ne}) {
    c->add_option("--a", mod_args.a, "a >= 1")->required();
    c->add_option("--k", mod_args.k, "1 <= k < n")->required();
  }
  for (auto* c : {mod_rd, mod_ne}) {
    c->add_option("--eps", mod_args.eps, "deg E")->required();
    c->add_option("--delta", mod_args.delta, "deg F")->required();
  }
  VbArgs mod_vb_args;
  auto* mod_vb = mod->add_subcommand("vb", "(R, d) of U(R,d)");
  add_vb(mod_vb, mod_vb_args);
  ExtArgs ext_args;
  auto* mod_ext = mod->add_subcommand("ext", "dim Ext^1 on C by Riemann-Roch");
  mod_ext->add_option("--g", ext_args.g, "genus of C")->required();
  mod_ext->add_option("--source-rank", ext_args.src_r)->required();
  mod_ext->add_option("--source-deg", ext_args.src_d)->required();
  mod_ext->add_option("--target-rank", ext_args.tgt_r)->required();
  mod_ext->add_option("--target-deg", ext_args.tgt_d)->required();
  mod_ext->add_option("--hom", ext_args.hom, "dim Hom(source, target)")->required();

  // scan
  ScanArgs scan_args;
  auto* scan_cmd = app.add_subcommand("scan", "tabulate N(a,k,delta,eps) over a grid");
  add_context(scan_cmd, scan_args.ctx, true);
  scan_cmd->add_option("--a", scan_args.a)->required();
  scan_cmd->add_option("--k", scan_args.k)->required();
  scan_cmd->add_option("--delta-min", scan_args.delta_min)->required();
  scan_cmd->add_option("--delta-max", scan_args.delta_max)->required();
  scan_cmd->add_option("--eps-min", scan_args.eps_min)->required();
  scan_cmd->add_option("--eps-max", scan_args.eps_max)->required();
  scan_cmd->add_option("--cap", scan_args.cap, "maximum grid size")->default_val(kDefaultScanCap);

  // verify-lemma
  Int lemma_rank = 0, lemma_deg = 0;
  std::uint64_t lemma_cap = kDefaultEnumerationCap;
  auto* lemma_cmd = app.add_subcommand("verify-lemma", "exhaustive check of the slope lemma");
  lemma_cmd->add_option("--rank-max", lemma_rank)->required();
  lemma_cmd->add_option("--deg-max", lemma_deg)->required();
  lemma_cmd->add_option("--cap", lemma_cap, "maximum number of instances")
      ->default_val(kDefaultEnumerationCap);

  // hn
  ContextArgs hn_ctx;
  Int hn_dd = 0;
  auto* hn_cmd = app.add_subcommand("hn", "rank-2 bundles on C_2 built from I_P");
  add_context(hn_cmd, hn_ctx, false, false);
  hn_cmd->add_option("--dD", hn_dd, "deg of D restricted to C")->required();

  // selftest (hidden)
  std::uint64_t seed = 1;
  Int self_count = 1000;
  auto* self_cmd = app.add_subcommand("selftest", "randomized property checks");
  self_cmd->group("");
  self_cmd->add_option("--seed", seed)->default_val(1);
  self_cmd->add_option("--count", self_count)->default_val(1000);

  std::string command_label = "mcurve";
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << "run 'mcurve --help' for usage\n";
    return kExitUsage;
  }

  const bool color = term.is_tty && std::getenv("NO_COLOR") == nullptr;
  try {
    std::vector<RegionRow> rows;
    const std::vector<RegionRow>* rows_ptr = nullptr;
    Envelope env;
    if (inv_rigid->parsed()) {
      env = cmd_invariants_rigid(rigid_args);
    } else if (inv_vb->parsed()) {
      env = cmd_invariants_vb(vb_args);
    } else if (inv_qlf->parsed()) {
      env = cmd_invariants_qlf(qlf_ctx, qlf_type);
    } else if (inv_dual->parsed()) {
      env = cmd_invariants_dual(dual_ctx, dual_r, dual_deg, dual_t);
    } else if (inv_slice->parsed()) {
      env = cmd_invariants_slice(slice_args);
    } else if (cert_filt->parsed()) {
      env = cmd_certify_filtration(cert_slice, parse_premises(premises_raw), relaxed);
    } else if (cert_vb->parsed()) {
      env = cmd_certify_vb(cert_vb_args, parse_premises(premises_raw));
    } else if (cert_rigid->parsed()) {
      env = cmd_certify_rigid(cert_rigid_args, parse_premises(premises_raw));
    } else if (cert_pk->parsed()) {
      env = cmd_certify_point_kernel(pk_args, pk_z, parse_premises(premises_raw));
    } else if (mod_rd->parsed()) {
      env = cmd_moduli_rd(mod_args);
    } else if (mod_dim->parsed()) {
      env = cmd_moduli_dim(mod_args);
    } else if (mod_ne->parsed()) {
      env = cmd_moduli_nonempty(mod_args);
    } else if (mod_vb->parsed()) {
      env = cmd_moduli_vb(mod_vb_args);
    } else if (mod_ext->parsed()) {
      env = cmd_moduli_ext(ext_args);
    } else if (scan_cmd->parsed()) {
      env = cmd_scan(scan_args, rows);
      rows_ptr = &rows;
    } else if (lemma_cmd->parsed()) {
      env = cmd_verify_lemma(lemma_rank, lemma_deg, lemma_cap);
    } else if (hn_cmd->parsed()) {
      env = cmd_hn(hn_ctx, hn_dd);
    } else if (self_cmd->parsed()) {
      env = cmd_selftest(seed, self_count);
    } else {
      err << "usage error: no command given\n";
      return kExitUsage;
    }
    command_label = env.command;
    emit(env, format, out, color, rows_ptr);
    return env.exit_code;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (format == "json") {
      json j;
      j["schema_version"] = kSchemaVersion;
      j["error"] = json{{"kind", std::string(e.name())}, {"message", e.what()}};
      err << j.dump(2) << "\n";
    } else {
      err << "error: " << e.name() << ": " << e.what() << "\n";
    }
    return kExitDomainError;
  }
}

}  // namespace mcurve::cli
