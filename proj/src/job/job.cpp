#include "commop/job.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <thread>

#include <json.hpp>

#include "commop/chain.hpp"
#include "commop/curve.hpp"
#include "commop/diffop.hpp"
#include "commop/error.hpp"
#include "commop/families.hpp"

namespace commop {

namespace {

using json = nlohmann::ordered_json;
using Bindings = std::map<std::size_t, Rat>;

[[noreturn]] void fail_at(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::invalid_argument, "at " + where + ": " + what);
}

// Runs f, prefixing any library error with the document location.
template <class F>
auto located(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.kind(), "at " + where + ": " + e.what());
  }
}

const json* find(const json& doc, const char* key) {
  auto it = doc.find(key);
  return it == doc.end() || it->is_null() ? nullptr : &*it;
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail_at(where, "expected an integer");
  return j.get<int>();
}

std::string get_text(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  fail_at(where, "expected a string or an integer");
}

bool get_bool(const json& doc, const char* key) {
  const json* j = find(doc, key);
  if (!j) return false;
  if (!j->is_boolean()) fail_at(std::string("/") + key, "expected true or false");
  return j->get<bool>();
}

std::vector<int> get_int_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail_at(where, "expected a list of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(get_int(j[i], where + "/" + std::to_string(i)));
  return out;
}

json parse_document(std::string_view text) {
  if (std::all_of(text.begin(), text.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
    return json::object();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::parse, "at byte " + std::to_string(e.byte) + ": malformed document");
  }
  if (!doc.is_object()) fail_at("/", "document must be an object");
  return doc;
}

std::optional<FamilySpec> parse_family(const json& doc) {
  const json* f = find(doc, "family");
  if (!f) return std::nullopt;
  FamilySpec spec;
  if (f->is_string()) {
    spec.kind = located("/family", [&] { return parse_family_kind(f->get<std::string>()); });
    return spec;
  }
  if (!f->is_object()) fail_at("/family", "expected an object or a family name");
  const json* kind = find(*f, "kind");
  if (!kind || !kind->is_string()) fail_at("/family/kind", "missing family kind");
  spec.kind = located("/family/kind", [&] { return parse_family_kind(kind->get<std::string>()); });
  if (const json* g = find(*f, "g")) spec.g = get_int(*g, "/family/g");
  if (const json* n = find(*f, "n")) spec.n = get_int(*n, "/family/n");
  if (const json* am = find(*f, "admissible_m")) spec.admissible_m = get_int(*am, "/family/admissible_m");
  if (const json* wd = find(*f, "w_degree")) spec.w_degree = get_int(*wd, "/family/w_degree");
  if (const json* cs = find(*f, "coefficients")) {
    if (!cs->is_object()) fail_at("/family/coefficients", "expected an object");
    for (const auto& [k, v] : cs->items())
      spec.coefficients[k] = get_text(v, "/family/coefficients/" + k);
  }
  return spec;
}

ParamSpace parse_space(const json& doc, const std::optional<FamilySpec>& family) {
  const json* p = find(doc, "params");
  if (!p) return family ? located("/family", [&] { return family_default_space(*family); }) : ParamSpace();
  if (p->is_string()) return located("/params", [&] { return ParamSpace::parse(p->get<std::string>()); });
  if (!p->is_array()) fail_at("/params", "expected a string or a list of names");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < p->size(); ++i) {
    if (!(*p)[i].is_string()) fail_at("/params/" + std::to_string(i), "expected a name");
    names.push_back((*p)[i].get<std::string>());
  }
  return located("/params", [&] { return ParamSpace(names); });
}

Bindings parse_bindings(const json* b, const ParamSpace& space, const std::string& where) {
  Bindings out;
  if (!b) return out;
  if (!b->is_object()) fail_at(where, "expected an object of name: value");
  for (const auto& [name, value] : b->items()) {
    const std::string at = where + "/" + name;
    std::size_t idx = located(at, [&] { return space.index(name); });
    std::string text = get_text(value, at);
    out[idx] = located(at, [&] { return parse_rat(text); });
  }
  return out;
}

std::map<std::size_t, ParamScalar> as_scalars(const Bindings& b) {
  std::map<std::size_t, ParamScalar> out;
  for (const auto& [k, v] : b) out.emplace(k, ParamScalar(v));
  return out;
}

// Substitutes bindings into every family coefficient.
FamilySpec bind_family(FamilySpec spec, const ParamSpace& space, const Bindings& bindings) {
  for (const auto& sym : family_symbols(spec.kind)) {
    auto it = spec.coefficients.find(sym);
    const std::string text = it == spec.coefficients.end() ? sym : it->second;
    if (it == spec.coefficients.end() && !space.find(sym)) continue;
    ParamScalar value = located("/family/coefficients/" + sym, [&] { return parse_scalar(text, space); });
    spec.coefficients[sym] = value.substitute(bindings).to_string(space);
  }
  return spec;
}

struct Inputs {
  json doc;
  std::optional<FamilySpec> family;
  ParamSpace space;
  Bindings bindings;
  int m = 1;
  int g_bound = 4;
};

Inputs read_inputs(std::string_view text) {
  Inputs in;
  in.doc = parse_document(text);
  in.family = parse_family(in.doc);
  in.space = parse_space(in.doc, in.family);
  in.bindings = parse_bindings(find(in.doc, "bindings"), in.space, "/bindings");
  if (in.family) in.family = bind_family(*in.family, in.space, in.bindings);
  in.m = in.family ? in.family->g : 1;
  if (const json* m = find(in.doc, "m")) in.m = get_int(*m, "/m");
  if (const json* gb = find(in.doc, "g_bound")) in.g_bound = get_int(*gb, "/g_bound");
  if (in.m < 1) fail_at("/m", "target degree must be at least 1");
  if (in.g_bound < 1) fail_at("/g_bound", "must be at least 1");
  return in;
}

FamilyOperator read_operator(const Inputs& in) {
  if (in.family) {
    if (in.family->kind == FamilyKind::dixmier_rank3)
      fail_at("/family/kind", "the rank-3 Dixmier operator is not of the form (D^2 + V)^2 + W");
    return located("/family", [&] { return build_family(*in.family, in.space); });
  }
  const json* V = find(in.doc, "V");
  const json* W = find(in.doc, "W");
  if (!V && !W) fail_at("/", "either a family or V and W are required");
  auto read = [&](const json* j, const char* key) {
    if (!j) return XPoly();
    const std::string at = std::string("/") + key;
    std::string text = get_text(*j, at);
    return located(at, [&] { return parse_xpoly(text, in.space).substitute(in.bindings); });
  };
  return {read(V, "V"), read(W, "W")};
}

std::map<std::size_t, ParamScalar> read_free_constants(const Inputs& in, const QChain& chain) {
  std::map<std::size_t, ParamScalar> out;
  const json* fc = find(in.doc, "free_constants");
  if (!fc) return out;
  if (!fc->is_object()) fail_at("/free_constants", "expected an object of name: value");
  for (const auto& [name, value] : fc->items()) {
    const std::string at = "/free_constants/" + name;
    std::size_t idx = located(at, [&] { return chain.space.index(name); });
    if (idx < in.space.size() || idx == chain.constants.back())
      fail_at(at, "'" + name + "' is not a chain constant C1..C" + std::to_string(chain.m));
    std::string text = get_text(value, at);
    ParamScalar v = located(at, [&] { return parse_scalar(text, in.space); });
    out.emplace(idx, v.substitute(in.bindings));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string show(const ParamScalar& s, const ParamSpace& space) { return s.to_string(space); }

json curve_json(const SpectralCurve& c) {
  json j;
  j["degree"] = c.F.degree();
  j["genus_bound"] = c.genus_bound();
  j["coefficients"] = c.coefficient_strings();
  j["text"] = c.to_string();
  return j;
}

json structure_json(const SpectralCurve& c) {
  json out = json::array();
  for (const auto& f : curve_structure(c)) {
    json e;
    e["factor"] = f.factor.to_string([&](const ParamScalar& s) { return s.to_string(c.space); });
    e["multiplicity"] = f.multiplicity;
    out.push_back(e);
  }
  return out;
}

json equation_json(const ConstraintEquation& eq, const std::vector<std::size_t>& unknowns,
                   const ParamSpace& space) {
  json j;
  j["x_power"] = eq.x_power;
  json coeffs = json::object();
  for (std::size_t i = 0; i < unknowns.size() && i < eq.coefficients.size(); ++i)
    if (!eq.coefficients[i].is_zero()) coeffs[space.name(unknowns[i])] = show(eq.coefficients[i], space);
  j["coefficients"] = coeffs;
  j["offset"] = show(eq.offset, space);
  return j;
}

json outcome_json(const SolveOutcome& o, const ConstraintSystem& sys, const ParamSpace& space) {
  json j;
  j["status"] = to_string(o.status);
  json a = json::object();
  for (const auto& [idx, v] : o.assignment) a[space.name(idx)] = show(v, space);
  j["assignment"] = a;
  json fr = json::array();
  for (auto idx : o.free) fr.push_back(space.name(idx));
  j["free"] = fr;
  json sc = json::array();
  for (const auto& s : o.side_conditions) sc.push_back(show(s, space) + " != 0");
  j["side_conditions"] = sc;
  if (o.contradiction) j["contradiction"] = equation_json(*o.contradiction, sys.unknowns, space);
  return j;
}

json params_json(const ParamSpace& space) { return space.names(); }

void check_expect(const json& doc, const char* key, const json& actual, bool& refuted) {
  const json* e = find(doc, "expect");
  if (!e) return;
  if (!e->is_object()) fail_at("/expect", "expected an object");
  const json* want = find(*e, key);
  if (!want) return;
  if (*want != actual) refuted = true;
}

// ---------------------------------------------------------------------------
// Commands

struct Computed {
  FamilyOperator op;
  SolvedChain solved;
  std::map<std::size_t, ParamScalar> values;
  ZXPoly Q;
};

Computed solve(const Inputs& in) {
  Computed c;
  c.op = read_operator(in);
  c.solved = located("/", [&] { return solve_chain(c.op.V, c.op.W, in.m, in.space); });
  if (c.solved.outcome.status != SolveStatus::infeasible) {
    FreeConstantPolicy policy;
    policy.keep_symbolic = get_bool(in.doc, "keep_symbolic");
    policy.overrides = read_free_constants(in, c.solved.chain);
    c.values = resolve_constants(c.solved.outcome, policy);
    c.Q = assemble_q(c.solved.chain, c.values);
  }
  return c;
}

void describe_operator(const Inputs& in, const Computed& c, json& report) {
  if (in.family) report["family"] = to_string(in.family->kind);
  report["V"] = c.op.V.to_string(in.space);
  report["W"] = c.op.W.to_string(in.space);
  report["m"] = in.m;
}

json q_json(const ZXPoly& Q, const ParamSpace& space) {
  json out = json::array();
  const auto& cs = Q.coefficients();
  for (std::size_t k = cs.size(); k-- > 0;) out.push_back(cs[k].to_string(space));
  return out;
}

int cmd_chain(const Inputs& in, json& report) {
  Computed c = solve(in);
  const QChain& ch = c.solved.chain;
  describe_operator(in, c, report);
  json consts = json::array();
  for (auto idx : ch.constants) consts.push_back(ch.space.name(idx));
  report["constants"] = consts;
  json a = json::array();
  for (const auto& ai : ch.a) a.push_back(ai.to_string(ch.space));
  report["a"] = a;
  json eqs = json::array();
  for (const auto& eq : c.solved.system.equations)
    eqs.push_back(equation_json(eq, c.solved.system.unknowns, ch.space));
  report["constraints"] = eqs;
  report["solution"] = outcome_json(c.solved.outcome, c.solved.system, ch.space);
  if (c.solved.outcome.status != SolveStatus::infeasible) {
    report["Q"] = q_json(c.Q, ch.space);
    bool zero = true;
    for (const auto& r : residual_eq2(c.Q, c.op.V, c.op.W).coefficients())
      if (!r.is_zero()) zero = false;
    report["residual_zero"] = zero;
  }
  bool refuted = false;
  check_expect(in.doc, "status", report["solution"]["status"], refuted);
  return refuted ? job_refuted : job_ok;
}

int cmd_curve(const Inputs& in, json& report, bool singular) {
  Computed c = solve(in);
  const QChain& ch = c.solved.chain;
  describe_operator(in, c, report);
  report["solution"] = outcome_json(c.solved.outcome, c.solved.system, ch.space);
  bool refuted = false;
  check_expect(in.doc, "status", report["solution"]["status"], refuted);
  if (c.solved.outcome.status == SolveStatus::infeasible) {
    report["curve"] = nullptr;
    return job_refuted;
  }
  report["Q"] = q_json(c.Q, ch.space);
  SpectralCurve curve = located("/", [&] { return spectral_curve(c.Q, c.op.V, c.op.W, ch.space); });
  report["curve"] = curve_json(curve);
  if (get_bool(in.doc, "structure")) report["structure"] = structure_json(curve);
  if (singular) {
    SingularityVerdict v = located("/bindings", [&] { return curve_is_singular(curve, in.bindings); });
    report["singular"] = v.singular;
    report["witness"] = v.witness_text;
    check_expect(in.doc, "singular", json(v.singular), refuted);
  }
  return refuted ? job_refuted : job_ok;
}

json dixmier_json(const Inputs& in, bool& zero) {
  const int rank = in.family->kind == FamilyKind::dixmier_rank2 ? 2 : 3;
  auto it = in.family->coefficients.find("alpha");
  const std::string text = it == in.family->coefficients.end() ? "alpha" : it->second;
  ParamScalar alpha = located("/family/coefficients/alpha", [&] { return parse_scalar(text, in.space); });
  auto [L, M] = dixmier_pair(rank, alpha);
  DiffOp comm = diffop_commutator(L, M);
  DiffOp rel = diffop_pow(M, 2) - diffop_pow(L, 3);
  zero = comm.order() == kMinusInfinity;
  json j;
  j["rank"] = rank;
  j["L"] = L.to_string(in.space);
  j["M"] = M.to_string(in.space);
  j["order_L"] = L.order();
  j["order_M"] = M.order();
  j["commutator"] = comm.to_string(in.space);
  j["commutator_zero"] = zero;
  j["M^2 - L^3"] = rel.to_string(in.space);
  j["relation_order"] = rel.order() == kMinusInfinity ? json(nullptr) : json(rel.order());
  return j;
}

int cmd_commutator(const Inputs& in, json& report) {
  bool zero = false;
  if (in.family && (in.family->kind == FamilyKind::dixmier_rank2 ||
                    in.family->kind == FamilyKind::dixmier_rank3)) {
    report["family"] = to_string(in.family->kind);
    const json pair = dixmier_json(in, zero);
    for (const auto& [k, v] : pair.items()) report[k] = v;
  } else {
    DiffOp L, M;
    if (in.family) {
      FamilyOperator op = read_operator(in);
      L = build_square_form(op.V, op.W);
      const json* Mj = find(in.doc, "M");
      if (!Mj) fail_at("/M", "missing operator");
      std::string text = get_text(*Mj, "/M");
      M = located("/M", [&] { return parse_diffop(text, in.space); });
    } else {
      const json* Lj = find(in.doc, "L");
      const json* Mj = find(in.doc, "M");
      if (!Lj) fail_at("/L", "missing operator");
      if (!Mj) fail_at("/M", "missing operator");
      std::string lt = get_text(*Lj, "/L");
      std::string mt = get_text(*Mj, "/M");
      L = located("/L", [&] { return parse_diffop(lt, in.space); });
      M = located("/M", [&] { return parse_diffop(mt, in.space); });
    }
    auto b = as_scalars(in.bindings);
    L = L.substitute(b);
    M = M.substitute(b);
    DiffOp comm = diffop_commutator(L, M);
    zero = comm.order() == kMinusInfinity;
    report["L"] = L.to_string(in.space);
    report["M"] = M.to_string(in.space);
    report["order_L"] = L.order() == kMinusInfinity ? json(nullptr) : json(L.order());
    report["order_M"] = M.order() == kMinusInfinity ? json(nullptr) : json(M.order());
    report["commutator"] = comm.to_string(in.space);
    report["commutator_zero"] = zero;
  }
  return zero ? job_ok : job_refuted;
}

int cmd_verdict(const Inputs& in, json& report) {
  if (!in.family) fail_at("/family", "verdict needs a family");
  report["family"] = to_string(in.family->kind);
  if (in.family->kind == FamilyKind::dixmier_rank3) {
    bool zero = false;
    report["claim"] = "feasible";
    report["pair"] = dixmier_json(in, zero);
    report["claim_holds"] = zero;
    return zero ? job_ok : job_refuted;
  }
  report["g"] = in.family->g;
  report["m"] = in.m;
  report["g_bound"] = in.g_bound;
  FamilyVerdict v = located("/family", [&] { return run_family_verdict(*in.family, in.m, in.g_bound, in.space); });
  report["claim"] = to_string(v.claim);
  report["claim_holds"] = v.claim_holds;
  json degrees = json::array();
  for (const auto& d : v.degrees) {
    json e;
    e["degree"] = d.degree;
    e["status"] = to_string(d.status);
    e["free_constants"] = d.free_constants;
    e["side_conditions"] = d.side_conditions;
    degrees.push_back(e);
  }
  report["degrees"] = degrees;
  report["curve"] = v.curve ? curve_json(*v.curve) : json(nullptr);
  if (v.curve && get_bool(in.doc, "structure")) report["structure"] = structure_json(*v.curve);
  report["note"] = v.note;
  bool refuted = !v.claim_holds;
  check_expect(in.doc, "claim_holds", json(v.claim_holds), refuted);
  return refuted ? job_refuted : job_ok;
}

// One scan cell: family at (g, m) under one binding.
json scan_cell(const Inputs& in, int g, int m, std::size_t binding_index, const json* binding) {
  json cell;
  cell["g"] = g;
  cell["m"] = m;
  cell["binding"] = binding_index;
  try {
    const std::string where = "/scan/bindings/" + std::to_string(binding_index);
    Bindings b = in.bindings;
    for (const auto& [k, v] : parse_bindings(binding, in.space, where)) b[k] = v;
    FamilySpec spec = bind_family(*in.family, in.space, b);
    spec.g = g;
    FamilyOperator op = build_family(spec, in.space);
    SolvedChain s = solve_chain(op.V, op.W, m, in.space);
    cell["status"] = to_string(s.outcome.status);
    cell["free_constants"] = s.outcome.free.size();
    if (s.outcome.status == SolveStatus::infeasible) {
      cell["singular"] = nullptr;
    } else {
      ZXPoly Q = assemble_q(s.chain, resolve_constants(s.outcome));
      SpectralCurve curve = spectral_curve(Q, op.V, op.W, s.chain.space);
      bool bound = true;
      for (const auto& c : curve.F.coefficients())
        if (!c.is_numeric()) bound = false;
      cell["singular"] = bound ? json(curve_is_singular(curve, {}).singular) : json(nullptr);
    }
  } catch (const Error& e) {
    cell["error"] = e.what();
  }
  return cell;
}

int cmd_scan(const Inputs& in, json& report) {
  if (!in.family) fail_at("/family", "scan needs a family");
  const json* sc = find(in.doc, "scan");
  json grid = sc ? *sc : json::object();
  if (!grid.is_object()) fail_at("/scan", "expected an object");
  std::vector<int> gs{in.family->g};
  if (const json* g = find(grid, "g")) gs = get_int_list(*g, "/scan/g");
  std::vector<int> ms, offsets;
  if (const json* m = find(grid, "m")) ms = get_int_list(*m, "/scan/m");
  if (const json* o = find(grid, "m_offsets")) offsets = get_int_list(*o, "/scan/m_offsets");
  if (!ms.empty() && !offsets.empty()) fail_at("/scan", "give either m or m_offsets");
  if (ms.empty() && offsets.empty()) offsets = {0};
  std::vector<const json*> bindings{nullptr};
  if (const json* b = find(grid, "bindings")) {
    if (!b->is_array()) fail_at("/scan/bindings", "expected a list of objects");
    bindings.clear();
    for (const auto& e : *b) bindings.push_back(&e);
  }
  for (std::size_t i = 0; i < gs.size(); ++i)
    if (gs[i] < 1) fail_at("/scan/g/" + std::to_string(i), "must be at least 1");

  struct Cell {
    int g, m;
    std::size_t binding;
  };
  std::vector<Cell> cells;
  for (int g : gs) {
    std::vector<int> row = ms;
    if (row.empty())
      for (int o : offsets) row.push_back(g + o);
    for (int m : row)
      for (std::size_t b = 0; b < bindings.size(); ++b)
        if (m >= 1) cells.push_back({g, m, b});
  }

  std::vector<json> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();)
      results[i] = scan_cell(in, cells[i].g, cells[i].m, cells[i].binding, bindings[cells[i].binding]);
  };
  const std::size_t n = std::min<std::size_t>(cells.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  report["family"] = to_string(in.family->kind);
  report["cells"] = results;
  return job_ok;
}

// Random nonzero rational with small numerator and denominator.
Rat random_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  long p = 0;
  while (p == 0) p = num(rng);
  return make_rat(p, den(rng));
}

int cmd_oracle(const Inputs& in, json& report) {
  unsigned seed = 1;
  int count = 50, k_max = 6;
  if (const json* o = find(in.doc, "oracle")) {
    if (!o->is_object()) fail_at("/oracle", "expected an object");
    if (const json* s = find(*o, "seed")) seed = static_cast<unsigned>(get_int(*s, "/oracle/seed"));
    if (const json* c = find(*o, "count")) count = get_int(*c, "/oracle/count");
    if (const json* k = find(*o, "k_max")) k_max = get_int(*k, "/oracle/k_max");
  }
  if (count < 1) fail_at("/oracle/count", "must be positive");
  if (k_max < 0) fail_at("/oracle/k_max", "must be non-negative");

  std::vector<FamilyKind> kinds{FamilyKind::thm1, FamilyKind::thm2, FamilyKind::thm3};
  if (in.family) {
    if (std::find(kinds.begin(), kinds.end(), in.family->kind) == kinds.end())
      fail_at("/family/kind", "closed forms exist for thm1, thm2 and thm3 only");
    kinds = {in.family->kind};
  }

  const ParamSpace cspace({"C"});
  const ParamScalar C = ParamScalar::variable(0);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kd(0, k_max), gd(1, 5), nd(4, 9);
  json instances = json::array();
  bool all = true;
  for (int i = 0; i < count; ++i) {
    const FamilyKind kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
    const int k = kd(rng);
    json e;
    e["family"] = to_string(kind);
    e["k"] = k;
    XPoly V, W, input, expected;
    if (kind == FamilyKind::thm1) {
      const int g = gd(rng);
      ParamScalar A6 = random_rat(rng), A2 = random_rat(rng);
      V = XPoly::monomial(A6, 6) + XPoly::monomial(A2, 2);
      W = XPoly::monomial(ParamScalar(16L * g * (g + 1)) * A6, 4);
      input = XPoly::monomial(ParamScalar(1), static_cast<std::size_t>(4 * k));
      expected = thm1_monomial_step(k, g, A6, A2, C);
      e["g"] = g;
      e["A6"] = show(A6, cspace);
      e["A2"] = show(A2, cspace);
    } else if (kind == FamilyKind::thm2) {
      const int g = gd(rng);
      ParamScalar A4 = random_rat(rng), A2 = random_rat(rng), A0 = random_rat(rng);
      V = XPoly::monomial(A4, 4) + XPoly::monomial(A2, 2) + XPoly(A0);
      W = XPoly::monomial(ParamScalar(4L * g * (g + 1)) * A4, 2);
      input = XPoly::monomial(ParamScalar(1), static_cast<std::size_t>(2 * k));
      expected = thm2_monomial_step(k, g, A4, A2, A0, C);
      e["g"] = g;
      e["A4"] = show(A4, cspace);
      e["A2"] = show(A2, cspace);
      e["A0"] = show(A0, cspace);
    } else {
      const int n = nd(rng);
      ParamScalar A = random_rat(rng), B = random_rat(rng);
      V = XPoly::monomial(A, static_cast<std::size_t>(n));
      W = XPoly::monomial(B, static_cast<std::size_t>(n - 2));
      input = XPoly::monomial(ParamScalar(1), static_cast<std::size_t>(k));
      expected = thm3_monomial_step(k, n, A, B, C);
      e["n"] = n;
      e["A"] = show(A, cspace);
      e["B"] = show(B, cspace);
    }
    const XPoly actual = recursion_step(input, V, W, C);
    // The integration constant absorbs any x^0 term of the closed form.
    const bool agree = (actual - expected).is_constant();
    all = all && agree;
    e["agree"] = agree;
    if (!agree) {
      e["expected"] = expected.to_string(cspace);
      e["actual"] = actual.to_string(cspace);
    }
    instances.push_back(e);
  }
  report["seed"] = seed;
  report["count"] = count;
  report["instances"] = instances;
  report["all_agree"] = all;
  return all ? job_ok : job_refuted;
}

const char* status_name(int s) {
  switch (s) {
    case job_ok: return "ok";
    case job_refuted: return "refuted";
    default: return "input_error";
  }
}

std::string error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return "parse";
    case ErrorKind::invalid_argument: return "invalid_argument";
    case ErrorKind::division_by_zero: return "division_by_zero";
    case ErrorKind::unbound_parameter: return "unbound_parameter";
    case ErrorKind::x_dependence: return "x_dependence";
    case ErrorKind::nonlinear: return "nonlinear";
  }
  return "unknown";
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names{"chain",    "curve", "verdict",     "commutator",
                                              "singular", "scan",  "oracle-check"};
  return names;
}

JobResult run_job(std::string_view command, std::string_view document) {
  json report;
  report["command"] = std::string(command);
  int status = job_ok;
  try {
    const auto& names = job_commands();
    if (std::find(names.begin(), names.end(), command) == names.end())
      throw Error(ErrorKind::invalid_argument, "unknown command '" + std::string(command) + "'");
    Inputs in = read_inputs(document);
    report["params"] = params_json(in.space);
    if (!in.bindings.empty()) {
      json b = json::object();
      for (const auto& [k, v] : in.bindings) b[in.space.name(k)] = v.get_str();
      report["bindings"] = b;
    }
    if (command == "chain") status = cmd_chain(in, report);
    else if (command == "curve") status = cmd_curve(in, report, false);
    else if (command == "singular") status = cmd_curve(in, report, true);
    else if (command == "verdict") status = cmd_verdict(in, report);
    else if (command == "commutator") status = cmd_commutator(in, report);
    else if (command == "scan") status = cmd_scan(in, report);
    else status = cmd_oracle(in, report);
  } catch (const Error& e) {
    status = e.kind() == ErrorKind::x_dependence ? job_refuted : job_input_error;
    report["error"] = {{"kind", error_kind_name(e.kind())}, {"message", e.what()}};
  } catch (const json::exception& e) {
    status = job_input_error;
    report["error"] = {{"kind", "parse"}, {"message", e.what()}};
  }
  report["status"] = status_name(status);
  return {status, report.dump(2) + "\n"};
}

}  // namespace commop
