#include "commop/commop.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "commop/chain.hpp"
#include "commop/curve.hpp"
#include "commop/diffop.hpp"
#include "commop/error.hpp"
#include "commop/families.hpp"
#include "commop/job.hpp"

using namespace commop;

struct commop_context {
  std::shared_ptr<const ParamSpace> space;
};

struct commop_op {
  std::shared_ptr<const ParamSpace> space;
  DiffOp value;
};

struct commop_chain {
  std::shared_ptr<const ParamSpace> space;
  XPoly V, W;
  SolvedChain solved;
};

struct commop_curve {
  SpectralCurve value;
  std::shared_ptr<const ParamSpace> space;
};

namespace {

thread_local std::string last_error;

commop_status status_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse: return COMMOP_ERR_PARSE;
    case ErrorKind::invalid_argument: return COMMOP_ERR_INVALID_ARGUMENT;
    case ErrorKind::division_by_zero: return COMMOP_ERR_DIVISION_BY_ZERO;
    case ErrorKind::unbound_parameter: return COMMOP_ERR_UNBOUND_PARAMETER;
    case ErrorKind::x_dependence: return COMMOP_ERR_X_DEPENDENCE;
    case ErrorKind::nonlinear: return COMMOP_ERR_NONLINEAR;
  }
  return COMMOP_ERR_INTERNAL;
}

commop_status fail(commop_status s, std::string what) {
  last_error = std::move(what);
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
commop_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COMMOP_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COMMOP_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::string trimmed(std::string s) {
  s.erase(0, s.find_first_not_of(" \t"));
  s.erase(s.find_last_not_of(" \t") + 1);
  return s;
}

commop_status null_arg(const char* name) {
  return fail(COMMOP_ERR_NULL_ARGUMENT, std::string("null argument: ") + name);
}

commop_status same_space(const commop_op* a, const commop_op* b) {
  if (*a->space != *b->space)
    return fail(COMMOP_ERR_INVALID_ARGUMENT, "operators belong to different parameter contexts");
  return COMMOP_OK;
}

template <class Op>
commop_status binary(const commop_op* a, const commop_op* b, commop_op** out, Op op) {
  if (!a || !b) return null_arg("operator");
  if (!out) return null_arg("out");
  return guarded([&] {
    if (auto s = same_space(a, b); s != COMMOP_OK) return s;
    *out = new commop_op{a->space, op(a->value, b->value)};
    return COMMOP_OK;
  });
}

}  // namespace

extern "C" {

const char* commop_version(void) { return "0.1.0"; }

const char* commop_status_name(commop_status s) {
  switch (s) {
    case COMMOP_OK: return "ok";
    case COMMOP_ERR_PARSE: return "parse error";
    case COMMOP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COMMOP_ERR_DIVISION_BY_ZERO: return "division by zero";
    case COMMOP_ERR_UNBOUND_PARAMETER: return "unbound parameter";
    case COMMOP_ERR_X_DEPENDENCE: return "x dependence";
    case COMMOP_ERR_NONLINEAR: return "nonlinear";
    case COMMOP_ERR_INFEASIBLE: return "infeasible";
    case COMMOP_ERR_NULL_ARGUMENT: return "null argument";
    case COMMOP_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* commop_last_error(void) { return last_error.c_str(); }

void commop_string_free(char* s) { std::free(s); }

commop_status commop_context_new(const char* params, commop_context** out) {
  if (!params) return null_arg("params");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new commop_context{std::make_shared<const ParamSpace>(ParamSpace::parse(params))};
    return COMMOP_OK;
  });
}

void commop_context_free(commop_context* ctx) { delete ctx; }

size_t commop_context_param_count(const commop_context* ctx) {
  return ctx ? ctx->space->size() : 0;
}

commop_status commop_op_parse(const commop_context* ctx, const char* text, commop_op** out) {
  if (!ctx) return null_arg("ctx");
  if (!text) return null_arg("text");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new commop_op{ctx->space, parse_diffop(text, *ctx->space)};
    return COMMOP_OK;
  });
}

commop_status commop_op_compose(const commop_op* a, const commop_op* b, commop_op** out) {
  return binary(a, b, out, [](const DiffOp& x, const DiffOp& y) { return diffop_compose(x, y); });
}

commop_status commop_op_commutator(const commop_op* a, const commop_op* b, commop_op** out) {
  return binary(a, b, out,
                [](const DiffOp& x, const DiffOp& y) { return diffop_commutator(x, y); });
}

commop_status commop_op_sub(const commop_op* a, const commop_op* b, commop_op** out) {
  return binary(a, b, out, [](const DiffOp& x, const DiffOp& y) { return x - y; });
}

commop_status commop_op_pow(const commop_op* a, unsigned k, commop_op** out) {
  if (!a) return null_arg("operator");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new commop_op{a->space, diffop_pow(a->value, k)};
    return COMMOP_OK;
  });
}

commop_status commop_op_order(const commop_op* a, int* order) {
  if (!a) return null_arg("operator");
  if (!order) return null_arg("order");
  *order = a->value.is_zero() ? -1 : a->value.order();
  return COMMOP_OK;
}

commop_status commop_op_render(const commop_op* a, char** text) {
  if (!a) return null_arg("operator");
  if (!text) return null_arg("text");
  return guarded([&] {
    *text = dup(a->value.to_string(*a->space));
    return COMMOP_OK;
  });
}

void commop_op_free(commop_op* a) { delete a; }

commop_status commop_chain_build(const commop_context* ctx, const char* V, const char* W, int m,
                                 commop_chain** out) {
  if (!ctx) return null_arg("ctx");
  if (!V) return null_arg("V");
  if (!W) return null_arg("W");
  if (!out) return null_arg("out");
  return guarded([&] {
    auto c = std::make_unique<commop_chain>();
    c->space = ctx->space;
    c->V = parse_xpoly(V, *ctx->space);
    c->W = parse_xpoly(W, *ctx->space);
    c->solved = solve_chain(c->V, c->W, m, *ctx->space);
    *out = c.release();
    return COMMOP_OK;
  });
}

commop_status commop_chain_status(const commop_chain* chain, commop_solve_status* status) {
  if (!chain) return null_arg("chain");
  if (!status) return null_arg("status");
  switch (chain->solved.outcome.status) {
    case SolveStatus::unique: *status = COMMOP_SOLVE_UNIQUE; break;
    case SolveStatus::underdetermined: *status = COMMOP_SOLVE_UNDERDETERMINED; break;
    case SolveStatus::infeasible: *status = COMMOP_SOLVE_INFEASIBLE; break;
  }
  return COMMOP_OK;
}

commop_status commop_chain_free_count(const commop_chain* chain, size_t* count) {
  if (!chain) return null_arg("chain");
  if (!count) return null_arg("count");
  *count = chain->solved.outcome.free.size();
  return COMMOP_OK;
}

commop_status commop_chain_render(const commop_chain* chain, char** text) {
  if (!chain) return null_arg("chain");
  if (!text) return null_arg("text");
  return guarded([&] {
    std::string s;
    const QChain& ch = chain->solved.chain;
    for (std::size_t i = 0; i < ch.a.size(); ++i)
      s += "a" + std::to_string(i + 1) + " = " + ch.a[i].to_string(ch.space) + "\n";
    *text = dup(s);
    return COMMOP_OK;
  });
}

void commop_chain_free(commop_chain* chain) { delete chain; }

commop_status commop_curve_from_chain(const commop_chain* chain, commop_curve** out) {
  if (!chain) return null_arg("chain");
  if (!out) return null_arg("out");
  return guarded([&] {
    const SolvedChain& s = chain->solved;
    if (s.outcome.status == SolveStatus::infeasible)
      return fail(COMMOP_ERR_INFEASIBLE, "the chain constraints are infeasible");
    ZXPoly Q = assemble_q(s.chain, resolve_constants(s.outcome));
    *out = new commop_curve{spectral_curve(Q, chain->V, chain->W, s.chain.space), chain->space};
    return COMMOP_OK;
  });
}

commop_status commop_curve_degree(const commop_curve* curve, int* degree) {
  if (!curve) return null_arg("curve");
  if (!degree) return null_arg("degree");
  *degree = curve->value.F.degree();
  return COMMOP_OK;
}

commop_status commop_curve_render(const commop_curve* curve, char** text) {
  if (!curve) return null_arg("curve");
  if (!text) return null_arg("text");
  return guarded([&] {
    *text = dup(curve->value.to_string());
    return COMMOP_OK;
  });
}

commop_status commop_curve_coefficient(const commop_curve* curve, int power, char** text) {
  if (!curve) return null_arg("curve");
  if (!text) return null_arg("text");
  if (power < 0) return fail(COMMOP_ERR_INVALID_ARGUMENT, "negative power");
  return guarded([&] {
    *text = dup(curve->value.F.coefficient(static_cast<std::size_t>(power)).to_string(curve->value.space));
    return COMMOP_OK;
  });
}

commop_status commop_curve_is_singular(const commop_curve* curve, const char* bindings,
                                       int* singular) {
  if (!curve) return null_arg("curve");
  if (!singular) return null_arg("singular");
  return guarded([&] {
    std::map<std::size_t, Rat> b;
    std::string text = bindings ? bindings : "";
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string::npos) end = text.size();
      std::string item = text.substr(start, end - start);
      start = end + 1;
      if (item.find_first_not_of(" \t") == std::string::npos) continue;
      std::size_t eq = item.find('=');
      if (eq == std::string::npos)
        return fail(COMMOP_ERR_PARSE, "binding '" + item + "' is not NAME=value");
      b[curve->value.space.index(trimmed(item.substr(0, eq)))] =
          parse_rat(trimmed(item.substr(eq + 1)));
    }
    *singular = curve_is_singular(curve->value, b).singular ? 1 : 0;
    return COMMOP_OK;
  });
}

void commop_curve_free(commop_curve* curve) { delete curve; }

commop_status commop_run_job(const char* command, const char* document, char** report,
                             int* exit_status) {
  if (!command) return null_arg("command");
  if (!report) return null_arg("report");
  if (!exit_status) return null_arg("exit_status");
  return guarded([&] {
    JobResult r = run_job(command, document ? document : "");
    *report = dup(r.report);
    *exit_status = r.status;
    return COMMOP_OK;
  });
}

}  // extern "C"
