#include <unistd.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "commop/commop.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kInputError = 2;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  out.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  return true;
}

// NAME=value pairs into an object, failing on a missing '='.
bool add_pairs(json& target, const std::vector<std::string>& items, const char* flag) {
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      std::cerr << "error: " << flag << " expects NAME=value, got '" << item << "'\n";
      return false;
    }
    target[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting differential operators: chains, spectral curves and verdicts"};
  app.set_version_flag("--version", std::string(commop_version()));

  std::string command;
  std::string in_path, out_path, golden_path;
  std::string params, family, V, W, L, M;
  std::vector<std::string> binds, free_consts, coefs;
  int g = 0, m = 0, g_bound = 0, n = 0;
  bool structure = false, keep_symbolic = false;

  app.add_option("command", command, "chain, curve, verdict, commutator, singular, scan, oracle-check")
      ->required()
      ->check(CLI::IsMember({"chain", "curve", "verdict", "commutator", "singular", "scan",
                             "oracle-check"}));
  app.add_option("--in", in_path, "input document (JSON); '-' for standard input");
  app.add_option("--out", out_path, "write the report here instead of standard output");
  app.add_option("--golden", golden_path, "compare the report with this file; mismatch exits 1");
  app.add_option("--params", params, "parameter declarations, e.g. \"A6, A2\"");
  app.add_option("--bind", binds, "bind a parameter: NAME=p/q (repeatable)");
  app.add_option("--free-const", free_consts, "value for a free chain constant: C1=p/q");
  app.add_option("--family", family, "thm1, thm2, thm3, mironov_x3, dixmier_rank2, dixmier_rank3");
  app.add_option("--coef", coefs, "family coefficient: SYMBOL=expression (repeatable)");
  app.add_option("--g", g, "family genus g")->check(CLI::PositiveNumber);
  app.add_option("--n", n, "thm3 exponent n")->check(CLI::PositiveNumber);
  app.add_option("--m", m, "target degree m")->check(CLI::PositiveNumber);
  app.add_option("--g-bound", g_bound, "degree bound for infeasibility claims")
      ->check(CLI::PositiveNumber);
  app.add_option("--V", V, "potential V(x)");
  app.add_option("--W", W, "perturbation W(x)");
  app.add_option("--L", L, "operator L for commutator");
  app.add_option("--M", M, "operator M for commutator");
  app.add_flag("--structure", structure, "include the squarefree decomposition of F");
  app.add_flag("--keep-symbolic", keep_symbolic, "keep free chain constants symbolic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  std::string text;
  const bool from_flags = !family.empty() || !V.empty() || !W.empty() || !L.empty() || !M.empty();
  if (in_path == "-" || (in_path.empty() && !from_flags && !isatty(STDIN_FILENO))) {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else if (!in_path.empty() && !read_file(in_path, text)) {
    std::cerr << "error: cannot read '" << in_path << "'\n";
    return kInputError;
  }

  json doc = json::object();
  if (text.find_first_not_of(" \t\r\n") != std::string::npos) {
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      std::cerr << "error: " << (in_path.empty() ? "<stdin>" : in_path) << ": at byte " << e.byte
                << ": malformed document\n";
      return kInputError;
    }
    if (!doc.is_object()) {
      std::cerr << "error: the input document must be a JSON object\n";
      return kInputError;
    }
  }

  if (!params.empty()) doc["params"] = params;
  if (!family.empty() || n > 0 || g > 0 || !coefs.empty()) {
    if (doc.contains("family") && doc["family"].is_string())
      doc["family"] = json{{"kind", doc["family"]}};
    json& fam = doc["family"];
    if (!family.empty()) fam["kind"] = family;
    if (g > 0) fam["g"] = g;
    if (n > 0) fam["n"] = n;
    if (!coefs.empty() && !add_pairs(fam["coefficients"], coefs, "--coef")) return kInputError;
  }
  if (!V.empty()) doc["V"] = V;
  if (!W.empty()) doc["W"] = W;
  if (!L.empty()) doc["L"] = L;
  if (!M.empty()) doc["M"] = M;
  if (m > 0) doc["m"] = m;
  if (g_bound > 0) doc["g_bound"] = g_bound;
  if (structure) doc["structure"] = true;
  if (keep_symbolic) doc["keep_symbolic"] = true;
  if (!binds.empty() && !add_pairs(doc["bindings"], binds, "--bind")) return kInputError;
  if (!free_consts.empty() && !add_pairs(doc["free_constants"], free_consts, "--free-const"))
    return kInputError;

  char* report = nullptr;
  int status = 0;
  if (commop_run_job(command.c_str(), doc.dump().c_str(), &report, &status) != COMMOP_OK) {
    std::cerr << "error: " << commop_last_error() << "\n";
    return kInputError;
  }
  std::string out(report);
  commop_string_free(report);

  if (status == kInputError) {
    try {
      std::cerr << "error: " << json::parse(out)["error"]["message"].get<std::string>() << "\n";
    } catch (const json::exception&) {
    }
  }

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!(f << out)) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kInputError;
    }
  } else if (golden_path.empty()) {
    std::cout << out;
  }

  if (!golden_path.empty()) {
    std::string expected;
    if (!read_file(golden_path, expected)) {
      std::cerr << "error: cannot read golden file '" << golden_path << "'\n";
      return kInputError;
    }
    if (expected != out) {
      std::cerr << "golden mismatch: " << golden_path << "\n";
      return 1;
    }
  }
  return status;
}
