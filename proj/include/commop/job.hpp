#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace commop {

// Exit statuses shared by run_job, the C API and the command-line tool.
enum JobStatus : int { job_ok = 0, job_refuted = 1, job_input_error = 2 };

struct JobResult {
  int status = job_ok;
  std::string report;  // JSON document, newline terminated
};

// Commands: chain, curve, verdict, commutator, singular, scan, oracle-check.
//
// The input is a JSON object. Recognized keys:
//   params          "A6, A2" or ["A6", "A2"]; defaults to the family's symbols
//   family          {kind, g, n, admissible_m, w_degree, coefficients{sym: expr}}
//   V, W            x-polynomials (alternative to family)
//   L, M            operators for commutator
//   m               target degree (default: the family's g, else 1)
//   g_bound         degree bound for infeasibility claims (default 4)
//   bindings        {name: "p/q"} applied to the inputs before computing
//   free_constants  {"C1": expr} values for constants left free (default 0)
//   keep_symbolic   keep free constants symbolic in Q and F
//   structure       include the squarefree decomposition of F
//   expect          {status, singular, claim_holds}; a mismatch exits 1
//   scan            {g: [...], m: [...], m_offsets: [...], bindings: [{...}]}
//   oracle          {seed, count, k_max}
//
// Identical inputs give byte-identical reports. Malformed input yields status
// job_input_error and a message naming the offending location.
JobResult run_job(std::string_view command, std::string_view document);

const std::vector<std::string>& job_commands();

}  // namespace commop
