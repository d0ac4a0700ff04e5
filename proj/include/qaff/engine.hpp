#pragma once
/*
 * Command engine behind the command-line front end.  A request names one
 * command (braid, symalg, relations, coproduct, antipode, translation,
 * sigma, curvature, upsilon, gamma, translaton, verify) plus string
 * parameters; the engine dispatches into the library modules and renders a
 * deterministic report.
 *
 * Common parameters: "mu" ("sym" or a nonzero rational "p/q"), "max-degree"
 * (sweep bound), "format" ("json" or "csv"), "no-meta" (any value: drop the
 * timing block so identical invocations are byte-identical).  Command
 * parameters: "expr" (element expression), "p"/"q" (curvature word shape),
 * "levels" (upsilon sweep), "suite" (verify selector), "candidate"
 * (translaton selector), "theta"/"phi" (braiding inputs), "n" (translation
 * group exponent).
 *
 * JSON reports follow the fixed field order {command, mu, params, results,
 * checks, schema, meta?} with schema tag "qaff/1"; checks carry a witness
 * only on failure.  CSV reports render the command's natural table with a
 * header row.  Errors always render as JSON with an "error" object.
 *
 * Status: 0 every check passed, 1 some check failed, 2 usage error
 * (unknown command or parameter, malformed value, expression syntax
 * error), 3 computation error.
 */

#include <map>
#include <string>
#include <vector>

namespace qaff {

struct RunRequest {
  std::string command;
  std::map<std::string, std::string> params;
};

struct RunResult {
  int status = 0;
  std::string output;  // newline-terminated rendered report
};

// Command names accepted by runCommand, in documentation order.
const std::vector<std::string>& engineCommands();

// Never throws; failures are encoded in the status and the report body.
RunResult runCommand(const RunRequest& req);

}  // namespace qaff
