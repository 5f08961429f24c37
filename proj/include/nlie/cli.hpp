#pragma once

// Batch front-end: input documents, commands and reports.

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include "nlie/representation.hpp"

namespace nlie::cli {

enum ExitCode { kPass = 0, kViolation = 1, kInputError = 2 };

struct InputDocument {
  std::shared_ptr<NLieAlgebra> algebra;
  std::optional<GeneralizedRepresentation> rep;  // present iff "rep" or "theta" was given
  bool has_rep = false;
  bool has_theta = false;
};

/// Parses the versioned JSON schema. Throws InputError with a diagnostic
/// naming the offending field (e.g. "brackets[1].args: non-increasing
/// bracket key") or the parser's line and column.
InputDocument parse_input(const std::string& text);
InputDocument parse_input_file(const std::string& path);

/// Writes a document in the same schema; omitted entries are zero.
std::string write_input(const NLieAlgebra& algebra, const GeneralizedRepresentation* rep);

/// Runs one command line. The human-readable summary goes to `out`,
/// diagnostics to `err`; the JSON report goes to --out when given.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nlie::cli
