#ifndef VLA_ERRORS_HPP
#define VLA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vla {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

/// Base of the classification-pipeline errors.  `exit_code` is the code the
/// CLI maps the failure to; `stage` names the pipeline stage that rejected
/// the input.
struct ClassificationError : Error {
  ClassificationError(int code, std::string stage_name, const std::string& msg)
      : Error(msg), exit_code(code), stage(std::move(stage_name)) {}
  int exit_code;
  std::string stage;
};

struct BracketAuditError : ClassificationError {
  explicit BracketAuditError(const std::string& msg)
      : ClassificationError(1, "bracket-audit", msg) {}
};

struct NonScalarTauError : ClassificationError {
  explicit NonScalarTauError(const std::string& msg)
      : ClassificationError(2, "tau-extraction", msg) {}
};

struct NotSl2TripleError : ClassificationError {
  explicit NotSl2TripleError(const std::string& msg)
      : ClassificationError(3, "sl2-extraction", msg) {}
};

struct NotIrreducibleError : ClassificationError {
  explicit NotIrreducibleError(const std::string& msg)
      : ClassificationError(4, "irreducibility", msg) {}
};

/// H fails to be diagonalizable over the rationals with integer eigenvalues.
/// Grouped with the irreducibility failures for CLI exit-code purposes.
struct NotSemisimpleHError : ClassificationError {
  explicit NotSemisimpleHError(const std::string& msg)
      : ClassificationError(4, "h-spectrum", msg) {}
};

struct NotLarssonShenError : ClassificationError {
  explicit NotLarssonShenError(const std::string& msg)
      : ClassificationError(5, "quadratic-form-audit", msg) {}
};

struct NonUnimodularError : Error {
  using Error::Error;
};

}  // namespace vla

#endif
