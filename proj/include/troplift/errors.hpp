#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace troplift {

enum class ErrorKind {
  Parse,
  DimensionMismatch,
  EmptyInput,
  NotPointed,
  NotCompactifying,
  NonPositiveEps,
  DegenerateInput,
  NotTransverse,
  NotAdmissible,
  FanMismatch,
  PreconditionFailed,
  UnsupportedDimension,
  InternalCheck,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Outcome of a predicate that either holds or comes with a counterexample.
template <class Witness> struct Verdict {
  std::optional<Witness> counterexample;

  static Verdict yes() { return {}; }
  static Verdict no(Witness w) { return Verdict{std::move(w)}; }

  bool holds() const { return !counterexample.has_value(); }
  explicit operator bool() const { return holds(); }
};

} // namespace troplift
