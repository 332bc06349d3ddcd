#pragma once

#include <stdexcept>
#include <string>

namespace fixcirc {

// Error taxonomy mirrors the CLI exit codes: schema/usage problems are
// distinguishable from metric-axiom failures, which get their own code.

// Malformed input: bad JSON shape, non-square matrix, dangling labels, ...
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside an operation's domain (empty set, alpha <= 0, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Value falls outside a sampled function's grid hull; checkers abort
// rather than extrapolate.
class RangeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameter combination (e.g. circle enumeration on coordinate
// geometry without a radius list, count < 1).
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A space failed the metric axioms; message carries the offending triple.
class MetricAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fixcirc
