#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "fixcirc/contractions.hpp"
#include "fixcirc/metric_space.hpp"

namespace fixcirc {

/// A parsed problem instance: one space, one total multivalued map, and
/// (for the built-ins) an explicit radius list for circle enumeration on
/// coordinate geometry.
struct Instance {
  MetricSpace space;
  MultivaluedMap map;
  std::string name;
  std::vector<double> circle_radii;  // empty = none attached

  bool has_radii() const { return !circle_radii.empty(); }
};

/// Instance file schema (JSON):
///   kind      "matrix" | "complex"
///   points    matrix: array of labels; complex: object label -> [re, im]
///   distances matrix kind only: row-major array of n*n numbers
///   map       object label -> nonempty array of labels
///   meta      optional object, free-form name/notes
/// Schema problems throw SchemaError; metric-axiom failures throw
/// MetricAxiomError naming the offending triple.
Instance parse_instance(const std::filesystem::path& path);
Instance parse_instance_text(std::string_view text, std::string name);

/// "example1" (interval-plus-chain, truncation n <= 20), "example2"
/// (complex-plane ring sample), "example3" (same instance as example2;
/// the canned reproduction checks the Ciric class on it).
bool is_builtin_instance(std::string_view id);
Instance builtin_instance(std::string_view id);
Instance builtin_example1(int n_max);

/// Builtin name or a file path.
Instance load_instance(std::string_view path_or_builtin);

}  // namespace fixcirc
