#pragma once

#include <string>
#include <vector>

#include "lclt/gfparse.hpp"

namespace lclt {

/// A shipped example family with its parameters.
struct ExampleSpec {
  /// permutations, strings, compositions, compositions_restricted, ncolour, tutte_wheel
  std::string family;
  long d = 1;
  /// Alphabet size for strings.
  long l = 2;
  /// Tracked summands for compositions_restricted (defaults to 1..d).
  std::vector<long> omega;
  /// Allowed summands for compositions_restricted (empty: every positive integer).
  std::vector<long> lambda;
  /// Permutations only: substitute z1 := 1.
  bool set_z1 = true;
};

/// The generating function of an example as an expression string.
std::string example_expression(const ExampleSpec& spec);

/// Parsed example. Throws InvalidArgument for unknown families or bad parameters.
RationalGF build_example(const ExampleSpec& spec);

const std::vector<std::string>& example_families();

/// Human-readable catalog of the shipped families.
std::string list_examples();

}  // namespace lclt
