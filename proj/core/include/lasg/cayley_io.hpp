#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lasg/magma.hpp"

namespace lasg {

// Cayley text format:
//   line 1      order n
//   line 2      n whitespace-separated labels
//   next n      rows of n labels; row i lists label_i . label_j for each j
// Lines starting with '#' and blank lines are ignored.
//
// Throws ParseError (duplicate labels, ragged rows, unknown labels, order 0,
// order above Magma::max_order, trailing content).
Magma parse_cayley(std::string_view text);

// Canonical text, no trailing newline: parse_cayley(serialize_cayley(m)) == m.
std::string serialize_cayley(const Magma& m);

// Model stream: Cayley blocks separated by lines consisting of "%", with an
// optional trailing "count: N" line. A single plain Cayley file is a stream
// of one model.
std::vector<Magma> parse_model_stream(std::string_view text);

// Separator line between models in a stream.
inline constexpr std::string_view stream_separator = "%";

}  // namespace lasg
