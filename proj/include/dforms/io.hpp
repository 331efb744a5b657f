#pragma once

#include <iosfwd>
#include <string>

#include "dforms/composition.hpp"

namespace dforms {

// Line-oriented text form of a DoubleForm:
//   n p q mode
//   i1,..,ip | j1,..,jq | value
// with an empty index field for degree 0, `num/den` values in exact mode and
// decimal in float mode. Exact round trips are lossless.
void write_double_form(std::ostream& os, const DoubleForm& f);
DoubleForm read_double_form(std::istream& is);
// Continues an enclosing parse: `line` counts consumed lines across calls so
// errors report file positions.
DoubleForm read_double_form(std::istream& is, int& line);

std::string to_text(const DoubleForm& f);
DoubleForm from_text(const std::string& text);

void save_double_form(const DoubleForm& f, const std::string& path);
DoubleForm load_double_form(const std::string& path);

// DecompositionResult as a list of `component <i>` headed blocks.
void write_decomposition(std::ostream& os, const DecompositionResult& d);
DecompositionResult read_decomposition(std::istream& is);

// Error type carrying the 1-based line number of the offending input line.
struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_number(line) {}
  int line_number;
};

}  // namespace dforms
