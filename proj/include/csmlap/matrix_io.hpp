#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "csmlap/matrix.hpp"

namespace csmlap {

struct MatrixParseError : std::runtime_error {
  explicit MatrixParseError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix file format:
//   ring <integer|rational|mod:m|poly:x1,x2,...>
//   rows <labels>
//   cols <labels>
//   <one line of whitespace-separated entry literals per row>
// Blank lines and lines starting with '#' are skipped.
LabeledMatrix read_matrix(std::istream& in);
LabeledMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const LabeledMatrix& a);
std::string matrix_file_text(const LabeledMatrix& a);

// Aligned grid with row/column labels, for reports.
std::string matrix_grid(const LabeledMatrix& a);

}  // namespace csmlap
