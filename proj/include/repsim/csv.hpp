#pragma once

#include <istream>
#include <string>

#include "repsim/linalg.hpp"

namespace repsim {

/// Reads a plain numeric CSV matrix: rows are conditions, columns are units,
/// '.' decimal separator, no header row. Lines starting with '#' and blank
/// lines are skipped. Raises DataError (with line/column context) on
/// non-numeric cells, ragged rows, or an empty file.
Matrix read_matrix_csv(const std::string& path);
Matrix read_matrix_csv(std::istream& in, const std::string& origin = "<stream>");

}  // namespace repsim
