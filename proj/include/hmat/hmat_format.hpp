#pragma once

#include <string>
#include <string_view>

#include "hmat/sign_matrix.hpp"

namespace hmat {

// HMAT text format:
//   - optional comment lines starting with '#' (before the header)
//   - a header line "HMAT <rows> <cols>"
//   - exactly <rows> lines of exactly <cols> characters from {+, -}
// Anything else is rejected with a ParseError carrying the 1-based
// line number.

std::string to_hmat(const SignMatrix& m);

SignMatrix parse_hmat(std::string_view text);

SignMatrix read_hmat_file(const std::string& path);

void write_hmat_file(const std::string& path, const SignMatrix& m);

}  // namespace hmat
