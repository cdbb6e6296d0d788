#pragma once

// Reading and writing form files.
//
// Text layout (blank lines and '#' comments ignored):
//
//   flavor: supersymmetric        # or: skew
//   k: 1
//   ell: 1
//   B:
//   1 0
//
// `B` is the even x odd coupling block, so it is k x 2l for the
// supersymmetric flavor and 2l x k for the skew one.  Optional sections
// `even_block:` and `odd_block:` follow the same row layout.  Entries are
// whitespace separated scalars ("1", "-1/2*i", "1+i").  A document whose
// first non-blank character is '{' is read as JSON with the same keys, each
// matrix a list of rows of scalar strings.

#include <filesystem>
#include <string>
#include <string_view>

#include "superform/matrix.hpp"
#include "superform/superspace.hpp"

namespace superform {

/// Throws InputError with "<source>:line:column: message" diagnostics.
GramForm parse_form(std::string_view content, const std::string& source = "<input>");
GramForm load_form(const std::filesystem::path& path);

std::string format_form_text(const GramForm& g);
std::string format_form_json(const GramForm& g);

std::string format_matrix(const Matrix<Exact>& m, const std::string& indent = "");
std::string format_matrix(const Matrix<Approx>& m, const std::string& indent = "");

}  // namespace superform
