#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "gmew/matrix.hpp"
#include "gmew/multipartite.hpp"

namespace gmew {

/// A matrix together with the party dimensions it lives on.
struct ShapedMatrix {
  SpaceShape shape;
  ComplexMatrix matrix;
};

/// JSON layout:
///   {"dims": [d1, ..., dn], "matrix": [[[re, im], ...], ...]}
/// Numbers are written with 17 significant digits so values round-trip exactly.
void write_matrix_json(std::ostream& out, const ShapedMatrix& m);
void write_matrix_json(const std::filesystem::path& path, const ShapedMatrix& m);

/// Parses the layout above; errors name the offending field. When `require_hermitian_matrix`
/// is set, a non-Hermitian matrix is rejected with the offending entry pair.
ShapedMatrix read_matrix_json(std::istream& in, bool require_hermitian_matrix, const std::string& source = "<input>");
ShapedMatrix read_matrix_json(const std::filesystem::path& path, bool require_hermitian_matrix);

/// State specifier: `ghz:n,d`, `rho-lambda:L`, `noise:p,L`, `two-param:p,q`, or a JSON file path.
ShapedMatrix resolve_state(std::string_view spec);

}  // namespace gmew
