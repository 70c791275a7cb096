#include "gmew/matrix_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>

#include <json.hpp>

#include "gmew/parse.hpp"
#include "gmew/states.hpp"

namespace gmew {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ShapedMatrix three_qutrit(ComplexMatrix m) { return {SpaceShape({3, 3, 3}), std::move(m)}; }

}  // namespace

void write_matrix_json(std::ostream& out, const ShapedMatrix& m) {
  out << "{\"dims\": [";
  const auto& dims = m.shape.dims();
  for (std::size_t k = 0; k < dims.size(); ++k) out << (k ? ", " : "") << dims[k];
  out << "], \"matrix\": [";
  const std::size_t n = m.matrix.dim();
  for (std::size_t i = 0; i < n; ++i) {
    out << (i ? ",\n  [" : "\n  [");
    for (std::size_t j = 0; j < n; ++j) {
      const auto z = m.matrix(i, j);
      out << (j ? ", [" : "[") << format_double(z.real()) << ", " << format_double(z.imag()) << "]";
    }
    out << "]";
  }
  out << "\n]}\n";
}

void write_matrix_json(const std::filesystem::path& path, const ShapedMatrix& m) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open '" + path.string() + "' for writing");
  write_matrix_json(out, m);
}

ShapedMatrix read_matrix_json(std::istream& in, bool require_hermitian_matrix, const std::string& source) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(source + ": malformed JSON: " + e.what());
  }
  if (!doc.is_object()) throw ParseError(source + ": top level must be an object");
  if (!doc.contains("dims") || !doc["dims"].is_array()) throw ParseError(source + ": missing array field 'dims'");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
    throw ParseError(source + ": missing array field 'matrix'");
  }

  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < doc["dims"].size(); ++k) {
    const auto& d = doc["dims"][k];
    if (!d.is_number_unsigned() || d.get<std::size_t>() < 2) {
      throw ParseError(source + ": dims[" + std::to_string(k) + "] must be an integer >= 2");
    }
    dims.push_back(d.get<std::size_t>());
  }
  if (dims.empty()) throw ParseError(source + ": 'dims' must not be empty");
  SpaceShape shape(std::move(dims));

  const auto& rows = doc["matrix"];
  const std::size_t n = shape.total_dim();
  if (rows.size() != n) {
    throw ParseError(source + ": 'matrix' has " + std::to_string(rows.size()) + " rows, dims imply " +
                     std::to_string(n));
  }
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      throw ParseError(source + ": matrix row " + std::to_string(i) + " must be an array of " + std::to_string(n) +
                       " entries");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const auto& z = row[j];
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw ParseError(source + ": matrix[" + std::to_string(i) + "][" + std::to_string(j) +
                         "] must be [re, im]");
      }
      m(i, j) = Complex{z[0].get<double>(), z[1].get<double>()};
    }
  }
  if (require_hermitian_matrix) require_hermitian(m);
  return {std::move(shape), std::move(m)};
}

ShapedMatrix read_matrix_json(const std::filesystem::path& path, bool require_hermitian_matrix) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return read_matrix_json(in, require_hermitian_matrix, path.string());
}

ShapedMatrix resolve_state(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto numbers = [&](std::size_t count) {
    const auto v = parse_number_list(args);
    if (v.size() != count) {
      throw ParseError("state '" + std::string(spec) + "' expects " + std::to_string(count) + " parameters");
    }
    return v;
  };

  if (colon != std::string_view::npos) {
    if (name == "ghz") {
      const auto parts = split(args, ',');
      if (parts.size() != 2) throw ParseError("state '" + std::string(spec) + "' expects ghz:n,d");
      const std::size_t n = parse_count(parts[0]), d = parse_count(parts[1]);
      if (n < 2 || d < 2) throw ParseError("state '" + std::string(spec) + "': need n >= 2 and d >= 2");
      return {SpaceShape(std::vector<std::size_t>(n, d)), ComplexMatrix::projector(ghz(n, d))};
    }
    if (name == "rho-lambda") {
      const double lambda = numbers(1)[0];
      if (!(lambda > 0)) throw ParseError("state '" + std::string(spec) + "': lambda must be positive");
      return three_qutrit(rho_lambda(lambda));
    }
    if (name == "noise") {
      const auto v = numbers(2);
      if (!(v[1] > 0)) throw ParseError("state '" + std::string(spec) + "': lambda must be positive");
      if (v[0] < 0 || v[0] > 1) throw ParseError("state '" + std::string(spec) + "': p must lie in [0, 1]");
      return three_qutrit(add_white_noise(rho_lambda(v[1]), v[0]));
    }
    if (name == "two-param") {
      const auto v = numbers(2);
      if (v[0] < 0 || v[1] < 0 || v[0] + v[1] > 1.0 + 1e-12) {
        throw ParseError("state '" + std::string(spec) + "': need p, q >= 0 and p + q <= 1");
      }
      return three_qutrit(two_param_family(v[0], v[1]));
    }
  }
  return read_matrix_json(std::filesystem::path(std::string(spec)), true);
}

}  // namespace gmew
