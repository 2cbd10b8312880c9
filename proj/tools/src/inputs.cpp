#include "gsw/cli/inputs.hpp"

#include <charconv>
#include <fstream>
#include <optional>

#include "gsw/error.hpp"

namespace gsw::cli {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto at = s.find(sep);
    out.push_back(s.substr(0, at));
    if (at == std::string_view::npos) return out;
    s.remove_prefix(at + 1);
  }
}

template <class Int>
Int to_int(std::string_view s, std::string_view what) {
  Int v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw InvalidInput(std::string(what) + ": expected an integer, got '" + std::string(s) + "'");
  }
  return v;
}

void require_prime(unsigned p, std::string_view what) {
  if (!is_prime(p)) throw InvalidInput(std::string(what) + ": p = " + std::to_string(p) + " is not prime");
}

GradedAlgebra build_part(BuiltinPart& part, std::string_view text) {
  try {
    if (part.kind == "witt") return witt(part.p);
    if (part.kind == "tpoly") return truncated_poly(part.p, part.N, part.m);
    if (part.kind == "dpow") return divided_power(part.p, part.N, part.m);
    return torus_line(part.p, part.m);
  } catch (const InvalidInput& e) {
    throw InvalidInput("builtin '" + std::string(text) + "': " + e.what());
  }
}

const nlohmann::json& key(const nlohmann::json& j, const char* name) {
  if (!j.contains(name)) throw InvalidInput(std::string("algebra JSON: missing key '") + name + "'");
  return j.at(name);
}

unsigned uint_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InvalidInput("algebra JSON: " + where + " must be a non-negative integer");
  return j.get<unsigned>();
}

FqElement element_at(const Fq& F, const nlohmann::json& j, const std::string& where) {
  if (!j.is_string()) throw InvalidInput(where + " must be a digit string such as \"1,0\"");
  try {
    return F.parse(j.get<std::string>());
  } catch (const InvalidInput& e) {
    throw InvalidInput(where + ": " + e.what());
  }
}

}  // namespace

Builtin parse_builtin(std::string_view spec) {
  if (spec.empty()) throw InvalidInput("empty builtin spec");
  std::vector<BuiltinPart> parts;
  std::vector<bool> line_needs_m;
  for (const auto piece : split(spec, '+')) {
    const auto f = split(piece, ':');
    BuiltinPart part;
    part.kind = std::string(f[0]);
    const std::string where = "builtin '" + std::string(piece) + "'";
    bool needs_m = false;
    if (part.kind == "witt" && f.size() == 2) {
      part.p = to_int<unsigned>(f[1], where);
      part.m = part.N = part.p;
    } else if ((part.kind == "tpoly" || part.kind == "dpow") && f.size() == 4) {
      part.p = to_int<unsigned>(f[1], where);
      part.N = to_int<unsigned>(f[2], where);
      part.m = to_int<unsigned>(f[3], where);
    } else if (part.kind == "line" && (f.size() == 2 || f.size() == 3)) {
      part.p = to_int<unsigned>(f[1], where);
      part.N = 1;
      needs_m = f.size() == 2;
      part.m = needs_m ? part.p : to_int<unsigned>(f[2], where);
    } else {
      throw InvalidInput(where + ": expected witt:p, tpoly:p:N:m, dpow:p:N:m or line:p[:m]");
    }
    require_prime(part.p, where);
    if (part.m == 0) throw InvalidInput(where + ": m must be positive");
    parts.push_back(part);
    line_needs_m.push_back(needs_m);
  }
  std::optional<unsigned> m;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (!line_needs_m[i]) m = m.value_or(parts[i].m);
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (line_needs_m[i] && m) parts[i].m = *m;
    if (parts[i].p != parts[0].p) throw InvalidInput("builtin summands must share p");
    if (parts[i].m != parts[0].m) throw InvalidInput("builtin summands must share the grading modulus m");
  }
  const auto pieces = split(spec, '+');
  std::optional<GradedAlgebra> acc;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    GradedAlgebra a = build_part(parts[i], pieces[i]);
    parts[i].offset = offset;
    parts[i].dim = a.dim();
    offset += a.dim();
    acc = acc ? direct_sum(*acc, a) : a;
  }
  return Builtin{std::string(spec), parts, *acc};
}

GradedAlgebra algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw InvalidInput("algebra JSON: top level must be an object");
  const unsigned p = uint_at(key(j, "p"), "p");
  require_prime(p, "algebra JSON");
  const unsigned n = uint_at(key(j, "field_degree"), "field_degree");
  if (n == 0) throw InvalidInput("algebra JSON: field_degree must be positive");
  const std::size_t dim = uint_at(key(j, "dim"), "dim");
  if (dim == 0) throw InvalidInput("algebra JSON: dim must be positive");
  const unsigned m = uint_at(key(j, "m"), "m");
  if (m == 0) throw InvalidInput("algebra JSON: m must be positive");
  const Fq F = Fq::extension(p, n);

  const auto& deg = key(j, "deg");
  if (!deg.is_array() || deg.size() != dim) throw InvalidInput("algebra JSON: deg must be an array of length dim");
  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < dim; ++i) {
    const unsigned d = uint_at(deg[i], "deg[" + std::to_string(i) + "]");
    if (d >= m) throw InvalidInput("algebra JSON: deg[" + std::to_string(i) + "] must be below m");
    degrees.push_back(d);
  }

  const auto& sc = key(j, "sc");
  if (!sc.is_array()) throw InvalidInput("algebra JSON: sc must be an array");
  std::vector<StructureConstant> constants;
  for (std::size_t t = 0; t < sc.size(); ++t) {
    const std::string where = "algebra JSON: sc[" + std::to_string(t) + "]";
    const auto& row = sc[t];
    if (!row.is_array() || row.size() != 4) throw InvalidInput(where + " must be [i, j, k, \"digits\"]");
    StructureConstant c;
    c.i = uint_at(row[0], where + "[0]");
    c.j = uint_at(row[1], where + "[1]");
    c.k = uint_at(row[2], where + "[2]");
    if (c.i >= dim || c.j >= dim || c.k >= dim) throw InvalidInput(where + ": index out of range");
    c.c = element_at(F, row[3], where + "[3]");
    constants.push_back(c);
  }

  GradedAlgebra A(F, dim, m, degrees, constants, "json");
  if (j.contains("pmap")) {
    const auto& pm = j.at("pmap");
    if (!pm.is_array()) throw InvalidInput("algebra JSON: pmap must be an array");
    for (std::size_t t = 0; t < pm.size(); ++t) {
      const std::string where = "algebra JSON: pmap[" + std::to_string(t) + "]";
      const auto& row = pm[t];
      if (!row.is_array() || row.size() != 2 || !row[1].is_array() || row[1].size() != dim) {
        throw InvalidInput(where + " must be [i, [dim digit strings]]");
      }
      const std::size_t i = uint_at(row[0], where + "[0]");
      if (i >= dim) throw InvalidInput(where + ": index out of range");
      Vector v;
      for (std::size_t k = 0; k < dim; ++k) v.push_back(element_at(F, row[1][k], where + "[1][" + std::to_string(k) + "]"));
      A.set_pmap(i, v);
    }
  }
  return A;
}

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

GradedAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_json(path)); }

Matrix matrix_from_json(const nlohmann::json& j, const Fq& field, std::size_t n) {
  const auto& rows = j.is_object() && j.contains("matrix") ? j.at("matrix") : j;
  if (!rows.is_array() || rows.size() != n) {
    throw InvalidInput("derivation JSON: expected " + std::to_string(n) + " rows");
  }
  Matrix M(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      throw InvalidInput("derivation JSON: row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    }
    for (std::size_t k = 0; k < n; ++k) {
      M(i, k) = element_at(field, rows[i][k], "derivation JSON: [" + std::to_string(i) + "][" + std::to_string(k) + "]");
    }
  }
  return M;
}

Matrix parse_derivation(std::string_view spec, const GradedAlgebra& A, const Builtin* builtin) {
  auto single = [&](const char* kind) {
    if (!builtin || builtin->parts.size() != 1 || builtin->parts[0].kind != kind) {
      throw InvalidInput("derivation '" + std::string(spec) + "' needs a single " + kind + " builtin");
    }
  };
  if (spec.starts_with("ad:")) {
    const auto i = to_int<std::size_t>(spec.substr(3), "derivation");
    if (i >= A.dim()) throw InvalidInput("derivation: basis index " + std::to_string(i) + " out of range");
    return A.ad(i);
  }
  if (spec == "ddx" || spec == "xddx") {
    single("tpoly");
    return spec == "ddx" ? d_dx(A) : x_d_dx(A);
  }
  if (spec == "dd") {
    single("dpow");
    return divided_d(A);
  }
  if (spec == "zero") return Matrix(A.field(), A.dim(), A.dim());
  if (spec.starts_with("@")) {
    const std::string path(spec.substr(1));
    return matrix_from_json(read_json(path), A.field(), A.dim());
  }
  throw InvalidInput("derivation '" + std::string(spec) + "': expected ad:i, ddx, xddx, dd, zero or @file.json");
}

namespace {

Vector parse_basis_element(std::string_view spec, const Builtin& builtin) {
  const auto& A = builtin.algebra;
  if (spec.starts_with("b:")) {
    const auto i = to_int<std::size_t>(spec.substr(2), "element");
    if (i >= A.dim()) throw InvalidInput("element: basis index " + std::to_string(i) + " out of range");
    return A.basis_vector(i);
  }
  if (spec.starts_with("e:")) {
    const auto j = to_int<long>(spec.substr(2), "element");
    for (const auto& part : builtin.parts) {
      if (part.kind != "witt") continue;
      if (j < -1 || j > static_cast<long>(part.p) - 2) {
        throw InvalidInput("element: e_" + std::to_string(j) + " is not a Witt basis vector");
      }
      return A.basis_vector(part.offset + static_cast<std::size_t>(j + 1));
    }
    throw InvalidInput("element 'e:j' needs a witt summand");
  }
  throw InvalidInput("element '" + std::string(spec) + "': expected e:j or b:i");
}

}  // namespace

Vector parse_element(std::string_view spec, const Builtin& builtin) {
  const Fq& F = builtin.algebra.field();
  Vector acc = zero_vector(F, builtin.algebra.dim());
  for (const auto term : split(spec, '+')) acc = add(F, acc, parse_basis_element(term, builtin));
  return acc;
}

std::vector<Vector> toral_basis(const GradedAlgebra& A) {
  std::vector<Vector> out;
  for (const auto& [i, v] : A.pmap()) {
    if (v == A.basis_vector(i)) out.push_back(v);
  }
  return out;
}

}  // namespace gsw::cli
