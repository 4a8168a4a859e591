#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "dft.hpp"
#include "error.hpp"
#include "group.hpp"
#include "group_ring.hpp"
#include "join.hpp"
#include "matrix.hpp"
#include "scalar.hpp"

namespace joinring {

using Json = nlohmann::ordered_json;

// Complex parts are emitted with 12 significant digits.
inline double round_significant(double x) {
  if (!std::isfinite(x)) throw numeric_error("non-finite value in output");
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

inline Json scalar_to_json(const Fp& x) { return x.value(); }
inline Json scalar_to_json(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}
inline Json scalar_to_json(const Cplx& x) {
  return Json::array({round_significant(x.real()), round_significant(x.imag())});
}

template <typename T>
T scalar_from_json(const Json& j, const T& like) {
  if constexpr (std::is_same_v<T, Fp>) {
    if (!j.is_number_integer()) throw input_error("prime field entry must be an integer");
    return Fp(j.get<std::int64_t>(), like.modulus());
  } else if constexpr (std::is_same_v<T, Rational>) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
    if (!j.is_string()) throw input_error("rational entry must be a 'num/den' string");
    try {
      Rational q(j.get<std::string>());
      if (q.get_den() == 0) throw input_error("rational with zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw input_error("unparsable rational '" + j.get<std::string>() + "'");
    }
  } else {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
      throw input_error("complex entry must be a [re, im] pair");
    return Cplx(j[0].get<double>(), j[1].get<double>());
  }
}

template <typename T>
Json matrix_to_json(const Matrix<T>& m) {
  if (m.empty()) throw input_error("cannot serialize an empty matrix");
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) entries.push_back(scalar_to_json(m(i, j)));
  return Json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", scalar_traits<T>::field(m.like()).to_string()},
              {"entries", std::move(entries)}};
}

inline FieldSpec field_of_json(const Json& j) {
  if (!j.contains("field") || !j["field"].is_string())
    throw input_error("missing 'field' string");
  return FieldSpec::parse(j["field"].get<std::string>());
}

template <typename T>
Matrix<T> matrix_from_json(const Json& j, const T& like) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw input_error("matrix object needs rows, cols, field, entries");
  if (!(field_of_json(j) == scalar_traits<T>::field(like)))
    throw input_error("matrix field does not match the requested field");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) throw input_error("matrix must be nonempty");
  const Json& entries = j["entries"];
  if (!entries.is_array() || entries.size() != rows * cols)
    throw input_error("matrix entry count mismatch");
  Matrix<T> m = Matrix<T>::zero(rows, cols, like);
  std::size_t at = 0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t jj = 0; jj < cols; ++jj) m(i, jj) = scalar_from_json<T>(entries[at++], like);
  return m;
}

inline Json group_to_json(const Group& g) {
  if (g.kind() == "cyclic" || g.kind() == "dihedral" || g.kind() == "symmetric")
    return Json{{"kind", g.kind()}, {"n", g.param()}};
  Json table = Json::array();
  for (unsigned i = 0; i < g.order(); ++i) {
    Json row = Json::array();
    for (unsigned j = 0; j < g.order(); ++j) row.push_back(g.mul(i, j));
    table.push_back(std::move(row));
  }
  return Json{{"kind", "cayley"}, {"n", g.order()}, {"table", std::move(table)}};
}

inline Group group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw input_error("group object needs a 'kind'");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "cayley") {
    if (!j.contains("table") || !j["table"].is_array())
      throw input_error("cayley group needs a 'table'");
    std::vector<std::vector<unsigned>> table;
    for (const Json& row : j["table"]) {
      if (!row.is_array()) throw input_error("cayley table rows must be arrays");
      std::vector<unsigned> r;
      for (const Json& x : row) {
        if (!x.is_number_unsigned()) throw input_error("cayley table entries must be indices");
        r.push_back(x.get<unsigned>());
      }
      table.push_back(std::move(r));
    }
    return Group::from_table(table);
  }
  if (!j.contains("n") || !j["n"].is_number_unsigned())
    throw input_error("group object needs an order parameter 'n'");
  const unsigned n = j["n"].get<unsigned>();
  if (kind == "cyclic") return Group::cyclic(n);
  if (kind == "dihedral") return Group::dihedral(n);
  if (kind == "symmetric") return Group::symmetric(n);
  throw input_error("unknown group kind '" + kind + "'");
}

template <typename T>
Json group_ring_to_json(const GroupRingElement<T>& x) {
  Json coeffs = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) coeffs.push_back(scalar_to_json(x[i]));
  return Json{{"group", group_to_json(*x.group())},
              {"field", scalar_traits<T>::field(x.like()).to_string()},
              {"coeffs", std::move(coeffs)}};
}

template <typename T>
GroupRingElement<T> group_ring_from_json(const Json& j, const T& like) {
  if (!j.is_object() || !j.contains("group") || !j.contains("coeffs"))
    throw input_error("group ring element needs group, field, coeffs");
  if (!(field_of_json(j) == scalar_traits<T>::field(like)))
    throw input_error("element field does not match the requested field");
  GroupPtr g = share(group_from_json(j["group"]));
  const Json& coeffs = j["coeffs"];
  if (!coeffs.is_array() || coeffs.size() != g->order())
    throw input_error("coefficient count does not match group order");
  std::vector<T> c;
  for (const Json& x : coeffs) c.push_back(scalar_from_json<T>(x, like));
  return GroupRingElement<T>(std::move(g), std::move(c));
}

template <typename T>
Json join_to_json(const JoinElement<T>& a) {
  Json groups = Json::array();
  Json blocks = Json::array();
  for (std::size_t i = 0; i < a.d(); ++i) {
    groups.push_back(group_to_json(*a.group(i)));
    Json c = Json::array();
    for (std::size_t t = 0; t < a.block(i).size(); ++t)
      c.push_back(scalar_to_json(a.block(i)[t]));
    blocks.push_back(std::move(c));
  }
  Json off = Json::array();
  for (std::size_t i = 0; i < a.d(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.d(); ++j) row.push_back(scalar_to_json(a.off(i, j)));
    off.push_back(std::move(row));
  }
  return Json{{"field", scalar_traits<T>::field(a.like()).to_string()},
              {"groups", std::move(groups)},
              {"blocks", std::move(blocks)},
              {"off", std::move(off)}};
}

template <typename T>
JoinElement<T> join_from_json(const Json& j, const T& like) {
  if (!j.is_object() || !j.contains("groups") || !j.contains("blocks") || !j.contains("off"))
    throw input_error("join element needs field, groups, blocks, off");
  if (!(field_of_json(j) == scalar_traits<T>::field(like)))
    throw input_error("join element field does not match the requested field");
  if (!j["groups"].is_array() || j["groups"].empty())
    throw input_error("join element needs at least one group");
  std::vector<GroupPtr> groups;
  for (const Json& g : j["groups"]) groups.push_back(share(group_from_json(g)));
  const std::size_t d = groups.size();
  const Json& blocks = j["blocks"];
  if (!blocks.is_array() || blocks.size() != d)
    throw input_error("join element block count mismatch");
  std::vector<GroupRingElement<T>> elems;
  for (std::size_t i = 0; i < d; ++i) {
    const Json& c = blocks[i];
    if (!c.is_array() || c.size() != groups[i]->order())
      throw input_error("join element block length mismatch");
    std::vector<T> coeff;
    for (const Json& x : c) coeff.push_back(scalar_from_json<T>(x, like));
    elems.emplace_back(groups[i], std::move(coeff));
  }
  const Json& off_j = j["off"];
  if (!off_j.is_array() || off_j.size() != d)
    throw input_error("join element off matrix must be d x d");
  Matrix<T> off = Matrix<T>::zero(d, d, like);
  for (std::size_t i = 0; i < d; ++i) {
    if (!off_j[i].is_array() || off_j[i].size() != d)
      throw input_error("join element off matrix must be d x d");
    for (std::size_t jj = 0; jj < d; ++jj)
      off(i, jj) = scalar_from_json<T>(off_j[i][jj], like);
  }
  return JoinElement<T>(std::move(groups), std::move(elems), std::move(off));
}

inline Json diagonalization_to_json(const Diagonalization& dg) {
  Json eigs = Json::array();
  for (const Cplx& z : dg.circulant_eigs) eigs.push_back(scalar_to_json(z));
  return Json{{"circulant_eigs", std::move(eigs)},
              {"reduced", matrix_to_json(dg.reduced)},
              {"residual", dg.residual}};
}

}  // namespace joinring
