#pragma once

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace joinring {

// One CLI invocation: a command plus the field, group list, and input text it
// may need. Flags that were not given stay empty.
struct Job {
  std::string command;
  std::optional<FieldSpec> field;
  std::vector<GroupPtr> groups;
  bool normalized = false;
  std::optional<std::string> input;
};

// Comma-separated group specs: Z/<n>, D/<n>, S/<n>, cayley:<file.json>.
inline std::vector<GroupPtr> parse_group_specs(const std::string& spec) {
  std::vector<GroupPtr> out;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) throw input_error("empty group spec");
    if (token.rfind("cayley:", 0) == 0) {
      const std::string path = token.substr(7);
      std::ifstream in(path);
      if (!in) throw input_error("cannot open Cayley table file '" + path + "'");
      Json j;
      try {
        j = Json::parse(in);
      } catch (const Json::exception&) {
        throw input_error("unparsable Cayley table file '" + path + "'");
      }
      if (j.is_array()) j = Json{{"kind", "cayley"}, {"table", std::move(j)}};
      out.push_back(share(group_from_json(j)));
      continue;
    }
    if (token.size() < 3 || token[1] != '/')
      throw input_error("bad group spec '" + token + "'");
    unsigned n = 0;
    std::size_t pos = 0;
    try {
      n = static_cast<unsigned>(std::stoul(token.substr(2), &pos));
    } catch (const std::exception&) {
      throw input_error("bad group spec '" + token + "'");
    }
    if (pos != token.size() - 2) throw input_error("bad group spec '" + token + "'");
    switch (token[0]) {
      case 'Z': out.push_back(share(Group::cyclic(n))); break;
      case 'D': out.push_back(share(Group::dihedral(n))); break;
      case 'S': out.push_back(share(Group::symmetric(n))); break;
      default: throw input_error("bad group spec '" + token + "'");
    }
  }
  if (out.empty()) throw input_error("empty group spec");
  return out;
}

namespace detail {

inline Json parse_payload(const Job& job) {
  if (!job.input) throw input_error("command '" + job.command + "' needs input");
  try {
    return Json::parse(*job.input);
  } catch (const Json::exception& e) {
    throw input_error(std::string("unparsable input JSON: ") + e.what());
  }
}

inline FieldSpec payload_field(const Json& payload, const Job& job) {
  std::optional<FieldSpec> fs;
  if (payload.is_object() && payload.contains("field"))
    fs = field_of_json(payload);
  if (job.field) {
    if (fs && !(*fs == *job.field))
      throw input_error("--field does not match the input's field");
    fs = job.field;
  }
  if (!fs) throw input_error("no field given (use --field or a field in the input)");
  return *fs;
}

inline FieldSpec flag_field(const Job& job) {
  if (!job.field) throw input_error("command '" + job.command + "' needs --field");
  return *job.field;
}

inline std::vector<GroupPtr> flag_groups(const Job& job) {
  if (job.groups.empty()) throw input_error("command '" + job.command + "' needs --groups");
  return job.groups;
}

template <typename T>
void check_flag_groups(const JoinElement<T>& a, const Job& job) {
  if (job.groups.empty()) return;
  if (job.groups.size() != a.d())
    throw input_error("--groups does not match the input's groups");
  for (std::size_t i = 0; i < a.d(); ++i)
    if (!same_group(job.groups[i], a.group(i)))
      throw input_error("--groups does not match the input's groups");
}

inline Cplx parse_weight(const Json& j) {
  if (j.is_number()) return Cplx(j.get<double>(), 0.0);
  return scalar_from_json<Cplx>(j, Cplx(0.0, 0.0));
}

inline Json run_check(const Job& job) {
  const Json payload = parse_payload(job);
  const bool dense = payload.is_object() && payload.contains("matrix");
  const FieldSpec fs = payload_field(dense ? payload["matrix"] : payload, job);
  return with_field(fs, [&](auto like) -> Json {
    using T = decltype(like);
    if (dense) {
      const Matrix<T> m = matrix_from_json<T>(payload["matrix"], like);
      const auto join = recognize(m, flag_groups(job));
      return Json{{"ok", true}, {"join", join_to_json(join)}};
    }
    const JoinElement<T> a = join_from_json<T>(payload, like);
    check_flag_groups(a, job);
    const auto round = recognize(expand(a), a.groups());
    if (!(round == a)) throw hypothesis_error("expand/recognize round trip failed");
    return Json{{"ok", true}, {"join", join_to_json(a)}};
  });
}

inline Json run_mul(const Job& job) {
  const Json payload = parse_payload(job);
  if (!payload.is_object() || !payload.contains("a") || !payload.contains("b"))
    throw input_error("mul needs an object with 'a' and 'b'");
  const FieldSpec fs = payload_field(payload["a"], job);
  return with_field(fs, [&](auto like) -> Json {
    using T = decltype(like);
    const JoinElement<T> a = join_from_json<T>(payload["a"], like);
    const JoinElement<T> b = join_from_json<T>(payload["b"], like);
    check_flag_groups(a, job);
    return Json{{"product", join_to_json(join_mul(a, b))}};
  });
}

inline Json run_units(const Job& job) {
  const Json payload = parse_payload(job);
  const FieldSpec fs = payload_field(payload, job);
  return with_field(fs, [&](auto like) -> Json {
    using T = decltype(like);
    const JoinElement<T> a = join_from_json<T>(payload, like);
    check_flag_groups(a, job);
    Json out{{"is_unit", is_unit(a)}};
    const auto inv = join_inverse(a);
    out["inverse"] = inv ? join_to_json(*inv) : Json(nullptr);
    if (inv && detail::modular_char(a) != 0) {
      const auto s = modular_unit_structure(a);
      Json torus = Json::array();
      for (const T& t : s.torus) torus.push_back(scalar_to_json(t));
      Json principal = Json::array();
      for (const auto& pr : s.principal) principal.push_back(group_ring_to_json(pr));
      out["structure"] = Json{{"torus", std::move(torus)},
                              {"offpart", matrix_to_json(s.offpart)},
                              {"principal", std::move(principal)}};
    }
    return out;
  });
}

inline Json run_count_units(const Job& job) {
  const mpz_class count = count_units(flag_groups(job), flag_field(job));
  return Json{{"count", count.get_str()}};
}

inline Json run_radical(const Job& job) {
  return with_field(flag_field(job), [&](auto like) -> Json {
    const auto basis = radical_basis_join(flag_groups(job), like);
    Json list = Json::array();
    for (const auto& b : basis) list.push_back(join_to_json(b));
    return Json{{"dimension", basis.size()}, {"basis", std::move(list)}};
  });
}

inline Json run_center(const Job& job) {
  return with_field(flag_field(job), [&](auto like) -> Json {
    const auto basis = center_basis(flag_groups(job), like);
    Json list = Json::array();
    for (const auto& b : basis) list.push_back(join_to_json(b));
    return Json{{"dimension", basis.size()}, {"basis", std::move(list)}};
  });
}

inline Json run_classify(const Job& job) {
  const FieldSpec fs = flag_field(job);
  const auto groups = flag_groups(job);
  return with_field(fs, [&](auto like) -> Json {
    const std::size_t radical_dim = radical_basis_join(groups, like).size();
    return Json{{"center_dim", center_basis(groups, like).size()},
                {"radical_dim", radical_dim},
                {"is_semisimple", radical_dim == 0},
                {"is_frobenius", frobenius_check(groups, like).frobenius},
                {"irreducible_count", irreducible_count(groups, fs.characteristic())}};
  });
}

inline Json run_frobenius(const Job& job) {
  const auto groups = flag_groups(job);
  return with_field(flag_field(job), [&](auto like) -> Json {
    using T = decltype(like);
    const FrobeniusCheck fc = frobenius_check(groups, like);
    Json out{{"is_frobenius", fc.frobenius}};
    out["witness_row"] = fc.witness_row ? Json(*fc.witness_row) : Json(nullptr);
    if (!fc.frobenius && job.input) {
      const Json payload = parse_payload(job);
      if (payload.is_object() && payload.contains("lambda")) {
        const Json& lj = payload["lambda"];
        if (!lj.is_array()) throw input_error("'lambda' must be an array");
        std::vector<T> lambda;
        for (const Json& x : lj) lambda.push_back(scalar_from_json<T>(x, like));
        const auto a = frobenius_kernel(groups, like, *fc.witness_row, lambda);
        const auto v = frobenius_witness(groups, like, *fc.witness_row, a);
        Json coeffs = Json::array();
        for (const T& x : a) coeffs.push_back(scalar_to_json(x));
        out["witness"] = Json{{"a", std::move(coeffs)}, {"element", join_to_json(v)}};
      }
    }
    return out;
  });
}

inline Json run_diagonalize(const Job& job) {
  const Json payload = parse_payload(job);
  const FieldSpec fs = payload_field(payload, job);
  if (!(fs == FieldSpec::complex_field()))
    throw hypothesis_error("diagonalization requires the complex field");
  const JoinElement<Cplx> a = join_from_json<Cplx>(payload, Cplx(0.0, 0.0));
  check_flag_groups(a, job);
  return diagonalization_to_json(diagonalize(a, job.normalized));
}

inline Json run_spectrum(const Job& job) {
  const Json payload = parse_payload(job);
  if (!payload.is_object() || !payload.contains("outer") || !payload.contains("inner"))
    throw input_error("spectrum needs an object with 'outer' and 'inner'");
  const Json& outer = payload["outer"];
  const Json& inner = payload["inner"];
  if (!outer.is_array() || !inner.is_array() || inner.empty() ||
      outer.size() != inner.size())
    throw input_error("'outer' must be d x d and 'inner' must list d circulant rows");
  const std::size_t d = inner.size();
  std::vector<GroupPtr> groups;
  std::vector<GroupRingElement<Cplx>> blocks;
  for (std::size_t i = 0; i < d; ++i) {
    if (!inner[i].is_array() || inner[i].empty())
      throw input_error("each inner row must be a nonempty array");
    std::vector<Cplx> c;
    for (const Json& x : inner[i]) c.push_back(parse_weight(x));
    groups.push_back(share(Group::cyclic(static_cast<unsigned>(c.size()))));
    blocks.emplace_back(groups.back(), std::move(c));
  }
  Matrix<Cplx> off = Matrix<Cplx>::zero(d, d, Cplx(0.0, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    if (!outer[i].is_array() || outer[i].size() != d)
      throw input_error("'outer' must be d x d");
    for (std::size_t j = 0; j < d; ++j) {
      const Cplx w = parse_weight(outer[i][j]);
      if (i == j) {
        if (std::abs(w) != 0.0)
          throw input_error("'outer' diagonal must be zero (loops belong to 'inner')");
      } else {
        off(i, j) = w;
      }
    }
  }
  const JoinElement<Cplx> a(std::move(groups), std::move(blocks), std::move(off));
  std::vector<Cplx> eigs = join_spectrum(a);
  std::sort(eigs.begin(), eigs.end(), [](const Cplx& x, const Cplx& y) {
    const double xr = round_significant(x.real()), yr = round_significant(y.real());
    if (xr != yr) return xr < yr;
    return round_significant(x.imag()) < round_significant(y.imag());
  });
  Json list = Json::array();
  for (const Cplx& z : eigs) list.push_back(scalar_to_json(z));
  return Json{{"eigenvalues", std::move(list)}};
}

}  // namespace detail

// Runs one job, writing a JSON result (or a machine-readable error envelope)
// and returning the exit code: 0 ok, 1 malformed input, 2 violated hypothesis
// or numeric failure.
inline int run_job(const Job& job, std::ostream& out) {
  const auto fail = [&out](const char* code, const std::string& reason, int rc) {
    out << Json{{"error", Json{{"code", code}, {"reason", reason}}}}.dump(2) << "\n";
    return rc;
  };
  try {
    Json result;
    if (job.command == "check") result = detail::run_check(job);
    else if (job.command == "mul") result = detail::run_mul(job);
    else if (job.command == "units") result = detail::run_units(job);
    else if (job.command == "count-units") result = detail::run_count_units(job);
    else if (job.command == "radical") result = detail::run_radical(job);
    else if (job.command == "center") result = detail::run_center(job);
    else if (job.command == "classify") result = detail::run_classify(job);
    else if (job.command == "frobenius") result = detail::run_frobenius(job);
    else if (job.command == "diagonalize") result = detail::run_diagonalize(job);
    else if (job.command == "spectrum") result = detail::run_spectrum(job);
    else throw input_error("unknown command '" + job.command + "'");
    out << result.dump(2) << "\n";
    return 0;
  } catch (const input_error& e) {
    return fail("bad-input", e.what(), 1);
  } catch (const hypothesis_error& e) {
    return fail("hypothesis", e.what(), 2);
  } catch (const numeric_error& e) {
    return fail("numeric", e.what(), 2);
  } catch (const Json::exception& e) {
    return fail("bad-input", e.what(), 1);
  }
}

}  // namespace joinring
