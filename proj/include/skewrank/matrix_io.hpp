#pragma once

// Matrix interchange format and certificate files. A matrix document is
//
//   {
//     "field":  {"kind": "prime", "p": 7}
//             | {"kind": "rational"}
//             | {"kind": "extension", "p": 7, "e": 2, "modulus": [1, 0, 1]},
//     "n": 14,
//     "d": 4,
//     "coeffs": [ four n x n integer arrays ],
//     "metadata": {"name": "..."}            // optional
//   }
//
// Integer entries are reduced into the field on load. The modulus lists
// ascending coefficients including the leading 1. Serialization is canonical:
// keys sorted, two-space indent, one trailing newline, so a write/parse/write
// round trip is byte-identical.

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "skewrank/certify.hpp"
#include "skewrank/linear_matrix.hpp"

namespace skewrank {

struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  std::uint32_t e = 1;
  std::vector<std::uint32_t> modulus;  // ascending, size e+1; empty = deterministic default
};

using AnyLinearMatrix =
    std::variant<LinearMatrix<Fp>, LinearMatrix<Fq>, LinearMatrix<Rational>>;

struct MatrixFile {
  AnyLinearMatrix matrix;
  std::string name;  // metadata, may be empty
};

namespace io_detail {

using nlohmann::json;

inline json field_to_json(const FieldSpec& spec) {
  json j;
  switch (spec.kind) {
    case FieldKind::prime:
      j["kind"] = "prime";
      j["p"] = spec.p;
      break;
    case FieldKind::extension:
      j["kind"] = "extension";
      j["p"] = spec.p;
      j["e"] = spec.e;
      j["modulus"] = spec.modulus;
      break;
    case FieldKind::rational:
      j["kind"] = "rational";
      break;
  }
  return j;
}

inline FieldSpec field_from_json(const json& j) {
  FieldSpec spec;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "prime") {
    spec.kind = FieldKind::prime;
    spec.p = j.at("p").get<std::uint32_t>();
  } else if (kind == "extension") {
    spec.kind = FieldKind::extension;
    spec.p = j.at("p").get<std::uint32_t>();
    spec.e = j.at("e").get<std::uint32_t>();
    if (j.contains("modulus")) spec.modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
  } else if (kind == "rational") {
    spec.kind = FieldKind::rational;
  } else {
    throw ParseError("unknown field kind '" + kind + "'");
  }
  return spec;
}

template <class S>
json coeffs_to_json(const LinearMatrix<S>& A) {
  using FT = field_traits<S>;
  json coeffs = json::array();
  for (const auto& m : A.coeffs) {
    json mat = json::array();
    for (Eigen::Index i = 0; i < A.n; ++i) {
      json row = json::array();
      for (Eigen::Index j = 0; j < A.n; ++j) {
        const S& v = m(i, j);
        if constexpr (FT::kind == FieldKind::rational) {
          if (!v.is_integer())
            throw ParseError("matrix entries must be integers for serialization; scale first");
          row.push_back(static_cast<long long>(v.numerator()));
        } else if constexpr (FT::kind == FieldKind::prime) {
          row.push_back(v.value());
        } else {
          if (!v.in_prime_subfield())
            throw ParseError("matrix entries outside the prime subfield cannot be serialized");
          row.push_back(v.value());
        }
      }
      mat.push_back(row);
    }
    coeffs.push_back(mat);
  }
  return coeffs;
}

template <class S>
LinearMatrix<S> matrix_from_ints(const typename field_traits<S>::context_type& F,
                                 Eigen::Index n, const std::vector<json>& arrays) {
  using FT = field_traits<S>;
  std::vector<DenseMatrix<S>> cs;
  for (const auto& arr : arrays) {
    if (static_cast<Eigen::Index>(arr.size()) != n) throw ParseError("coefficient row count");
    DenseMatrix<S> m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = arr.at(static_cast<std::size_t>(i));
      if (static_cast<Eigen::Index>(row.size()) != n) throw ParseError("coefficient column count");
      for (Eigen::Index j = 0; j < n; ++j)
        m(i, j) = FT::make(F, row.at(static_cast<std::size_t>(j)).get<long long>());
    }
    cs.push_back(std::move(m));
  }
  return LinearMatrix<S>(F, n, std::move(cs));
}

}  // namespace io_detail

inline std::string canonical_dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

template <class S>
FieldSpec field_spec_of(const LinearMatrix<S>& A) {
  using FT = field_traits<S>;
  FieldSpec spec;
  if constexpr (FT::kind == FieldKind::prime) {
    spec.kind = FieldKind::prime;
    spec.p = A.field.p;
  } else if constexpr (FT::kind == FieldKind::extension) {
    spec.kind = FieldKind::extension;
    spec.p = A.field->p;
    spec.e = A.field->e;
    spec.modulus = A.field->modulus;
  } else {
    spec.kind = FieldKind::rational;
  }
  return spec;
}

template <class S>
std::string serialize_matrix(const LinearMatrix<S>& A, const std::string& name = {}) {
  nlohmann::json j;
  j["field"] = io_detail::field_to_json(field_spec_of(A));
  j["n"] = A.n;
  j["d"] = A.d;
  j["coeffs"] = io_detail::coeffs_to_json(A);
  if (!name.empty()) j["metadata"] = {{"name", name}};
  return canonical_dump(j);
}

inline MatrixFile parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  try {
    const FieldSpec spec = io_detail::field_from_json(j.at("field"));
    const Eigen::Index n = j.at("n").get<Eigen::Index>();
    const Eigen::Index d = j.at("d").get<Eigen::Index>();
    const auto arrays = j.at("coeffs").get<std::vector<nlohmann::json>>();
    if (static_cast<Eigen::Index>(arrays.size()) != d)
      throw ParseError("expected d coefficient matrices");
    if (n < 1 || d < 1) throw ParseError("n and d must be positive");
    std::string name;
    if (j.contains("metadata") && j.at("metadata").contains("name"))
      name = j.at("metadata").at("name").get<std::string>();

    switch (spec.kind) {
      case FieldKind::prime: {
        PrimeField F(spec.p);
        return {io_detail::matrix_from_ints<Fp>(F, n, arrays), name};
      }
      case FieldKind::extension: {
        ExtensionHandle F = spec.modulus.empty()
                                ? make_extension(spec.p, spec.e)
                                : make_extension(spec.p, spec.e, spec.modulus);
        return {io_detail::matrix_from_ints<Fq>(F, n, arrays), name};
      }
      case FieldKind::rational:
      default: {
        RationalField F;
        return {io_detail::matrix_from_ints<Rational>(F, n, arrays), name};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

inline MatrixFile load_matrix_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_matrix(ss.str());
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

// ---------------------------------------------------------------------------
// certificates
// ---------------------------------------------------------------------------

inline std::string serialize_certificate(const RankCertificate& cert) {
  nlohmann::json j;
  j["matrix_hash"] = cert.matrix_hash;
  j["field"] = cert.field;
  j["n"] = cert.n;
  j["claimed_rank"] = cert.claimed_rank;
  j["verdict"] = to_string(cert.verdict);
  j["upper_bound"] = {{"all_vanish", cert.upper_bound_ok},
                      {"symbolic_rank_bound", cert.symbolic_bound}};
  j["samples"] = {{"requested", cert.samples.requested},
                  {"performed", cert.samples.performed},
                  {"failures", cert.samples.failures},
                  {"field", cert.samples.sample_field},
                  {"seed", cert.samples.seed}};
  if (cert.lower_bound) {
    j["lower_bound"] = {{"prime", cert.lower_bound->prime},
                        {"basis_digest", cert.lower_bound->basis_digest},
                        {"basis_size", cert.lower_bound->basis_size},
                        {"ideal_degree_bound", cert.lower_bound->ideal_degree_bound},
                        {"basis_leading_terms", cert.lower_bound->basis_leading_terms},
                        {"pure_power_witnesses", cert.lower_bound->pure_power_witnesses}};
  }
  if (cert.refutation) {
    j["refutation"] = {{"point", cert.refutation->point},
                       {"field", cert.refutation->field},
                       {"observed_rank", cert.refutation->observed_rank},
                       {"reason", cert.refutation->reason}};
  }
  return canonical_dump(j);
}

}  // namespace skewrank
