// Command-line front end: certify, pfaffian, skewify, lines, numerology,
// corpus. Exit codes: 0 success, 1 usage/parse/field errors, 2 mathematical
// refutation (so CI can tell tool failure from disproof). All randomized
// commands are deterministic for a fixed --seed; SKEWRANK_SEED sets the
// default seed.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewrank/certify.hpp"
#include "skewrank/corpus.hpp"
#include "skewrank/lines.hpp"
#include "skewrank/matrix_io.hpp"
#include "skewrank/numerology.hpp"
#include "skewrank/pfaffian.hpp"
#include "skewrank/skewsym.hpp"

namespace {

using namespace skewrank;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SKEWRANK_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw ParseError("SKEWRANK_SEED is not an integer");
    }
  }
  return 0;
}

std::string derive_path(const std::string& input, const std::string& suffix) {
  std::string stem = input;
  const std::string ext = ".json";
  if (stem.size() > ext.size() && stem.substr(stem.size() - ext.size()) == ext)
    stem = stem.substr(0, stem.size() - ext.size());
  return stem + suffix;
}

DenseVector<Rational> parse_coords_rational(const std::string& text) {
  DenseVector<Rational> out;
  std::vector<long long> vals;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) vals.push_back(std::stoll(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  out.resize(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) out(static_cast<Eigen::Index>(i)) = Rational(vals[i]);
  return out;
}

template <class S>
DenseVector<S> parse_coords(const typename field_traits<S>::context_type& F,
                            const std::string& text) {
  DenseVector<Rational> q = parse_coords_rational(text);
  DenseVector<S> out(q.size());
  for (Eigen::Index i = 0; i < q.size(); ++i)
    out(i) = field_traits<S>::make(F, static_cast<long long>(q(i).numerator()));
  return out;
}

int run_certify(const std::string& path, long long rank, long long samples,
                std::optional<std::uint32_t> prime, bool exact, std::uint64_t seed,
                std::string out_path) {
  MatrixFile file = load_matrix_file(path);
  CertifyOptions options;
  options.samples = samples;
  options.exact = exact;
  options.prime = prime;
  options.seed = seed;

  RankCertificate cert = std::visit(
      [&](const auto& A) { return certify_constant_rank(A, rank, options); }, file.matrix);

  if (out_path.empty()) out_path = derive_path(path, ".cert.json");
  write_text_file(out_path, serialize_certificate(cert));
  std::cout << "verdict: " << to_string(cert.verdict) << "\n"
            << "certificate: " << out_path << "\n";
  if (cert.verdict == Verdict::refuted) return 2;
  if (exact && cert.verdict != Verdict::certified) {
    std::cerr << "exact certification requested but only sampling evidence obtained\n";
    return 1;
  }
  return 0;
}

template <class S>
void print_pfaffians(const LinearMatrix<S>& A, std::optional<long long> size, bool rank_bound) {
  PfaffianTable<S> table(A);
  if (rank_bound) {
    std::cout << "symbolic rank upper bound: " << symbolic_rank_upper_bound(table) << "\n";
    return;
  }
  const Eigen::Index sz = size ? static_cast<Eigen::Index>(*size) : A.n;
  auto sys = principal_subpfaffians(table, sz);
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    std::cout << "[";
    for (std::size_t t = 0; t < sys.subsets[i].size(); ++t) {
      if (t) std::cout << ",";
      std::cout << sys.subsets[i][t];
    }
    std::cout << "] " << sys.polys[i].str() << "\n";
  }
}

int run_pfaffian(const std::string& path, std::optional<long long> size, bool rank_bound) {
  MatrixFile file = load_matrix_file(path);
  std::visit([&](const auto& A) { print_pfaffians(A, size, rank_bound); }, file.matrix);
  return 0;
}

template <class S>
int skewify_one(const LinearMatrix<S>& B, const std::string& name, std::uint64_t seed,
                int max_retries, const std::string& out_path, const std::string& delta_path) {
  SeededRng rng(seed);
  Skewifier<S> sk = skew_symmetrize(B, rng, max_retries);
  write_text_file(out_path, serialize_matrix(sk.result, name.empty() ? "" : name + "-skew"));

  nlohmann::json dj;
  dj["field"] = nlohmann::json::parse(serialize_matrix(sk.result))["field"];
  dj["n"] = sk.result.n;
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < sk.delta.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < sk.delta.cols(); ++j)
      row.push_back(field_traits<S>::to_string(sk.delta(i, j)));
    rows.push_back(row);
  }
  dj["delta"] = rows;
  dj["solution_dim"] = sk.solution_dim;
  write_text_file(delta_path, canonical_dump(dj));

  std::cout << "skew-symmetrized: " << out_path << "\n"
            << "delta (solution space dim " << sk.solution_dim << "): " << delta_path << "\n";
  return 0;
}

int run_skewify(const std::string& path, std::uint64_t seed, int max_retries,
                std::string out_path, std::string delta_path) {
  MatrixFile file = load_matrix_file(path);
  if (out_path.empty()) out_path = derive_path(path, ".skew.json");
  if (delta_path.empty()) delta_path = derive_path(path, ".delta.json");
  return std::visit(
      [&](const auto& B) { return skewify_one(B, file.name, seed, max_retries, out_path, delta_path); },
      file.matrix);
}

template <class S>
int lines_one(const LinearMatrix<S>& A, const std::vector<std::string>& line_coords,
              long long random_count, std::uint64_t seed) {
  if (!line_coords.empty()) {
    DenseMatrix<S> basis(A.d, 2);
    for (int c = 0; c < 2; ++c) {
      DenseVector<S> v = parse_coords<S>(A.field, line_coords[static_cast<std::size_t>(c)]);
      if (v.size() != A.d) throw DimensionMismatch("line vector needs d coordinates");
      basis.col(c) = v;
    }
    SplittingProfile p = minimal_indices(A, Line<S>(std::move(basis)));
    std::cout << "(";
    for (std::size_t i = 0; i < p.indices.size(); ++i)
      std::cout << (i ? "," : "") << p.indices[i];
    std::cout << ")\n";
    return 0;
  }
  SeededRng root(seed);
  for (long long i = 0; i < random_count; ++i) {
    SeededRng rng = root.substream(static_cast<std::uint64_t>(i));
    Line<S> L = random_line<S>(A.field, A.d, rng);
    SplittingProfile p = minimal_indices(A, L);
    std::cout << "(";
    for (std::size_t t = 0; t < p.indices.size(); ++t)
      std::cout << (t ? "," : "") << p.indices[t];
    std::cout << ")\n";
  }
  return 0;
}

int run_lines(const std::string& path, const std::vector<std::string>& line_coords,
              long long random_count, std::uint64_t seed) {
  MatrixFile file = load_matrix_file(path);
  return std::visit(
      [&](const auto& A) { return lines_one(A, line_coords, random_count, seed); }, file.matrix);
}

nlohmann::json report_to_json(const NumerologyReport& rep) {
  nlohmann::json j;
  j["rank"] = rep.r;
  j["charge"] = rep.k;
  j["size"] = rep.size;
  j["dimension_bounds"] = {rep.bounds.first, rep.bounds.second};
  j["cone_middle_rank"] = rep.middle_rank;
  j["diamond_dims_ok"] = rep.diamond_dims_ok;
  j["resolution_shape"] = {{"a", rep.shape.a}, {"b", rep.shape.b}, {"c", rep.shape.c}};
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rep.cone_table.entries) table.push_back(row);
  j["cone_table"] = table;
  nlohmann::json chi = nlohmann::json::array();
  for (std::size_t i = 0; i < rep.chi_table.twists.size(); ++i) {
    chi.push_back({{"t", rep.chi_table.twists[i]},
                   {"h", rep.chi_table.rows[i]},
                   {"chi", chi_rank2(rep.k, rep.chi_table.twists[i])}});
  }
  j["natural_cohomology"] = chi;
  j["chi_sym2_ext_twist"] = rep.chi_sym2_ext_twist;
  return j;
}

int run_numerology(long long rank, bool as_json) {
  NumerologyReport rep = numerology_report(rank);
  if (as_json) {
    std::cout << canonical_dump(report_to_json(rep));
    return 0;
  }
  std::cout << "rank r = " << rep.r << "  (matrix size " << rep.size << ")\n"
            << "charge k = c2(E) = " << rep.k << "\n"
            << "dimension bounds: " << rep.bounds.first << " <= l(r, r+2) <= "
            << rep.bounds.second << "\n"
            << "cone middle rank: " << rep.middle_rank << "\n"
            << "diamond dimension checks: " << (rep.diamond_dims_ok ? "pass" : "fail") << "\n"
            << "resolution shape (a,b,c): (" << rep.shape.a << "," << rep.shape.b << ","
            << rep.shape.c << ")\n"
            << "chi(S^2 E(" << -rep.r / 2 - 1 << ")) = " << rep.chi_sym2_ext_twist << "\n";
  std::cout << "expected cone table (rows p=3..0, cols j=3..0):\n";
  for (int p = 3; p >= 0; --p) {
    std::cout << "  ";
    for (int jj = 3; jj >= 0; --jj) std::cout << rep.cone_table.at(p, jj) << "\t";
    std::cout << "\n";
  }
  std::cout << "natural cohomology of E(t) (t, h0, h1, h2, h3):\n";
  for (std::size_t i = 0; i < rep.chi_table.twists.size(); ++i) {
    const auto& h = rep.chi_table.rows[i];
    std::cout << "  " << rep.chi_table.twists[i] << ": " << h[0] << " " << h[1] << " " << h[2]
              << " " << h[3] << "\n";
  }
  return 0;
}

int run_corpus(const std::string& name, std::string out_path) {
  std::string text;
  if (name == "westwick10") {
    text = serialize_matrix(westwick10(), "westwick10");
  } else if (name == "appendix14") {
    text = serialize_matrix(appendix14(), "appendix14");
  } else {
    throw ParseError("unknown corpus matrix '" + name + "' (try westwick10, appendix14)");
  }
  if (out_path.empty()) out_path = name + ".json";
  write_text_file(out_path, text);
  std::cout << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tools for skew-symmetric pencils of constant rank"};
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  bool seed_given = false;

  // certify
  auto* certify = app.add_subcommand("certify", "certify that a pencil has constant rank r");
  std::string certify_path;
  long long certify_rank = 0, certify_samples = 1000;
  std::optional<std::uint32_t> certify_prime;
  std::uint32_t prime_value = 0;
  bool certify_exact = false;
  std::string certify_out;
  certify->add_option("file", certify_path, "matrix file")->required();
  certify->add_option("--rank", certify_rank, "claimed constant rank")->required();
  certify->add_option("--samples", certify_samples, "number of random sample points");
  auto* prime_opt = certify->add_option("--prime", prime_value, "reduction prime for exact runs");
  certify->add_flag("--exact", certify_exact, "run the Groebner emptiness certificate");
  certify->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
  certify->add_option("--out", certify_out, "certificate output path");

  // pfaffian
  auto* pfaff = app.add_subcommand("pfaffian", "print principal sub-Pfaffians");
  std::string pfaff_path;
  std::optional<long long> pfaff_size;
  long long pfaff_size_value = 0;
  bool pfaff_bound = false;
  pfaff->add_option("file", pfaff_path, "matrix file")->required();
  auto* size_opt = pfaff->add_option("--size", pfaff_size_value, "principal minor size 2m");
  pfaff->add_flag("--rank-bound", pfaff_bound, "print the symbolic rank upper bound only");

  // skewify
  auto* skewify = app.add_subcommand("skewify", "find invertible Delta with Delta*B skew");
  std::string skewify_path, skewify_out, skewify_delta;
  int skewify_retries = 20;
  skewify->add_option("file", skewify_path, "matrix file")->required();
  skewify->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });
  skewify->add_option("--max-retries", skewify_retries, "random draws before the symbolic fallback");
  skewify->add_option("--out", skewify_out, "output matrix path");
  skewify->add_option("--delta-out", skewify_delta, "output path for Delta");

  // lines
  auto* lines_cmd = app.add_subcommand("lines", "splitting profiles on lines");
  std::string lines_path;
  std::vector<std::string> lines_line;
  long long lines_random = 0;
  lines_cmd->add_option("file", lines_path, "matrix file")->required();
  lines_cmd->add_option("--line", lines_line,
                        "two comma-separated coordinate vectors spanning the line")
      ->expected(2);
  lines_cmd->add_option("--random", lines_random, "number of random lines");
  lines_cmd->add_option("--seed", seed, "random seed")->each([&](const std::string&) { seed_given = true; });

  // numerology
  auto* numer = app.add_subcommand("numerology", "closed-form invariants for a rank");
  long long numer_rank = 0;
  bool numer_json = false;
  numer->add_option("--rank", numer_rank, "constant rank r (12s or 12s-4)")->required();
  numer->add_flag("--json", numer_json, "emit the report as JSON");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "write a bundled corpus matrix file");
  std::string corpus_name, corpus_out;
  corpus->add_option("name", corpus_name, "westwick10 | appendix14")->required();
  corpus->add_option("--out", corpus_out, "output path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_given) seed = default_seed();
    if (*prime_opt) certify_prime = prime_value;
    if (*size_opt) pfaff_size = pfaff_size_value;

    if (app.got_subcommand(certify))
      return run_certify(certify_path, certify_rank, certify_samples, certify_prime, certify_exact,
                         seed, certify_out);
    if (app.got_subcommand(pfaff)) return run_pfaffian(pfaff_path, pfaff_size, pfaff_bound);
    if (app.got_subcommand(skewify))
      return run_skewify(skewify_path, seed, skewify_retries, skewify_out, skewify_delta);
    if (app.got_subcommand(lines_cmd)) {
      if (lines_line.empty() && lines_random <= 0)
        throw ParseError("lines needs --line or --random");
      return run_lines(lines_path, lines_line, lines_random, seed);
    }
    if (app.got_subcommand(numer)) return run_numerology(numer_rank, numer_json);
    if (app.got_subcommand(corpus)) return run_corpus(corpus_name, corpus_out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
