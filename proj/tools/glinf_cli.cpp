// glinf: command-line front end for the coefficient queries and verification drivers.

#include "glinf/glinf.hpp"
#include "glinf/io.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace {

using glinf::io::json;

enum Exit { ok = 0, check_failed = 1, usage_error = 2 };

class usage_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Limits {
  int max_size = 24;
  int max_rank = 32;
  int max_poly_rank = 4;
  int max_degree = 10;
  int max_level = 12;
  int max_count = 100000;

  static int from_env(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
      std::size_t used = 0;
      int x = std::stoi(v, &used);
      if (used != std::string(v).size() || x < 0) throw std::invalid_argument(name);
      return x;
    } catch (const std::exception&) {
      throw usage_failure(std::string("environment variable ") + name + " must be a nonnegative integer");
    }
  }

  static Limits load() {
    Limits l;
    l.max_size = from_env("GLINF_MAX_SIZE", l.max_size);
    l.max_rank = from_env("GLINF_MAX_RANK", l.max_rank);
    l.max_poly_rank = from_env("GLINF_MAX_POLY_RANK", l.max_poly_rank);
    l.max_degree = from_env("GLINF_MAX_DEGREE", l.max_degree);
    l.max_level = from_env("GLINF_MAX_LEVEL", l.max_level);
    l.max_count = from_env("GLINF_MAX_COUNT", l.max_count);
    return l;
  }
};

void require_cap(const char* what, long long value, long long cap, const char* env) {
  if (value > cap)
    throw usage_failure(std::string("resource cap exceeded: ") + what + " = " + std::to_string(value) + " > " +
                        std::to_string(cap) + " (raise " + env + " to allow it)");
}

glinf::Partition partition_arg(const std::string& text, const Limits& lim) {
  glinf::Partition p = glinf::parse_partition(text);
  require_cap("partition size", p.size(), lim.max_size, "GLINF_MAX_SIZE");
  return p;
}

glinf::HalfInfiniteWeight half_weight_arg(const std::string& text, glinf::WeightKind kind, const Limits& lim) {
  auto w = glinf::io::parse_half_weight(text, kind);
  require_cap("partition size", w.body().size(), lim.max_size, "GLINF_MAX_SIZE");
  return w;
}

/// "[a];[b]" (bodies of chi1 and chi2) or a JSON object {"chi1":..., "chi2":...}.
glinf::SemidominantWeight chi_arg(const std::string& text, const Limits& lim) {
  if (text.empty() || text == "0") return glinf::SemidominantWeight::zero();
  if (auto semi = text.find(';'); semi != std::string::npos) {
    return {glinf::HalfInfiniteWeight::negative(partition_arg(text.substr(0, semi), lim)),
            glinf::HalfInfiniteWeight::positive(partition_arg(text.substr(semi + 1), lim))};
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error&) {
    throw std::invalid_argument("cannot parse --chi '" + text + "'; use \"[a];[b]\" or a JSON object");
  }
  if (!j.is_object()) throw std::invalid_argument("--chi must be \"[a];[b]\" or {\"chi1\":..., \"chi2\":...}");
  auto first = j.contains("chi1") ? glinf::io::half_weight_from_json(j.at("chi1"), glinf::WeightKind::negative)
                                  : glinf::HalfInfiniteWeight::negative({});
  auto second = j.contains("chi2") ? glinf::io::half_weight_from_json(j.at("chi2"), glinf::WeightKind::positive)
                                   : glinf::HalfInfiniteWeight::positive({});
  require_cap("partition size", std::max(first.body().size(), second.body().size()), lim.max_size, "GLINF_MAX_SIZE");
  return {first, second};
}

std::vector<int> int_list_arg(const std::string& text) { return glinf::detail::parse_int_list(text); }

struct Output {
  std::string format = "json";

  void json_value(const json& j) const {
    if (format != "json") throw usage_failure("tsv output is only available for tables");
    std::cout << j.dump(2) << '\n';
  }
  bool tsv() const { return format == "tsv"; }
};

std::string partition_text(const glinf::Partition& p) { return glinf::to_string(p); }

// ---- lr / decompose -------------------------------------------------------

int run_lr(const std::string& l_text, const std::string& m_text, const std::optional<std::string>& n_text,
           std::optional<int> row_bound, const Output& out, const Limits& lim) {
  auto lambda = partition_arg(l_text, lim);
  auto mu = partition_arg(m_text, lim);
  if (n_text) {
    auto nu = partition_arg(*n_text, lim);
    const auto c = glinf::lr_coefficient(lambda, mu, nu);
    if (out.tsv()) {
      std::cout << partition_text(nu) << '\t' << c << '\n';
      return ok;
    }
    out.json_value({{"lambda", partition_text(lambda)},
                    {"mu", partition_text(mu)},
                    {"nu", partition_text(nu)},
                    {"coefficient", c}});
    return ok;
  }
  auto table = glinf::tensor_decompose(lambda, mu, row_bound);
  if (out.tsv()) {
    std::cout << glinf::io::table_to_tsv(table, partition_text);
    return ok;
  }
  out.json_value(glinf::io::to_json(table));
  return ok;
}

int run_decompose(const std::string& l_text, const std::string& m_text, int N, const Output& out, const Limits& lim) {
  auto lambda = partition_arg(l_text, lim);
  auto mu = partition_arg(m_text, lim);
  if (N < 1) throw usage_failure("--N must be positive");
  require_cap("N", N, std::min(lim.max_rank, 8), "GLINF_MAX_RANK");
  auto product = glinf::schur_poly(lambda, N) * glinf::schur_poly(mu, N);
  auto table = glinf::decompose_symmetric(product, N);
  const bool agrees = table == glinf::tensor_decompose(lambda, mu, N);
  if (out.tsv()) {
    std::cout << glinf::io::table_to_tsv(table, partition_text);
  } else {
    out.json_value({{"lambda", partition_text(lambda)},
                    {"mu", partition_text(mu)},
                    {"N", N},
                    {"table", glinf::io::to_json(table)},
                    {"matches_lr", agrees}});
  }
  return agrees ? ok : check_failed;
}

// ---- polynomial model -------------------------------------------------------

int run_cauchy(int n, int d_max, bool with_kernel, const Output& out, const Limits& lim) {
  if (n < 1 || d_max < 0) throw usage_failure("need --n >= 1 and --dmax >= 0");
  require_cap("n", n, lim.max_poly_rank, "GLINF_MAX_POLY_RANK");
  require_cap("dmax", d_max, lim.max_degree, "GLINF_MAX_DEGREE");
  const auto report = glinf::poly::cauchy_character_check(n, d_max);
  const auto decomp = glinf::poly::decomposition_report(n, d_max);
  bool pass = report.passed();
  json rows = json::array();
  std::ostringstream tsv;
  tsv << "degree\tlhs_dim\trhs_dim\tkernel_dim\texpected_kernel_dim\tpartitions\n";
  for (std::size_t d = 0; d < report.rows.size(); ++d) {
    const auto& row = report.rows[d];
    json parts = json::array();
    std::string part_text;
    for (const auto& [p, m] : decomp[d].table) {
      parts.push_back(partition_text(p));
      part_text += (part_text.empty() ? "" : " ") + partition_text(p);
    }
    json entry{{"degree", row.degree}, {"lhs_dim", row.lhs_dim}, {"rhs_dim", row.rhs_dim}, {"partitions", parts}};
    std::string kernel_cols = "\t-\t-";
    if (with_kernel) {
      auto span = glinf::poly::singular_span_check(n, row.degree);
      entry["kernel_dim"] = span.kernel_dim;
      entry["expected_kernel_dim"] = span.expected_kernel_dim;
      entry["det_monomials_span"] = span.passed();
      pass = pass && span.passed();
      kernel_cols = "\t" + std::to_string(span.kernel_dim) + "\t" + std::to_string(span.expected_kernel_dim);
    }
    entry["weights_consistent"] = decomp[d].weights_consistent;
    pass = pass && decomp[d].weights_consistent;
    rows.push_back(entry);
    tsv << row.degree << '\t' << row.lhs_dim << '\t' << row.rhs_dim << kernel_cols << '\t' << part_text << '\n';
  }
  if (out.tsv())
    std::cout << tsv.str();
  else
    out.json_value({{"n", n}, {"dmax", d_max}, {"passed", pass}, {"degrees", rows}});
  return pass ? ok : check_failed;
}

int run_singular_poly(int n, int d, const Output& out, const Limits& lim) {
  if (n < 1 || d < 0) throw usage_failure("need --n >= 1 and --d >= 0");
  require_cap("n", n, lim.max_poly_rank, "GLINF_MAX_POLY_RANK");
  require_cap("d", d, lim.max_degree, "GLINF_MAX_DEGREE");
  const auto rep = glinf::poly::singular_span_check(n, d);
  json dets = json::array();
  for (const auto& l : glinf::column_lengths_of_degree(n, d)) dets.push_back(glinf::ghat::det_monomial_label(l));
  out.json_value({{"n", n},
                  {"degree", d},
                  {"dim", rep.kernel_dim},
                  {"expected_dim", rep.expected_kernel_dim},
                  {"det_monomial_rank", rep.det_monomial_rank},
                  {"combined_rank", rep.combined_rank},
                  {"det_monomials_singular", rep.det_monomials_singular},
                  {"det_monomials", dets},
                  {"passed", rep.passed()}});
  return rep.passed() ? ok : check_failed;
}

// ---- induced module ---------------------------------------------------------

int run_singular_ghat(const std::string& chi_text, const std::string& c_text, int level_max, bool with_vectors,
                      const Output& out, const Limits& lim) {
  auto chi = chi_arg(chi_text, lim);
  auto c = glinf::parse_rational(c_text);
  if (level_max < 0) throw usage_failure("--level-max must be nonnegative");
  require_cap("level-max", level_max, lim.max_level, "GLINF_MAX_LEVEL");
  const auto res = glinf::ghat::singular_search(chi, c, level_max);
  json j{{"chi", glinf::io::to_json(chi)},
         {"c", glinf::to_string(c)},
         {"level_max", level_max},
         {"band", res.band},
         {"singular", glinf::io::to_json(res, with_vectors)}};
  if (auto low = res.lowest_level())
    j["lowest_level"] = *low;
  else
    j["lowest_level"] = nullptr;
  out.json_value(j);
  return ok;
}

int run_commutator(int k, int l, const std::string& chi_text, const std::string& c_text, const Output& out,
                   const Limits& lim) {
  auto chi = chi_arg(chi_text, lim);
  auto c = glinf::parse_rational(c_text);
  if (k < 1 || l < 1) throw usage_failure("need --k >= 1 and --l >= 1");
  require_cap("k*l", static_cast<long long>(k) * l, lim.max_level, "GLINF_MAX_LEVEL");
  const auto rep = glinf::ghat::commutator_formula_check(k, l, chi, c);
  out.json_value(glinf::io::to_json(rep));
  return rep.equal() ? ok : check_failed;
}

int run_multiplicity(const std::string& chi_text, const std::optional<std::string>& nu1_text,
                     const std::optional<std::string>& nu2_text, std::optional<int> diagram_bound, const Output& out,
                     const Limits& lim) {
  auto chi = chi_arg(chi_text, lim);
  if (nu1_text && nu2_text) {
    auto nu1 = half_weight_arg(*nu1_text, glinf::WeightKind::negative, lim);
    auto nu2 = half_weight_arg(*nu2_text, glinf::WeightKind::positive, lim);
    const auto m = glinf::induced_multiplicity(chi, nu1, nu2);
    out.json_value({{"chi", glinf::io::to_json(chi)},
                    {"nu1", glinf::io::to_json(nu1)},
                    {"nu2", glinf::io::to_json(nu2)},
                    {"multiplicity", m}});
    return ok;
  }
  if (nu1_text || nu2_text) throw usage_failure("--nu1 and --nu2 must be given together");
  const int bound = diagram_bound.value_or(3);
  require_cap("diagram bound", bound, lim.max_size, "GLINF_MAX_SIZE");
  const auto table = glinf::induced_decomposition(chi, bound);
  if (out.tsv()) {
    for (const auto& [key, m] : table)
      std::cout << glinf::to_string(key.first) << '\t' << glinf::to_string(key.second) << '\t' << m << '\n';
    return ok;
  }
  json entries = json::array();
  for (const auto& [key, m] : table)
    entries.push_back({{"nu1", glinf::io::to_json(key.first)}, {"nu2", glinf::io::to_json(key.second)}, {"multiplicity", m}});
  out.json_value({{"chi", glinf::io::to_json(chi)}, {"diagram_bound", bound}, {"entries", entries}});
  return ok;
}

int run_kac_radul(const std::string& nu_text, int N, int size_bound, const Output& out, const Limits& lim) {
  auto nu = glinf::parse_finite_weight(nu_text);
  require_cap("N", N, lim.max_rank, "GLINF_MAX_RANK");
  require_cap("size bound", size_bound, lim.max_size, "GLINF_MAX_SIZE");
  if (nu.rank() != N) nu = glinf::pad_weight(nu, N);
  const auto table = glinf::kac_radul_table(nu, N, size_bound);
  if (out.tsv()) {
    for (const auto& [key, m] : table)
      std::cout << glinf::to_string(key.first) << '\t' << glinf::to_string(key.second) << '\t' << m << '\n';
    return ok;
  }
  json entries = json::array();
  for (const auto& [key, m] : table)
    entries.push_back({{"lambda", glinf::io::to_json(key.first)}, {"mu", glinf::io::to_json(key.second)}, {"multiplicity", m}});
  out.json_value({{"nu", glinf::io::to_json(nu)}, {"N", N}, {"size_bound", size_bound}, {"entries", entries}});
  return ok;
}

// ---- reciprocity ------------------------------------------------------------

struct Job {
  std::optional<glinf::Triple> triple;
  std::vector<int> ranks;
  std::string error;
};

struct JobResult {
  json line;
  int status = ok;
};

JobResult run_job(const Job& job, std::size_t index) {
  if (!job.triple) return {{{"index", index}, {"error", job.error}}, usage_error};
  try {
    auto ranks = job.ranks.empty() ? glinf::default_ranks(*job.triple) : job.ranks;
    auto rep = glinf::reciprocity_check(job.triple->nu, job.triple->lambda_minus, job.triple->mu_plus, ranks);
    json line = glinf::io::to_json(rep);
    line["index"] = index;
    return {line, rep.holds() ? ok : check_failed};
  } catch (const std::exception& e) {
    return {{{"index", index}, {"error", e.what()}}, usage_error};
  }
}

std::vector<JobResult> run_jobs(const std::vector<Job>& jobs, unsigned threads) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(jobs[i], i);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return results;
}

Job job_from_json_line(const std::string& line, const Limits& lim) {
  Job job;
  try {
    json j = json::parse(line);
    if (!j.is_object() || !j.contains("nu") || !j.contains("lambda_minus") || !j.contains("mu_plus"))
      throw std::invalid_argument("line needs nu, lambda_minus and mu_plus");
    glinf::Triple t{glinf::io::finite_weight_from_json(j.at("nu")),
                    glinf::io::half_weight_from_json(j.at("lambda_minus"), glinf::WeightKind::negative),
                    glinf::io::half_weight_from_json(j.at("mu_plus"), glinf::WeightKind::positive)};
    require_cap("partition size", std::max(t.lambda_minus.body().size(), t.mu_plus.body().size()), lim.max_size,
                "GLINF_MAX_SIZE");
    if (j.contains("N_list")) job.ranks = j.at("N_list").get<std::vector<int>>();
    for (int N : job.ranks) require_cap("N", N, lim.max_rank, "GLINF_MAX_RANK");
    job.triple = t;
  } catch (const std::exception& e) {
    job.error = e.what();
  }
  return job;
}

int emit_stream(const std::vector<Job>& jobs, unsigned threads, const json& header) {
  const auto results = run_jobs(jobs, threads);
  std::size_t passed = 0, failed = 0, errors = 0;
  for (const auto& r : results) {
    std::cout << r.line.dump() << '\n';
    if (r.status == ok) ++passed;
    else if (r.status == check_failed) ++failed;
    else ++errors;
  }
  json summary = header;
  summary["count"] = results.size();
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["errors"] = errors;
  std::cout << json{{"summary", summary}}.dump() << '\n';
  if (failed) return check_failed;
  return errors ? usage_error : ok;
}

struct ReciprocityArgs {
  std::optional<std::string> nu, lambda_minus, mu_plus, n_list, batch;
  std::optional<int> random;
  std::uint64_t seed = 1;
  int max_size = 4;
  int grid = -1;
  unsigned jobs = 0;
};

int run_reciprocity(const ReciprocityArgs& a, const Output& out, const Limits& lim) {
  if (out.tsv()) throw usage_failure("tsv output is only available for tables");
  const unsigned threads = a.jobs ? a.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<int> ranks;
  if (a.n_list) ranks = int_list_arg(*a.n_list);
  for (int N : ranks) require_cap("N", N, lim.max_rank, "GLINF_MAX_RANK");

  const int modes = (a.batch ? 1 : 0) + (a.random ? 1 : 0) + (a.grid >= 0 ? 1 : 0) + (a.nu ? 1 : 0);
  if (modes != 1) throw usage_failure("give exactly one of --nu (single triple), --batch, --random or --grid");

  if (a.batch) {
    std::ifstream in(*a.batch);
    if (!in) throw usage_failure("cannot open batch file '" + *a.batch + "'");
    std::vector<Job> jobs;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      jobs.push_back(job_from_json_line(line, lim));
      if (jobs.back().triple && jobs.back().ranks.empty()) jobs.back().ranks = ranks;
    }
    require_cap("batch size", static_cast<long long>(jobs.size()), lim.max_count, "GLINF_MAX_COUNT");
    return emit_stream(jobs, threads, {{"mode", "batch"}});
  }
  if (a.random || a.grid >= 0) {
    const int size = a.random ? a.max_size : a.grid;
    require_cap("max size", size, std::min(lim.max_size, 8), "GLINF_MAX_SIZE");
    std::vector<glinf::Triple> triples;
    json header;
    if (a.random) {
      require_cap("random count", *a.random, lim.max_count, "GLINF_MAX_COUNT");
      triples = glinf::random_triples(*a.random, a.seed, size);
      header = {{"mode", "random"}, {"seed", a.seed}, {"max_size", size}};
    } else {
      triples = glinf::reciprocity_grid(size);
      header = {{"mode", "grid"}, {"max_size", size}};
    }
    std::vector<Job> jobs;
    for (auto& t : triples) jobs.push_back({t, ranks, {}});
    return emit_stream(jobs, threads, header);
  }

  if (!a.lambda_minus || !a.mu_plus) throw usage_failure("--nu needs --lambda-minus and --mu-plus");
  glinf::Triple t{glinf::parse_finite_weight(*a.nu), half_weight_arg(*a.lambda_minus, glinf::WeightKind::negative, lim),
                  half_weight_arg(*a.mu_plus, glinf::WeightKind::positive, lim)};
  if (ranks.empty()) ranks = glinf::default_ranks(t);
  auto rep = glinf::reciprocity_check(t.nu, t.lambda_minus, t.mu_plus, ranks);
  out.json_value(glinf::io::to_json(rep));
  return rep.holds() ? ok : check_failed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Clebsch-Gordan, Cauchy and induced-module computations for gl_infinity"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "tsv"}))->capture_default_str();

  std::function<int()> action;
  const auto limits = [] { return Limits::load(); };

  std::string l_text, m_text;
  std::optional<std::string> n_text;
  std::optional<int> row_bound;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient or full tensor decomposition");
  lr->add_option("lambda", l_text, "First partition, e.g. [2,1]")->required();
  lr->add_option("mu", m_text, "Second partition")->required();
  lr->add_option("nu", n_text, "Target partition (single coefficient)");
  lr->add_option("--row-bound", row_bound, "Keep only constituents with at most this many rows");
  lr->callback([&] { action = [&] { return run_lr(l_text, m_text, n_text, row_bound, out, limits()); }; });

  int decompose_N = 0;
  auto* dec = app.add_subcommand("decompose", "Decompose s_lambda * s_mu in N variables by symmetric-polynomial elimination");
  dec->add_option("lambda", l_text)->required();
  dec->add_option("mu", m_text)->required();
  dec->add_option("--N", decompose_N, "Number of variables")->required();
  dec->callback([&] { action = [&] { return run_decompose(l_text, m_text, decompose_N, out, limits()); }; });

  int n = 0, d = 0, d_max = 0;
  bool no_kernel = false;
  auto* cau = app.add_subcommand("cauchy", "Character identity for S*(a_-) and its Det-monomial decomposition");
  cau->add_option("--n", n)->required();
  cau->add_option("--dmax", d_max)->required();
  cau->add_flag("--no-kernel", no_kernel, "Skip the exact raising-kernel computation");
  cau->callback([&] { action = [&] { return run_cauchy(n, d_max, !no_kernel, out, limits()); }; });

  auto* sp = app.add_subcommand("singular-poly", "Singular vectors of S^d(a_-) versus Det monomials");
  sp->add_option("--n", n)->required();
  sp->add_option("--d", d)->required();
  sp->callback([&] { action = [&] { return run_singular_poly(n, d, out, limits()); }; });

  std::string chi_text = "0", c_text = "0";
  int level_max = 4;
  bool vectors = false;
  auto* sg = app.add_subcommand("singular-ghat", "Singular vectors of the induced module up to a level");
  sg->add_option("--chi", chi_text, "Block weight as \"[a];[b]\" or JSON; default 0");
  sg->add_option("--c", c_text, "Central charge (integer, p/q or decimal)");
  sg->add_option("--level-max", level_max)->capture_default_str();
  sg->add_flag("--vectors", vectors, "Include the singular vectors themselves");
  sg->callback([&] { action = [&] { return run_singular_ghat(chi_text, c_text, level_max, vectors, out, limits()); }; });

  int k = 1, l = 1;
  auto* cc = app.add_subcommand("commutator-check", "Compare e_0 Det_k^l v with its closed form");
  cc->add_option("--k", k)->capture_default_str();
  cc->add_option("--l", l)->capture_default_str();
  cc->add_option("--chi", chi_text);
  cc->add_option("--c", c_text);
  cc->callback([&] { action = [&] { return run_commutator(k, l, chi_text, c_text, out, limits()); }; });

  std::optional<std::string> nu1_text, nu2_text;
  std::optional<int> diagram_bound;
  auto* mul = app.add_subcommand("multiplicity", "Multiplicity of L_nu1 (x) L_nu2 in the induced module");
  mul->add_option("--chi", chi_text);
  mul->add_option("--nu1", nu1_text, "Negative-type weight: body list or JSON");
  mul->add_option("--nu2", nu2_text, "Positive-type weight: body list or JSON");
  mul->add_option("--diagram-bound", diagram_bound, "Without --nu1/--nu2: list all constituents from |D| <= bound");
  mul->callback([&] { action = [&] { return run_multiplicity(chi_text, nu1_text, nu2_text, diagram_bound, out, limits()); }; });

  ReciprocityArgs ra;
  auto* rec = app.add_subcommand("reciprocity", "Check the reciprocity formula for one triple, a batch, a grid or a random sample");
  rec->add_option("--nu", ra.nu, "Dominant gl_N weight, e.g. [1,0,-1]");
  rec->add_option("--lambda-minus", ra.lambda_minus, "Negative-type weight: body list or JSON");
  rec->add_option("--mu-plus", ra.mu_plus, "Positive-type weight: body list or JSON");
  rec->add_option("--N-list", ra.n_list, "Ranks, e.g. [4,5,6]; default: three ranks from the stable bound");
  rec->add_option("--batch", ra.batch, "JSON-lines file of triples");
  rec->add_option("--random", ra.random, "Number of seeded random triples");
  rec->add_option("--grid", ra.grid, "Exhaustive grid with partition sizes up to this bound");
  rec->add_option("--seed", ra.seed)->capture_default_str();
  rec->add_option("--max-size", ra.max_size, "Partition size bound for --random")->capture_default_str();
  rec->add_option("--jobs", ra.jobs, "Worker threads (0: hardware concurrency)");
  rec->callback([&] { action = [&] { return run_reciprocity(ra, out, limits()); }; });

  std::string nu_text;
  int kr_N = 0, size_bound = 2;
  auto* kr = app.add_subcommand("kac-radul", "Branching table of L(Lambda(nu), -N)");
  kr->add_option("--nu", nu_text)->required();
  kr->add_option("--N", kr_N)->required();
  kr->add_option("--size-bound", size_bound)->capture_default_str();
  kr->callback([&] { action = [&] { return run_kac_radul(nu_text, kr_N, size_bound, out, limits()); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage_error;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return usage_error;
}
