// Command-line front end: stratum tables, module classification,
// descendant and inequality reports, Schubert membership checks, and the
// exhaustive verification sweep.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 domain-validation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "eo/dieudonne.hpp"
#include "eo/hasse.hpp"
#include "eo/parabolic.hpp"
#include "eo/schubert.hpp"
#include "eo/serialize.hpp"
#include "eo/signed_permutation.hpp"
#include "eo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> split_ints(const std::string& s) {
  std::vector<long long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoll(tok));
  return out;
}

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

eo::SignedPermutation parse_perm(const std::string& s) {
  const auto vals = split_ints(s);
  if (vals.size() % 2 != 0) throw UsageError("--w expects 2g comma-separated images");
  std::vector<int> im(vals.begin(), vals.end());
  const int g = static_cast<int>(im.size()) / 2;
  try {
    return eo::SignedPermutation(g, std::move(im));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--w: ") + e.what());
  }
}

eo::SubsetJ parse_subset(int g, const std::string& s) {
  const auto vals = split_ints(s);
  try {
    return eo::SubsetJ(g, std::vector<int>(vals.begin(), vals.end()));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--j: ") + e.what());
  }
}

eo::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open file: " + path);
  eo::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw UsageError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
  return j;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string join_ll(const std::vector<long long>& v, char sep) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int cmd_strata(int g, long long p, const std::string& format) {
  if (g < 1 || g > 8) throw UsageError("--g must lie in 1..8");
  if (!is_prime_ll(p)) throw UsageError("--p must be prime");
  struct Row {
    eo::SignedPermutation w;
    int length;
    eo::SubsetJ Jw;
    std::vector<int> sigma;
    int N;
    long long total_weight;
    std::vector<long long> c;
    int descendant_count;
  };
  std::vector<Row> rows;
  for (const auto& w : eo::min_coset_reps(g, eo::full_I(g), eo::CosetSide::Right)) {
    const eo::SubsetJ Jw = eo::max_admissible_J(w);
    const eo::AdmissiblePair pair = eo::sigma_of(w, Jw);
    const eo::HasseExponents he = eo::hasse_exponents(pair, p);
    const auto [N, wt] = eo::total_weight_check(pair, p);
    rows.push_back(Row{w, eo::length(w), Jw, pair.sigma, N, wt.coeffs.front(), he.coeffs,
                       static_cast<int>(eo::bruhat_descendants(pair).size())});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.w < b.w;
  });
  if (format == "csv") {
    std::cout << "w,length,Jw,sigma,N,total_weight,c,descendant_count\n";
    for (const auto& r : rows)
      std::cout << join_ints(r.w.images(), ';') << ',' << r.length << ',' << join_ints(r.Jw.members, ';')
                << ',' << join_ints(r.sigma, ';') << ',' << r.N << ',' << r.total_weight << ','
                << join_ll(r.c, ';') << ',' << r.descendant_count << '\n';
  } else {
    eo::json out = eo::json::array();
    for (const auto& r : rows) {
      eo::json jr;
      jr["w"] = r.w.images();
      jr["length"] = r.length;
      jr["Jw"] = r.Jw.members;
      jr["sigma"] = r.sigma;
      jr["N"] = r.N;
      jr["total_weight"] = r.total_weight;
      jr["c"] = r.c;
      jr["descendant_count"] = r.descendant_count;
      out.push_back(std::move(jr));
    }
    std::cout << out.dump(2) << '\n';
  }
  return kExitOk;
}

int cmd_classify(const std::string& path) {
  const eo::json j = load_json_file(path);
  eo::DieudonneModule D;
  try {
    D = eo::module_from_json(j);
  } catch (const std::exception& e) {
    throw UsageError(std::string("module file: ") + e.what());
  }
  const std::string reason = eo::validate_bt1_reason(D);
  if (!reason.empty()) {
    std::cerr << reason << '\n';
    return kExitDomain;
  }
  eo::json out;
  try {
    const eo::CanonicalChain chain = eo::canonical_filtration(D);
    const auto [w, J] = eo::classify(D);
    out["w"] = w.images();
    out["J"] = J.members;
    out["k"] = chain.dims;
    out["sigma"] = chain.sigma;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_descendants(const std::string& w_str, const std::string& j_str) {
  const eo::SignedPermutation w = parse_perm(w_str);
  const eo::SubsetJ J = parse_subset(w.rank(), j_str);
  if (!eo::is_admissible(w, J)) {
    std::cerr << "pair (w, J) is not admissible\n";
    return kExitDomain;
  }
  const eo::AdmissiblePair pair = eo::sigma_of(w, J);
  eo::json out = eo::json::array();
  for (const auto& rec : eo::bruhat_descendants(pair)) out.push_back(eo::descendant_to_json(rec));
  std::cout << out.dump(2) << '\n';
  return kExitOk;
}

int cmd_schubert(const std::string& flag_path, const std::string& w_str, const std::string& j_str,
                 bool open_cell) {
  const eo::json fj = load_json_file(flag_path);
  eo::SymplecticFlag fl;
  try {
    fl = eo::flag_from_json(fj);
  } catch (const std::exception& e) {
    throw UsageError(std::string("flag file: ") + e.what());
  }
  const eo::SignedPermutation w = parse_perm(w_str);
  const eo::SubsetJ J = parse_subset(w.rank(), j_str);
  bool member = false;
  try {
    member = open_cell ? eo::in_open_cell(fl, w, J) : eo::in_closed_cell(fl, w, J);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitDomain;
  }
  std::cout << (member ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_verify(int g_max, const std::string& primes_str, const std::string& checks_str) {
  if (g_max < 1 || g_max > 6) throw UsageError("--g-max must lie in 1..6");
  std::vector<long long> primes = split_ints(primes_str);
  if (primes.empty()) primes = {2, 3};
  for (long long q : primes)
    if (!is_prime_ll(q)) throw UsageError("--p entries must be prime");
  std::vector<std::string> checks = split_names(checks_str);
  if (checks.empty() || (checks.size() == 1 && checks[0] == "all"))
    checks = split_names(eo::check_names());

  bool all_ok = true;
  for (const std::string& name : checks) {
    eo::CheckResult res;
    if (name == "weights")
      res = eo::check_weights(g_max, primes);
    else if (name == "inequality")
      res = eo::check_inequality_sweep(g_max, primes);
    else if (name == "descendants")
      res = eo::check_descendants(g_max);
    else if (name == "roundtrip")
      res = eo::check_roundtrip(g_max);
    else if (name == "bruhat")
      res = eo::check_bruhat(std::min(g_max, 3));
    else if (name == "schubert")
      res = eo::check_schubert(std::min(g_max, 3));
    else
      throw UsageError("unknown check: " + name + " (expected one of " + eo::check_names() + ")");
    std::cout << "check " << res.name << ": " << res.cases << " cases, "
              << (res.ok() ? "ok" : "FAILED") << '\n';
    if (!res.ok()) {
      all_ok = false;
      std::cout << res.failures.front().dump(2) << '\n';
    }
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ekedahl-Oort strata, Dieudonne-module classification, and Hasse-invariant combinatorics"};
  app.require_subcommand(1);

  auto* strata = app.add_subcommand("strata", "stratum table for W^I at rank g");
  int g = 1;
  long long p = 2;
  std::string format = "json";
  strata->add_option("--g", g, "rank")->required();
  strata->add_option("--p", p, "prime")->required();
  strata->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* classify = app.add_subcommand("classify", "classify a Dieudonne module file");
  std::string module_path;
  classify->add_option("--module", module_path, "module JSON file")->required();

  auto* desc = app.add_subcommand("descendants", "Bruhat descendants of an admissible pair");
  std::string w_str, j_str;
  desc->add_option("--w", w_str, "comma-separated images")->required();
  desc->add_option("--j", j_str, "comma-separated subset of {1..g-1}");

  auto* schubert = app.add_subcommand("schubert", "Schubert cell membership for a flag file");
  std::string flag_path, sw_str, sj_str;
  bool open_cell = false, closed_cell = false;
  schubert->add_option("--flag", flag_path, "flag JSON file")->required();
  schubert->add_option("--w", sw_str, "comma-separated images")->required();
  schubert->add_option("--j", sj_str, "comma-separated subset of {1..g-1}");
  schubert->add_flag("--open", open_cell, "test open-cell membership");
  schubert->add_flag("--closed", closed_cell, "test closed-cell membership");

  auto* verify = app.add_subcommand("verify", "run exhaustive verification sweeps");
  int g_max = 3;
  std::string primes_str = "2,3", checks_str = "all";
  verify->add_option("--g-max", g_max, "largest rank to sweep (1..6)");
  verify->add_option("--p", primes_str, "comma-separated primes");
  verify->add_option("--check", checks_str,
                     "comma-separated checks or 'all'; the bruhat and schubert oracles cap their "
                     "rank at 3");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ? kExitOk : kExitUsage;
  }

  try {
    if (*strata) return cmd_strata(g, p, format);
    if (*classify) return cmd_classify(module_path);
    if (*desc) return cmd_descendants(w_str, j_str);
    if (*schubert) {
      if (open_cell == closed_cell) throw UsageError("pass exactly one of --open or --closed");
      return cmd_schubert(flag_path, sw_str, sj_str, open_cell);
    }
    if (*verify) return cmd_verify(g_max, primes_str, checks_str);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFail;
  }
  return kExitUsage;
}
