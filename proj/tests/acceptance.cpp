// Acceptance suite: every criterion runs at its stated tolerance and prints
// one pass/fail line.  Exact integer identities throughout; each criterion
// also carries a wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "eo/dieudonne.hpp"
#include "eo/hasse.hpp"
#include "eo/parabolic.hpp"
#include "eo/schubert.hpp"
#include "eo/signed_permutation.hpp"
#include "eo/verify.hpp"

using namespace eo;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<std::pair<bool, long long>()> run;  // (pass, cases)
};

int failures = 0;

void run_criterion(const Criterion& cr) {
  const auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  long long cases = 0;
  std::string error;
  try {
    const auto [ok, n] = cr.run();
    pass = ok;
    cases = n;
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > cr.budget_seconds) {
    pass = false;
    error = "exceeded " + std::to_string(cr.budget_seconds) + "s budget";
  }
  if (!pass) ++failures;
  std::printf("%s criterion %2d: %s (cases=%lld, %.2fs)%s%s\n", pass ? "PASS" : "FAIL", cr.number,
              cr.title.c_str(), cases, secs, error.empty() ? "" : " -- ", error.c_str());
}

std::pair<bool, long long> from_check(const CheckResult& res) { return {res.ok(), res.cases}; }

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "g=1 weights: ordinary p-1, supersingular p^2-1 for p in {2,3,5,7}", 1.0,
       [] {
         long long cases = 0;
         bool ok = true;
         for (long long p : {2, 3, 5, 7}) {
           const auto ord = total_weight_check(sigma_of(simple_reflection(1, 1), SubsetJ(1, {})), p);
           const auto ss =
               total_weight_check(sigma_of(SignedPermutation::identity(1), SubsetJ(1, {})), p);
           ok = ok && ord.second.coeffs == std::vector<long long>{p - 1};
           ok = ok && ss.second.coeffs == std::vector<long long>{p * p - 1};
           cases += 2;
         }
         return std::pair<bool, long long>{ok, cases};
       }},
      {2, "weight identity sum c_i wt(A_i') = (p^N-1)(1..1), g <= 5, p in {2,3,5,7}", 30.0,
       [] { return from_check(check_weights(5, {2, 3, 5, 7})); }},
      {3, "positivity sum c_i ord_v(C_{c+1-i}) > 0, g <= 5, p in {2,3,5}", 60.0,
       [] { return from_check(check_inequality_sweep(5, {2, 3, 5})); }},
      {4, "descendant formulas equal brute force, g <= 4", 60.0,
       [] { return from_check(check_descendants(4)); }},
      {5, "classify after standard_module_for is the identity on W^I, g <= 4", 10.0,
       [] {
         const auto res = check_roundtrip(4);
         return std::pair<bool, long long>{res.ok() && res.cases == 30, res.cases};
       }},
      {6, "|W^I| = 2^g and top length g(g+1)/2, g <= 8", 10.0,
       [] {
         long long cases = 0;
         bool ok = true;
         for (int g = 1; g <= 8; ++g) {
           const auto reps = min_coset_reps(g, full_I(g), CosetSide::Right);
           ok = ok && reps.size() == (1ull << g);
           int top = 0;
           for (const auto& w : reps) top = std::max(top, length(w));
           ok = ok && top == g * (g + 1) / 2;
           cases += static_cast<long long>(reps.size());
         }
         return std::pair<bool, long long>{ok, cases};
       }},
      {7, "admissible_closed_test equals in_closed_cell (F_2 exhaustive g <= 2, 500 F_3 flags)", 60.0,
       [] { return from_check(check_schubert(3, 500)); }},
      {8, "classify matches relpos of (canonical chain, kernel flag), g <= 3", 10.0,
       [] { return from_check(check_relpos_oracle(3)); }},
      {9, "cusp map values and injectivity, g' <= 2, t <= 2", 5.0,
       [] {
         bool ok = iota_cusp(SignedPermutation::identity(0), 1) == simple_reflection(1, 1) &&
                   iota_cusp(simple_reflection(1, 1), 1) == longest_x(2) &&
                   iota_cusp(SignedPermutation::identity(1), 1) == SignedPermutation(2, {2, 4, 1, 3});
         const auto inj = check_iota_injective(2, 2);
         return std::pair<bool, long long>{ok && inj.ok(), inj.cases + 3};
       }},
      {10, "Bruhat rank-matrix criterion equals subword oracle, g <= 3", 30.0,
       [] { return from_check(check_bruhat(3)); }},
      {11, "power congruence x^{p^n} = y^{p^n} mod p^{min(e,r)}, 1000 randomized cases", 5.0,
       [] {
         const auto res = check_power_congruence(1000);
         return std::pair<bool, long long>{res.ok() && res.cases == 1000, res.cases};
       }},
      {12, "inner lemma sigma(r)+sigma(s) < 2c+1, g <= 4", 10.0,
       [] { return from_check(check_inner_lemma(4)); }},
  };

  for (const auto& cr : criteria) run_criterion(cr);
  if (failures) {
    std::printf("%d criteria FAILED\n", failures);
    return 1;
  }
  std::printf("all %zu criteria passed\n", criteria.size());
  return 0;
}
