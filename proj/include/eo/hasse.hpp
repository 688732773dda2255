#pragma once

// Hasse-invariant exponent combinatorics attached to an admissible pair:
// cycle lcm N, signed p-power exponents c_i, symbolic weights of the partial
// invariants A_i', Bruhat descendants with vanishing orders, the positivity
// inequality, and the power-congruence bound.

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eo/parabolic.hpp"
#include "eo/signed_permutation.hpp"

namespace eo {

namespace detail {

inline long long checked_pow(long long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (std::numeric_limits<long long>::max)() / p)
      throw std::overflow_error("checked_pow: p^e exceeds 64 bits");
    r *= p;
  }
  return r;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

// lcm of the cycle lengths of a permutation given in image form (1-based).
inline long long cycle_lcm(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("cycle_lcm: not a permutation");
    seen[v] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  long long l = 1;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = sigma[j - 1];
      ++len;
    }
    l = std::lcm(l, static_cast<long long>(len));
  }
  return l;
}

struct HasseExponents {
  long long p = 0;
  int c = 0;
  int N = 0;
  std::vector<long long> coeffs;          // c_1..c_c
  std::vector<std::vector<int>> epsilon;  // epsilon[i-1][j] for j = 0..N-1, values +-1
};

// c_i = sum_j epsilon_{i,j} p^j with epsilon_{i,N-j} = +1 iff sigma^j(i) <= c.
inline HasseExponents hasse_exponents(const AdmissiblePair& pair, long long p) {
  if (!detail::is_prime(p)) throw std::invalid_argument("hasse_exponents: p is not prime");
  HasseExponents he;
  he.p = p;
  he.c = pair.c();
  he.N = static_cast<int>(cycle_lcm(pair.sigma));
  he.coeffs.resize(he.c);
  he.epsilon.assign(he.c, std::vector<int>(he.N, 0));
  for (int i = 1; i <= he.c; ++i) {
    int cur = i;
    for (int j = 1; j <= he.N; ++j) {
      cur = pair.sig(cur);
      he.epsilon[i - 1][he.N - j] = cur <= he.c ? 1 : -1;
    }
    long long ci = 0;
    for (int j = 0; j < he.N; ++j) ci += he.epsilon[i - 1][j] * detail::checked_pow(p, j);
    he.coeffs[i - 1] = ci;
  }
  return he;
}

// Exponent vector a_1..a_c of a line bundle written as a tensor product of
// the omega_i; omega itself is the all-ones vector.
struct WeightVector {
  std::vector<long long> coeffs;

  friend bool operator==(const WeightVector& a, const WeightVector& b) { return a.coeffs == b.coeffs; }
};

// Weight of A_i': -e_i + p e_{sigma(i)} when sigma(i) <= c; the duality
// substitution omega_j ~ omega_{2c+1-j}^dual is applied when sigma(i) > c,
// giving -e_i - p e_{2c+1-sigma(i)}.
inline WeightVector partial_weight(const AdmissiblePair& pair, int i, long long p) {
  const int c = pair.c();
  if (i < 1 || i > c) throw std::invalid_argument("partial_weight: index out of range");
  WeightVector wt;
  wt.coeffs.assign(c, 0);
  wt.coeffs[i - 1] -= 1;
  const int s = pair.sig(i);
  if (s <= c)
    wt.coeffs[s - 1] += p;
  else
    wt.coeffs[2 * c - s] -= p;  // index 2c+1-s, 0-based
  return wt;
}

// sum_i c_i * wt(A_i') must equal (p^N - 1) * (1,...,1); a violation would
// signal an internal inconsistency and is raised as an error.
inline std::pair<int, WeightVector> total_weight_check(const AdmissiblePair& pair, long long p) {
  const HasseExponents he = hasse_exponents(pair, p);
  WeightVector total;
  total.coeffs.assign(he.c, 0);
  for (int i = 1; i <= he.c; ++i) {
    const WeightVector wi = partial_weight(pair, i, p);
    for (int j = 0; j < he.c; ++j) total.coeffs[j] += he.coeffs[i - 1] * wi.coeffs[j];
  }
  const long long expected = detail::checked_pow(p, he.N) - 1;
  for (long long v : total.coeffs)
    if (v != expected)
      throw std::logic_error("total_weight_check: weight identity (p^N-1)*(1..1) violated");
  return {he.N, total};
}

struct DescendantRecord {
  SignedPermutation v;
  bool v_type = false;  // true: v_i; false: v_{a,b}
  int i = 0;            // V-type index
  int a = 0, b = 0;     // AB-type indices
  std::vector<int> ords;  // ord(C_1)..ord(C_c)
};

// ord_{Ybar_v^B}(C_j) = 1 if v = v_j, or v = v_{a,b} with j = a or 2c+1-b.
inline std::vector<int> vanishing_orders(const AdmissiblePair& pair, const DescendantRecord& rec) {
  std::vector<int> ords(pair.c(), 0);
  if (rec.v_type) {
    ords[rec.i - 1] = 1;
  } else {
    ords[rec.a - 1] = 1;
    ords[2 * pair.c() - rec.b] = 1;  // index 2c+1-b
  }
  return ords;
}

namespace detail {

inline SignedPermutation transposition(int g, int a, int b) {
  std::vector<int> im(2 * g);
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[a - 1], im[b - 1]);
  const int n = 2 * g;
  if (a + b != n + 1) std::swap(im[n - a], im[n - b]);
  return SignedPermutation(g, std::move(im));
}

}  // namespace detail

// The Bruhat descendants of an admissible pair:
//   v_i     = w * (ktilde_{i-1}+1  2g-ktilde_{i-1})                    for tau(i) > c,
//   v_{a,b} = w * (ktilde_{a-1}+1  ktilde_b)(2g-ktilde_{a-1}  2g+1-ktilde_b)
//                                      for tau(b) < tau(a) and tau(a) <= c.
inline std::vector<DescendantRecord> bruhat_descendants(const AdmissiblePair& pair) {
  const int g = pair.w.rank();
  const int c = pair.c();
  const auto& kt = pair.datum.ktilde;
  std::vector<DescendantRecord> out;
  for (int i = 1; i <= c; ++i) {
    if (pair.tu(i) <= c) continue;
    DescendantRecord rec;
    rec.v = compose(pair.w, detail::transposition(g, kt[i - 1] + 1, 2 * g - kt[i - 1]));
    rec.v_type = true;
    rec.i = i;
    rec.ords = vanishing_orders(pair, rec);
    out.push_back(std::move(rec));
  }
  for (int a = 1; a <= c; ++a) {
    if (pair.tu(a) > c) continue;
    for (int b = c + 1; b <= 2 * c; ++b) {
      if (pair.tu(b) >= pair.tu(a)) continue;
      DescendantRecord rec;
      rec.v = compose(pair.w, detail::transposition(g, kt[a - 1] + 1, kt[b]));
      rec.v_type = false;
      rec.a = a;
      rec.b = b;
      rec.ords = vanishing_orders(pair, rec);
      out.push_back(std::move(rec));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const DescendantRecord& x, const DescendantRecord& y) { return x.v < y.v; });
  return out;
}

// For each descendant v, the value sum_{i=1..c} c_i * ord_v(C_{c+1-i}).
// Every value must be strictly positive; a non-positive value would falsify
// the inequality and is raised as an error.
inline std::vector<std::pair<DescendantRecord, long long>> check_inequality(const AdmissiblePair& pair,
                                                                            long long p) {
  const HasseExponents he = hasse_exponents(pair, p);
  std::vector<std::pair<DescendantRecord, long long>> out;
  for (const auto& rec : bruhat_descendants(pair)) {
    long long val = 0;
    for (int i = 1; i <= he.c; ++i) val += he.coeffs[i - 1] * rec.ords[he.c - i];  // ord(C_{c+1-i})
    if (val <= 0) throw std::logic_error("check_inequality: non-positive value found");
    out.emplace_back(rec, val);
  }
  return out;
}

// Smallest exponent e with x = y mod p^a implying x^{p^n} = y^{p^n} mod
// p^{min(e,r)} over Z/p^r: e = min_{0<=j<=n} (j + a p^{n-j}).
inline long long power_congruence_bound(long long a, long long n, long long p) {
  if (a < 1 || n < 0 || p < 2) throw std::invalid_argument("power_congruence_bound: bad arguments");
  const long long cap = (std::numeric_limits<long long>::max)() / 2;
  long long best = cap;
  long long pw = 1;  // p^{n-j} built from j = n downwards
  for (long long j = n; j >= 0; --j) {
    if (pw < cap / a) best = std::min(best, j + a * pw);
    if (pw > cap / p)
      pw = cap;
    else
      pw *= p;
  }
  return best;
}

}  // namespace eo
