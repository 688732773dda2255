#pragma once

// Jump-sequence bookkeeping for a subset J (the k_i, ktilde_i, c) and the
// admissible-pair machinery that attaches the permutations sigma and tau to
// (w, J) and reconstructs w from sigma.

#include <stdexcept>
#include <vector>

#include "eo/signed_permutation.hpp"

namespace eo {

struct ParabolicDatum {
  int g = 0;
  SubsetJ J;
  int c = 0;
  std::vector<int> k;       // k[0..2c], 0 = k_0 < ... < k_c = g, k_i = 2g - k_{2c-i}
  std::vector<int> ktilde;  // ktilde_i = g - k_{c-i} for i <= c, mirrored above
  SubsetJ Jtilde;           // {g - i : i in J}
};

inline ParabolicDatum parabolic_datum(int g, const SubsetJ& J) {
  if (J.g != g) throw std::invalid_argument("parabolic_datum: subset rank mismatch");
  ParabolicDatum d;
  d.g = g;
  d.J = J;
  for (int v = 0; v <= g; ++v)
    if (!J.contains(v)) d.k.push_back(v);
  d.c = static_cast<int>(d.k.size()) - 1;
  for (int i = d.c - 1; i >= 0; --i) d.k.push_back(2 * g - d.k[i]);
  d.ktilde.resize(2 * d.c + 1);
  for (int i = 0; i <= d.c; ++i) d.ktilde[i] = g - d.k[d.c - i];
  for (int i = d.c + 1; i <= 2 * d.c; ++i) d.ktilde[i] = 2 * g - d.ktilde[2 * d.c - i];
  std::vector<int> tilde;
  for (int i : J.members) tilde.push_back(g - i);
  d.Jtilde = SubsetJ(g, std::move(tilde));
  return d;
}

// (w, J) is admissible when w is in W^I and {}^w(Jtilde) = J with every
// conjugate w s_j w^{-1}, j in Jtilde, a simple reflection.
inline bool is_admissible(const SignedPermutation& w, const SubsetJ& J) {
  if (J.g != w.rank()) return false;
  if (!in_WI(w)) return false;
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (!conjugates_all_simple(w, d.Jtilde)) return false;
  return twisted_parabolic(w, d.Jtilde) == J;
}

struct AdmissiblePair {
  SignedPermutation w;
  ParabolicDatum datum;
  std::vector<int> sigma;  // sigma[i-1] = sigma(i), a permutation of {1..2c}
  std::vector<int> tau;    // tau(i) = sigma(i+c) for i <= c, sigma(i-c) above

  int c() const { return datum.c; }
  int sig(int i) const { return sigma[i - 1]; }
  int tu(int i) const { return tau[i - 1]; }
};

namespace detail {

inline std::vector<int> tau_from_sigma(const std::vector<int>& sigma) {
  const int c2 = static_cast<int>(sigma.size());
  const int c = c2 / 2;
  std::vector<int> tau(c2);
  for (int i = 1; i <= c2; ++i) tau[i - 1] = i <= c ? sigma[i + c - 1] : sigma[i - c - 1];
  return tau;
}

inline void validate_sigma(const ParabolicDatum& d, const std::vector<int>& sigma) {
  const int c2 = 2 * d.c;
  if (static_cast<int>(sigma.size()) != c2) throw std::invalid_argument("sigma: wrong size");
  std::vector<char> seen(c2 + 1, 0);
  for (int v : sigma) {
    if (v < 1 || v > c2 || seen[v]) throw std::invalid_argument("sigma: not a permutation of {1..2c}");
    seen[v] = 1;
  }
  for (int i = 1; i <= c2; ++i)
    if (sigma[c2 - i] != c2 + 1 - sigma[i - 1])
      throw std::invalid_argument("sigma: symmetry sigma(2c+1-i) = 2c+1-sigma(i) violated");
  for (int i = 1; i + 1 <= d.c; ++i)
    if (sigma[i - 1] >= sigma[i]) throw std::invalid_argument("sigma: sigma(1) < ... < sigma(c) violated");
  for (int i = 1; i <= c2; ++i)
    if (d.k[i] - d.k[i - 1] != d.k[sigma[i - 1]] - d.k[sigma[i - 1] - 1])
      throw std::invalid_argument("sigma: block sizes k_i - k_{i-1} not preserved");
}

}  // namespace detail

// sigma is the unique permutation of {1..2c} with (w*x)(k_i) = k_{sigma(i)}.
inline AdmissiblePair sigma_of(const SignedPermutation& w, const SubsetJ& J) {
  if (!is_admissible(w, J)) throw std::invalid_argument("sigma_of: pair (w, J) is not admissible");
  const int g = w.rank();
  ParabolicDatum d = parabolic_datum(g, J);
  const SignedPermutation wx = compose(w, longest_x(g));
  std::vector<int> sigma(2 * d.c);
  for (int i = 1; i <= 2 * d.c; ++i) {
    const int val = wx(d.k[i]);
    int idx = -1;
    for (int j = 1; j <= 2 * d.c; ++j)
      if (d.k[j] == val) {
        idx = j;
        break;
      }
    if (idx < 0) throw std::logic_error("sigma_of: (w*x)(k_i) is not a jump value");
    sigma[i - 1] = idx;
  }
  detail::validate_sigma(d, sigma);
  AdmissiblePair pair{w, std::move(d), sigma, detail::tau_from_sigma(sigma)};
  return pair;
}

// Inverse direction: the unique w in W^I with w(ktilde_i) = k_{tau(i)} and
// w(a) = k_{tau(i)} - (ktilde_i - a) on each block ktilde_{i-1} < a <= ktilde_i.
inline SignedPermutation weyl_from_sigma(int g, const SubsetJ& J, const std::vector<int>& sigma) {
  const ParabolicDatum d = parabolic_datum(g, J);
  detail::validate_sigma(d, sigma);
  const std::vector<int> tau = detail::tau_from_sigma(sigma);
  std::vector<int> im(2 * g, 0);
  for (int i = 1; i <= 2 * d.c; ++i)
    for (int a = d.ktilde[i - 1] + 1; a <= d.ktilde[i]; ++a)
      im[a - 1] = d.k[tau[i - 1]] - (d.ktilde[i] - a);
  SignedPermutation w(g, std::move(im));
  if (!in_WI(w)) throw std::logic_error("weyl_from_sigma: reconstructed element is not in W^I");
  return w;
}

// Maximal J with (w, J) admissible; admissible subsets are closed under
// union, so the maximum is the union of all of them.
inline SubsetJ max_admissible_J(const SignedPermutation& w) {
  if (!in_WI(w)) throw std::invalid_argument("max_admissible_J: w is not in W^I");
  const int g = w.rank();
  std::vector<int> best;
  const int nbits = std::max(0, g - 1);
  for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
    std::vector<int> mem;
    for (int i = 1; i <= nbits; ++i)
      if ((mask >> (i - 1)) & 1u) mem.push_back(i);
    SubsetJ J(g, std::move(mem));
    if (static_cast<int>(J.members.size()) <= static_cast<int>(best.size())) continue;
    if (is_admissible(w, J)) best = J.members;
  }
  return SubsetJ(g, std::move(best));
}

// All admissible pairs (w, J) at rank g, deterministic order.
inline std::vector<AdmissiblePair> all_admissible_pairs(int g) {
  std::vector<AdmissiblePair> out;
  const int nbits = std::max(0, g - 1);
  for (const auto& w : min_coset_reps(g, full_I(g), CosetSide::Right)) {
    for (std::uint32_t mask = 0; mask < (1u << nbits); ++mask) {
      std::vector<int> mem;
      for (int i = 1; i <= nbits; ++i)
        if ((mask >> (i - 1)) & 1u) mem.push_back(i);
      SubsetJ J(g, std::move(mem));
      if (is_admissible(w, J)) out.push_back(sigma_of(w, J));
    }
  }
  return out;
}

}  // namespace eo
