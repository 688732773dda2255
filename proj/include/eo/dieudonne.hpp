#pragma once

// Dieudonne modules of BT_1 group schemes over finite fields.  F acts as
// coordinatewise p-th power followed by Fmat; V is stored as the matrix of
// the induced linear map into the Frobenius twist, so V(v) = (Vmat v)^(1/p).
// Under this encoding every axiom is plain matrix algebra:
//   F o V = 0            <=>  Fmat Vmat = 0
//   V o F = 0            <=>  Vmat Fmat = 0
//   ker F = im V         <=>  ker Fmat = col Vmat
//   ker V = im F         <=>  ker Vmat = col Fmat
//   <Fx,y> = <x,Vy>^p    <=>  Fmat^T Psi = Psi^(p) Vmat
// and the canonical filtration is the closure of {im F} under
// U -> F(U^tw) and U -> V^{-1}(U^tw).

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "eo/gf.hpp"
#include "eo/parabolic.hpp"
#include "eo/signed_permutation.hpp"

namespace eo {

struct FieldSpec {
  long long p = 2;
  int m = 1;
  std::vector<int> modulus;  // optional when m = 1

  Field make() const { return Field(p, m, modulus.empty() && m == 1 ? std::vector<int>{} : modulus); }

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p == b.p && a.m == b.m && a.make().modulus() == b.make().modulus();
  }
};

struct DieudonneModule {
  FieldSpec field;
  int h = 0;
  Mat F, V;
  std::optional<Mat> pairing;
};

inline Mat column_space(const Field& Fq, const Mat& M) { return row_space(Fq, mat_transpose(M)); }

// Untwisted kernel of the semilinear F: (ker Fmat)^(1/p).
inline Mat kernel_F(const DieudonneModule& D) {
  const Field Fq = D.field.make();
  Mat n = nullspace(Fq, D.F);
  for (auto& v : n.a) v = Fq.frob_inv(v);
  rref_inplace(Fq, n);
  return n;
}

// Empty string when all axioms hold, else the name of the first violated one.
inline std::string validate_bt1_reason(const DieudonneModule& D) {
  if (D.F.rows != D.h || D.F.cols != D.h || D.V.rows != D.h || D.V.cols != D.h)
    return "F and V must be h x h";
  const Field Fq = D.field.make();
  if (!mat_is_zero(mat_mul(Fq, D.F, D.V))) return "F∘V ≠ 0";
  if (!mat_is_zero(mat_mul(Fq, D.V, D.F))) return "V∘F ≠ 0";
  if (!subspace_eq(Fq, nullspace(Fq, D.F), column_space(Fq, D.V))) return "ker F ≠ im V";
  if (!subspace_eq(Fq, nullspace(Fq, D.V), column_space(Fq, D.F))) return "ker V ≠ im F";
  if (D.pairing) {
    const Mat& Psi = *D.pairing;
    if (Psi.rows != D.h || Psi.cols != D.h) return "pairing must be h x h";
    for (int i = 0; i < D.h; ++i) {
      if (Psi.at(i, i) != 0) return "pairing not alternating";
      for (int j = 0; j < D.h; ++j)
        if (Psi.at(i, j) != Fq.neg(Psi.at(j, i))) return "pairing not alternating";
    }
    if (rank(Fq, Psi) != D.h) return "pairing degenerate";
    Mat psi_tw = Psi;
    for (auto& v : psi_tw.a) v = Fq.frob(v);
    if (mat_mul(Fq, mat_transpose(D.F), Psi) != mat_mul(Fq, psi_tw, D.V))
      return "pairing incompatible: ⟨Fx,y⟩ ≠ ⟨x,Vy⟩^p";
  }
  return {};
}

inline bool validate_bt1(const DieudonneModule& D) { return validate_bt1_reason(D).empty(); }

struct CanonicalChain {
  std::vector<Mat> subspaces;  // D_0 = 0 through D_2c = D, rref bases
  std::vector<int> dims;       // k_0..k_2c
  std::vector<int> sigma;      // sigma[i-1] = sigma(i), permutation of {1..2c}
  int sweeps = 0;              // productive closure sweeps, at most h
};

namespace detail {

inline Mat op_F(const Field& Fq, const Mat& Fm, const Mat& U) { return image_of(Fq, Fm, twist(Fq, U)); }

inline Mat op_Vinv(const Field& Fq, const Mat& Vm, const Mat& U) {
  return preimage_of(Fq, Vm, twist(Fq, U));
}

}  // namespace detail

inline CanonicalChain canonical_filtration(const DieudonneModule& D) {
  const std::string reason = validate_bt1_reason(D);
  if (!reason.empty()) throw std::invalid_argument("canonical_filtration: not a BT1: " + reason);
  const Field Fq = D.field.make();

  std::vector<Mat> members{column_space(Fq, D.F)};
  CanonicalChain chain;
  bool grew = true;
  while (grew) {
    grew = false;
    const size_t snapshot = members.size();
    for (size_t idx = 0; idx < snapshot; ++idx) {
      for (int which = 0; which < 2; ++which) {
        Mat next = which == 0 ? detail::op_F(Fq, D.F, members[idx])
                              : detail::op_Vinv(Fq, D.V, members[idx]);
        bool known = false;
        for (const auto& m : members) known = known || m == next;
        if (!known) {
          members.push_back(std::move(next));
          grew = true;
        }
      }
    }
    if (grew) ++chain.sweeps;
    if (chain.sweeps > D.h + 1) throw std::logic_error("canonical_filtration: closure failed to stabilize");
  }

  Mat zero(0, D.h), full = row_space(Fq, mat_identity(D.h));
  bool have0 = false, haveD = false;
  for (const auto& m : members) {
    have0 = have0 || m == zero;
    haveD = haveD || m == full;
  }
  if (!have0) members.push_back(zero);
  if (!haveD) members.push_back(full);

  std::sort(members.begin(), members.end(), [](const Mat& a, const Mat& b) { return a.rows < b.rows; });
  for (size_t i = 0; i + 1 < members.size(); ++i) {
    if (members[i].rows == members[i + 1].rows)
      throw std::logic_error("canonical_filtration: closure produced incomparable subspaces");
    if (!subspace_contains(Fq, members[i + 1], members[i]))
      throw std::logic_error("canonical_filtration: closure produced incomparable subspaces");
  }

  chain.subspaces = std::move(members);
  for (const auto& m : chain.subspaces) chain.dims.push_back(m.rows);

  // im F sits at position c; sigma is read off from the jump pattern of
  // j -> F(D_j^tw) on the lower half and j -> V^{-1}(D_j^tw) on the upper.
  const int n = static_cast<int>(chain.subspaces.size()) - 1;
  int c = -1;
  const Mat imF = column_space(Fq, D.F);
  for (int i = 0; i <= n; ++i)
    if (chain.subspaces[i] == imF) c = i;
  if (c < 0) throw std::logic_error("canonical_filtration: im F is not a chain member");

  chain.sigma.assign(n, 0);
  for (int i = 1; i <= c; ++i) {
    int found = -1;
    for (int j = 1; j <= n && found < 0; ++j)
      if (detail::op_F(Fq, D.F, chain.subspaces[j]) == chain.subspaces[i]) found = j;
    if (found < 0 || detail::op_F(Fq, D.F, chain.subspaces[found - 1]) != chain.subspaces[i - 1])
      throw std::logic_error("canonical_filtration: F jump pattern violated");
    chain.sigma[i - 1] = found;
  }
  for (int i = c + 1; i <= n; ++i) {
    int found = -1;
    for (int j = 1; j <= n && found < 0; ++j)
      if (detail::op_Vinv(Fq, D.V, chain.subspaces[j]) == chain.subspaces[i]) found = j;
    if (found < 0 || detail::op_Vinv(Fq, D.V, chain.subspaces[found - 1]) != chain.subspaces[i - 1])
      throw std::logic_error("canonical_filtration: V jump pattern violated");
    chain.sigma[i - 1] = found;
  }
  for (int i = 1; i <= n; ++i) {
    const int s = chain.sigma[i - 1];
    if (chain.dims[i] - chain.dims[i - 1] != chain.dims[s] - chain.dims[s - 1])
      throw std::logic_error("canonical_filtration: sigma does not preserve block sizes");
  }
  return chain;
}

// Classification of a principally quasi-polarized BT1 of height 2g: the
// unique w in W^I with (w*x)(k_i) = k_{sigma(i)}, together with the chain
// type J.
inline std::pair<SignedPermutation, SubsetJ> classify(const DieudonneModule& D) {
  if (D.h % 2 != 0) throw std::invalid_argument("classify: height must be even");
  if (!D.pairing) throw std::invalid_argument("classify: pairing required");
  const int g = D.h / 2;
  const Field Fq = D.field.make();
  const CanonicalChain chain = canonical_filtration(D);
  const int n = static_cast<int>(chain.dims.size()) - 1;

  // self-duality of the chain and symmetry of sigma
  for (int i = 0; i <= n; ++i)
    if (!subspace_eq(Fq, perp_subspace(Fq, chain.subspaces[i], *D.pairing), chain.subspaces[n - i]))
      throw std::invalid_argument("classify: canonical chain is not self-dual");
  for (int i = 1; i <= n; ++i)
    if (chain.sigma[n - i] != n + 1 - chain.sigma[i - 1])
      throw std::invalid_argument("classify: sigma is not self-dual");

  std::vector<int> mem;
  for (int v = 1; v <= g - 1; ++v) {
    bool is_jump = false;
    for (int d : chain.dims) is_jump = is_jump || d == v;
    if (!is_jump) mem.push_back(v);
  }
  SubsetJ J(g, std::move(mem));
  SignedPermutation w = weyl_from_sigma(g, J, chain.sigma);
  if (!is_admissible(w, J)) throw std::logic_error("classify: reconstructed pair is not admissible");
  return {std::move(w), std::move(J)};
}

// Standard module of a stratum: one coordinate block per subquotient of the
// canonical chain for (w, J_w), F identifying block sigma(i) with block i
// for i <= c, V identifying block i with block sigma(i) for i > c, and the
// standard antidiagonal pairing.  Sign choices on V make the pairing
// compatible.
inline DieudonneModule standard_module_for(const SignedPermutation& w, long long p = 2) {
  if (!in_WI(w)) throw std::invalid_argument("standard_module_for: w is not in W^I");
  const int g = w.rank();
  DieudonneModule D;
  D.field = FieldSpec{p, 1, {}};
  D.h = 2 * g;
  D.F = Mat(2 * g, 2 * g);
  D.V = Mat(2 * g, 2 * g);
  const Field Fq = D.field.make();
  Mat psi(2 * g, 2 * g);
  for (int a = 1; a <= 2 * g; ++a) psi.at(a - 1, 2 * g - a) = a <= g ? Fq.one() : Fq.from_int(-1);
  D.pairing = std::move(psi);
  if (g == 0) return D;

  const AdmissiblePair pair = sigma_of(w, max_admissible_J(w));
  const auto& k = pair.datum.k;
  const int c = pair.c();
  for (int i = 1; i <= c; ++i) {
    const int len = k[i] - k[i - 1];
    for (int s = 0; s < len; ++s) D.F.at(k[i - 1] + s, k[pair.sig(i) - 1] + s) = Fq.one();
  }
  for (int j = c + 1; j <= 2 * c; ++j) {
    const Field::Elt sign = pair.sig(2 * c + 1 - j) <= c ? Fq.one() : Fq.from_int(-1);
    const int len = k[j] - k[j - 1];
    for (int s = 0; s < len; ++s) D.V.at(k[pair.sig(j) - 1] + s, k[j - 1] + s) = sign;
  }
  return D;
}

inline DieudonneModule direct_sum(const DieudonneModule& a, const DieudonneModule& b) {
  if (!(a.field == b.field)) throw std::invalid_argument("direct_sum: field mismatch");
  DieudonneModule out;
  out.field = a.field;
  out.h = a.h + b.h;
  auto embed = [&](const Mat& x, const Mat& y) {
    Mat r(out.h, out.h);
    for (int i = 0; i < a.h; ++i)
      for (int j = 0; j < a.h; ++j) r.at(i, j) = x.at(i, j);
    for (int i = 0; i < b.h; ++i)
      for (int j = 0; j < b.h; ++j) r.at(a.h + i, a.h + j) = y.at(i, j);
    return r;
  };
  out.F = embed(a.F, b.F);
  out.V = embed(a.V, b.V);
  if (a.pairing && b.pairing) out.pairing = embed(*a.pairing, *b.pairing);
  return out;
}

// t-fold sum of the mu_p module (F = 0, V = 1); the zero module carries a
// trivial pairing.
inline DieudonneModule module_multiplicative(long long p, int t) {
  if (t < 0) throw std::invalid_argument("module_multiplicative: negative rank");
  DieudonneModule D;
  D.field = FieldSpec{p, 1, {}};
  D.h = t;
  D.F = Mat(t, t);
  D.V = mat_identity(t);
  if (t == 0) D.pairing = Mat(0, 0);
  return D;
}

// t-fold sum of the etale rank-1 module (F = 1, V = 0).
inline DieudonneModule module_etale(long long p, int t) {
  if (t < 0) throw std::invalid_argument("module_etale: negative rank");
  DieudonneModule D;
  D.field = FieldSpec{p, 1, {}};
  D.h = t;
  D.F = mat_identity(t);
  D.V = Mat(t, t);
  if (t == 0) D.pairing = Mat(0, 0);
  return D;
}

// Cusp embedding: classify the sum of the standard module of w' with dual
// multiplicative and etale blocks of rank t, the pairing extended so those
// two blocks pair with each other.  Basis order [mult | middle | etale]
// makes the standard antidiagonal form restrict correctly to each piece.
inline SignedPermutation iota_cusp(const SignedPermutation& wprime, int t, long long p = 2) {
  if (t < 0) throw std::invalid_argument("iota_cusp: negative torus rank");
  const int gp = wprime.rank();
  const int g = gp + t;
  const DieudonneModule mid = standard_module_for(wprime, p);
  DieudonneModule D;
  D.field = FieldSpec{p, 1, {}};
  D.h = 2 * g;
  D.F = Mat(2 * g, 2 * g);
  D.V = Mat(2 * g, 2 * g);
  const Field Fq = D.field.make();
  for (int i = 0; i < t; ++i) {
    D.V.at(i, i) = Fq.one();                          // mult block: F = 0, V = 1
    D.F.at(2 * g - t + i, 2 * g - t + i) = Fq.one();  // etale block: F = 1, V = 0
  }
  for (int i = 0; i < 2 * gp; ++i)
    for (int j = 0; j < 2 * gp; ++j) {
      D.F.at(t + i, t + j) = mid.F.at(i, j);
      D.V.at(t + i, t + j) = mid.V.at(i, j);
    }
  Mat psi(2 * g, 2 * g);
  for (int a = 1; a <= 2 * g; ++a) psi.at(a - 1, 2 * g - a) = a <= g ? Fq.one() : Fq.from_int(-1);
  D.pairing = std::move(psi);
  return classify(D).first;
}

// View the same matrices over F_{p^{ml}}.  For a prime base field the
// embedding is the canonical one; otherwise a root of the old modulus is
// located in the target field.
inline DieudonneModule extend_scalars(const DieudonneModule& D, int l, std::vector<int> target_modulus = {}) {
  if (l < 1) throw std::invalid_argument("extend_scalars: degree must be positive");
  const Field base = D.field.make();
  const int mt = base.m() * l;
  if (target_modulus.empty()) target_modulus = Field::find_modulus(base.p(), mt);
  Field target(base.p(), mt, target_modulus);  // validates irreducibility

  DieudonneModule out;
  out.field = FieldSpec{base.p(), mt, target.modulus()};
  out.h = D.h;
  if (base.m() == 1) {
    out.F = D.F;
    out.V = D.V;
    out.pairing = D.pairing;
    return out;
  }
  // find an embedding: a root of the base modulus in the target field
  Field::Elt root = 0;
  bool found = false;
  for (unsigned long long v = 0; v < target.q() && !found; ++v) {
    Field::Elt acc = 0, pw = 1;
    for (int i = 0; i <= base.m(); ++i) {
      acc = target.add(acc, target.mul(target.from_int(base.modulus()[i]), pw));
      pw = target.mul(pw, static_cast<Field::Elt>(v));
    }
    if (acc == 0) {
      root = static_cast<Field::Elt>(v);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("extend_scalars: modulus not a valid extension");
  auto embed_elt = [&](Field::Elt e) {
    const std::vector<int> cs = base.coeffs(e);
    Field::Elt acc = 0, pw = 1;
    for (int i = 0; i < base.m(); ++i) {
      acc = target.add(acc, target.mul(target.from_int(cs[i]), pw));
      pw = target.mul(pw, root);
    }
    return acc;
  };
  auto embed_mat = [&](const Mat& m) {
    Mat r = m;
    for (auto& v : r.a) v = embed_elt(v);
    return r;
  };
  out.F = embed_mat(D.F);
  out.V = embed_mat(D.V);
  if (D.pairing) out.pairing = embed_mat(*D.pairing);
  return out;
}

// Numerical validator for a mod p PEL datum: d_tau + d_{tau*} = h_{[tau]}
// for every embedding tau, where h is keyed by the orbit {tau, tau*} via its
// lexicographically smallest member.
inline bool validate_modp_pel_datum(const std::map<std::string, long long>& h,
                                    const std::map<std::string, long long>& d,
                                    const std::map<std::string, std::string>& star) {
  for (const auto& [tau, img] : star) {
    auto it = star.find(img);
    if (it == star.end() || it->second != tau)
      throw std::invalid_argument("validate_modp_pel_datum: star is not an involution");
  }
  for (const auto& [tau, dv] : d) {
    auto st = star.find(tau);
    if (st == star.end()) throw std::invalid_argument("validate_modp_pel_datum: star undefined on tau");
    auto dstar = d.find(st->second);
    if (dstar == d.end()) throw std::invalid_argument("validate_modp_pel_datum: d undefined on tau*");
    const std::string key = std::min(tau, st->second);
    auto hv = h.find(key);
    if (hv == h.end() || dv + dstar->second != hv->second) return false;
  }
  return true;
}

}  // namespace eo
