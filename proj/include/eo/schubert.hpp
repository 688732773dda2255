#pragma once

// Symplectic flag combinatorics over F_p: the standard antidiagonal pairing,
// intersection-dimension matrices d_w and d_w^B, open and closed Schubert
// cell membership, the simplified closed-cell test for admissible pairs,
// relative position of a flag pair, and the maximal double-coset element.

#include <random>
#include <stdexcept>
#include <vector>

#include "eo/gf.hpp"
#include "eo/parabolic.hpp"
#include "eo/signed_permutation.hpp"

namespace eo {

// F_p^{2g} with psi(e_i, e_{2g+1-j}) = delta_{ij} for 1 <= i, j <= g and
// antisymmetry; Gram matrix has +1 on the upper antidiagonal half, -1 below.
struct SymplecticSpace {
  long long p = 0;
  int g = 0;
  Field field;
  Mat gram;

  SymplecticSpace(long long p_in, int g_in) : p(p_in), g(g_in), field(p_in, 1), gram(2 * g_in, 2 * g_in) {
    for (int a = 1; a <= 2 * g; ++a)
      gram.at(a - 1, 2 * g - a) = a <= g ? field.one() : field.from_int(-1);
  }
};

inline Mat standard_gram(const Field& F, int g) {
  Mat gr(2 * g, 2 * g);
  for (int a = 1; a <= 2 * g; ++a) gr.at(a - 1, 2 * g - a) = a <= g ? F.one() : F.from_int(-1);
  return gr;
}

inline Mat perp(const SymplecticSpace& sp, const Mat& U) {
  return perp_subspace(sp.field, U, sp.gram);
}

// E_d = <e_1,...,e_d>.
inline Mat coordinate_subspace(int ambient, int d) {
  Mat m(d, ambient);
  for (int i = 0; i < d; ++i) m.at(i, i) = 1;
  return m;
}

// A partial isotropic flag F_1 c ... c F_c with dim F_i = ktilde_i for the
// type Jtilde; the upper half is always derived via perp.
struct SymplecticFlag {
  long long p = 0;
  int g = 0;
  SubsetJ Jtilde;
  std::vector<Mat> subspaces;  // rref bases of F_1..F_c
};

namespace detail {

inline SubsetJ tilde_of(const SubsetJ& J) {
  std::vector<int> mem;
  for (int i : J.members) mem.push_back(J.g - i);
  return SubsetJ(J.g, std::move(mem));
}

// The datum whose ktilde values are the dimension vector of a type-Jtilde
// flag is the one attached to J = tilde(Jtilde).
inline ParabolicDatum datum_for_flag(const SymplecticFlag& fl) {
  return parabolic_datum(fl.g, tilde_of(fl.Jtilde));
}

}  // namespace detail

inline void validate_flag(const SymplecticFlag& fl) {
  const SymplecticSpace sp(fl.p, fl.g);
  const ParabolicDatum d = detail::datum_for_flag(fl);
  if (static_cast<int>(fl.subspaces.size()) != d.c)
    throw std::invalid_argument("SymplecticFlag: expected c subspaces");
  for (int i = 1; i <= d.c; ++i) {
    const Mat& Fi = fl.subspaces[i - 1];
    if (Fi.rows != d.ktilde[i] || (Fi.rows > 0 && Fi.cols != 2 * fl.g))
      throw std::invalid_argument("SymplecticFlag: subspace dimensions do not match ktilde");
    if (row_space(sp.field, Fi) != Fi)
      throw std::invalid_argument("SymplecticFlag: bases must be reduced row-echelon");
    if (i > 1 && !subspace_contains(sp.field, Fi, fl.subspaces[i - 2]))
      throw std::invalid_argument("SymplecticFlag: subspaces are not nested");
  }
  const Mat& top = fl.subspaces.back();
  if (!mat_is_zero(mat_mul(sp.field, mat_mul(sp.field, top, sp.gram), mat_transpose(top))))
    throw std::invalid_argument("SymplecticFlag: F_c is not isotropic");
}

// F_0, ..., F_2c with F_{2c-i} = F_i^perp.
inline std::vector<Mat> full_flag(const SymplecticFlag& fl) {
  const SymplecticSpace sp(fl.p, fl.g);
  const int c = static_cast<int>(fl.subspaces.size());
  std::vector<Mat> out(2 * c + 1);
  out[0] = Mat(0, 2 * fl.g);
  for (int i = 1; i <= c; ++i) out[i] = fl.subspaces[i - 1];
  for (int i = 0; i < c; ++i) out[2 * c - i] = perp(sp, out[i]);
  return out;
}

inline bool in_double_coset_reps(const SignedPermutation& w, const SubsetJ& J, const SubsetJ& Jt) {
  return in_right_reps(w, Jt) && in_right_reps(w.inverse(), J);
}

// d_w(i, j) = #(w{1..ktilde_i} cap {1..k_j}) for w in {}^J W^{Jtilde}.
inline std::vector<std::vector<int>> schubert_dims(const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (!in_double_coset_reps(w, J, d.Jtilde))
    throw std::invalid_argument("schubert_dims: w is not a minimal double-coset representative");
  const int c2 = 2 * d.c;
  std::vector<std::vector<int>> dm(c2 + 1, std::vector<int>(c2 + 1, 0));
  for (int i = 0; i <= c2; ++i)
    for (int j = 0; j <= c2; ++j) {
      int cnt = 0;
      for (int a = 1; a <= d.ktilde[i]; ++a)
        if (w(a) <= d.k[j]) ++cnt;
      dm[i][j] = cnt;
    }
  return dm;
}

// Borel variant d_w^B(i, j) = #(w{1..ktilde_i} cap {1..j}), j = 0..2g,
// for w in W^{Jtilde}.
inline std::vector<std::vector<int>> schubert_dims_borel(const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (!in_right_reps(w, d.Jtilde))
    throw std::invalid_argument("schubert_dims_borel: w is not in W^{Jtilde}");
  const int n = 2 * w.rank();
  std::vector<std::vector<int>> dm(2 * d.c + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= 2 * d.c; ++i)
    for (int j = 0; j <= n; ++j) {
      int cnt = 0;
      for (int a = 1; a <= d.ktilde[i]; ++a)
        if (w(a) <= j) ++cnt;
      dm[i][j] = cnt;
    }
  return dm;
}

namespace detail {

inline std::vector<std::vector<int>> flag_intersection_dims(const SymplecticFlag& fl,
                                                            const ParabolicDatum& d) {
  const SymplecticSpace sp(fl.p, fl.g);
  const std::vector<Mat> F = full_flag(fl);
  const int c2 = 2 * d.c;
  std::vector<std::vector<int>> dims(c2 + 1, std::vector<int>(c2 + 1, 0));
  for (int i = 0; i <= c2; ++i)
    for (int j = 0; j <= c2; ++j)
      dims[i][j] = intersection_dim(sp.field, F[i], coordinate_subspace(2 * fl.g, d.k[j]));
  return dims;
}

}  // namespace detail

inline bool in_open_cell(const SymplecticFlag& fl, const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (fl.g != w.rank() || fl.Jtilde != d.Jtilde)
    throw std::invalid_argument("in_open_cell: flag type does not match (w, J)");
  const auto want = schubert_dims(w, J);
  return detail::flag_intersection_dims(fl, d) == want;
}

inline bool in_closed_cell(const SymplecticFlag& fl, const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (fl.g != w.rank() || fl.Jtilde != d.Jtilde)
    throw std::invalid_argument("in_closed_cell: flag type does not match (w, J)");
  const auto want = schubert_dims(w, J);
  const auto have = detail::flag_intersection_dims(fl, d);
  for (size_t i = 0; i < want.size(); ++i)
    for (size_t j = 0; j < want.size(); ++j)
      if (have[i][j] < want[i][j]) return false;
  return true;
}

// Closed-cell membership for an admissible pair reduces to the containments
// F_i c E_{tau(i)}, i = 1..c.
inline bool admissible_closed_test(const SymplecticFlag& fl, const AdmissiblePair& pair) {
  const ParabolicDatum& d = pair.datum;
  if (fl.g != d.g || fl.Jtilde != d.Jtilde)
    throw std::invalid_argument("admissible_closed_test: flag type does not match the pair");
  for (int i = 1; i <= d.c; ++i) {
    const Mat& Fi = fl.subspaces[i - 1];
    const int bound = d.k[pair.tu(i)];
    for (int r = 0; r < Fi.rows; ++r)
      for (int col = bound; col < Fi.cols; ++col)
        if (Fi.at(r, col)) return false;
  }
  return true;
}

// Relative position of a pair of flags.  flagE plays the role of the
// standard flag of type J (its dimensions are the k_j), flagF is the moving
// flag of type Jtilde; the result is the unique w in {}^J W^{Jtilde} whose
// dimension matrix matches dim(F_i cap E_j).
inline SignedPermutation relpos(const SymplecticFlag& flagE, const SymplecticFlag& flagF) {
  if (flagE.p != flagF.p || flagE.g != flagF.g)
    throw std::invalid_argument("relpos: flags live in different spaces");
  const SubsetJ& J = flagE.Jtilde;  // the E-side flag has type J, dims k_j
  const ParabolicDatum d = parabolic_datum(flagE.g, J);
  if (flagF.Jtilde != d.Jtilde)
    throw std::invalid_argument("relpos: flag types are not tilde-linked");
  const SymplecticSpace sp(flagE.p, flagE.g);
  const std::vector<Mat> E = full_flag(flagE);
  const std::vector<Mat> F = full_flag(flagF);
  const int c2 = 2 * d.c;
  std::vector<std::vector<int>> dims(c2 + 1, std::vector<int>(c2 + 1, 0));
  for (int i = 0; i <= c2; ++i)
    for (int j = 0; j <= c2; ++j) dims[i][j] = intersection_dim(sp.field, F[i], E[j]);
  for (const auto& w : enumerate_group(flagE.g)) {
    if (!in_double_coset_reps(w, J, d.Jtilde)) continue;
    if (schubert_dims(w, J) == dims) return w;
  }
  throw std::invalid_argument("relpos: dimension matrix matches no minimal representative");
}

// Maximal-length element of (W_J w W_{Jtilde}) cap W^{Jtilde};
// dim Ybar_w = length(dot_w).
inline SignedPermutation dot_w(const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  if (!in_double_coset_reps(w, J, d.Jtilde))
    throw std::invalid_argument("dot_w: w is not a minimal double-coset representative");
  SignedPermutation best = w;
  int best_len = length(w);
  for (const auto& u : parabolic_subgroup(J))
    for (const auto& v : parabolic_subgroup(d.Jtilde)) {
      const SignedPermutation cand = compose(compose(u, w), v);
      if (!in_right_reps(cand, d.Jtilde)) continue;
      const int l = length(cand);
      if (l > best_len) {
        best = cand;
        best_len = l;
      }
    }
  return best;
}

// The coordinate flag of a given type: subspaces <e_1,...,e_{d_i}> with the
// dimension vector the type prescribes.
inline SymplecticFlag standard_flag(long long p, int g, const SubsetJ& type) {
  const ParabolicDatum d = parabolic_datum(g, detail::tilde_of(type));
  SymplecticFlag fl;
  fl.p = p;
  fl.g = g;
  fl.Jtilde = type;
  for (int i = 1; i <= d.c; ++i) fl.subspaces.push_back(coordinate_subspace(2 * g, d.ktilde[i]));
  validate_flag(fl);
  return fl;
}

// The translated standard flag w.Etilde with subspaces <e_{w(1)},...,e_{w(ktilde_i)}>.
inline SymplecticFlag translated_standard_flag(long long p, const SignedPermutation& w, const SubsetJ& J) {
  const ParabolicDatum d = parabolic_datum(w.rank(), J);
  const Field F(p, 1);
  SymplecticFlag fl;
  fl.p = p;
  fl.g = w.rank();
  fl.Jtilde = d.Jtilde;
  for (int i = 1; i <= d.c; ++i) {
    Mat m(d.ktilde[i], 2 * w.rank());
    for (int a = 1; a <= d.ktilde[i]; ++a) m.at(a - 1, w(a) - 1) = 1;
    fl.subspaces.push_back(row_space(F, m));
  }
  validate_flag(fl);
  return fl;
}

// All flags of type Jtilde over F_p, by extending isotropic subspaces one
// ktilde-step at a time.  Only sensible for tiny p and g.
inline std::vector<SymplecticFlag> enumerate_flags(long long p, int g, const SubsetJ& Jtilde) {
  const SymplecticSpace sp(p, g);
  const ParabolicDatum d = parabolic_datum(g, detail::tilde_of(Jtilde));
  std::vector<std::vector<Mat>> partial{{}};
  for (int step = 1; step <= d.c; ++step) {
    const int want = d.ktilde[step];
    std::vector<std::vector<Mat>> next;
    for (const auto& chain : partial) {
      const Mat base = chain.empty() ? Mat(0, 2 * g) : chain.back();
      // candidates live inside base^perp and contain base
      std::vector<Mat> exts{row_space(sp.field, base)};
      for (int grow = base.rows; grow < want; ++grow) {
        std::vector<Mat> bigger;
        for (const auto& cur : exts) {
          const Mat bound = perp_subspace(sp.field, cur, sp.gram);
          // enumerate vectors of bound's row space not already in cur
          const unsigned long long count = [&] {
            unsigned long long t = 1;
            for (int r = 0; r < bound.rows; ++r) t *= static_cast<unsigned long long>(p);
            return t;
          }();
          for (unsigned long long code = 1; code < count; ++code) {
            unsigned long long cc = code;
            std::vector<Field::Elt> vec(2 * g, 0);
            for (int r = 0; r < bound.rows; ++r) {
              const Field::Elt coef = sp.field.from_int(static_cast<long long>(cc % p));
              cc /= static_cast<unsigned long long>(p);
              if (!coef) continue;
              for (int col = 0; col < 2 * g; ++col)
                vec[col] = sp.field.add(vec[col], sp.field.mul(coef, bound.at(r, col)));
            }
            Mat cand(1, 2 * g);
            cand.a = vec;
            if (subspace_contains(sp.field, cur, cand)) continue;
            Mat ext = row_space(sp.field, stack_rows(cur, cand));
            // keep isotropic
            if (!mat_is_zero(mat_mul(sp.field, mat_mul(sp.field, ext, sp.gram), mat_transpose(ext))))
              continue;
            bigger.push_back(std::move(ext));
          }
        }
        std::sort(bigger.begin(), bigger.end());
        bigger.erase(std::unique(bigger.begin(), bigger.end()), bigger.end());
        exts = std::move(bigger);
      }
      for (auto& e : exts) {
        auto c2 = chain;
        c2.push_back(e);
        next.push_back(std::move(c2));
      }
    }
    partial = std::move(next);
  }
  std::vector<SymplecticFlag> out;
  for (auto& chain : partial) {
    SymplecticFlag fl;
    fl.p = p;
    fl.g = g;
    fl.Jtilde = Jtilde;
    fl.subspaces = std::move(chain);
    validate_flag(fl);
    out.push_back(std::move(fl));
  }
  return out;
}

// A pseudorandom flag of type Jtilde; deterministic for a given generator
// state.
inline SymplecticFlag random_flag(long long p, int g, const SubsetJ& Jtilde, std::mt19937_64& rng) {
  const SymplecticSpace sp(p, g);
  const ParabolicDatum d = parabolic_datum(g, detail::tilde_of(Jtilde));
  Mat cur(0, 2 * g);
  std::vector<Mat> chain;
  for (int step = 1; step <= d.c; ++step) {
    while (cur.rows < d.ktilde[step]) {
      const Mat bound = perp_subspace(sp.field, cur, sp.gram);
      std::vector<Field::Elt> vec(2 * g, 0);
      for (int r = 0; r < bound.rows; ++r) {
        const Field::Elt coef = sp.field.from_int(static_cast<long long>(rng() % static_cast<unsigned long long>(p)));
        if (!coef) continue;
        for (int col = 0; col < 2 * g; ++col)
          vec[col] = sp.field.add(vec[col], sp.field.mul(coef, bound.at(r, col)));
      }
      Mat cand(1, 2 * g);
      cand.a = vec;
      if (mat_is_zero(cand) || subspace_contains(sp.field, cur, cand)) continue;
      Mat ext = row_space(sp.field, stack_rows(cur, cand));
      if (!mat_is_zero(mat_mul(sp.field, mat_mul(sp.field, ext, sp.gram), mat_transpose(ext)))) continue;
      cur = std::move(ext);
    }
    chain.push_back(cur);
  }
  SymplecticFlag fl;
  fl.p = p;
  fl.g = g;
  fl.Jtilde = Jtilde;
  fl.subspaces = std::move(chain);
  validate_flag(fl);
  return fl;
}

}  // namespace eo
