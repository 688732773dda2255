#pragma once

// Arithmetic in F_{p^m} and the small dense linear algebra the Dieudonne and
// Schubert machinery needs: reduced row echelon form, rank, nullspace,
// intersections, images and preimages, entrywise Frobenius twists.
//
// Elements are packed base p into a single word: value = sum d_i p^i with
// digits d_i in [0, p).  Fields stay desk-scale (p^m small), so all routines
// are straightforward dense algorithms.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace eo {

namespace gfpoly {

// Helpers on polynomials over F_p, coefficient vectors lowest degree first.
// Used for modulus validation and reduction tables only.

inline std::vector<int> trim(std::vector<int> a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b, long long p) {
  if (a.empty() || b.empty()) return {};
  std::vector<int> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = static_cast<int>((r[i + j] + 1LL * a[i] * b[j]) % p);
  return trim(std::move(r));
}

inline std::vector<int> mod(std::vector<int> a, const std::vector<int>& f, long long p) {
  a = trim(std::move(a));
  const int df = static_cast<int>(f.size()) - 1;
  // make f monic for the division loop
  long long lead_inv = 1;
  {
    long long lead = f.back() % p, t = 1, base = lead, e = p - 2;
    while (e) {
      if (e & 1) t = t * base % p;
      base = base * base % p;
      e >>= 1;
    }
    lead_inv = t;
  }
  while (static_cast<int>(a.size()) - 1 >= df) {
    const int shift = static_cast<int>(a.size()) - 1 - df;
    const long long q = a.back() % p * lead_inv % p;
    for (int i = 0; i <= df; ++i)
      a[i + shift] = static_cast<int>(((a[i + shift] - q * f[i]) % p + p) % p);
    a = trim(std::move(a));
  }
  return a;
}

inline std::vector<int> powmod(std::vector<int> base, long long e, const std::vector<int>& f, long long p) {
  std::vector<int> r{1};
  base = mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = mod(mul(r, base, p), f, p);
    base = mod(mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

inline std::vector<int> gcd(std::vector<int> a, std::vector<int> b, long long p) {
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    std::vector<int> r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Irreducibility over F_p: x^{p^m} = x mod f, and gcd(x^{p^{m/l}} - x, f) = 1
// for every prime l dividing m.
inline bool irreducible(const std::vector<int>& f, long long p) {
  const int m = static_cast<int>(f.size()) - 1;
  if (m < 1) return false;
  auto pow_ll = [](long long b, int e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
  };
  const std::vector<int> x{0, 1};
  std::vector<int> xq = powmod(x, pow_ll(p, m), f, p);
  std::vector<int> diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
  if (!trim(diff).empty()) return false;
  for (int l = 2; l <= m; ++l) {
    if (m % l != 0) continue;
    bool lprime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) lprime = false;
    if (!lprime) continue;
    std::vector<int> xql = powmod(x, pow_ll(p, m / l), f, p);
    xql.resize(std::max<size_t>(xql.size(), 2), 0);
    xql[1] = static_cast<int>(((xql[1] - 1) % p + p) % p);
    if (static_cast<int>(gcd(f, trim(xql), p).size()) - 1 > 0) return false;
  }
  return true;
}

}  // namespace gfpoly

class Field {
 public:
  using Elt = std::uint32_t;

  // modulus: monic irreducible of degree m over F_p, coefficients lowest
  // degree first including the leading 1; empty and m = 1 means F_p.
  Field(long long p, int m, std::vector<int> modulus = {}) : p_(p), m_(m), modulus_(std::move(modulus)) {
    if (p < 2) throw std::invalid_argument("Field: p must be at least 2");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("Field: p is not prime");
    if (m < 1) throw std::invalid_argument("Field: extension degree must be positive");
    if (m == 1 && modulus_.empty()) modulus_ = {0, 1};
    if (static_cast<int>(modulus_.size()) != m + 1 || modulus_.back() % p != 1)
      throw std::invalid_argument("Field: modulus must be monic of degree m");
    for (int& c : modulus_) c = static_cast<int>(((c % p) + p) % p);
    if (m > 1 && !gfpoly::irreducible(modulus_, p)) throw std::invalid_argument("Field: modulus is reducible");
    q_ = 1;
    for (int i = 0; i < m; ++i) {
      if (q_ > (1ull << 31) / static_cast<unsigned long long>(p))
        throw std::invalid_argument("Field: p^m too large for packed representation");
      q_ *= static_cast<unsigned long long>(p);
    }
    // reduction rows: x^{m+t} mod f for t = 0..m-2
    if (m > 1) {
      std::vector<int> cur(modulus_.begin(), modulus_.end() - 1);  // x^m = -tail
      for (int& c : cur) c = static_cast<int>((p - c) % p);
      for (int t = 0; t <= m - 2; ++t) {
        red_.push_back(cur);
        // multiply by x and reduce once
        std::vector<int> nxt(m, 0);
        for (int i = 0; i + 1 < m; ++i) nxt[i + 1] = cur[i];
        const int top = cur[m - 1];
        for (int i = 0; i < m; ++i)
          nxt[i] = static_cast<int>((nxt[i] + 1LL * top * ((p - modulus_[i]) % p)) % p);
        cur = std::move(nxt);
      }
    }
  }

  static Field prime(long long p) { return Field(p, 1); }

  // First irreducible monic polynomial of degree m over F_p in the
  // coefficient order scanned below; deterministic.
  static std::vector<int> find_modulus(long long p, int m) {
    if (m == 1) return {0, 1};
    std::vector<int> f(m + 1, 0);
    f[m] = 1;
    unsigned long long total = 1;
    for (int i = 0; i < m; ++i) total *= static_cast<unsigned long long>(p);
    for (unsigned long long code = 0; code < total; ++code) {
      unsigned long long c = code;
      for (int i = 0; i < m; ++i) {
        f[i] = static_cast<int>(c % static_cast<unsigned long long>(p));
        c /= static_cast<unsigned long long>(p);
      }
      if (gfpoly::irreducible(f, p)) return f;
    }
    throw std::logic_error("find_modulus: no irreducible polynomial found");
  }

  long long p() const { return p_; }
  int m() const { return m_; }
  unsigned long long q() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  bool same_as(const Field& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }

  Elt from_int(long long v) const { return static_cast<Elt>(((v % p_) + p_) % p_); }

  Elt from_coeffs(const std::vector<int>& cs) const {
    if (static_cast<int>(cs.size()) > m_) throw std::invalid_argument("Field: too many coefficients");
    Elt v = 0;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i)
      v = static_cast<Elt>(v * p_ + ((cs[i] % p_) + p_) % p_);
    return v;
  }

  std::vector<int> coeffs(Elt a) const {
    std::vector<int> cs(m_);
    for (int i = 0; i < m_; ++i) {
      cs[i] = static_cast<int>(a % p_);
      a = static_cast<Elt>(a / p_);
    }
    return cs;
  }

  Elt add(Elt a, Elt b) const {
    if (m_ == 1) return static_cast<Elt>((a + b) % p_);
    Elt r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
      r += mul * static_cast<Elt>((a % p_ + b % p_) % p_);
      a /= static_cast<Elt>(p_);
      b /= static_cast<Elt>(p_);
      mul *= static_cast<Elt>(p_);
    }
    return r;
  }

  Elt neg(Elt a) const {
    if (m_ == 1) return static_cast<Elt>((p_ - a) % p_);
    Elt r = 0, mul = 1;
    for (int i = 0; i < m_; ++i) {
      r += mul * static_cast<Elt>((p_ - a % p_) % p_);
      a /= static_cast<Elt>(p_);
      mul *= static_cast<Elt>(p_);
    }
    return r;
  }

  Elt sub(Elt a, Elt b) const { return add(a, neg(b)); }

  Elt mul(Elt a, Elt b) const {
    if (m_ == 1) return static_cast<Elt>(1ull * a * b % static_cast<unsigned long long>(p_));
    int da[16], db[16];
    long long prod[31] = {0};
    for (int i = 0; i < m_; ++i) {
      da[i] = static_cast<int>(a % p_);
      a /= static_cast<Elt>(p_);
      db[i] = static_cast<int>(b % p_);
      b /= static_cast<Elt>(p_);
    }
    for (int i = 0; i < m_; ++i)
      if (da[i])
        for (int j = 0; j < m_; ++j) prod[i + j] += 1LL * da[i] * db[j];
    long long out[16] = {0};
    for (int i = 0; i < m_; ++i) out[i] = prod[i] % p_;
    for (int t = 0; t <= m_ - 2; ++t) {
      const long long hi = prod[m_ + t] % p_;
      if (!hi) continue;
      for (int i = 0; i < m_; ++i) out[i] = (out[i] + hi * red_[t][i]) % p_;
    }
    Elt r = 0;
    for (int i = m_ - 1; i >= 0; --i) r = static_cast<Elt>(r * p_ + out[i]);
    return r;
  }

  Elt pow(Elt a, unsigned long long e) const {
    Elt r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Elt inv(Elt a) const {
    if (a == 0) throw std::domain_error("Field: division by zero");
    return pow(a, q_ - 2);
  }

  Elt frob(Elt a) const { return m_ == 1 ? a : pow(a, static_cast<unsigned long long>(p_)); }

  Elt frob_inv(Elt a) const {
    if (m_ == 1) return a;
    unsigned long long e = 1;
    for (int i = 0; i < m_ - 1; ++i) e *= static_cast<unsigned long long>(p_);
    return pow(a, e);  // x^{p^{m-1}}
  }

 private:
  long long p_;
  int m_;
  std::vector<int> modulus_;
  unsigned long long q_ = 0;
  std::vector<std::vector<int>> red_;
};

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Field::Elt> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  Field::Elt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  Field::Elt at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
  friend bool operator<(const Mat& x, const Mat& y) {
    if (x.rows != y.rows) return x.rows < y.rows;
    if (x.cols != y.cols) return x.cols < y.cols;
    return x.a < y.a;
  }
};

inline Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Field::Elt v = x.at(i, k);
      if (!v) continue;
      for (int j = 0; j < y.cols; ++j)
        if (y.at(k, j)) r.at(i, j) = F.add(r.at(i, j), F.mul(v, y.at(k, j)));
    }
  return r;
}

inline Mat mat_transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

inline bool mat_is_zero(const Mat& x) {
  for (auto v : x.a)
    if (v) return false;
  return true;
}

inline Mat stack_rows(const Mat& x, const Mat& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  if (x.cols != y.cols) throw std::invalid_argument("stack_rows: width mismatch");
  Mat r(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
  return r;
}

// In-place Gauss-Jordan; returns the pivot columns.  Zero rows are dropped,
// so the result is the canonical reduced row-echelon basis of the row space.
inline std::vector<int> rref_inplace(const Field& F, Mat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c)) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pr, j));
    const Field::Elt piv_inv = F.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(m.at(r, j), piv_inv);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || !m.at(i, c)) continue;
      const Field::Elt f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  m.a.resize(static_cast<size_t>(r) * m.cols);
  m.rows = r;
  return pivots;
}

inline Mat row_space(const Field& F, Mat m) {
  rref_inplace(F, m);
  return m;
}

inline int rank(const Field& F, Mat m) {
  rref_inplace(F, m);
  return m.rows;
}

// Canonical basis of {v : m v^T = 0} (right nullspace), rows are the basis.
inline Mat nullspace(const Field& F, Mat m) {
  const int n = m.cols;
  const std::vector<int> pivots = rref_inplace(F, m);
  std::vector<char> is_pivot(n, 0);
  for (int c : pivots) is_pivot[c] = 1;
  Mat out(n - static_cast<int>(pivots.size()), n);
  int row = 0;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    out.at(row, c) = 1;
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      out.at(row, pivots[pi]) = F.neg(m.at(static_cast<int>(pi), c));
    ++row;
  }
  rref_inplace(F, out);
  return out;
}

// Subspaces are rref row bases throughout.

inline bool subspace_eq(const Field& F, const Mat& u, const Mat& v) {
  return row_space(F, u) == row_space(F, v);
}

inline bool subspace_contains(const Field& F, const Mat& big, const Mat& small) {
  if (small.rows == 0) return true;
  return rank(F, stack_rows(big, small)) == rank(F, big);
}

inline Mat subspace_sum(const Field& F, const Mat& u, const Mat& v) {
  return row_space(F, stack_rows(u, v));
}

// dim(U cap W) = dim U + dim W - rank [U; W].
inline int intersection_dim(const Field& F, const Mat& u, const Mat& v) {
  return u.rows + v.rows - rank(F, stack_rows(u, v));
}

// Basis of U cap W: annihilator intersection computed via nullspaces.
inline Mat intersection(const Field& F, const Mat& u, const Mat& v, int ambient) {
  Mat ua = u, va = v;
  if (ua.rows == 0) ua.cols = ambient;
  if (va.rows == 0) va.cols = ambient;
  if (ua.cols != ambient || va.cols != ambient)
    throw std::invalid_argument("intersection: ambient dimension mismatch");
  const Mat nu = nullspace(F, ua);
  const Mat nv = nullspace(F, va);
  return nullspace(F, stack_rows(nu, nv));
}

// Row space of M applied to a subspace: span{ b M^T : b in basis(U) }.
inline Mat image_of(const Field& F, const Mat& M, const Mat& U) {
  if (U.rows == 0) return Mat(0, M.rows);
  Mat r = mat_mul(F, U, mat_transpose(M));
  rref_inplace(F, r);
  return r;
}

// {v : M v in U}, U given by a row basis inside F^rows(M).
inline Mat preimage_of(const Field& F, const Mat& M, const Mat& U) {
  Mat ua = U;
  if (ua.rows == 0) ua.cols = M.rows;
  if (ua.cols != M.rows) throw std::invalid_argument("preimage_of: shape mismatch");
  const Mat ann = nullspace(F, ua);  // functionals vanishing on U
  if (ann.rows == 0) return row_space(F, mat_identity(M.cols));
  return nullspace(F, mat_mul(F, ann, M));
}

// Entrywise Frobenius twist of a subspace basis (image under x -> x^p).
inline Mat twist(const Field& F, Mat U) {
  for (auto& v : U.a) v = F.frob(v);
  rref_inplace(F, U);
  return U;
}

// U^perp with respect to a Gram matrix: {v : B Psi v = 0}.
inline Mat perp_subspace(const Field& F, const Mat& U, const Mat& gram) {
  if (U.rows == 0) return row_space(F, mat_identity(gram.cols));
  return nullspace(F, mat_mul(F, U, gram));
}

}  // namespace eo
