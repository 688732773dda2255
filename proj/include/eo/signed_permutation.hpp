#pragma once

// Type C_g Weyl group realized inside S_{2g}: elements are permutations w of
// {1,...,2g} with w(2g+1-i) = 2g+1-w(i).  Composition is (u*w)(i) = u(w(i))
// throughout the library.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace eo {

class SignedPermutation {
 public:
  // the trivial rank-0 element; also the default
  SignedPermutation() : g_(0) {}

  // images[i-1] = w(i), 1-based values.  g = 0 gives the trivial group.
  SignedPermutation(int g, std::vector<int> images) : g_(g), img_(std::move(images)) {
    if (g < 0) throw std::invalid_argument("SignedPermutation: negative rank");
    const int n = 2 * g;
    if (static_cast<int>(img_.size()) != n)
      throw std::invalid_argument("SignedPermutation: expected 2g images");
    std::vector<char> seen(n + 1, 0);
    for (int v : img_) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("SignedPermutation: images not a bijection of {1..2g}");
      seen[v] = 1;
    }
    for (int i = 1; i <= n; ++i)
      if (img_[n - i] != n + 1 - img_[i - 1])
        throw std::invalid_argument("SignedPermutation: symmetry w(2g+1-i) = 2g+1-w(i) violated");
  }

  static SignedPermutation identity(int g) {
    std::vector<int> im(2 * g);
    std::iota(im.begin(), im.end(), 1);
    return SignedPermutation(g, std::move(im));
  }

  int rank() const { return g_; }
  int size() const { return 2 * g_; }

  int operator()(int i) const {
    if (i < 1 || i > 2 * g_) throw std::out_of_range("SignedPermutation: point out of range");
    return img_[i - 1];
  }

  const std::vector<int>& images() const { return img_; }

  SignedPermutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= 2 * g_; ++i) inv[img_[i - 1] - 1] = i;
    return SignedPermutation(g_, std::move(inv));
  }

  bool is_identity() const {
    for (int i = 1; i <= 2 * g_; ++i)
      if (img_[i - 1] != i) return false;
    return true;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.g_ == b.g_ && a.img_ == b.img_;
  }
  friend bool operator!=(const SignedPermutation& a, const SignedPermutation& b) { return !(a == b); }
  // lexicographic on images; used for deterministic listings
  friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.g_ != b.g_) return a.g_ < b.g_;
    return a.img_ < b.img_;
  }

 private:
  int g_;
  std::vector<int> img_;
};

// Subset of simple-reflection indices {1,...,g-1}; the generator s_g is never
// a member for the parabolic types used here.
struct SubsetJ {
  int g = 0;
  std::vector<int> members;  // sorted, unique

  SubsetJ() = default;
  SubsetJ(int g_in, std::vector<int> mem) : g(g_in), members(std::move(mem)) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    for (int i : members)
      if (i < 1 || i > g - 1) throw std::invalid_argument("SubsetJ: members must lie in {1..g-1}");
  }

  bool contains(int i) const { return std::binary_search(members.begin(), members.end(), i); }

  friend bool operator==(const SubsetJ& a, const SubsetJ& b) { return a.g == b.g && a.members == b.members; }
  friend bool operator!=(const SubsetJ& a, const SubsetJ& b) { return !(a == b); }
};

inline SignedPermutation simple_reflection(int g, int i) {
  if (i < 1 || i > g) throw std::invalid_argument("simple_reflection: index out of range");
  std::vector<int> im(2 * g);
  std::iota(im.begin(), im.end(), 1);
  const int n = 2 * g;
  std::swap(im[i - 1], im[i]);                    // (i i+1)
  if (i < g) std::swap(im[n - i - 1], im[n - i]); // (2g-i 2g+1-i)
  return SignedPermutation(g, std::move(im));
}

inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& w) {
  if (u.rank() != w.rank()) throw std::invalid_argument("compose: rank mismatch");
  std::vector<int> im(w.size());
  for (int i = 1; i <= w.size(); ++i) im[i - 1] = u(w(i));
  return SignedPermutation(u.rank(), std::move(im));
}

// x = (1 g+1)(2 g+2)...(g 2g), the longest element of {}^I W^I.
inline SignedPermutation longest_x(int g) {
  std::vector<int> im(2 * g);
  for (int i = 1; i <= g; ++i) {
    im[i - 1] = i + g;
    im[i + g - 1] = i;
  }
  return SignedPermutation(g, std::move(im));
}

// Right descent: l(w s_i) < l(w).  For all i = 1..g this reads w(i) > w(i+1)
// on the S_{2g} images (for i = g this uses w(g+1) = 2g+1-w(g)).
inline bool has_right_descent(const SignedPermutation& w, int i) {
  if (i < 1 || i > w.rank()) throw std::invalid_argument("has_right_descent: index out of range");
  return w(i) > w(i + 1);
}

// Coxeter length by greedy descent: strip simple reflections that shorten
// until the identity is reached.
inline int length(const SignedPermutation& w) {
  SignedPermutation cur = w;
  int len = 0;
  while (!cur.is_identity()) {
    int d = 0;
    for (int i = 1; i <= cur.rank(); ++i)
      if (has_right_descent(cur, i)) {
        d = i;
        break;
      }
    if (d == 0) throw std::logic_error("length: no descent on a non-identity element");
    cur = compose(cur, simple_reflection(cur.rank(), d));
    ++len;
  }
  return len;
}

// One reduced word for w (letters are generator indices, product left to
// right under the global composition convention).
inline std::vector<int> reduced_word(const SignedPermutation& w) {
  SignedPermutation cur = w;
  std::vector<int> stripped;
  while (!cur.is_identity()) {
    int d = 0;
    for (int i = 1; i <= cur.rank(); ++i)
      if (has_right_descent(cur, i)) {
        d = i;
        break;
      }
    cur = compose(cur, simple_reflection(cur.rank(), d));
    stripped.push_back(d);
  }
  std::reverse(stripped.begin(), stripped.end());
  return stripped;
}

// Bruhat order via the rank-matrix criterion on the S_{2g} embedding:
// v <= w iff #{a <= i : v(a) <= j} >= #{a <= i : w(a) <= j} for all i, j.
inline bool bruhat_leq(const SignedPermutation& v, const SignedPermutation& w) {
  if (v.rank() != w.rank()) throw std::invalid_argument("bruhat_leq: rank mismatch");
  const int n = v.size();
  std::vector<int> rv(n + 1, 0), rw(n + 1, 0);
  for (int j = 1; j <= n; ++j) rv[j] = rw[j] = 0;
  // incremental row update: after step i, r[j] = #{a <= i : u(a) <= j}
  for (int i = 1; i <= n; ++i) {
    for (int j = v(i); j <= n; ++j) ++rv[j];
    for (int j = w(i); j <= n; ++j) ++rw[j];
    for (int j = 1; j <= n; ++j)
      if (rv[j] < rw[j]) return false;
  }
  return true;
}

// All 2^g g! elements, lexicographic on images.
inline std::vector<SignedPermutation> enumerate_group(int g, int bound = 8) {
  if (g > bound) throw std::invalid_argument("enumerate_group: rank exceeds configured bound");
  if (g == 0) return {SignedPermutation::identity(0)};
  const int n = 2 * g;
  std::vector<int> pairidx(g);
  std::iota(pairidx.begin(), pairidx.end(), 1);
  std::vector<SignedPermutation> out;
  out.reserve((static_cast<size_t>(1) << g) * [g] {
    size_t f = 1;
    for (int i = 2; i <= g; ++i) f *= i;
    return f;
  }());
  do {
    for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
      std::vector<int> im(n);
      for (int i = 1; i <= g; ++i) {
        const int a = pairidx[i - 1];
        const int v = (mask >> (a - 1)) & 1u ? n + 1 - a : a;
        im[i - 1] = v;
        im[n - i] = n + 1 - v;
      }
      out.emplace_back(g, std::move(im));
    }
  } while (std::next_permutation(pairidx.begin(), pairidx.end()));
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// W^I = {w : w(1) < ... < w(g)} built directly: pick one value from each pair
// {a, 2g+1-a} and sort.
inline std::vector<SignedPermutation> minimal_reps_full_I(int g) {
  if (g == 0) return {SignedPermutation::identity(0)};
  const int n = 2 * g;
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<size_t>(1) << g);
  for (std::uint32_t mask = 0; mask < (1u << g); ++mask) {
    std::vector<int> low;
    for (int a = 1; a <= g; ++a) low.push_back((mask >> (a - 1)) & 1u ? n + 1 - a : a);
    std::sort(low.begin(), low.end());
    std::vector<int> im(n);
    for (int i = 1; i <= g; ++i) {
      im[i - 1] = low[i - 1];
      im[n - i] = n + 1 - low[i - 1];
    }
    out.emplace_back(g, std::move(im));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

enum class CosetSide { Left, Right };

inline bool in_right_reps(const SignedPermutation& w, const SubsetJ& J) {
  for (int i : J.members)
    if (w(i) > w(i + 1)) return false;
  return true;
}

// Right side: W^J = {w : w(i) < w(i+1) for all i in J}.  Left side: {}^J W =
// {w : w^{-1} in W^J}.  For J = I = {1..g-1} the right side is exactly
// {w : w(1) < ... < w(g)} and is built directly (2^g elements).
inline std::vector<SignedPermutation> min_coset_reps(int g, const SubsetJ& J, CosetSide side,
                                                     int bound = 8) {
  if (J.g != g) throw std::invalid_argument("min_coset_reps: subset rank mismatch");
  const bool full = static_cast<int>(J.members.size()) == std::max(0, g - 1);
  if (full && side == CosetSide::Right) return detail::minimal_reps_full_I(g);
  if (full && side == CosetSide::Left) {
    auto reps = detail::minimal_reps_full_I(g);
    for (auto& w : reps) w = w.inverse();
    std::sort(reps.begin(), reps.end());
    return reps;
  }
  std::vector<SignedPermutation> out;
  for (const auto& w : enumerate_group(g, bound)) {
    const bool keep = side == CosetSide::Right ? in_right_reps(w, J) : in_right_reps(w.inverse(), J);
    if (keep) out.push_back(w);
  }
  return out;
}

inline SubsetJ full_I(int g) {
  std::vector<int> mem;
  for (int i = 1; i <= g - 1; ++i) mem.push_back(i);
  return SubsetJ(g, std::move(mem));
}

// w in W^I, i.e. w(1) < ... < w(g).
inline bool in_WI(const SignedPermutation& w) {
  for (int i = 1; i + 1 <= w.rank(); ++i)
    if (w(i) > w(i + 1)) return false;
  return true;
}

// {}^w J = {i | s_i = w s_j w^{-1} for some j in J}; conjugates that are not
// simple reflections are omitted.
inline SubsetJ twisted_parabolic(const SignedPermutation& w, const SubsetJ& J) {
  if (J.g != w.rank()) throw std::invalid_argument("twisted_parabolic: rank mismatch");
  const int g = w.rank();
  const SignedPermutation winv = w.inverse();
  std::vector<int> out;
  for (int j : J.members) {
    const SignedPermutation conj = compose(compose(w, simple_reflection(g, j)), winv);
    for (int i = 1; i <= g - 1; ++i)
      if (conj == simple_reflection(g, i)) {
        out.push_back(i);
        break;
      }
  }
  return SubsetJ(g, std::move(out));
}

// Conjugate w s_j w^{-1} for every j in J is a simple reflection (needed by
// the admissibility test, which is stricter than twisted_parabolic alone).
inline bool conjugates_all_simple(const SignedPermutation& w, const SubsetJ& J) {
  const int g = w.rank();
  const SignedPermutation winv = w.inverse();
  for (int j : J.members) {
    const SignedPermutation conj = compose(compose(w, simple_reflection(g, j)), winv);
    bool simple = false;
    for (int i = 1; i <= g && !simple; ++i) simple = conj == simple_reflection(g, i);
    if (!simple) return false;
  }
  return true;
}

// Subgroup W_J generated by {s_j : j in J}, by closure from the identity.
inline std::vector<SignedPermutation> parabolic_subgroup(const SubsetJ& J) {
  const int g = J.g;
  std::vector<SignedPermutation> gens;
  for (int j : J.members) gens.push_back(simple_reflection(g, j));
  std::set<SignedPermutation> seen{SignedPermutation::identity(g)};
  std::deque<SignedPermutation> todo{SignedPermutation::identity(g)};
  while (!todo.empty()) {
    SignedPermutation cur = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      SignedPermutation nxt = compose(cur, s);
      if (seen.insert(nxt).second) todo.push_back(nxt);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace eo
