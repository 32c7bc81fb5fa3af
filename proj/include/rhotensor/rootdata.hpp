#pragma once

#include "rhotensor/exact.hpp"
#include "rhotensor/weight.hpp"

#include <algorithm>
#include <cctype>
#include <span>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace rhotensor {

/// Cartan type: family letter, rank of the finite diagram, and whether the
/// untwisted affine extension is meant ("A1~").
struct AlgebraId {
  char family = 'A';
  int rank = 1;
  bool affine = false;

  std::string str() const { return family + std::to_string(rank) + (affine ? "~" : ""); }
  AlgebraId finite() const { return {family, rank, false}; }
  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
  friend auto operator<=>(const AlgebraId&, const AlgebraId&) = default;
};

/// Throws std::invalid_argument naming the violated constraint.
inline void validate(const AlgebraId& id) {
  const std::string name = id.str();
  if (id.rank < 1) throw std::invalid_argument(name + ": rank must be positive");
  switch (id.family) {
    case 'A':
      break;
    case 'B':
      if (id.rank < 2) throw std::invalid_argument(name + ": type B requires rank >= 2");
      break;
    case 'C':
      if (id.rank < 2) throw std::invalid_argument(name + ": type C requires rank >= 2");
      break;
    case 'D':
      if (id.rank < 3) throw std::invalid_argument(name + ": type D requires rank >= 3");
      break;
    case 'E':
      if (id.rank < 6 || id.rank > 8) throw std::invalid_argument(name + ": type E requires rank 6, 7 or 8");
      break;
    case 'F':
      if (id.rank != 4) throw std::invalid_argument(name + ": type F requires rank 4");
      break;
    case 'G':
      if (id.rank != 2) throw std::invalid_argument(name + ": type G requires rank 2");
      break;
    default:
      throw std::invalid_argument(name + ": family must be one of A,B,C,D,E,F,G");
  }
}

/// Parses names like "B2", "g2", "A1~".
inline AlgebraId parse_algebra(std::string_view text) {
  std::string s(text);
  AlgebraId id;
  if (!s.empty() && s.back() == '~') {
    id.affine = true;
    s.pop_back();
  }
  if (s.size() < 2) throw std::invalid_argument("cannot parse algebra '" + std::string(text) + "'");
  id.family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("cannot parse algebra '" + std::string(text) + "'");
    }
  }
  id.rank = std::stoi(s.substr(1));
  validate(id);
  return id;
}

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

/// Element of the root lattice in simple-root coordinates.
struct RootVector {
  std::vector<int> coords;

  bool in_positive_cone() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
  }
  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector&, const RootVector&) = default;
};

class RootSystem;
RootSystem build_root_system(const AlgebraId& id);

/// Immutable Cartan, root and form data for one algebra. For an affine id the
/// finite data describes the underlying simple algebra and the affine
/// extension data (dual marks, affine Cartan matrix) is added on top.
class RootSystem {
 public:
  const AlgebraId& id() const { return id_; }
  bool affine() const { return id_.affine; }
  /// Rank of the finite root system.
  int rank() const { return id_.rank; }
  /// Number of weight coordinates: rank, or rank+1 for affine types.
  int weight_size() const { return id_.rank + (id_.affine ? 1 : 0); }

  /// cartan()(i, j) = <alpha_j, alpha_i^vee>.
  const Matrix<int>& cartan() const { return cartan_; }
  const Matrix<int>& affine_cartan() const { return affine_cartan_; }
  const std::vector<Rational>& symmetrizers() const { return symmetrizers_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  /// Positive roots in fundamental-weight coordinates, same order.
  const std::vector<Weight>& positive_root_weights() const { return positive_root_weights_; }
  /// (omega_i | omega_j).
  const Matrix<Rational>& form_on_weights() const { return form_; }
  const Weight& rho() const { return rho_; }
  const RootVector& highest_root() const { return positive_roots_[highest_root_index_]; }
  const Weight& highest_root_weight() const { return positive_root_weights_[highest_root_index_]; }
  int dual_coxeter() const { return dual_coxeter_; }
  /// Dual marks a_0^vee .. a_r^vee (a_0^vee = 1).
  const std::vector<int>& dual_marks() const { return dual_marks_; }
  /// Dimension of the finite simple Lie algebra.
  int finite_dimension() const { return rank() + 2 * static_cast<int>(positive_roots_.size()); }

  /// Simple root alpha_i of the finite system in fundamental coordinates.
  const Weight& simple_root(int i) const { return simple_roots_[i]; }

  /// Common denominator N of the form on weights; scaled_form returns
  /// N * (a | b) as an exact integer.
  std::int64_t form_scale() const { return form_scale_; }
  std::int64_t scaled_form(std::span<const int> a, std::span<const int> b) const {
    std::int64_t s = 0;
    const auto r = static_cast<std::size_t>(rank());
    for (std::size_t i = 0; i < r; ++i) {
      if (a[i] == 0) continue;
      std::int64_t row = 0;
      for (std::size_t j = 0; j < r; ++j) row += scaled_form_(i, j) * b[j];
      s += a[i] * row;
    }
    return s;
  }
  std::int64_t scaled_form(const Weight& a, const Weight& b) const { return scaled_form(a.coords(), b.coords()); }

  /// det(A) * (simple-root coordinates of w): exact integers.
  std::vector<std::int64_t> scaled_root_coordinates(const Weight& w) const {
    const auto r = static_cast<std::size_t>(rank());
    std::vector<std::int64_t> out(r, 0);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) out[i] += adjugate_(i, j) * w[j];
    return out;
  }
  std::int64_t cartan_determinant() const { return determinant_; }
  /// det(A) * height(w), where height is the sum of simple-root coordinates.
  std::int64_t scaled_height(const Weight& w) const {
    std::int64_t h = 0;
    for (std::size_t j = 0; j < w.size() && j < height_functional_.size(); ++j) h += height_functional_[j] * w[j];
    return h;
  }

 private:
  friend RootSystem build_root_system(const AlgebraId& id);

  AlgebraId id_;
  Matrix<int> cartan_;
  Matrix<int> affine_cartan_;
  std::vector<Rational> symmetrizers_;
  std::vector<RootVector> positive_roots_;
  std::vector<Weight> positive_root_weights_;
  std::vector<Weight> simple_roots_;
  Matrix<Rational> form_;
  Matrix<std::int64_t> scaled_form_;
  std::int64_t form_scale_ = 1;
  Matrix<std::int64_t> adjugate_;
  std::int64_t determinant_ = 1;
  std::vector<std::int64_t> height_functional_;
  Weight rho_;
  std::size_t highest_root_index_ = 0;
  int dual_coxeter_ = 0;
  std::vector<int> dual_marks_;
};

namespace detail {

inline void link(Matrix<int>& a, int i, int j, int aij = -1, int aji = -1) {
  a(i, j) = aij;
  a(j, i) = aji;
}

// Bourbaki numbering; A(i, j) = <alpha_j, alpha_i^vee>, symmetrizer d_i = (alpha_i|alpha_i)/2
// with long roots of square length 2.
inline std::pair<Matrix<int>, std::vector<Rational>> cartan_data(const AlgebraId& id) {
  const int r = id.rank;
  Matrix<int> a(r, r, 0);
  std::vector<Rational> d(r, Rational(1));
  for (int i = 0; i < r; ++i) a(i, i) = 2;
  switch (id.family) {
    case 'A':
      for (int i = 0; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -1, -2);  // alpha_r short
      d[r - 1] = Rational(1, 2);
      break;
    case 'C':
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 2, r - 1, -2, -1);  // alpha_r long
      for (int i = 0; i + 1 < r; ++i) d[i] = Rational(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 3, r - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < r; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      d[2] = d[3] = Rational(1, 2);
      break;
    case 'G':
      link(a, 0, 1, -3, -1);  // alpha_1 short
      d[0] = Rational(1, 3);
      break;
  }
  return {a, d};
}

inline Matrix<Rational> inverse(const Matrix<int>& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw InvariantError("singular Cartan matrix");
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a(p, j), a(c, j));
    Rational piv = a(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) a(c, j) /= piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  Matrix<Rational> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

inline Rational determinant(const Matrix<int>& m) {
  const std::size_t n = m.rows();
  Matrix<Rational> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

inline std::int64_t to_int64(const Rational& q) {
  if (boost::multiprecision::denominator(q) != 1) throw InvariantError("expected an integer, got " + to_string(q));
  return static_cast<std::int64_t>(boost::multiprecision::numerator(q));
}

// Positive roots by root-string closure: beta + alpha_i is a root iff q > 0 where
// q = p - <beta, alpha_i^vee> and p is the length of the downward alpha_i-string.
inline std::vector<RootVector> close_positive_roots(const Matrix<int>& a) {
  const int r = static_cast<int>(a.rows());
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  std::vector<RootVector> roots;
  while (!layer.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      roots.push_back({beta});
      for (int i = 0; i < r; ++i) {
        int pairing = 0;
        for (int j = 0; j < r; ++j) pairing += a(i, j) * beta[j];
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.contains(down)) break;
          ++p;
        }
        if (p - pairing > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (known.insert(up).second) next.push_back(up);
        }
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  return roots;
}

}  // namespace detail

inline RootSystem build_root_system(const AlgebraId& id) {
  validate(id);
  RootSystem rs;
  rs.id_ = id;
  const int r = id.rank;
  auto [a, d] = detail::cartan_data(id);
  rs.cartan_ = a;
  rs.symmetrizers_ = d;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (d[i] * a(i, j) != d[j] * a(j, i)) throw InvariantError(id.str() + ": Cartan matrix not symmetrized by d");

  for (int j = 0; j < r; ++j) {
    Weight col(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) col[i] = a(i, j);
    rs.simple_roots_.push_back(col);
  }

  Matrix<Rational> inv = detail::inverse(a);
  rs.form_ = Matrix<Rational>(r, r);
  Integer lcm = 1;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      rs.form_(i, j) = d[i] * inv(i, j);
      lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(rs.form_(i, j)));
    }
  rs.form_scale_ = static_cast<std::int64_t>(lcm);
  rs.scaled_form_ = Matrix<std::int64_t>(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) rs.scaled_form_(i, j) = detail::to_int64(rs.form_(i, j) * rs.form_scale_);

  Rational det = detail::determinant(a);
  rs.determinant_ = detail::to_int64(det);
  rs.adjugate_ = Matrix<std::int64_t>(r, r);
  rs.height_functional_.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      rs.adjugate_(i, j) = detail::to_int64(inv(i, j) * det);
      rs.height_functional_[j] += rs.adjugate_(i, j);
    }

  rs.positive_roots_ = detail::close_positive_roots(a);
  for (const auto& root : rs.positive_roots_) {
    Weight w(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) w[i] += a(i, j) * root.coords[j];
    rs.positive_root_weights_.push_back(w);
  }
  for (std::size_t k = 0; k < rs.positive_roots_.size(); ++k)
    if (rs.positive_roots_[k].height() > rs.positive_roots_[rs.highest_root_index_].height()) rs.highest_root_index_ = k;

  rs.rho_ = Weight(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) rs.rho_[i] = 1;

  // theta^vee = theta (|theta|^2 = 2), so a_i^vee = a_i * d_i.
  const auto& theta = rs.highest_root();
  rs.dual_marks_.assign(r + 1, 1);
  rs.dual_coxeter_ = 1;
  for (int i = 0; i < r; ++i) {
    rs.dual_marks_[i + 1] = detail::to_int64(Rational(theta.coords[i]) * d[i]);
    rs.dual_coxeter_ += rs.dual_marks_[i + 1];
  }
  if (rs.scaled_form(rs.highest_root_weight(), rs.highest_root_weight()) != 2 * rs.form_scale_) {
    throw InvariantError(id.str() + ": (theta|theta) != 2");
  }

  // Node 0 of the affine diagram: alpha_0 = delta - theta.
  rs.affine_cartan_ = Matrix<int>(r + 1, r + 1, 0);
  rs.affine_cartan_(0, 0) = 2;
  const Weight& theta_w = rs.highest_root_weight();
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) rs.affine_cartan_(i + 1, j + 1) = a(i, j);
    rs.affine_cartan_(i + 1, 0) = -theta_w[i];
    rs.affine_cartan_(0, i + 1) =
        -static_cast<int>(rs.scaled_form(rs.simple_roots_[i], theta_w) / rs.form_scale_);
  }
  return rs;
}

// ---------------------------------------------------------------------------
// Weyl group primitives (finite type)

/// Applies the simple reflection s_i in place.
inline void reflect(const RootSystem& rs, Weight& w, int i) {
  const int c = w[i];
  if (c == 0) return;
  const Weight& alpha = rs.simple_root(i);
  for (std::size_t j = 0; j < alpha.size(); ++j) w[j] -= c * alpha[j];
}

/// Applies word[0] first, then word[1], ...
inline Weight apply_word(const RootSystem& rs, Weight w, const std::vector<int>& word) {
  for (int i : word) reflect(rs, w, i);
  return w;
}

struct DominantRep {
  Weight dominant;
  /// (-1)^(reflections applied), or 0 when w has a nontrivial stabilizer.
  int sign = 1;
  /// Reflections in the order applied: dominant = s_{word.back()} ... s_{word[0]} w.
  std::vector<int> word;
};

/// Dominant representative of the Weyl orbit of w.
inline Weight dominant_of(const RootSystem& rs, Weight w) {
  const int r = rs.rank();
  while (true) {
    int i = 0;
    while (i < r && w[i] >= 0) ++i;
    if (i == r) return w;
    reflect(rs, w, i);
  }
}

inline DominantRep to_dominant(const RootSystem& rs, const Weight& w) {
  DominantRep out{w, 1, {}};
  const int r = rs.rank();
  if (static_cast<int>(w.size()) != r) throw std::invalid_argument("to_dominant: weight has wrong size for " + rs.id().str());
  while (true) {
    int i = 0;
    while (i < r && out.dominant[i] >= 0) ++i;
    if (i == r) break;
    reflect(rs, out.dominant, i);
    out.word.push_back(i);
    out.sign = -out.sign;
  }
  for (int c : out.dominant)
    if (c == 0) out.sign = 0;
  return out;
}

/// Reflects xi towards the dominant chamber in place. Returns 0 as soon as
/// any coordinate is zero (xi lies on a wall), else the sign of the element.
inline int reflect_regular(const RootSystem& rs, Weight& xi) {
  const int r = rs.rank();
  int sign = 1;
  while (true) {
    int neg = -1;
    for (int i = 0; i < r; ++i) {
      if (xi[i] == 0) return 0;
      if (xi[i] < 0 && neg < 0) neg = i;
    }
    if (neg < 0) return sign;
    reflect(rs, xi, neg);
    sign = -sign;
  }
}

/// Full Weyl orbit, sorted lexicographically.
inline std::vector<Weight> orbit(const RootSystem& rs, const Weight& w) {
  std::unordered_set<Weight, WeightHash> seen{w};
  std::deque<Weight> queue{w};
  while (!queue.empty()) {
    Weight cur = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      if (cur[i] == 0) continue;
      Weight next = cur;
      reflect(rs, next, i);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::vector<Weight> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Lattice and form primitives

/// Simple-root coordinates of w (exact rationals).
inline std::vector<Rational> root_coordinates(const RootSystem& rs, const Weight& w) {
  auto scaled = rs.scaled_root_coordinates(w);
  std::vector<Rational> out;
  for (auto c : scaled) out.emplace_back(c, rs.cartan_determinant());
  return out;
}

inline bool in_root_lattice(const RootSystem& rs, const Weight& w) {
  for (auto c : rs.scaled_root_coordinates(w))
    if (c % rs.cartan_determinant() != 0) return false;
  return true;
}

/// a <= b in the dominance order: b - a is a non-negative integer combination
/// of simple roots.
inline bool dominance_le(const RootSystem& rs, const Weight& a, const Weight& b) {
  const std::int64_t det = rs.cartan_determinant();
  for (auto c : rs.scaled_root_coordinates(b - a))
    if (c < 0 || c % det != 0) return false;
  return true;
}

/// Level of an affine weight: sum of a_i^vee * coord_i.
inline int level(const RootSystem& rs, const Weight& w) {
  if (static_cast<int>(w.size()) != rs.rank() + 1) throw std::invalid_argument("level: not an affine weight");
  int l = 0;
  for (std::size_t i = 0; i < w.size(); ++i) l += rs.dual_marks()[i] * w[i];
  return l;
}

/// Finite part (coordinates 1..r) of an affine weight.
inline Weight finite_part(const Weight& w) {
  return Weight(w.coords().subspan(1));
}

/// <w, theta^vee> for a finite weight.
inline int theta_pairing(const RootSystem& rs, const Weight& finite) {
  int s = 0;
  for (int i = 0; i < rs.rank(); ++i) s += rs.dual_marks()[i + 1] * finite[i];
  return s;
}

/// Affine weight with the given finite part, level and delta coefficient.
inline Weight make_affine(const RootSystem& rs, const Weight& finite, int lvl, int delta) {
  Weight w(static_cast<std::size_t>(rs.rank() + 1));
  w[0] = lvl - theta_pairing(rs, finite);
  for (int i = 0; i < rs.rank(); ++i) w[i + 1] = finite[i];
  return w.with_delta(delta);
}

/// N * (a | b). Affine weights use (d|d) = 0, (Lambda_0|Lambda_0) = 0,
/// (Lambda_0|d) = 1, so (a|b) = (a0|b0) + level(a) delta(b) + level(b) delta(a).
inline std::int64_t scaled_bilinear(const RootSystem& rs, const Weight& a, const Weight& b) {
  const int r = rs.rank();
  if (static_cast<int>(a.size()) == r && static_cast<int>(b.size()) == r) return rs.scaled_form(a, b);
  if (static_cast<int>(a.size()) == r + 1 && static_cast<int>(b.size()) == r + 1) {
    std::int64_t finite = rs.scaled_form(a.coords().subspan(1), b.coords().subspan(1));
    std::int64_t mixed = static_cast<std::int64_t>(level(rs, a)) * b.delta() + static_cast<std::int64_t>(level(rs, b)) * a.delta();
    return finite + rs.form_scale() * mixed;
  }
  throw std::invalid_argument("bilinear_form: weights have wrong size for " + rs.id().str());
}

inline Rational bilinear_form(const RootSystem& rs, const Weight& a, const Weight& b) {
  return Rational(scaled_bilinear(rs, a, b), rs.form_scale());
}

/// <lam, beta^vee> for a positive root beta (index into positive_roots()).
inline int coroot_pairing(const RootSystem& rs, const Weight& lam, std::size_t root) {
  const Weight& beta = rs.positive_root_weights()[root];
  std::int64_t num = 2 * rs.scaled_form(lam, beta);
  std::int64_t den = rs.scaled_form(beta, beta);
  if (num % den != 0) throw InvariantError("non-integral coroot pairing");
  return static_cast<int>(num / den);
}

/// Weyl dimension formula, exact.
inline Integer weyl_dimension(const RootSystem& rs, const Weight& lam) {
  if (rs.affine()) throw std::invalid_argument("weyl_dimension: affine modules are infinite-dimensional");
  if (static_cast<int>(lam.size()) != rs.rank()) throw std::invalid_argument("weyl_dimension: weight has wrong size");
  if (!lam.is_dominant()) throw std::invalid_argument("weyl_dimension: " + lam.tuple() + " is not dominant");
  Weight shifted = lam + rs.rho();
  Integer num = 1, den = 1;
  for (const auto& alpha : rs.positive_root_weights()) {
    num *= rs.scaled_form(shifted, alpha);
    den *= rs.scaled_form(rs.rho(), alpha);
  }
  if (num % den != 0) throw InvariantError("weyl_dimension: non-integral result");
  return num / den;
}

}  // namespace rhotensor
