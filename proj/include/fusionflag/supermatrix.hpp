#pragma once

#include <stdexcept>
#include <vector>

#include "fusionflag/rational.hpp"

namespace fusionflag {

enum class MatParity { Zero, Even, Odd, Mixed };

/// Square matrix over exact rationals realizing an element of osp(1,2n) in the
/// defining representation on C^{1|2n}.  Row/column 0 spans the even line of
/// the super vector space; rows 1..n carry the indices 1..n and rows n+1..2n
/// the indices -1..-n.
struct SuperMatrix {
  int n = 0;  // rank; matrix size is 2n+1
  std::vector<Rat> a;

  SuperMatrix() = default;
  explicit SuperMatrix(int rank) : n(rank), a(static_cast<size_t>((2 * rank + 1)) * (2 * rank + 1)) {}

  int size() const { return 2 * n + 1; }
  const Rat& at(int i, int j) const { return a[static_cast<size_t>(i) * size() + j]; }
  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * size() + j]; }

  static SuperMatrix unit(int rank, int i, int j) {
    SuperMatrix m(rank);
    m.at(i, j) = 1;
    return m;
  }

  bool is_zero() const {
    for (const Rat& x : a)
      if (x != 0) return false;
    return true;
  }

  /// Even part: first row and column zeroed out.
  SuperMatrix even_part() const {
    SuperMatrix m = *this;
    for (int i = 0; i < size(); ++i) m.at(0, i) = 0, m.at(i, 0) = 0;
    return m;
  }

  /// Odd part: only the first row and column.
  SuperMatrix odd_part() const {
    SuperMatrix m(n);
    for (int i = 1; i < size(); ++i) {
      m.at(0, i) = at(0, i);
      m.at(i, 0) = at(i, 0);
    }
    return m;
  }

  MatParity parity() const {
    bool has_even = false, has_odd = false;
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < size(); ++j) {
        if (at(i, j) == 0) continue;
        ((i == 0) != (j == 0)) ? has_odd = true : has_even = true;
      }
    if (!has_even && !has_odd) return MatParity::Zero;
    if (has_even && has_odd) return MatParity::Mixed;
    return has_even ? MatParity::Even : MatParity::Odd;
  }

  /// Membership in osp(1,2n): vanishing (0,0) entry, the first row/column
  /// pairing constraints, D' = -D^t and symmetric G, F blocks.
  bool in_osp() const {
    if (at(0, 0) != 0) return false;
    for (int i = 1; i <= n; ++i) {
      if (at(i, 0) != -at(0, n + i)) return false;
      if (at(n + i, 0) != at(0, i)) return false;
    }
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (at(n + i, n + j) != -at(j, i)) return false;
        if (at(i, n + j) != at(j, n + i)) return false;
        if (at(n + i, j) != at(n + j, i)) return false;
      }
    return true;
  }

  Rat supertrace() const {
    Rat s = at(0, 0);
    for (int i = 1; i < size(); ++i) s -= at(i, i);
    return s;
  }

  SuperMatrix& operator+=(const SuperMatrix& o) {
    check(o);
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
  }
  SuperMatrix& operator-=(const SuperMatrix& o) {
    check(o);
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
  }
  friend SuperMatrix operator+(SuperMatrix x, const SuperMatrix& y) { return x += y; }
  friend SuperMatrix operator-(SuperMatrix x, const SuperMatrix& y) { return x -= y; }
  friend SuperMatrix operator*(const Rat& s, SuperMatrix x) {
    for (Rat& v : x.a) v *= s;
    return x;
  }
  friend SuperMatrix operator*(const SuperMatrix& x, const SuperMatrix& y) {
    x.check(y);
    SuperMatrix r(x.n);
    int N = x.size();
    for (int i = 0; i < N; ++i)
      for (int l = 0; l < N; ++l) {
        const Rat& xij = x.at(i, l);
        if (xij == 0) continue;
        for (int j = 0; j < N; ++j) {
          if (y.at(l, j) == 0) continue;
          r.at(i, j) += xij * y.at(l, j);
        }
      }
    return r;
  }
  friend bool operator==(const SuperMatrix& x, const SuperMatrix& y) { return x.n == y.n && x.a == y.a; }

  void check(const SuperMatrix& o) const {
    if (o.n != n) throw std::invalid_argument("supermatrix size mismatch");
  }
};

/// Superbracket [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly to
/// non-homogeneous arguments via the parity decomposition.
inline SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y) {
  x.check(y);
  SuperMatrix xe = x.even_part(), xo = x.odd_part();
  SuperMatrix ye = y.even_part(), yo = y.odd_part();
  SuperMatrix r = xe * ye - ye * xe;
  r += xe * yo - yo * xe;
  r += xo * ye - ye * xo;
  r += xo * yo + yo * xo;  // anticommutator on the odd-odd part
  return r;
}

}  // namespace fusionflag
