#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "fusionflag/rational.hpp"

namespace fusionflag {

/// Element of the dual Cartan space, written in the delta basis:
/// coords[i] is the coefficient of delta_{i+1}.
struct Weight {
  std::vector<Rat> coords;

  Weight() = default;
  explicit Weight(int n) : coords(static_cast<size_t>(n)) {}
  explicit Weight(std::vector<Rat> c) : coords(std::move(c)) {}

  int rank() const { return static_cast<int>(coords.size()); }
  const Rat& operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  Rat& operator[](int i) { return coords[static_cast<size_t>(i)]; }

  static Weight zero(int n) { return Weight(n); }

  /// delta_{i+1} as a weight (i is 0-based).
  static Weight delta(int n, int i) {
    Weight w(n);
    w[i] = 1;
    return w;
  }

  Weight& operator+=(const Weight& o) {
    check_rank(o);
    for (int i = 0; i < rank(); ++i) coords[i] += o.coords[i];
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_rank(o);
    for (int i = 0; i < rank(); ++i) coords[i] -= o.coords[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rat& s, Weight a) {
    for (auto& c : a.coords) c *= s;
    return a;
  }
  friend Weight operator-(Weight a) {
    for (auto& c : a.coords) c = -c;
    return a;
  }

  bool is_zero() const {
    for (const auto& c : coords)
      if (c != 0) return false;
    return true;
  }

  bool is_integral() const {
    for (const auto& c : coords)
      if (!is_integer(c)) return false;
    return true;
  }

  Rat coord_sum() const {
    Rat s = 0;
    for (const auto& c : coords) s += c;
    return s;
  }

  friend bool operator==(const Weight& a, const Weight& b) { return a.coords == b.coords; }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.coords.size() != b.coords.size()) return a.coords.size() < b.coords.size();
    for (size_t i = 0; i < a.coords.size(); ++i) {
      int c = cmp(a.coords[i], b.coords[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  /// "2d1-d2" style; "0" for the zero weight.
  std::string str() const {
    std::string out;
    for (int i = 0; i < rank(); ++i) {
      const Rat& c = coords[i];
      if (c == 0) continue;
      if (c > 0 && !out.empty()) out += "+";
      if (c == -1)
        out += "-";
      else if (c != 1)
        out += c.get_str();
      out += "d" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
  }

 private:
  void check_rank(const Weight& o) const {
    if (o.coords.size() != coords.size()) throw std::invalid_argument("weight rank mismatch");
  }
};

}  // namespace fusionflag
