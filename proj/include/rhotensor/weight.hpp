#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rhotensor {

/// Integral weight in fundamental-weight coordinates. Coordinate i is the
/// pairing with the i-th simple coroot. Affine weights carry rank+1
/// coordinates (omega_0 first) plus the coefficient of the null root delta.
class Weight {
 public:
  using Coords = boost::container::small_vector<int, 9>;

  Weight() = default;
  explicit Weight(std::size_t size) : coords_(size, 0) {}
  Weight(std::initializer_list<int> coords, int delta = 0) : coords_(coords), delta_(delta) {}
  explicit Weight(std::span<const int> coords, int delta = 0)
      : coords_(coords.begin(), coords.end()), delta_(delta) {}

  std::size_t size() const { return coords_.size(); }
  int operator[](std::size_t i) const { return coords_[i]; }
  int& operator[](std::size_t i) { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }
  std::span<const int> coords() const { return {coords_.data(), coords_.size()}; }

  int delta() const { return delta_; }
  Weight with_delta(int delta) const {
    Weight w = *this;
    w.delta_ = delta;
    return w;
  }

  bool is_dominant() const {
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c >= 0; });
  }
  bool is_zero() const {
    return delta_ == 0 && std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
  }

  Weight& operator+=(const Weight& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    delta_ += o.delta_;
    return *this;
  }
  Weight& operator-=(const Weight& o) {
    check_size(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    delta_ -= o.delta_;
    return *this;
  }
  Weight& operator*=(int k) {
    for (auto& c : coords_) c *= k;
    delta_ *= k;
    return *this;
  }

  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(int k, Weight a) { return a *= k; }
  friend Weight operator-(Weight a) { return a *= -1; }

  friend bool operator==(const Weight& a, const Weight& b) {
    return a.delta_ == b.delta_ && a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates, then on delta.
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
    auto c = std::lexicographical_compare_three_way(a.coords_.begin(), a.coords_.end(),
                                                    b.coords_.begin(), b.coords_.end());
    if (c != 0) return c;
    return a.delta_ <=> b.delta_;
  }

  /// "5,5" or, with a delta shift, "1,1:d-2".
  std::string str() const {
    std::string out;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(coords_[i]);
    }
    if (delta_ != 0) out += ":d" + std::to_string(delta_);
    return out;
  }
  /// "(5,5)" as in the usual appendix notation.
  std::string tuple() const { return "(" + str() + ")"; }

 private:
  void check_size(const Weight& o) const {
    if (o.coords_.size() != coords_.size()) throw std::invalid_argument("weight size mismatch");
  }

  Coords coords_;
  int delta_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept {
    std::size_t h = std::hash<int>{}(w.delta()) + 0x9e3779b97f4a7c15ULL;
    for (int c : w) h ^= std::hash<int>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

namespace detail {
inline int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || p != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse weight '" + std::string(whole) + "'");
  }
  return v;
}
}  // namespace detail

/// Parses "a,b,c" with an optional ":dN" delta suffix. Surrounding
/// parentheses are tolerated.
inline Weight parse_weight(std::string_view text) {
  std::string_view s = text;
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  int delta = 0;
  if (auto pos = s.find(":d"); pos != std::string_view::npos) {
    delta = detail::parse_int(s.substr(pos + 2), text);
    s = s.substr(0, pos);
  }
  if (s.empty()) throw std::invalid_argument("empty weight");
  Weight::Coords coords;
  while (true) {
    auto comma = s.find(',');
    coords.push_back(detail::parse_int(s.substr(0, comma), text));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return Weight(std::span<const int>(coords.data(), coords.size()), delta);
}

}  // namespace rhotensor
