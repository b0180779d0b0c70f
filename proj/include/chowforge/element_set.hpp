#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "chowforge/error.hpp"

namespace chowforge {

constexpr int kMaxGround = 64;

/// Subset of {1..64}; element e lives in bit e-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  ElementSet(std::initializer_list<int> elems) {
    for (int e : elems) insert(e);
  }
  static constexpr ElementSet from_bits(std::uint64_t b) {
    ElementSet s;
    s.bits_ = b;
    return s;
  }
  /// {1, ..., n}
  static constexpr ElementSet range(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
  }
  static ElementSet from_vector(const std::vector<int>& v) {
    ElementSet s;
    for (int e : v) s.insert(e);
    return s;
  }
  /// Accepts "1234" (single digits) or "1,2,10" / "{1,2,10}".
  static ElementSet parse(std::string_view text);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(int e) const { return e >= 1 && e <= 64 && ((bits_ >> (e - 1)) & 1U); }
  void insert(int e) {
    if (e < 1 || e > kMaxGround) throw Error(ErrorKind::ElementOutOfRange, "label " + std::to_string(e));
    bits_ |= std::uint64_t{1} << (e - 1);
  }
  void erase(int e) {
    if (e >= 1 && e <= 64) bits_ &= ~(std::uint64_t{1} << (e - 1));
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool is_proper_subset_of(ElementSet o) const { return is_subset_of(o) && bits_ != o.bits_; }
  /// Largest label present, 0 if empty.
  constexpr int max_element() const { return bits_ ? 64 - std::countl_zero(bits_) : 0; }
  constexpr int min_element() const { return bits_ ? std::countr_zero(bits_) + 1 : 0; }

  std::vector<int> ascending() const;
  std::vector<int> descending() const;
  /// Digit string when all labels are < 10, otherwise comma separated.
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return from_bits(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return from_bits(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) { return a.bits_ == b.bits_; }
  /// Arbitrary but fixed order, for use as a map key.
  friend constexpr bool operator<(ElementSet a, ElementSet b) { return a.bits_ < b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(ElementSet s) const { return std::hash<std::uint64_t>{}(s.bits()); }
};

inline std::vector<int> ElementSet::ascending() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

inline std::vector<int> ElementSet::descending() const {
  auto v = ascending();
  return {v.rbegin(), v.rend()};
}

inline std::string ElementSet::to_string() const {
  if (bits_ == 0) return "{}";
  auto v = ascending();
  std::string out;
  if (v.back() < 10) {
    for (int e : v) out += static_cast<char>('0' + e);
    return out;
  }
  out = "{";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + "}";
}

inline ElementSet ElementSet::parse(std::string_view text) {
  ElementSet s;
  bool has_sep = text.find(',') != std::string_view::npos || text.find(' ') != std::string_view::npos;
  if (!has_sep) {
    for (char c : text) {
      if (c == '{' || c == '}') continue;
      if (c < '0' || c > '9') throw Error(ErrorKind::MalformedSpec, "bad element set '" + std::string(text) + "'");
      s.insert(c - '0');
    }
    return s;
  }
  int cur = -1;
  for (char c : text) {
    if (c >= '0' && c <= '9') {
      cur = (cur < 0 ? 0 : cur * 10) + (c - '0');
    } else if (c == ',' || c == ' ' || c == '{' || c == '}') {
      if (cur >= 0) s.insert(cur);
      cur = -1;
    } else {
      throw Error(ErrorKind::MalformedSpec, "bad element set '" + std::string(text) + "'");
    }
  }
  if (cur >= 0) s.insert(cur);
  return s;
}

}  // namespace chowforge
