#pragma once

// Finite sets of integers kept in sorted order, affine normal form, and the
// structure taxonomy used by the inverse classifiers.

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <istream>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hfold/errors.hpp"

namespace hfold {

namespace detail {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Overflow("64-bit overflow in " + std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Overflow("64-bit overflow in " + std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Overflow("64-bit overflow in " + std::to_string(a) + " * " + std::to_string(b));
  return out;
}

}  // namespace detail

/// Nonempty finite set of int64 values, stored sorted ascending.
class IntSet {
 public:
  IntSet() = delete;

  /// Validating constructor: sorts, rejects an empty input and repeated
  /// values (reporting the repeated value).
  explicit IntSet(std::vector<int64_t> values) : values_(std::move(values)) {
    if (values_.empty()) throw EmptyInput("set literal has no elements");
    std::sort(values_.begin(), values_.end());
    auto dup = std::adjacent_find(values_.begin(), values_.end());
    if (dup != values_.end())
      throw DuplicateElement("repeated element " + std::to_string(*dup));
  }

  /// Trusted path for values already sorted and distinct.
  static IntSet from_sorted(std::vector<int64_t> values) {
    IntSet s(unchecked_tag{}, std::move(values));
    assert(!s.values_.empty());
    assert(std::is_sorted(s.values_.begin(), s.values_.end()));
    assert(std::adjacent_find(s.values_.begin(), s.values_.end()) == s.values_.end());
    return s;
  }

  int64_t size() const { return static_cast<int64_t>(values_.size()); }
  int64_t min() const { return values_.front(); }
  int64_t max() const { return values_.back(); }
  int64_t diameter() const { return max() - min(); }

  const std::vector<int64_t>& values() const { return values_; }
  int64_t operator[](int64_t idx) const { return values_[static_cast<size_t>(idx)]; }

  bool contains(int64_t v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
  }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare_three_way(a.values_.begin(), a.values_.end(),
                                                  b.values_.begin(), b.values_.end());
  }

 private:
  struct unchecked_tag {};
  IntSet(unchecked_tag, std::vector<int64_t> values) : values_(std::move(values)) {}

  std::vector<int64_t> values_;
};

inline IntSet make_set(std::vector<int64_t> values) { return IntSet(std::move(values)); }

inline std::string to_string(const IntSet& s) {
  std::string out = "{";
  for (int64_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(s[i]);
  }
  out += "}";
  return out;
}

/// gcd of all differences of elements; equals gcd of {a - min(A) : a in A}.
/// Positive for any set with at least two elements.
inline int64_t diff_gcd(const IntSet& s) {
  if (s.size() < 2) throw TooSmall("difference gcd needs at least 2 elements");
  int64_t g = 0;
  for (int64_t i = 1; i < s.size(); ++i)
    g = std::gcd(g, detail::checked_sub(s[i], s.min()));
  return g;
}

/// Affine image of a set under x -> (x - base) / dilation.
struct NormalizedSet {
  IntSet normal;
  int64_t base;
  int64_t dilation;

  /// Inverse map x -> base + dilation * x.
  IntSet denormalize() const {
    std::vector<int64_t> out;
    out.reserve(static_cast<size_t>(normal.size()));
    for (int64_t v : normal)
      out.push_back(detail::checked_add(base, detail::checked_mul(dilation, v)));
    return IntSet::from_sorted(std::move(out));
  }
};

/// Normal form: minimum 0 and difference-gcd 1. Sumset cardinality is
/// invariant under this map, so every cardinality question reduces to it.
inline NormalizedSet normalize(const IntSet& s) {
  if (s.size() < 2) throw TooSmall("normal form needs at least 2 elements");
  const int64_t base = s.min();
  const int64_t d = diff_gcd(s);
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(s.size()));
  for (int64_t v : s) out.push_back((v - base) / d);
  return NormalizedSet{IntSet::from_sorted(std::move(out)), base, d};
}

inline bool is_normal_form(const IntSet& s) {
  if (s.min() != 0) return false;
  if (s.size() == 1) return true;
  return diff_gcd(s) == 1;
}

inline IntSet translate(const IntSet& s, int64_t c) {
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(s.size()));
  for (int64_t v : s) out.push_back(detail::checked_add(v, c));
  return IntSet::from_sorted(std::move(out));
}

/// {min + max - a : a in A}; reverses the gap pattern in place.
inline IntSet reflect(const IntSet& s) {
  const int64_t pivot = detail::checked_add(s.min(), s.max());
  std::vector<int64_t> out;
  out.reserve(static_cast<size_t>(s.size()));
  for (int64_t i = s.size() - 1; i >= 0; --i) out.push_back(pivot - s[i]);
  return IntSet::from_sorted(std::move(out));
}

/// Common difference if A is an arithmetic progression (0 for a singleton),
/// std::nullopt otherwise.
inline std::optional<int64_t> is_ap(const IntSet& s) {
  if (s.size() == 1) return 0;
  const int64_t d = s[1] - s[0];
  for (int64_t i = 2; i < s.size(); ++i)
    if (s[i] - s[i - 1] != d) return std::nullopt;
  return d;
}

/// Length of the shortest arithmetic progression containing A:
/// diameter / diff_gcd + 1. Equals |A| exactly when A is an AP.
inline int64_t minimal_ap_cover_length(const IntSet& s) {
  if (s.size() < 2) throw TooSmall("AP cover needs at least 2 elements");
  return detail::checked_sub(s.max(), s.min()) / diff_gcd(s) + 1;
}

/// Shape taxonomy of a normal-form set, keyed by how far its diameter
/// exceeds the minimum k - 1:
///   FullInterval       [0, k-1]
///   IntervalMinusOne   [0, k] minus one interior element i
///   IntervalMinusTwo   [0, k+1] minus two interior elements i < j
///   Other              diameter >= k + 2
struct StructureClass {
  enum class Kind { FullInterval, IntervalMinusOne, IntervalMinusTwo, Other };

  Kind kind;
  int64_t k;         // set size
  int64_t i = 0;     // smaller missing element, when applicable
  int64_t j = 0;     // larger missing element, when applicable
  int64_t diameter;

  static StructureClass full_interval(int64_t k) {
    return {Kind::FullInterval, k, 0, 0, k - 1};
  }
  static StructureClass interval_minus_one(int64_t k, int64_t i) {
    return {Kind::IntervalMinusOne, k, i, 0, k};
  }
  static StructureClass interval_minus_two(int64_t k, int64_t i, int64_t j) {
    return {Kind::IntervalMinusTwo, k, i, j, k + 1};
  }
  static StructureClass other(int64_t k, int64_t diameter) {
    return {Kind::Other, k, 0, 0, diameter};
  }

  friend bool operator==(const StructureClass&, const StructureClass&) = default;
};

inline std::string to_string(const StructureClass& c) {
  switch (c.kind) {
    case StructureClass::Kind::FullInterval:
      return "full-interval(k=" + std::to_string(c.k) + ")";
    case StructureClass::Kind::IntervalMinusOne:
      return "interval-minus-one(k=" + std::to_string(c.k) + ", i=" + std::to_string(c.i) + ")";
    case StructureClass::Kind::IntervalMinusTwo:
      return "interval-minus-two(k=" + std::to_string(c.k) + ", i=" + std::to_string(c.i) +
             ", j=" + std::to_string(c.j) + ")";
    case StructureClass::Kind::Other:
      return "other(k=" + std::to_string(c.k) + ", diameter=" + std::to_string(c.diameter) + ")";
  }
  return "?";
}

/// Classifies a normal-form set by diameter. Total: every normal-form set
/// falls in exactly one class.
inline StructureClass classify_structure(const IntSet& s) {
  if (!is_normal_form(s))
    throw NotNormalForm("classify_structure needs a normal-form set, got " + to_string(s));
  const int64_t k = s.size();
  const int64_t d = s.diameter();
  if (d == k - 1) return StructureClass::full_interval(k);
  if (d >= k + 2) return StructureClass::other(k, d);

  // Diameter k or k+1: recover the one or two missing interior elements.
  std::vector<int64_t> missing;
  int64_t expected = 0;
  for (int64_t v : s) {
    while (expected < v) missing.push_back(expected++);
    ++expected;
  }
  if (d == k) return StructureClass::interval_minus_one(k, missing.at(0));
  return StructureClass::interval_minus_two(k, missing.at(0), missing.at(1));
}

namespace detail {

inline int64_t parse_int64_token(std::string_view token) {
  int64_t value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw Overflow("value outside 64-bit range: '" + std::string(token) + "'");
  if (ec != std::errc{} || ptr != last)
    throw ParseError("not an integer: '" + std::string(token) + "'");
  return value;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "3, 5, 9, 13": comma-separated decimal integers, optional
/// whitespace. Duplicates are rejected, not merged.
inline IntSet parse_set_literal(std::string_view text) {
  std::vector<int64_t> values;
  if (!detail::trim(text).empty()) {
    size_t start = 0;
    while (true) {
      size_t comma = text.find(',', start);
      std::string_view token = detail::trim(text.substr(
          start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
      if (token.empty()) throw ParseError("empty element in set literal");
      values.push_back(detail::parse_int64_token(token));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  }
  return IntSet(std::move(values));
}

/// Reads one integer per line; blank lines are ignored.
inline IntSet read_set_lines(std::istream& in) {
  std::vector<int64_t> values;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view token = detail::trim(line);
    if (token.empty()) continue;
    values.push_back(detail::parse_int64_token(token));
  }
  return IntSet(std::move(values));
}

}  // namespace hfold
