#pragma once

// Partitions of fixed length and the orders used throughout the library:
// majorization, weak majorization and containment.
//
// A Partition always carries its length n explicitly; trailing zeros are
// stored. Order predicates never pad: comparing partitions of different
// lengths is a DimensionError.

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symlab/errors.hpp"
#include "symlab/rational.hpp"

namespace symlab {

class Partition {
 public:
  Partition() = default;
  // Throws DomainError unless parts are nonnegative and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  static Partition zeros(std::size_t n);
  // "3,1,0" -> (3,1,0). Malformed text is a DomainError.
  static Partition parse(std::string_view text);

  std::size_t size() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  std::span<const int> parts() const { return parts_; }
  const std::vector<int>& vec() const { return parts_; }
  int weight() const;
  // Number of nonzero parts.
  std::size_t length() const;
  bool empty_shape() const { return weight() == 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::string to_string(const Partition& p);

namespace detail {

template <typename T>
std::vector<T> sorted_decreasing(std::span<const T> v) {
  std::vector<T> out(v.begin(), v.end());
  std::sort(out.begin(), out.end(), [](const T& a, const T& b) { return b < a; });
  return out;
}

inline void require_same_length(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
  }
}

// Prefix-sum comparison of the decreasing rearrangements. When
// require_equal_total is set the full sums must agree (majorization),
// otherwise the last prefix is compared like the others (weak majorization).
template <typename T>
bool prefix_dominates(std::span<const T> a, std::span<const T> b, bool require_equal_total) {
  require_same_length(a.size(), b.size(), "majorization");
  const auto as = sorted_decreasing(a);
  const auto bs = sorted_decreasing(b);
  T sa{0}, sb{0};
  for (std::size_t i = 0; i < as.size(); ++i) {
    sa += as[i];
    sb += bs[i];
    if (sa < sb) return false;
  }
  return !require_equal_total || sa == sb;
}

}  // namespace detail

// a majorizes b: equal totals and prefix sums of the sorted-decreasing
// rearrangements of a dominate those of b. Inputs need not be sorted.
template <typename T>
bool majorizes(std::span<const T> a, std::span<const T> b) {
  return detail::prefix_dominates(a, b, true);
}
template <typename T>
bool majorizes(const std::vector<T>& a, const std::vector<T>& b) {
  return majorizes(std::span<const T>(a), std::span<const T>(b));
}

bool majorizes(const Partition& a, const Partition& b);
bool weakly_majorizes(const Partition& a, const Partition& b);
bool contains(const Partition& a, const Partition& b);

// lambda'_j = #{i : lambda_i >= j} for j = 1..out_length.
// out_length < lambda_1 is a DimensionError.
Partition conjugate(const Partition& lambda, std::size_t out_length);

// Entrywise sum / difference helpers used for midpoints and translations.
std::vector<int> add(const Partition& a, const Partition& b);
// Writes (a + b) / 2 to out when every entry of a + b is even.
bool midpoint(const Partition& a, const Partition& b, Partition& out);

// All partitions of `weight` with at most n parts (padded to n), in
// decreasing lexicographic order. That order extends dominance: if a
// majorizes b then a is not lexicographically smaller than b.
std::vector<Partition> partitions_of(int weight, std::size_t n);
// Weights 0..max_weight concatenated in increasing weight.
std::vector<Partition> partitions_up_to(int max_weight, std::size_t n);

enum class PairMode { SameWeightComparable, MidpointIntegral, WeakComparable };

// Deterministic, duplicate-free stream of test pairs (see README for the
// exact definition of each mode).
std::vector<std::pair<Partition, Partition>> enumerate_pairs(std::size_t n, int max_weight, PairMode mode);

}  // namespace symlab
