#include "symlab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

namespace symlab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw DomainError("partition has a negative part: " + to_string());
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
      throw DomainError("partition is not weakly decreasing: " + to_string());
    }
  }
}

Partition Partition::zeros(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    auto field = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
      throw DomainError("malformed partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::size_t Partition::length() const {
  return static_cast<std::size_t>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p > 0; }));
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s;
}

std::string to_string(const Partition& p) { return p.to_string(); }

bool majorizes(const Partition& a, const Partition& b) {
  return detail::prefix_dominates<int>(a.parts(), b.parts(), true);
}

bool weakly_majorizes(const Partition& a, const Partition& b) {
  return detail::prefix_dominates<int>(a.parts(), b.parts(), false);
}

bool contains(const Partition& a, const Partition& b) {
  detail::require_same_length(a.size(), b.size(), "contains");
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return false;
  }
  return true;
}

Partition conjugate(const Partition& lambda, std::size_t out_length) {
  const int first = lambda.size() ? lambda[0] : 0;
  if (out_length < static_cast<std::size_t>(first)) {
    throw DimensionError("conjugate: output length " + std::to_string(out_length) + " shorter than largest part " +
                         std::to_string(first));
  }
  std::vector<int> out(out_length, 0);
  for (std::size_t j = 0; j < out_length; ++j) {
    out[j] = static_cast<int>(std::count_if(lambda.parts().begin(), lambda.parts().end(),
                                            [j](int p) { return p >= static_cast<int>(j) + 1; }));
  }
  return Partition(std::move(out));
}

std::vector<int> add(const Partition& a, const Partition& b) {
  detail::require_same_length(a.size(), b.size(), "add");
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool midpoint(const Partition& a, const Partition& b, Partition& out) {
  auto sum = add(a, b);
  for (int& v : sum) {
    if (v % 2 != 0) return false;
    v /= 2;
  }
  out = Partition(std::move(sum));
  return true;
}

std::vector<Partition> partitions_of(int weight, std::size_t n) {
  std::vector<Partition> out;
  if (weight < 0) return out;
  if (n == 0) {
    if (weight == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(n, 0);
  // Depth-first with parts chosen largest first gives decreasing lex order.
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int cap) {
    if (i == n) {
      if (remaining == 0) out.emplace_back(cur);
      return;
    }
    const int slots = static_cast<int>(n - i);
    for (int p = std::min(cap, remaining); p >= 0; --p) {
      if (static_cast<long>(p) * slots < remaining) break;
      cur[i] = p;
      rec(i + 1, remaining - p, p);
    }
    cur[i] = 0;
  };
  rec(0, weight, weight);
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, std::size_t n) {
  std::vector<Partition> out;
  for (int w = 0; w <= max_weight; ++w) {
    auto part = partitions_of(w, n);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::pair<Partition, Partition>> enumerate_pairs(std::size_t n, int max_weight, PairMode mode) {
  std::vector<std::pair<Partition, Partition>> out;
  if (n == 0 || max_weight < 0) return out;
  switch (mode) {
    case PairMode::SameWeightComparable:
      for (int w = 0; w <= max_weight; ++w) {
        const auto ps = partitions_of(w, n);
        for (std::size_t i = 0; i < ps.size(); ++i) {
          for (std::size_t j = i + 1; j < ps.size(); ++j) {
            if (majorizes(ps[i], ps[j])) out.emplace_back(ps[i], ps[j]);
          }
        }
      }
      break;
    case PairMode::MidpointIntegral: {
      // Unordered pairs; the member appearing later in (weight, decreasing
      // lex) order comes first.
      const auto ps = partitions_up_to(max_weight, n);
      Partition mid;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          if (midpoint(ps[j], ps[i], mid)) out.emplace_back(ps[j], ps[i]);
        }
      }
      break;
    }
    case PairMode::WeakComparable: {
      const auto ps = partitions_up_to(max_weight, n);
      for (const auto& a : ps) {
        for (const auto& b : ps) {
          if (a != b && weakly_majorizes(a, b)) out.emplace_back(a, b);
        }
      }
      break;
    }
  }
  return out;
}

}  // namespace symlab
