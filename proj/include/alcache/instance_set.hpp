#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <numeric>
#include <utility>
#include <vector>

namespace alcache {

/// Index of a named individual in the knowledge base (position in N_I).
using Individual = std::uint32_t;

/// Sorted, duplicate-free set of individuals. Retrieval results, cached
/// values and atomic extensions all use this representation.
class InstanceSet {
 public:
  using const_iterator = std::vector<Individual>::const_iterator;

  InstanceSet() = default;
  InstanceSet(std::initializer_list<Individual> xs)
      : InstanceSet(std::vector<Individual>(xs)) {}
  explicit InstanceSet(std::vector<Individual> xs) : items_(std::move(xs)) {
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
  }

  /// {0, 1, ..., n-1}
  static InstanceSet all(std::size_t n) {
    InstanceSet s;
    s.items_.resize(n);
    std::iota(s.items_.begin(), s.items_.end(), Individual{0});
    return s;
  }

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<Individual>& values() const { return items_; }

  bool contains(Individual x) const {
    return std::binary_search(items_.begin(), items_.end(), x);
  }

  void insert(Individual x) {
    auto it = std::lower_bound(items_.begin(), items_.end(), x);
    if (it == items_.end() || *it != x) items_.insert(it, x);
  }

  bool is_subset_of(const InstanceSet& other) const {
    return std::includes(other.items_.begin(), other.items_.end(),
                         items_.begin(), items_.end());
  }

  friend InstanceSet intersect(const InstanceSet& a, const InstanceSet& b) {
    InstanceSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::back_inserter(out.items_));
    return out;
  }

  friend InstanceSet unite(const InstanceSet& a, const InstanceSet& b) {
    InstanceSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out.items_));
    return out;
  }

  friend InstanceSet difference(const InstanceSet& a, const InstanceSet& b) {
    InstanceSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out.items_));
    return out;
  }

  /// Closed-world complement within a domain of `domain_size` individuals.
  friend InstanceSet complement(const InstanceSet& a, std::size_t domain_size) {
    return difference(all(domain_size), a);
  }

  friend bool operator==(const InstanceSet&, const InstanceSet&) = default;

 private:
  std::vector<Individual> items_;
};

}  // namespace alcache
