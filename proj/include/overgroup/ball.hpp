#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "overgroup/elements.hpp"

namespace overgroup {

using ElementId = std::uint32_t;

/// Predecessor link in the Cayley BFS DAG: element = pred · generator.
struct GeodesicLink {
  ElementId pred;
  Letter generator;
  friend bool operator==(const GeodesicLink&, const GeodesicLink&) = default;
};

struct BallEntry {
  ReducedWord word;  // canonical geodesic: first discovered in (pred id, generator) order
  std::uint32_t length = 0;
  std::uint64_t key = 0;  // truncated portrait hash
  std::vector<GeodesicLink> links;
};

struct BallOptions {
  std::size_t element_budget = 5'000'000;
  /// OpenMP worker count; 0 keeps the runtime default.
  int workers = 0;
};

/// The Cayley ball of G̃_{σ^shift ω} with respect to the 8 canonical generators.
class BallTable {
 public:
  BallTable(GroupPtr group, std::size_t shift, std::size_t key_depth);

  const GroupPtr& group() const noexcept { return group_; }
  std::size_t shift() const noexcept { return shift_; }
  /// Largest radius whose sphere is complete.
  std::size_t radius() const noexcept { return strata_.size() - 2; }
  /// Radius requested; complete() iff it was reached within budget.
  std::size_t requested_radius() const noexcept { return requested_; }
  bool complete() const noexcept { return radius() >= requested_; }
  std::size_t key_depth() const noexcept { return key_depth_; }

  std::size_t size() const noexcept { return entries_.size(); }
  const BallEntry& entry(ElementId id) const { return entries_.at(id); }
  Element element(ElementId id) const { return Element(group_, entries_.at(id).word, shift_); }

  /// Ids of the sphere of radius `length` as a contiguous range [first, last).
  std::pair<ElementId, ElementId> sphere(std::size_t length) const;
  std::size_t sphere_size(std::size_t length) const;

  /// γ(0..radius()).
  std::vector<std::uint64_t> gamma() const;

  /// Id of the element equal to `g`, if it lies in the ball. Context must match.
  std::optional<ElementId> find(const Element& g) const;
  std::optional<ElementId> find(std::span<const Letter> reduced_word) const;

  /// Calls `visit` with every geodesic word of `id` (as letters), up to `cap`
  /// words. Returns false if the cap was hit.
  bool for_each_geodesic(ElementId id, std::size_t cap,
                         const std::function<void(std::span<const Letter>)>& visit) const;

  /// Number of geodesic words of `id` (exact, saturating at UINT64_MAX).
  std::uint64_t geodesic_count(ElementId id) const;

  // Builder interface used by the enumerators.
  ElementId add(BallEntry entry);
  void add_link(ElementId id, GeodesicLink link) { entries_[id].links.push_back(link); }
  void close_stratum() { strata_.push_back(entries_.size()); }
  void set_requested(std::size_t r) noexcept { requested_ = r; }
  std::vector<ElementId> lookup(std::uint64_t key) const;

  friend bool same_content(const BallTable& lhs, const BallTable& rhs);

 private:
  GroupPtr group_;
  std::size_t shift_;
  std::size_t key_depth_;
  std::size_t requested_ = 0;
  std::vector<BallEntry> entries_;
  // strata_[l] is the first id of length l; the last entry closes the final sphere.
  std::vector<std::size_t> strata_;
  std::unordered_multimap<std::uint64_t, ElementId> index_;
};

/// Portrait depth used as dedup key for a ball of the given radius.
std::size_t ball_key_depth(std::size_t radius);

/// OpenMP enumeration. Output is identical to the serial one for any worker count.
BallTable enumerate_ball(const GroupPtr& group, std::size_t shift, std::size_t radius,
                         const BallOptions& options = {});

/// Single-threaded reference enumeration.
BallTable enumerate_ball_serial(const GroupPtr& group, std::size_t shift, std::size_t radius,
                                const BallOptions& options = {});

/// γ(n)^{1/n} for n >= 1; element 0 holds γ(0) = 1.
std::vector<double> growth_exponent_estimate(std::span<const std::uint64_t> gamma);

/// First (i, j) with γ(i+j) > γ(i)γ(j), if any.
std::optional<std::pair<std::size_t, std::size_t>> submultiplicativity_violation(
    std::span<const std::uint64_t> gamma);

}  // namespace overgroup
