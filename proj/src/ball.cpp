#include "overgroup/ball.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace overgroup {

BallTable::BallTable(GroupPtr group, std::size_t shift, std::size_t key_depth)
    : group_(std::move(group)), shift_(0), key_depth_(key_depth) {
  shift_ = group_->normalize(shift);
  strata_.push_back(0);
  BallEntry identity;
  identity.key = portrait_hash({}, *group_, shift_, key_depth_);
  add(std::move(identity));
  close_stratum();
}

std::pair<ElementId, ElementId> BallTable::sphere(std::size_t length) const {
  if (length > radius()) throw std::out_of_range("ball: sphere beyond computed radius");
  return {static_cast<ElementId>(strata_[length]), static_cast<ElementId>(strata_[length + 1])};
}

std::size_t BallTable::sphere_size(std::size_t length) const {
  auto [first, last] = sphere(length);
  return last - first;
}

std::vector<std::uint64_t> BallTable::gamma() const {
  std::vector<std::uint64_t> out;
  for (std::size_t l = 0; l <= radius(); ++l) out.push_back(strata_[l + 1]);
  return out;
}

ElementId BallTable::add(BallEntry entry) {
  const auto id = static_cast<ElementId>(entries_.size());
  index_.emplace(entry.key, id);
  entries_.push_back(std::move(entry));
  return id;
}

std::vector<ElementId> BallTable::lookup(std::uint64_t key) const {
  std::vector<ElementId> out;
  auto [first, last] = index_.equal_range(key);
  for (auto it = first; it != last; ++it) out.push_back(it->second);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<ElementId> BallTable::find(std::span<const Letter> reduced_word) const {
  const std::uint64_t key = portrait_hash(reduced_word, *group_, shift_, key_depth_);
  for (ElementId id : lookup(key)) {
    const auto& other = entries_[id].word.letters();
    std::vector<Letter> q(reduced_word.begin(), reduced_word.end());
    q.insert(q.end(), other.rbegin(), other.rend());
    if (group_->is_identity(reduce(q).word.letters(), shift_)) return id;
  }
  return std::nullopt;
}

std::optional<ElementId> BallTable::find(const Element& g) const {
  if (g.shift() != shift_ || !(g.group()->omega() == group_->omega())) throw ContextMismatch();
  return find(g.word().letters());
}

bool BallTable::for_each_geodesic(ElementId id, std::size_t cap,
                                  const std::function<void(std::span<const Letter>)>& visit) const {
  const std::size_t len = entries_.at(id).length;
  std::vector<Letter> buffer(len);
  std::size_t emitted = 0;
  bool capped = false;
  // Fill the word from the back: the last letter is the link's generator.
  std::function<void(ElementId, std::size_t)> walk = [&](ElementId cur, std::size_t pos) {
    if (capped) return;
    if (pos == 0) {
      if (emitted == cap) {
        capped = true;
        return;
      }
      ++emitted;
      visit(buffer);
      return;
    }
    for (const GeodesicLink& link : entries_[cur].links) {
      buffer[pos - 1] = link.generator;
      walk(link.pred, pos - 1);
      if (capped) return;
    }
  };
  walk(id, len);
  return !capped;
}

std::uint64_t BallTable::geodesic_count(ElementId id) const {
  std::unordered_map<ElementId, std::uint64_t> memo;
  std::function<std::uint64_t(ElementId)> count = [&](ElementId cur) -> std::uint64_t {
    if (cur == 0) return 1;
    if (auto it = memo.find(cur); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    for (const GeodesicLink& link : entries_[cur].links) {
      const std::uint64_t c = count(link.pred);
      total = (total > std::numeric_limits<std::uint64_t>::max() - c)
                  ? std::numeric_limits<std::uint64_t>::max()
                  : total + c;
    }
    memo.emplace(cur, total);
    return total;
  };
  return count(id);
}

bool same_content(const BallTable& lhs, const BallTable& rhs) {
  if (lhs.strata_ != rhs.strata_ || lhs.entries_.size() != rhs.entries_.size()) return false;
  for (std::size_t i = 0; i < lhs.entries_.size(); ++i) {
    const auto& a = lhs.entries_[i];
    const auto& b = rhs.entries_[i];
    if (a.word != b.word || a.length != b.length || a.key != b.key || a.links != b.links) return false;
  }
  return true;
}

std::size_t ball_key_depth(std::size_t radius) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < radius + 2) ++bits;
  return bits + 3;
}

namespace {

// A product pred·generator whose reduced word is one letter longer than pred.
struct Candidate {
  ElementId pred;
  Letter generator;
  ReducedWord word;
  std::uint64_t key = 0;
  bool known = false;  // equals an element of smaller length
  std::size_t rep = 0;  // index of the first candidate equal to this one
};

bool words_equal(const Overgroup& group, std::size_t shift, const ReducedWord& u, const ReducedWord& v) {
  if (u == v) return true;
  std::vector<Letter> q(u.letters().begin(), u.letters().end());
  q.insert(q.end(), v.letters().rbegin(), v.letters().rend());
  return group.is_identity(reduce(q).word.letters(), shift);
}

std::vector<Candidate> seed_candidates(const BallTable& table, std::size_t length) {
  std::vector<Candidate> out;
  auto [first, last] = table.sphere(length);
  out.reserve(static_cast<std::size_t>(last - first) * kGenerators.size());
  for (ElementId id = first; id < last; ++id) {
    for (Letter s : kGenerators) out.push_back(Candidate{id, s, {}, 0, false, 0});
  }
  return out;
}

// Forms the product word and its key; marks products that are syntactically
// short or equal to a stored element. Reads only committed strata.
void screen_candidate(const BallTable& table, std::size_t length, Candidate& c) {
  const auto& base = table.entry(c.pred).word.letters();
  std::vector<Letter> raw(base.begin(), base.end());
  raw.push_back(c.generator);
  c.word = reduce(raw).word;
  if (c.word.length() != length + 1) {
    c.known = true;
    return;
  }
  const Overgroup& group = *table.group();
  c.key = portrait_hash(c.word.letters(), group, table.shift(), table.key_depth());
  for (ElementId id : table.lookup(c.key)) {
    if (words_equal(group, table.shift(), c.word, table.entry(id).word)) {
      c.known = true;
      return;
    }
  }
}

// Appends stratum length+1 from resolved candidates; false if over budget.
bool commit_stratum(BallTable& table, std::vector<Candidate>& cands, std::size_t length,
                    std::size_t budget) {
  std::size_t fresh = 0;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!cands[i].known && cands[i].rep == i) ++fresh;
  }
  if (table.size() + fresh > budget) return false;

  std::vector<ElementId> id_of(cands.size(), 0);
  for (std::size_t i = 0; i < cands.size(); ++i) {
    Candidate& c = cands[i];
    if (c.known) continue;
    if (c.rep == i) {
      BallEntry e;
      e.word = std::move(c.word);
      e.length = static_cast<std::uint32_t>(length + 1);
      e.key = c.key;
      id_of[i] = table.add(std::move(e));
    } else {
      id_of[i] = id_of[c.rep];
    }
    table.add_link(id_of[i], GeodesicLink{c.pred, c.generator});
  }
  table.close_stratum();
  return true;
}

}  // namespace

BallTable enumerate_ball_serial(const GroupPtr& group, std::size_t shift, std::size_t radius,
                                const BallOptions& options) {
  BallTable table(group, shift, ball_key_depth(radius));
  table.set_requested(radius);
  for (std::size_t length = 0; length < radius; ++length) {
    std::vector<Candidate> cands = seed_candidates(table, length);
    std::unordered_multimap<std::uint64_t, std::size_t> fresh;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      Candidate& c = cands[i];
      screen_candidate(table, length, c);
      if (c.known) continue;
      c.rep = i;
      auto [first, last] = fresh.equal_range(c.key);
      std::size_t best = i;
      for (auto it = first; it != last; ++it) {
        if (it->second < best && words_equal(*group, table.shift(), c.word, cands[it->second].word)) {
          best = it->second;
        }
      }
      c.rep = best;
      if (best == i) fresh.emplace(c.key, i);
    }
    if (!commit_stratum(table, cands, length, options.element_budget)) break;
  }
  return table;
}

BallTable enumerate_ball(const GroupPtr& group, std::size_t shift, std::size_t radius,
                         const BallOptions& options) {
  BallTable table(group, shift, ball_key_depth(radius));
  table.set_requested(radius);
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();

  for (std::size_t length = 0; length < radius; ++length) {
    std::vector<Candidate> cands = seed_candidates(table, length);
    const auto n = static_cast<std::int64_t>(cands.size());

#pragma omp parallel for schedule(dynamic, 64) num_threads(workers)
    for (std::int64_t i = 0; i < n; ++i) screen_candidate(table, length, cands[i]);

    // Group surviving candidates by key; classes never span keys.
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < cands.size(); ++i) {
      if (!cands[i].known) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return cands[l].key != cands[r].key ? cands[l].key < cands[r].key : l < r;
    });
    std::vector<std::size_t> group_start;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k == 0 || cands[order[k]].key != cands[order[k - 1]].key) group_start.push_back(k);
    }
    group_start.push_back(order.size());
    const auto groups = static_cast<std::int64_t>(group_start.size()) - 1;

#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (std::int64_t g = 0; g < groups; ++g) {
      std::vector<std::size_t> reps;
      for (std::size_t k = group_start[g]; k < group_start[g + 1]; ++k) {
        Candidate& c = cands[order[k]];
        c.rep = order[k];
        for (std::size_t r : reps) {
          if (words_equal(*group, table.shift(), c.word, cands[r].word)) {
            c.rep = r;
            break;
          }
        }
        if (c.rep == order[k]) reps.push_back(order[k]);
      }
    }

    if (!commit_stratum(table, cands, length, options.element_budget)) break;
  }
  return table;
}

std::vector<double> growth_exponent_estimate(std::span<const std::uint64_t> gamma) {
  std::vector<double> out;
  out.reserve(gamma.size());
  for (std::size_t n = 0; n < gamma.size(); ++n) {
    if (gamma[n] < 1) throw std::invalid_argument("growth: gamma values must be >= 1");
    out.push_back(n == 0 ? static_cast<double>(gamma[0])
                         : std::pow(static_cast<double>(gamma[n]), 1.0 / static_cast<double>(n)));
  }
  return out;
}

std::optional<std::pair<std::size_t, std::size_t>> submultiplicativity_violation(
    std::span<const std::uint64_t> gamma) {
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    for (std::size_t j = 0; i + j < gamma.size(); ++j) {
      const unsigned __int128 prod = static_cast<unsigned __int128>(gamma[i]) * gamma[j];
      if (gamma[i + j] > prod) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

}  // namespace overgroup
