#pragma once

// Growth counted on leaf permutations of a finite level, built only from the
// definitional action. Elements that agree on the level are merged, so the
// counts are lower bounds that match γ once the level separates the ball.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "overgroup/checks.hpp"

namespace oracle {

using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint32_t v : p) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

inline std::string leaf_string(std::uint32_t v, std::size_t depth) {
  std::string s(depth, '0');
  for (std::size_t i = 0; i < depth; ++i) s[i] = ((v >> (depth - 1 - i)) & 1u) ? '1' : '0';
  return s;
}

inline std::uint32_t leaf_index(const std::string& s) {
  std::uint32_t v = 0;
  for (char ch : s) v = (v << 1) | (ch == '1' ? 1u : 0u);
  return v;
}

inline Perm generator_perm(overgroup::Letter l, const overgroup::Overgroup& group, std::size_t shift,
                           std::size_t depth) {
  const std::uint32_t n = 1u << depth;
  Perm p(n);
  const std::vector<overgroup::Letter> word{l};
  for (std::uint32_t v = 0; v < n; ++v) {
    p[v] = leaf_index(overgroup::reference_act(word, group, shift, leaf_string(v, depth)));
  }
  return p;
}

/// γ(0..radius) over the 8 generators, counted on level `depth`.
inline std::vector<std::uint64_t> leaf_gamma(const overgroup::Overgroup& group, std::size_t shift,
                                             std::size_t radius, std::size_t depth) {
  std::vector<Perm> gens;
  for (overgroup::Letter l : overgroup::kGenerators) gens.push_back(generator_perm(l, group, shift, depth));
  Perm id(std::size_t{1} << depth);
  for (std::uint32_t v = 0; v < id.size(); ++v) id[v] = v;

  std::unordered_set<Perm, PermHash> seen{id};
  std::vector<Perm> frontier{id};
  std::vector<std::uint64_t> gamma{1};
  for (std::size_t r = 1; r <= radius; ++r) {
    std::vector<Perm> next;
    for (const Perm& w : frontier) {
      for (const Perm& g : gens) {
        // Right multiplication: (w g)(v) = w(g(v)).
        Perm p(w.size());
        for (std::size_t v = 0; v < p.size(); ++v) p[v] = w[g[v]];
        if (seen.insert(p).second) next.push_back(std::move(p));
      }
    }
    gamma.push_back(gamma.back() + next.size());
    frontier = std::move(next);
  }
  return gamma;
}

}  // namespace oracle
