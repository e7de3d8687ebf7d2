#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "overgroup/ball.hpp"

namespace overgroup {

/// One named claim and whether it held.
struct ClaimResult {
  std::string claim;
  bool ok = false;
};

/// Vertex image computed straight from the generator definitions (a flips the
/// first letter; a spine letter flips the letter after 1^{n-1}0 when its level-n
/// label is P), composing the word right to left. Independent of decompose().
std::string reference_act(std::span<const Letter> word, const Overgroup& group, std::size_t shift,
                          std::string_view vertex);

/// The 21 pairwise spine products and 8 involutions of the simple contractions.
std::vector<ClaimResult> eq1_check();

struct Eq2Mismatch {
  std::string generator;
  std::string detail;
};

struct Eq2Report {
  std::string omega;
  std::size_t vertices_checked = 0;
  std::vector<Eq2Mismatch> mismatches;
};

/// Decomposes each generator at `shift` and compares with the substitution
/// table row for ω_{shift+1}, then compares act() with reference_act() on all
/// vertices of length <= depth.
Eq2Report eq2_check(const GroupPtr& group, std::size_t shift = 0, std::size_t depth = 6);

/// Collapse identities over (01) and (0).
std::vector<ClaimResult> lemma4_check();

struct Lemma3Violation {
  ElementId id;
  std::string word;
  std::size_t length;
  std::string detail;
};

struct Lemma3Report {
  std::string omega;
  std::size_t n = 0;
  std::size_t shifted_radius = 0;
  std::size_t stabilizer_elements = 0;
  std::vector<std::uint64_t> gamma;          // γ̃_ω(0..n)
  std::vector<std::uint64_t> shifted_gamma;  // γ̃_σω(0..⌈(n+2)/2⌉)
  bool complete = true;
  std::vector<Lemma3Violation> violations;
  /// m values with γ̃_ω(m) > 2 γ̃_σω(⌈(m+2)/2⌉)^2.
  std::vector<std::size_t> gamma_violations;
};

/// Section-length bound on the radius-n stabilizer and the γ inequality for all m <= n.
Lemma3Report lemma3_check(const BallTable& ball, const BallTable& shifted_ball);
Lemma3Report lemma3_check(const GroupPtr& group, std::size_t n, const BallOptions& options = {});

struct Prop6Report {
  std::string omega;
  std::size_t collapse_shift = 0;  // preperiod length
  std::vector<std::string> collapsed;  // distinct nontrivial generators at collapse_shift
  bool collapse_ok = false;            // collapsed == {a, x}
  std::vector<std::uint64_t> shifted_gamma;
  bool dihedral_ok = false;  // shifted γ(m) = 2m + 1 for all m
  std::vector<std::uint64_t> gamma;
  std::vector<double> degree_estimates;  // log γ(m) / log m, m >= 2
  bool complete = true;
};

/// Requires an eventually constant ω; throws std::invalid_argument otherwise.
Prop6Report prop6_check(const GroupPtr& group, std::size_t n, const BallOptions& options = {});

}  // namespace overgroup
