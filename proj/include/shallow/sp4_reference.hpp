// Published Sp4 data at the barycenter and the end-to-end walkthrough that
// compares the library against it.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "shallow/characters.hpp"

namespace shallow {

using Delta3 = std::array<int, 3>;  // coordinates over alpha_0, alpha_1, alpha_2

// One factor u_target(C x^j y^i) of [u_outer(y), u_inner(x)], so i is the
// power of the outer variable, matching commutator_expansion(outer, inner).
struct PublishedTerm {
  int i, j, constant;
  Delta3 target;
};
struct PublishedCommutator {
  Delta3 outer, inner;
  std::vector<PublishedTerm> terms;
};
// The twelve published C2 formulas, in print order, exactly as printed.
const std::vector<PublishedCommutator>& published_commutators();

// 1 = prod chi_target(x^i y^j) over the terms, y on `first`, read at q = 2.
struct PublishedRelation {
  Delta3 first, second;
  std::vector<std::pair<Delta3, std::pair<int, int>>> terms;
};
const std::vector<PublishedRelation>& published_relations();

// chi_alpha(1) = (-1)^c over F_2, in the printed row order.
const std::vector<std::pair<Delta3, int>>& published_character();

ContextPtr sp4_context(int q = 2, const std::string& pinning = "default");
// The printed character on a C2 barycentric context. The parameter values are
// the integers 0/1, reinterpreted in F_q.
ShallowCharacter sp4_example_character(const ContextPtr& ctx);

struct ReproItem {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  // Character dependent checks become report only under an override.
  bool informational = false;
};

struct ReproOptions {
  int q = 2;
  std::string pinning = "default";
  int radius = 8;
  std::optional<ShallowCharacter> character;
};

struct ReproReport {
  std::vector<ReproItem> items;
  bool all_pass() const;
};

ReproReport reproduce_sp4(const ReproOptions& opts = {});

std::string format_published(const RootSystem& rs, const PublishedCommutator& c);

}  // namespace shallow
