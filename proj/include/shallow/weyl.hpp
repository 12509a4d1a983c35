// Affine Weyl group actions, condition (*), and intertwining checks.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "shallow/characters.hpp"
#include "shallow/weyl_element.hpp"

namespace shallow {

inline AffineRoot act_on_root(const AffineWeylElement& w, const AffineRoot& a) {
  return w.act(a);
}
inline Point act_on_point(const AffineWeylElement& w, const Point& mu) { return w.act(mu); }

// Elements of word length <= radius, each with its least reduced word,
// ordered by (length, word).
std::vector<AffineWeylElement> weyl_ball(const RootSystem& rs, int radius);
// The finite Weyl group generated by s_1..s_l. Throws above max_size.
std::vector<AffineWeylElement> finite_weyl_group(const RootSystem& rs,
                                                 std::size_t max_size = 1u << 20);

// Shallow roots a at lambda with a(mu) >= s.
std::vector<AffineRoot> support(const RootSystem& rs, const Point& mu, const Rational& s,
                                const Point& lambda);

// Longest element of the parabolic subgroup W_I, I a nonempty proper
// subset of {0..l}. Checks that w alpha_i < 0 for every i in I.
AffineWeylElement long_element(const RootSystem& rs, const std::vector<int>& I);

struct StarVerdict {
  enum class Status { Holds, Fails, Inconclusive };
  Status status = Status::Holds;
  std::optional<AffineWeylElement> witness;
  bool bounded = true;
  int radius = 0;  // translation radius searched when unbounded
  std::size_t candidates = 0;
};
std::string to_string(StarVerdict::Status s);

// w moves lambda and a(w lambda) <= depth(chi) on the support of chi.
bool is_star_witness(const ShallowCharacter& chi, const AffineWeylElement& w);

struct StarOptions {
  int translation_radius = 4;
};
// Throws std::invalid_argument for the trivial character.
StarVerdict condition_star(const ShallowCharacter& chi, const StarOptions& opts = {});

struct BarycenterReport {
  bool criterion = false;  // every simple parameter nonzero
  StarVerdict star;
  bool degenerate = false;  // trivial character, (*) fails for any w moving lambda
  bool agrees = false;
};
BarycenterReport barycenter_criterion(const ShallowCharacter& chi);

struct Reduction {
  bool compatible = true;
  std::optional<AffineRoot> violated;  // beta with c_{w beta} != eta c_beta
  std::optional<AffineRoot> image;
};
Reduction intertwining_reduction(const ShallowCharacter& chi, const AffineWeylElement& w);

struct ScanResult {
  enum class Verdict { CollapsesToPChi, Counterexample, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;
  int radius = 0;
  std::optional<AffineWeylElement> counterexample;
  // Compatible elements fixing lambda, identity included.
  std::vector<AffineWeylElement> stabilizer;
  std::size_t scanned = 0;
  std::size_t moved = 0;
};
std::string to_string(ScanResult::Verdict v);
ScanResult intertwining_scan(const ShallowCharacter& chi, int radius);

}  // namespace shallow
