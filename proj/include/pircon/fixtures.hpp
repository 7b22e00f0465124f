#pragma once

#include <map>
#include <string>
#include <vector>

#include "pircon/matching.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// Builds a matching from a pair map keyed by element ids.  Each matched
/// pair may be listed in either orientation; unlisted elements are fixed.
inline SpecialPartialMatching spm_from_ids(GradedPoset::Ptr base,
                                           const std::map<std::string, std::string>& pairs) {
  std::vector<int> m(static_cast<size_t>(base->size()));
  for (int i = 0; i < base->size(); ++i) m[static_cast<size_t>(i)] = i;
  for (const auto& [a, b] : pairs) {
    int x = base->index(a), y = base->index(b);
    m[static_cast<size_t>(x)] = y;
    m[static_cast<size_t>(y)] = x;
  }
  return validate_spm(std::move(base), std::move(m));
}

/// A named example poset bundled with the library, together with named
/// matchings of the full poset and (optionally) a refinement assigning a
/// matching to the ideal of selected elements.
struct Fixture {
  std::string name;
  GradedPoset::Ptr poset;
  // named matchings of the full poset, as pair maps
  std::map<std::string, std::map<std::string, std::string>> matchings;
  // refinement choices: element id -> pair map for the ideal of that element
  std::map<std::string, std::map<std::string, std::string>> refinement;
};

/// Rank-5 poset on 7 elements whose matching-derived polynomial family
/// fails the kernel condition.  The refinement lists one matching per
/// non-minimal principal ideal.
inline Fixture fixture_nonkernel() {
  Fixture f;
  f.name = "nonkernel";
  f.poset = GradedPoset::build({"0", "d", "e", "c", "b", "a", "1"},
                               {{"0", "d"},
                                {"0", "e"},
                                {"d", "c"},
                                {"e", "c"},
                                {"c", "b"},
                                {"b", "a"},
                                {"a", "1"}});
  f.matchings["top"] = {{"1", "a"}, {"c", "d"}, {"0", "e"}};
  f.refinement["1"] = {{"1", "a"}, {"c", "d"}, {"0", "e"}};
  f.refinement["a"] = {{"a", "b"}, {"c", "d"}, {"0", "e"}};
  f.refinement["b"] = {{"b", "c"}};
  f.refinement["c"] = {{"c", "d"}, {"0", "e"}};
  f.refinement["d"] = {{"0", "d"}};
  f.refinement["e"] = {{"0", "e"}};
  return f;
}

/// Rank-4 poset on 6 elements (two atoms under a diamond capped by a
/// 2-chain) with two incoherent matchings of the full poset; it is a
/// pircon but not a dircon.
inline Fixture fixture_nondircone() {
  Fixture f;
  f.name = "nondircone";
  f.poset = GradedPoset::build(
      {"0", "v", "u", "m", "n", "1"},
      {{"0", "v"}, {"0", "u"}, {"v", "m"}, {"u", "m"}, {"m", "n"}, {"n", "1"}});
  f.matchings["dashed"] = {{"1", "n"}, {"m", "v"}, {"0", "u"}};
  f.matchings["solid"] = {{"1", "n"}, {"m", "u"}, {"0", "v"}};
  f.refinement["1"] = {{"1", "n"}, {"m", "v"}, {"0", "u"}};  // dashed at the top
  f.refinement["n"] = {{"n", "m"}};
  f.refinement["m"] = {{"m", "v"}, {"0", "u"}};
  f.refinement["v"] = {{"0", "v"}};
  f.refinement["u"] = {{"0", "u"}};
  return f;
}

/// Rank-5 poset on 11 elements: a 4-chain glued along one side of a
/// dihedral-like stack, with a matching of the full poset that fixes the
/// bottom.
inline Fixture fixture_esempio() {
  Fixture f;
  f.name = "esempio";
  f.poset = GradedPoset::build({"0", "c1", "c2", "c3", "c4", "l2", "l3a", "l3b", "l4a", "l4b", "1"},
                               {{"0", "c1"},
                                {"c1", "c2"},
                                {"c2", "c3"},
                                {"c3", "c4"},
                                {"c4", "1"},
                                {"c1", "l2"},
                                {"c2", "l3b"},
                                {"c3", "l4b"},
                                {"l2", "l3a"},
                                {"l2", "l3b"},
                                {"l3a", "l4a"},
                                {"l3a", "l4b"},
                                {"l3b", "l4a"},
                                {"l3b", "l4b"},
                                {"l4a", "1"},
                                {"l4b", "1"}});
  f.matchings["dashed"] = {{"1", "l4b"}, {"l4a", "l3a"}, {"l2", "l3b"}, {"c4", "c3"}, {"c2", "c1"}};
  return f;
}

inline std::vector<Fixture> poset_fixtures() {
  return {fixture_nonkernel(), fixture_nondircone(), fixture_esempio()};
}

}  // namespace pircon
