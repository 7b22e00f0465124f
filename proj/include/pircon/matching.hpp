#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <vector>

#include "pircon/error.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// Default node budget for backtracking searches.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

/// A special partial matching of a graded poset with maximum 1\hat:
/// an involution M such that M(1\hat) is covered by 1\hat, every moved
/// element moves along a cover, and for every cover x < y with
/// M(x) != y one has M(x) < M(y).
struct SpecialPartialMatching {
  GradedPoset::Ptr base;
  std::vector<int> map;  // involution on base indices

  int operator()(int i) const { return map.at(static_cast<size_t>(i)); }
  bool fixes(int i) const { return map.at(static_cast<size_t>(i)) == i; }
  bool moves_down(int i) const { return !fixes(i) && base->rank((*this)(i)) < base->rank(i); }

  /// Canonical serialization: the matched pairs "x:y" (x before y in
  /// element order), joined in element order.  Used for deduplication
  /// and deterministic ordering of matchings over a fixed base.
  std::string key() const {
    std::string s;
    for (int i = 0; i < base->size(); ++i) {
      int j = map[static_cast<size_t>(i)];
      if (j > i) s += base->id(i) + ":" + base->id(j) + ";";
    }
    return s;
  }

  friend bool operator==(const SpecialPartialMatching& a, const SpecialPartialMatching& b) {
    return *a.base == *b.base && a.map == b.map;
  }
};

/// Checks the three defining conditions and returns the matching.
/// Throws NotInvolution, TopNotMatchedDown, NotAdjacent or
/// SpecialityViolated, naming the witnessing elements.
inline SpecialPartialMatching validate_spm(GradedPoset::Ptr base, std::vector<int> map) {
  const GradedPoset& p = *base;
  if (static_cast<int>(map.size()) != p.size())
    throw Error("NotInvolution", "map size does not match poset size");
  for (int x = 0; x < p.size(); ++x) {
    int y = map[static_cast<size_t>(x)];
    if (y < 0 || y >= p.size() || map[static_cast<size_t>(y)] != x)
      throw Error("NotInvolution", "map is not an involution at '" + p.id(x) + "'");
  }
  int top = p.maximum();
  if (map[static_cast<size_t>(top)] == top || !p.covers_rel(map[static_cast<size_t>(top)], top))
    throw Error("TopNotMatchedDown",
                "maximum '" + p.id(top) + "' must be matched to one of its lower covers");
  for (int x = 0; x < p.size(); ++x) {
    int y = map[static_cast<size_t>(x)];
    if (y != x && !p.covers_rel(x, y) && !p.covers_rel(y, x))
      throw Error("NotAdjacent", "matched pair ('" + p.id(x) + "', '" + p.id(y) +
                                     "') is not a cover relation");
  }
  for (const auto& [x, y] : p.covers()) {
    int mx = map[static_cast<size_t>(x)], my = map[static_cast<size_t>(y)];
    if (mx == y) continue;
    if (!p.less(mx, my))
      throw Error("SpecialityViolated",
                  "cover ('" + p.id(x) + "', '" + p.id(y) + "') with M('" + p.id(x) + "') = '" +
                      p.id(mx) + "' not below M('" + p.id(y) + "') = '" + p.id(my) + "'");
  }
  return SpecialPartialMatching{std::move(base), std::move(map)};
}

namespace detail {

struct SpmSearch {
  const GradedPoset& p;
  bool fixed_point_free;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  size_t limit;  // stop after this many matchings
  std::vector<int> order;
  std::vector<int> m;
  std::vector<std::vector<int>> cover_list;  // covers incident to each element
  std::vector<SpecialPartialMatching>* out;
  GradedPoset::Ptr base;

  SpmSearch(GradedPoset::Ptr b, bool fpf, std::uint64_t bud, size_t lim,
            std::vector<SpecialPartialMatching>* o)
      : p(*b), fixed_point_free(fpf), budget(bud), limit(lim), out(o), base(std::move(b)) {
    order.resize(static_cast<size_t>(p.size()));
    for (int i = 0; i < p.size(); ++i) order[static_cast<size_t>(i)] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b2) { return p.rank(a) > p.rank(b2); });
    m.assign(static_cast<size_t>(p.size()), -1);
    cover_list.assign(static_cast<size_t>(p.size()), {});
    for (int ci = 0; ci < static_cast<int>(p.covers().size()); ++ci) {
      const auto& [x, y] = p.covers()[static_cast<size_t>(ci)];
      cover_list[static_cast<size_t>(x)].push_back(ci);
      cover_list[static_cast<size_t>(y)].push_back(ci);
    }
  }

  bool cover_ok(int ci) const {
    const auto& [x, y] = p.covers()[static_cast<size_t>(ci)];
    int mx = m[static_cast<size_t>(x)], my = m[static_cast<size_t>(y)];
    if (mx == -1 || my == -1) return true;  // not yet decidable
    if (mx == y) return true;
    return p.less(mx, my);
  }

  bool consistent_around(int el) const {
    for (int ci : cover_list[static_cast<size_t>(el)])
      if (!cover_ok(ci)) return false;
    return true;
  }

  void run(size_t k) {
    if (out->size() >= limit) return;
    if (++nodes > budget)
      throw Error("SizeLimitExceeded",
                  "matching search exceeded the node budget of " + std::to_string(budget));
    if (k == order.size()) {
      out->push_back(validate_spm(base, m));
      return;
    }
    int el = order[k];
    if (m[static_cast<size_t>(el)] != -1) {
      run(k + 1);
      return;
    }
    bool is_top = p.upper_covers(el).empty();
    for (int z : p.lower_covers(el)) {
      if (m[static_cast<size_t>(z)] != -1) continue;
      m[static_cast<size_t>(el)] = z;
      m[static_cast<size_t>(z)] = el;
      if (consistent_around(el) && consistent_around(z)) run(k + 1);
      m[static_cast<size_t>(el)] = -1;
      m[static_cast<size_t>(z)] = -1;
      if (out->size() >= limit) return;
    }
    if (!is_top && !fixed_point_free) {
      m[static_cast<size_t>(el)] = el;
      if (consistent_around(el)) run(k + 1);
      m[static_cast<size_t>(el)] = -1;
    }
  }
};

inline std::vector<SpecialPartialMatching> enumerate_impl(GradedPoset::Ptr base,
                                                          bool fixed_point_free,
                                                          std::uint64_t budget, size_t limit) {
  base->maximum();  // matchings are defined only with a unique maximum
  std::vector<SpecialPartialMatching> out;
  SpmSearch search(std::move(base), fixed_point_free, budget, limit, &out);
  search.run(0);
  std::sort(out.begin(), out.end(), [](const SpecialPartialMatching& a,
                                       const SpecialPartialMatching& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace detail

/// All special partial matchings of the poset, deterministically ordered
/// by their pair serialization.  Throws SizeLimitExceeded when the
/// backtracking search visits more than `budget` nodes.
inline std::vector<SpecialPartialMatching> enumerate_spms(GradedPoset::Ptr base,
                                                          std::uint64_t budget = kDefaultBudget) {
  return detail::enumerate_impl(std::move(base), false, budget, SIZE_MAX);
}

/// All special matchings (fixed-point-free special partial matchings).
inline std::vector<SpecialPartialMatching> enumerate_special_matchings(
    GradedPoset::Ptr base, std::uint64_t budget = kDefaultBudget) {
  return detail::enumerate_impl(std::move(base), true, budget, SIZE_MAX);
}

inline bool has_spm(GradedPoset::Ptr base, std::uint64_t budget = kDefaultBudget) {
  return !detail::enumerate_impl(std::move(base), false, budget, 1).empty();
}

inline bool has_special_matching(GradedPoset::Ptr base, std::uint64_t budget = kDefaultBudget) {
  return !detail::enumerate_impl(std::move(base), true, budget, 1).empty();
}

/// Restriction of M to the principal ideal of z.  Requires M(z) to be a
/// lower cover of z; the defining conditions then restrict, and the ideal
/// is closed under M.
inline SpecialPartialMatching restrict_spm(const SpecialPartialMatching& M, int z) {
  const GradedPoset& p = *M.base;
  if (M.fixes(z))
    throw Error("NotMatchedDown", "'" + p.id(z) + "' is fixed, not matched to a lower cover");
  if (!p.covers_rel(M(z), z))
    throw Error("NotMatchedDown", "'" + p.id(z) + "' is matched upward to '" + p.id(M(z)) + "'");
  auto ideal = p.order_ideal(z);
  std::vector<int> to_parent = ideal->map_indices_into(p);
  std::vector<int> inv(static_cast<size_t>(p.size()), -1);
  for (int i = 0; i < ideal->size(); ++i) inv[static_cast<size_t>(to_parent[static_cast<size_t>(i)])] = i;
  std::vector<int> map(static_cast<size_t>(ideal->size()));
  for (int i = 0; i < ideal->size(); ++i) {
    int img = M(to_parent[static_cast<size_t>(i)]);
    int local = inv[static_cast<size_t>(img)];
    if (local == -1)
      throw Error("SpecialityViolated",
                  "image of '" + ideal->id(i) + "' escapes the ideal of '" + p.id(z) + "'");
    map[static_cast<size_t>(i)] = local;
  }
  return validate_spm(ideal, std::move(map));
}

/// Orbit of the group generated by two matchings, together with its
/// classification.  Dihedral orbits have no fixed element and rank
/// |O|/2; chain-like orbits have rank |O|-1, with each extreme fixed by
/// at least one of the matchings.
struct Orbit {
  enum class Kind { Dihedral, ChainLike };
  std::vector<int> elements;  // ascending base indices
  Kind kind;
  int rank;
  int bottom;
  int top;
};

inline std::vector<Orbit> orbits(const SpecialPartialMatching& M,
                                 const SpecialPartialMatching& N) {
  if (*M.base != *N.base)
    throw Error("BaseMismatch", "matchings live on different posets");
  const GradedPoset& p = *M.base;
  std::vector<char> seen(static_cast<size_t>(p.size()), 0);
  std::vector<Orbit> out;
  for (int s = 0; s < p.size(); ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[static_cast<size_t>(s)] = 1;
    while (!queue.empty()) {
      int x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (int y : {M(x), N(x)}) {
        if (!seen[static_cast<size_t>(y)]) {
          seen[static_cast<size_t>(y)] = 1;
          queue.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    std::vector<int> maxima, minima;
    for (int x : comp) {
      bool is_max = true, is_min = true;
      for (int y : comp) {
        if (p.less(x, y)) is_max = false;
        if (p.less(y, x)) is_min = false;
      }
      if (is_max) maxima.push_back(x);
      if (is_min) minima.push_back(x);
    }
    if (maxima.size() != 1 || minima.size() != 1)
      throw Error("OrbitClassificationFailed",
                  "orbit of '" + p.id(comp[0]) + "' is not an interval");
    Orbit o;
    o.elements = comp;
    o.bottom = minima[0];
    o.top = maxima[0];
    bool top_moved_by_both = !M.fixes(o.top) && !N.fixes(o.top);
    if (top_moved_by_both) {
      o.kind = Orbit::Kind::Dihedral;
      o.rank = static_cast<int>(comp.size()) / 2;
    } else {
      o.kind = Orbit::Kind::ChainLike;
      o.rank = static_cast<int>(comp.size()) - 1;
    }
    out.push_back(std::move(o));
  }
  return out;
}

/// Strict coherence of two matchings of the same poset (which must have a
/// unique maximum w): for every orbit O of <M, N>, the rank of O divides
/// the rank of the orbit of w when O is dihedral, and rank + 1 divides it
/// when O is chain-like.
inline bool strictly_coherent(const SpecialPartialMatching& M,
                              const SpecialPartialMatching& N) {
  const GradedPoset& p = *M.base;
  int w = p.maximum();
  auto orbs = orbits(M, N);
  int m = -1;
  for (const auto& o : orbs)
    if (o.top == w) {
      m = o.rank;
      if (o.kind != Orbit::Kind::Dihedral)
        throw Error("OrbitClassificationFailed",
                    "orbit of the maximum must be dihedral for two matchings of the same poset");
    }
  for (const auto& o : orbs) {
    int d = o.kind == Orbit::Kind::Dihedral ? o.rank : o.rank + 1;
    if (m % d != 0) return false;
  }
  return true;
}

/// Path-connectivity of M and N inside S through pairwise strict
/// coherence.  M and N are included in the vertex set; all matchings must
/// share the base poset.
inline bool s_coherent(const SpecialPartialMatching& M, const SpecialPartialMatching& N,
                       const std::vector<SpecialPartialMatching>& S) {
  std::vector<SpecialPartialMatching> verts{M, N};
  for (const auto& x : S) verts.push_back(x);
  std::map<std::string, int> dedup;
  std::vector<const SpecialPartialMatching*> nodes;
  for (auto& v : verts) {
    if (*v.base != *M.base)
      throw Error("BaseMismatch", "coherence set contains a matching of a different poset");
    if (dedup.emplace(v.key(), static_cast<int>(nodes.size())).second) nodes.push_back(&v);
  }
  int src = dedup.at(M.key()), dst = dedup.at(N.key());
  std::vector<char> seen(nodes.size(), 0);
  std::deque<int> queue{src};
  seen[static_cast<size_t>(src)] = 1;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    if (a == dst) return true;
    for (int b = 0; b < static_cast<int>(nodes.size()); ++b) {
      if (!seen[static_cast<size_t>(b)] && strictly_coherent(*nodes[static_cast<size_t>(a)],
                                                             *nodes[static_cast<size_t>(b)])) {
        seen[static_cast<size_t>(b)] = 1;
        queue.push_back(b);
      }
    }
  }
  return false;
}

/// Coherence: S-coherence with S the set of all matchings of the poset.
inline bool coherent(const SpecialPartialMatching& M, const SpecialPartialMatching& N,
                     std::uint64_t budget = kDefaultBudget) {
  return s_coherent(M, N, enumerate_spms(M.base, budget));
}

/// Every principal ideal of a non-minimal element admits a matching.
inline bool is_pircon(const GradedPoset::Ptr& p, std::uint64_t budget = kDefaultBudget) {
  for (int x = 0; x < p->size(); ++x) {
    if (x == p->bottom()) continue;
    if (!has_spm(p->order_ideal(x), budget)) return false;
  }
  return true;
}

/// Every principal ideal of a non-minimal element admits a fixed-point-free
/// matching.
inline bool is_zircon(const GradedPoset::Ptr& p, std::uint64_t budget = kDefaultBudget) {
  for (int x = 0; x < p->size(); ++x) {
    if (x == p->bottom()) continue;
    if (!has_special_matching(p->order_ideal(x), budget)) return false;
  }
  return true;
}

/// A pircon in which, for every non-minimal x, any two matchings of the
/// ideal of x are coherent; equivalently the strict-coherence graph on
/// the matchings of each ideal is connected.
inline bool is_dircon(const GradedPoset::Ptr& p, std::uint64_t budget = kDefaultBudget) {
  for (int x = 0; x < p->size(); ++x) {
    if (x == p->bottom()) continue;
    auto spms = enumerate_spms(p->order_ideal(x), budget);
    if (spms.empty()) return false;  // not even a pircon
    size_t n = spms.size();
    std::vector<char> seen(n, 0);
    std::deque<size_t> queue{0};
    seen[0] = 1;
    size_t reached = 1;
    while (!queue.empty()) {
      size_t a = queue.front();
      queue.pop_front();
      for (size_t b = 0; b < n; ++b) {
        if (!seen[b] && strictly_coherent(spms[a], spms[b])) {
          seen[b] = 1;
          ++reached;
          queue.push_back(b);
        }
      }
    }
    if (reached != n) return false;
  }
  return true;
}

}  // namespace pircon
