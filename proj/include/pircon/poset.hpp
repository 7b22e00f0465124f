#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pircon/error.hpp"

namespace pircon {

/// Finite graded poset with a unique minimum, built from element ids and
/// cover relations.  Construction validates the input: cover endpoints
/// must be known ids, the cover digraph must be acyclic with exactly one
/// source, and a rank function must exist in which every cover raises
/// rank by exactly one (this also rejects transitively implied covers,
/// which would span a rank gap of at least two).
///
/// Instances are immutable and shared; derived posets (ideals, intervals,
/// induced subposets) keep the relative element order of the parent.
class GradedPoset {
public:
  using Ptr = std::shared_ptr<const GradedPoset>;

  static Ptr build(const std::vector<std::string>& elements,
                   const std::vector<std::pair<std::string, std::string>>& covers) {
    auto p = std::make_shared<GradedPoset>();
    p->init(elements, covers);
    return p;
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const std::string& id(int i) const { return ids_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& ids() const { return ids_; }

  bool has(const std::string& id) const { return index_.count(id) > 0; }
  int index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end())
      throw Error("UnknownId", "no element with id '" + id + "'");
    return it->second;
  }

  int rank(int i) const { return rank_.at(static_cast<size_t>(i)); }
  int max_rank() const { return max_rank_; }
  int bottom() const { return bottom_; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int i) const { return up_.at(static_cast<size_t>(i)); }
  const std::vector<int>& lower_covers(int i) const { return down_.at(static_cast<size_t>(i)); }

  bool leq(int a, int b) const { return downset_[static_cast<size_t>(b)][static_cast<size_t>(a)]; }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  bool covers_rel(int a, int b) const {
    return leq(a, b) && rank(b) == rank(a) + 1;
  }

  std::vector<int> maximal_elements() const {
    std::vector<int> m;
    for (int i = 0; i < size(); ++i)
      if (up_[static_cast<size_t>(i)].empty()) m.push_back(i);
    return m;
  }
  bool has_maximum() const { return maximal_elements().size() == 1; }
  int maximum() const {
    auto m = maximal_elements();
    if (m.size() != 1)
      throw Error("NoMaximum", "poset has " + std::to_string(m.size()) + " maximal elements");
    return m[0];
  }

  std::vector<int> elements_at_rank(int r) const {
    std::vector<int> v;
    for (int i = 0; i < size(); ++i)
      if (rank(i) == r) v.push_back(i);
    return v;
  }

  /// Principal order ideal of x, as a poset of its own.  Covers are
  /// inherited: an ideal is downward closed, so the cover relations of
  /// the parent restrict without change.
  Ptr order_ideal(int x) const {
    std::vector<int> subset;
    for (int i = 0; i < size(); ++i)
      if (leq(i, x)) subset.push_back(i);
    return restrict_with_inherited_covers(subset);
  }

  /// Closed interval [u, v] as a poset of its own; ranks restart at u.
  /// Throws NotComparable unless u <= v.
  Ptr interval(int u, int v) const {
    if (!leq(u, v))
      throw Error("NotComparable", "'" + id(u) + "' is not below '" + id(v) + "'");
    std::vector<int> subset;
    for (int i = 0; i < size(); ++i)
      if (leq(u, i) && leq(i, v)) subset.push_back(i);
    return restrict_with_inherited_covers(subset);
  }

  /// Induced subposet on an arbitrary subset: the order is the restriction
  /// of the parent order and covers are recomputed from it (a parent cover
  /// may vanish and new covers may appear when intermediate elements are
  /// missing).
  Ptr induced_subposet(const std::vector<int>& subset_in) const {
    std::vector<int> subset = subset_in;
    std::sort(subset.begin(), subset.end());
    std::vector<std::string> els;
    for (int i : subset) els.push_back(id(i));
    std::vector<std::pair<std::string, std::string>> cv;
    for (size_t a = 0; a < subset.size(); ++a) {
      for (size_t b = 0; b < subset.size(); ++b) {
        if (a == b || !less(subset[a], subset[b])) continue;
        bool direct = true;
        for (int z : subset) {
          if (less(subset[a], z) && less(z, subset[b])) {
            direct = false;
            break;
          }
        }
        if (direct) cv.emplace_back(id(subset[a]), id(subset[b]));
      }
    }
    return build(els, cv);
  }

  /// Maps local indices to indices of `parent`, matching by id.
  std::vector<int> map_indices_into(const GradedPoset& parent) const {
    std::vector<int> m(static_cast<size_t>(size()));
    for (int i = 0; i < size(); ++i) m[static_cast<size_t>(i)] = parent.index(id(i));
    return m;
  }

  friend bool operator==(const GradedPoset& a, const GradedPoset& b) {
    return a.ids_ == b.ids_ && a.covers_ == b.covers_;
  }
  friend bool operator!=(const GradedPoset& a, const GradedPoset& b) { return !(a == b); }

private:
  Ptr restrict_with_inherited_covers(const std::vector<int>& subset) const {
    std::vector<std::string> els;
    els.reserve(subset.size());
    std::vector<char> in(static_cast<size_t>(size()), 0);
    for (int i : subset) in[static_cast<size_t>(i)] = 1;
    for (int i : subset) els.push_back(id(i));
    std::vector<std::pair<std::string, std::string>> cv;
    for (const auto& [x, y] : covers_)
      if (in[static_cast<size_t>(x)] && in[static_cast<size_t>(y)])
        cv.emplace_back(id(x), id(y));
    return build(els, cv);
  }

  void init(const std::vector<std::string>& elements,
            const std::vector<std::pair<std::string, std::string>>& covers) {
    ids_ = elements;
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
      if (!index_.emplace(ids_[static_cast<size_t>(i)], i).second)
        throw Error("UnknownId", "duplicate element id '" + ids_[static_cast<size_t>(i)] + "'");
    }
    if (ids_.empty()) throw Error("NoMinimum", "poset has no elements");

    for (const auto& [xs, ys] : covers) {
      int x = index(xs), y = index(ys);
      if (x == y)
        throw Error("CycleDetected", "cover from '" + xs + "' to itself");
      covers_.emplace_back(x, y);
    }
    std::sort(covers_.begin(), covers_.end());
    covers_.erase(std::unique(covers_.begin(), covers_.end()), covers_.end());

    size_t n = ids_.size();
    up_.assign(n, {});
    down_.assign(n, {});
    std::vector<int> indeg(n, 0);
    for (const auto& [x, y] : covers_) {
      up_[static_cast<size_t>(x)].push_back(y);
      down_[static_cast<size_t>(y)].push_back(x);
      ++indeg[static_cast<size_t>(y)];
    }

    // Kahn topological sort; leftovers witness a cycle.
    std::vector<int> order;
    std::vector<int> deg = indeg;
    for (int i = 0; i < static_cast<int>(n); ++i)
      if (deg[static_cast<size_t>(i)] == 0) order.push_back(i);
    for (size_t head = 0; head < order.size(); ++head) {
      for (int y : up_[static_cast<size_t>(order[head])])
        if (--deg[static_cast<size_t>(y)] == 0) order.push_back(y);
    }
    if (order.size() != n) {
      std::string witness;
      for (int i = 0; i < static_cast<int>(n); ++i)
        if (deg[static_cast<size_t>(i)] > 0) {
          witness = ids_[static_cast<size_t>(i)];
          break;
        }
      throw Error("CycleDetected", "cover relations contain a cycle through '" + witness + "'");
    }

    std::vector<int> minima;
    for (int i = 0; i < static_cast<int>(n); ++i)
      if (indeg[static_cast<size_t>(i)] == 0) minima.push_back(i);
    if (minima.size() != 1) {
      std::string names;
      for (int i : minima) names += (names.empty() ? "" : ", ") + ids_[static_cast<size_t>(i)];
      throw Error("NoMinimum",
                  "expected exactly one minimal element, found " +
                      std::to_string(minima.size()) + (names.empty() ? "" : " (" + names + ")"));
    }
    bottom_ = minima[0];

    rank_.assign(n, -1);
    rank_[static_cast<size_t>(bottom_)] = 0;
    for (int x : order) {
      for (int y : up_[static_cast<size_t>(x)]) {
        int r = rank_[static_cast<size_t>(x)] + 1;
        if (rank_[static_cast<size_t>(y)] == -1) {
          rank_[static_cast<size_t>(y)] = r;
        } else if (rank_[static_cast<size_t>(y)] != r) {
          throw Error("NotGraded",
                      "cover ('" + ids_[static_cast<size_t>(x)] + "', '" +
                          ids_[static_cast<size_t>(y)] +
                          "') is inconsistent with a rank function: '" +
                          ids_[static_cast<size_t>(y)] + "' would need ranks " +
                          std::to_string(rank_[static_cast<size_t>(y)]) + " and " +
                          std::to_string(r) +
                          " (either a chain skips a level or the cover is transitively implied)");
        }
      }
    }
    max_rank_ = 0;
    for (int i = 0; i < static_cast<int>(n); ++i)
      max_rank_ = std::max(max_rank_, rank_[static_cast<size_t>(i)]);

    downset_.assign(n, std::vector<bool>(n, false));
    for (int y : order) {
      auto& row = downset_[static_cast<size_t>(y)];
      row[static_cast<size_t>(y)] = true;
      for (int x : down_[static_cast<size_t>(y)]) {
        const auto& below = downset_[static_cast<size_t>(x)];
        for (size_t i = 0; i < n; ++i)
          if (below[i]) row[i] = true;
      }
    }
  }

  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  std::vector<std::vector<bool>> downset_;
  int bottom_ = 0;
  int max_rank_ = 0;
};

/// Whether p is shaped like a closed interval of a dihedral Coxeter group:
/// a single chain of length <= 1, or a bottom and top with exactly two
/// elements at every intermediate rank and all covers present between
/// consecutive levels.
inline bool is_dihedral_interval(const GradedPoset& p) {
  if (!p.has_maximum()) return false;
  int r = p.max_rank();
  if (r == 0) return false;  // a single point is not an interval of positive length
  if (r == 1) return p.size() == 2;
  for (int k = 0; k <= r; ++k) {
    auto level = p.elements_at_rank(k);
    size_t want = (k == 0 || k == r) ? 1 : 2;
    if (level.size() != want) return false;
  }
  for (int k = 0; k < r; ++k) {
    for (int x : p.elements_at_rank(k))
      for (int y : p.elements_at_rank(k + 1))
        if (!p.covers_rel(x, y)) return false;
  }
  return true;
}

}  // namespace pircon
