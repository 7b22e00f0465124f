#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pircon/error.hpp"
#include "pircon/matching.hpp"
#include "pircon/poset.hpp"
#include "pircon/quadfield.hpp"

namespace pircon {

/// Elements are canonical ShortLex reduced words: the empty word is the
/// identity, and the normal form is obtained by repeatedly stripping the
/// smallest left descent.
using CoxWord = std::vector<int>;
/// One-line notation, 0-based values.
using Perm = std::vector<int>;

/// A Coxeter system with one of three backends: symmetric groups
/// (permutation arithmetic), dihedral groups (normal form arithmetic on
/// alternating words), and arbitrary Coxeter matrices with edge labels
/// in 2..6 (exact reflection representation over Q(sqrt2, sqrt3, sqrt5)).
class CoxeterSystem {
public:
  enum class Kind { Symmetric, Dihedral, Generic };

  static CoxeterSystem symmetric(int n) {
    if (n < 2) throw Error("InvalidCoxeterMatrix", "symmetric backend needs n >= 2");
    CoxeterSystem w;
    w.kind_ = Kind::Symmetric;
    w.n_ = n;
    for (int i = 1; i < n; ++i) w.names_.push_back("s" + std::to_string(i));
    int g = n - 1;
    w.m_.assign(static_cast<size_t>(g), std::vector<int>(static_cast<size_t>(g), 2));
    for (int i = 0; i < g; ++i) {
      w.m_[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
      if (i + 1 < g) {
        w.m_[static_cast<size_t>(i)][static_cast<size_t>(i + 1)] = 3;
        w.m_[static_cast<size_t>(i + 1)][static_cast<size_t>(i)] = 3;
      }
    }
    return w;
  }

  static CoxeterSystem dihedral(int m) {
    if (m < 2) throw Error("InvalidCoxeterMatrix", "dihedral backend needs m >= 2");
    CoxeterSystem w;
    w.kind_ = Kind::Dihedral;
    w.n_ = m;
    w.names_ = {"s", "t"};
    w.m_ = {{1, m}, {m, 1}};
    return w;
  }

  static CoxeterSystem from_matrix(const std::vector<std::string>& names,
                                   const std::vector<std::vector<int>>& m) {
    CoxeterSystem w;
    w.kind_ = Kind::Generic;
    w.names_ = names;
    w.m_ = m;
    size_t g = names.size();
    if (g == 0 || m.size() != g)
      throw Error("InvalidCoxeterMatrix", "matrix size must match the generator list");
    for (size_t i = 0; i < g; ++i) {
      if (m[i].size() != g)
        throw Error("InvalidCoxeterMatrix", "matrix is not square");
      if (m[i][i] != 1)
        throw Error("InvalidCoxeterMatrix", "diagonal entries must be 1");
      for (size_t j = 0; j < g; ++j) {
        if (i == j) continue;
        if (m[i][j] != m[j][i])
          throw Error("InvalidCoxeterMatrix", "matrix must be symmetric");
        if (m[i][j] < 2 || m[i][j] > 6)
          throw Error("InvalidCoxeterMatrix",
                      "off-diagonal labels must lie in 2..6, got " + std::to_string(m[i][j]));
      }
    }
    w.build_reflection_rep();
    return w;
  }

  Kind kind() const { return kind_; }
  int num_generators() const { return static_cast<int>(names_.size()); }
  const std::string& gen_name(int i) const { return names_.at(static_cast<size_t>(i)); }
  int gen_index(const std::string& name) const {
    for (int i = 0; i < num_generators(); ++i)
      if (names_[static_cast<size_t>(i)] == name) return i;
    throw Error("UnknownId", "no generator named '" + name + "'");
  }
  int coxeter_m(int i, int j) const { return m_.at(static_cast<size_t>(i)).at(static_cast<size_t>(j)); }
  /// For the symmetric backend, the number of letters being permuted.
  int symmetric_n() const {
    require_kind(Kind::Symmetric, "symmetric_n");
    return n_;
  }

  CoxWord identity() const { return {}; }
  CoxWord generator(int i) const { return {i}; }
  int length(const CoxWord& w) const { return static_cast<int>(w.size()); }

  std::string to_string(const CoxWord& w) const {
    if (w.empty()) return "e";
    std::string s;
    for (size_t i = 0; i < w.size(); ++i) {
      if (i) s += "-";
      s += names_.at(static_cast<size_t>(w[i]));
    }
    return s;
  }

  /// Parses "e" or a '-'-separated word in generator names; the word need
  /// not be reduced.
  CoxWord parse(const std::string& s) const {
    if (s == "e" || s.empty()) return {};
    CoxWord w;
    size_t start = 0;
    while (start <= s.size()) {
      size_t dash = s.find('-', start);
      if (dash == std::string::npos) dash = s.size();
      w.push_back(gen_index(s.substr(start, dash - start)));
      start = dash + 1;
    }
    return normalize(w);
  }

  /// ShortLex normal form of an arbitrary word.
  CoxWord normalize(const CoxWord& w) const {
    switch (kind_) {
      case Kind::Symmetric:
        return word_of_perm(perm_of(w));
      case Kind::Dihedral: {
        int len = 0, lead = -1;
        for (int s : w) dihedral_rmul(len, lead, s);
        return dihedral_word(len, lead);
      }
      case Kind::Generic:
        return generic_normalize(w);
    }
    return {};
  }

  CoxWord lmul(int s, const CoxWord& w) const {
    check_gen(s);
    CoxWord t;
    t.reserve(w.size() + 1);
    t.push_back(s);
    t.insert(t.end(), w.begin(), w.end());
    return normalize(t);
  }

  CoxWord rmul(const CoxWord& w, int s) const {
    check_gen(s);
    CoxWord t = w;
    t.push_back(s);
    return normalize(t);
  }

  CoxWord mult(const CoxWord& a, const CoxWord& b) const {
    CoxWord t = a;
    t.insert(t.end(), b.begin(), b.end());
    return normalize(t);
  }

  CoxWord inverse(const CoxWord& w) const {
    CoxWord t(w.rbegin(), w.rend());
    return normalize(t);
  }

  bool is_left_descent(int s, const CoxWord& w) const {
    check_gen(s);
    switch (kind_) {
      case Kind::Symmetric: {
        Perm inv = invert(perm_of(w));
        return inv[static_cast<size_t>(s)] > inv[static_cast<size_t>(s) + 1];
      }
      case Kind::Dihedral:
        return !w.empty() && (static_cast<int>(w.size()) == n_ || w.front() == s);
      case Kind::Generic:
        return column_negative(matrices(w).second, s);
    }
    return false;
  }

  bool is_right_descent(const CoxWord& w, int s) const {
    check_gen(s);
    switch (kind_) {
      case Kind::Symmetric: {
        Perm p = perm_of(w);
        return p[static_cast<size_t>(s)] > p[static_cast<size_t>(s) + 1];
      }
      case Kind::Dihedral:
        return !w.empty() && (static_cast<int>(w.size()) == n_ || w.back() == s);
      case Kind::Generic:
        return column_negative(matrices(w).first, s);
    }
    return false;
  }

  std::vector<int> left_descents(const CoxWord& w) const {
    std::vector<int> d;
    for (int s = 0; s < num_generators(); ++s)
      if (is_left_descent(s, w)) d.push_back(s);
    return d;
  }

  std::vector<int> right_descents(const CoxWord& w) const {
    std::vector<int> d;
    for (int s = 0; s < num_generators(); ++s)
      if (is_right_descent(w, s)) d.push_back(s);
    return d;
  }

  bool bruhat_leq(const CoxWord& u, const CoxWord& v) const {
    if (u.size() > v.size()) return false;
    switch (kind_) {
      case Kind::Symmetric:
        return perm_bruhat_leq(perm_of(u), perm_of(v));
      case Kind::Dihedral:
        return u == v || u.size() < v.size();
      case Kind::Generic:
        return lower_set(v).count(u) > 0;
    }
    return false;
  }

  bool bruhat_less(const CoxWord& u, const CoxWord& v) const { return u != v && bruhat_leq(u, v); }

  /// All group elements in (length, word) order; symmetric and dihedral
  /// backends only.
  std::vector<CoxWord> all_elements() const {
    std::vector<CoxWord> out;
    switch (kind_) {
      case Kind::Symmetric: {
        Perm p(static_cast<size_t>(n_));
        for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = i;
        do {
          out.push_back(word_of_perm(p));
        } while (std::next_permutation(p.begin(), p.end()));
        break;
      }
      case Kind::Dihedral: {
        out.push_back({});
        for (int len = 1; len < n_; ++len)
          for (int lead : {0, 1}) out.push_back(dihedral_word(len, lead));
        out.push_back(dihedral_word(n_, 0));
        break;
      }
      case Kind::Generic:
        throw Error("UnsupportedBackend",
                    "the reflection backend does not enumerate the whole group; "
                    "use intervals below a fixed element");
    }
    sort_words(out);
    return out;
  }

  // ----- permutation helpers (symmetric backend) -----

  Perm perm_of(const CoxWord& w) const {
    require_kind(Kind::Symmetric, "perm_of");
    Perm p(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) p[static_cast<size_t>(i)] = i;
    for (int s : w) {
      check_gen(s);
      std::swap(p[static_cast<size_t>(s)], p[static_cast<size_t>(s) + 1]);
    }
    return p;
  }

  CoxWord word_of_perm(Perm u) const {
    require_kind(Kind::Symmetric, "word_of_perm");
    CoxWord out;
    while (true) {
      Perm pos = invert(u);
      int s = -1;
      for (int k = 0; k + 1 < n_; ++k)
        if (pos[static_cast<size_t>(k)] > pos[static_cast<size_t>(k) + 1]) {
          s = k;
          break;
        }
      if (s == -1) break;
      out.push_back(s);
      for (auto& v : u) {
        if (v == s)
          v = s + 1;
        else if (v == s + 1)
          v = s;
      }
    }
    return out;
  }

  static Perm invert(const Perm& p) {
    Perm inv(p.size());
    for (size_t i = 0; i < p.size(); ++i) inv[static_cast<size_t>(p[i])] = static_cast<int>(i);
    return inv;
  }

  static int inversions(const Perm& p) {
    int c = 0;
    for (size_t i = 0; i < p.size(); ++i)
      for (size_t j = i + 1; j < p.size(); ++j)
        if (p[i] > p[j]) ++c;
    return c;
  }

  /// Bruhat order on permutations through the lifting property: with s a
  /// left descent of v, u <= v iff (su <= sv when s is a descent of u,
  /// else u <= sv).
  static bool perm_bruhat_leq(Perm u, Perm v) {
    if (inversions(u) > inversions(v)) return false;
    while (true) {
      if (u == v) return true;
      Perm pos = invert(v);
      int s = -1;
      for (size_t k = 0; k + 1 < v.size(); ++k)
        if (pos[k] > pos[k + 1]) {
          s = static_cast<int>(k);
          break;
        }
      if (s == -1) return false;  // v = e and u != v
      Perm posu = invert(u);
      if (posu[static_cast<size_t>(s)] > posu[static_cast<size_t>(s) + 1]) {
        for (auto& x : u) x = x == s ? s + 1 : (x == s + 1 ? s : x);
      }
      for (auto& x : v) x = x == s ? s + 1 : (x == s + 1 ? s : x);
    }
  }

  // ----- intervals and quotients -----

  struct IntervalData {
    GradedPoset::Ptr poset;
    std::vector<CoxWord> elements;  // aligned with poset indices
  };

  /// The closed Bruhat interval [u, v] as a graded poset; covers are the
  /// comparable pairs one length apart.
  IntervalData bruhat_interval(const CoxWord& u, const CoxWord& v) const {
    if (!bruhat_leq(u, v))
      throw Error("NotComparable", "'" + to_string(u) + "' is not below '" + to_string(v) + "'");
    std::vector<CoxWord> els;
    for (const CoxWord& z : elements_below(v))
      if (bruhat_leq(u, z)) els.push_back(z);
    return make_poset(els);
  }

  /// Whether w is the minimal representative of its coset w W_H, i.e. no
  /// right descent of w lies in H.
  bool in_quotient(const CoxWord& w, const std::vector<int>& H) const {
    for (int s : H)
      if (is_right_descent(w, s)) return false;
    return true;
  }

  /// The induced subposet of [e, w] on the minimal coset representatives;
  /// covers are recomputed from the induced order.
  IntervalData parabolic_interval(const CoxWord& w, const std::vector<int>& H) const {
    if (!in_quotient(w, H))
      throw Error("NotMinimalCosetRep",
                  "'" + to_string(w) + "' has a right descent in the parabolic subset");
    std::vector<CoxWord> els;
    for (const CoxWord& z : elements_below(w))
      if (in_quotient(z, H)) els.push_back(z);
    return make_poset(els);
  }

  /// Splits w as (quotient part, parabolic part): on the right side
  /// w = u * v with u minimal in u W_J and v in W_J; on the left side
  /// w = v * u with u minimal in W_J u and v in W_J.
  std::pair<CoxWord, CoxWord> coset_decompose(const CoxWord& w, const std::vector<int>& J,
                                              bool left_side = false) const {
    CoxWord u = w, v;
    while (true) {
      int pick = -1;
      for (int s : J) {
        bool descent = left_side ? is_left_descent(s, u) : is_right_descent(u, s);
        if (descent && (pick == -1 || s < pick)) pick = s;
      }
      if (pick == -1) break;
      if (left_side) {
        u = lmul(pick, u);
        v = rmul(v, pick);
      } else {
        u = rmul(u, pick);
        v = lmul(pick, v);
      }
    }
    return {u, v};
  }

  // ----- matchings from multiplication -----

  /// The matching u -> s u of the interval [e, w]; defined when s is a
  /// left descent of w.
  SpecialPartialMatching left_mult_matching(int s, const CoxWord& w) const {
    if (!is_left_descent(s, w))
      throw Error("NotDescent",
                  "'" + gen_name(s) + "' is not a left descent of '" + to_string(w) + "'");
    return mult_matching(bruhat_interval(identity(), w), s, true);
  }

  /// The matching u -> u s of the interval [e, w]; defined when s is a
  /// right descent of w.
  SpecialPartialMatching right_mult_matching(const CoxWord& w, int s) const {
    if (!is_right_descent(w, s))
      throw Error("NotDescent",
                  "'" + gen_name(s) + "' is not a right descent of '" + to_string(w) + "'");
    return mult_matching(bruhat_interval(identity(), w), s, false);
  }

  SpecialPartialMatching mult_matching(const IntervalData& iv, int s, bool left) const {
    std::vector<int> map(static_cast<size_t>(iv.poset->size()));
    for (int i = 0; i < iv.poset->size(); ++i) {
      CoxWord img = left ? lmul(s, iv.elements[static_cast<size_t>(i)])
                         : rmul(iv.elements[static_cast<size_t>(i)], s);
      map[static_cast<size_t>(i)] = iv.poset->index(to_string(img));
    }
    return validate_spm(iv.poset, std::move(map));
  }

  /// Whether the fixed-point-free matching M of an interval [e, w] sends
  /// minimal coset representatives that it moves down to minimal coset
  /// representatives.
  bool is_h_special(const IntervalData& iv, const SpecialPartialMatching& M,
                    const std::vector<int>& H) const {
    for (int i = 0; i < iv.poset->size(); ++i) {
      if (M.fixes(i)) return false;  // must be a genuine matching
      if (!in_quotient(iv.elements[static_cast<size_t>(i)], H)) continue;
      if (M.moves_down(i) && !in_quotient(iv.elements[static_cast<size_t>(M(i))], H)) return false;
    }
    return true;
  }

  /// All fixed-point-free matchings of [e, w] that respect the quotient
  /// by H, in deterministic order.
  std::vector<SpecialPartialMatching> enumerate_h_special(
      const CoxWord& w, const std::vector<int>& H,
      std::uint64_t budget = kDefaultBudget) const {
    if (!in_quotient(w, H))
      throw Error("NotMinimalCosetRep",
                  "'" + to_string(w) + "' has a right descent in the parabolic subset");
    IntervalData iv = bruhat_interval(identity(), w);
    std::vector<SpecialPartialMatching> out;
    for (auto& M : enumerate_special_matchings(iv.poset, budget))
      if (is_h_special(iv, M, H)) out.push_back(std::move(M));
    return out;
  }

  /// Image of an H-special matching of [e, w] in the quotient poset
  /// [e, w]^H: elements whose image stays in the quotient keep it, all
  /// others become fixed.
  SpecialPartialMatching project_mh(const IntervalData& iv, const SpecialPartialMatching& M,
                                    const std::vector<int>& H) const {
    CoxWord w = iv.elements[static_cast<size_t>(iv.poset->maximum())];
    if (!in_quotient(w, H))
      throw Error("NotMinimalCosetRep",
                  "'" + to_string(w) + "' has a right descent in the parabolic subset");
    if (!is_h_special(iv, M, H))
      throw Error("NotHSpecial", "matching does not respect the quotient by H");
    IntervalData quot = parabolic_interval(w, H);
    std::vector<int> map(static_cast<size_t>(quot.poset->size()));
    for (int qi = 0; qi < quot.poset->size(); ++qi) {
      const CoxWord& x = quot.elements[static_cast<size_t>(qi)];
      int fi = iv.poset->index(to_string(x));
      const CoxWord& y = iv.elements[static_cast<size_t>(M(fi))];
      map[static_cast<size_t>(qi)] =
          in_quotient(y, H) ? quot.poset->index(to_string(y)) : qi;
    }
    return validate_spm(quot.poset, std::move(map));
  }

  /// Builds a graded poset from a set of elements under Bruhat order,
  /// with covers recomputed by transitivity (so induced subposets are
  /// handled correctly).
  IntervalData make_poset(std::vector<CoxWord> els) const {
    sort_words(els);
    size_t k = els.size();
    std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b)
        if (a != b && els[a].size() < els[b].size()) lt[a][b] = bruhat_leq(els[a], els[b]);
    std::vector<std::string> ids;
    for (const auto& z : els) ids.push_back(to_string(z));
    std::vector<std::pair<std::string, std::string>> covers;
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        if (!lt[a][b]) continue;
        bool direct = true;
        for (size_t c = 0; c < k && direct; ++c)
          if (lt[a][c] && lt[c][b]) direct = false;
        if (direct) covers.emplace_back(ids[a], ids[b]);
      }
    return IntervalData{GradedPoset::build(ids, covers), std::move(els)};
  }

private:
  CoxeterSystem() = default;

  void require_kind(Kind k, const char* what) const {
    if (kind_ != k)
      throw Error("UnsupportedBackend", std::string(what) + " is not available for this backend");
  }

  void check_gen(int s) const {
    if (s < 0 || s >= num_generators())
      throw Error("UnknownId", "generator index out of range");
  }

  static void sort_words(std::vector<CoxWord>& els) {
    std::sort(els.begin(), els.end(), [](const CoxWord& a, const CoxWord& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
    els.erase(std::unique(els.begin(), els.end()), els.end());
  }

  std::vector<CoxWord> elements_below(const CoxWord& v) const {
    std::vector<CoxWord> out;
    switch (kind_) {
      case Kind::Symmetric:
      case Kind::Dihedral:
        for (const CoxWord& z : all_elements())
          if (bruhat_leq(z, v)) out.push_back(z);
        break;
      case Kind::Generic: {
        const auto& s = lower_set(v);
        out.assign(s.begin(), s.end());
        break;
      }
    }
    return out;
  }

  // ----- dihedral backend -----

  // normal form (len, lead); lead is the first letter, -1 for the
  // identity, 0 for the full-length element (both words agree there)
  void dihedral_rmul(int& len, int& lead, int g) const {
    int m = n_;
    if (len == 0) {
      len = 1;
      lead = g;
      return;
    }
    if (len == m) {
      len = m - 1;
      int last = 1 - g;  // the surviving word ends with the other letter
      lead = (len % 2 == 1) ? last : 1 - last;
      if (len == 0) lead = -1;
      return;
    }
    int last = (len % 2 == 1) ? lead : 1 - lead;
    if (g == last) {
      --len;
      if (len == 0) lead = -1;
    } else {
      ++len;
      if (len == m) lead = 0;
    }
  }

  CoxWord dihedral_word(int len, int lead) const {
    CoxWord w;
    for (int i = 0; i < len; ++i) w.push_back(i % 2 == 0 ? lead : 1 - lead);
    return w;
  }

  // ----- generic reflection backend -----

  using Mat = std::vector<std::vector<QuadField>>;

  void build_reflection_rep() {
    int g = num_generators();
    sigma_.assign(static_cast<size_t>(g), Mat());
    for (int s = 0; s < g; ++s) {
      Mat mat(static_cast<size_t>(g), std::vector<QuadField>(static_cast<size_t>(g)));
      for (int t = 0; t < g; ++t) {
        if (t == s) {
          mat[static_cast<size_t>(s)][static_cast<size_t>(t)] = -QuadField::integer(1);
        } else {
          mat[static_cast<size_t>(t)][static_cast<size_t>(t)] = QuadField::integer(1);
          mat[static_cast<size_t>(s)][static_cast<size_t>(t)] =
              QuadField::two_cos_pi_over(coxeter_m(s, t));
        }
      }
      sigma_[static_cast<size_t>(s)] = std::move(mat);
    }
  }

  Mat mat_mul(const Mat& a, const Mat& b) const {
    size_t n = a.size();
    Mat r(n, std::vector<QuadField>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t k2 = 0; k2 < n; ++k2) {
        if (a[i][k2].is_zero()) continue;
        for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k2] * b[k2][j];
      }
    return r;
  }

  Mat mat_id() const {
    size_t n = static_cast<size_t>(num_generators());
    Mat r(n, std::vector<QuadField>(n));
    for (size_t i = 0; i < n; ++i) r[i][i] = QuadField::integer(1);
    return r;
  }

  bool mat_is_id(const Mat& a) const {
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = 0; j < a.size(); ++j) {
        if (i == j ? !a[i][j].is_one() : !a[i][j].is_zero()) return false;
      }
    return true;
  }

  bool column_negative(const Mat& a, int col) const {
    for (size_t i = 0; i < a.size(); ++i)
      if (a[i][static_cast<size_t>(col)].sign() > 0) return false;
    return true;
  }

  /// Action matrix of w and of its inverse on root coordinates.
  std::pair<Mat, Mat> word_matrices(const CoxWord& w) const {
    Mat u = mat_id(), uinv = mat_id();
    for (int s : w) {
      u = mat_mul(u, sigma_[static_cast<size_t>(s)]);
      // (w')^-1 = s w^-1 applied on the left in reverse
    }
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      uinv = mat_mul(uinv, sigma_[static_cast<size_t>(*it)]);
    return {u, uinv};
  }

  const std::pair<Mat, Mat>& matrices(const CoxWord& w) const {
    auto it = mat_cache_.find(w);
    if (it != mat_cache_.end()) return it->second;
    return mat_cache_.emplace(w, word_matrices(w)).first->second;
  }

  CoxWord generic_normalize(const CoxWord& w) const {
    auto [u, uinv] = word_matrices(w);
    CoxWord out;
    while (!mat_is_id(u)) {
      int s = -1;
      for (int g = 0; g < num_generators(); ++g)
        if (column_negative(uinv, g)) {
          s = g;
          break;
        }
      if (s == -1)
        throw Error("InvalidCoxeterMatrix", "non-identity element with no left descent");
      out.push_back(s);
      u = mat_mul(sigma_[static_cast<size_t>(s)], u);
      uinv = mat_mul(uinv, sigma_[static_cast<size_t>(s)]);
    }
    return out;
  }

  const std::set<CoxWord>& lower_set(const CoxWord& v) const {
    auto it = lower_cache_.find(v);
    if (it != lower_cache_.end()) return *it->second;
    auto s = std::make_shared<std::set<CoxWord>>();
    s->insert(v);
    for (size_t i = 0; i < v.size(); ++i) {
      CoxWord d;
      d.reserve(v.size() - 1);
      for (size_t j = 0; j < v.size(); ++j)
        if (j != i) d.push_back(v[j]);
      const auto& sub = lower_set(normalize(d));
      s->insert(sub.begin(), sub.end());
    }
    lower_cache_[v] = s;
    return *s;
  }

  Kind kind_ = Kind::Symmetric;
  int n_ = 0;  // symmetric: letters; dihedral: m
  std::vector<std::string> names_;
  std::vector<std::vector<int>> m_;
  std::vector<Mat> sigma_;
  mutable std::map<CoxWord, std::pair<Mat, Mat>> mat_cache_;
  mutable std::map<CoxWord, std::shared_ptr<const std::set<CoxWord>>> lower_cache_;
};

// ----- twisted identities -----

/// The set of elements theta(w^-1) w in a symmetric group on 2n letters,
/// where theta conjugates by the order-reversing permutation, as an
/// induced subposet of Bruhat order.  Elements are identified by their
/// one-line notation.
struct IotaData {
  int n2 = 0;  // number of letters, always even
  GradedPoset::Ptr poset;
  std::vector<Perm> perms;  // aligned with poset indices
};

inline Perm theta_perm(const Perm& u) {
  size_t n = u.size();
  Perm t(n);
  for (size_t i = 0; i < n; ++i)
    t[i] = static_cast<int>(n) - 1 - u[n - 1 - i];
  return t;
}

inline std::string perm_id(const Perm& p) {
  std::string s;
  for (int v : p) s += std::to_string(v + 1);
  return s;
}

inline Perm perm_from_id(const std::string& s, int n) {
  if (static_cast<int>(s.size()) != n)
    throw Error("UnknownId", "one-line string '" + s + "' has wrong length");
  Perm p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = s[static_cast<size_t>(i)] - '1';
  return p;
}

inline Perm perm_compose(const Perm& a, const Perm& b) {  // (a b)(i) = a(b(i))
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<size_t>(b[i])];
  return r;
}

inline IotaData twisted_identities(const CoxeterSystem& W) {
  if (W.kind() != CoxeterSystem::Kind::Symmetric || W.symmetric_n() % 2 != 0)
    throw Error("UnsupportedBackend",
                "twisted identities need a symmetric group on an even number of letters");
  int n = W.symmetric_n();
  std::set<Perm> seen;
  Perm p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  do {
    seen.insert(perm_compose(theta_perm(CoxeterSystem::invert(p)), p));
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<Perm> els(seen.begin(), seen.end());
  std::sort(els.begin(), els.end(), [](const Perm& a, const Perm& b) {
    int ia = CoxeterSystem::inversions(a), ib = CoxeterSystem::inversions(b);
    if (ia != ib) return ia < ib;
    return a < b;
  });
  size_t k = els.size();
  std::vector<std::vector<bool>> lt(k, std::vector<bool>(k, false));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      if (a != b) lt[a][b] = CoxeterSystem::perm_bruhat_leq(els[a], els[b]) && els[a] != els[b];
  std::vector<std::string> ids;
  for (const auto& e : els) ids.push_back(perm_id(e));
  std::vector<std::pair<std::string, std::string>> covers;
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b) {
      if (!lt[a][b]) continue;
      bool direct = true;
      for (size_t c = 0; c < k && direct; ++c)
        if (lt[a][c] && lt[c][b]) direct = false;
      if (direct) covers.emplace_back(ids[a], ids[b]);
    }
  IotaData data;
  data.n2 = n;
  data.poset = GradedPoset::build(ids, covers);
  data.perms = std::move(els);
  return data;
}

/// x * s = theta(s) x s; the twisted conjugate of x by the generator s.
inline Perm twisted_conjugate(const Perm& x, int s) {
  int n = static_cast<int>(x.size());
  Perm y = x;
  std::swap(y[static_cast<size_t>(s)], y[static_cast<size_t>(s) + 1]);  // x s
  int ts = n - 2 - s;  // theta sends generator s to this one
  for (auto& v : y) v = v == ts ? ts + 1 : (v == ts + 1 ? ts : v);      // theta(s) (x s)
  return y;
}

/// The matching x -> theta(s) x s of the ideal of w inside the twisted
/// identities; defined when s is a right descent of w.
inline SpecialPartialMatching conjugation_spm(const IotaData& iota, int w_index, int s) {
  const Perm& w = iota.perms.at(static_cast<size_t>(w_index));
  if (s < 0 || s + 1 >= iota.n2) throw Error("UnknownId", "generator index out of range");
  if (w[static_cast<size_t>(s)] < w[static_cast<size_t>(s) + 1])
    throw Error("NotDescent", "generator is not a right descent of '" + perm_id(w) + "'");
  auto ideal = iota.poset->order_ideal(w_index);
  std::vector<int> map(static_cast<size_t>(ideal->size()));
  for (int i = 0; i < ideal->size(); ++i) {
    Perm x = perm_from_id(ideal->id(i), iota.n2);
    Perm y = twisted_conjugate(x, s);
    if (y == x) {
      map[static_cast<size_t>(i)] = i;
    } else {
      std::string yid = perm_id(y);
      if (!ideal->has(yid))
        throw Error("OrbitClassificationFailed",
                    "twisted conjugate '" + yid + "' escapes the ideal of '" + perm_id(w) + "'");
      map[static_cast<size_t>(i)] = ideal->index(yid);
    }
  }
  return validate_spm(ideal, std::move(map));
}

}  // namespace pircon
