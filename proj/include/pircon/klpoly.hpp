#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pircon/coxeter.hpp"
#include "pircon/error.hpp"
#include "pircon/matching.hpp"
#include "pircon/poly.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// Table of R-polynomials over a graded poset.  Entries for incomparable
/// pairs are zero by convention.
struct RTable {
  XParam x = XParam::MinusOne;
  GradedPoset::Ptr base;
  std::vector<std::vector<IntPolynomial>> entries;  // entries[u][w]

  const IntPolynomial& at(int u, int w) const {
    return entries.at(static_cast<size_t>(u)).at(static_cast<size_t>(w));
  }
  const IntPolynomial& at(const std::string& u, const std::string& w) const {
    return at(base->index(u), base->index(w));
  }
};

/// A graded poset together with a chosen special partial matching of every
/// principal order ideal: the data the R-polynomial recursion runs on.
class RefinedPircon {
public:
  /// Builds the refinement from explicit matchings, one per non-minimal
  /// element, given as id -> id pair maps (elements absent from the map
  /// are fixed).
  static RefinedPircon from_pairs(
      GradedPoset::Ptr base,
      const std::map<std::string, std::map<std::string, std::string>>& per_top) {
    RefinedPircon rp(std::move(base));
    for (int t = 0; t < rp.base_->size(); ++t) {
      if (t == rp.base_->bottom()) continue;
      auto it = per_top.find(rp.base_->id(t));
      if (it == per_top.end())
        throw Error("RefinementIncomplete",
                    "no matching given for the ideal of '" + rp.base_->id(t) + "'");
      auto ideal = rp.base_->order_ideal(t);
      std::vector<int> map(static_cast<size_t>(ideal->size()));
      for (int i = 0; i < ideal->size(); ++i) map[static_cast<size_t>(i)] = i;
      for (const auto& [a, b] : it->second) {
        int ia = ideal->index(a), ib = ideal->index(b);
        map[static_cast<size_t>(ia)] = ib;
        map[static_cast<size_t>(ib)] = ia;
      }
      rp.install(t, validate_spm(ideal, std::move(map)));
    }
    return rp;
  }

  /// The canonical refinement: for every ideal, the enumeration-least
  /// special partial matching.  Fails with NotAPircon when some ideal has
  /// none.
  static RefinedPircon first_refinement(GradedPoset::Ptr base,
                                        std::uint64_t budget = kDefaultBudget) {
    RefinedPircon rp(std::move(base));
    for (int t = 0; t < rp.base_->size(); ++t) {
      if (t == rp.base_->bottom()) continue;
      auto ideal = rp.base_->order_ideal(t);
      auto found = enumerate_spms(ideal, budget);
      if (found.empty())
        throw Error("NotAPircon",
                    "the ideal of '" + rp.base_->id(t) + "' has no special partial matching");
      rp.install(t, std::move(found.front()));
    }
    return rp;
  }

  /// Uses the given matchings where present and falls back to the
  /// enumeration-least one elsewhere.
  static RefinedPircon with_fallback(
      GradedPoset::Ptr base,
      const std::map<std::string, std::map<std::string, std::string>>& per_top,
      std::uint64_t budget = kDefaultBudget) {
    RefinedPircon rp(std::move(base));
    for (int t = 0; t < rp.base_->size(); ++t) {
      if (t == rp.base_->bottom()) continue;
      auto ideal = rp.base_->order_ideal(t);
      auto it = per_top.find(rp.base_->id(t));
      if (it != per_top.end()) {
        std::vector<int> map(static_cast<size_t>(ideal->size()));
        for (int i = 0; i < ideal->size(); ++i) map[static_cast<size_t>(i)] = i;
        for (const auto& [a, b] : it->second) {
          int ia = ideal->index(a), ib = ideal->index(b);
          map[static_cast<size_t>(ia)] = ib;
          map[static_cast<size_t>(ib)] = ia;
        }
        rp.install(t, validate_spm(ideal, std::move(map)));
      } else {
        auto found = enumerate_spms(ideal, budget);
        if (found.empty())
          throw Error("NotAPircon",
                      "the ideal of '" + rp.base_->id(t) + "' has no special partial matching");
        rp.install(t, std::move(found.front()));
      }
    }
    return rp;
  }

  const GradedPoset::Ptr& base() const { return base_; }

  const SpecialPartialMatching& matching(int top) const {
    const auto& m = spms_.at(static_cast<size_t>(top));
    if (!m)
      throw Error("RefinementIncomplete",
                  "no matching stored for '" + base_->id(top) + "'");
    return *m;
  }

  /// Ambient image of u under the matching of the ideal of top; u must lie
  /// below top.
  int apply(int top, int u) const {
    int img = ambient_.at(static_cast<size_t>(top)).at(static_cast<size_t>(u));
    if (img < 0)
      throw Error("NotComparable",
                  "'" + base_->id(u) + "' is not below '" + base_->id(top) + "'");
    return img;
  }

private:
  explicit RefinedPircon(GradedPoset::Ptr base) : base_(std::move(base)) {
    spms_.resize(static_cast<size_t>(base_->size()));
    ambient_.assign(static_cast<size_t>(base_->size()),
                    std::vector<int>(static_cast<size_t>(base_->size()), -1));
  }

  void install(int t, SpecialPartialMatching spm) {
    const auto& ideal = spm.base;
    auto& amb = ambient_[static_cast<size_t>(t)];
    for (int i = 0; i < ideal->size(); ++i) {
      int gi = base_->index(ideal->id(i));
      amb[static_cast<size_t>(gi)] = base_->index(ideal->id(spm(i)));
    }
    spms_[static_cast<size_t>(t)] = std::move(spm);
  }

  GradedPoset::Ptr base_;
  std::vector<std::optional<SpecialPartialMatching>> spms_;
  std::vector<std::vector<int>> ambient_;
};

/// Runs the matching recursion over the whole poset, bottom-up in rank:
/// with M the matching of the ideal of w and z = M(w),
///   R_{u,w} = R_{M(u),z}                     when M(u) < u,
///   R_{u,w} = (q-1) R_{u,z} + q R_{M(u),z}   when M(u) > u,
///   R_{u,w} = (q-1-x) R_{u,z}                when M(u) = u.
inline RTable r_polynomials(const RefinedPircon& rp, XParam x) {
  const auto& p = *rp.base();
  size_t n = static_cast<size_t>(p.size());
  RTable table;
  table.x = x;
  table.base = rp.base();
  table.entries.assign(n, std::vector<IntPolynomial>(n));
  IntPolynomial fixed = fixed_branch_factor(x);
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
  for (int w : order) {
    auto& col = table.entries;
    col[static_cast<size_t>(w)][static_cast<size_t>(w)] = IntPolynomial::one();
    if (w == p.bottom()) continue;
    int z = rp.apply(w, w);
    for (int u = 0; u < p.size(); ++u) {
      if (u == w || !p.leq(u, w)) continue;
      int mu = rp.apply(w, u);
      IntPolynomial val;
      if (mu == u) {
        val = fixed * col[static_cast<size_t>(u)][static_cast<size_t>(z)];
      } else if (p.rank(mu) < p.rank(u)) {
        val = col[static_cast<size_t>(mu)][static_cast<size_t>(z)];
      } else {
        val = IntPolynomial::q_minus_one() * col[static_cast<size_t>(u)][static_cast<size_t>(z)] +
              IntPolynomial::q() * col[static_cast<size_t>(mu)][static_cast<size_t>(z)];
      }
      col[static_cast<size_t>(u)][static_cast<size_t>(w)] = std::move(val);
    }
  }
  return table;
}

/// Whether the matching M of the ideal of top reproduces the table's
/// column at top when its case analysis is applied to the table's own
/// sub-values.  Every matching of every ideal being calculating makes the
/// table independent of the chosen refinement.
inline bool is_calculating(const RTable& table, int top, const SpecialPartialMatching& M,
                           std::string* witness = nullptr) {
  const auto& p = *table.base;
  const auto& ideal = *M.base;
  IntPolynomial fixed = fixed_branch_factor(table.x);
  int z = p.index(ideal.id(M(ideal.index(p.id(top)))));
  for (int li = 0; li < ideal.size(); ++li) {
    int u = p.index(ideal.id(li));
    if (u == top) continue;
    int mu = p.index(ideal.id(M(li)));
    IntPolynomial val;
    if (mu == u) {
      val = fixed * table.at(u, z);
    } else if (p.rank(mu) < p.rank(u)) {
      val = table.at(mu, z);
    } else {
      val = IntPolynomial::q_minus_one() * table.at(u, z) +
            IntPolynomial::q() * table.at(mu, z);
    }
    if (!(val == table.at(u, top))) {
      if (witness)
        *witness = "matching of '" + p.id(top) + "' disagrees at '" + p.id(u) + "': " +
                   val.str() + " vs " + table.at(u, top).str();
      return false;
    }
  }
  return true;
}

/// Checks that every special partial matching of every principal ideal is
/// calculating against the canonical table, which pins the R-polynomials
/// of the poset independently of any refinement choice.
inline bool all_matchings_calculating(GradedPoset::Ptr base, XParam x,
                                      std::uint64_t budget = kDefaultBudget,
                                      std::string* witness = nullptr) {
  RefinedPircon canonical = RefinedPircon::first_refinement(base, budget);
  RTable table = r_polynomials(canonical, x);
  for (int t = 0; t < base->size(); ++t) {
    if (t == base->bottom()) continue;
    auto ideal = base->order_ideal(t);
    for (const auto& M : enumerate_spms(ideal, budget))
      if (!is_calculating(table, t, M, witness)) return false;
  }
  return true;
}

/// Certifies that the matching pool S together with the poset forms a
/// coherent system, then decides whether every refinement drawn from the
/// pool yields the same R-table.  The four certified conditions: the
/// poset is a pircon; every pool member is a special partial matching of
/// a principal ideal; every non-minimal element is matched down by some
/// member; and the restrictions matching a given element down are
/// pairwise coherent through the pool.  A failed condition throws
/// NotAPirconSystem naming its index and a witness.
inline bool refinement_invariance(GradedPoset::Ptr base,
                                  const std::vector<SpecialPartialMatching>& S, XParam x,
                                  std::uint64_t budget = kDefaultBudget,
                                  std::string* witness = nullptr, RTable* out_table = nullptr) {
  if (!is_pircon(base, budget))
    throw Error("NotAPirconSystem", "condition 1: the poset is not a pircon");
  // Pin each member to a principal ideal and collect, per element, the
  // restrictions of every member that matches the element down.
  std::map<int, std::vector<SpecialPartialMatching>> pool;
  std::map<int, std::set<std::string>> dedup;
  for (const auto& M : S) {
    const auto& ideal = *M.base;
    bool principal = false;
    try {
      int top = base->index(ideal.id(ideal.maximum()));
      principal = *base->order_ideal(top) == ideal;
    } catch (const Error&) {
    }
    if (!principal)
      throw Error("NotAPirconSystem",
                  "condition 2: a member is not a matching of a principal ideal");
    for (int li = 0; li < ideal.size(); ++li) {
      if (ideal.rank(M(li)) >= ideal.rank(li)) continue;
      int t = base->index(ideal.id(li));
      auto sub = base->order_ideal(t);
      std::vector<int> m(static_cast<size_t>(sub->size()));
      for (int j = 0; j < sub->size(); ++j)
        m[static_cast<size_t>(j)] = sub->index(ideal.id(M(ideal.index(sub->id(j)))));
      auto restriction = validate_spm(sub, std::move(m));
      if (dedup[t].insert(restriction.key()).second) pool[t].push_back(std::move(restriction));
    }
  }
  for (int t = 0; t < base->size(); ++t) {
    if (t == base->bottom()) continue;
    auto it = pool.find(t);
    if (it == pool.end())
      throw Error("NotAPirconSystem", "condition 3: no member matches '" + base->id(t) + "' down");
    const auto& members = it->second;
    for (size_t i = 0; i < members.size(); ++i)
      for (size_t j = i + 1; j < members.size(); ++j)
        if (!s_coherent(members[i], members[j], members))
          throw Error("NotAPirconSystem", "condition 4: matchings of '" + base->id(t) +
                                              "' are not coherent within the pool");
  }
  std::map<std::string, std::map<std::string, std::string>> canonical;
  for (const auto& [t, members] : pool) {
    const auto& M = members.front();
    std::map<std::string, std::string> pairs;
    for (int i = 0; i < M.base->size(); ++i)
      if (M(i) > i) pairs[M.base->id(i)] = M.base->id(M(i));
    canonical[base->id(t)] = std::move(pairs);
  }
  RTable table = r_polynomials(RefinedPircon::from_pairs(base, canonical), x);
  for (const auto& [t, members] : pool)
    for (const auto& M : members)
      if (!is_calculating(table, t, M, witness)) return false;
  if (out_table) *out_table = table;
  return true;
}

/// Cross-checks the two specializations of one refined pircon:
/// the x = -1 entries are monic of degree equal to the rank gap, the
/// x = q entries have constant term (-1)^gap, and
/// R^{-1}_{u,w}(q) = (-q)^gap R^{q}_{u,w}(1/q).  Returns violation
/// descriptions, one per failing pair and clause.
inline std::vector<std::string> specialization_violations(const RTable& tq, const RTable& tm1) {
  if (tq.x != XParam::Q || tm1.x != XParam::MinusOne)
    throw Error("BaseMismatch", "tables must be the x = q and x = -1 specializations");
  if (!(*tq.base == *tm1.base))
    throw Error("BaseMismatch", "tables live on different posets");
  const auto& p = *tq.base;
  std::vector<std::string> out;
  for (int u = 0; u < p.size(); ++u)
    for (int w = 0; w < p.size(); ++w) {
      if (!p.leq(u, w)) continue;
      int gap = p.rank(w) - p.rank(u);
      std::string where = "('" + p.id(u) + "', '" + p.id(w) + "')";
      const IntPolynomial& m1 = tm1.at(u, w);
      if (m1.degree() != gap || m1.coeff(gap) != 1)
        out.push_back("degree at " + where + ": " + m1.str() + " is not monic of degree " +
                      std::to_string(gap));
      if (tq.at(u, w).coeff(0) != (gap % 2 == 0 ? 1 : -1))
        out.push_back("constant term at " + where + ": " + tq.at(u, w).str() +
                      " should end in " + (gap % 2 == 0 ? "1" : "-1"));
      IntPolynomial rhs = tq.at(u, w).reflect(gap);
      if (gap % 2 == 1) rhs = -rhs;
      if (!(m1 == rhs))
        out.push_back("reciprocity at " + where + ": " + m1.str() + " vs " + rhs.str());
    }
  return out;
}

/// The two specializations determine each other:
/// R^{-1}_{u,w}(q) = (-q)^{rank gap} R^{q}_{u,w}(1/q).
inline bool check_specialization_relation(const RTable& tq, const RTable& tm1,
                                          std::string* witness = nullptr) {
  auto violations = specialization_violations(tq, tm1);
  if (violations.empty()) return true;
  if (witness) *witness = violations.front();
  return false;
}

// ----- parabolic quotients -----

/// R-polynomials of a parabolic quotient: over the minimal coset
/// representatives below v, with s a left descent of v,
///   R_{u,v} = R_{su,sv}                      when s is a left descent of u,
///   R_{u,v} = (q-1) R_{u,sv} + q R_{su,sv}   when su stays in the quotient,
///   R_{u,v} = (q-1-x) R_{u,sv}               otherwise.
inline RTable parabolic_r(const CoxeterSystem& W, const std::vector<int>& H, const CoxWord& v,
                          XParam x) {
  auto iv = W.parabolic_interval(v, H);
  const auto& p = *iv.poset;
  IntPolynomial fixed = fixed_branch_factor(x);
  std::map<std::pair<CoxWord, CoxWord>, IntPolynomial> memo;
  auto rec = [&](auto&& self, const CoxWord& a, const CoxWord& b) -> IntPolynomial {
    if (a == b) return IntPolynomial::one();
    if (!W.bruhat_leq(a, b)) return IntPolynomial::zero();
    auto key = std::make_pair(a, b);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int s = W.left_descents(b).front();
    CoxWord sb = W.lmul(s, b);
    IntPolynomial val;
    if (W.is_left_descent(s, a)) {
      val = self(self, W.lmul(s, a), sb);
    } else {
      CoxWord sa = W.lmul(s, a);
      if (W.in_quotient(sa, H))
        val = IntPolynomial::q_minus_one() * self(self, a, sb) +
              IntPolynomial::q() * self(self, sa, sb);
      else
        val = fixed * self(self, a, sb);
    }
    memo.emplace(std::move(key), val);
    return val;
  };
  size_t n = static_cast<size_t>(p.size());
  RTable table;
  table.x = x;
  table.base = iv.poset;
  table.entries.assign(n, std::vector<IntPolynomial>(n));
  for (int ui = 0; ui < p.size(); ++ui)
    for (int wi = 0; wi < p.size(); ++wi)
      if (p.leq(ui, wi))
        table.entries[static_cast<size_t>(ui)][static_cast<size_t>(wi)] =
            rec(rec, iv.elements[static_cast<size_t>(ui)], iv.elements[static_cast<size_t>(wi)]);
  return table;
}

namespace detail {

/// Solves f from q^gap f(1/q) = f + g with deg f < gap / 2, checking the
/// overdetermined coefficients.
inline IntPolynomial solve_kls_step(const IntPolynomial& g, int gap, const std::string& where) {
  std::vector<long long> coeffs;
  if (g.degree() > gap)
    throw Error("DegreeObstruction", "degree of the known part exceeds the rank gap " + where);
  for (int i = 0; 2 * i < gap; ++i) coeffs.push_back(g.coeff(gap - i));
  IntPolynomial f(coeffs);
  for (int i = 0; 2 * i < gap; ++i)
    if (g.coeff(i) != -f.coeff(i))
      throw Error("DegreeObstruction",
                  "coefficient " + std::to_string(i) + " is inconsistent " + where);
  if (gap % 2 == 0 && g.coeff(gap / 2) != 0)
    throw Error("DegreeObstruction", "middle coefficient does not vanish " + where);
  return f;
}

}  // namespace detail

/// Solves q^{gap} P_{u,v}(1/q) = sum_{u<=z<=v} K_{u,z} P_{z,v} for the
/// family P with P_{v,v} = 1 and deg P_{u,v} < gap / 2, over the base of
/// the given table.
inline RTable kl_from_kernel(const RTable& K) {
  const auto& p = *K.base;
  size_t n = static_cast<size_t>(p.size());
  RTable P;
  P.x = K.x;
  P.base = K.base;
  P.entries.assign(n, std::vector<IntPolynomial>(n));
  for (int w = 0; w < p.size(); ++w) {
    P.entries[static_cast<size_t>(w)][static_cast<size_t>(w)] = IntPolynomial::one();
    std::vector<int> below;
    for (int u = 0; u < p.size(); ++u)
      if (u != w && p.leq(u, w)) below.push_back(u);
    std::sort(below.begin(), below.end(), [&](int a, int b) { return p.rank(a) > p.rank(b); });
    for (int u : below) {
      IntPolynomial g;
      for (int z = 0; z < p.size(); ++z) {
        if (z == u || !p.leq(u, z) || !p.leq(z, w)) continue;
        g = g + K.at(u, z) * P.at(z, w);
      }
      int gap = p.rank(w) - p.rank(u);
      P.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = detail::solve_kls_step(
          g, gap, "at ('" + p.id(u) + "', '" + p.id(w) + "')");
    }
  }
  return P;
}

/// Deodhar's parabolic Kazhdan-Lusztig polynomials for the chosen
/// specialization.
inline RTable parabolic_p(const CoxeterSystem& W, const std::vector<int>& H, const CoxWord& v,
                          XParam x) {
  return kl_from_kernel(parabolic_r(W, H, v, x));
}

// ----- twisted identities -----

/// The refinement of the twisted-identity poset by conjugation matchings:
/// the ideal of each w is matched through x -> theta(s) x s for the
/// smallest right descent s of w.
inline RefinedPircon conjugation_refinement(const IotaData& iota) {
  std::map<std::string, std::map<std::string, std::string>> per_top;
  for (int t = 0; t < iota.poset->size(); ++t) {
    if (t == iota.poset->bottom()) continue;
    const Perm& w = iota.perms[static_cast<size_t>(t)];
    int s = -1;
    for (int k = 0; k + 1 < iota.n2; ++k)
      if (w[static_cast<size_t>(k)] > w[static_cast<size_t>(k) + 1]) {
        s = k;
        break;
      }
    auto M = conjugation_spm(iota, t, s);
    std::map<std::string, std::string> pairs;
    for (int i = 0; i < M.base->size(); ++i)
      if (M(i) > i) pairs[M.base->id(i)] = M.base->id(M(i));
    per_top[iota.poset->id(t)] = std::move(pairs);
  }
  return RefinedPircon::from_pairs(iota.poset, per_top);
}

/// R-polynomials of the twisted identities under conjugation matchings;
/// x = q gives the variant whose fixed-element branch multiplies by -1,
/// x = -1 the variant multiplying by q.
inline RTable twisted_r_polynomials(const IotaData& iota, XParam x) {
  return r_polynomials(conjugation_refinement(iota), x);
}

enum class KlvVariant { R, Q };

/// Kazhdan-Lusztig-Vogan polynomials on the twisted identities of S_{2n},
/// by direct recursion on twisted conjugation u -> theta(s) u s with s the
/// smallest right descent of the current top: entries moved down are
/// copied from the lower table, entries moved up take
/// (q-1) R_{u,z} + q R_{us,z}, and fixed entries multiply R_{u,z} by -1
/// (variant R) or by q (variant Q).  Works on permutations directly, so
/// agreement with r_polynomials under conjugation refinements checks the
/// matching engine against this recursion; variant R corresponds to x = q
/// and variant Q to x = -1.
inline RTable klv_polynomials(int n, KlvVariant variant) {
  auto W = CoxeterSystem::symmetric(2 * n);
  auto iota = twisted_identities(W);
  const auto& p = *iota.poset;
  size_t count = static_cast<size_t>(p.size());
  RTable table;
  table.x = variant == KlvVariant::R ? XParam::Q : XParam::MinusOne;
  table.base = iota.poset;
  table.entries.assign(count, std::vector<IntPolynomial>(count));
  IntPolynomial fixed =
      variant == KlvVariant::R ? IntPolynomial::constant(-1) : IntPolynomial::q();
  std::vector<int> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank(a) < p.rank(b); });
  for (int w : order) {
    table.entries[static_cast<size_t>(w)][static_cast<size_t>(w)] = IntPolynomial::one();
    if (w == p.bottom()) continue;
    const Perm& pw = iota.perms[static_cast<size_t>(w)];
    int s = -1;
    for (int k = 0; k + 1 < iota.n2; ++k)
      if (pw[static_cast<size_t>(k)] > pw[static_cast<size_t>(k) + 1]) {
        s = k;
        break;
      }
    int z = p.index(perm_id(twisted_conjugate(pw, s)));
    for (int u = 0; u < p.size(); ++u) {
      if (u == w || !p.leq(u, w)) continue;
      int mu = p.index(perm_id(twisted_conjugate(iota.perms[static_cast<size_t>(u)], s)));
      IntPolynomial val;
      if (mu == u)
        val = fixed * table.at(u, z);
      else if (p.rank(mu) < p.rank(u))
        val = table.at(mu, z);
      else
        val = IntPolynomial::q_minus_one() * table.at(u, z) +
              IntPolynomial::q() * table.at(mu, z);
      table.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = std::move(val);
    }
  }
  return table;
}

}  // namespace pircon
