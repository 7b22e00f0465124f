#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pircon/error.hpp"
#include "pircon/klpoly.hpp"
#include "pircon/poly.hpp"
#include "pircon/poset.hpp"

namespace pircon {

/// A Z[q]-valued function on the comparable pairs of a graded poset,
/// with the incidence-algebra operations needed for kernel checks.
struct IncidenceFunction {
  GradedPoset::Ptr base;
  std::vector<std::vector<IntPolynomial>> entries;

  static IncidenceFunction delta(GradedPoset::Ptr base) {
    size_t n = static_cast<size_t>(base->size());
    IncidenceFunction f{std::move(base), {}};
    f.entries.assign(n, std::vector<IntPolynomial>(n));
    for (size_t i = 0; i < n; ++i) f.entries[i][i] = IntPolynomial::one();
    return f;
  }

  static IncidenceFunction from_table(const RTable& t) {
    return IncidenceFunction{t.base, t.entries};
  }

  const IntPolynomial& at(int u, int w) const {
    return entries.at(static_cast<size_t>(u)).at(static_cast<size_t>(w));
  }
  const IntPolynomial& at(const std::string& u, const std::string& w) const {
    return at(base->index(u), base->index(w));
  }

  friend bool operator==(const IncidenceFunction& a, const IncidenceFunction& b) {
    return *a.base == *b.base && a.entries == b.entries;
  }
};

/// Incidence-algebra product: (F G)_{u,w} = sum_{u <= z <= w} F_{u,z} G_{z,w}.
inline IncidenceFunction convolve(const IncidenceFunction& f, const IncidenceFunction& g) {
  if (!(*f.base == *g.base))
    throw Error("BaseMismatch", "incidence functions live on different posets");
  const auto& p = *f.base;
  size_t n = static_cast<size_t>(p.size());
  IncidenceFunction r{f.base, {}};
  r.entries.assign(n, std::vector<IntPolynomial>(n));
  for (int u = 0; u < p.size(); ++u)
    for (int w = 0; w < p.size(); ++w) {
      if (!p.leq(u, w)) continue;
      IntPolynomial acc;
      for (int z = 0; z < p.size(); ++z)
        if (p.leq(u, z) && p.leq(z, w))
          acc = acc + f.at(u, z) * g.at(z, w);
      r.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = std::move(acc);
    }
  return r;
}

/// The bar involution: F_{u,w} |-> q^{rank gap} F_{u,w}(1/q); requires
/// every entry's degree to stay within its rank gap.
inline IncidenceFunction bar(const IncidenceFunction& f) {
  const auto& p = *f.base;
  size_t n = static_cast<size_t>(p.size());
  IncidenceFunction r{f.base, {}};
  r.entries.assign(n, std::vector<IntPolynomial>(n));
  for (int u = 0; u < p.size(); ++u)
    for (int w = 0; w < p.size(); ++w) {
      if (!p.leq(u, w)) continue;
      int gap = p.rank(w) - p.rank(u);
      if (f.at(u, w).degree() > gap)
        throw Error("DegreeBoundViolated",
                    "entry at ('" + p.id(u) + "', '" + p.id(w) + "') has degree " +
                        std::to_string(f.at(u, w).degree()) + " above the rank gap " +
                        std::to_string(gap));
      r.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = f.at(u, w).reflect(gap);
    }
  return r;
}

inline bool is_unitary(const IncidenceFunction& f, std::string* witness = nullptr) {
  for (int u = 0; u < f.base->size(); ++u)
    if (!(f.at(u, u) == IntPolynomial::one())) {
      if (witness) *witness = "diagonal entry at '" + f.base->id(u) + "' is " + f.at(u, u).str();
      return false;
    }
  return true;
}

/// Whether K * bar(K) = delta, the condition for K to admit a consistent
/// family of Kazhdan-Lusztig-Stanley polynomials.
inline bool is_kernel(const IncidenceFunction& k, std::string* witness = nullptr) {
  if (!is_unitary(k, witness)) return false;
  IncidenceFunction prod = convolve(k, bar(k));
  const auto& p = *k.base;
  for (int u = 0; u < p.size(); ++u)
    for (int w = 0; w < p.size(); ++w) {
      if (!p.leq(u, w)) continue;
      const IntPolynomial& got = prod.at(u, w);
      bool ok = (u == w) ? got == IntPolynomial::one() : got == IntPolynomial::zero();
      if (!ok) {
        if (witness)
          *witness = "(K * bar K) at ('" + p.id(u) + "', '" + p.id(w) + "') = " + got.str();
        return false;
      }
    }
  return true;
}

/// The Kazhdan-Lusztig-Stanley family of a kernel: the unique P with
/// P_{w,w} = 1, deg P_{u,w} < (rank gap)/2 and
/// q^{rank gap} P_{u,w}(1/q) = sum_{u <= z <= w} K_{u,z} P_{z,w}.
inline IncidenceFunction kls_polynomials(const IncidenceFunction& k) {
  std::string witness;
  if (!is_unitary(k, &witness)) throw Error("NotUnitary", witness);
  if (!is_kernel(k, &witness)) throw Error("NotAKernel", witness);
  const auto& p = *k.base;
  size_t n = static_cast<size_t>(p.size());
  IncidenceFunction out{k.base, {}};
  out.entries.assign(n, std::vector<IntPolynomial>(n));
  for (int w = 0; w < p.size(); ++w) {
    out.entries[static_cast<size_t>(w)][static_cast<size_t>(w)] = IntPolynomial::one();
    std::vector<int> below;
    for (int u = 0; u < p.size(); ++u)
      if (u != w && p.leq(u, w)) below.push_back(u);
    std::sort(below.begin(), below.end(),
              [&](int a, int b) { return p.rank(a) > p.rank(b); });
    for (int u : below) {
      IntPolynomial g;
      for (int z = 0; z < p.size(); ++z)
        if (z != u && p.leq(u, z) && p.leq(z, w)) g = g + k.at(u, z) * out.at(z, w);
      out.entries[static_cast<size_t>(u)][static_cast<size_t>(w)] = detail::solve_kls_step(
          g, p.rank(w) - p.rank(u), "at ('" + p.id(u) + "', '" + p.id(w) + "')");
    }
  }
  return out;
}

}  // namespace pircon
