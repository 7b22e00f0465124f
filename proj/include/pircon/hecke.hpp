#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pircon/error.hpp"
#include "pircon/poly.hpp"

namespace pircon {

/// Free module of rank d over the Laurent polynomial ring Z[q, q^-1],
/// with basis m_0, ..., m_{d-1} indexed by one arm of a dihedral orbit
/// poset, carrying two pairs of endomorphisms L_g and Gamma_g (g one of
/// the two dihedral generators s, r) and a flip I.  The parameter x is
/// instantiated to q or -1.
struct DihedralModule {
  int d;
  XParam x;

  DihedralModule(int d_, XParam x_) : d(d_), x(x_) {
    if (d < 1) throw Error("InvalidRank", "module rank must be positive");
  }

  LaurentPolynomial xval() const {
    return x == XParam::Q ? LaurentPolynomial::q() : LaurentPolynomial::constant(-1);
  }
};

using LaurentVector = std::vector<LaurentPolynomial>;
using LaurentMatrix = std::vector<LaurentVector>;  // M[i][j]: coeff of m_i in image of m_j

enum class DihedralGen { S, R };

inline DihedralGen other(DihedralGen g) {
  return g == DihedralGen::S ? DihedralGen::R : DihedralGen::S;
}

/// The generator conjugate to g under the flip: g itself when d is even,
/// the other generator when d is odd.
inline DihedralGen flip_conjugate(const DihedralModule& mod, DihedralGen g) {
  return mod.d % 2 == 0 ? g : other(g);
}

/// L_g(m_p), the action used on the arm below the matched coatom.
inline LaurentVector act_L(const DihedralModule& mod, DihedralGen g, int p) {
  int d = mod.d;
  if (p < 0 || p >= d) throw Error("IndexOutOfRange", "basis index out of range");
  LaurentVector v(static_cast<size_t>(d));
  const bool down_parity = (g == DihedralGen::S) ? (p % 2 == 1) : (p % 2 == 0 && p > 0);
  const bool up_parity = (g == DihedralGen::S) ? (p % 2 == 0) : (p % 2 == 1);
  if (down_parity) {
    v[static_cast<size_t>(p - 1)] += LaurentPolynomial::q();
    v[static_cast<size_t>(p)] += LaurentPolynomial::q() - LaurentPolynomial::one();
  } else if (up_parity && p < d - 1) {
    v[static_cast<size_t>(p + 1)] += LaurentPolynomial::one();
  } else {
    v[static_cast<size_t>(p)] += mod.xval();
  }
  return v;
}

/// Gamma_g(m_p), the action used on the arm above the matched atom.
inline LaurentVector act_Gamma(const DihedralModule& mod, DihedralGen g, int p) {
  int d = mod.d;
  if (p < 0 || p >= d) throw Error("IndexOutOfRange", "basis index out of range");
  LaurentVector v(static_cast<size_t>(d));
  const bool down_parity = (g == DihedralGen::S) ? (p % 2 == 1) : (p % 2 == 0 && p > 0);
  const bool up_parity = (g == DihedralGen::S) ? (p % 2 == 0) : (p % 2 == 1);
  if (down_parity) {
    v[static_cast<size_t>(p - 1)] += LaurentPolynomial::one();
  } else if (up_parity && p < d - 1) {
    v[static_cast<size_t>(p + 1)] += LaurentPolynomial::q();
    v[static_cast<size_t>(p)] += LaurentPolynomial::q() - LaurentPolynomial::one();
  } else {
    v[static_cast<size_t>(p)] += mod.xval();
  }
  return v;
}

/// I(m_p) = m_{d-1-p}.
inline LaurentVector involution_I(const DihedralModule& mod, int p) {
  if (p < 0 || p >= mod.d) throw Error("IndexOutOfRange", "basis index out of range");
  LaurentVector v(static_cast<size_t>(mod.d));
  v[static_cast<size_t>(mod.d - 1 - p)] = LaurentPolynomial::one();
  return v;
}

inline LaurentMatrix matrix_of(int d, const std::vector<LaurentVector>& columns) {
  LaurentMatrix m(static_cast<size_t>(d), LaurentVector(static_cast<size_t>(d)));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = columns[static_cast<size_t>(j)][static_cast<size_t>(i)];
  return m;
}

inline LaurentMatrix matrix_L(const DihedralModule& mod, DihedralGen g) {
  std::vector<LaurentVector> cols;
  for (int p = 0; p < mod.d; ++p) cols.push_back(act_L(mod, g, p));
  return matrix_of(mod.d, cols);
}

inline LaurentMatrix matrix_Gamma(const DihedralModule& mod, DihedralGen g) {
  std::vector<LaurentVector> cols;
  for (int p = 0; p < mod.d; ++p) cols.push_back(act_Gamma(mod, g, p));
  return matrix_of(mod.d, cols);
}

inline LaurentMatrix matrix_I(const DihedralModule& mod) {
  std::vector<LaurentVector> cols;
  for (int p = 0; p < mod.d; ++p) cols.push_back(involution_I(mod, p));
  return matrix_of(mod.d, cols);
}

inline LaurentMatrix mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  size_t n = a.size();
  LaurentMatrix r(n, LaurentVector(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

inline LaurentVector mat_apply(const LaurentMatrix& a, const LaurentVector& v) {
  size_t n = a.size();
  LaurentVector r(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) r[i] += a[i][j] * v[j];
  return r;
}

inline LaurentMatrix mat_identity(int d) {
  LaurentMatrix r(static_cast<size_t>(d), LaurentVector(static_cast<size_t>(d)));
  for (int i = 0; i < d; ++i) r[static_cast<size_t>(i)][static_cast<size_t>(i)] = LaurentPolynomial::one();
  return r;
}

inline LaurentMatrix mat_scale(const LaurentPolynomial& c, const LaurentMatrix& a) {
  LaurentMatrix r = a;
  for (auto& row : r)
    for (auto& e : row) e = c * e;
  return r;
}

inline LaurentMatrix mat_add(const LaurentMatrix& a, const LaurentMatrix& b) {
  LaurentMatrix r = a;
  for (size_t i = 0; i < r.size(); ++i)
    for (size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
  return r;
}

inline bool mat_eq(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  return true;
}

/// Alternating product with k factors, starting from a: a b a b ...
inline LaurentMatrix alternating_product(const LaurentMatrix& a, const LaurentMatrix& b, int k) {
  LaurentMatrix r = mat_identity(static_cast<int>(a.size()));
  for (int i = 0; i < k; ++i) r = mat_mul(r, i % 2 == 0 ? a : b);
  return r;
}

/// Commutativity of the flip with the two pairs of actions:
/// I . L_g = Gamma_{gbar} . I for g in {s, r}.
inline bool verify_diagrams(const DihedralModule& mod) {
  LaurentMatrix I = matrix_I(mod);
  for (DihedralGen g : {DihedralGen::S, DihedralGen::R}) {
    LaurentMatrix lhs = mat_mul(I, matrix_L(mod, g));
    LaurentMatrix rhs = mat_mul(matrix_Gamma(mod, flip_conjugate(mod, g)), I);
    if (!mat_eq(lhs, rhs)) return false;
  }
  return true;
}

/// Quadratic relation G^2 = (q-1) G + q and the d-factor alternating
/// braid equality for the Gamma actions.
inline bool verify_hecke_relations(const DihedralModule& mod) {
  LaurentMatrix gs = matrix_Gamma(mod, DihedralGen::S);
  LaurentMatrix gr = matrix_Gamma(mod, DihedralGen::R);
  LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial::one();
  LaurentMatrix id = mat_identity(mod.d);
  for (const auto& g : {gs, gr}) {
    LaurentMatrix lhs = mat_mul(g, g);
    LaurentMatrix rhs = mat_add(mat_scale(qm1, g), mat_scale(LaurentPolynomial::q(), id));
    if (!mat_eq(lhs, rhs)) return false;
  }
  return mat_eq(alternating_product(gs, gr, mod.d), alternating_product(gr, gs, mod.d));
}

/// Named verdicts of all the module checks, for reporting.
inline std::vector<std::pair<std::string, bool>> hecke_report(const DihedralModule& mod) {
  LaurentMatrix I = matrix_I(mod);
  LaurentMatrix gs = matrix_Gamma(mod, DihedralGen::S);
  LaurentMatrix gr = matrix_Gamma(mod, DihedralGen::R);
  LaurentPolynomial qm1 = LaurentPolynomial::q() - LaurentPolynomial::one();
  LaurentMatrix id = mat_identity(mod.d);
  auto quad = [&](const LaurentMatrix& g) {
    return mat_eq(mat_mul(g, g), mat_add(mat_scale(qm1, g), mat_scale(LaurentPolynomial::q(), id)));
  };
  std::vector<std::pair<std::string, bool>> out;
  out.emplace_back("I^2 = id", mat_eq(mat_mul(I, I), id));
  out.emplace_back("I . L_s = Gamma_" + std::string(flip_conjugate(mod, DihedralGen::S) == DihedralGen::S ? "s" : "r") + " . I",
                   mat_eq(mat_mul(I, matrix_L(mod, DihedralGen::S)),
                          mat_mul(matrix_Gamma(mod, flip_conjugate(mod, DihedralGen::S)), I)));
  out.emplace_back("I . L_r = Gamma_" + std::string(flip_conjugate(mod, DihedralGen::R) == DihedralGen::S ? "s" : "r") + " . I",
                   mat_eq(mat_mul(I, matrix_L(mod, DihedralGen::R)),
                          mat_mul(matrix_Gamma(mod, flip_conjugate(mod, DihedralGen::R)), I)));
  out.emplace_back("Gamma_s^2 = (q-1) Gamma_s + q", quad(gs));
  out.emplace_back("Gamma_r^2 = (q-1) Gamma_r + q", quad(gr));
  out.emplace_back("braid equality with " + std::to_string(mod.d) + " factors",
                   mat_eq(alternating_product(gs, gr, mod.d), alternating_product(gr, gs, mod.d)));
  return out;
}

}  // namespace pircon
