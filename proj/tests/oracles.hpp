#pragma once

// Test-only oracles, independent of the library's computation paths.

#include <map>
#include <set>
#include <vector>

#include "coxhecke/hecke.hpp"
#include "coxhecke/instances.hpp"
#include "coxhecke/kl.hpp"

namespace oracle {

using namespace coxhecke;

// Bruhat order by the subword characterization: y <= w iff y is a product
// of some subsequence of a reduced word of w. DP over prefixes of the
// canonical word of w, collecting every subsequence product.
inline bool bruhat_subword(const GroupTable& t, EltIndex y, EltIndex w) {
  std::set<EltIndex> reach{0};
  for (Gen s : t.word(w)) {
    std::set<EltIndex> next = reach;
    for (EltIndex x : reach) next.insert(t.right_mult_checked(x, s));
    reach = std::move(next);
  }
  return reach.count(y) > 0;
}

// r-polynomials read off directly from bar(T_w) = (T_{w^-1})^-1, computed
// with T-basis inversion only (no descent recursion): the coefficient of
// T_y is bar(r_{y,w}).
inline std::map<EltIndex, LaurentPoly> r_row_by_inversion(
    const HeckeAlgebra& alg, EltIndex w) {
  const GroupTable& t = alg.table();
  HeckeElt inv = alg.inverse_T(t.inverse(w));
  std::map<EltIndex, LaurentPoly> out;
  for (const auto& [y, p] : inv.coords()) out.emplace(y, p.bar());
  return out;
}

// Brute-force KL row: solve the full bar-fixedness linear system over the
// Bruhat interval below w, with r-polynomials from the inversion oracle
// and the antisymmetric splitting done coefficient by coefficient.
inline std::map<EltIndex, LaurentPoly> kl_row_bruteforce(
    const HeckeAlgebra& alg, EltIndex w) {
  const GroupTable& t = alg.table();
  std::vector<EltIndex> interval;
  for (EltIndex x = 0; x < t.size(); ++x)
    if (bruhat_subword(t, x, w)) interval.push_back(x);

  std::map<EltIndex, std::map<EltIndex, LaurentPoly>> r;  // r[y] = row of y
  for (EltIndex y : interval) r[y] = r_row_by_inversion(alg, y);

  std::map<EltIndex, LaurentPoly> p;
  p[w] = LaurentPoly::one();
  for (auto it = interval.rbegin(); it != interval.rend(); ++it) {
    EltIndex x = *it;
    if (x == w) continue;
    // bar(p_x) - p_x = sum_{x<y<=w} r_{x,y} p_y must hold with p_x in A_<0
    LaurentPoly rhs;
    for (const auto& [y, py] : p) {
      auto jt = r[y].find(x);
      if (jt != r[y].end()) rhs += jt->second * py;
    }
    LaurentPoly px;
    for (const auto& [e, c] : rhs.terms())
      if (e > 0) px += LaurentPoly(c, -e);
    if ((px.bar() - px) != rhs)
      throw std::runtime_error("oracle: system has no antisymmetric solution");
    if (!px.is_zero()) p[x] = px;
  }
  return p;
}

// Dihedral bookkeeping: the element s1 s2 s1 ... (k factors) resp.
// s2 s1 s2 ... in a rank-2 table.
inline EltIndex dihedral_elt(const GroupTable& t, int family, int k) {
  Word w;
  for (int i = 0; i < k; ++i)
    w.push_back(static_cast<Gen>((family - 1 + i) % 2));
  return t.element_of_word(w);
}

// Gamma_w = sum_{y <= w} v^{L(y)-L(w)} T_y.
inline HeckeElt dihedral_gamma(const GroupTable& t, EltIndex w) {
  HeckeElt out(Basis::T);
  for (EltIndex y = 0; y < t.size(); ++y)
    if (bruhat_subword(t, y, w))
      out.set(y, LaurentPoly::monomial(t.weight(y) - t.weight(w)));
  return out;
}

// Gamma'_w for the unequal dihedral case (L2 > L1): the closed forms for
// odd-length elements; Gamma'_w = Gamma_w for even length and for 1_1.
inline HeckeElt dihedral_gamma_prime(const GroupTable& t, EltIndex w) {
  const CoxeterSystem& sys = t.system();
  const int L1 = sys.weight(0), L2 = sys.weight(1);
  const Word& word = t.word(w);
  const int len = t.length(w);
  if (len % 2 == 0 || (len == 1 && word[0] == 0)) return dihedral_gamma(t, w);
  auto T = [&](int family, int k) { return dihedral_elt(t, family, k); };
  HeckeElt out(Basis::T);
  auto add = [&](EltIndex x, const LaurentPoly& c) {
    if (x == kOutside) throw std::runtime_error("oracle: outside ball");
    out.add_to(x, c);
  };
  if (word[0] == 1) {
    // 2_{2k+1}
    const int k = (len - 1) / 2;
    for (int s = 0; s <= k; ++s) {
      LaurentPoly alt;
      for (int i = 0; i <= s; ++i)
        alt += LaurentPoly(Int(i % 2 == 0 ? 1 : -1), 2 * i * L1);
      LaurentPoly coeff = alt * LaurentPoly::monomial(-s * (L1 + L2));
      if (s < k) {
        add(T(2, 2 * k - 2 * s + 1), coeff);
        add(T(2, 2 * k - 2 * s), coeff * LaurentPoly::monomial(-L2));
        add(T(1, 2 * k - 2 * s), coeff * LaurentPoly::monomial(-L2));
        add(T(1, 2 * k - 2 * s - 1), coeff * LaurentPoly::monomial(-2 * L2));
      } else {
        add(T(2, 1), coeff);
        add(T(2, 0), coeff * LaurentPoly::monomial(-L2));
      }
    }
    return out;
  }
  // 1_{2k+1}, len >= 3
  const int k = (len - 1) / 2;
  add(T(1, 2 * k + 1), LaurentPoly::one());
  add(T(1, 2 * k), LaurentPoly::monomial(-L1));
  add(T(2, 2 * k), LaurentPoly::monomial(-L1));
  add(T(2, 2 * k - 1), LaurentPoly::monomial(-2 * L1));
  const int Lw = t.weight(w);
  LaurentPoly doubled = LaurentPoly::one() + LaurentPoly::monomial(2 * L1);
  EltIndex cap = T(1, 2 * k - 1);
  for (EltIndex y = 0; y < t.size(); ++y)
    if (bruhat_subword(t, y, cap))
      add(y, LaurentPoly::monomial(t.weight(y) - Lw) * doubled);
  return out;
}

}  // namespace oracle
