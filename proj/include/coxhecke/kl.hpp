#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxhecke/hecke.hpp"

namespace coxhecke {

/*
  Kazhdan-Lusztig data for a group table: the polynomials p_{y,w}, the
  elements c_w, the correction coefficients mu^s_{y,w}, and the inverse
  table q'_{y,w} / q_{y,w}.

  A row p_{.,w} is computed over the Bruhat interval below w by descending
  length: with u_w = 1, each u_x is the unique element of A_{<0} with
  bar(u_x) - u_x = sum_{x<y<=w} r_{x,y} u_y. Rows and mu values are
  memoized; traversal order is increasing length then ShortLex, so repeated
  runs produce identical tables.
*/
class KLContext {
public:
  explicit KLContext(const HeckeAlgebra& alg);

  const HeckeAlgebra& algebra() const { return *alg_; }
  const GroupTable& table() const { return alg_->table(); }

  // p_{.,w} as a map y -> p_{y,w} (zeros absent; p_{w,w} = 1).
  const std::map<EltIndex, LaurentPoly>& kl_row(EltIndex w) const;
  const LaurentPoly& p(EltIndex y, EltIndex w) const;

  // c_w = sum_y p_{y,w} T_y, in T-basis coordinates. bar-fixed.
  HeckeElt c_element(EltIndex w) const;

  // mu^s_{y,w}; requires sy < y < w < sw, else DomainError.
  const LaurentPoly& mu(Gen s, EltIndex y, EltIndex w) const;

  // Expansion of c_s c_w (left) or c_w c_s (right) in the c-basis.
  HeckeElt cs_times_cw(Gen s, EltIndex w, Side side) const;

  // q'_{y,w} (inverse of the p-matrix) and q_{y,w} = sgn(y)sgn(w)q'_{y,w}.
  const LaurentPoly& q_prime(EltIndex y, EltIndex w) const;
  LaurentPoly q(EltIndex y, EltIndex w) const;

  // D_z(h) = sum_y h_y q'_{z,y} for h in the T-basis.
  LaurentPoly d_functional(EltIndex z, const HeckeElt& h) const;
  // D_z as a formal T-sum over a finite table: D_z = sum_y q'_{z,y} T_y.
  HeckeElt d_element(EltIndex z) const;

  // Exhaustive w0-dualities on a complete finite table: the q/p duality,
  // the dagger duality of D-functionals, and the mu duality. Returns the
  // first counterexample description on failure.
  struct Report {
    bool pass = true;
    std::string counterexample;
  };
  Report w0_dualities() const;

private:
  const HeckeAlgebra* alg_;
  mutable std::vector<std::map<EltIndex, LaurentPoly>> rows_;
  mutable std::vector<bool> rows_done_;
  mutable std::map<std::tuple<Gen, EltIndex, EltIndex>, LaurentPoly> mu_memo_;
  mutable std::map<std::pair<EltIndex, EltIndex>, LaurentPoly> qp_memo_;
};

// The bar-fixed symmetrization determined by the non-negative part of r:
// result = r_0 + sum_{n>0} r_n (v^n + v^-n).
LaurentPoly symmetrize_from_nonneg(const LaurentPoly& r);

}  // namespace coxhecke
