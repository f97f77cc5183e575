#pragma once

#include <map>
#include <vector>

#include "coxhecke/coxeter.hpp"
#include "coxhecke/laurent.hpp"

namespace coxhecke {

enum class Basis { T, C };
enum class Side { Left, Right };

/*
  An element of the Hecke algebra over A = Z[v,v^-1], as a finite map from
  group-table indices to coefficients. The basis tag records whether the
  coordinates are T-basis or c-basis; arithmetic mixes only equal tags.
*/
class HeckeElt {
public:
  using Coords = std::map<EltIndex, LaurentPoly>;

  HeckeElt() = default;
  explicit HeckeElt(Basis basis) : basis_(basis) {}
  static HeckeElt unit(Basis basis = Basis::T) {
    HeckeElt h(basis);
    h.set(0, LaurentPoly::one());
    return h;
  }
  static HeckeElt basis_elt(EltIndex w, Basis basis = Basis::T) {
    HeckeElt h(basis);
    h.set(w, LaurentPoly::one());
    return h;
  }

  Basis basis() const { return basis_; }
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  const LaurentPoly& coord(EltIndex w) const;

  void set(EltIndex w, LaurentPoly p) {
    if (p.is_zero())
      coords_.erase(w);
    else
      coords_[w] = std::move(p);
  }
  void add_to(EltIndex w, const LaurentPoly& p);

  HeckeElt operator+(const HeckeElt& o) const;
  HeckeElt operator-(const HeckeElt& o) const;
  HeckeElt scaled(const LaurentPoly& p) const;
  HeckeElt operator-() const { return scaled(-LaurentPoly::one()); }
  bool operator==(const HeckeElt& o) const {
    return basis_ == o.basis_ && coords_ == o.coords_;
  }
  bool operator!=(const HeckeElt& o) const { return !(*this == o); }

private:
  Basis basis_ = Basis::T;
  Coords coords_;
};

/*
  T-basis arithmetic of the Hecke algebra attached to a group table, plus
  the bar involution via the r-polynomial table. The RTable is built lazily
  row by row (pivoting on the first left descent) and cached.
*/
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const GroupTable& table);

  const GroupTable& table() const { return *table_; }

  // v_s = v^L(s), and v_s - v_s^-1 resp. v_s + v_s^-1.
  const LaurentPoly& vs(Gen s) const { return vs_[s]; }
  const LaurentPoly& vs_minus_inv(Gen s) const { return vs_minus_inv_[s]; }
  const LaurentPoly& vs_plus_inv(Gen s) const { return vs_plus_inv_[s]; }

  // T_s h or h T_s.
  HeckeElt mul_gen(Gen s, const HeckeElt& h, Side side) const;
  // General product; decomposes the shorter-support factor along words.
  HeckeElt mul(const HeckeElt& a, const HeckeElt& b) const;
  // T_w^-1.
  HeckeElt inverse_T(EltIndex w) const;

  // r_{y,w} coefficients of bar(T_w) = sum_y bar(r_{y,w}) T_y.
  const std::map<EltIndex, LaurentPoly>& r_row(EltIndex w) const;
  const LaurentPoly& r_poly(EltIndex y, EltIndex w) const;

  HeckeElt bar(const HeckeElt& h) const;
  // T_w -> T_{w^-1} (antiautomorphism).
  HeckeElt flip(const HeckeElt& h) const;
  // T_w -> sgn(w) T_{w^-1}^-1 (algebra involution).
  HeckeElt dagger(const HeckeElt& h) const;
  // Coefficient of T_1.
  LaurentPoly tau(const HeckeElt& h) const;

private:
  const GroupTable* table_;
  std::vector<LaurentPoly> vs_, vs_minus_inv_, vs_plus_inv_;
  mutable std::vector<std::map<EltIndex, LaurentPoly>> r_rows_;
  mutable std::vector<bool> r_done_;
};

}  // namespace coxhecke
