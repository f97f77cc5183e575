#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxhecke/afun.hpp"

namespace coxhecke {

/*
  An element of the asymptotic ring J: an integer combination of the basis
  t_w, with structure constants t_x t_y = sum_z gamma_{x,y,z^-1} t_z.
*/
class JElt {
public:
  using Coords = std::map<EltIndex, Int>;

  JElt() = default;
  static JElt basis_elt(EltIndex w) {
    JElt j;
    j.coords_[w] = 1;
    return j;
  }

  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  Int coord(EltIndex w) const {
    auto it = coords_.find(w);
    return it == coords_.end() ? Int(0) : it->second;
  }
  void add_to(EltIndex w, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = coords_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) coords_.erase(it);
    }
  }
  JElt operator+(const JElt& o) const;
  JElt operator-(const JElt& o) const;
  bool operator==(const JElt& o) const { return coords_ == o.coords_; }
  bool operator!=(const JElt& o) const { return !(*this == o); }

private:
  Coords coords_;
};

// J with Laurent coefficients (the target of phi).
class JAElt {
public:
  using Coords = std::map<EltIndex, LaurentPoly>;

  JAElt() = default;
  const Coords& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }
  const LaurentPoly& coord(EltIndex w) const;
  void add_to(EltIndex w, const LaurentPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = coords_.try_emplace(w, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) coords_.erase(it);
    }
  }
  bool operator==(const JAElt& o) const { return coords_ == o.coords_; }
  bool operator!=(const JAElt& o) const { return !(*this == o); }

private:
  Coords coords_;
};

/*
  The ring J of a finite weighted Coxeter group. Construction refuses to
  run unless the instance's P1-P15 report passed (ConjecturesUnverified),
  since every formula below leans on them.
*/
class JRing {
public:
  static JRing build(const AFun& af,
                     const std::vector<ConjectureResult>& report);

  const AFun& afun() const { return *af_; }
  const GroupTable& table() const { return af_->table(); }

  JElt mul(const JElt& a, const JElt& b) const;
  const JElt& unit() const { return unit_; }
  // n-hat: n_d of the unique Duflo element with d ~L z^-1.
  const Int& n_hat(EltIndex z) const { return n_hat_[z]; }

  // Per-two-sided-cell decomposition with block units; verifies that
  // cross-block products vanish and each block unit works inside it.
  struct BlockReport {
    bool pass = true;
    std::string counterexample;
    std::vector<std::vector<EltIndex>> blocks;
    std::vector<JElt> units;
  };
  BlockReport blocks() const;

  // phi(c_x^dagger) = sum_{z,d in D, a(d)=a(z)} h_{x,d,z} nhat_z t_z.
  const JAElt& phi_basis(EltIndex x) const { return phi_[x]; }
  // A-linear extension to h given in c^dagger coordinates.
  JAElt phi(const std::map<EltIndex, LaurentPoly>& cdag_coords) const;
  JAElt ja_mul(const JAElt& a, const JAElt& b) const;

  struct Report {
    bool pass = true;
    std::string counterexample;
  };
  // phi(c_x^dag c_x'^dag) = phi(c_x^dag) phi(c_x'^dag), all pairs, and the
  // unit of H maps to the unit of J (x) A.
  Report phi_multiplicative() const;
  // h c_w^dag = phi(h) * c_w^dag modulo the higher a-filtration layers.
  Report graded_action_check() const;
  // Injectivity of phi over the fraction field, by integer rank of the
  // matrix evaluated at sample points v = 2, 3 (sufficient condition; a
  // failure is reported, not fatal).
  Report phi_injective() const;

private:
  JRing() = default;
  const AFun* af_ = nullptr;
  JElt unit_;
  std::vector<Int> n_hat_;
  std::vector<JAElt> phi_;
};

}  // namespace coxhecke
