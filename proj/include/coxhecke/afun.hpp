#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "coxhecke/cells.hpp"
#include "coxhecke/kl.hpp"

namespace coxhecke {

struct ConjectureResult {
  std::string name;
  bool pass = true;
  std::string counterexample;
  // Work actually performed vs. full quantifier range (P15 sampling).
  long long checked = 0;
  long long total = 0;
  bool capped = false;
};

/*
  c-basis structure constants h_{x,y,z} with the derived data: the bound N,
  a(z), leading coefficients gamma, Delta(z), n_z, the set D, and the
  conjecture checker.

  Scope::Finite needs a complete finite table and computes every pair.
  Scope::DihedralBall handles the infinite dihedral group on a ball:
  products are computed for pairs with l(x)+l(y) <= radius, and a(z) is
  certified against the closed-form a-table of the infinite dihedral case
  (the one infinite family with such a certificate). Any other infinite
  instance is refused with UncertifiedBall.
*/
class AFun {
public:
  enum class Scope { Finite, DihedralBall };

  struct HEntry {
    EltIndex z;
    std::int32_t poly;  // pool id
  };
  using HRow = std::vector<HEntry>;

  static AFun build(const KLContext& kl, const CellData& cells);

  const KLContext& kl() const { return *kl_; }
  const GroupTable& table() const { return kl_->table(); }
  const CellData& cells() const { return *cells_; }
  Scope scope() const { return scope_; }

  // Pairs with all products inside the ball (always true for finite W).
  bool pair_in_scope(EltIndex x, EltIndex y) const;
  const HRow& h_row(EltIndex x, EltIndex y) const;
  const LaurentPoly& h(EltIndex x, EltIndex y, EltIndex z) const;
  const LaurentPoly& pool_poly(std::int32_t id) const { return pool_[id]; }

  // Literal per-pair route: T-basis product of c_x, c_y, then triangular
  // conversion back to the c-basis. Used as the public operation and as a
  // cross-check of the bulk table.
  HeckeElt h_struct(EltIndex x, EltIndex y) const;
  // T-basis structure constants T_x T_y = sum f_{x,y,z} T_z.
  HeckeElt f_struct(EltIndex x, EltIndex y) const;

  // Minimal N with deg f_{x,y,z} <= N over computed pairs.
  int bound() const { return bound_; }

  int a(EltIndex z) const { return a_[z]; }
  // Whether the maximum was attained by an in-scope pair (always true for
  // finite W; boundary elements of a ball may only be certified).
  bool a_attained(EltIndex z) const { return a_attained_[z]; }

  Int gamma(EltIndex x, EltIndex y, EltIndex z) const;

  int delta(EltIndex z) const { return delta_[z]; }
  const Int& n_leading(EltIndex z) const { return n_[z]; }
  const std::vector<EltIndex>& duflo() const { return duflo_; }
  bool in_duflo(EltIndex z) const { return in_duflo_[z]; }
  // Elements violating 0 < Delta(z) <= L(z) for z != 1 (empirical check).
  const std::vector<EltIndex>& delta_range_violations() const {
    return delta_range_violations_;
  }

  struct CheckOptions {
    long long p15_cap = 5000000;  // quadruples
    // When the eligible quadruples exceed the cap: deterministically
    // sample (stride over triples) if true, else throw ScopeTooLarge.
    bool p15_sample_when_capped = true;
  };
  std::vector<ConjectureResult> check_conjectures(
      const CheckOptions& opt) const;
  std::vector<ConjectureResult> check_conjectures() const {
    return check_conjectures(CheckOptions{});
  }
  static bool all_pass(const std::vector<ConjectureResult>& results);

  // Closed-form a-value of the infinite dihedral group.
  static int dihedral_infinite_a(const CoxeterSystem& sys, int length,
                                 Gen first_letter);

private:
  AFun() = default;
  void build_h_table();
  void build_a_gamma();
  void build_delta_duflo();

  const KLContext* kl_ = nullptr;
  const CellData* cells_ = nullptr;
  Scope scope_ = Scope::Finite;
  int radius_ = 0;

  std::vector<LaurentPoly> pool_;
  std::map<LaurentPoly, std::int32_t> pool_index_;
  std::int32_t intern(const LaurentPoly& p);

  std::vector<HRow> rows_;  // [x * n + y], in-scope pairs only
  std::vector<bool> in_scope_;
  int bound_ = 0;
  std::vector<int> a_;
  std::vector<bool> a_attained_;
  std::vector<int> delta_;
  std::vector<Int> n_;
  std::vector<EltIndex> duflo_;
  std::vector<bool> in_duflo_;
  std::vector<EltIndex> delta_range_violations_;
};

}  // namespace coxhecke
