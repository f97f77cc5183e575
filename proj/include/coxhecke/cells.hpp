#pragma once

#include <string>
#include <vector>

#include "coxhecke/kl.hpp"

namespace coxhecke {

enum class CellKind { Left, Right, TwoSided };

/*
  The cell preorders and their partitions. arrows[w'] lists the targets of
  w' -> w edges, i.e. the w whose c_w appears in some c_s c_{w'} (left),
  c_{w'} c_s (right), or either (two-sided). Cells are the strongly
  connected components of the arrow graph; reach(y,w) decides y <=_* w.

  On a partial ball, a component counts as closed only if every arrow from
  its members stays strictly inside the ball; open (frontier) classes are
  reported separately rather than passed off as cells.
*/
class CellPartition {
public:
  static CellPartition build(const KLContext& kl, CellKind kind);

  CellKind kind() const { return kind_; }
  const std::vector<std::vector<EltIndex>>& arrows() const { return arrows_; }
  // Cell id per element, cells listed in discovery order (index order of
  // their minimal element).
  int cell_of(EltIndex x) const { return cell_of_[x]; }
  const std::vector<std::vector<EltIndex>>& cells() const { return cells_; }
  const std::vector<bool>& cell_closed() const { return cell_closed_; }

  // y <=_kind w (reachability w -> ... -> y in the arrow graph).
  bool leq(EltIndex y, EltIndex w) const { return reach_[w][y]; }
  bool equiv(EltIndex y, EltIndex w) const {
    return cell_of_[y] == cell_of_[w];
  }

private:
  CellKind kind_;
  std::vector<std::vector<EltIndex>> arrows_;
  std::vector<int> cell_of_;
  std::vector<std::vector<EltIndex>> cells_;
  std::vector<bool> cell_closed_;
  std::vector<std::vector<bool>> reach_;
};

struct CellReport {
  bool pass = true;
  std::string counterexample;
};

/*
  All three partitions of one table, plus the standard invariant checks.
*/
class CellData {
public:
  explicit CellData(const KLContext& kl);

  const KLContext& kl() const { return *kl_; }
  const CellPartition& left() const { return left_; }
  const CellPartition& right() const { return right_; }
  const CellPartition& two_sided() const { return two_sided_; }

  // R(w) constant on left cells, L(w) constant on right cells, and
  // monotonicity of descent sets along the preorders.
  CellReport descent_invariant_check() const;

  // Action matrices of each c_s on the basis of a left cell, coefficients
  // h_{s,w,z} restricted to the cell.
  std::vector<std::vector<std::vector<LaurentPoly>>> cell_module(
      const std::vector<EltIndex>& cell) const;

  // The w0 dualities for cells (finite W): order reversal under both
  // multiplications and the induced permutation of cells.
  CellReport w0_cell_duality() const;

private:
  const KLContext* kl_;
  CellPartition left_, right_, two_sided_;
};

}  // namespace coxhecke
