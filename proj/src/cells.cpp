#include "coxhecke/cells.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coxhecke {

namespace {

// Iterative Tarjan SCC; component ids are then renumbered so that cells
// appear in index order of their minimal element.
std::pair<std::vector<int>, std::vector<std::vector<EltIndex>>> scc(
    const std::vector<std::vector<EltIndex>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> idx(n, -1), low(n, 0), comp(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  std::vector<std::vector<EltIndex>> comps;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (idx[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    idx[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < adj[f.v].size()) {
        int u = adj[f.v][f.child++];
        if (idx[u] == -1) {
          idx[u] = low[u] = counter++;
          stack.push_back(u);
          on_stack[u] = true;
          call.push_back({u, 0});
        } else if (on_stack[u]) {
          low[f.v] = std::min(low[f.v], idx[u]);
        }
      } else {
        if (low[f.v] == idx[f.v]) {
          std::vector<EltIndex> c;
          int u;
          do {
            u = stack.back();
            stack.pop_back();
            on_stack[u] = false;
            comp[u] = ncomp;
            c.push_back(u);
          } while (u != f.v);
          std::sort(c.begin(), c.end());
          comps.push_back(std::move(c));
          ++ncomp;
        }
        int v = f.v;
        call.pop_back();
        if (!call.empty())
          low[call.back().v] = std::min(low[call.back().v], low[v]);
      }
    }
  }
  // renumber by minimal member
  std::vector<int> order(ncomp);
  for (int i = 0; i < ncomp; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return comps[a].front() < comps[b].front();
  });
  std::vector<int> rename(ncomp);
  std::vector<std::vector<EltIndex>> sorted(ncomp);
  for (int i = 0; i < ncomp; ++i) {
    rename[order[i]] = i;
    sorted[i] = comps[order[i]];
  }
  for (int v = 0; v < n; ++v) comp[v] = rename[comp[v]];
  return {comp, sorted};
}

}  // namespace

CellPartition CellPartition::build(const KLContext& kl, CellKind kind) {
  const GroupTable& t = kl.table();
  const int n = t.size();
  CellPartition part;
  part.kind_ = kind;
  part.arrows_.assign(n, {});
  std::vector<bool> frontier(n, false);  // arrow would leave the ball

  auto add_edges = [&](EltIndex w, Side side) {
    for (Gen s = 0; s < t.rank(); ++s) {
      HeckeElt prod;
      try {
        prod = kl.cs_times_cw(s, w, side);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::BallExceeded) {
          frontier[w] = true;
          continue;
        }
        throw;
      }
      for (const auto& [z, c] : prod.coords())
        if (z != w) part.arrows_[w].push_back(z);
    }
  };
  for (EltIndex w = 0; w < n; ++w) {
    if (kind == CellKind::Left || kind == CellKind::TwoSided)
      add_edges(w, Side::Left);
    if (kind == CellKind::Right || kind == CellKind::TwoSided)
      add_edges(w, Side::Right);
    auto& a = part.arrows_[w];
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }

  auto [comp, comps] = scc(part.arrows_);
  part.cell_of_ = std::move(comp);
  part.cells_ = std::move(comps);

  // closed iff no member's arrows were cut by the ball boundary
  part.cell_closed_.assign(part.cells_.size(), true);
  for (EltIndex w = 0; w < n; ++w)
    if (frontier[w]) part.cell_closed_[part.cell_of_[w]] = false;

  // reachability closure by DFS per source
  part.reach_.assign(n, std::vector<bool>(n, false));
  for (EltIndex src = 0; src < n; ++src) {
    std::vector<EltIndex> stack{src};
    part.reach_[src][src] = true;
    while (!stack.empty()) {
      EltIndex v = stack.back();
      stack.pop_back();
      for (EltIndex u : part.arrows_[v])
        if (!part.reach_[src][u]) {
          part.reach_[src][u] = true;
          stack.push_back(u);
        }
    }
  }
  return part;
}

CellData::CellData(const KLContext& kl)
    : kl_(&kl),
      left_(CellPartition::build(kl, CellKind::Left)),
      right_(CellPartition::build(kl, CellKind::Right)),
      two_sided_(CellPartition::build(kl, CellKind::TwoSided)) {}

CellReport CellData::descent_invariant_check() const {
  const GroupTable& t = kl_->table();
  CellReport rep;
  auto fail_with = [&](const std::string& msg) {
    if (rep.pass) rep.counterexample = msg;
    rep.pass = false;
  };
  for (const auto& cell : left_.cells()) {
    for (EltIndex w : cell)
      if (t.elt(w).right_desc != t.elt(cell.front()).right_desc) {
        std::ostringstream os;
        os << "R not constant on left cell of " << cell.front();
        fail_with(os.str());
      }
  }
  for (const auto& cell : right_.cells()) {
    for (EltIndex w : cell)
      if (t.elt(w).left_desc != t.elt(cell.front()).left_desc) {
        std::ostringstream os;
        os << "L not constant on right cell of " << cell.front();
        fail_with(os.str());
      }
  }
  // monotonicity: w <=_L w' implies R(w') subset of R(w)
  for (EltIndex w = 0; w < t.size(); ++w)
    for (EltIndex y = 0; y < t.size(); ++y) {
      if (left_.leq(y, w)) {
        std::uint32_t rw = t.elt(w).right_desc, ry = t.elt(y).right_desc;
        if ((rw & ry) != rw) {
          std::ostringstream os;
          os << "R monotonicity fails: y=" << y << " <=L w=" << w;
          fail_with(os.str());
        }
      }
      if (right_.leq(y, w)) {
        std::uint32_t lw = t.elt(w).left_desc, ly = t.elt(y).left_desc;
        if ((lw & ly) != lw) {
          std::ostringstream os;
          os << "L monotonicity fails: y=" << y << " <=R w=" << w;
          fail_with(os.str());
        }
      }
    }
  return rep;
}

std::vector<std::vector<std::vector<LaurentPoly>>> CellData::cell_module(
    const std::vector<EltIndex>& cell) const {
  const GroupTable& t = kl_->table();
  const int k = static_cast<int>(cell.size());
  std::vector<std::vector<std::vector<LaurentPoly>>> mats(
      t.rank(),
      std::vector<std::vector<LaurentPoly>>(k, std::vector<LaurentPoly>(k)));
  for (Gen s = 0; s < t.rank(); ++s) {
    for (int j = 0; j < k; ++j) {
      HeckeElt prod = kl_->cs_times_cw(s, cell[j], Side::Left);
      for (int i = 0; i < k; ++i) mats[s][i][j] = prod.coord(cell[i]);
    }
  }
  return mats;
}

CellReport CellData::w0_cell_duality() const {
  const GroupTable& t = kl_->table();
  if (!t.finite())
    fail(ErrorCode::InfiniteGroup, "w0 cell duality needs finite W");
  CellReport rep;
  auto fail_with = [&](const std::string& msg) {
    if (rep.pass) rep.counterexample = msg;
    rep.pass = false;
  };
  EltIndex w0 = t.longest_element().w0;
  std::vector<EltIndex> rmul(t.size()), lmul(t.size());
  for (EltIndex x = 0; x < t.size(); ++x) {
    rmul[x] = t.product(x, w0);
    lmul[x] = t.product(w0, x);
  }
  auto check = [&](const CellPartition& part, const char* name) {
    for (EltIndex w = 0; w < t.size(); ++w)
      for (EltIndex y = 0; y < t.size(); ++y) {
        bool base = part.leq(y, w);
        if (base != part.leq(rmul[w], rmul[y]) ||
            base != part.leq(lmul[w], lmul[y])) {
          std::ostringstream os;
          os << name << " w0 order reversal fails at y=" << y << " w=" << w;
          fail_with(os.str());
          return;
        }
      }
    // multiplication by w0 permutes cells
    for (const auto& cell : part.cells()) {
      int cr = part.cell_of(rmul[cell.front()]);
      int cl = part.cell_of(lmul[cell.front()]);
      for (EltIndex x : cell)
        if (part.cell_of(rmul[x]) != cr || part.cell_of(lmul[x]) != cl) {
          std::ostringstream os;
          os << name << " w0 does not permute cells (cell of "
             << cell.front() << ")";
          fail_with(os.str());
          return;
        }
    }
  };
  check(left_, "left");
  check(right_, "right");
  check(two_sided_, "two-sided");
  return rep;
}

}  // namespace coxhecke
