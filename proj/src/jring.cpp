#include "coxhecke/jring.hpp"

#include <algorithm>
#include <sstream>

namespace coxhecke {

namespace {
const LaurentPoly kZeroPoly;
}

JElt JElt::operator+(const JElt& o) const {
  JElt out(*this);
  for (const auto& [w, c] : o.coords_) out.add_to(w, c);
  return out;
}

JElt JElt::operator-(const JElt& o) const {
  JElt out(*this);
  for (const auto& [w, c] : o.coords_) out.add_to(w, Int(-c));
  return out;
}

const LaurentPoly& JAElt::coord(EltIndex w) const {
  auto it = coords_.find(w);
  return it == coords_.end() ? kZeroPoly : it->second;
}

JRing JRing::build(const AFun& af,
                   const std::vector<ConjectureResult>& report) {
  if (report.size() != 15 || !AFun::all_pass(report))
    fail(ErrorCode::ConjecturesUnverified,
         "J requires a passing P1-P15 report for the instance");
  if (!af.table().finite())
    fail(ErrorCode::InfiniteGroup, "J construction needs a finite table");
  JRing j;
  j.af_ = &af;
  const GroupTable& t = af.table();
  const int n = t.size();

  for (EltIndex d : af.duflo()) j.unit_.add_to(d, af.n_leading(d));

  // n-hat via the unique Duflo element in the left cell of z^-1
  j.n_hat_.assign(n, Int(0));
  const CellPartition& left = af.cells().left();
  for (EltIndex z = 0; z < n; ++z) {
    EltIndex found = kOutside;
    for (EltIndex d : af.duflo())
      if (left.equiv(d, t.inverse(z))) {
        if (found != kOutside)
          fail(ErrorCode::ConjecturesUnverified,
               "left cell with two Duflo elements");
        found = d;
      }
    if (found == kOutside)
      fail(ErrorCode::ConjecturesUnverified, "left cell without Duflo element");
    j.n_hat_[z] = af.n_leading(found);
  }

  j.phi_.resize(n);
  for (EltIndex x = 0; x < n; ++x) {
    JAElt img;
    for (EltIndex d : af.duflo())
      for (const AFun::HEntry& e : af.h_row(x, d)) {
        if (af.a(d) != af.a(e.z)) continue;
        const LaurentPoly& h = af.pool_poly(e.poly);
        img.add_to(e.z, j.n_hat_[e.z] == 1 ? h : -h);
      }
    j.phi_[x] = std::move(img);
  }
  return j;
}

JElt JRing::mul(const JElt& a, const JElt& b) const {
  JElt out;
  for (const auto& [x, ca] : a.coords())
    for (const auto& [y, cb] : b.coords()) {
      Int c = ca * cb;
      // t_x t_y = sum_z gamma_{x,y,z^-1} t_z, and gamma_{x,y,z^-1} is the
      // coefficient of v^{a(z)} in h_{x,y,z}.
      for (const AFun::HEntry& e : af_->h_row(x, y)) {
        const LaurentPoly& h = af_->pool_poly(e.poly);
        if (h.max_exp() != af_->a(e.z)) continue;
        out.add_to(e.z, c * h.coeff(af_->a(e.z)));
      }
    }
  return out;
}

JAElt JRing::ja_mul(const JAElt& a, const JAElt& b) const {
  JAElt out;
  for (const auto& [x, pa] : a.coords())
    for (const auto& [y, pb] : b.coords()) {
      LaurentPoly c = pa * pb;
      for (const AFun::HEntry& e : af_->h_row(x, y)) {
        const LaurentPoly& h = af_->pool_poly(e.poly);
        if (h.max_exp() != af_->a(e.z)) continue;
        Int g = h.coeff(af_->a(e.z));
        out.add_to(e.z, c.scaled(g));
      }
    }
  return out;
}

JRing::BlockReport JRing::blocks() const {
  const GroupTable& t = table();
  BlockReport rep;
  auto fail_with = [&](const std::string& msg) {
    if (rep.pass) rep.counterexample = msg;
    rep.pass = false;
  };
  const auto& cells = af_->cells().two_sided().cells();
  rep.blocks = cells;
  for (const auto& cell : cells) {
    JElt u;
    for (EltIndex d : af_->duflo())
      if (std::binary_search(cell.begin(), cell.end(), d))
        u.add_to(d, af_->n_leading(d));
    rep.units.push_back(u);
  }
  // cross-block products vanish; block units act as identity inside
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (EltIndex x : cells[i]) {
      JElt tx = JElt::basis_elt(x);
      if (mul(rep.units[i], tx) != tx || mul(tx, rep.units[i]) != tx) {
        fail_with("block unit fails on t_" + std::to_string(x));
        break;
      }
      for (std::size_t k = 0; k < cells.size(); ++k) {
        if (k == i) continue;
        for (EltIndex y : cells[k])
          if (!mul(tx, JElt::basis_elt(y)).is_zero()) {
            std::ostringstream os;
            os << "cross-block product t_" << x << " t_" << y << " nonzero";
            fail_with(os.str());
            break;
          }
        if (!rep.pass) break;
      }
      if (!rep.pass) break;
    }
    if (!rep.pass) break;
  }
  return rep;
}

JAElt JRing::phi(const std::map<EltIndex, LaurentPoly>& cdag_coords) const {
  JAElt out;
  for (const auto& [x, p] : cdag_coords)
    for (const auto& [z, q] : phi_[x].coords()) out.add_to(z, p * q);
  return out;
}

JRing::Report JRing::phi_multiplicative() const {
  const GroupTable& t = table();
  Report rep;
  auto fail_with = [&](const std::string& msg) {
    if (rep.pass) rep.counterexample = msg;
    rep.pass = false;
  };
  // unit compatibility: c_1^dag = T_1 maps to the unit of J (x) A
  {
    JAElt ju;
    for (const auto& [d, c] : unit_.coords())
      ju.add_to(d, LaurentPoly(c));
    if (phi_[0] != ju) fail_with("phi does not preserve the unit");
  }
  for (EltIndex x = 0; x < t.size() && rep.pass; ++x)
    for (EltIndex xp = 0; xp < t.size(); ++xp) {
      // c_x^dag c_x'^dag = sum_w h_{x,x',w} c_w^dag
      JAElt lhs;
      for (const AFun::HEntry& e : af_->h_row(x, xp)) {
        const LaurentPoly& h = af_->pool_poly(e.poly);
        for (const auto& [z, q] : phi_[e.z].coords()) lhs.add_to(z, h * q);
      }
      JAElt rhs = ja_mul(phi_[x], phi_[xp]);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "phi multiplicativity fails at x=" << x << " x'=" << xp;
        fail_with(os.str());
        break;
      }
    }
  return rep;
}

JRing::Report JRing::graded_action_check() const {
  const GroupTable& t = table();
  Report rep;
  auto fail_with = [&](const std::string& msg) {
    if (rep.pass) rep.counterexample = msg;
    rep.pass = false;
  };
  // c_x^dag c_w^dag = phi(c_x^dag) * c_w^dag modulo higher a-layers, where
  // t_z * c_w^dag = sum_u gamma_{z,w,u^-1} nhat_w nhat_u c_u^dag.
  for (EltIndex x = 0; x < t.size() && rep.pass; ++x)
    for (EltIndex w = 0; w < t.size(); ++w) {
      int aw = af_->a(w);
      std::map<EltIndex, LaurentPoly> lhs;  // coordinates in c_u^dag
      for (const AFun::HEntry& e : af_->h_row(x, w))
        if (af_->a(e.z) <= aw) lhs[e.z] = af_->pool_poly(e.poly);
      std::map<EltIndex, LaurentPoly> rhs;
      for (const auto& [z, p] : phi_[x].coords()) {
        for (const AFun::HEntry& e : af_->h_row(z, w)) {
          const LaurentPoly& h = af_->pool_poly(e.poly);
          if (h.max_exp() != af_->a(e.z)) continue;
          EltIndex u = e.z;  // gamma_{z,w,u^-1} heads h_{z,w,u}
          if (af_->a(u) > aw) continue;
          Int g = h.coeff(af_->a(e.z));
          Int sign = n_hat_[w] * n_hat_[u];
          LaurentPoly add = p.scaled(g * sign);
          auto [it, inserted] = rhs.try_emplace(u, add);
          if (!inserted) it->second += add;
        }
      }
      for (auto it = rhs.begin(); it != rhs.end();)
        it = it->second.is_zero() ? rhs.erase(it) : std::next(it);
      for (auto it = lhs.begin(); it != lhs.end();)
        it = it->second.is_zero() ? lhs.erase(it) : std::next(it);
      if (lhs != rhs) {
        std::ostringstream os;
        os << "graded action fails at x=" << x << " w=" << w;
        fail_with(os.str());
        break;
      }
    }
  return rep;
}

namespace {

// Integer matrix rank by fraction-free Gaussian elimination.
int bareiss_rank(std::vector<std::vector<Int>> m) {
  if (m.empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int rank = 0;
  Int prev = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int c = col + 1; c < cols; ++c)
        m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) / prev;
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

}  // namespace

JRing::Report JRing::phi_injective() const {
  const GroupTable& t = table();
  const int n = t.size();
  Report rep;
  for (Int point : {Int(2), Int(3)}) {
    // evaluate phi's matrix at v = point, cleared to integers
    int shift = 0;
    for (EltIndex x = 0; x < n; ++x)
      for (const auto& [z, p] : phi_[x].coords())
        if (!p.is_zero()) shift = std::max(shift, -p.min_exp());
    std::vector<std::vector<Int>> mat(n, std::vector<Int>(n, Int(0)));
    for (EltIndex x = 0; x < n; ++x)
      for (const auto& [z, p] : phi_[x].coords()) {
        Int acc = 0;
        for (const auto& [e, c] : p.terms()) {
          Int pw = 1;
          for (int k = 0; k < e + shift; ++k) pw *= point;
          acc += c * pw;
        }
        mat[x][z] = acc;
      }
    if (bareiss_rank(std::move(mat)) == n) return rep;  // injective
  }
  rep.pass = false;
  rep.counterexample = "phi matrix rank-deficient at sampled points";
  return rep;
}

}  // namespace coxhecke
