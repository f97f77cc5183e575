#include "coxhecke/kl.hpp"

#include <algorithm>
#include <sstream>

namespace coxhecke {

namespace {
const LaurentPoly kZero;
}

LaurentPoly symmetrize_from_nonneg(const LaurentPoly& r) {
  LaurentPoly out(r.coeff(0));
  LaurentPoly pos = r.positive_part();
  return out + pos + pos.bar();
}

KLContext::KLContext(const HeckeAlgebra& alg) : alg_(&alg) {
  rows_.resize(table().size());
  rows_done_.assign(table().size(), false);
}

const std::map<EltIndex, LaurentPoly>& KLContext::kl_row(EltIndex w) const {
  if (rows_done_[w]) return rows_[w];
  const GroupTable& t = table();
  std::vector<EltIndex> interval = t.bruhat_interval_below(w);
  // interval is in index order = increasing (length, word); solve top-down.
  std::map<EltIndex, LaurentPoly> u;
  u.emplace(w, LaurentPoly::one());
  for (auto it = interval.rbegin(); it != interval.rend(); ++it) {
    EltIndex x = *it;
    if (x == w) continue;
    // a_x = sum_{y; x<y<=w} r_{x,y} u_y, which must be bar-antisymmetric.
    LaurentPoly a;
    for (const auto& [y, uy] : u) {
      const LaurentPoly& r = alg_->r_poly(x, y);
      if (!r.is_zero()) a += r * uy;
    }
    if ((a + a.bar()) != kZero)
      fail(ErrorCode::DomainError, "KL system lost bar-antisymmetry");
    // unique u_x in A_{<0} with bar(u_x) - u_x = a_x
    LaurentPoly ux = a.positive_part().bar();
    if (!ux.is_zero()) u.emplace(x, std::move(ux));
  }
  rows_[w] = std::move(u);
  rows_done_[w] = true;
  return rows_[w];
}

const LaurentPoly& KLContext::p(EltIndex y, EltIndex w) const {
  const auto& row = kl_row(w);
  auto it = row.find(y);
  return it == row.end() ? kZero : it->second;
}

HeckeElt KLContext::c_element(EltIndex w) const {
  HeckeElt h(Basis::T);
  for (const auto& [y, p] : kl_row(w)) h.set(y, p);
  return h;
}

const LaurentPoly& KLContext::mu(Gen s, EltIndex y, EltIndex w) const {
  const GroupTable& t = table();
  if (!(t.is_left_descent(s, y) && !t.is_left_descent(s, w) &&
        t.bruhat_leq(y, w) && y != w))
    fail(ErrorCode::DomainError, "mu needs sy < y < w < sw");
  auto key = std::make_tuple(s, y, w);
  auto memo = mu_memo_.find(key);
  if (memo != mu_memo_.end()) return memo->second;

  // R = v_s p_{y,w} - sum_{z; y<z<w; sz<z} p_{y,z} mu^s_{z,w}; then mu is
  // the bar-fixed element agreeing with R in non-negative degrees.
  LaurentPoly R = alg_->vs(s) * p(y, w);
  for (const auto& [z, pw] : kl_row(w)) {
    if (z == w || z == y) continue;
    if (!t.is_left_descent(s, z)) continue;
    if (!t.bruhat_leq(y, z)) continue;
    const LaurentPoly& pyz = p(y, z);
    if (pyz.is_zero()) continue;
    R -= pyz * mu(s, z, w);
  }
  LaurentPoly m = symmetrize_from_nonneg(R);
  return mu_memo_.emplace(key, std::move(m)).first->second;
}

HeckeElt KLContext::cs_times_cw(Gen s, EltIndex w, Side side) const {
  const GroupTable& t = table();
  HeckeElt out(Basis::C);
  if (side == Side::Left) {
    if (t.is_left_descent(s, w)) {
      out.set(w, alg_->vs_plus_inv(s));
      return out;
    }
    EltIndex sw = t.left_mult_checked(s, w);
    out.set(sw, LaurentPoly::one());
    for (const auto& [z, pw] : kl_row(w)) {
      if (z == w || !t.is_left_descent(s, z)) continue;
      const LaurentPoly& m = mu(s, z, w);
      if (!m.is_zero()) out.set(z, m);
    }
    return out;
  }
  // right multiplication via mu^s_{z^-1,w^-1}
  if (t.is_right_descent(w, s)) {
    out.set(w, alg_->vs_plus_inv(s));
    return out;
  }
  EltIndex ws = t.right_mult_checked(w, s);
  out.set(ws, LaurentPoly::one());
  EltIndex wi = t.inverse(w);
  for (const auto& [zi, pw] : kl_row(wi)) {
    if (zi == wi || !t.is_left_descent(s, zi)) continue;
    const LaurentPoly& m = mu(s, zi, wi);
    if (!m.is_zero()) out.set(t.inverse(zi), m);
  }
  return out;
}

const LaurentPoly& KLContext::q_prime(EltIndex y, EltIndex w) const {
  const GroupTable& t = table();
  if (y == w) return LaurentPoly::one();
  if (!t.bruhat_leq(y, w)) return kZero;
  auto key = std::make_pair(y, w);
  auto memo = qp_memo_.find(key);
  if (memo != qp_memo_.end()) return memo->second;
  // Q'P = 1: q'_{y,w} = -sum_{y<=z<w} q'_{y,z} p_{z,w}.
  LaurentPoly acc;
  for (const auto& [z, pzw] : kl_row(w)) {
    if (z == w) continue;
    if (z != y && !t.bruhat_leq(y, z)) continue;
    acc += q_prime(y, z) * pzw;
  }
  return qp_memo_.emplace(key, -acc).first->second;
}

LaurentPoly KLContext::q(EltIndex y, EltIndex w) const {
  const GroupTable& t = table();
  LaurentPoly qp = q_prime(y, w);
  return t.sgn(y) * t.sgn(w) == 1 ? qp : -qp;
}

LaurentPoly KLContext::d_functional(EltIndex z, const HeckeElt& h) const {
  if (h.basis() != Basis::T)
    fail(ErrorCode::DomainError, "d_functional needs T-basis coordinates");
  LaurentPoly acc;
  for (const auto& [y, c] : h.coords()) acc += q_prime(z, y) * c;
  return acc;
}

HeckeElt KLContext::d_element(EltIndex z) const {
  const GroupTable& t = table();
  if (!t.finite())
    fail(ErrorCode::InfiniteGroup, "d_element needs a finite table");
  HeckeElt out(Basis::T);
  for (EltIndex y = 0; y < t.size(); ++y) out.set(y, q_prime(z, y));
  return out;
}

KLContext::Report KLContext::w0_dualities() const {
  const GroupTable& t = table();
  if (!t.finite())
    fail(ErrorCode::InfiniteGroup, "w0 dualities need a finite table");
  Report rep;
  auto fail_with = [&](const std::string& msg) {
    rep.pass = false;
    if (rep.counterexample.empty()) rep.counterexample = msg;
  };
  EltIndex w0 = t.longest_element().w0;

  // q_{y,w} = p_{w w0, y w0} = p_{w0 w, w0 y}
  for (EltIndex w = 0; w < t.size() && rep.pass; ++w) {
    for (EltIndex y = 0; y < t.size(); ++y) {
      LaurentPoly lhs = q(y, w);
      const LaurentPoly& mid = p(t.product(w, w0), t.product(y, w0));
      const LaurentPoly& rhs = p(t.product(w0, w), t.product(w0, y));
      if (lhs != mid || lhs != rhs) {
        std::ostringstream os;
        os << "q/p duality fails at y=" << y << " w=" << w;
        fail_with(os.str());
        break;
      }
    }
  }

  // D_{z^-1} T_{w0}^-1 = sgn(z w0) c_{z w0}^dagger
  HeckeElt tw0_inv = alg_->inverse_T(w0);
  for (EltIndex z = 0; z < t.size() && rep.pass; ++z) {
    HeckeElt lhs = alg_->mul(d_element(t.inverse(z)), tw0_inv);
    EltIndex zw0 = t.product(z, w0);
    HeckeElt rhs = alg_->dagger(c_element(zw0));
    if (t.sgn(zw0) == -1) rhs = -rhs;
    if (lhs != rhs) {
      std::ostringstream os;
      os << "D/dagger duality fails at z=" << z;
      fail_with(os.str());
    }
  }

  // mu^s_{u w0, z w0} = -sgn(uz) mu^s_{z,u} for sz < z < u < su
  for (Gen s = 0; s < t.rank() && rep.pass; ++s) {
    for (EltIndex z = 0; z < t.size() && rep.pass; ++z) {
      if (!t.is_left_descent(s, z)) continue;
      for (EltIndex u = 0; u < t.size(); ++u) {
        if (t.is_left_descent(s, u) || u == z || !t.bruhat_leq(z, u)) continue;
        EltIndex uw0 = t.product(u, w0);
        EltIndex zw0 = t.product(z, w0);
        LaurentPoly lhs = mu(s, uw0, zw0);
        LaurentPoly rhs = mu(s, z, u);
        if (t.sgn(z) * t.sgn(u) == 1) rhs = -rhs;
        if (lhs != rhs) {
          std::ostringstream os;
          os << "mu duality fails at s=" << int(s) << " z=" << z << " u=" << u;
          fail_with(os.str());
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace coxhecke
