#include "coxhecke/afun.hpp"

#include <algorithm>
#include <sstream>

namespace coxhecke {

namespace {
const LaurentPoly kZero;

std::string elt_name(const GroupTable& t, EltIndex x) {
  const Word& w = t.word(x);
  if (w.empty()) return "e";
  std::string s;
  for (Gen g : w) {
    if (!s.empty()) s += ".";
    s += t.system().names[g];
  }
  return s;
}

// c-basis coordinates of an element given in T-basis coordinates, by
// back-substitution from the top: the highest remaining term T_z has
// coefficient h_z (since p_{z,z} = 1), subtract h_z c_z and repeat.
std::vector<std::pair<EltIndex, LaurentPoly>> to_c_basis(const KLContext& kl,
                                                         const HeckeElt& g) {
  std::map<EltIndex, LaurentPoly> rem(g.coords().begin(), g.coords().end());
  std::vector<std::pair<EltIndex, LaurentPoly>> out;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    EltIndex z = top->first;
    LaurentPoly hz = std::move(top->second);
    rem.erase(top);
    if (hz.is_zero()) continue;
    for (const auto& [u, p] : kl.kl_row(z)) {
      if (u == z) continue;
      auto [it, inserted] = rem.try_emplace(u, LaurentPoly());
      it->second -= hz * p;
      if (it->second.is_zero()) rem.erase(it);
    }
    out.emplace_back(z, std::move(hz));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

int AFun::dihedral_infinite_a(const CoxeterSystem& sys, int length,
                              Gen first_letter) {
  if (sys.rank() != 2 || sys.bond(0, 1) != kInfinity)
    fail(ErrorCode::UncertifiedBall,
         "no closed-form a-certificate for this infinite instance");
  if (length == 0) return 0;
  if (length == 1) return sys.weight(first_letter);
  return std::max(sys.weight(0), sys.weight(1));
}

std::int32_t AFun::intern(const LaurentPoly& p) {
  auto it = pool_index_.find(p);
  if (it != pool_index_.end()) return it->second;
  std::int32_t id = static_cast<std::int32_t>(pool_.size());
  pool_.push_back(p);
  pool_index_.emplace(p, id);
  return id;
}

AFun AFun::build(const KLContext& kl, const CellData& cells) {
  AFun af;
  af.kl_ = &kl;
  af.cells_ = &cells;
  const GroupTable& t = kl.table();
  if (t.finite()) {
    af.scope_ = Scope::Finite;
  } else {
    // only the infinite dihedral ball carries an a-certificate
    if (t.rank() != 2 || t.system().bond(0, 1) != kInfinity)
      fail(ErrorCode::UncertifiedBall,
           "a-function on a ball requires the infinite dihedral certificate");
    af.scope_ = Scope::DihedralBall;
  }
  af.radius_ = t.radius();
  af.build_h_table();
  af.build_a_gamma();
  af.build_delta_duflo();
  return af;
}

bool AFun::pair_in_scope(EltIndex x, EltIndex y) const {
  return in_scope_[static_cast<std::size_t>(x) * table().size() + y];
}

void AFun::build_h_table() {
  const GroupTable& t = table();
  const int n = t.size();
  rows_.assign(static_cast<std::size_t>(n) * n, {});
  in_scope_.assign(static_cast<std::size_t>(n) * n, false);
  bound_ = 0;

  // For fixed y, the T-basis products c_x c_y for all x are built by the
  // generator recursion on x (first left descent s, x = s x'):
  //   c_x c_y = c_s (c_{x'} c_y) - sum_{z; sz<z<x'} mu^s_{z,x'} (c_z c_y),
  // each product then converted to the c-basis by back-substitution.
  for (EltIndex y = 0; y < n; ++y) {
    std::vector<HeckeElt> prod(n);
    for (EltIndex x = 0; x < n; ++x) {
      bool scope = scope_ == Scope::Finite ||
                   t.length(x) + t.length(y) <= radius_;
      if (!scope) continue;
      std::size_t slot = static_cast<std::size_t>(x) * n + y;
      in_scope_[slot] = true;
      if (x == 0) {
        prod[x] = kl_->c_element(y);
      } else {
        Gen s = t.first_left_descent(x);
        EltIndex xp = t.left_mult(s, x);
        const HeckeElt& base = prod[xp];
        HeckeElt acc = kl_->algebra().mul_gen(s, base, Side::Left) +
                       base.scaled(LaurentPoly::monomial(-t.system().weight(s)));
        for (const auto& [z, pw] : kl_->kl_row(xp)) {
          if (z == xp || !t.is_left_descent(s, z)) continue;
          const LaurentPoly& m = kl_->mu(s, z, xp);
          if (!m.is_zero()) acc = acc - prod[z].scaled(m);
        }
        prod[x] = std::move(acc);
      }
      HRow row;
      for (auto& [z, p] : to_c_basis(*kl_, prod[x]))
        row.push_back({z, intern(p)});
      rows_[slot] = std::move(row);
    }
  }

  // Bound N from the T-basis structure constants, by the same recursion.
  for (EltIndex y = 0; y < n; ++y) {
    std::vector<HeckeElt> prod(n);
    for (EltIndex x = 0; x < n; ++x) {
      if (!pair_in_scope(x, y)) continue;
      if (x == 0) {
        prod[x] = HeckeElt::basis_elt(y);
      } else {
        Gen s = t.first_left_descent(x);
        prod[x] = kl_->algebra().mul_gen(s, prod[t.left_mult(s, x)], Side::Left);
      }
      for (const auto& [z, f] : prod[x].coords())
        if (!f.is_zero()) bound_ = std::max(bound_, f.max_exp());
    }
  }
}

const AFun::HRow& AFun::h_row(EltIndex x, EltIndex y) const {
  if (!pair_in_scope(x, y))
    fail(ErrorCode::BallExceeded, "h row outside computed scope");
  return rows_[static_cast<std::size_t>(x) * table().size() + y];
}

const LaurentPoly& AFun::h(EltIndex x, EltIndex y, EltIndex z) const {
  const HRow& row = h_row(x, y);
  for (const HEntry& e : row)
    if (e.z == z) return pool_[e.poly];
  return kZero;
}

HeckeElt AFun::h_struct(EltIndex x, EltIndex y) const {
  const HeckeAlgebra& alg = kl_->algebra();
  HeckeElt g = alg.mul(kl_->c_element(x), kl_->c_element(y));
  HeckeElt out(Basis::C);
  for (auto& [z, p] : to_c_basis(*kl_, g)) out.set(z, std::move(p));
  return out;
}

HeckeElt AFun::f_struct(EltIndex x, EltIndex y) const {
  const HeckeAlgebra& alg = kl_->algebra();
  return alg.mul(HeckeElt::basis_elt(x), HeckeElt::basis_elt(y));
}

void AFun::build_a_gamma() {
  const GroupTable& t = table();
  const int n = t.size();
  a_.assign(n, 0);
  a_attained_.assign(n, false);

  std::vector<int> observed(n, 0);
  for (EltIndex x = 0; x < n; ++x)
    for (EltIndex y = 0; y < n; ++y) {
      if (!pair_in_scope(x, y)) continue;
      for (const HEntry& e : h_row(x, y)) {
        const LaurentPoly& p = pool_[e.poly];
        observed[e.z] = std::max(observed[e.z], p.max_exp());
      }
    }

  if (scope_ == Scope::Finite) {
    for (EltIndex z = 0; z < n; ++z) {
      a_[z] = observed[z];
      a_attained_[z] = true;
      if (a_[z] < 0 || a_[z] > bound_)
        fail(ErrorCode::DomainError, "a(z) outside [0,N]");
    }
  } else {
    for (EltIndex z = 0; z < n; ++z) {
      const Word& w = t.word(z);
      a_[z] = dihedral_infinite_a(t.system(), t.length(z),
                                  w.empty() ? Gen(0) : w.front());
      if (observed[z] > a_[z])
        fail(ErrorCode::UncertifiedBall,
             "observed degree exceeds certified a-value");
      a_attained_[z] = observed[z] == a_[z];
    }
  }
}

Int AFun::gamma(EltIndex x, EltIndex y, EltIndex z) const {
  EltIndex zi = table().inverse(z);
  const LaurentPoly& p = h(x, y, zi);
  return p.coeff(a_[zi]);
}

void AFun::build_delta_duflo() {
  const GroupTable& t = table();
  const int n = t.size();
  delta_.assign(n, 0);
  n_.assign(n, Int(0));
  in_duflo_.assign(n, false);
  for (EltIndex z = 0; z < n; ++z) {
    const LaurentPoly& p1z = kl_->p(0, z);
    if (p1z.is_zero()) fail(ErrorCode::DomainError, "p_{1,z} vanished");
    delta_[z] = -p1z.max_exp();
    n_[z] = p1z.coeff(p1z.max_exp());
    if (z != 0 && (delta_[z] <= 0 || delta_[z] > t.weight(z)))
      delta_range_violations_.push_back(z);
  }
  for (EltIndex z = 0; z < n; ++z)
    if (a_[z] == delta_[z]) {
      duflo_.push_back(z);
      in_duflo_[z] = true;
    }
  for (EltIndex d : duflo_)
    if (!in_duflo_[t.inverse(d)])
      fail(ErrorCode::DomainError, "Duflo set not closed under inverse");
}

bool AFun::all_pass(const std::vector<ConjectureResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<ConjectureResult> AFun::check_conjectures(
    const CheckOptions& opt) const {
  const GroupTable& t = table();
  const int n = t.size();
  std::vector<ConjectureResult> out;

  auto begin = [&](const char* name) {
    out.push_back(ConjectureResult{name});
    return &out.back();
  };
  auto fail_with = [&](ConjectureResult* r, const std::string& msg) {
    if (r->pass) r->counterexample = msg;
    r->pass = false;
  };
  auto name3 = [&](EltIndex x, EltIndex y, EltIndex z) {
    std::ostringstream os;
    os << "(" << elt_name(t, x) << ", " << elt_name(t, y) << ", "
       << elt_name(t, z) << ")";
    return os.str();
  };

  // Nonzero gamma triples over in-scope pairs.
  struct GTriple {
    EltIndex x, y, z;
    Int value;
  };
  std::vector<GTriple> gammas;
  std::map<std::pair<EltIndex, EltIndex>, std::map<EltIndex, Int>> gamma_by_xy;
  for (EltIndex x = 0; x < n; ++x)
    for (EltIndex y = 0; y < n; ++y) {
      if (!pair_in_scope(x, y)) continue;
      for (const HEntry& e : h_row(x, y)) {
        const LaurentPoly& p = pool_[e.poly];
        if (p.max_exp() == a_[e.z]) {
          EltIndex z = t.inverse(e.z);
          Int v = p.coeff(a_[e.z]);
          gammas.push_back({x, y, z, v});
          gamma_by_xy[{x, y}][z] = v;
        }
      }
    }
  auto gamma_at = [&](EltIndex x, EltIndex y, EltIndex z) -> Int {
    auto it = gamma_by_xy.find({x, y});
    if (it == gamma_by_xy.end()) return 0;
    auto jt = it->second.find(z);
    return jt == it->second.end() ? Int(0) : jt->second;
  };

  // P1: a(z) <= Delta(z)
  {
    auto* r = begin("P1");
    for (EltIndex z = 0; z < n; ++z) {
      ++r->checked;
      if (a_[z] > delta_[z])
        fail_with(r, "a > Delta at z=" + elt_name(t, z));
    }
    r->total = r->checked;
  }
  // P2: d in D, gamma_{x,y,d} != 0 implies x = y^-1
  {
    auto* r = begin("P2");
    for (const auto& g : gammas) {
      if (!in_duflo_[g.z]) continue;
      ++r->checked;
      if (g.x != t.inverse(g.y))
        fail_with(r, "gamma nonzero with x != y^-1 at " +
                         name3(g.x, g.y, g.z));
    }
    r->total = r->checked;
  }
  // P3: for each y a unique d in D with gamma_{y^-1,y,d} != 0
  {
    auto* r = begin("P3");
    for (EltIndex y = 0; y < n; ++y) {
      EltIndex yi = t.inverse(y);
      if (!pair_in_scope(yi, y)) continue;
      ++r->checked;
      int count = 0;
      for (const auto& [z, v] : gamma_by_xy[{yi, y}])
        if (in_duflo_[z]) ++count;
      if (count != 1) {
        std::ostringstream os;
        os << "y=" << elt_name(t, y) << " has " << count
           << " Duflo gammas";
        fail_with(r, os.str());
      }
    }
    r->total = r->checked;
  }
  // P4: z' <=_LR z implies a(z') >= a(z)
  {
    auto* r = begin("P4");
    const auto& lr = cells_->two_sided();
    for (EltIndex z = 0; z < n; ++z)
      for (EltIndex zp = 0; zp < n; ++zp) {
        if (!lr.leq(zp, z)) continue;
        ++r->checked;
        if (a_[zp] < a_[z])
          fail_with(r, "a not monotone at z'=" + elt_name(t, zp) +
                           " <=LR z=" + elt_name(t, z));
      }
    r->total = r->checked;
  }
  // P5: gamma_{y^-1,y,d} = n_d = +-1
  {
    auto* r = begin("P5");
    for (const auto& g : gammas) {
      if (!in_duflo_[g.z] || g.x != t.inverse(g.y)) continue;
      ++r->checked;
      if (g.value != n_[g.z] || (g.value != 1 && g.value != -1))
        fail_with(r, "gamma != n_d at " + name3(g.x, g.y, g.z));
    }
    r->total = r->checked;
  }
  // P6: d in D implies d^2 = 1
  {
    auto* r = begin("P6");
    for (EltIndex d : duflo_) {
      ++r->checked;
      if (t.inverse(d) != d)
        fail_with(r, "Duflo element not involution: " + elt_name(t, d));
    }
    r->total = r->checked;
  }
  // P7: gamma_{x,y,z} = gamma_{y,z,x}
  {
    auto* r = begin("P7");
    for (const auto& g : gammas) {
      if (!pair_in_scope(g.y, g.z)) continue;
      ++r->checked;
      if (gamma_at(g.y, g.z, g.x) != g.value)
        fail_with(r, "gamma cycle fails at " + name3(g.x, g.y, g.z));
    }
    r->total = r->checked;
  }
  // P8: gamma_{x,y,z} != 0 implies x ~L y^-1, y ~L z^-1, z ~L x^-1
  {
    auto* r = begin("P8");
    const auto& left = cells_->left();
    for (const auto& g : gammas) {
      ++r->checked;
      if (!left.equiv(g.x, t.inverse(g.y)) ||
          !left.equiv(g.y, t.inverse(g.z)) ||
          !left.equiv(g.z, t.inverse(g.x)))
        fail_with(r, "cell alignment fails at " + name3(g.x, g.y, g.z));
    }
    r->total = r->checked;
  }
  // P9-P11: preorder + equal a implies equivalence
  {
    const CellPartition* parts[3] = {&cells_->left(), &cells_->right(),
                                     &cells_->two_sided()};
    const char* names[3] = {"P9", "P10", "P11"};
    for (int k = 0; k < 3; ++k) {
      auto* r = begin(names[k]);
      for (EltIndex z = 0; z < n; ++z)
        for (EltIndex zp = 0; zp < n; ++zp) {
          if (!parts[k]->leq(zp, z) || a_[zp] != a_[z]) continue;
          ++r->checked;
          if (!parts[k]->equiv(zp, z))
            fail_with(r, "equal a without equivalence: z'=" +
                             elt_name(t, zp) + ", z=" + elt_name(t, z));
        }
      r->total = r->checked;
    }
  }
  // P12: a computed in W_I agrees with a computed in W
  {
    auto* r = begin("P12");
    std::uint32_t all = full_gen_set(t.rank());
    for (std::uint32_t I = 1; I < all; ++I) {
      GroupTable sub = t.parabolic_table(I);
      HeckeAlgebra subalg(sub);
      KLContext subkl(subalg);
      CellData subcells(subkl);
      AFun subaf = AFun::build(subkl, subcells);
      for (EltIndex xi = 0; xi < sub.size(); ++xi) {
        // identify by canonical word, mapping generator indices
        Word w = sub.word(xi);
        auto gens = gens_of_mask(I, t.rank());
        Word mapped;
        for (Gen g : w) mapped.push_back(gens[g]);
        EltIndex x = t.index_of(mapped);
        if (x == kOutside) continue;
        ++r->checked;
        if (subaf.a(xi) != a_[x])
          fail_with(r, "parabolic a mismatch at " + elt_name(t, x));
      }
    }
    r->total = r->checked;
  }
  // P13: each left cell holds exactly one Duflo element; gamma_{x^-1,x,d}!=0
  {
    auto* r = begin("P13");
    const auto& left = cells_->left();
    for (std::size_t c = 0; c < left.cells().size(); ++c) {
      const auto& cell = left.cells()[c];
      bool closed = left.cell_closed()[c];
      ++r->checked;
      int count = 0;
      EltIndex d = kOutside;
      for (EltIndex x : cell)
        if (in_duflo_[x]) {
          ++count;
          d = x;
        }
      if (closed && count != 1) {
        std::ostringstream os;
        os << "left cell of " << elt_name(t, cell.front()) << " holds "
           << count << " Duflo elements";
        fail_with(r, os.str());
        continue;
      }
      if (count > 1) {
        fail_with(r, "open cell holds multiple Duflo elements");
        continue;
      }
      if (d == kOutside) continue;
      for (EltIndex x : cell) {
        EltIndex xi = t.inverse(x);
        if (!pair_in_scope(xi, x)) continue;
        if (gamma_at(xi, x, d) == 0)
          fail_with(r, "gamma_{x^-1,x,d} = 0 for x=" + elt_name(t, x));
      }
    }
    r->total = r->checked;
  }
  // P14: z ~LR z^-1
  {
    auto* r = begin("P14");
    const auto& lr = cells_->two_sided();
    for (EltIndex z = 0; z < n; ++z) {
      int c = lr.cell_of(z);
      if (scope_ == Scope::DihedralBall && !lr.cell_closed()[c]) continue;
      ++r->checked;
      if (!lr.equiv(z, t.inverse(z)))
        fail_with(r, "z not LR-equivalent to inverse: " + elt_name(t, z));
    }
    r->total = r->checked;
  }
  // P15: bivariate commutation of the two regular actions
  {
    auto* r = begin("P15");
    // class sizes per a-value for the quadruple count
    std::map<int, long long> a_class;
    for (EltIndex z = 0; z < n; ++z) ++a_class[a_[z]];

    std::vector<std::tuple<EltIndex, EltIndex, EltIndex>> triples;
    long long total = 0;
    for (EltIndex x = 0; x < n; ++x)
      for (EltIndex xp = 0; xp < n; ++xp)
        for (EltIndex w = 0; w < n; ++w) {
          if (scope_ == Scope::DihedralBall &&
              (t.length(x) + t.length(w) + t.length(xp) > radius_))
            continue;
          triples.emplace_back(x, xp, w);
          total += a_class[a_[w]];
        }
    r->total = total;
    long long budget = opt.p15_cap;
    std::size_t stride = 1;
    if (total > budget) {
      if (!opt.p15_sample_when_capped)
        fail(ErrorCode::ScopeTooLarge, "P15 quadruple count exceeds cap");
      r->capped = true;
      stride = static_cast<std::size_t>((total + budget - 1) / budget);
    }
    for (std::size_t i = 0; i < triples.size(); i += stride) {
      auto [x, xp, w] = triples[i];
      // LHS_y = sum_{y'} h'_{w,x',y'} h_{x,y',y};
      // RHS_y = sum_{y'} h_{x,w,y'} h'_{y',x',y}.
      std::map<EltIndex, BiLaurentPoly> lhs, rhs;
      bool scoped_out = false;
      for (const HEntry& e : h_row(w, xp)) {
        if (!pair_in_scope(x, e.z)) {
          scoped_out = true;
          break;
        }
        BiLaurentPoly hp = BiLaurentPoly::from_vprime(pool_[e.poly]);
        for (const HEntry& f : h_row(x, e.z))
          lhs[f.z] += hp * BiLaurentPoly::from_v(pool_[f.poly]);
      }
      if (!scoped_out)
        for (const HEntry& e : h_row(x, w)) {
          if (!pair_in_scope(e.z, xp)) {
            scoped_out = true;
            break;
          }
          BiLaurentPoly hv = BiLaurentPoly::from_v(pool_[e.poly]);
          for (const HEntry& f : h_row(e.z, xp))
            rhs[f.z] += hv * BiLaurentPoly::from_vprime(pool_[f.poly]);
        }
      if (scoped_out) continue;
      for (EltIndex y = 0; y < n; ++y) {
        if (a_[y] != a_[w]) continue;
        ++r->checked;
        auto lit = lhs.find(y);
        auto rit = rhs.find(y);
        const BiLaurentPoly& L =
            lit == lhs.end() ? BiLaurentPoly() : lit->second;
        const BiLaurentPoly& R =
            rit == rhs.end() ? BiLaurentPoly() : rit->second;
        if (L != R) {
          std::ostringstream os;
          os << "P15 fails at x=" << elt_name(t, x) << " x'="
             << elt_name(t, xp) << " w=" << elt_name(t, w)
             << " y=" << elt_name(t, y);
          fail_with(r, os.str());
        }
      }
    }
  }
  return out;
}

}  // namespace coxhecke
