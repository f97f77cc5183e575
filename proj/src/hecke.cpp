#include "coxhecke/hecke.hpp"

namespace coxhecke {

const LaurentPoly& HeckeElt::coord(EltIndex w) const {
  static const LaurentPoly kZero;
  auto it = coords_.find(w);
  return it == coords_.end() ? kZero : it->second;
}

void HeckeElt::add_to(EltIndex w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = coords_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) coords_.erase(it);
  }
}

HeckeElt HeckeElt::operator+(const HeckeElt& o) const {
  if (basis_ != o.basis_)
    fail(ErrorCode::DomainError, "basis mismatch in Hecke addition");
  HeckeElt out(*this);
  for (const auto& [w, p] : o.coords_) out.add_to(w, p);
  return out;
}

HeckeElt HeckeElt::operator-(const HeckeElt& o) const {
  if (basis_ != o.basis_)
    fail(ErrorCode::DomainError, "basis mismatch in Hecke subtraction");
  HeckeElt out(*this);
  for (const auto& [w, p] : o.coords_) out.add_to(w, -p);
  return out;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& p) const {
  HeckeElt out(basis_);
  if (p.is_zero()) return out;
  for (const auto& [w, q] : coords_) out.set(w, q * p);
  return out;
}

HeckeAlgebra::HeckeAlgebra(const GroupTable& table) : table_(&table) {
  const int n = table.rank();
  for (Gen s = 0; s < n; ++s) {
    int L = table.system().weight(s);
    vs_.push_back(LaurentPoly::monomial(L));
    vs_minus_inv_.push_back(LaurentPoly::monomial(L) - LaurentPoly::monomial(-L));
    vs_plus_inv_.push_back(LaurentPoly::monomial(L) + LaurentPoly::monomial(-L));
  }
  r_rows_.resize(table.size());
  r_done_.assign(table.size(), false);
}

HeckeElt HeckeAlgebra::mul_gen(Gen s, const HeckeElt& h, Side side) const {
  if (h.basis() != Basis::T)
    fail(ErrorCode::DomainError, "mul_gen needs T-basis coordinates");
  const GroupTable& t = *table_;
  HeckeElt out(Basis::T);
  for (const auto& [w, p] : h.coords()) {
    bool desc = side == Side::Left ? t.is_left_descent(s, w)
                                   : t.is_right_descent(w, s);
    EltIndex sw = side == Side::Left ? t.left_mult_checked(s, w)
                                     : t.right_mult_checked(w, s);
    out.add_to(sw, p);
    if (desc) out.add_to(w, p * vs_minus_inv_[s]);
  }
  return out;
}

HeckeElt HeckeAlgebra::mul(const HeckeElt& a, const HeckeElt& b) const {
  if (a.basis() != Basis::T || b.basis() != Basis::T)
    fail(ErrorCode::DomainError, "mul needs T-basis coordinates");
  const GroupTable& t = *table_;
  // a * T_y for every y in the support of b, sharing prefix products:
  // T_x = T_{x'} T_s when x = x's with l(x) = l(x') + 1, and every prefix
  // of a canonical word is the canonical element of smaller index.
  HeckeElt out(Basis::T);
  std::map<EltIndex, HeckeElt> partial;  // x -> a * T_x
  partial.emplace(0, a);
  for (const auto& [y, p] : b.coords()) {
    // walk down the canonical word of y, extending cached products
    const Word& w = t.word(y);
    EltIndex cur = 0;
    std::size_t done = 0;
    // find longest cached prefix
    for (std::size_t i = w.size(); i > 0; --i) {
      Word prefix(w.begin(), w.begin() + i);
      EltIndex px = t.index_of(prefix);
      if (px != kOutside && partial.count(px)) {
        cur = px;
        done = i;
        break;
      }
    }
    HeckeElt acc = partial.at(cur);
    for (std::size_t i = done; i < w.size(); ++i) {
      acc = mul_gen(w[i], acc, Side::Right);
      Word prefix(w.begin(), w.begin() + i + 1);
      EltIndex px = t.index_of(prefix);
      if (px != kOutside) partial.emplace(px, acc);
    }
    for (const auto& [z, q] : acc.coords()) out.add_to(z, q * p);
  }
  return out;
}

HeckeElt HeckeAlgebra::inverse_T(EltIndex w) const {
  const GroupTable& t = *table_;
  // T_w^-1 = T_{s_q}^-1 ... T_{s_1}^-1 with T_s^-1 = T_s - (v_s - v_s^-1).
  HeckeElt out = HeckeElt::unit();
  const Word& word = t.word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Gen s = *it;
    HeckeElt ts = mul_gen(s, out, Side::Right);
    out = ts - out.scaled(vs_minus_inv_[s]);
  }
  return out;
}

const std::map<EltIndex, LaurentPoly>& HeckeAlgebra::r_row(EltIndex w) const {
  if (r_done_[w]) return r_rows_[w];
  const GroupTable& t = *table_;
  std::map<EltIndex, LaurentPoly> row;
  if (w == 0) {
    row.emplace(0, LaurentPoly::one());
  } else {
    // r_{y,w} = r_{sy,sw}               if sy < y
    //         = r_{sy,sw} + (v_s - v_s^-1) r_{y,sw}  if sy > y,
    // pivoting on the first left descent s of w.
    Gen s = t.first_left_descent(w);
    EltIndex sw = t.left_mult(s, w);
    const auto& prev = r_row(sw);
    for (const auto& [y, r] : prev) {
      EltIndex sy = t.left_mult_checked(s, y);
      // contribution r_{sy(prev y), w}: shift support by s
      auto [it, inserted] = row.try_emplace(sy, r);
      if (!inserted) it->second += r;
      if (!t.is_left_descent(s, y)) {
        // y has sy > y: second term lands on y itself
        auto [it2, ins2] = row.try_emplace(y, LaurentPoly());
        it2->second += r * vs_minus_inv_[s];
      }
    }
    for (auto it = row.begin(); it != row.end();)
      it = it->second.is_zero() ? row.erase(it) : std::next(it);
  }
  r_rows_[w] = std::move(row);
  r_done_[w] = true;
  return r_rows_[w];
}

const LaurentPoly& HeckeAlgebra::r_poly(EltIndex y, EltIndex w) const {
  static const LaurentPoly kZero;
  const auto& row = r_row(w);
  auto it = row.find(y);
  return it == row.end() ? kZero : it->second;
}

HeckeElt HeckeAlgebra::bar(const HeckeElt& h) const {
  if (h.basis() != Basis::T)
    fail(ErrorCode::DomainError, "bar needs T-basis coordinates");
  HeckeElt out(Basis::T);
  for (const auto& [w, p] : h.coords()) {
    LaurentPoly pb = p.bar();
    for (const auto& [y, r] : r_row(w)) out.add_to(y, pb * r.bar());
  }
  return out;
}

HeckeElt HeckeAlgebra::flip(const HeckeElt& h) const {
  HeckeElt out(h.basis());
  for (const auto& [w, p] : h.coords()) out.add_to(table_->inverse(w), p);
  return out;
}

HeckeElt HeckeAlgebra::dagger(const HeckeElt& h) const {
  if (h.basis() != Basis::T)
    fail(ErrorCode::DomainError, "dagger needs T-basis coordinates");
  HeckeElt out(Basis::T);
  for (const auto& [w, p] : h.coords()) {
    HeckeElt inv = inverse_T(table_->inverse(w));
    LaurentPoly c = table_->sgn(w) == 1 ? p : -p;
    for (const auto& [z, q] : inv.coords()) out.add_to(z, q * c);
  }
  return out;
}

LaurentPoly HeckeAlgebra::tau(const HeckeElt& h) const {
  if (h.basis() != Basis::T)
    fail(ErrorCode::DomainError, "tau needs T-basis coordinates");
  return h.coord(0);
}

}  // namespace coxhecke
