#include "coxhecke/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <sstream>

namespace coxhecke {

std::uint32_t full_gen_set(int rank) {
  return rank >= 32 ? ~0u : ((1u << rank) - 1u);
}

std::vector<Gen> gens_of_mask(std::uint32_t I, int rank) {
  std::vector<Gen> out;
  for (int s = 0; s < rank; ++s)
    if ((I >> s) & 1u) out.push_back(static_cast<Gen>(s));
  return out;
}

CoxeterSystem CoxeterSystem::validate(std::vector<std::string> names,
                                      std::vector<std::vector<int>> matrix,
                                      std::vector<int> weights) {
  const int n = static_cast<int>(names.size());
  if (n == 0) fail(ErrorCode::BadMatrix, "empty generator set");
  if (n > 30) fail(ErrorCode::BadMatrix, "rank too large");
  if (static_cast<int>(matrix.size()) != n)
    fail(ErrorCode::BadMatrix, "matrix size does not match generators");
  for (const auto& row : matrix)
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::BadMatrix, "matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 1)
      fail(ErrorCode::BadMatrix, "diagonal entry must be 1");
    for (int j = 0; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i])
        fail(ErrorCode::BadMatrix, "matrix must be symmetric");
      if (i != j && matrix[i][j] != kInfinity && matrix[i][j] < 2)
        fail(ErrorCode::BadMatrix, "off-diagonal entries must be >= 2 (0 = infinity)");
    }
  }
  if (static_cast<int>(weights.size()) != n)
    fail(ErrorCode::BadWeights, "weight count does not match generators");
  for (int w : weights)
    if (w <= 0) fail(ErrorCode::BadWeights, "weights must be positive");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int m = matrix[i][j];
      if (m != kInfinity && m % 2 == 1 && weights[i] != weights[j]) {
        std::ostringstream os;
        os << "odd bond m(" << names[i] << "," << names[j] << ")=" << m
           << " forces equal weights";
        fail(ErrorCode::BadWeights, os.str());
      }
    }
  CoxeterSystem sys;
  sys.names = std::move(names);
  sys.matrix = std::move(matrix);
  sys.weights = std::move(weights);
  return sys;
}

namespace {

// Replace m alternating letters s,t,s,... starting at position i by the
// t,s,t,... alternation. Returns nullopt when the pattern does not match.
std::optional<Word> braid_move(const CoxeterSystem& sys, const Word& w,
                               std::size_t i, int m) {
  if (i + m > w.size()) return std::nullopt;
  Gen s = w[i];
  Gen t = w[i + 1];
  if (s == t) return std::nullopt;
  for (int k = 2; k < m; ++k)
    if (w[i + k] != (k % 2 == 0 ? s : t)) return std::nullopt;
  Word out = w;
  for (int k = 0; k < m; ++k) out[i + k] = (k % 2 == 0 ? t : s);
  return out;
}

}  // namespace

std::set<Word> WordProblem::braid_class(const Word& w) const {
  for (Gen g : w)
    if (g >= sys_.rank()) fail(ErrorCode::BadInput, "generator out of range");
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      int m = sys_.bond(cur[i], cur[i + 1]);
      if (m == kInfinity) continue;
      if (auto moved = braid_move(sys_, cur, i, m)) {
        if (seen.insert(*moved).second) {
          if (seen.size() > cap_)
            fail(ErrorCode::ClassTooLarge, "braid closure exceeds cap");
          queue.push_back(std::move(*moved));
        }
      }
    }
  }
  return seen;
}

namespace {

std::optional<std::size_t> adjacent_equal_pair(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) return i;
  return std::nullopt;
}

}  // namespace

bool WordProblem::is_reduced(const Word& w) const {
  // Tits: a word is reduced iff no braid-move rewriting exposes an adjacent
  // equal pair.
  if (adjacent_equal_pair(w)) return false;
  for (const Word& u : braid_class(w))
    if (adjacent_equal_pair(u)) return false;
  return true;
}

Word WordProblem::canonical(const Word& w) const {
  for (Gen g : w)
    if (g >= sys_.rank()) fail(ErrorCode::BadInput, "generator out of range");
  auto memo = canon_memo_.find(w);
  if (memo != canon_memo_.end()) return memo->second;

  Word cur = w;
  // Delete-and-braid until reduced, then take the ShortLex-least word of
  // the braid class.
  while (true) {
    if (auto pos = adjacent_equal_pair(cur)) {
      cur.erase(cur.begin() + *pos, cur.begin() + *pos + 2);
      continue;
    }
    auto hit = canon_memo_.find(cur);
    if (hit != canon_memo_.end()) {
      canon_memo_.emplace(w, hit->second);
      return hit->second;
    }
    bool deleted = false;
    std::set<Word> cls = braid_class(cur);
    for (const Word& u : cls) {
      if (auto pos = adjacent_equal_pair(u)) {
        cur = u;
        cur.erase(cur.begin() + *pos, cur.begin() + *pos + 2);
        deleted = true;
        break;
      }
    }
    if (deleted) continue;
    Word best = *cls.begin();  // set of equal-length words: lex order
    for (const Word& u : cls) canon_memo_.emplace(u, best);
    canon_memo_.emplace(w, best);
    return best;
  }
}

GroupTable GroupTable::enumerate(const CoxeterSystem& sys, Radius radius,
                                 std::size_t cap, std::size_t braid_cap,
                                 int max_radius) {
  GroupTable table(sys, braid_cap);
  const int n = sys.rank();
  int max_len = radius.full ? -1 : radius.value;
  if (max_radius > 0 && (max_len < 0 || max_len > max_radius))
    max_len = max_radius;
  const bool depth_capped = radius.full && max_radius > 0;

  // BFS by length shells so indices come out sorted by (length, word).
  std::map<Word, int> found;  // canonical word -> length
  found.emplace(Word{}, 0);
  std::vector<Word> shell{Word{}};
  int len = 0;
  bool closed = false;
  while (!shell.empty()) {
    if (max_len >= 0 && len >= max_len) break;
    std::set<Word> next;
    for (const Word& u : shell) {
      for (Gen s = 0; s < n; ++s) {
        Word cand = u;
        cand.push_back(s);
        Word canon = table.wp_.canonical(cand);
        if (canon.size() == u.size() + 1 && !found.count(canon))
          next.insert(canon);
      }
    }
    if (found.size() + next.size() > cap)
      fail(ErrorCode::CapExceeded, "group enumeration exceeds cap");
    ++len;
    shell.assign(next.begin(), next.end());
    for (const Word& u : shell) found.emplace(u, len);
    if (shell.empty()) closed = true;
  }
  table.finite_ = closed;
  table.radius_ = len - (closed ? 1 : 0);
  if (radius.full && !closed) {
    fail(ErrorCode::CapExceeded,
         depth_capped ? "group did not close within probe radius"
                      : "full enumeration requested but group did not close");
  }

  // found is ordered by word, but we need (length, word) order.
  std::vector<std::pair<int, Word>> order;
  order.reserve(found.size());
  for (auto& [w, l] : found) order.emplace_back(l, w);
  std::sort(order.begin(), order.end());

  const int size = static_cast<int>(order.size());
  table.elements_.resize(size);
  for (int i = 0; i < size; ++i) {
    ElementData& e = table.elements_[i];
    e.word = order[i].second;
    e.length = order[i].first;
    e.weight = 0;
    for (Gen s : e.word) e.weight += sys.weight(s);
    table.index_.emplace(e.word, i);
  }

  table.left_.assign(size, std::vector<EltIndex>(n, kOutside));
  table.right_.assign(size, std::vector<EltIndex>(n, kOutside));
  for (int i = 0; i < size; ++i) {
    const Word& w = table.elements_[i].word;
    for (Gen s = 0; s < n; ++s) {
      Word left = w;
      left.insert(left.begin(), s);
      Word lc = table.wp_.canonical(left);
      auto it = table.index_.find(lc);
      table.left_[i][s] = it == table.index_.end() ? kOutside : it->second;
      if (lc.size() < w.size()) table.elements_[i].left_desc |= 1u << s;

      Word right = w;
      right.push_back(s);
      Word rc = table.wp_.canonical(right);
      it = table.index_.find(rc);
      table.right_[i][s] = it == table.index_.end() ? kOutside : it->second;
      if (rc.size() < w.size()) table.elements_[i].right_desc |= 1u << s;
    }
  }
  for (int i = 0; i < size; ++i) {
    Word rev(table.elements_[i].word.rbegin(), table.elements_[i].word.rend());
    auto it = table.index_.find(table.wp_.canonical(rev));
    table.elements_[i].inverse = it == table.index_.end() ? kOutside : it->second;
  }
  return table;
}

EltIndex GroupTable::inverse(EltIndex x) const {
  EltIndex inv = elements_[x].inverse;
  if (inv == kOutside) fail(ErrorCode::BallExceeded, "inverse outside ball");
  return inv;
}

EltIndex GroupTable::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? kOutside : it->second;
}

EltIndex GroupTable::element_of_word(const Word& w) const {
  return index_of(wp_.canonical(w));
}

EltIndex GroupTable::left_mult_checked(Gen s, EltIndex x) const {
  EltIndex r = left_[x][s];
  if (r == kOutside) fail(ErrorCode::BallExceeded, "product leaves ball");
  return r;
}

EltIndex GroupTable::right_mult_checked(EltIndex x, Gen s) const {
  EltIndex r = right_[x][s];
  if (r == kOutside) fail(ErrorCode::BallExceeded, "product leaves ball");
  return r;
}

EltIndex GroupTable::product(EltIndex x, EltIndex y) const {
  EltIndex cur = x;
  for (Gen s : elements_[y].word) cur = right_mult_checked(cur, s);
  return cur;
}

Gen GroupTable::first_left_descent(EltIndex x) const {
  std::uint32_t d = elements_[x].left_desc;
  for (Gen s = 0; s < rank(); ++s)
    if ((d >> s) & 1u) return s;
  fail(ErrorCode::DomainError, "identity has no descent");
}

Gen GroupTable::first_right_descent(EltIndex x) const {
  std::uint32_t d = elements_[x].right_desc;
  for (Gen s = 0; s < rank(); ++s)
    if ((d >> s) & 1u) return s;
  fail(ErrorCode::DomainError, "identity has no descent");
}

bool GroupTable::bruhat_leq(EltIndex y, EltIndex w) const {
  if (y == w || y == 0) return true;
  if (w == 0) return false;
  if (elements_[y].length >= elements_[w].length) return false;
  auto key = std::make_pair(y, w);
  auto memo = bruhat_memo_.find(key);
  if (memo != bruhat_memo_.end()) return memo->second;
  // Pivot on s with sw < w: then y <= w iff (sy < y ? sy <= sw : y <= sw).
  Gen s = first_left_descent(w);
  EltIndex sw = left_[w][s];
  EltIndex sy = left_[y][s];
  bool res = is_left_descent(s, y) ? bruhat_leq(sy, sw) : bruhat_leq(y, sw);
  bruhat_memo_.emplace(key, res);
  return res;
}

std::vector<EltIndex> GroupTable::bruhat_interval_below(EltIndex w) const {
  std::vector<EltIndex> out;
  for (EltIndex x = 0; x < size(); ++x)
    if (bruhat_leq(x, w)) out.push_back(x);
  return out;
}

std::vector<GroupTable::Reflection> GroupTable::reflections() const {
  if (!finite_) fail(ErrorCode::InfiniteGroup, "reflections need a finite table");
  std::map<EltIndex, Reflection> refl;
  for (EltIndex w = 0; w < size(); ++w) {
    for (Gen s = 0; s < rank(); ++s) {
      // w s w^-1 by folding the word of w around s.
      EltIndex t = right_mult_checked(0, s);
      const Word& u = elements_[w].word;
      for (auto it = u.rbegin(); it != u.rend(); ++it) {
        t = left_mult_checked(*it, t);
        t = right_mult_checked(t, *it);
      }
      refl.emplace(t, Reflection{t, w, s});
    }
  }
  std::vector<Reflection> out;
  for (auto& [t, r] : refl) out.push_back(r);
  return out;
}

std::vector<EltIndex> GroupTable::prefix_reflections(EltIndex w) const {
  const Word& u = elements_[w].word;
  std::vector<EltIndex> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    EltIndex t = 0;
    t = right_mult_checked(t, u[i]);
    for (std::size_t j = i; j-- > 0;) {
      t = left_mult_checked(u[j], t);
      t = right_mult_checked(t, u[j]);
    }
    out.push_back(t);
  }
  return out;
}

int GroupTable::eta(EltIndex w, EltIndex t) const {
  auto pref = prefix_reflections(w);
  return std::count(pref.begin(), pref.end(), t) % 2 == 0 ? 1 : -1;
}

EltIndex GroupTable::coset_min_left(EltIndex w, std::uint32_t I) const {
  EltIndex cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Gen s = 0; s < rank(); ++s) {
      if (!((I >> s) & 1u)) continue;
      if (is_left_descent(s, cur)) {
        cur = left_[cur][s];
        moved = true;
        break;
      }
    }
  }
  return cur;
}

EltIndex GroupTable::coset_min_right(EltIndex w, std::uint32_t I) const {
  EltIndex cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Gen s = 0; s < rank(); ++s) {
      if (!((I >> s) & 1u)) continue;
      if (is_right_descent(cur, s)) {
        cur = right_[cur][s];
        moved = true;
        break;
      }
    }
  }
  return cur;
}

bool GroupTable::parabolic_is_finite(std::uint32_t I, std::size_t probe_cap,
                                     int probe_radius) const {
  auto gens = gens_of_mask(I, rank());
  if (gens.empty()) return true;
  std::vector<std::string> names;
  std::vector<std::vector<int>> m(gens.size(), std::vector<int>(gens.size()));
  std::vector<int> wts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back(sys_.names[gens[i]]);
    wts.push_back(sys_.weights[gens[i]]);
    for (std::size_t j = 0; j < gens.size(); ++j)
      m[i][j] = sys_.matrix[gens[i]][gens[j]];
  }
  auto sub = CoxeterSystem::validate(names, m, wts);
  try {
    GroupTable t =
        GroupTable::enumerate(sub, Radius::Full(), probe_cap, 500000, probe_radius);
    (void)t;
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::CapExceeded) return false;
    throw;
  }
}

EltIndex GroupTable::coset_max_left(EltIndex w, std::uint32_t I) const {
  if (!parabolic_is_finite(I))
    fail(ErrorCode::InfiniteParabolic, "coset_max needs finite W_I");
  EltIndex cur = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (Gen s = 0; s < rank(); ++s) {
      if (!((I >> s) & 1u)) continue;
      if (!is_left_descent(s, cur)) {
        EltIndex up = left_[cur][s];
        if (up == kOutside)
          fail(ErrorCode::BallExceeded, "coset_max leaves ball");
        cur = up;
        moved = true;
        break;
      }
    }
  }
  return cur;
}

GroupTable::LongestElement GroupTable::longest_element() const {
  if (!finite_) fail(ErrorCode::InfiniteGroup, "longest element needs finite W");
  EltIndex w0 = size() - 1;
  if (size() >= 2 && elements_[size() - 2].length == elements_[w0].length)
    fail(ErrorCode::DomainError, "longest element is not unique");
  LongestElement out;
  out.w0 = w0;
  out.conj_perm.resize(rank());
  for (Gen s = 0; s < rank(); ++s) {
    EltIndex t = right_mult_checked(w0, s);
    t = product(t, w0);
    if (elements_[t].length != 1)
      fail(ErrorCode::DomainError, "w0 conjugation did not preserve S");
    out.conj_perm[s] = elements_[t].word[0];
  }
  return out;
}

std::vector<EltIndex> GroupTable::parabolic_members(std::uint32_t I) const {
  std::vector<EltIndex> out;
  for (EltIndex x = 0; x < size(); ++x) {
    bool in = true;
    for (Gen s : elements_[x].word)
      if (!((I >> s) & 1u)) {
        in = false;
        break;
      }
    if (in) out.push_back(x);
  }
  return out;
}

GroupTable GroupTable::parabolic_table(std::uint32_t I) const {
  auto gens = gens_of_mask(I, rank());
  std::vector<std::string> names;
  std::vector<std::vector<int>> m(gens.size(), std::vector<int>(gens.size()));
  std::vector<int> wts;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    names.push_back(sys_.names[gens[i]]);
    wts.push_back(sys_.weights[gens[i]]);
    for (std::size_t j = 0; j < gens.size(); ++j)
      m[i][j] = sys_.matrix[gens[i]][gens[j]];
  }
  if (gens.empty()) {
    // Trivial subgroup: validate() rejects rank 0, so use a one-generator
    // system restricted to the radius-0 ball and mark it complete.
    auto sub = CoxeterSystem::validate({"_"}, {{1}}, {1});
    GroupTable t = GroupTable::enumerate(sub, Radius::Ball(0));
    t.finite_ = true;
    return t;
  }
  auto sub = CoxeterSystem::validate(names, m, wts);
  Radius r = finite_ ? Radius::Full() : Radius::Ball(radius_);
  return GroupTable::enumerate(sub, r);
}

}  // namespace coxhecke
