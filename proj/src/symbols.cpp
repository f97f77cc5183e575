#include "coxhecke/symbols.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace coxhecke {
namespace symbols {

namespace {

long long sum_of(const std::vector<int>& v) {
  return std::accumulate(v.begin(), v.end(), 0LL);
}

}  // namespace

RankedMultiset RankedMultiset::base(Params params, int N) {
  std::vector<int> entries;
  for (int i = 0; i < N; ++i) entries.push_back(params.a * i);
  for (int i = 0; i < N + params.r(); ++i)
    entries.push_back(params.a * i + params.b_prime());
  std::sort(entries.begin(), entries.end());
  return RankedMultiset(params, N, std::move(entries));
}

RankedMultiset::RankedMultiset(Params params, int N, std::vector<int> entries)
    : params_(params), N_(N), entries_(std::move(entries)) {
  if (params_.a <= 0 || params_.b < 0)
    fail(ErrorCode::NotInFamily, "need a > 0, b >= 0");
  const int r = params_.r();
  const int bp = params_.b_prime();
  if (static_cast<int>(entries_.size()) != 2 * N_ + r)
    fail(ErrorCode::NotInFamily, "multiset must have 2N + r entries");
  if (!std::is_sorted(entries_.begin(), entries_.end()))
    fail(ErrorCode::NotInFamily, "entries must be weakly increasing");
  for (int z : entries_)
    if (z < 0) fail(ErrorCode::NotInFamily, "entries must be nonnegative");

  if (bp == 0) {
    int distinct = 0;
    for (std::size_t i = 0; i < entries_.size();) {
      std::size_t j = i;
      while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
      if (j - i > 2)
        fail(ErrorCode::NotInFamily, "entry repeated more than twice");
      ++distinct;
      i = j;
    }
    if (distinct < N_ + r)
      fail(ErrorCode::NotInFamily, "too few distinct entries");
    for (int z : entries_)
      if (z % params_.a != 0)
        fail(ErrorCode::NotInFamily, "entry not divisible by a");
  } else {
    for (std::size_t i = 0; i + 1 < entries_.size(); ++i)
      if (entries_[i] == entries_[i + 1])
        fail(ErrorCode::NotInFamily, "entries must be strict when b' > 0");
    int zeros = 0, bps = 0;
    for (int z : entries_) {
      if (z % params_.a == 0)
        ++zeros;
      else if (z % params_.a == bp)
        ++bps;
      else
        fail(ErrorCode::NotInFamily, "entry residue not in {0, b'}");
    }
    if (zeros != N_ || bps != N_ + r)
      fail(ErrorCode::NotInFamily, "residue counts must be N and N + r");
  }

  long long base_sum = 0;
  for (int i = 0; i < N_; ++i) base_sum += params_.a * i;
  for (int i = 0; i < N_ + r; ++i) base_sum += params_.a * i + bp;
  long long diff = sum_of(entries_) - base_sum;
  if (diff < 0 || diff % params_.a != 0)
    fail(ErrorCode::NotInFamily, "entry sum incompatible with rank formula");
  rank_ = static_cast<int>(diff / params_.a);
}

std::vector<int> RankedMultiset::singles() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entries_.size();) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    if (j - i == 1) out.push_back(entries_[i]);
    i = j;
  }
  return out;
}

std::vector<int> RankedMultiset::doubles() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entries_.size();) {
    std::size_t j = i;
    while (j < entries_.size() && entries_[j] == entries_[i]) ++j;
    if (j - i == 2) out.push_back(entries_[i]);
    i = j;
  }
  return out;
}

RankedMultiset RankedMultiset::shift() const {
  std::vector<int> out;
  out.push_back(0);
  out.push_back(params_.b_prime());
  for (int z : entries_) out.push_back(z + params_.a);
  std::sort(out.begin(), out.end());
  return RankedMultiset(params_, N_ + 1, std::move(out));
}

Symbol::Symbol(Params params, std::vector<int> top, std::vector<int> bottom)
    : params_(params), top_(std::move(top)), bottom_(std::move(bottom)) {
  const int r = params_.r();
  const int bp = params_.b_prime();
  if (static_cast<int>(top_.size()) != static_cast<int>(bottom_.size()) + r)
    fail(ErrorCode::NotInFamily, "top row must have N + r entries");
  auto strict = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] >= v[i + 1]) return false;
    return true;
  };
  if (!strict(top_) || !strict(bottom_))
    fail(ErrorCode::NotInFamily, "rows must be strictly increasing");
  for (int z : top_)
    if (z < 0 || z % params_.a != bp)
      fail(ErrorCode::NotInFamily, "top entries must be b' mod a");
  for (int z : bottom_)
    if (z < 0 || z % params_.a != 0)
      fail(ErrorCode::NotInFamily, "bottom entries must be 0 mod a");
  flatten();  // validates the multiset conditions and the rank formula
}

RankedMultiset Symbol::flatten() const {
  std::vector<int> all = top_;
  all.insert(all.end(), bottom_.begin(), bottom_.end());
  std::sort(all.begin(), all.end());
  return RankedMultiset(params_, n_slots(), std::move(all));
}

Symbol Symbol::shift() const {
  std::vector<int> top{params_.b_prime()}, bottom{0};
  for (int z : top_) top.push_back(z + params_.a);
  for (int z : bottom_) bottom.push_back(z + params_.a);
  return Symbol(params_, std::move(top), std::move(bottom));
}

bool Symbol::equivalent(const Symbol& o) const {
  if (params_.a != o.params_.a || params_.b != o.params_.b) return false;
  Symbol x = *this, y = o;
  while (x.n_slots() < y.n_slots()) x = x.shift();
  while (y.n_slots() < x.n_slots()) y = y.shift();
  return x == y;
}

std::string Symbol::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < top_.size(); ++i)
    os << (i ? "," : "") << top_[i];
  os << " / ";
  for (std::size_t i = 0; i < bottom_.size(); ++i)
    os << (i ? "," : "") << bottom_[i];
  os << ")";
  return os.str();
}

Symbol from_bipartition(Params params, std::vector<int> alpha,
                        std::vector<int> beta, int N) {
  auto trim = [](std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  auto weakly_decreasing = [](const std::vector<int>& v) {
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i] < v[i + 1]) return false;
    return true;
  };
  trim(alpha);
  trim(beta);
  if (!weakly_decreasing(alpha) || !weakly_decreasing(beta))
    fail(ErrorCode::BadInput, "partitions must be weakly decreasing");
  const int r = params.r();
  if (static_cast<int>(alpha.size()) > N + r ||
      static_cast<int>(beta.size()) > N)
    fail(ErrorCode::NTooSmall, "N too small for the bipartition");
  auto part = [](const std::vector<int>& v, int k) {
    return k >= 1 && k <= static_cast<int>(v.size()) ? v[k - 1] : 0;
  };
  std::vector<int> top, bottom;
  for (int i = 1; i <= N + r; ++i)
    top.push_back(params.a * (part(alpha, N + r - i + 1) + i - 1) +
                  params.b_prime());
  for (int j = 1; j <= N; ++j)
    bottom.push_back(params.a * (part(beta, N - j + 1) + j - 1));
  return Symbol(params, std::move(top), std::move(bottom));
}

Symbol bar_complement(const Symbol& s, int t) {
  const Params& params = s.params();
  const int a = params.a;
  const int bp = params.b_prime();
  const int N = s.n_slots();
  const int r = params.r();
  if (t + 1 - N - r < 0) fail(ErrorCode::TTooSmall, "t leaves no bottom row");
  for (int z : s.top())
    if (a * t + bp - z < 0) fail(ErrorCode::TTooSmall, "t misses a top entry");
  for (int z : s.bottom())
    if (a * t - z < 0) fail(ErrorCode::TTooSmall, "t misses a bottom entry");

  std::set<int> zero_grid, bp_grid;
  for (int i = 0; i <= t; ++i) {
    zero_grid.insert(a * i);
    bp_grid.insert(a * i + bp);
  }
  for (int z : s.bottom()) {
    int v = a * t + bp - z;
    if (!bp_grid.erase(v)) fail(ErrorCode::TTooSmall, "reflection collision");
  }
  for (int z : s.top()) {
    int v = a * t + bp - z;
    if (!zero_grid.erase(v)) fail(ErrorCode::TTooSmall, "reflection collision");
  }
  std::vector<int> top(bp_grid.begin(), bp_grid.end());
  std::vector<int> bottom(zero_grid.begin(), zero_grid.end());
  return Symbol(params, std::move(top), std::move(bottom));
}

long long a_of_symbol(const Symbol& s) {
  const Params& params = s.params();
  const int N = s.n_slots();
  const int r = params.r();
  auto pair_sums = [](const std::vector<int>& lam, const std::vector<int>& mu) {
    long long acc = 0;
    for (int x : lam)
      for (int y : mu) acc += std::min(x, y);
    auto within = [](const std::vector<int>& v) {
      long long acc2 = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
          acc2 += std::min(v[i], v[j]);
      return acc2;
    };
    return acc + within(lam) + within(mu);
  };
  std::vector<int> base_top, base_bottom;
  for (int i = 1; i <= N + r; ++i)
    base_top.push_back(params.a * (i - 1) + params.b_prime());
  for (int j = 1; j <= N; ++j) base_bottom.push_back(params.a * (j - 1));
  return pair_sums(s.top(), s.bottom()) - pair_sums(base_top, base_bottom);
}

long long f_of_symbol(const Symbol& s) {
  if (s.params().b_prime() > 0) return 1;
  int singles = static_cast<int>(s.flatten().singles().size());
  int r = s.params().r();
  if ((singles - r) % 2 != 0 || singles < r)
    fail(ErrorCode::NotInFamily, "singles count incompatible with r");
  int d = (singles - r) / 2;
  return 1LL << d;
}

namespace {

void involutions_rec(const std::vector<int>& avail, int r,
                     std::vector<std::pair<int, int>>& pairs,
                     std::set<Involution>& out, int z_size) {
  if (static_cast<int>(avail.size()) == r) {
    Involution io;
    io.size = z_size;
    io.pairs = pairs;
    std::sort(io.pairs.begin(), io.pairs.end());
    out.insert(std::move(io));
    return;
  }
  for (std::size_t k = 0; k + 1 < avail.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t i = 0; i < avail.size(); ++i)
      if (i != k && i != k + 1) rest.push_back(avail[i]);
    pairs.emplace_back(avail[k], avail[k + 1]);
    involutions_rec(rest, r, pairs, out, z_size);
    pairs.pop_back();
  }
}

}  // namespace

std::vector<Involution> admissible_involutions(int z_size, int r) {
  if (r < 0 || r > z_size || (z_size - r) % 2 != 0)
    fail(ErrorCode::ParityError, "need 0 <= r <= |Z| with r = |Z| mod 2");
  std::vector<int> avail(z_size);
  std::iota(avail.begin(), avail.end(), 0);
  std::set<Involution> out;
  std::vector<std::pair<int, int>> pairs;
  involutions_rec(avail, r, pairs, out, z_size);
  return std::vector<Involution>(out.begin(), out.end());
}

std::vector<std::vector<int>> s_iota(const Involution& io) {
  std::vector<std::vector<int>> out{{}};
  for (const auto& [i, j] : io.pairs) {
    std::vector<std::vector<int>> next;
    for (const auto& y : out) {
      auto a = y;
      a.push_back(i);
      auto b = y;
      b.push_back(j);
      next.push_back(std::move(a));
      next.push_back(std::move(b));
    }
    out = std::move(next);
  }
  for (auto& y : out) std::sort(y.begin(), y.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool involution_graph_connected(int z_size, int r) {
  auto invs = admissible_involutions(z_size, r);
  const int p = (z_size - r) / 2;
  // vertices: subsets of size p
  std::vector<std::vector<int>> verts;
  std::vector<int> cur;
  std::function<void(int)> gen = [&](int from) {
    if (static_cast<int>(cur.size()) == p) {
      verts.push_back(cur);
      return;
    }
    for (int i = from; i < z_size; ++i) {
      cur.push_back(i);
      gen(i + 1);
      cur.pop_back();
    }
  };
  gen(0);
  if (verts.size() <= 1) return true;
  std::map<std::vector<int>, int> id;
  for (std::size_t i = 0; i < verts.size(); ++i) id[verts[i]] = i;
  std::vector<int> parent(verts.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (const auto& io : invs) {
    auto members = s_iota(io);
    for (std::size_t i = 1; i < members.size(); ++i) {
      int u = find(id.at(members[0])), v = find(id.at(members[i]));
      parent[u] = v;
    }
  }
  int root = find(0);
  for (std::size_t i = 1; i < verts.size(); ++i)
    if (find(i) != root) return false;
  return true;
}

std::vector<Symbol> constructible_family(const RankedMultiset& zt,
                                         const Involution& io) {
  const Params& params = zt.params();
  if (params.b_prime() > 0)
    fail(ErrorCode::WrongResidue,
         "constructible families of this shape need b' = 0");
  std::vector<int> Z = zt.singles();
  std::vector<int> D = zt.doubles();
  if (io.size != static_cast<int>(Z.size()))
    fail(ErrorCode::DomainError, "involution size does not match singles");
  std::vector<Symbol> out;
  for (const auto& picks : s_iota(io)) {
    std::vector<bool> in_y(Z.size(), false);
    for (int pos : picks) in_y[pos] = true;
    std::vector<int> top = D, bottom = D;
    for (std::size_t i = 0; i < Z.size(); ++i)
      (in_y[i] ? bottom : top).push_back(Z[i]);
    std::sort(top.begin(), top.end());
    std::sort(bottom.begin(), bottom.end());
    out.emplace_back(params, std::move(top), std::move(bottom));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RankedMultiset> enumerate_multisets(Params params, int n, int N) {
  const int r = params.r();
  const int bp = params.b_prime();
  const int size = 2 * N + r;
  long long base_sum = 0;
  for (int i = 0; i < N; ++i) base_sum += params.a * i;
  for (int i = 0; i < N + r; ++i) base_sum += params.a * i + bp;
  const long long target = base_sum + static_cast<long long>(params.a) * n;

  std::vector<RankedMultiset> out;
  std::vector<int> entries;
  // entries chosen in increasing order from the two residue grids
  std::function<void(int, long long)> rec = [&](int min_val, long long left) {
    if (static_cast<int>(entries.size()) == size) {
      if (left == 0) {
        try {
          out.emplace_back(params, N, entries);
        } catch (const Error&) {
        }
      }
      return;
    }
    int remaining = size - static_cast<int>(entries.size());
    for (int v = min_val; static_cast<long long>(v) * remaining <= left; ++v) {
      int res = v % params.a;
      if (res != 0 && res != bp) continue;
      entries.push_back(v);
      rec(v, left - v);
      entries.pop_back();
    }
  };
  rec(0, target);
  return out;
}

std::vector<Symbol> symbols_over(const RankedMultiset& zt) {
  const Params& params = zt.params();
  const int bp = params.b_prime();
  std::vector<Symbol> out;
  if (bp > 0) {
    std::vector<int> top, bottom;
    for (int z : zt.entries())
      (z % params.a == 0 ? bottom : top).push_back(z);
    out.emplace_back(params, std::move(top), std::move(bottom));
    return out;
  }
  std::vector<int> Z = zt.singles();
  std::vector<int> D = zt.doubles();
  const int bottom_singles = zt.n_slots() - static_cast<int>(D.size());
  if (bottom_singles < 0) return out;
  // choose which singles go to the bottom row
  std::vector<int> idx;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(idx.size()) == bottom_singles) {
      std::vector<int> top = D, bottom = D;
      std::vector<bool> used(Z.size(), false);
      for (int i : idx) used[i] = true;
      for (std::size_t i = 0; i < Z.size(); ++i)
        (used[i] ? bottom : top).push_back(Z[i]);
      std::sort(top.begin(), top.end());
      std::sort(bottom.begin(), bottom.end());
      out.emplace_back(params, std::move(top), std::move(bottom));
      return;
    }
    for (int i = from; i < static_cast<int>(Z.size()); ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Stabilization multiset_stabilization(Params params, int n, int max_N) {
  std::vector<std::size_t> counts;
  for (int N = 0; N <= max_N; ++N)
    counts.push_back(enumerate_multisets(params, n, N).size());
  std::size_t stable = counts.back();
  int threshold = max_N;
  for (int N = max_N; N >= 0; --N) {
    if (counts[N] == stable)
      threshold = N;
    else
      break;
  }
  return {threshold, stable};
}

}  // namespace symbols
}  // namespace coxhecke
