#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxhecke/errors.hpp"

namespace coxhecke {
namespace symbols {

/*
  Two-parameter symbol combinatorics for the classical families. The
  parameters a > 0, b >= 0 decompose as b = a r + b'. A ranked multiset has
  2N + r weakly increasing entries; a symbol splits it into a strict top
  row of N + r entries congruent to b' mod a and a strict bottom row of N
  entries divisible by a.
*/
struct Params {
  int a = 1;
  int b = 0;
  int r() const { return b / a; }
  int b_prime() const { return b % a; }
};

class RankedMultiset {
public:
  // Validates congruence and multiplicity constraints (NotInFamily).
  RankedMultiset(Params params, int N, std::vector<int> entries);

  const Params& params() const { return params_; }
  int n_slots() const { return N_; }
  const std::vector<int>& entries() const { return entries_; }

  // n solved from the entry-sum formula; NotInFamily if it fails.
  int rank() const { return rank_; }

  std::vector<int> singles() const;
  std::vector<int> doubles() const;  // one copy per repeated entry

  RankedMultiset shift() const;
  bool operator==(const RankedMultiset& o) const {
    return params_.a == o.params_.a && params_.b == o.params_.b &&
           N_ == o.N_ && entries_ == o.entries_;
  }
  bool operator<(const RankedMultiset& o) const { return entries_ < o.entries_; }

  // The base multiset of rank 0 at a given N.
  static RankedMultiset base(Params params, int N);

private:
  Params params_;
  int N_;
  std::vector<int> entries_;
  int rank_;
};

class Symbol {
public:
  // Validates row sizes, strictness and congruences.
  Symbol(Params params, std::vector<int> top, std::vector<int> bottom);

  const Params& params() const { return params_; }
  int n_slots() const { return static_cast<int>(bottom_.size()); }
  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }

  RankedMultiset flatten() const;
  int rank() const { return flatten().rank(); }

  Symbol shift() const;
  // Equality after shifting both to a common N.
  bool equivalent(const Symbol& o) const;

  bool operator==(const Symbol& o) const {
    return top_ == o.top_ && bottom_ == o.bottom_;
  }
  bool operator<(const Symbol& o) const {
    return std::tie(top_, bottom_) < std::tie(o.top_, o.bottom_);
  }

  std::string str() const;

private:
  Params params_;
  std::vector<int> top_, bottom_;
};

// The symbol of a bipartition: alpha with at most N + r parts, beta with
// at most N parts (NTooSmall otherwise).
Symbol from_bipartition(Params params, std::vector<int> alpha,
                        std::vector<int> beta, int N);

// Reflection within {0..ta} U {b'..ta+b'}; TTooSmall when t cannot host
// the reflected entries. Rank-preserving.
Symbol bar_complement(const Symbol& s, int t);

// a- and f-invariants of Prop-22.14 type; both shift-invariant.
long long a_of_symbol(const Symbol& s);
long long f_of_symbol(const Symbol& s);

/*
  r-admissible involutions of a totally ordered set Z, encoded as the list
  of swapped index pairs (i, i+? arbitrary after removals); fixed points
  are the rest.
*/
struct Involution {
  int size = 0;                              // |Z|
  std::vector<std::pair<int, int>> pairs;    // swapped positions, sorted
  bool operator<(const Involution& o) const { return pairs < o.pairs; }
  bool operator==(const Involution& o) const { return pairs == o.pairs; }
};

// All r-admissible involutions; ParityError unless r = |Z| mod 2,
// 0 <= r <= |Z|.
std::vector<Involution> admissible_involutions(int z_size, int r);

// The 2^p subsets picking one point from each swapped pair (positions).
std::vector<std::vector<int>> s_iota(const Involution& io);

// Vertices: subsets of Z of size (|Z|-r)/2; edges via shared membership in
// some S_iota. Returns connectivity.
bool involution_graph_connected(int z_size, int r);

// Constructible family c(Z~, iota) in the b' = 0 case: the multiset of
// symbols Lambda_Y for Y in S_iota. WrongResidue when b' > 0 (the family
// is then a single symbol).
std::vector<Symbol> constructible_family(const RankedMultiset& zt,
                                         const Involution& io);

// Smallest N at which |M_{a,b;n}^N| stabilizes, with the stable count.
struct Stabilization {
  int threshold_N;
  std::size_t count;
};
Stabilization multiset_stabilization(Params params, int n, int max_N = 40);

// All multisets of rank n at a given N.
std::vector<RankedMultiset> enumerate_multisets(Params params, int n, int N);
// All symbols over a given flattening.
std::vector<Symbol> symbols_over(const RankedMultiset& zt);

}  // namespace symbols
}  // namespace coxhecke
