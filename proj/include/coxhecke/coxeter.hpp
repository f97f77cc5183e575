#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "coxhecke/errors.hpp"

namespace coxhecke {

using Gen = std::uint8_t;       // generator index into S
using Word = std::vector<Gen>;  // word in the generators
using EltIndex = std::int32_t;  // index into a GroupTable; -1 = outside ball

constexpr EltIndex kOutside = -1;
constexpr int kInfinity = 0;  // bond encoding: 0 stands for m = infinity

/*
  A Coxeter matrix together with a positive weight function on the
  generators. validate() enforces the matrix axioms and the constraint that
  odd finite bonds force equal weights.
*/
struct CoxeterSystem {
  std::vector<std::string> names;        // generator names, in ShortLex order
  std::vector<std::vector<int>> matrix;  // m(s,s'); 0 encodes infinity
  std::vector<int> weights;              // L(s) > 0

  int rank() const { return static_cast<int>(names.size()); }
  int bond(Gen s, Gen t) const { return matrix[s][t]; }
  int weight(Gen s) const { return weights[s]; }

  static CoxeterSystem validate(std::vector<std::string> names,
                                std::vector<std::vector<int>> matrix,
                                std::vector<int> weights);
};

/*
  Word-problem engine: canonical forms by braid closure (Tits-style).
  Canonical form = the ShortLex-least reduced word of the element, under the
  generator order given in the input. Braid classes and canonical forms are
  memoized per system; the cap bounds the closure size.
*/
class WordProblem {
public:
  explicit WordProblem(CoxeterSystem sys, std::size_t class_cap = 500000)
      : sys_(std::move(sys)), cap_(class_cap) {}

  // All words reachable from `w` by braid moves. Throws ClassTooLarge.
  std::set<Word> braid_class(const Word& w) const;
  bool is_reduced(const Word& w) const;
  // Reduced ShortLex-least word for the element of `w`.
  Word canonical(const Word& w) const;

  const CoxeterSystem& system() const { return sys_; }

private:
  CoxeterSystem sys_;
  std::size_t cap_;
  mutable std::map<Word, Word> canon_memo_;
};

struct ElementData {
  Word word;                 // canonical reduced word
  int length = 0;            // l(w)
  int weight = 0;            // L(w)
  std::uint32_t left_desc = 0;   // bitset over S: { s : sw < w }
  std::uint32_t right_desc = 0;  // bitset over S: { s : ws < w }
  EltIndex inverse = kOutside;
};

/*
  An enumerated Coxeter group, or a ball of a given radius when the group is
  infinite (or larger than the cap). Elements are indexed in increasing
  (length, ShortLex word) order, so index 0 is the identity and every Bruhat
  lower set is an initial-segment-friendly range. Immutable once built.
*/
class GroupTable {
public:
  struct Radius {
    bool full = true;
    int value = 0;  // ball radius when !full
    static Radius Full() { return {true, 0}; }
    static Radius Ball(int r) { return {false, r}; }
  };

  // BFS over canonical forms. For full enumeration the group must close
  // below `cap` elements, else CapExceeded. A nonzero `max_radius` also
  // bounds the BFS depth (used by finiteness probes).
  static GroupTable enumerate(const CoxeterSystem& sys, Radius radius,
                              std::size_t cap = 2000000,
                              std::size_t braid_cap = 500000,
                              int max_radius = 0);

  const CoxeterSystem& system() const { return sys_; }
  int rank() const { return sys_.rank(); }
  int size() const { return static_cast<int>(elements_.size()); }
  bool finite() const { return finite_; }
  // Ball radius (= max length present) for partial tables.
  int radius() const { return radius_; }

  const ElementData& elt(EltIndex x) const { return elements_[x]; }
  int length(EltIndex x) const { return elements_[x].length; }
  int weight(EltIndex x) const { return elements_[x].weight; }
  int sgn(EltIndex x) const { return elements_[x].length % 2 == 0 ? 1 : -1; }
  const Word& word(EltIndex x) const { return elements_[x].word; }
  EltIndex inverse(EltIndex x) const;

  // Index lookup by canonical word; kOutside if absent from the table.
  EltIndex index_of(const Word& canonical_word) const;
  // Canonicalizes first. kOutside if the element is outside the ball.
  EltIndex element_of_word(const Word& w) const;

  // s*x resp. x*s; kOutside when the product leaves the ball. The *_checked
  // variants throw BallExceeded instead.
  EltIndex left_mult(Gen s, EltIndex x) const { return left_[x][s]; }
  EltIndex right_mult(EltIndex x, Gen s) const { return right_[x][s]; }
  EltIndex left_mult_checked(Gen s, EltIndex x) const;
  EltIndex right_mult_checked(EltIndex x, Gen s) const;
  // General product by folding one canonical word; BallExceeded if it leaves.
  EltIndex product(EltIndex x, EltIndex y) const;

  bool is_left_descent(Gen s, EltIndex x) const {
    return (elements_[x].left_desc >> s) & 1u;
  }
  bool is_right_descent(EltIndex x, Gen s) const {
    return (elements_[x].right_desc >> s) & 1u;
  }
  // First left descent in generator order; used as the standard recursion
  // pivot everywhere so traversals are reproducible.
  Gen first_left_descent(EltIndex x) const;
  Gen first_right_descent(EltIndex x) const;

  // Bruhat order, memoized recursion on descents.
  bool bruhat_leq(EltIndex y, EltIndex w) const;
  // All x <= w, in index order.
  std::vector<EltIndex> bruhat_interval_below(EltIndex w) const;

  // Reflections T = closure of wSw^-1; finite tables only.
  struct Reflection {
    EltIndex t;
    EltIndex witness_w;  // t = w s w^-1
    Gen witness_s;
  };
  std::vector<Reflection> reflections() const;

  // Cocycle sign: -1 iff t is a prefix reflection of w (t in T).
  int eta(EltIndex w, EltIndex t) const;
  // The set {s_1, s_1 s_2 s_1, ...} for the canonical word of w.
  std::vector<EltIndex> prefix_reflections(EltIndex w) const;

  // Distinguished coset representatives for W_I w resp. w W_I.
  EltIndex coset_min_left(EltIndex w, std::uint32_t I) const;
  EltIndex coset_max_left(EltIndex w, std::uint32_t I) const;
  EltIndex coset_min_right(EltIndex w, std::uint32_t I) const;

  // Longest element of a complete finite table, plus s -> w0 s w0.
  struct LongestElement {
    EltIndex w0;
    std::vector<Gen> conj_perm;
  };
  LongestElement longest_element() const;

  // The parabolic subgroup W_I as its own table (full if this table is
  // full; same radius otherwise). Canonical words agree with this table's.
  GroupTable parabolic_table(std::uint32_t I) const;
  // Indices of elements lying in W_I (i.e. all letters in I).
  std::vector<EltIndex> parabolic_members(std::uint32_t I) const;
  // Desk-scale finiteness probe: BFS with bounded size and depth. A W_I
  // that fails to close within the probe bounds counts as infinite.
  bool parabolic_is_finite(std::uint32_t I, std::size_t probe_cap = 100000,
                           int probe_radius = 200) const;

  const WordProblem& word_problem() const { return wp_; }

private:
  GroupTable(const CoxeterSystem& sys, std::size_t braid_cap)
      : sys_(sys), wp_(sys, braid_cap) {}

  CoxeterSystem sys_;
  WordProblem wp_;
  bool finite_ = false;
  int radius_ = 0;
  std::vector<ElementData> elements_;
  std::vector<std::vector<EltIndex>> left_;   // [x][s] -> sx
  std::vector<std::vector<EltIndex>> right_;  // [x][s] -> xs
  std::map<Word, EltIndex> index_;
  mutable std::map<std::pair<EltIndex, EltIndex>, bool> bruhat_memo_;
};

// Subsets of S as bitmasks.
std::uint32_t full_gen_set(int rank);
std::vector<Gen> gens_of_mask(std::uint32_t I, int rank);

}  // namespace coxhecke
