#pragma once
/*
 * Braiding calculus on tensor powers of a bicovariant bimodule.
 *
 * The braiding acts on a pair of basis vectors by
 *     tau(v (x) w) = sum_k w_k (x) (v . c_k),   coaction(w) = sum_k w_k (x) c_k,
 * and lifts to tensor powers through reduced words of permutations:
 * adjacent transpositions map to tau applied at a position, and the lift of
 * a permutation is the product along any reduced word (the checks confirm
 * independence of the chosen word).
 *
 * On top of the lifts sit the shuffle sums
 *     Ykl = sum over (k,l)-shuffles pi of tau_pi,
 *     Mkl = sum over (k,l)-shuffles pi of tau_{pi^-1},
 * the braided symmetrizer Y_n (computed by the recursion
 * Y_n = Y_{1,n-1} о (id (x) Y_{n-1})), and the lift of the longest
 * permutation used as the antipode twist on tensor words.
 */

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "qaff/bimodule.hpp"
#include "qaff/linalg.hpp"
#include "qaff/tensor.hpp"

namespace qaff {

class BraidCalc {
 public:
  explicit BraidCalc(BimoduleSpec spec);

  const BimoduleSpec& spec() const { return spec_; }
  int dim() const { return spec_.dim(); }
  // Braiding on degree 2 as a (dim^2 x dim^2) matrix; pair (i,j) has
  // column index i*dim + j.
  const Matrix& braidMatrix() const { return braid_; }
  const Matrix& braidInverse() const;
  // True when every braid branch permutes the letter multiset; enables
  // block-diagonal kernel computations at high degree.
  bool multisetPreserving() const { return multisetPreserving_; }

  // --- word-level operators -------------------------------------------
  LinComb applyTau(const Word& w, int pos) const;
  LinComb applyTau(const LinComb& x, int pos) const;
  LinComb applyTauInv(const LinComb& x, int pos) const;
  // Lift of a permutation along a reduced word; strategy picks which
  // descent is eliminated first (used to cross-check word independence).
  enum class DescentStrategy { Smallest, Largest };
  LinComb applyPermLift(const std::vector<int>& perm, const LinComb& x,
                        DescentStrategy strategy = DescentStrategy::Smallest) const;
  // Lift of the longest permutation (degree read off each word).
  LinComb applyReversal(const LinComb& x) const;
  // Braided symmetrizer (memoized per word).
  LinComb applyY(const Word& w) const;
  LinComb applyY(const LinComb& x) const;
  LinComb applyYkl(int k, int l, const LinComb& x) const;
  LinComb applyMkl(int k, int l, const LinComb& x) const;
  // (Y_k (x) Y_l) applied to a word of length k+l.
  LinComb applyYTensorY(int k, int l, const Word& w) const;

  // --- module structure on tensor words --------------------------------
  // Star with plain reversal: (v_1 ... v_n)* = v_n* ... v_1*.
  LinComb starWord(const Word& w) const;
  LinComb starComb(const LinComb& x) const;
  // Tensor-power coaction: word -> sum of (coeff, word, grouplike).
  std::vector<std::tuple<Scalar, Word, Grouplike>> coactWord(const Word& w) const;
  // Right action of a grouplike, letterwise.
  LinComb circWord(const Word& w, const Grouplike& g) const;
  LinComb circComb(const LinComb& x, const Grouplike& g) const;

  // --- permutation utilities -------------------------------------------
  static std::vector<int> identityPerm(int n);
  static std::vector<int> longestPerm(int n);
  static std::vector<int> inversePerm(const std::vector<int>& p);
  static std::vector<std::vector<int>> allPerms(int n);
  // (k,l)-shuffles: ascending on the first k and on the last l positions.
  static std::vector<std::vector<int>> shuffles(int k, int l);
  static std::vector<int> reducedWordOf(std::vector<int> perm,
                                        DescentStrategy strategy);

  // --- dense assembly ----------------------------------------------------
  std::vector<Word> wordsOfDegree(int n) const;  // lex ascending
  static size_t wordIndex(const Word& w, int d);
  Matrix denseMatrix(const std::function<LinComb(const Word&)>& f, int n) const;
  // Kernel of Y_n as rows over words of degree n (block-diagonal when the
  // braiding preserves letter multisets).
  std::vector<LinComb> kernelY(int n) const;

 private:
  BimoduleSpec spec_;
  Matrix braid_;
  mutable Matrix braidInv_;
  mutable bool braidInvReady_ = false;
  bool multisetPreserving_ = false;
  mutable std::map<Word, LinComb> yCache_;
};

}  // namespace qaff
