#pragma once
/*
 * Braided symmetric and exterior algebras of a bicovariant bimodule.
 *
 * Both are quotients of the tensor algebra: the symmetric algebra divides
 * by the kernel of the braided symmetrizer, the exterior algebra by the
 * two-sided ideal generated by the image of (id + tau) in degree two.
 *
 * Each degree is preprocessed into reduction data: words of that degree are
 * split into representatives (a basis of the quotient) and pivots, and each
 * pivot carries a rewrite rule expressing it as a combination of
 * representatives.  The split uses fraction-free row reduction with columns
 * scanned in descending lexicographic order, so representatives are the
 * lexicographically smallest words in each block.
 */

#include <map>
#include <vector>

#include "qaff/braiding.hpp"

namespace qaff {

class SymAlg {
 public:
  enum class Flavor { Sym, Ext };

  explicit SymAlg(BimoduleSpec spec, int maxDeg = 8);

  const BraidCalc& braid() const { return bc_; }
  const BimoduleSpec& spec() const { return bc_.spec(); }
  int maxDegree() const { return maxDeg_; }

  const std::vector<Word>& reps(Flavor f, int n) const;
  int dimension(Flavor f, int n) const;
  // Express a word in the representative basis (single table lookup).
  LinComb reduceWord(Flavor f, const Word& w) const;
  LinComb reduce(Flavor f, const LinComb& x) const;
  // Quotient product: concatenate and reduce.
  LinComb mul(Flavor f, const LinComb& a, const LinComb& b) const;
  // Tensor-power coaction followed by reduction of the module leg.
  std::map<Grouplike, LinComb> coact(Flavor f, const LinComb& x) const;
  // Right action of a grouplike.
  LinComb circ(Flavor f, const LinComb& x, const Grouplike& g) const;
  // Star: plain reversal for Sym, graded reversal sign for Ext.
  LinComb star(Flavor f, const LinComb& x) const;
  // Lift of the longest permutation, reduced.
  LinComb reversal(Flavor f, const LinComb& x) const;
  // Coefficient of the empty word.
  static Scalar constantTerm(const LinComb& x);
  // Group weight of a word under a diagonal coaction.
  Grouplike wordWeight(const Word& w) const;

 private:
  struct DegData {
    std::vector<Word> reps;            // ascending lex
    std::map<Word, LinComb> rules;     // pivot -> combination of reps
  };
  const DegData& degData(Flavor f, int n) const;
  DegData buildFromRows(const std::vector<LinComb>& rows, int n) const;

  BraidCalc bc_;
  int maxDeg_;
  mutable std::map<int, DegData> deg_[2];
};

}  // namespace qaff
