#pragma once
/*
 * Finite-dimensional bicovariant bimodule data over the commutative base
 * Hopf algebra generated by a free abelian group.
 *
 * A BimoduleSpec packages:
 *   - a right coaction  V -> V (x) A  sending each basis vector to a finite
 *     sum of (coefficient, basis vector, grouplike) terms,
 *   - a right action of each group generator as an invertible matrix,
 *   - an antilinear star involution as a matrix (column i = image of e_i).
 *
 * validate() checks the axioms tying these together:
 *   counit/coassociativity of the coaction, invertibility of the action,
 *   coaction(v . a) = sum (v_k . a(2)) (x) antipode(a(1)) c_k a(3),
 *   coaction о star = (star (x) star) о coaction,
 *   (v . a)* = v* . antipode(a)*,  star о star = id.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qaff/base_hopf.hpp"
#include "qaff/linalg.hpp"
#include "qaff/report.hpp"
#include "qaff/scalar.hpp"
#include "qaff/tensor.hpp"

namespace qaff {

struct CoactTerm {
  Scalar coeff;
  int vec;       // basis index of the V leg
  Grouplike grp; // A leg
};

// Sparse branch of a linear map applied to one basis vector.
struct VBranch {
  Scalar coeff;
  int vec;
};

class BimoduleSpec {
 public:
  BimoduleSpec(Mu mode, int groupRank, std::vector<std::string> labels,
               std::vector<std::vector<CoactTerm>> coaction,
               std::vector<Matrix> generatorAction, Matrix star);

  // Shipped example: two-dimensional module with diagonal coaction of
  // weights +2/-2, uniform action eigenvalue 1/mu, and star swapping the
  // basis vectors with factors mu and 1/mu.
  static BimoduleSpec hopfFibration(const Mu& mode);
  // One-dimensional module with trivial coaction, trivial action, star = id.
  static BimoduleSpec trivialLine(const Mu& mode);

  const Mu& mode() const { return mode_; }
  int dim() const { return static_cast<int>(labels_.size()); }
  int groupRank() const { return rank_; }
  const std::vector<std::string>& labels() const { return labels_; }

  const std::vector<CoactTerm>& coactionOf(int i) const { return coaction_[i]; }
  // True when every coaction term is (coeff, same basis vector, grouplike):
  // then each basis vector carries a well-defined group weight.
  bool coactionDiagonal() const { return diagonal_; }
  // Weight of basis vector i (requires coactionDiagonal()).
  const Grouplike& weightOf(int i) const { return weights_[i]; }

  // Action of an arbitrary grouplike, assembled from generator powers.
  const Matrix& actionOf(const Grouplike& g) const;
  // Branches of theta_i . g  (column i of actionOf(g)).
  std::vector<VBranch> actionBranches(int i, const Grouplike& g) const;
  // Branches of star(theta_i) (column i of the star matrix).
  std::vector<VBranch> starBranches(int i) const;
  const Matrix& starMatrix() const { return star_; }

  Report validate() const;

 private:
  Mu mode_;
  int rank_;
  std::vector<std::string> labels_;
  std::vector<std::vector<CoactTerm>> coaction_;
  std::vector<Matrix> genAction_;     // one per generator
  std::vector<Matrix> genActionInv_;  // inverses, computed on construction
  Matrix star_;
  bool diagonal_ = false;
  std::vector<Grouplike> weights_;
  mutable std::map<Grouplike, Matrix> actionCache_;
};

}  // namespace qaff
