#pragma once
/*
 * Element-expression grammar shared by the command-line tools.
 *
 * Tokens: rational literals ("2", "2/3"), the deformation symbol `mu`, the
 * group generator `U`, module generators `xi`, `xis`, base generators `a`,
 * `as`, `g`, `gs`, exterior letters `e+`, `e-`, operators `^ * + -`, and
 * parentheses.  Precedence: `^` binds tighter than `*`, which binds tighter
 * than `+`/`-`; `*` is never implicit.  Exponents are integer literals,
 * optionally negative.
 *
 * parseExpr throws SyntaxError carrying the byte offset and the expected
 * token set.  printExpr emits a string that parses back to an equal tree.
 * The token set of a tree picks the algebra it evaluates in: exterior
 * letters force horizontal forms, base generators force the bundle total
 * space, and everything else stays in the affine algebra.
 */

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "qaff/bundle.hpp"
#include "qaff/errors.hpp"

namespace qaff {

struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Kind { Number, Symbol, Pow, Neg, Mul, Add, Sub };
  Kind kind;
  mpq_class number;     // Number
  std::string symbol;   // Symbol: mu U xi xis a as g gs e+ e-
  long exponent = 0;    // Pow
  std::vector<ExprPtr> kids;  // Pow/Neg: 1, Mul/Add/Sub: 2
};

ExprPtr parseExpr(const std::string& input);
std::string printExpr(const ExprPtr& e);
bool exprEqual(const ExprPtr& a, const ExprPtr& b);

// The algebra selected by the symbols present in the tree.
enum class ExprTarget { Affine, Bundle, Horizontal };
ExprTarget exprTarget(const ExprPtr& e);

// Evaluators; they throw std::invalid_argument on a semantically invalid
// tree (wrong algebra for the target, negative power of a non-invertible).
Scalar evalScalarExpr(const ExprPtr& e, const Mu& mode);
AffComb evalAffineExpr(const ExprPtr& e, const AffineAlg& A, const Mu& mode);
BtElem evalBundleExpr(const ExprPtr& e, const BundleAlg& P);
AhElem evalHorizontalExpr(const ExprPtr& e, const BundleAlg& P);

}  // namespace qaff
