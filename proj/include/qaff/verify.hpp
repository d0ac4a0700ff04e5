#pragma once
/*
 * Named verification suites covering every library module.  Each suite
 * returns a Report of independently named pass/fail checks; degree sweeps
 * are clamped to min(default bound, maxDegree).  Suites that depend on the
 * deformation parameter take the mode explicitly; degenerate values
 * (mu^2 = 1) switch the handful of checks whose statements change there.
 */

#include <string>
#include <vector>

#include "qaff/connections.hpp"
#include "qaff/report.hpp"
#include "qaff/scalar.hpp"

namespace qaff {

// Rank of the span of a family of horizontal-form elements.
size_t spanRank(const std::vector<AhElem>& family);

// Lift laws of the extended translation map on one affine element: the
// right-leg coaction law, the product-counit law, and the left-leg law
// through the conjugated antipode (compared in the relative quotient).
bool translationCoactionIdentity(const BundleAlg& P, const AffComb& psi);
bool translationProductIdentity(const BundleAlg& P, const AffComb& psi);
bool translationOpCoactionIdentity(const BundleAlg& P, const AffComb& psi);

// Named checks for the vertical line spanned by the group curvature:
// dimension, twist eigenvalue, integer-coefficient recursion, and the
// annihilated ideal.  `rho` must be a germ over `P`.
Report gammaReport(const BundleAlg& P, const Germ& rho);

Report scalarsSuite();
Report baseHopfSuite();
Report braidingSuite(const Mu& mode, int maxDegree);
Report braidedAlgebrasSuite(const Mu& mode, int maxDegree);
Report affineHopfSuite(const Mu& mode, int maxDegree);
Report hopfFibrationSuite(const Mu& mode, int maxDegree);
Report connectionsSuite(const Mu& mode, int maxDegree);

// Library suite names in run order (the CLI adds its own "cli" suite).
std::vector<std::string> librarySuiteNames();
// Dispatch by name; throws std::invalid_argument on an unknown name.
Report runLibrarySuite(const std::string& name, const Mu& mode,
                       int maxDegree);

}  // namespace qaff
