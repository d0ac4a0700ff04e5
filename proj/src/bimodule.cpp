#include "qaff/bimodule.hpp"

#include <stdexcept>

#include "qaff/errors.hpp"

namespace qaff {

namespace {

// V (x) A element: grouplike -> coefficient vector over the V basis.
using VA = std::map<Grouplike, Vec>;
// V (x) A (x) A element.
using VAA = std::map<std::pair<Grouplike, Grouplike>, Vec>;

void vaAdd(VA& acc, const Grouplike& g, int vec, const Scalar& c, int dim) {
  if (c.isZero()) return;
  auto it = acc.find(g);
  if (it == acc.end()) it = acc.emplace(g, Vec(dim, Scalar())).first;
  it->second[vec] += c;
}

bool vaIsZero(const VA& x) {
  for (const auto& [g, v] : x)
    for (const auto& c : v)
      if (!c.isZero()) return false;
  return true;
}

VA vaSub(const VA& a, const VA& b, int dim) {
  VA out = a;
  for (const auto& [g, v] : b)
    for (int i = 0; i < dim; ++i) vaAdd(out, g, i, -v[i], dim);
  return out;
}

void vaaAdd(VAA& acc, const Grouplike& g1, const Grouplike& g2, int vec,
            const Scalar& c, int dim) {
  if (c.isZero()) return;
  auto key = std::make_pair(g1, g2);
  auto it = acc.find(key);
  if (it == acc.end()) it = acc.emplace(key, Vec(dim, Scalar())).first;
  it->second[vec] += c;
}

bool vaaIsZero(const VAA& x) {
  for (const auto& [k, v] : x)
    for (const auto& c : v)
      if (!c.isZero()) return false;
  return true;
}

VAA vaaSub(const VAA& a, const VAA& b, int dim) {
  VAA out = a;
  for (const auto& [k, v] : b)
    for (int i = 0; i < dim; ++i) vaaAdd(out, k.first, k.second, i, -v[i], dim);
  return out;
}

}  // namespace

BimoduleSpec::BimoduleSpec(Mu mode, int groupRank, std::vector<std::string> labels,
                           std::vector<std::vector<CoactTerm>> coaction,
                           std::vector<Matrix> generatorAction, Matrix star)
    : mode_(std::move(mode)),
      rank_(groupRank),
      labels_(std::move(labels)),
      coaction_(std::move(coaction)),
      genAction_(std::move(generatorAction)),
      star_(std::move(star)) {
  const int d = dim();
  if (static_cast<int>(coaction_.size()) != d)
    throw InvariantViolation("coaction table size must match dimension");
  if (static_cast<int>(genAction_.size()) != rank_)
    throw InvariantViolation("one action matrix required per group generator");
  for (const auto& m : genAction_) {
    if (m.rows() != d || m.cols() != d)
      throw InvariantViolation("action matrix shape mismatch");
    genActionInv_.push_back(m.inverse());
  }
  if (star_.rows() != d || star_.cols() != d)
    throw InvariantViolation("star matrix shape mismatch");
  // Detect a diagonal coaction and record per-vector weights.
  diagonal_ = true;
  weights_.assign(d, Grouplike::unit(rank_));
  for (int i = 0; i < d; ++i) {
    if (coaction_[i].size() != 1 || coaction_[i][0].vec != i ||
        !(coaction_[i][0].coeff == Scalar::one())) {
      diagonal_ = false;
      break;
    }
    weights_[i] = coaction_[i][0].grp;
  }
  if (!diagonal_) weights_.clear();
}

BimoduleSpec BimoduleSpec::hopfFibration(const Mu& mode) {
  std::vector<std::string> labels = {"e+", "e-"};
  std::vector<std::vector<CoactTerm>> coact(2);
  coact[0] = {CoactTerm{Scalar::one(), 0, Grouplike::U(2)}};
  coact[1] = {CoactTerm{Scalar::one(), 1, Grouplike::U(-2)}};
  Matrix act(2, 2);
  act.at(0, 0) = Scalar::muPow(mode, -1);
  act.at(1, 1) = Scalar::muPow(mode, -1);
  Matrix star(2, 2);
  star.at(1, 0) = Scalar::muPow(mode, 1);   // star(e+) = mu e-
  star.at(0, 1) = Scalar::muPow(mode, -1);  // star(e-) = (1/mu) e+
  return BimoduleSpec(mode, 1, std::move(labels), std::move(coact), {act}, star);
}

BimoduleSpec BimoduleSpec::trivialLine(const Mu& mode) {
  std::vector<std::vector<CoactTerm>> coact(1);
  coact[0] = {CoactTerm{Scalar::one(), 0, Grouplike::unit(1)}};
  return BimoduleSpec(mode, 1, {"e"}, std::move(coact), {Matrix::identity(1)},
                      Matrix::identity(1));
}

const Matrix& BimoduleSpec::actionOf(const Grouplike& g) const {
  auto it = actionCache_.find(g);
  if (it != actionCache_.end()) return it->second;
  Matrix m = Matrix::identity(dim());
  for (int k = 0; k < rank_; ++k) {
    long e = g.e[k];
    const Matrix& step = e >= 0 ? genAction_[k] : genActionInv_[k];
    for (long r = 0; r < (e >= 0 ? e : -e); ++r) m = m * step;
  }
  return actionCache_.emplace(g, std::move(m)).first->second;
}

std::vector<VBranch> BimoduleSpec::actionBranches(int i, const Grouplike& g) const {
  const Matrix& m = actionOf(g);
  std::vector<VBranch> out;
  for (int j = 0; j < dim(); ++j)
    if (!m.at(j, i).isZero()) out.push_back(VBranch{m.at(j, i), j});
  return out;
}

std::vector<VBranch> BimoduleSpec::starBranches(int i) const {
  std::vector<VBranch> out;
  for (int j = 0; j < dim(); ++j)
    if (!star_.at(j, i).isZero()) out.push_back(VBranch{star_.at(j, i), j});
  return out;
}

Report BimoduleSpec::validate() const {
  Report rep;
  const int d = dim();
  const Grouplike e = Grouplike::unit(rank_);

  // Generator actions invertible (inverse() already threw if singular);
  // confirm A(g) A(g^-1) = id through the cache path as well.
  {
    bool ok = true;
    std::string wit;
    for (int k = 0; k < rank_ && ok; ++k) {
      Grouplike g = e;
      g.e[k] = 1;
      if (!(actionOf(g) * actionOf(g.inverse())).isIdentity()) {
        ok = false;
        wit = "generator " + std::to_string(k);
      }
    }
    rep.add("action-invertible", ok, wit);
  }

  // (id (x) counit) о coaction = id.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      Vec img(d, Scalar());
      for (const auto& t : coactionOf(i)) img[t.vec] += t.coeff;
      for (int j = 0; j < d; ++j) {
        Scalar want = (j == i) ? Scalar::one() : Scalar();
        if (!(img[j] == want)) {
          ok = false;
          wit = labels_[i];
          break;
        }
      }
    }
    rep.add("coaction-counital", ok, wit);
  }

  // (coaction (x) id) о coaction = (id (x) coproduct) о coaction.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      VAA lhs, rhs;
      for (const auto& t : coactionOf(i)) {
        for (const auto& u : coactionOf(t.vec))
          vaaAdd(lhs, u.grp, t.grp, u.vec, t.coeff * u.coeff, d);
        vaaAdd(rhs, t.grp, t.grp, t.vec, t.coeff, d);  // grouplike coproduct
      }
      if (!vaaIsZero(vaaSub(lhs, rhs, d))) {
        ok = false;
        wit = labels_[i];
      }
    }
    rep.add("coaction-coassociative", ok, wit);
  }

  // coaction(v . g) = sum_k (v_k . g) (x) g^-1 c_k g, per generator and inverse.
  {
    bool ok = true;
    std::string wit;
    for (int k = 0; k < rank_ && ok; ++k) {
      for (int sgn : {1, -1}) {
        Grouplike g = e;
        g.e[k] = sgn;
        for (int i = 0; i < d; ++i) {
          VA lhs, rhs;
          for (const auto& br : actionBranches(i, g))
            for (const auto& t : coactionOf(br.vec))
              vaAdd(lhs, t.grp, t.vec, br.coeff * t.coeff, d);
          for (const auto& t : coactionOf(i)) {
            Grouplike leg = g.inverse() * t.grp * g;
            for (const auto& br : actionBranches(t.vec, g))
              vaAdd(rhs, leg, br.vec, t.coeff * br.coeff, d);
          }
          if (!vaIsZero(vaSub(lhs, rhs, d))) {
            ok = false;
            wit = labels_[i] + " . generator " + std::to_string(k) +
                  (sgn < 0 ? "^-1" : "");
            break;
          }
        }
        if (!ok) break;
      }
    }
    rep.add("coaction-action-compatible", ok, wit);
  }

  // coaction(star v) = (star (x) star) coaction(v); star on a grouplike is
  // its inverse.
  {
    bool ok = true;
    std::string wit;
    for (int i = 0; i < d && ok; ++i) {
      VA lhs, rhs;
      for (const auto& sb : starBranches(i))
        for (const auto& t : coactionOf(sb.vec))
          vaAdd(lhs, t.grp, t.vec, sb.coeff * t.coeff, d);
      for (const auto& t : coactionOf(i))
        for (const auto& sb : starBranches(t.vec))
          vaAdd(rhs, t.grp.inverse(), sb.vec, t.coeff * sb.coeff, d);
      if (!vaIsZero(vaSub(lhs, rhs, d))) {
        ok = false;
        wit = labels_[i];
      }
    }
    rep.add("coaction-star-compatible", ok, wit);
  }

  // (v . g)* = v* . antipode(g)* = v* . g, per generator and inverse.
  {
    bool ok = true;
    std::string wit;
    for (int k = 0; k < rank_ && ok; ++k) {
      for (int sgn : {1, -1}) {
        Grouplike g = e;
        g.e[k] = sgn;
        // LHS matrix: star о action(g); RHS: action(g) о star.
        if (!(star_ * actionOf(g) == actionOf(g) * star_)) {
          ok = false;
          wit = "generator " + std::to_string(k) + (sgn < 0 ? "^-1" : "");
          break;
        }
      }
    }
    rep.add("action-star-compatible", ok, wit);
  }

  // Star is an involution (coefficients are conjugation-fixed).
  rep.add("star-involutive", (star_ * star_).isIdentity());

  return rep;
}

}  // namespace qaff
