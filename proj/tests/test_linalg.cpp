/*
 * Exact linear algebra: row reduction, rank, kernels, inverses, spans.
 * The 4x4 sample operator used here is the engine's own braid matrix shape,
 * written out by hand so the oracle is independent of the braiding module.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qaff/linalg.hpp"

using namespace qaff;

namespace {

Scalar mu(long k) { return Scalar::muPow(Mu::sym(), k); }

Matrix sampleBraid() {
  // basis (e1,e2,e3,e4); columns are images.
  Matrix t(4, 4);
  t.at(0, 0) = mu(-2);
  t.at(2, 1) = mu(2);
  t.at(1, 2) = mu(-2);
  t.at(3, 3) = mu(2);
  return t;
}

}  // namespace

TEST_CASE("matrix arithmetic and kron") {
  Matrix t = sampleBraid();
  Matrix i4 = Matrix::identity(4);
  CHECK(t * t.inverse() == i4);
  CHECK(t.inverse() * t == i4);
  CHECK((t - t).isZero());
  CHECK(Matrix::kron(Matrix::identity(2), Matrix::identity(2)) == i4);

  // mixed 2x2 block of the sample operator squares to the identity
  Matrix sq = t * t;
  CHECK(sq.at(1, 1) == Scalar::one());
  CHECK(sq.at(2, 2) == Scalar::one());
  CHECK(sq.at(0, 0) == mu(-4));
  CHECK(sq.at(3, 3) == mu(4));
}

TEST_CASE("kernel of I + sample braid") {
  Matrix y2 = Matrix::identity(4) + sampleBraid();
  CHECK(y2.rank() == 3);
  auto ker = y2.kernelBasis();
  REQUIRE(ker.size() == 1);
  // kernel must be proportional to e2 - mu^2 e3
  const Vec& v = ker[0];
  CHECK(v[0].isZero());
  CHECK(v[3].isZero());
  CHECK(!v[1].isZero());
  CHECK(v[2] / v[1] == -mu(2));
  // the kernel vector is indeed annihilated
  Vec img = y2.apply(v);
  for (const auto& s : img) CHECK(s.isZero());
}

TEST_CASE("row reduction respects the prescribed column order") {
  // single row (0, 1, -mu^2, 0); with descending column order the pivot must
  // be column 2, expressing it through column 1.
  std::vector<Vec> rows = {{Scalar(), Scalar::one(), -mu(2), Scalar()}};
  Rref red = rowReduce(rows, {3, 2, 1, 0});
  REQUIRE(red.rank() == 1);
  CHECK(red.pivotCols[0] == 2);
  CHECK(red.rows[0][2] == Scalar::one());
  CHECK(red.rows[0][1] == -mu(-2));
}

TEST_CASE("span membership") {
  Span sp(3);
  CHECK(sp.add({Scalar::one(), mu(2), Scalar()}));
  CHECK(sp.add({Scalar(), Scalar::one(), mu(-2)}));
  CHECK(sp.dim() == 2);
  // linear combination: first + mu * second
  Vec comb = {Scalar::one(), mu(2) + mu(1), mu(-1)};
  CHECK(sp.contains(comb));
  CHECK(!sp.add(comb));
  CHECK(!sp.contains({Scalar(), Scalar(), Scalar::one()}));
  CHECK(sp.add({Scalar(), Scalar(), Scalar::one()}));
  CHECK(sp.dim() == 3);
}

TEST_CASE("rank at a specialized parameter can differ from generic") {
  // rows (1, mu^2) and (mu^2, mu^4) are dependent generically and at any mu.
  std::vector<Vec> rows = {{Scalar::one(), mu(2)}, {mu(2), mu(4)}};
  CHECK(rowReduce(rows).rank() == 1);
  // rows (1, 1) and (1, mu^2): rank 2 generically, rank 1 at mu = 1/-1.
  Mu minus = Mu::at(mpq_class(-1));
  std::vector<Vec> rows2 = {{Scalar::one(), Scalar::one()},
                            {Scalar::one(), Scalar::muPow(minus, 2)}};
  CHECK(rowReduce(rows2).rank() == 1);
  std::vector<Vec> rows3 = {{Scalar::one(), Scalar::one()},
                            {Scalar::one(), mu(2)}};
  CHECK(rowReduce(rows3).rank() == 2);
}
