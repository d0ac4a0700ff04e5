/*
 * Exact matrix arithmetic and fraction-free row reduction over Q(mu).
 */

#include "qaff/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace qaff {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one();
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_, a.cols_);
  for (size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] - b.a_[i];
  return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a.at(i, k);
      if (aik.isZero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b.at(k, j);
        if (bkj.isZero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix Matrix::scale(const Scalar& s) const {
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

bool Matrix::isZero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

bool Matrix::isIdentity() const {
  if (rows_ != cols_) return false;
  return *this == identity(rows_);
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      if (a.at(i, j).isZero()) continue;
      for (int k = 0; k < b.rows_; ++k)
        for (int l = 0; l < b.cols_; ++l) {
          if (b.at(k, l).isZero()) continue;
          r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  Vec r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).isZero() || x[static_cast<size_t>(j)].isZero()) continue;
      r[static_cast<size_t>(i)] += at(i, j) * x[static_cast<size_t>(j)];
    }
  return r;
}

// ---------------------------------------------------------------------------
// Row reduction

namespace {

// Scale a row to integer-polynomial entries and divide out the common
// polynomial content, keeping entries canonical scalars with denominator 1.
void primitivize(Vec& row) {
  Poly lcm(1);
  for (const Scalar& s : row) {
    if (s.isZero()) continue;
    Poly g = Poly::gcd(lcm, s.den());
    lcm = Poly::divExact(lcm, g) * s.den();
  }
  Scalar factor = Scalar::fromPolys(lcm, Poly(1));
  bool any = false;
  Poly content;
  for (Scalar& s : row) {
    if (s.isZero()) continue;
    s = s * factor;
    content = any ? Poly::gcd(content, s.num()) : Poly::gcd(s.num(), Poly());
    any = true;
  }
  if (!any || content.isOne()) return;
  Scalar inv = Scalar::fromPolys(Poly(1), content);
  for (Scalar& s : row)
    if (!s.isZero()) s = s * inv;
}

}  // namespace

Rref rowReduce(std::vector<Vec> rows, const std::vector<int>& colOrder) {
  for (Vec& r : rows) primitivize(r);
  std::vector<bool> used(rows.size(), false);
  std::vector<std::pair<int, size_t>> pivots;  // (position in colOrder, row)
  for (size_t pos = 0; pos < colOrder.size(); ++pos) {
    const int c = colOrder[pos];
    int best = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (used[r] || rows[r][static_cast<size_t>(c)].isZero()) continue;
      if (best < 0 || rows[r][static_cast<size_t>(c)].complexity() <
                          rows[static_cast<size_t>(best)][static_cast<size_t>(c)].complexity())
        best = static_cast<int>(r);
    }
    if (best < 0) continue;
    used[static_cast<size_t>(best)] = true;
    pivots.emplace_back(static_cast<int>(pos), static_cast<size_t>(best));
    const Vec& p = rows[static_cast<size_t>(best)];
    const Scalar& pc = p[static_cast<size_t>(c)];
    for (size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<size_t>(best)) continue;
      Scalar rc = rows[r][static_cast<size_t>(c)];
      if (rc.isZero()) continue;
      // Fraction-free update: row <- pc*row - rc*pivot, then re-primitivize.
      for (size_t j = 0; j < rows[r].size(); ++j)
        rows[r][j] = pc * rows[r][j] - rc * p[j];
      primitivize(rows[r]);
    }
  }
  Rref out;
  std::sort(pivots.begin(), pivots.end());
  for (const auto& [pos, r] : pivots) {
    const int c = colOrder[static_cast<size_t>(pos)];
    Vec row = rows[r];
    Scalar inv = Scalar::one() / row[static_cast<size_t>(c)];
    for (Scalar& s : row) s = s * inv;
    out.rows.push_back(std::move(row));
    out.pivotCols.push_back(c);
  }
  return out;
}

Rref rowReduce(std::vector<Vec> rows) {
  const size_t n = rows.empty() ? 0 : rows[0].size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return rowReduce(std::move(rows), order);
}

int Matrix::rank() const {
  std::vector<Vec> rows;
  rows.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Vec r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    rows.push_back(std::move(r));
  }
  return rowReduce(std::move(rows)).rank();
}

std::vector<Vec> Matrix::kernelBasis() const {
  std::vector<Vec> rows;
  rows.reserve(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    Vec r(static_cast<size_t>(cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    rows.push_back(std::move(r));
  }
  Rref red = rowReduce(std::move(rows));
  std::vector<bool> isPivot(static_cast<size_t>(cols_), false);
  for (int c : red.pivotCols) isPivot[static_cast<size_t>(c)] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < cols_; ++f) {
    if (isPivot[static_cast<size_t>(f)]) continue;
    Vec v(static_cast<size_t>(cols_));
    v[static_cast<size_t>(f)] = Scalar::one();
    for (size_t r = 0; r < red.rows.size(); ++r) {
      const Scalar& entry = red.rows[r][static_cast<size_t>(f)];
      if (!entry.isZero())
        v[static_cast<size_t>(red.pivotCols[r])] = -entry;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix Matrix::inverse() const {
  if (rows_ != cols_) throw InvariantViolation("inverse of a non-square matrix");
  std::vector<Vec> rows;
  for (int i = 0; i < rows_; ++i) {
    Vec r(static_cast<size_t>(2 * cols_));
    for (int j = 0; j < cols_; ++j) r[static_cast<size_t>(j)] = at(i, j);
    r[static_cast<size_t>(cols_ + i)] = Scalar::one();
    rows.push_back(std::move(r));
  }
  std::vector<int> order(static_cast<size_t>(cols_));
  std::iota(order.begin(), order.end(), 0);
  Rref red = rowReduce(std::move(rows), order);
  if (red.rank() != rows_) throw InvariantViolation("matrix is singular");
  Matrix inv(rows_, cols_);
  for (size_t r = 0; r < red.rows.size(); ++r) {
    const int i = red.pivotCols[r];
    for (int j = 0; j < cols_; ++j)
      inv.at(i, j) = red.rows[r][static_cast<size_t>(cols_ + j)];
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Span

Vec Span::residue(Vec v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[static_cast<size_t>(pivotCols_[r])];
    if (c.isZero()) continue;
    const Scalar coeff = c;  // pivot rows are normalized to 1 at the pivot
    for (size_t j = 0; j < length_; ++j) {
      if (rows_[r][j].isZero()) continue;
      v[j] = v[j] - coeff * rows_[r][j];
    }
  }
  return v;
}

bool Span::contains(const Vec& v) const {
  Vec res = residue(v);
  return std::all_of(res.begin(), res.end(),
                     [](const Scalar& s) { return s.isZero(); });
}

bool Span::add(Vec v) {
  v = residue(std::move(v));
  int pivot = -1;
  for (size_t j = 0; j < length_; ++j) {
    if (!v[j].isZero()) {
      pivot = static_cast<int>(j);
      break;
    }
  }
  if (pivot < 0) return false;
  Scalar inv = Scalar::one() / v[static_cast<size_t>(pivot)];
  for (Scalar& s : v) s = s * inv;
  // Back-substitute into existing rows to keep the set fully reduced.
  for (size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = rows_[r][static_cast<size_t>(pivot)];
    if (c.isZero()) continue;
    const Scalar coeff = c;
    for (size_t j = 0; j < length_; ++j) {
      if (v[j].isZero()) continue;
      rows_[r][j] = rows_[r][j] - coeff * v[j];
    }
  }
  rows_.push_back(std::move(v));
  pivotCols_.push_back(pivot);
  return true;
}

}  // namespace qaff
