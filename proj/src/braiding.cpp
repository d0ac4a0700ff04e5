#include "qaff/braiding.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qaff/errors.hpp"

namespace qaff {

namespace {
constexpr size_t kDenseCap = 4096;  // largest dense word space we will touch
}

BraidCalc::BraidCalc(BimoduleSpec spec)
    : spec_(std::move(spec)),
      braid_(spec_.dim() * spec_.dim(), spec_.dim() * spec_.dim()) {
  const int d = spec_.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const int col = i * d + j;
      for (const auto& t : spec_.coactionOf(j)) {
        for (const auto& br : spec_.actionBranches(i, t.grp)) {
          braid_.at(t.vec * d + br.vec, col) += t.coeff * br.coeff;
        }
      }
    }
  }
  multisetPreserving_ = true;
  for (int i = 0; i < d && multisetPreserving_; ++i) {
    for (int j = 0; j < d && multisetPreserving_; ++j) {
      const int col = i * d + j;
      const int lo = std::min(i, j), hi = std::max(i, j);
      for (int r = 0; r < d * d; ++r) {
        if (braid_.at(r, col).isZero()) continue;
        const int a = r / d, b = r % d;
        if (std::min(a, b) != lo || std::max(a, b) != hi) {
          multisetPreserving_ = false;
          break;
        }
      }
    }
  }
}

const Matrix& BraidCalc::braidInverse() const {
  if (!braidInvReady_) {
    braidInv_ = braid_.inverse();
    braidInvReady_ = true;
  }
  return braidInv_;
}

LinComb BraidCalc::applyTau(const Word& w, int pos) const {
  const int d = dim();
  if (pos < 0 || pos + 1 >= static_cast<int>(w.size()))
    throw InvariantViolation("braid position out of range");
  const int col = w[pos] * d + w[pos + 1];
  LinComb out;
  for (int r = 0; r < d * d; ++r) {
    const Scalar& c = braid_.at(r, col);
    if (c.isZero()) continue;
    Word u = w;
    u[pos] = static_cast<uint8_t>(r / d);
    u[pos + 1] = static_cast<uint8_t>(r % d);
    addTerm(out, u, c);
  }
  return out;
}

LinComb BraidCalc::applyTau(const LinComb& x, int pos) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, applyTau(w, pos), c);
  return out;
}

LinComb BraidCalc::applyTauInv(const LinComb& x, int pos) const {
  const int d = dim();
  const Matrix& inv = braidInverse();
  LinComb out;
  for (const auto& [w, cw] : x) {
    const int col = w[pos] * d + w[pos + 1];
    for (int r = 0; r < d * d; ++r) {
      const Scalar& c = inv.at(r, col);
      if (c.isZero()) continue;
      Word u = w;
      u[pos] = static_cast<uint8_t>(r / d);
      u[pos + 1] = static_cast<uint8_t>(r % d);
      addTerm(out, u, cw * c);
    }
  }
  return out;
}

std::vector<int> BraidCalc::identityPerm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

std::vector<int> BraidCalc::longestPerm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

std::vector<int> BraidCalc::inversePerm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

std::vector<std::vector<int>> BraidCalc::allPerms(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> p = identityPerm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<std::vector<int>> BraidCalc::shuffles(int k, int l) {
  const int n = k + l;
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> perm(n);
    std::vector<bool> used(n, false);
    for (int i = 0; i < k; ++i) {
      perm[i] = pick[i];
      used[pick[i]] = true;
    }
    int pos = k;
    for (int v = 0; v < n; ++v)
      if (!used[v]) perm[pos++] = v;
    out.push_back(std::move(perm));
    // next combination
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::vector<int> BraidCalc::reducedWordOf(std::vector<int> perm,
                                          DescentStrategy strategy) {
  std::vector<int> collected;
  const int n = static_cast<int>(perm.size());
  while (true) {
    int pos = -1;
    if (strategy == DescentStrategy::Smallest) {
      for (int i = 0; i + 1 < n; ++i)
        if (perm[i] > perm[i + 1]) {
          pos = i;
          break;
        }
    } else {
      for (int i = n - 2; i >= 0; --i)
        if (perm[i] > perm[i + 1]) {
          pos = i;
          break;
        }
    }
    if (pos < 0) break;
    std::swap(perm[pos], perm[pos + 1]);
    collected.push_back(pos);
  }
  std::reverse(collected.begin(), collected.end());
  return collected;
}

LinComb BraidCalc::applyPermLift(const std::vector<int>& perm, const LinComb& x,
                                 DescentStrategy strategy) const {
  std::vector<int> word = reducedWordOf(perm, strategy);
  LinComb cur = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    cur = applyTau(cur, *it);
  return cur;
}

LinComb BraidCalc::applyReversal(const LinComb& x) const {
  LinComb out;
  for (const auto& [w, c] : x) {
    LinComb one{{w, c}};
    addScaled(out, applyPermLift(longestPerm(static_cast<int>(w.size())), one),
              Scalar::one());
  }
  return out;
}

LinComb BraidCalc::applyY(const Word& w) const {
  const int n = static_cast<int>(w.size());
  if (n <= 1) return LinComb{{w, Scalar::one()}};
  auto it = yCache_.find(w);
  if (it != yCache_.end()) return it->second;
  Word rest(w.begin() + 1, w.end());
  LinComb inner;
  for (const auto& [u, c] : applyY(rest)) {
    Word full;
    full.reserve(w.size());
    full.push_back(w[0]);
    full.insert(full.end(), u.begin(), u.end());
    addTerm(inner, full, c);
  }
  LinComb out;
  for (const auto& perm : shuffles(1, n - 1))
    addScaled(out, applyPermLift(perm, inner), Scalar::one());
  return yCache_.emplace(w, std::move(out)).first->second;
}

LinComb BraidCalc::applyY(const LinComb& x) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, applyY(w), c);
  return out;
}

LinComb BraidCalc::applyYkl(int k, int l, const LinComb& x) const {
  LinComb out;
  for (const auto& perm : shuffles(k, l))
    addScaled(out, applyPermLift(perm, x), Scalar::one());
  return out;
}

LinComb BraidCalc::applyMkl(int k, int l, const LinComb& x) const {
  LinComb out;
  for (const auto& perm : shuffles(k, l))
    addScaled(out, applyPermLift(inversePerm(perm), x), Scalar::one());
  return out;
}

LinComb BraidCalc::applyYTensorY(int k, int l, const Word& w) const {
  if (static_cast<int>(w.size()) != k + l)
    throw InvariantViolation("word length must be k+l");
  Word a(w.begin(), w.begin() + k), b(w.begin() + k, w.end());
  LinComb out;
  for (const auto& [wa, ca] : applyY(a))
    for (const auto& [wb, cb] : applyY(b))
      addTerm(out, concatWords(wa, wb), ca * cb);
  return out;
}

LinComb BraidCalc::starWord(const Word& w) const {
  LinComb cur{{Word{}, Scalar::one()}};
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    LinComb next;
    for (const auto& [u, c] : cur) {
      for (const auto& br : spec_.starBranches(*it)) {
        Word v = u;
        v.push_back(static_cast<uint8_t>(br.vec));
        addTerm(next, v, c * br.coeff);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

LinComb BraidCalc::starComb(const LinComb& x) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, starWord(w), c);
  return out;
}

std::vector<std::tuple<Scalar, Word, Grouplike>> BraidCalc::coactWord(
    const Word& w) const {
  std::vector<std::tuple<Scalar, Word, Grouplike>> cur = {
      {Scalar::one(), Word{}, Grouplike::unit(spec_.groupRank())}};
  for (uint8_t letter : w) {
    std::vector<std::tuple<Scalar, Word, Grouplike>> next;
    for (const auto& [c, u, g] : cur) {
      for (const auto& t : spec_.coactionOf(letter)) {
        Word v = u;
        v.push_back(static_cast<uint8_t>(t.vec));
        next.emplace_back(c * t.coeff, std::move(v), g * t.grp);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

LinComb BraidCalc::circWord(const Word& w, const Grouplike& g) const {
  LinComb cur{{Word{}, Scalar::one()}};
  for (uint8_t letter : w) {
    LinComb next;
    for (const auto& [u, c] : cur) {
      for (const auto& br : spec_.actionBranches(letter, g)) {
        Word v = u;
        v.push_back(static_cast<uint8_t>(br.vec));
        addTerm(next, v, c * br.coeff);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

LinComb BraidCalc::circComb(const LinComb& x, const Grouplike& g) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, circWord(w, g), c);
  return out;
}

std::vector<Word> BraidCalc::wordsOfDegree(int n) const {
  const int d = dim();
  std::vector<Word> out;
  Word w(n, 0);
  while (true) {
    out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[i] == d - 1) {
      w[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  if (n == 0) out.assign(1, Word{});
  return out;
}

size_t BraidCalc::wordIndex(const Word& w, int d) {
  size_t idx = 0;
  for (uint8_t letter : w) idx = idx * d + letter;
  return idx;
}

Matrix BraidCalc::denseMatrix(const std::function<LinComb(const Word&)>& f,
                              int n) const {
  const int d = dim();
  size_t dimN = 1;
  for (int i = 0; i < n; ++i) dimN *= d;
  if (dimN > kDenseCap) throw TruncationExceeded("dense word space too large");
  Matrix m(static_cast<int>(dimN), static_cast<int>(dimN));
  auto words = wordsOfDegree(n);
  for (const Word& w : words) {
    const int col = static_cast<int>(wordIndex(w, d));
    for (const auto& [u, c] : f(w))
      m.at(static_cast<int>(wordIndex(u, d)), col) += c;
  }
  return m;
}

std::vector<LinComb> BraidCalc::kernelY(int n) const {
  const int d = dim();
  auto words = wordsOfDegree(n);
  // Partition into blocks the symmetrizer cannot mix.
  std::map<Word, std::vector<Word>> blocks;
  if (multisetPreserving_) {
    for (const Word& w : words) {
      Word key = w;
      std::sort(key.begin(), key.end());
      blocks[key].push_back(w);
    }
  } else {
    size_t dimN = 1;
    for (int i = 0; i < n; ++i) dimN *= d;
    if (dimN > kDenseCap)
      throw TruncationExceeded("kernel too large without multiset blocks");
    blocks[Word{}] = words;
  }
  std::vector<LinComb> rows;
  for (const auto& [key, blockWords] : blocks) {
    std::map<Word, int> pos;
    for (size_t i = 0; i < blockWords.size(); ++i)
      pos[blockWords[i]] = static_cast<int>(i);
    const int m = static_cast<int>(blockWords.size());
    Matrix mat(m, m);
    for (int col = 0; col < m; ++col) {
      for (const auto& [u, c] : applyY(blockWords[col])) {
        auto it = pos.find(u);
        if (it == pos.end())
          throw InvariantViolation("symmetrizer left its block");
        mat.at(it->second, col) += c;
      }
    }
    for (const Vec& v : mat.kernelBasis()) {
      LinComb row;
      for (int i = 0; i < m; ++i) addTerm(row, blockWords[i], v[i]);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace qaff
