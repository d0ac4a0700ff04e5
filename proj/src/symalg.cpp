#include "qaff/symalg.hpp"

#include <algorithm>
#include <utility>

#include "qaff/errors.hpp"

namespace qaff {

SymAlg::SymAlg(BimoduleSpec spec, int maxDeg)
    : bc_(std::move(spec)), maxDeg_(maxDeg) {}

const SymAlg::DegData& SymAlg::degData(Flavor f, int n) const {
  if (n < 0 || n > maxDeg_)
    throw TruncationExceeded("degree beyond configured truncation");
  auto& cache = deg_[f == Flavor::Sym ? 0 : 1];
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  DegData data;
  if (n <= 1) {
    data = buildFromRows({}, n);
  } else if (f == Flavor::Sym) {
    data = buildFromRows(bc_.kernelY(n), n);
  } else {
    // Shortcut: once a degree collapses to zero, so do all higher ones.
    if (n >= 3 && dimension(Flavor::Ext, n - 1) == 0) {
      for (const Word& w : bc_.wordsOfDegree(n)) data.rules[w] = LinComb{};
    } else {
      std::vector<LinComb> rows;
      for (int p = 0; p + 2 <= n; ++p) {
        const int q = n - 2 - p;
        for (const Word& u : bc_.wordsOfDegree(p)) {
          for (const Word& mid : bc_.wordsOfDegree(2)) {
            LinComb gen{{mid, Scalar::one()}};
            addScaled(gen, bc_.applyTau(mid, 0), Scalar::one());
            for (const Word& v : bc_.wordsOfDegree(q)) {
              LinComb row;
              for (const auto& [w, c] : gen)
                addTerm(row, concatWords(concatWords(u, w), v), c);
              rows.push_back(std::move(row));
            }
          }
        }
      }
      data = buildFromRows(rows, n);
    }
  }
  return cache.emplace(n, std::move(data)).first->second;
}

SymAlg::DegData SymAlg::buildFromRows(const std::vector<LinComb>& rows,
                                      int n) const {
  DegData data;
  auto words = bc_.wordsOfDegree(n);  // ascending lex
  if (rows.empty()) {
    data.reps = words;
    return data;
  }
  // Partition words and rows into blocks the relations cannot mix.
  std::map<Word, std::vector<Word>> blocks;
  if (bc_.multisetPreserving()) {
    for (const Word& w : words) {
      Word key = w;
      std::sort(key.begin(), key.end());
      blocks[key].push_back(w);
    }
  } else {
    blocks[Word{}] = words;
  }
  std::map<Word, std::vector<const LinComb*>> blockRows;
  for (const auto& row : rows) {
    if (row.empty()) continue;
    Word key;
    if (bc_.multisetPreserving()) {
      key = row.begin()->first;
      std::sort(key.begin(), key.end());
    }
    blockRows[key].push_back(&row);
  }
  for (const auto& [key, blockWords] : blocks) {
    std::map<Word, int> pos;
    for (size_t i = 0; i < blockWords.size(); ++i)
      pos[blockWords[i]] = static_cast<int>(i);
    auto rIt = blockRows.find(key);
    if (rIt == blockRows.end()) {
      for (const Word& w : blockWords) data.reps.push_back(w);
      continue;
    }
    std::vector<Vec> mat;
    for (const LinComb* row : rIt->second) {
      Vec v(blockWords.size(), Scalar());
      for (const auto& [w, c] : *row) {
        auto p = pos.find(w);
        if (p == pos.end())
          throw InvariantViolation("relation row leaves its block");
        v[p->second] = c;
      }
      mat.push_back(std::move(v));
    }
    // Columns scanned in descending lexicographic order.
    std::vector<int> colOrder(blockWords.size());
    for (size_t i = 0; i < colOrder.size(); ++i)
      colOrder[i] = static_cast<int>(colOrder.size() - 1 - i);
    Rref rref = rowReduce(mat, colOrder);
    std::vector<bool> isPivot(blockWords.size(), false);
    for (size_t r = 0; r < rref.rows.size(); ++r) {
      const size_t p = static_cast<size_t>(rref.pivotCols[r]);
      isPivot[p] = true;
      LinComb rule;
      for (size_t j = 0; j < blockWords.size(); ++j) {
        if (j == p) continue;
        if (!rref.rows[r][j].isZero())
          addTerm(rule, blockWords[j], -rref.rows[r][j]);
      }
      data.rules[blockWords[p]] = std::move(rule);
    }
    for (size_t j = 0; j < blockWords.size(); ++j)
      if (!isPivot[j]) data.reps.push_back(blockWords[j]);
  }
  std::sort(data.reps.begin(), data.reps.end());
  return data;
}

const std::vector<Word>& SymAlg::reps(Flavor f, int n) const {
  return degData(f, n).reps;
}

int SymAlg::dimension(Flavor f, int n) const {
  return static_cast<int>(degData(f, n).reps.size());
}

LinComb SymAlg::reduceWord(Flavor f, const Word& w) const {
  const DegData& d = degData(f, static_cast<int>(w.size()));
  auto it = d.rules.find(w);
  if (it == d.rules.end()) return LinComb{{w, Scalar::one()}};
  return it->second;
}

LinComb SymAlg::reduce(Flavor f, const LinComb& x) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, reduceWord(f, w), c);
  return out;
}

LinComb SymAlg::mul(Flavor f, const LinComb& a, const LinComb& b) const {
  LinComb out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b)
      addScaled(out, reduceWord(f, concatWords(wa, wb)), ca * cb);
  return out;
}

std::map<Grouplike, LinComb> SymAlg::coact(Flavor f, const LinComb& x) const {
  std::map<Grouplike, LinComb> out;
  for (const auto& [w, cw] : x) {
    for (const auto& [c, u, g] : bc_.coactWord(w)) {
      addScaled(out[g], reduceWord(f, u), cw * c);
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second.empty())
      it = out.erase(it);
    else
      ++it;
  }
  return out;
}

LinComb SymAlg::circ(Flavor f, const LinComb& x, const Grouplike& g) const {
  LinComb out;
  for (const auto& [w, c] : x) addScaled(out, reduce(f, bc_.circWord(w, g)), c);
  return out;
}

LinComb SymAlg::star(Flavor f, const LinComb& x) const {
  LinComb out;
  for (const auto& [w, c] : x) {
    Scalar sign = Scalar::one();
    if (f == Flavor::Ext) {
      const size_t n = w.size();
      if (((n * (n - 1) / 2) % 2) != 0) sign = -sign;
    }
    addScaled(out, reduce(f, bc_.starWord(w)), c * sign);
  }
  return out;
}

LinComb SymAlg::reversal(Flavor f, const LinComb& x) const {
  return reduce(f, bc_.applyReversal(x));
}

Scalar SymAlg::constantTerm(const LinComb& x) {
  auto it = x.find(Word{});
  return it == x.end() ? Scalar() : it->second;
}

Grouplike SymAlg::wordWeight(const Word& w) const {
  if (!spec().coactionDiagonal())
    throw InvariantViolation("word weight requires a diagonal coaction");
  Grouplike g = Grouplike::unit(spec().groupRank());
  for (uint8_t letter : w) g = g * spec().weightOf(letter);
  return g;
}

}  // namespace qaff
