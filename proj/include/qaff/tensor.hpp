#pragma once
/*
 * Tensor words over a finite basis and formal linear combinations of them.
 *
 * A Word lists basis indices of a pure tensor; a LinComb maps words of
 * arbitrary (possibly mixed) degree to scalar coefficients, dropping zeros.
 */

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qaff/scalar.hpp"

namespace qaff {

using Word = std::vector<uint8_t>;
using LinComb = std::map<Word, Scalar>;

inline void addTerm(LinComb& acc, const Word& w, const Scalar& c) {
  if (c.isZero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.isZero()) acc.erase(it);
  }
}

inline void addScaled(LinComb& acc, const LinComb& x, const Scalar& c) {
  if (c.isZero()) return;
  for (const auto& [w, cw] : x) addTerm(acc, w, cw * c);
}

inline LinComb scaleComb(const LinComb& x, const Scalar& c) {
  LinComb out;
  addScaled(out, x, c);
  return out;
}

inline LinComb subComb(const LinComb& a, const LinComb& b) {
  LinComb out = a;
  addScaled(out, b, -Scalar::one());
  return out;
}

inline Word concatWords(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

inline std::string wordStr(const Word& w, const std::vector<std::string>& labels) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += labels[w[i]];
  }
  return s;
}

inline std::string combStr(const LinComb& x, const std::vector<std::string>& labels) {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [w, c] : x) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")*" + wordStr(w, labels);
  }
  return s;
}

}  // namespace qaff
