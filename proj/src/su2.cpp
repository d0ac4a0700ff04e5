#include "qaff/su2.hpp"

namespace qaff {

std::string SU2Mono::str() const {
  if (isUnit()) return "1";
  std::string s;
  auto piece = [&s](const char* name, long p) {
    if (p == 0) return;
    if (!s.empty()) s += "*";
    s += name;
    if (p != 1) s += "^" + std::to_string(p);
  };
  if (a > 0) piece("a", a);
  if (a < 0) piece("as", -a);
  piece("g", m);
  piece("gs", n);
  return s;
}

const SU2Element& SU2Alg::powerProduct(long a, long b) const {
  auto key = std::make_pair(a, b);
  auto it = ppCache_.find(key);
  if (it != ppCache_.end()) return it->second;
  SU2Element out;
  if (a == 0 || b == 0 || (a > 0) == (b > 0)) {
    out = of(SU2Mono{a + b, 0, 0});
  } else if (a > 0) {
    // alpha^a (alpha*)^{-b}: peel one alpha alpha* = 1 - mu^2 gamma gamma*,
    // pushing the correction right through (alpha*)^{-b-1}.
    const SU2Element& rest = powerProduct(a - 1, b + 1);
    Scalar corr = -Scalar::muPow(mode_, static_cast<int>(2 * (-b)));
    out = rest;
    for (const auto& [k, c] : rest)
      addMono(out, SU2Mono{k.a, k.m + 1, k.n + 1}, c * corr);
  } else {
    // (alpha*)^{-a} alpha^b: peel one alpha* alpha = 1 - gamma gamma*,
    // pushing the correction right through alpha^{b-1}.
    const SU2Element& rest = powerProduct(a + 1, b - 1);
    Scalar corr = -Scalar::muPow(mode_, static_cast<int>(-2 * (b - 1)));
    out = rest;
    for (const auto& [k, c] : rest)
      addMono(out, SU2Mono{k.a, k.m + 1, k.n + 1}, c * corr);
  }
  return ppCache_.emplace(key, std::move(out)).first->second;
}

SU2Element SU2Alg::mul(const SU2Mono& x, const SU2Mono& y) const {
  // Move y's alpha-part left through x's gammas.
  Scalar phase =
      Scalar::muPow(mode_, static_cast<int>(-y.a * (x.m + x.n)));
  SU2Element out;
  for (const auto& [k, c] : powerProduct(x.a, y.a))
    addMono(out, SU2Mono{k.a, x.m + y.m + k.m, x.n + y.n + k.n}, c * phase);
  return out;
}

SU2Element SU2Alg::mul(const SU2Element& x, const SU2Element& y) const {
  SU2Element out;
  for (const auto& [kx, cx] : x)
    for (const auto& [ky, cy] : y) addMonoScaled(out, mul(kx, ky), cx * cy);
  return out;
}

SU2Element SU2Alg::star(const SU2Element& x) const {
  SU2Element out;
  for (const auto& [k, c] : x) {
    Scalar phase =
        Scalar::muPow(mode_, static_cast<int>(k.a * (k.m + k.n)));
    addMono(out, SU2Mono{-k.a, k.n, k.m}, c * phase);
  }
  return out;
}

Scalar SU2Alg::counit(const SU2Element& x) const {
  Scalar out;
  for (const auto& [k, c] : x)
    if (k.m == 0 && k.n == 0) out += c;
  return out;
}

BaseElement SU2Alg::project(const SU2Element& x) const {
  BaseElement out = BaseElement::of(Grouplike::unit(1), Scalar());
  for (const auto& [k, c] : x)
    if (k.m == 0 && k.n == 0)
      out = out + BaseElement::of(Grouplike::U(k.a), c);
  return out;
}

std::string SU2Alg::str(const SU2Element& x) const {
  if (x.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : x) {
    if (!first) s += " + ";
    first = false;
    s += "(" + c.str() + ")*" + k.str();
  }
  return s;
}

std::vector<SU2Mono> SU2Alg::monosUpToDegree(int d) const {
  std::vector<SU2Mono> out;
  for (long a = -d; a <= d; ++a) {
    const int rest = d - static_cast<int>(a >= 0 ? a : -a);
    for (int m = 0; m <= rest; ++m)
      for (int n = 0; m + n <= rest; ++n) out.push_back(SU2Mono{a, m, n});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qaff
