#include "qaff/expr.hpp"

#include <cctype>
#include <set>

namespace qaff {

namespace {

const std::set<std::string> kSymbols = {"mu", "U",  "xi", "xis", "a",
                                        "as", "g",  "gs", "e+",  "e-"};

ExprPtr number(mpq_class v) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Number;
  n->number = std::move(v);
  n->number.canonicalize();
  return n;
}

ExprPtr symbol(std::string s) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Symbol;
  n->symbol = std::move(s);
  return n;
}

ExprPtr unary(ExprNode::Kind k, ExprPtr kid) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->kids.push_back(std::move(kid));
  return n;
}

ExprPtr binary(ExprNode::Kind k, ExprPtr l, ExprPtr r) {
  auto n = std::make_shared<ExprNode>();
  n->kind = k;
  n->kids.push_back(std::move(l));
  n->kids.push_back(std::move(r));
  return n;
}

ExprPtr power(ExprPtr base, long e) {
  auto n = std::make_shared<ExprNode>();
  n->kind = ExprNode::Kind::Pow;
  n->exponent = e;
  n->kids.push_back(std::move(base));
  return n;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ExprPtr run() {
    ExprPtr e = parseSum();
    skipSpace();
    if (pos_ != s_.size()) fail("an operator or the end of the input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError(pos_, expected,
                      "syntax error at offset " + std::to_string(pos_) +
                          ": expected " + expected);
  }

  void skipSpace() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool peekIs(char c) {
    skipSpace();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool consume(char c) {
    if (!peekIs(c)) return false;
    ++pos_;
    return true;
  }

  ExprPtr parseSum() {
    ExprPtr node = parseTerm();
    for (;;) {
      if (consume('+')) {
        node = binary(ExprNode::Kind::Add, node, parseTerm());
      } else if (consume('-')) {
        node = binary(ExprNode::Kind::Sub, node, parseTerm());
      } else {
        return node;
      }
    }
  }

  ExprPtr parseTerm() {
    ExprPtr node = parseFactor();
    while (consume('*')) node = binary(ExprNode::Kind::Mul, node, parseFactor());
    return node;
  }

  ExprPtr parseFactor() {
    if (consume('-')) {
      ExprPtr kid = parseFactor();
      if (kid->kind == ExprNode::Kind::Number) return number(-kid->number);
      return unary(ExprNode::Kind::Neg, kid);
    }
    ExprPtr atom = parseAtom();
    if (consume('^')) return power(std::move(atom), parseExponent());
    return atom;
  }

  long parseExponent() {
    skipSpace();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < s_.size() && s_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      pos_ = start;
      fail("an integer exponent");
    }
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      v = v * 10 + (s_[pos_++] - '0');
    return neg ? -v : v;
  }

  ExprPtr parseAtom() {
    skipSpace();
    if (pos_ >= s_.size()) fail("a number, a symbol, '-', or '('");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = parseSum();
      skipSpace();
      if (!consume(')')) fail("')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parseNumber();
    if (std::isalpha(static_cast<unsigned char>(c))) return parseSymbol();
    fail("a number, a symbol, '-', or '('");
  }

  ExprPtr parseNumber() {
    std::string digits;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      digits += s_[pos_++];
    // A rational literal "p/q"; '/' only continues a literal when followed
    // by a digit, so it never doubles as an operator.
    if (pos_ + 1 < s_.size() && s_[pos_] == '/' &&
        std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      size_t denStart = pos_;
      std::string den;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        den += s_[pos_++];
      if (den.find_first_not_of('0') == std::string::npos) {
        pos_ = denStart;
        fail("a nonzero denominator");
      }
      return number(mpq_class(digits + "/" + den));
    }
    return number(mpq_class(digits));
  }

  ExprPtr parseSymbol() {
    size_t start = pos_;
    std::string name;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      name += s_[pos_++];
    if (name == "e" && pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-'))
      name += s_[pos_++];
    if (!kSymbols.count(name)) {
      pos_ = start;
      fail("one of mu, U, xi, xis, a, as, g, gs, e+, e-");
    }
    return symbol(name);
  }

  const std::string& s_;
  size_t pos_ = 0;
};

bool needsParensInPow(const ExprNode& base) {
  if (base.kind == ExprNode::Kind::Symbol) return false;
  if (base.kind == ExprNode::Kind::Number) return base.number < 0;
  return true;
}

void print(const ExprPtr& e, std::string& out);

void printWrapped(const ExprPtr& e, bool wrap, std::string& out) {
  if (wrap) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

bool isSum(const ExprNode& n) {
  return n.kind == ExprNode::Kind::Add || n.kind == ExprNode::Kind::Sub;
}

void print(const ExprPtr& e, std::string& out) {
  switch (e->kind) {
    case ExprNode::Kind::Number:
      out += e->number.get_str();
      return;
    case ExprNode::Kind::Symbol:
      out += e->symbol;
      return;
    case ExprNode::Kind::Pow:
      printWrapped(e->kids[0], needsParensInPow(*e->kids[0]), out);
      out += '^';
      out += std::to_string(e->exponent);
      return;
    case ExprNode::Kind::Neg:
      out += '-';
      printWrapped(e->kids[0], isSum(*e->kids[0]), out);
      return;
    case ExprNode::Kind::Mul: {
      const ExprNode& l = *e->kids[0];
      const ExprNode& r = *e->kids[1];
      printWrapped(e->kids[0], isSum(l) || l.kind == ExprNode::Kind::Neg, out);
      out += '*';
      printWrapped(e->kids[1],
                   isSum(r) || r.kind == ExprNode::Kind::Neg ||
                       (r.kind == ExprNode::Kind::Number && r.number < 0),
                   out);
      return;
    }
    case ExprNode::Kind::Add:
    case ExprNode::Kind::Sub: {
      print(e->kids[0], out);
      out += e->kind == ExprNode::Kind::Add ? " + " : " - ";
      const ExprNode& r = *e->kids[1];
      printWrapped(e->kids[1],
                   isSum(r) || r.kind == ExprNode::Kind::Neg ||
                       (r.kind == ExprNode::Kind::Number && r.number < 0),
                   out);
      return;
    }
  }
}

void collectSymbols(const ExprPtr& e, std::set<std::string>& out) {
  if (e->kind == ExprNode::Kind::Symbol) out.insert(e->symbol);
  for (const auto& k : e->kids) collectSymbols(k, out);
}

// Generic evaluation over any algebra presented by callbacks.
template <typename V, typename Ops>
V evalWith(const ExprPtr& e, const Ops& ops) {
  switch (e->kind) {
    case ExprNode::Kind::Number:
      return ops.ofNumber(e->number);
    case ExprNode::Kind::Symbol:
      return ops.ofSymbol(e->symbol, 1);
    case ExprNode::Kind::Pow: {
      const ExprPtr& base = e->kids[0];
      long n = e->exponent;
      if (base->kind == ExprNode::Kind::Number) {
        if (base->number == 0 && n < 0)
          throw std::invalid_argument("zero cannot be raised to a negative power");
        mpq_class v = 1;
        mpq_class b = base->number;
        for (long i = 0; i < (n < 0 ? -n : n); ++i) v *= b;
        if (n < 0) v = 1 / v;
        return ops.ofNumber(v);
      }
      if (base->kind == ExprNode::Kind::Symbol)
        return ops.ofSymbol(base->symbol, n);
      if (n < 0)
        throw std::invalid_argument("negative powers need an invertible base");
      V acc = ops.unit();
      V b = evalWith<V>(base, ops);
      for (long i = 0; i < n; ++i) acc = ops.mul(acc, b);
      return acc;
    }
    case ExprNode::Kind::Neg:
      return ops.negate(evalWith<V>(e->kids[0], ops));
    case ExprNode::Kind::Mul:
      return ops.mul(evalWith<V>(e->kids[0], ops), evalWith<V>(e->kids[1], ops));
    case ExprNode::Kind::Add:
      return ops.add(evalWith<V>(e->kids[0], ops),
                     evalWith<V>(e->kids[1], ops));
    case ExprNode::Kind::Sub:
      return ops.add(evalWith<V>(e->kids[0], ops),
                     ops.negate(evalWith<V>(e->kids[1], ops)));
  }
  throw std::invalid_argument("malformed expression tree");
}

Scalar powerSymbolScalar(const Mu& mode, const std::string& s, long n) {
  if (s == "mu") return Scalar::muPow(mode, n);
  throw std::invalid_argument("symbol '" + s + "' is not a scalar");
}

}  // namespace

ExprPtr parseExpr(const std::string& input) { return Parser(input).run(); }

std::string printExpr(const ExprPtr& e) {
  std::string out;
  print(e, out);
  return out;
}

bool exprEqual(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprNode::Kind::Number:
      return a->number == b->number;
    case ExprNode::Kind::Symbol:
      return a->symbol == b->symbol;
    case ExprNode::Kind::Pow:
      if (a->exponent != b->exponent) return false;
      break;
    default:
      break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!exprEqual(a->kids[i], b->kids[i])) return false;
  return true;
}

ExprTarget exprTarget(const ExprPtr& e) {
  std::set<std::string> syms;
  collectSymbols(e, syms);
  bool hasExt = syms.count("e+") || syms.count("e-");
  bool hasBase = syms.count("a") || syms.count("as") || syms.count("g") ||
                 syms.count("gs");
  bool hasGroup = syms.count("U");
  if (hasExt || hasBase) {
    if (hasGroup)
      throw std::invalid_argument(
          "U cannot be combined with base or exterior generators");
    return hasExt ? ExprTarget::Horizontal : ExprTarget::Bundle;
  }
  return ExprTarget::Affine;
}

Scalar evalScalarExpr(const ExprPtr& e, const Mu& mode) {
  struct Ops {
    const Mu& mode;
    Scalar ofNumber(const mpq_class& v) const { return Scalar::ofRat(v); }
    Scalar ofSymbol(const std::string& s, long n) const {
      return powerSymbolScalar(mode, s, n);
    }
    Scalar unit() const { return Scalar::one(); }
    Scalar mul(const Scalar& a, const Scalar& b) const { return a * b; }
    Scalar add(const Scalar& a, const Scalar& b) const { return a + b; }
    Scalar negate(const Scalar& a) const { return Scalar::ofInt(0) - a; }
  } ops{mode};
  return evalWith<Scalar>(e, ops);
}

AffComb evalAffineExpr(const ExprPtr& e, const AffineAlg& A, const Mu& mode) {
  struct Ops {
    const AffineAlg& A;
    const Mu& mode;
    AffComb scaled(const AffComb& x, const Scalar& c) const {
      AffComb out;
      addAffScaled(out, x, c);
      return out;
    }
    AffComb ofNumber(const mpq_class& v) const {
      return scaled(A.unit(), Scalar::ofRat(v));
    }
    AffComb ofSymbol(const std::string& s, long n) const {
      if (s == "mu") return scaled(A.unit(), Scalar::muPow(mode, n));
      if (s == "U") return A.ofGroup(Grouplike::U(n));
      AffComb base;
      if (s == "xi") {
        base = A.ofSym(LinComb{{Word{0}, Scalar::one()}});
      } else if (s == "xis") {
        base = A.ofSym(LinComb{{Word{1}, Scalar::muPow(mode, 1)}});
      } else {
        throw std::invalid_argument("symbol '" + s +
                                    "' does not live in the affine algebra");
      }
      if (n < 0)
        throw std::invalid_argument("negative powers need an invertible base");
      AffComb acc = A.unit();
      for (long i = 0; i < n; ++i) acc = A.mul(acc, base);
      return acc;
    }
    AffComb unit() const { return A.unit(); }
    AffComb mul(const AffComb& a, const AffComb& b) const { return A.mul(a, b); }
    AffComb add(const AffComb& a, const AffComb& b) const {
      AffComb out = a;
      addAffScaled(out, b, Scalar::one());
      return out;
    }
    AffComb negate(const AffComb& a) const {
      return scaled(a, Scalar::ofInt(-1));
    }
  } ops{A, mode};
  return evalWith<AffComb>(e, ops);
}

BtElem evalBundleExpr(const ExprPtr& e, const BundleAlg& P) {
  struct Ops {
    const BundleAlg& P;
    BtElem scaled(const BtElem& x, const Scalar& c) const {
      BtElem out;
      for (const auto& [k, v] : x) addInto(out, k, v * c);
      return out;
    }
    BtElem ofNumber(const mpq_class& v) const {
      return scaled(P.btUnit(), Scalar::ofRat(v));
    }
    BtElem ofSymbol(const std::string& s, long n) const {
      if (s == "mu") return scaled(P.btUnit(), Scalar::muPow(P.mode(), n));
      BtElem base;
      if (s == "a") {
        base = P.btOfB(P.su2().alpha());
      } else if (s == "as") {
        base = P.btOfB(P.su2().alphaStar());
      } else if (s == "g") {
        base = P.btOfB(P.su2().gamma());
      } else if (s == "gs") {
        base = P.btOfB(P.su2().gammaStar());
      } else if (s == "xi") {
        base = P.btOfSym(LinComb{{Word{0}, Scalar::one()}});
      } else if (s == "xis") {
        base = P.btOfSym(LinComb{{Word{1}, Scalar::muPow(P.mode(), 1)}});
      } else {
        throw std::invalid_argument("symbol '" + s +
                                    "' does not live in the bundle algebra");
      }
      if (n < 0)
        throw std::invalid_argument("negative powers need an invertible base");
      BtElem acc = P.btUnit();
      for (long i = 0; i < n; ++i) acc = P.btMul(acc, base);
      return acc;
    }
    BtElem unit() const { return P.btUnit(); }
    BtElem mul(const BtElem& a, const BtElem& b) const { return P.btMul(a, b); }
    BtElem add(const BtElem& a, const BtElem& b) const {
      BtElem out = a;
      for (const auto& [k, c] : b) addInto(out, k, c);
      return out;
    }
    BtElem negate(const BtElem& a) const { return scaled(a, Scalar::ofInt(-1)); }
  } ops{P};
  return evalWith<BtElem>(e, ops);
}

AhElem evalHorizontalExpr(const ExprPtr& e, const BundleAlg& P) {
  struct Ops {
    const BundleAlg& P;
    AhElem scaled(const AhElem& x, const Scalar& c) const {
      AhElem out;
      for (const auto& [k, v] : x) addInto(out, k, v * c);
      return out;
    }
    AhElem ofNumber(const mpq_class& v) const {
      return scaled(P.ahUnit(), Scalar::ofRat(v));
    }
    AhElem ofSymbol(const std::string& s, long n) const {
      if (s == "mu") return scaled(P.ahUnit(), Scalar::muPow(P.mode(), n));
      AhElem base;
      if (s == "a") {
        base = P.ahOfBt(P.btOfB(P.su2().alpha()));
      } else if (s == "as") {
        base = P.ahOfBt(P.btOfB(P.su2().alphaStar()));
      } else if (s == "g") {
        base = P.ahOfBt(P.btOfB(P.su2().gamma()));
      } else if (s == "gs") {
        base = P.ahOfBt(P.btOfB(P.su2().gammaStar()));
      } else if (s == "xi") {
        base = P.ahOfSym(LinComb{{Word{0}, Scalar::one()}});
      } else if (s == "xis") {
        base = P.ahOfSym(LinComb{{Word{1}, Scalar::muPow(P.mode(), 1)}});
      } else if (s == "e+") {
        base = P.ahOfExt(LinComb{{Word{0}, Scalar::one()}});
      } else if (s == "e-") {
        base = P.ahOfExt(LinComb{{Word{1}, Scalar::one()}});
      } else {
        throw std::invalid_argument("symbol '" + s +
                                    "' does not live in the horizontal algebra");
      }
      if (n < 0)
        throw std::invalid_argument("negative powers need an invertible base");
      AhElem acc = P.ahUnit();
      for (long i = 0; i < n; ++i) acc = P.ahMul(acc, base);
      return acc;
    }
    AhElem unit() const { return P.ahUnit(); }
    AhElem mul(const AhElem& a, const AhElem& b) const { return P.ahMul(a, b); }
    AhElem add(const AhElem& a, const AhElem& b) const {
      AhElem out = a;
      for (const auto& [k, c] : b) addInto(out, k, c);
      return out;
    }
    AhElem negate(const AhElem& a) const { return scaled(a, Scalar::ofInt(-1)); }
  } ops{P};
  return evalWith<AhElem>(e, ops);
}

}  // namespace qaff
