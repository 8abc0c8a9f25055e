#include "rescat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

#include "rescat/errors.hpp"

namespace rescat {

Limits& limits() {
  static Limits l;
  return l;
}

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::shared_ptr<const std::vector<uint32_t>> inverse_table(uint32_t p) {
  static std::mutex mu;
  static std::map<uint32_t, std::shared_ptr<const std::vector<uint32_t>>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto it = tables.find(p);
  if (it != tables.end()) return it->second;
  auto t = std::make_shared<std::vector<uint32_t>>(p, 0);
  if (p > 1) (*t)[1] = 1;
  for (uint32_t a = 2; a < p; ++a) {
    (*t)[a] = static_cast<uint32_t>((p - static_cast<uint64_t>(p / a) * (*t)[p % a] % p) % p);
  }
  tables[p] = t;
  return t;
}

}  // namespace

PolyRing::PolyRing(uint32_t p, std::vector<std::string> names, std::vector<int> weights)
    : p_(p), names_(std::move(names)), weights_(std::move(weights)) {
  if (!is_prime(p_) || p_ >= (1u << 16)) throw InputError("characteristic must be a prime below 65536");
  if (names_.size() != weights_.size()) throw InputError("variable names and degrees differ in length");
  if (names_.size() > static_cast<size_t>(kMaxVars)) throw InputError("at most 16 variables are supported");
  for (int w : weights_)
    if (w <= 0) throw InputError("variable degrees must be positive");
  inverse_ = inverse_table(p_);
}

int PolyRing::var_index(std::string_view name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

uint32_t PolyRing::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<uint32_t>(r);
}

Monomial PolyRing::var(int i, int power) const {
  Monomial m;
  m.e[i] = static_cast<uint16_t>(power);
  m.deg = weights_[i] * power;
  return m;
}

int PolyRing::degree_of(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < nvars(); ++i) d += weights_[i] * m.e[i];
  return d;
}

Monomial PolyRing::mul(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] + b.e[i]);
  r.deg = a.deg + b.deg;
  return r;
}

Monomial PolyRing::div(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) r.e[i] = static_cast<uint16_t>(a.e[i] - b.e[i]);
  r.deg = a.deg - b.deg;
  return r;
}

Monomial PolyRing::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r;
  for (int i = 0; i < nvars(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  r.deg = degree_of(r);
  return r;
}

bool PolyRing::divides(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

bool PolyRing::coprime(const Monomial& a, const Monomial& b) const {
  for (int i = 0; i < nvars(); ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

uint32_t PolyRing::divmask(const Monomial& m) const {
  uint32_t mask = 0;
  for (int i = 0; i < nvars(); ++i) {
    if (m.e[i] > 0) mask |= 1u << (2 * i);
    if (m.e[i] > 1) mask |= 1u << (2 * i + 1);
  }
  return mask;
}

int PolyRing::cmp(const Monomial& a, const Monomial& b) const {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (int i = nvars() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  return 0;
}

bool PolyRing::same_as(const PolyRing& o) const {
  return this == &o || (p_ == o.p_ && names_ == o.names_ && weights_ == o.weights_);
}

std::shared_ptr<const PolyRing> PolyRing::extended(const std::vector<std::string>& names,
                                                   const std::vector<int>& weights) const {
  auto n = names_;
  auto w = weights_;
  n.insert(n.end(), names.begin(), names.end());
  w.insert(w.end(), weights.begin(), weights.end());
  return std::make_shared<PolyRing>(p_, n, w);
}

std::string PolyRing::format_monomial(const Monomial& m) const {
  std::string out;
  for (int i = 0; i < nvars(); ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names_[i];
    if (m.e[i] > 1) out += '^' + std::to_string(m.e[i]);
  }
  return out;
}

std::string PolyRing::format(const Poly& f) const {
  if (f.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < f.size(); ++k) {
    if (k) out += " + ";
    const Term& t = f[k];
    std::string mon = format_monomial(t.m);
    if (mon.empty()) {
      out += std::to_string(t.c);
    } else if (t.c == 1) {
      out += mon;
    } else {
      out += std::to_string(t.c) + '*' + mon;
    }
  }
  return out;
}

int TermOrder::elim_degree(const Monomial& m) const {
  int d = 0;
  for (int i = 0; i < ring->nvars(); ++i)
    if (elim_mask & (1u << i)) d += ring->weights()[i] * m.e[i];
  return d;
}

int TermOrder::cmp(const Monomial& a, uint32_t ca, const Monomial& b, uint32_t cb) const {
  if (!block.empty()) {
    int ba = blk(ca), bb = blk(cb);
    if (ba != bb) return ba < bb ? -1 : 1;
  }
  if (elim_mask) {
    int ea = elim_degree(a), eb = elim_degree(b);
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  int da = a.deg + tw(ca), db = b.deg + tw(cb);
  if (da != db) return da < db ? -1 : 1;
  for (int i = ring->nvars() - 1; i >= 0; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? -1 : 1;
  }
  if (ca != cb) return ca < cb ? 1 : -1;
  return 0;
}

void normalize(Vec& v, const TermOrder& ord) {
  std::sort(v.begin(), v.end(), [&](const Term& a, const Term& b) { return ord.cmp(a, b) > 0; });
  Vec out;
  out.reserve(v.size());
  for (const Term& t : v) {
    if (!out.empty() && out.back().comp == t.comp && out.back().m == t.m) {
      out.back().c = ord.ring->add(out.back().c, t.c);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.c == 0; });
  v = std::move(out);
}

void resort(Vec& v, const TermOrder& ord) { normalize(v, ord); }

namespace {

template <class F>
Vec merge(const Vec& a, const Vec& b, const TermOrder& ord, F&& bcoef) {
  Vec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  const PolyRing& R = *ord.ring;
  while (i < a.size() && j < b.size()) {
    int c = ord.cmp(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Term t = b[j++];
      t.c = bcoef(t.c);
      if (t.c) out.push_back(t);
    } else {
      Term t = a[i++];
      t.c = R.add(t.c, bcoef(b[j++].c));
      if (t.c) out.push_back(t);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    Term t = b[j];
    t.c = bcoef(t.c);
    if (t.c) out.push_back(t);
  }
  return out;
}

}  // namespace

Vec add(const Vec& a, const Vec& b, const TermOrder& ord) {
  return merge(a, b, ord, [](uint32_t c) { return c; });
}

Vec sub(const Vec& a, const Vec& b, const TermOrder& ord) {
  const PolyRing& R = *ord.ring;
  return merge(a, b, ord, [&](uint32_t c) { return R.neg(c); });
}

Vec scale(const Vec& a, uint32_t c, const PolyRing& R) {
  if (c == 0) return {};
  Vec out = a;
  for (Term& t : out) t.c = R.mul(t.c, c);
  return out;
}

Vec mul_term(const Vec& a, uint32_t c, const Monomial& m, const PolyRing& R) {
  if (c == 0) return {};
  Vec out = a;
  for (Term& t : out) {
    t.c = R.mul(t.c, c);
    t.m = R.mul(t.m, m);
  }
  return out;
}

Vec sub_mul(const Vec& a, uint32_t c, const Monomial& m, const Vec& b, const TermOrder& ord) {
  const PolyRing& R = *ord.ring;
  const uint32_t nc = R.neg(c);
  Vec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  Term tb;
  auto load = [&](size_t k) {
    tb = b[k];
    tb.m = R.mul(tb.m, m);
    tb.c = R.mul(tb.c, nc);
  };
  if (j < b.size()) load(j);
  while (i < a.size() && j < b.size()) {
    int cmpv = ord.cmp(a[i], tb);
    if (cmpv > 0) {
      out.push_back(a[i++]);
    } else if (cmpv < 0) {
      out.push_back(tb);
      if (++j < b.size()) load(j);
    } else {
      Term t = a[i++];
      t.c = R.add(t.c, tb.c);
      if (t.c) out.push_back(t);
      if (++j < b.size()) load(j);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (j < b.size()) {
    out.push_back(tb);
    if (++j < b.size()) load(j);
  }
  return out;
}

Vec make_monic(const Vec& a, const PolyRing& R) {
  if (a.empty() || a.front().c == 1) return a;
  return scale(a, R.inv(a.front().c), R);
}

Poly poly_mul(const Poly& a, const Poly& b, const PolyRing& R) {
  if (a.empty() || b.empty()) return {};
  TermOrder ord = TermOrder::grevlex(R);
  Vec out;
  out.reserve(a.size() * b.size());
  for (const Term& s : a)
    for (const Term& t : b) out.push_back(Term{R.mul(s.m, t.m), 0, R.mul(s.c, t.c)});
  normalize(out, ord);
  return out;
}

Poly poly_pow(const Poly& a, int e, const PolyRing& R) {
  Poly r = constant(1);
  for (int i = 0; i < e; ++i) r = poly_mul(r, a, R);
  return r;
}

Poly constant(uint32_t c) {
  if (c == 0) return {};
  return Poly{Term{Monomial{}, 0, c}};
}

Poly variable(const PolyRing& R, int i) { return Poly{Term{R.var(i), 0, 1}}; }

Vec embed(const Poly& f, uint32_t comp, const TermOrder& ord) {
  Vec v = f;
  for (Term& t : v) t.comp = comp;
  // Within one component every order here agrees with grevlex unless
  // variables are eliminated.
  if (ord.elim_mask) normalize(v, ord);
  return v;
}

Poly component(const Vec& v, uint32_t comp, const PolyRing& R) {
  Poly out;
  for (const Term& t : v)
    if (t.comp == comp) out.push_back(Term{t.m, 0, t.c});
  normalize(out, TermOrder::grevlex(R));
  return out;
}

bool is_homogeneous(const Poly& f) {
  for (const Term& t : f)
    if (t.m.deg != f.front().m.deg) return false;
  return true;
}

int poly_degree(const Poly& f) { return f.front().m.deg; }

bool is_homogeneous_vec(const Vec& v, const TermOrder& ord) {
  for (const Term& t : v)
    if (ord.shifted_degree(t) != ord.shifted_degree(v.front())) return false;
  return true;
}

Poly derivative(const Poly& f, int var, const PolyRing& R) {
  Poly out;
  for (const Term& t : f) {
    if (t.m.e[var] == 0) continue;
    uint32_t c = R.mul(t.c, R.from_int(t.m.e[var]));
    if (c == 0) continue;
    Monomial m = t.m;
    m.e[var] -= 1;
    m.deg -= R.weights()[var];
    out.push_back(Term{m, 0, c});
  }
  normalize(out, TermOrder::grevlex(R));
  return out;
}

// ---- parser: sums of products of integers, variables, powers, parentheses ----

namespace {

class Parser {
 public:
  Parser(std::string_view s, const PolyRing& R) : s_(s), R_(R), ord_(TermOrder::grevlex(R)) {}

  Poly parse() {
    Poly f = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("cannot parse polynomial '" + std::string(s_) + "': " + what);
  }

  Poly expr() {
    Poly acc;
    bool first = true;
    while (true) {
      skip();
      bool negate = false;
      if (eat('+')) {
      } else if (eat('-')) {
        negate = true;
      } else if (!first) {
        break;
      }
      Poly t = product();
      acc = negate ? sub(acc, t, ord_) : add(acc, t, ord_);
      first = false;
    }
    return acc;
  }

  Poly product() {
    Poly acc = power();
    while (eat('*')) acc = poly_mul(acc, power(), R_);
    return acc;
  }

  Poly power() {
    Poly base = atom();
    if (eat('^')) {
      skip();
      long e = integer();
      if (e < 0 || e > 10000) fail("bad exponent");
      base = poly_pow(base, static_cast<int>(e), R_);
    }
    return base;
  }

  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 18) fail("number too long");
    return std::stol(std::string(s_.substr(start, pos_ - start)));
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly f = expr();
      if (!eat(')')) fail("missing ')'");
      return f;
    }
    if (c == '-') {
      ++pos_;
      return scale(atom(), R_.neg(1), R_);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(R_.from_int(integer()));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      int idx = R_.var_index(name);
      if (idx < 0) fail("unknown variable '" + std::string(name) + "'");
      return variable(R_, idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  size_t pos_ = 0;
  const PolyRing& R_;
  TermOrder ord_;
};

}  // namespace

Poly parse_poly(std::string_view text, const PolyRing& R) { return Parser(text, R).parse(); }

}  // namespace rescat
