#include "ck/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "ck/error.hpp"

namespace ck {

PolyRing::PolyRing(std::vector<RingVariable> variables) : vars_(std::move(variables)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].weight < 1) throw Error(ErrorCode::InvalidArgument, "variable weight must be positive");
    if (vars_[i].block < 0) throw Error(ErrorCode::InvalidArgument, "negative block index");
    num_blocks_ = std::max(num_blocks_, vars_[i].block + 1);
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[j].name == vars_[i].name)
        throw Error(ErrorCode::InvalidArgument, "duplicate variable " + vars_[i].name);
  }
}

int PolyRing::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  for (int blk = 0; blk < num_blocks_; ++blk) {
    long da = 0, db = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].block == blk) {
        da += static_cast<long>(a[i]) * vars_[i].weight;
        db += static_cast<long>(b[i]) * vars_[i].weight;
      }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].block == blk && a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ------------------------------------------------------------------ monomials

bool divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial monomial_quotient(const Monomial& b, const Monomial& a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = b[i] - a[i];
  return m;
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

// ------------------------------------------------------------------ polynomials

namespace {

struct Greater {
  const PolyRing* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return ring->compare(a, b) > 0; }
};

void same_ring(const Polynomial& a, const Polynomial& b) {
  if (a.ring() == b.ring()) return;
  const auto& x = a.ring()->variables();
  const auto& y = b.ring()->variables();
  bool same = x.size() == y.size();
  for (std::size_t i = 0; same && i < x.size(); ++i)
    same = x[i].name == y[i].name && x[i].block == y[i].block && x[i].weight == y[i].weight;
  if (!same) throw Error(ErrorCode::InvalidArgument, "polynomials over different rings");
}

}  // namespace

Polynomial Polynomial::from_map(RingPtr ring, std::map<Monomial, Rational> m) {
  Polynomial out(ring);
  for (auto& [mono, c] : m)
    if (c != 0) out.terms_.emplace_back(mono, c);
  Greater g{ring.get()};
  std::sort(out.terms_.begin(), out.terms_.end(), [&](const Term& x, const Term& y) { return g(x.first, y.first); });
  return out;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial out(ring);
  if (c != 0) out.terms_.emplace_back(ring->one(), c);
  return out;
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= ring->size())
    throw Error(ErrorCode::InvalidArgument, "variable index out of range");
  Monomial m = ring->one();
  m[index] = 1;
  return monomial(std::move(ring), std::move(m), 1);
}

Polynomial Polynomial::variable(RingPtr ring, const std::string& name) {
  int i = ring->index_of(name);
  if (i < 0) throw Error(ErrorCode::InvalidArgument, "unknown variable " + name);
  return variable(std::move(ring), i);
}

Polynomial Polynomial::monomial(RingPtr ring, Monomial m, const Rational& c) {
  Polynomial out(std::move(ring));
  if (c != 0) out.terms_.emplace_back(std::move(m), c);
  return out;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total_degree(terms_[0].first) == 0);
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  same_ring(a, b);
  Polynomial out(a.ring_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  const PolyRing& R = *a.ring_;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    int c;
    if (i == a.terms_.size()) c = -1;
    else if (j == b.terms_.size()) c = 1;
    else c = R.compare(a.terms_[i].first, b.terms_[j].first);
    if (c > 0) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational s = a.terms_[i].second + b.terms_[j].second;
      if (s != 0) out.terms_.emplace_back(a.terms_[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_ ? a.ring_ : b.ring_);
  same_ring(a, b);
  std::map<Monomial, Rational> acc;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      acc[m] += ca * cb;
    }
  return Polynomial::from_map(a.ring_, std::move(acc));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Rational& c) const {
  Polynomial out(ring_);
  if (c == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& [mono, coef] : terms_) {
    Monomial x(mono.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = mono[i] + m[i];
    out.terms_.emplace_back(std::move(x), coef * c);
  }
  return out;  // monomial orders are multiplicative, so the order is kept
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::InvalidArgument, "negative polynomial power");
  Polynomial r = constant(ring_, 1);
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(Rational(1) / leading_coefficient());
}

int Polynomial::lowest_block() const {
  int lowest = ring_ ? ring_->num_blocks() : 0;
  for (const auto& [m, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) lowest = std::min(lowest, ring_->variable(i).block);
  return lowest;
}

bool Polynomial::uses_variable(int index) const {
  for (const auto& [m, c] : terms_)
    if (m[index] > 0) return true;
  return false;
}

int Polynomial::homogeneous_weight(const std::vector<int>& weights) const {
  int w = -2;
  for (const auto& [m, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
    if (w == -2) w = d;
    else if (w != d) return -1;
  }
  return w == -2 ? 0 : w;
}

Polynomial Polynomial::substitute(const RingPtr& target, const std::vector<Polynomial>& images) const {
  if (images.size() != ring_->size()) throw Error(ErrorCode::DimensionMismatch, "substitution arity");
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Polynomial t = constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i] > 0) t = t * images[i].pow(m[i]);
    out += t;
  }
  return out;
}

Polynomial Polynomial::rename_into(const RingPtr& target) const {
  std::vector<Polynomial> images;
  for (const auto& v : ring_->variables()) {
    int j = target->index_of(v.name);
    if (j < 0) {
      images.emplace_back(target);  // only valid if unused; checked below
    } else {
      images.push_back(variable(target, j));
    }
  }
  for (std::size_t i = 0; i < ring_->size(); ++i)
    if (target->index_of(ring_->variable(i).name) < 0 && uses_variable(static_cast<int>(i)))
      throw Error(ErrorCode::InvalidArgument, "variable " + ring_->variable(i).name + " missing in target ring");
  return substitute(target, images);
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    // lowest-ranked variables first: coefficients before cocycle symbols
    for (std::size_t i = m.size(); i-- > 0;) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->variable(i).name;
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) s += a.get_str();
    else if (a == 1) s += mono;
    else s += a.get_str() + "*" + mono;
  }
  return s;
}

// ------------------------------------------------------------------ parsing

namespace {

class Parser {
 public:
  Parser(const RingPtr& ring, const std::string& text) : ring_(ring), s_(text) {}

  Polynomial parse() {
    Polynomial out(ring_);
    skip();
    bool first = true;
    while (pos_ < s_.size()) {
      int sign = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sign = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected + or -");
      }
      out += term().scaled(sign);
      first = false;
      skip();
    }
    if (first) fail("empty polynomial");
    return out;
  }

 private:
  Polynomial term() {
    Polynomial t = factor();
    skip();
    while (pos_ < s_.size() && s_[pos_] == '*') {
      ++pos_;
      skip();
      t = t * factor();
      skip();
    }
    return t;
  }

  Polynomial factor() {
    if (pos_ >= s_.size()) fail("unexpected end");
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
      Rational r;
      if (r.set_str(s_.substr(b, pos_ - b), 10) != 0) fail("bad number");
      r.canonicalize();
      return Polynomial::constant(ring_, r);
    }
    std::size_t b = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == ':' ||
                                s_[pos_] == '.' || s_[pos_] == '_'))
      ++pos_;
    if (b == pos_) fail("expected a factor");
    std::string name = s_.substr(b, pos_ - b);
    int idx = ring_->index_of(name);
    if (idx < 0) fail("unknown variable '" + name + "'");
    Polynomial v = Polynomial::variable(ring_, idx);
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      std::size_t e0 = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (e0 == pos_) fail("bad exponent");
      v = v.pow(std::stoi(s_.substr(e0, pos_ - e0)));
    }
    return v;
  }

  void skip() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) {
    throw Error(ErrorCode::ParseError, "polynomial '" + s_ + "': " + why);
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, const std::string& text) { return Parser(ring, text).parse(); }

}  // namespace ck
