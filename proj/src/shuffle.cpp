#include "ck/shuffle.hpp"

#include <algorithm>
#include <functional>

#include "ck/error.hpp"

namespace ck {

AlphabetPtr make_alphabet(Alphabet a) { return std::make_shared<const Alphabet>(std::move(a)); }

void require_same_alphabet(const Alphabet& a, const Alphabet& b) {
  if (&a != &b && !(a == b)) throw Error(ErrorCode::AlphabetMismatch, "alphabet mismatch");
}

// ---------------------------------------------------------------- ShuffleElement

ShuffleElement::ShuffleElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {
  if (!alphabet_) throw Error(ErrorCode::InvalidArgument, "null alphabet");
}

ShuffleElement ShuffleElement::unit(AlphabetPtr alphabet) {
  ShuffleElement x(std::move(alphabet));
  x.add(Word(), 1);
  return x;
}

ShuffleElement ShuffleElement::word(AlphabetPtr alphabet, const Word& w, const Rational& c) {
  ShuffleElement x(std::move(alphabet));
  x.add(w, c);
  return x;
}

Rational ShuffleElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ShuffleElement::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int ShuffleElement::max_weight() const {
  int m = -1;
  for (const auto& [w, c] : terms_) m = std::max(m, w.weight());
  return m;
}

bool ShuffleElement::is_homogeneous() const {
  if (terms_.empty()) return true;
  int wt = terms_.begin()->first.weight();
  for (const auto& [w, c] : terms_)
    if (w.weight() != wt) return false;
  return true;
}

ShuffleElement ShuffleElement::homogeneous_part(int weight) const {
  ShuffleElement out(alphabet_);
  for (const auto& [w, c] : terms_)
    if (w.weight() == weight) out.terms_.emplace(w, c);
  return out;
}

ShuffleElement& ShuffleElement::operator+=(const ShuffleElement& o) {
  require_same_alphabet(*alphabet_, *o.alphabet_);
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

ShuffleElement& ShuffleElement::operator-=(const ShuffleElement& o) {
  require_same_alphabet(*alphabet_, *o.alphabet_);
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

ShuffleElement& ShuffleElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

bool ShuffleElement::operator==(const ShuffleElement& o) const {
  return *alphabet_ == *o.alphabet_ && terms_ == o.terms_;
}

// ---------------------------------------------------------------- shuffle

std::map<Word, long> shuffle_words(const Alphabet& alphabet, const Word& a, const Word& b) {
  const std::size_t n = a.length(), m = b.length();
  // table[i][j]: shuffles of a[0,i) and b[0,j) as letter sequences
  std::vector<std::vector<std::map<std::vector<int>, long>>> table(
      n + 1, std::vector<std::map<std::vector<int>, long>>(m + 1));
  table[0][0][{}] = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= m; ++j) {
      if (i == 0 && j == 0) continue;
      auto& cell = table[i][j];
      if (i > 0)
        for (const auto& [s, c] : table[i - 1][j]) {
          auto t = s;
          t.push_back(a[i - 1]);
          cell[t] += c;
        }
      if (j > 0)
        for (const auto& [s, c] : table[i][j - 1]) {
          auto t = s;
          t.push_back(b[j - 1]);
          cell[t] += c;
        }
    }
  }
  std::map<Word, long> out;
  for (const auto& [s, c] : table[n][m]) out.emplace(Word(alphabet, s), c);
  return out;
}

ShuffleElement shuffle_product(const ShuffleElement& x, const ShuffleElement& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  ShuffleElement out(x.alphabet_ptr());
  for (const auto& [u, cu] : x.terms())
    for (const auto& [v, cv] : y.terms()) {
      Rational c = cu * cv;
      for (const auto& [w, mult] : shuffle_words(x.alphabet(), u, v)) out.add(w, c * mult);
    }
  return out;
}

ShuffleElement shuffle_power(const ShuffleElement& x, int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative shuffle power");
  ShuffleElement out = ShuffleElement::unit(x.alphabet_ptr());
  for (int i = 0; i < k; ++i) out = shuffle_product(out, x);
  return out;
}

// ---------------------------------------------------------------- TensorElement

TensorElement::TensorElement(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

Rational TensorElement::coefficient(const Word& a, const Word& b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void TensorElement::add(const Word& a, const Word& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  require_same_alphabet(*alphabet_, *o.alphabet_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  require_same_alphabet(*alphabet_, *o.alphabet_);
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

TensorElement& TensorElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

bool TensorElement::operator==(const TensorElement& o) const {
  return *alphabet_ == *o.alphabet_ && terms_ == o.terms_;
}

TensorElement tensor(const ShuffleElement& a, const ShuffleElement& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  TensorElement out(a.alphabet_ptr());
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) out.add(u, v, cu * cv);
  return out;
}

TensorElement tensor_product(const TensorElement& x, const TensorElement& y) {
  require_same_alphabet(x.alphabet(), y.alphabet());
  const Alphabet& al = x.alphabet();
  TensorElement out(x.alphabet_ptr());
  for (const auto& [kx, cx] : x.terms())
    for (const auto& [ky, cy] : y.terms()) {
      auto left = shuffle_words(al, kx.first, ky.first);
      auto right = shuffle_words(al, kx.second, ky.second);
      Rational c = cx * cy;
      for (const auto& [l, ml] : left)
        for (const auto& [r, mr] : right) out.add(l, r, c * ml * mr);
    }
  return out;
}

TensorElement deconcat_coproduct(const ShuffleElement& x) {
  TensorElement out(x.alphabet_ptr());
  const Alphabet& al = x.alphabet();
  for (const auto& [w, c] : x.terms())
    for (std::size_t k = 0; k <= w.length(); ++k)
      out.add(w.slice(al, 0, k), w.slice(al, k, w.length()), c);
  return out;
}

TensorElement reduced_coproduct(const ShuffleElement& x) {
  TensorElement out = deconcat_coproduct(x);
  auto one = ShuffleElement::unit(x.alphabet_ptr());
  out -= tensor(one, x);
  out -= tensor(x, one);
  return out;
}

TripleTensor coproduct_left(const TensorElement& t) {
  TripleTensor out;
  const Alphabet& al = t.alphabet();
  for (const auto& [k, c] : t.terms()) {
    const Word& w = k.first;
    for (std::size_t i = 0; i <= w.length(); ++i) {
      auto key = std::make_tuple(w.slice(al, 0, i), w.slice(al, i, w.length()), k.second);
      out[key] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

TripleTensor coproduct_right(const TensorElement& t) {
  TripleTensor out;
  const Alphabet& al = t.alphabet();
  for (const auto& [k, c] : t.terms()) {
    const Word& w = k.second;
    for (std::size_t i = 0; i <= w.length(); ++i) {
      auto key = std::make_tuple(k.first, w.slice(al, 0, i), w.slice(al, i, w.length()));
      out[key] += c;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Rational counit(const ShuffleElement& x) { return x.coefficient(Word()); }

// ---------------------------------------------------------------- enveloping side

UnshuffleSum unshuffle(const Alphabet& alphabet, const Word& w) {
  UnshuffleSum out;
  const std::size_t n = w.length();
  if (n >= 30) throw Error(ErrorCode::InvalidArgument, "unshuffle: word too long");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> left, right;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1UL ? left : right).push_back(w[i]);
    out[{Word(alphabet, left), Word(alphabet, right)}] += 1;
  }
  return out;
}

Rational pairing(const ShuffleElement& x, const Word& w) { return x.coefficient(w); }

Rational pairing(const TensorElement& t, const UnshuffleSum& mu) {
  Rational out = 0;
  for (const auto& [k, mult] : mu) out += t.coefficient(k.first, k.second) * mult;
  return out;
}

// ---------------------------------------------------------------- polylog ring

PolylogCoordinateRing::PolylogCoordinateRing(int depth)
    : depth_(depth), alphabet_(make_alphabet(Alphabet::polylog())) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "polylog depth must be >= 1");
}

ShuffleElement PolylogCoordinateRing::log() const {
  return ShuffleElement::word(alphabet_, Word(*alphabet_, {0}));
}

ShuffleElement PolylogCoordinateRing::li(int n) const {
  if (n < 1 || n > depth_) throw Error(ErrorCode::InvalidArgument, "Li index outside depth bound");
  std::vector<int> letters(static_cast<std::size_t>(n - 1), 0);
  letters.push_back(1);
  return ShuffleElement::word(alphabet_, Word(*alphabet_, letters));
}

void PolylogCoordinateRing::check(const ShuffleElement& x) const {
  require_same_alphabet(x.alphabet(), *alphabet_);
  if (x.max_weight() > depth_)
    throw Error(ErrorCode::InvalidArgument, "element exceeds polylog depth bound");
}

TensorElement reduced_coproduct_polylog(int n) {
  PolylogCoordinateRing ring(n);
  return reduced_coproduct(ring.li(n));
}

TensorElement polylog_coproduct_formula(int n) {
  PolylogCoordinateRing ring(n);
  TensorElement out(ring.alphabet());
  Rational factorial = 1;
  for (int i = 1; i <= n - 1; ++i) {
    factorial *= i;
    auto lhs = shuffle_power(ring.log(), i) * (Rational(1) / factorial);
    out += tensor(lhs, ring.li(n - i));
  }
  return out;
}

// ---------------------------------------------------------------- monomial basis

std::vector<std::vector<Word>> lyndon_monomials(const Alphabet& alphabet, int weight) {
  std::vector<std::vector<Word>> out;
  if (weight < 0) return out;
  if (weight == 0) return {{}};
  auto lyn = lyndon_words(alphabet, weight);
  // non-increasing index sequences into lyn with weight sum = weight
  std::vector<int> pick;
  std::function<void(int, int)> rec = [&](int remaining, int max_index) {
    if (remaining == 0) {
      std::vector<Word> m;
      for (int i : pick) m.push_back(lyn[i]);
      out.push_back(std::move(m));
      return;
    }
    for (int i = max_index; i >= 0; --i) {
      if (lyn[i].weight() > remaining) continue;
      pick.push_back(i);
      rec(remaining - lyn[i].weight(), i);
      pick.pop_back();
    }
  };
  rec(weight, static_cast<int>(lyn.size()) - 1);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::vector<ShuffleElement> monomial_basis(const AlphabetPtr& alphabet, int weight) {
  std::vector<ShuffleElement> out;
  for (const auto& mono : lyndon_monomials(*alphabet, weight)) {
    ShuffleElement x = ShuffleElement::unit(alphabet);
    for (const auto& w : mono) x = shuffle_product(x, ShuffleElement::word(alphabet, w));
    out.push_back(std::move(x));
  }
  return out;
}

// ---------------------------------------------------------------- serialization

std::vector<std::pair<std::string, std::string>> to_pairs(const ShuffleElement& x) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [w, c] : x.terms()) out.emplace_back(format_word(x.alphabet(), w), c.get_str());
  return out;
}

ShuffleElement from_pairs(const AlphabetPtr& alphabet,
                          const std::vector<std::pair<std::string, std::string>>& pairs) {
  ShuffleElement x(alphabet);
  for (const auto& [ws, cs] : pairs) {
    Rational c;
    if (c.set_str(cs, 10) != 0) throw Error(ErrorCode::ParseError, "bad rational '" + cs + "'");
    c.canonicalize();
    x.add(parse_word(*alphabet, ws), c);
  }
  return x;
}

}  // namespace ck
