#include "ck/goncharov.hpp"

#include <algorithm>

#include "ck/error.hpp"
#include "ck/linalg.hpp"

namespace ck {

NcPolynomial nc_commutator(const NcPolynomial& a, const NcPolynomial& b) {
  NcPolynomial out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      out[u.concat(v)] += cu * cv;
      out[v.concat(u)] -= cu * cv;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

NcPolynomial lyndon_bracket(const Alphabet& alphabet, const Word& w) {
  if (!is_lyndon(w)) throw Error(ErrorCode::InvalidArgument, "lyndon_bracket needs a Lyndon word");
  if (w.length() == 1) return {{w, Rational(1)}};
  for (std::size_t k = 1; k < w.length(); ++k) {
    Word v = w.slice(alphabet, k, w.length());
    if (is_lyndon(v))
      return nc_commutator(lyndon_bracket(alphabet, w.slice(alphabet, 0, k)), lyndon_bracket(alphabet, v));
  }
  throw Error(ErrorCode::InvalidArgument, "lyndon_bracket: no Lyndon suffix");  // unreachable
}

// ------------------------------------------------------------------ Lyndon polynomials

namespace {

ShuffleElement monomial_element(const AlphabetPtr& alphabet, const LyndonMonomial& m) {
  ShuffleElement x = ShuffleElement::unit(alphabet);
  for (const auto& l : m) x = shuffle_product(x, ShuffleElement::word(alphabet, l));
  return x;
}

}  // namespace

LyndonPolynomial to_lyndon_polynomial(const ShuffleElement& x0) {
  // The product of the Lyndon factors of w equals (prod i_k!) w plus
  // lexicographically smaller words, so peeling the lex-largest word terminates.
  const AlphabetPtr& A = x0.alphabet_ptr();
  LyndonPolynomial out;
  ShuffleElement x = x0;
  while (!x.is_zero()) {
    auto best = x.terms().begin();
    for (auto it = x.terms().begin(); it != x.terms().end(); ++it)
      if (lex_less(best->first, it->first)) best = it;
    const Word w = best->first;
    const Rational c = best->second;
    LyndonMonomial m = lyndon_factorization(*A, w);
    Rational mult = 1;
    for (std::size_t i = 0; i < m.size();) {
      std::size_t j = i;
      while (j < m.size() && m[j] == m[i]) ++j;
      for (std::size_t k = 2; k <= j - i; ++k) mult *= static_cast<long>(k);
      i = j;
    }
    const Rational coef = c / mult;
    out[m] += coef;
    x -= monomial_element(A, m) * coef;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

ShuffleElement from_lyndon_polynomial(const AlphabetPtr& alphabet, const LyndonPolynomial& p) {
  ShuffleElement x(alphabet);
  for (const auto& [m, c] : p) x += monomial_element(alphabet, m) * c;
  return x;
}

// ------------------------------------------------------------------ linear algebra helpers

namespace {

// Incremental row echelon over Q: insert returns true when the vector is new.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t dim) : dim_(dim) {}
  bool insert(std::vector<Rational> v) {
    reduce(v);
    std::size_t piv = 0;
    while (piv < dim_ && v[piv] == 0) ++piv;
    if (piv == dim_) return false;
    const Rational inv = 1 / v[piv];
    for (auto& x : v) x *= inv;
    rows_.push_back({piv, std::move(v)});
    return true;
  }
  bool contains(std::vector<Rational> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  }
  std::size_t rank() const { return rows_.size(); }
  std::vector<std::vector<Rational>> rows() const {
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows_) out.push_back(r.second);
    return out;
  }
  bool full() const { return rows_.size() == dim_; }

 private:
  void reduce(std::vector<Rational>& v) const {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      const Rational f = v[piv];
      for (std::size_t i = piv; i < dim_; ++i)
        if (row[i] != 0) v[i] -= f * row[i];
    }
  }
  std::size_t dim_;
  std::vector<std::pair<std::size_t, std::vector<Rational>>> rows_;
};

struct WordIndex {
  std::vector<Word> words;
  std::map<Word, std::size_t> index;
  WordIndex(const Alphabet& a, int m) : words(words_of_weight(a, m)) {
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  }
  std::vector<Rational> vec(const std::map<Word, Rational>& x) const {
    std::vector<Rational> v(words.size());
    for (const auto& [w, c] : x) v.at(index.at(w)) = c;
    return v;
  }
};

}  // namespace

// ------------------------------------------------------------------ Goncharov algebra

GoncharovAlgebra::GoncharovAlgebra(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

GoncharovAlgebra::Level& GoncharovAlgebra::level(int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "Goncharov weight must be >= 1");
  auto it = levels_.find(m);
  if (it != levels_.end()) return it->second;
  const Alphabet& A = *alphabet_;
  WordIndex idx(A, m);
  const std::size_t D = idx.words.size();
  // Span of u [P_l, P_k] v with wt(l), wt(k) >= 2.
  EchelonSpan ideal(D);
  std::vector<Word> lie;
  if (m >= 4)
    for (auto& l : lyndon_words(A, m - 2))
      if (l.weight() >= 2) lie.push_back(l);
  std::map<Word, NcPolynomial> brackets;
  for (const auto& l : lie) brackets[l] = lyndon_bracket(A, l);
  for (std::size_t a = 0; a < lie.size() && !ideal.full(); ++a)
    for (std::size_t b = a + 1; b < lie.size() && !ideal.full(); ++b) {
      const int rest = m - lie[a].weight() - lie[b].weight();
      if (rest < 0) continue;
      NcPolynomial br = nc_commutator(brackets[lie[a]], brackets[lie[b]]);
      if (br.empty()) continue;
      for (int wu = 0; wu <= rest; ++wu)
        for (const auto& u : words_of_weight(A, wu))
          for (const auto& v : words_of_weight(A, rest - wu)) {
            NcPolynomial e;
            for (const auto& [w, c] : br) e[u.concat(w).concat(v)] = c;
            ideal.insert(idx.vec(e));
          }
    }
  // Annihilator: kernel of the matrix whose rows span the ideal part.
  Level lev;
  if (ideal.rank() == 0) {
    for (const auto& w : idx.words) lev.basis.push_back(ShuffleElement::word(alphabet_, w));
  } else {
    for (const auto& k : kernel_basis(RationalMatrix::from_rows(ideal.rows()))) {
      ShuffleElement x(alphabet_);
      for (std::size_t i = 0; i < D; ++i)
        if (k[i] != 0) x.add(idx.words[i], k[i]);
      lev.basis.push_back(std::move(x));
    }
  }
  return levels_.emplace(m, std::move(lev)).first->second;
}

const std::vector<ShuffleElement>& GoncharovAlgebra::basis(int m) { return level(m).basis; }

const std::vector<ShuffleElement>& GoncharovAlgebra::generators(int m) {
  Level& lev = level(m);
  if (lev.has_generators) return lev.generators;
  const Alphabet& A = *alphabet_;
  WordIndex idx(A, m);
  EchelonSpan span(idx.words.size());
  for (int i = 1; 2 * i <= m; ++i) {
    // level() may insert into the map; references to other levels stay valid.
    const auto& left = level(i).basis;
    const auto& right = level(m - i).basis;
    for (const auto& x : left)
      for (const auto& y : right) span.insert(idx.vec(shuffle_product(x, y).terms()));
  }
  lev.decomposable_rank = static_cast<int>(span.rank());
  const std::size_t target = lev.basis.size();
  for (const auto& w : idx.words) {
    if (span.rank() == target) break;
    if (!is_lyndon(w)) continue;
    ShuffleElement x = ShuffleElement::word(alphabet_, w);
    if (contains(x) && span.insert(idx.vec(x.terms()))) lev.generators.push_back(std::move(x));
  }
  for (const auto& b : lev.basis) {
    if (span.rank() == target) break;
    if (span.insert(idx.vec(b.terms()))) lev.generators.push_back(b);
  }
  lev.has_generators = true;
  return lev.generators;
}

int GoncharovAlgebra::generator_count(int m) { return static_cast<int>(generators(m).size()); }

bool GoncharovAlgebra::contains(const ShuffleElement& x) {
  require_same_alphabet(x.alphabet(), *alphabet_);
  for (int m = 1; m <= x.max_weight(); ++m) {
    ShuffleElement part = x.homogeneous_part(m);
    if (part.is_zero()) continue;
    WordIndex idx(*alphabet_, m);
    EchelonSpan span(idx.words.size());
    for (const auto& b : level(m).basis) span.insert(idx.vec(b.terms()));
    if (!span.contains(idx.vec(part.terms()))) return false;
  }
  return true;
}

std::vector<ShuffleElement> goncharov_subalgebra_basis(const AlphabetPtr& alphabet, int m) {
  return GoncharovAlgebra(alphabet).basis(m);
}

int goncharov_dimension(const AlphabetPtr& alphabet, int m) {
  return GoncharovAlgebra(alphabet).generator_count(m);
}

// ------------------------------------------------------------------ Hall oracle

namespace {

// Right-normed bracket [x1, [x2, ... [x_{k-1}, x_k]]] of the letters of w.
NcPolynomial right_normed(const Alphabet& A, const Word& w) {
  NcPolynomial acc{{Word::single(A, w[w.length() - 1]), Rational(1)}};
  for (std::size_t i = w.length() - 1; i-- > 0;) acc = nc_commutator({{Word::single(A, w[i]), Rational(1)}}, acc);
  return acc;
}

// Independent spanning set of L_m.
std::vector<NcPolynomial> lie_basis(const Alphabet& A, int m) {
  WordIndex idx(A, m);
  EchelonSpan span(idx.words.size());
  std::vector<NcPolynomial> out;
  for (const auto& w : idx.words) {
    NcPolynomial e = right_normed(A, w);
    if (!e.empty() && span.insert(idx.vec(e))) out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

int hall_oracle_dimension(const Alphabet& A, int m) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "weight must be >= 1");
  const auto full = lie_basis(A, m);
  WordIndex idx(A, m);
  EchelonSpan span(idx.words.size());
  for (int i = 2; 2 * i <= m; ++i) {
    const auto left = lie_basis(A, i);
    const auto right = lie_basis(A, m - i);
    for (const auto& x : left)
      for (const auto& y : right) {
        NcPolynomial e = nc_commutator(x, y);
        if (!e.empty()) span.insert(idx.vec(e));
      }
  }
  return static_cast<int>(full.size() - span.rank());
}

}  // namespace ck
