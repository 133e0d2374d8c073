#include "ck/word.hpp"

#include <algorithm>
#include <set>

#include "ck/error.hpp"

namespace ck {

std::string Letter::name() const {
  switch (kind) {
    case LetterKind::Tau: return "t" + std::to_string(label);
    case LetterKind::Sigma: return "s" + std::to_string(label);
    case LetterKind::Symbol: return std::to_string(label);
  }
  return "?";
}

Letter tau(long prime) { return Letter{LetterKind::Tau, prime, 1}; }
Letter sigma(int weight) {
  if (weight < 3 || weight % 2 == 0) throw Error(ErrorCode::InvalidArgument, "sigma letters have odd weight >= 3");
  return Letter{LetterKind::Sigma, weight, weight};
}

namespace {

int kind_rank(LetterKind k) {
  switch (k) {
    case LetterKind::Tau: return 0;
    case LetterKind::Sigma: return 1;
    case LetterKind::Symbol: return 2;
  }
  return 3;
}

}  // namespace

Alphabet::Alphabet(std::vector<Letter> letters) : letters_(std::move(letters)) {
  std::set<std::string> names;
  for (const auto& l : letters_) {
    if (!names.insert(l.name()).second)
      throw Error(ErrorCode::InvalidArgument, "duplicate letter " + l.name());
    switch (l.kind) {
      case LetterKind::Tau:
        if (l.weight != 1 || l.label < 2)
          throw Error(ErrorCode::InvalidArgument, "tau letters have weight 1 and a prime label");
        break;
      case LetterKind::Sigma:
        if (l.weight < 3 || l.weight % 2 == 0 || l.label != l.weight)
          throw Error(ErrorCode::InvalidArgument, "sigma weights are odd and >= 3");
        break;
      case LetterKind::Symbol:
        if (l.weight != 1 || (l.label != 0 && l.label != 1))
          throw Error(ErrorCode::InvalidArgument, "symbol letters are 0 and 1");
        break;
    }
  }
  std::sort(letters_.begin(), letters_.end(), [](const Letter& a, const Letter& b) {
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
    return a.label < b.label;
  });
  bool has_symbol = false, has_other = false;
  for (const auto& l : letters_) (l.kind == LetterKind::Symbol ? has_symbol : has_other) = true;
  if (has_symbol && has_other)
    throw Error(ErrorCode::InvalidArgument, "polylog symbols cannot mix with tau/sigma letters");
}

Alphabet Alphabet::taus_and_sigmas(const std::vector<long>& primes,
                                   const std::vector<int>& sigma_weights) {
  std::vector<Letter> ls;
  for (long q : primes) ls.push_back(tau(q));
  for (int r : sigma_weights) ls.push_back(sigma(r));
  return Alphabet(std::move(ls));
}

Alphabet Alphabet::polylog() {
  return Alphabet({Letter{LetterKind::Symbol, 0, 1}, Letter{LetterKind::Symbol, 1, 1}});
}

std::optional<int> Alphabet::index_of(const Letter& l) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i] == l) return static_cast<int>(i);
  return std::nullopt;
}

std::optional<int> Alphabet::index_of_name(std::string_view name) const {
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].name() == name) return static_cast<int>(i);
  return std::nullopt;
}

bool Alphabet::is_polylog() const {
  return !letters_.empty() && letters_.front().kind == LetterKind::Symbol;
}

std::vector<long> Alphabet::tau_primes() const {
  std::vector<long> out;
  for (const auto& l : letters_)
    if (l.kind == LetterKind::Tau) out.push_back(l.label);
  return out;
}

std::vector<int> Alphabet::sigma_weights() const {
  std::vector<int> out;
  for (const auto& l : letters_)
    if (l.kind == LetterKind::Sigma) out.push_back(l.weight);
  return out;
}

Word::Word(const Alphabet& alphabet, std::vector<int> letters) : letters_(std::move(letters)) {
  for (int i : letters_) {
    if (i < 0 || static_cast<std::size_t>(i) >= alphabet.size())
      throw Error(ErrorCode::InvalidArgument, "letter index out of range");
    weight_ += alphabet.weight(i);
  }
}

Word Word::single(const Alphabet& alphabet, int index) { return Word(alphabet, {index}); }

Word Word::concat(const Word& other) const {
  Word out;
  out.letters_ = letters_;
  out.letters_.insert(out.letters_.end(), other.letters_.begin(), other.letters_.end());
  out.weight_ = weight_ + other.weight_;
  return out;
}

Word Word::slice(const Alphabet& alphabet, std::size_t begin, std::size_t end) const {
  return Word(alphabet, std::vector<int>(letters_.begin() + begin, letters_.begin() + end));
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (weight_ != o.weight_) return weight_ <=> o.weight_;
  return letters_ <=> o.letters_;
}

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters().begin(), a.letters().end(),
                                      b.letters().begin(), b.letters().end());
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  const bool dots = !alphabet.is_polylog();
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (dots && i > 0) out += '.';
    out += alphabet[w[i]].name();
  }
  return out;
}

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  if (text.empty() || text == "e") return Word();
  std::vector<int> idx;
  auto push = [&](std::string_view token) {
    auto i = alphabet.index_of_name(token);
    if (!i) throw Error(ErrorCode::ParseError, "unknown letter '" + std::string(token) + "'");
    idx.push_back(*i);
  };
  if (alphabet.is_polylog()) {
    for (char c : text) push(std::string_view(&c, 1));
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t dot = text.find('.', start);
      if (dot == std::string_view::npos) dot = text.size();
      push(text.substr(start, dot - start));
      start = dot + 1;
    }
  }
  return Word(alphabet, std::move(idx));
}

bool is_lyndon(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::InvalidArgument, "is_lyndon: empty word");
  const auto& s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t r = 1; r < n; ++r) {
    // compare s with its rotation starting at r
    for (std::size_t i = 0; i < n; ++i) {
      int a = s[i], b = s[(i + r) % n];
      if (a < b) break;
      if (a > b) return false;
      if (i == n - 1) return false;  // equal rotation
    }
  }
  return true;
}

namespace {

void extend_words(const Alphabet& alphabet, int remaining, std::vector<int>& prefix,
                  std::vector<Word>& out) {
  if (remaining == 0) {
    out.emplace_back(alphabet, prefix);
    return;
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    int wt = alphabet.weight(static_cast<int>(i));
    if (wt > remaining) continue;
    prefix.push_back(static_cast<int>(i));
    extend_words(alphabet, remaining - wt, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Word> words_of_weight(const Alphabet& alphabet, int weight) {
  std::vector<Word> out;
  if (weight < 0) return out;
  std::vector<int> prefix;
  extend_words(alphabet, weight, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_up_to_weight(const Alphabet& alphabet, int max_weight) {
  std::vector<Word> out;
  for (int m = 0; m <= max_weight; ++m) {
    auto ws = words_of_weight(alphabet, m);
    out.insert(out.end(), ws.begin(), ws.end());
  }
  return out;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_weight) {
  if (max_weight < 1) throw Error(ErrorCode::InvalidArgument, "lyndon_words: max_weight >= 1");
  std::vector<Word> out;
  for (int m = 1; m <= max_weight; ++m)
    for (auto& w : words_of_weight(alphabet, m))
      if (is_lyndon(w)) out.push_back(std::move(w));
  return out;
}

std::vector<Word> lyndon_factorization(const Alphabet& alphabet, const Word& w) {
  // Duval's algorithm.
  std::vector<Word> out;
  const auto& s = w.letters();
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && s[k] <= s[j]) {
      k = (s[k] < s[j]) ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.slice(alphabet, i, i + j - k));
      i += j - k;
    }
  }
  return out;
}

}  // namespace ck
