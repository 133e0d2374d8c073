#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ck {

enum class LetterKind { Tau, Sigma, Symbol };

// A graded letter. Tau letters carry a prime label and weight 1, Sigma letters
// carry their odd weight >= 3 as label, Symbol letters are the polylog letters
// "0" and "1" (label 0 or 1, weight 1).
struct Letter {
  LetterKind kind;
  long label;
  int weight;

  std::string name() const;
  bool operator==(const Letter&) const = default;
};

Letter tau(long prime);
Letter sigma(int weight);

class Alphabet {
 public:
  Alphabet() = default;
  // Validates and sorts: taus by prime, then sigmas by weight, then symbols.
  explicit Alphabet(std::vector<Letter> letters);

  static Alphabet taus_and_sigmas(const std::vector<long>& primes,
                                  const std::vector<int>& sigma_weights);
  // The polylog alphabet {0 < 1}.
  static Alphabet polylog();

  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::optional<int> index_of(const Letter& l) const;
  std::optional<int> index_of_name(std::string_view name) const;
  int weight(int index) const { return letters_[index].weight; }
  bool is_polylog() const;

  std::vector<long> tau_primes() const;
  std::vector<int> sigma_weights() const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<Letter> letters_;
};

// A word over an alphabet, stored as letter indices with its cached weight.
// Ordered by (weight, lexicographic on indices) which is the canonical order.
class Word {
 public:
  Word() = default;
  Word(const Alphabet& alphabet, std::vector<int> letters);
  static Word single(const Alphabet& alphabet, int index);

  int weight() const { return weight_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  Word concat(const Word& other) const;
  // Letters [begin, end); weight recomputed from the alphabet.
  Word slice(const Alphabet& alphabet, std::size_t begin, std::size_t end) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  std::strong_ordering operator<=>(const Word& o) const;

 private:
  std::vector<int> letters_;
  int weight_ = 0;
};

// Pure lexicographic comparison (the order used by the Lyndon condition).
bool lex_less(const Word& a, const Word& b);

std::string format_word(const Alphabet& alphabet, const Word& w);
Word parse_word(const Alphabet& alphabet, std::string_view text);

bool is_lyndon(const Word& w);
std::vector<Word> words_of_weight(const Alphabet& alphabet, int weight);
std::vector<Word> words_up_to_weight(const Alphabet& alphabet, int max_weight);
std::vector<Word> lyndon_words(const Alphabet& alphabet, int max_weight);
// Chen-Fox-Lyndon factorization into a non-increasing sequence of Lyndon words.
std::vector<Word> lyndon_factorization(const Alphabet& alphabet, const Word& w);

}  // namespace ck
