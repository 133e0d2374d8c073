#include "ck/sunit.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ck/error.hpp"
#include "ck/linalg.hpp"

namespace ck {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long next_prime(long n) {
  long m = std::max(n + 1, 2L);
  while (!is_prime(m)) ++m;
  return m;
}

long prev_prime(long n) {
  for (long m = n - 1; m >= 2; --m)
    if (is_prime(m)) return m;
  return 0;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long m = 2; m <= n; ++m)
    if (is_prime(m)) out.push_back(m);
  return out;
}

OpenIntegerScheme OpenIntegerScheme::excluding(std::vector<long> primes) {
  for (long q : primes)
    if (!is_prime(q)) throw Error(ErrorCode::InvalidArgument, std::to_string(q) + " is not prime");
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  OpenIntegerScheme s;
  s.excluded_ = std::move(primes);
  return s;
}

OpenIntegerScheme OpenIntegerScheme::tapered(long q) {
  if (q < 2) throw Error(ErrorCode::InvalidArgument, "tapered bound must be >= 2");
  OpenIntegerScheme s;
  s.tapered_ = q;
  return s;
}

OpenIntegerScheme OpenIntegerScheme::parse(const std::string& text0) {
  std::string text;
  for (char c : text0)
    if (c != ' ') text += c;
  if (text == "Z") return excluding({});
  if (text.rfind("Z>", 0) == 0) {
    try {
      return tapered(std::stol(text.substr(2)));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "bad tapered scheme '" + text0 + "'");
    }
  }
  if (text.rfind("Z[", 0) == 0 && text.back() == ']') {
    std::vector<long> primes;
    std::string body = text.substr(2, text.size() - 3);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.rfind("1/", 0) != 0) throw Error(ErrorCode::ParseError, "expected 1/q in '" + text0 + "'");
      try {
        primes.push_back(std::stol(item.substr(2)));
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::ParseError, "bad prime in '" + text0 + "'");
      }
    }
    return excluding(std::move(primes));
  }
  throw Error(ErrorCode::ParseError, "unrecognized scheme '" + text0 + "'");
}

std::vector<long> OpenIntegerScheme::excluded_primes() const {
  return tapered_ ? primes_up_to(*tapered_) : excluded_;
}

long OpenIntegerScheme::largest_excluded_or_two() const {
  auto ex = excluded_primes();
  return ex.empty() ? 2 : ex.back();
}

bool OpenIntegerScheme::excludes(long prime) const {
  if (tapered_) return prime <= *tapered_;
  return std::binary_search(excluded_.begin(), excluded_.end(), prime);
}

namespace {

// Remove all excluded prime factors; unit iff the remainder is +-1.
bool smooth(mpz_class n, const std::vector<long>& primes) {
  n = abs(n);
  if (n == 0) return false;
  for (long q : primes)
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(q)))
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(q));
  return n == 1;
}

}  // namespace

bool OpenIntegerScheme::is_unit(const Rational& x) const {
  auto primes = excluded_primes();
  return x != 0 && smooth(x.get_num(), primes) && smooth(x.get_den(), primes);
}

std::string OpenIntegerScheme::to_string() const {
  if (tapered_) return "Z>" + std::to_string(*tapered_);
  if (excluded_.empty()) return "Z";
  std::string s = "Z[";
  for (std::size_t i = 0; i < excluded_.size(); ++i) {
    if (i) s += ",";
    s += "1/" + std::to_string(excluded_[i]);
  }
  return s + "]";
}

SUnitPoint SUnitPoint::tangential() {
  SUnitPoint p;
  p.kind = Kind::Tangential;
  return p;
}

SUnitPoint SUnitPoint::make(const Rational& z, const std::vector<long>& primes) {
  if (z == 0 || z == 1) throw Error(ErrorCode::InvalidArgument, "z must differ from 0 and 1");
  SUnitPoint p;
  p.value = z;
  p.primes = primes;
  p.val_z = valuation_vector(z, primes);
  p.val_one_minus = valuation_vector(1 - z, primes);
  return p;
}

std::string SUnitPoint::to_string() const {
  return is_tangential() ? std::string("-1_1") : value.get_str();
}

bool SUnitPoint::operator==(const SUnitPoint& o) const {
  return kind == o.kind && (is_tangential() || value == o.value);
}

long height(const Rational& x) {
  mpz_class a = abs(x.get_num()), b = abs(x.get_den());
  return std::max(a, b).get_si();
}

std::vector<long> valuation_vector(const Rational& x, const std::vector<long>& primes) {
  if (x == 0) throw Error(ErrorCode::InvalidArgument, "valuation_vector of zero");
  std::vector<long> out;
  for (long q : primes) out.push_back(valuation(x, q));
  if (!smooth(x.get_num(), primes) || !smooth(x.get_den(), primes))
    throw Error(ErrorCode::InvalidArgument, "support of " + x.get_str() + " outside prime list");
  return out;
}

std::vector<SUnitPoint> enumerate_points(const OpenIntegerScheme& scheme, long b) {
  if (b < 1) throw Error(ErrorCode::InvalidArgument, "height bound must be >= 1");
  const auto primes = scheme.excluded_primes();
  // positive S-smooth integers <= b
  std::set<long> smooth_numbers{1};
  for (long q : primes) {
    std::vector<long> add;
    for (long s : smooth_numbers)
      for (long t = s * q; t <= b; t *= q) add.push_back(t);
    smooth_numbers.insert(add.begin(), add.end());
  }
  std::vector<Rational> found;
  for (long num : smooth_numbers)
    for (long den : smooth_numbers) {
      if (std::gcd(num, den) != 1) continue;
      for (int sign : {1, -1}) {
        Rational z(sign * num, den);
        if (z == 1) continue;
        Rational w = 1 - z;
        if (smooth(w.get_num(), primes)) found.push_back(z);
      }
    }
  std::sort(found.begin(), found.end(), [](const Rational& x, const Rational& y) {
    long hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    if (x.get_num() != y.get_num()) return x.get_num() < y.get_num();
    return x.get_den() < y.get_den();
  });
  std::vector<SUnitPoint> out;
  for (const auto& z : found) out.push_back(SUnitPoint::make(z, primes));
  return out;
}

}  // namespace ck
