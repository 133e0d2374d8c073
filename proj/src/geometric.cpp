#include "ck/geometric.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

#include "ck/error.hpp"

namespace ck {

AlphabetPtr geometric_alphabet(const std::vector<long>& primes, int depth) {
  std::vector<int> sigmas;
  for (int r = 3; r <= depth; r += 2) sigmas.push_back(r);
  return make_alphabet(Alphabet::taus_and_sigmas(primes, sigmas));
}

std::string cocycle_symbol(const Letter& generator) { return "Phi:" + generator.name(); }

std::string cocycle_name(const Letter& generator, const std::string& polylog_word) {
  return cocycle_symbol(generator) + ":" + polylog_word;
}

std::string word_variable_name(const Alphabet& alphabet, const Word& w) { return "f:" + format_word(alphabet, w); }

std::string target_name(int k) { return k == 0 ? std::string("log") : "Li" + std::to_string(k); }

namespace {

std::string slot_word(int s) { return std::string(static_cast<std::size_t>(s - 1), '0') + "1"; }

// All words of r tau letters.
void tau_tuples(const Alphabet& A, const std::vector<int>& taus, int r, std::vector<int>& prefix,
                std::vector<std::vector<int>>& out) {
  if (static_cast<int>(prefix.size()) == r) {
    out.push_back(prefix);
    return;
  }
  for (int t : taus) {
    prefix.push_back(t);
    tau_tuples(A, taus, r, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

SubstitutionMap ev_sharp(const AlphabetPtr& alphabet, int depth) {
  if (depth < 1) throw Error(ErrorCode::InvalidArgument, "depth must be >= 1");
  const Alphabet& A = *alphabet;
  std::vector<int> taus;
  std::map<int, int> sigma_of_weight;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const Letter& l = A[i];
    if (l.kind == LetterKind::Tau) taus.push_back(static_cast<int>(i));
    else if (l.kind == LetterKind::Sigma) {
      if (sigma_of_weight.count(l.weight)) throw Error(ErrorCode::InvalidArgument, "one sigma per weight");
      sigma_of_weight[l.weight] = static_cast<int>(i);
    } else {
      throw Error(ErrorCode::AlphabetMismatch, "ev# needs a tau/sigma alphabet");
    }
  }
  SubstitutionMap out;
  out.alphabet = alphabet;
  out.depth = depth;
  for (int t : taus) {
    out.cocycle_names.push_back(cocycle_name(A[t], "0"));
    out.cocycle_names.push_back(cocycle_name(A[t], "1"));
  }
  for (const auto& [w, idx] : sigma_of_weight) out.cocycle_names.push_back(cocycle_name(A[idx], slot_word(w)));

  TargetImage log_image{target_name(0), {}};
  for (int t : taus) log_image.terms.push_back({Word::single(A, t), {cocycle_name(A[t], "0")}});
  out.images.push_back(std::move(log_image));

  for (int m = 1; m <= depth; ++m) {
    TargetImage img{target_name(m), {}};
    for (int s = 1; s <= m; ++s) {
      const int r = m - s;
      std::vector<int> slots;
      if (s == 1) slots = taus;
      else if (sigma_of_weight.count(s)) slots.push_back(sigma_of_weight.at(s));
      if (slots.empty()) continue;
      std::vector<std::vector<int>> tuples;
      std::vector<int> prefix;
      tau_tuples(A, taus, r, prefix, tuples);
      for (const auto& tup : tuples)
        for (int rho : slots) {
          std::vector<int> letters = tup;
          letters.push_back(rho);
          std::vector<std::string> syms;
          for (int t : tup) syms.push_back(cocycle_name(A[t], "0"));
          syms.push_back(cocycle_name(A[rho], slot_word(s)));
          img.terms.push_back({Word(A, letters), std::move(syms)});
        }
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

std::string SubstitutionMap::to_string(const std::string& target) const {
  for (const auto& img : images) {
    if (img.target != target) continue;
    if (img.terms.empty()) return "0";
    std::string s;
    for (const auto& [w, syms] : img.terms) {
      if (!s.empty()) s += " + ";
      s += word_variable_name(*alphabet, w);
      for (const auto& x : syms) s += "*" + x;
    }
    return s;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown target " + target);
}

std::vector<std::string> IdealPresentation::generator_strings() const {
  std::vector<std::string> out;
  for (const auto& g : generators) out.push_back(g.to_string());
  return out;
}

// ------------------------------------------------------------------ elimination

namespace {

struct Coefficient {
  std::string name;
  int weight;
  ShuffleElement element;
};

// Collect the Goncharov generators up to the depth, naming single Lyndon words f:w.
std::vector<Coefficient> coefficient_generators(GoncharovAlgebra& G, int depth) {
  const Alphabet& A = *G.alphabet();
  std::vector<Coefficient> out;
  for (int m = depth; m >= 1; --m) {
    int j = 0;
    for (const auto& g : G.generators(m)) {
      ++j;
      std::string name = "G:" + std::to_string(m) + "." + std::to_string(j);
      if (g.terms().size() == 1 && g.terms().begin()->second == 1 && is_lyndon(g.terms().begin()->first))
        name = word_variable_name(A, g.terms().begin()->first);
      out.push_back({name, m, g});
    }
  }
  return out;
}

Polynomial lyndon_to_ring(const RingPtr& ring, const Alphabet& A, const LyndonPolynomial& lp) {
  Polynomial out(ring);
  for (const auto& [mono, c] : lp) {
    Polynomial t = Polynomial::constant(ring, c);
    for (const auto& w : mono) t = t * Polynomial::variable(ring, word_variable_name(A, w));
    out += t;
  }
  return out;
}

Polynomial image_polynomial(const RingPtr& ring, const Alphabet& A, const TargetImage& img,
                            std::map<Word, LyndonPolynomial>& cache) {
  Polynomial out(ring);
  for (const auto& [w, syms] : img.terms) {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, to_lyndon_polynomial(ShuffleElement::word(std::make_shared<Alphabet>(A), w))).first;
    Polynomial t = lyndon_to_ring(ring, A, it->second);
    for (const auto& s : syms) t = t * Polynomial::variable(ring, s);
    out += t;
  }
  return out;
}

std::set<Word> lyndon_words_used(const std::map<Word, LyndonPolynomial>& cache,
                                 const std::vector<LyndonPolynomial>& extra) {
  std::set<Word> used;
  for (const auto& [w, lp] : cache)
    for (const auto& [m, c] : lp) used.insert(m.begin(), m.end());
  for (const auto& lp : extra)
    for (const auto& [m, c] : lp) used.insert(m.begin(), m.end());
  return used;
}

}  // namespace

IdealPresentation eliminate(const SubstitutionMap& subst, const GroebnerBudget& budget) {
  GoncharovAlgebra G(subst.alphabet);
  return eliminate(subst, G, budget);
}

IdealPresentation eliminate(const SubstitutionMap& subst, GoncharovAlgebra& goncharov, const GroebnerBudget& budget) {
  const Alphabet& A = *subst.alphabet;
  const int n = subst.depth;
  const auto coeffs = coefficient_generators(goncharov, n);
  std::vector<LyndonPolynomial> coeff_lp;
  for (const auto& c : coeffs) coeff_lp.push_back(to_lyndon_polynomial(c.element));

  // Lyndon-expand every image word once to learn which f variables occur.
  std::map<Word, LyndonPolynomial> cache;
  for (const auto& img : subst.images)
    for (const auto& t : img.terms)
      if (!cache.count(t.first))
        cache.emplace(t.first, to_lyndon_polynomial(ShuffleElement::word(subst.alphabet, t.first)));
  const auto used = lyndon_words_used(cache, coeff_lp);

  std::set<std::string> kept_names;
  for (const auto& c : coeffs) kept_names.insert(c.name);
  std::vector<RingVariable> vars;
  for (const auto& s : subst.cocycle_names) vars.push_back({s, 0, 1});
  for (const auto& w : used) {
    std::string name = word_variable_name(A, w);
    if (!kept_names.count(name)) vars.push_back({name, 0, w.weight()});
  }
  std::vector<RingVariable> kept;
  for (int k = n; k >= 0; --k) kept.push_back({target_name(k), 0, std::max(k, 1)});
  for (const auto& c : coeffs) kept.push_back({c.name, 0, c.weight});
  for (auto v : kept) {
    v.block = 1;
    vars.push_back(v);
  }
  auto ring = std::make_shared<const PolyRing>(vars);

  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const auto& c = coeffs[i];
    if (c.name.rfind("G:", 0) == 0)
      gens.push_back(Polynomial::variable(ring, c.name) - lyndon_to_ring(ring, A, coeff_lp[i]));
  }
  for (const auto& img : subst.images)
    gens.push_back(Polynomial::variable(ring, img.target) - image_polynomial(ring, A, img, cache));

  GroebnerResult gb = groebner_basis(gens, budget);
  if (!gb.complete)
    throw Error(ErrorCode::BudgetExhausted, "Groebner budget exhausted after " + std::to_string(gb.pairs_processed) +
                                                " pairs; partial basis has " + std::to_string(gb.basis.size()) +
                                                " elements");
  IdealPresentation out;
  out.alphabet = subst.alphabet;
  out.depth = n;
  out.order = "block(Phi,f | Li" + std::to_string(n) + ">...>log>G) weighted-lex";
  out.ring = std::make_shared<const PolyRing>(kept);
  for (const auto& c : coeffs) out.coefficients.emplace(c.name, c.element);
  for (const auto& g : elimination_part(gb.basis, 1)) out.generators.push_back(g.rename_into(out.ring));
  return out;
}

bool vanishes_under_ev(const IdealPresentation& ideal, const SubstitutionMap& subst, const Polynomial& f) {
  const Alphabet& A = *subst.alphabet;
  std::map<Word, LyndonPolynomial> cache;
  std::vector<LyndonPolynomial> coeff_lp;
  for (const auto& [name, el] : ideal.coefficients) coeff_lp.push_back(to_lyndon_polynomial(el));
  for (const auto& img : subst.images)
    for (const auto& t : img.terms)
      if (!cache.count(t.first))
        cache.emplace(t.first, to_lyndon_polynomial(ShuffleElement::word(subst.alphabet, t.first)));
  std::vector<RingVariable> vars;
  for (const auto& s : subst.cocycle_names) vars.push_back({s, 0, 1});
  for (const auto& w : lyndon_words_used(cache, coeff_lp)) vars.push_back({word_variable_name(A, w), 0, w.weight()});
  auto big = std::make_shared<const PolyRing>(vars);
  std::vector<Polynomial> images;
  for (const auto& v : ideal.ring->variables()) {
    if (auto it = ideal.coefficients.find(v.name); it != ideal.coefficients.end()) {
      images.push_back(lyndon_to_ring(big, A, to_lyndon_polynomial(it->second)));
      continue;
    }
    bool found = false;
    for (const auto& img : subst.images)
      if (img.target == v.name) {
        images.push_back(image_polynomial(big, A, img, cache));
        found = true;
      }
    if (!found) throw Error(ErrorCode::InvalidArgument, "no image for " + v.name);
  }
  return f.substitute(big, images).is_zero();
}

// ------------------------------------------------------------------ serialization

std::string serialize_ideal(const IdealPresentation& ideal) {
  nlohmann::ordered_json j;
  j["format"] = "ck-ideal";
  j["version"] = 1;
  std::vector<std::string> letters;
  for (const auto& l : ideal.alphabet->letters()) letters.push_back(l.name());
  j["alphabet"] = letters;
  j["depth"] = ideal.depth;
  j["order"] = ideal.order;
  nlohmann::ordered_json vars = nlohmann::ordered_json::array();
  for (const auto& v : ideal.ring->variables()) vars.push_back({{"name", v.name}, {"weight", v.weight}});
  j["variables"] = vars;
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
  for (const auto& [name, el] : ideal.coefficients) coeffs[name] = to_pairs(el);
  j["coefficients"] = coeffs;
  j["generators"] = ideal.generator_strings();
  return j.dump(2) + "\n";
}

namespace {

Letter letter_from_name(const std::string& s) {
  if (s.size() < 2 || (s[0] != 't' && s[0] != 's')) throw Error(ErrorCode::ParseError, "bad letter " + s);
  long label = std::stol(s.substr(1));
  return s[0] == 't' ? tau(label) : sigma(static_cast<int>(label));
}

}  // namespace

IdealPresentation parse_ideal(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("ideal file: ") + e.what());
  }
  if (j.value("format", "") != "ck-ideal") throw Error(ErrorCode::ParseError, "not an ideal file");
  try {
    IdealPresentation out;
    std::vector<Letter> letters;
    for (const auto& s : j.at("alphabet")) letters.push_back(letter_from_name(s.get<std::string>()));
    out.alphabet = make_alphabet(Alphabet(letters));
    out.depth = j.at("depth").get<int>();
    out.order = j.at("order").get<std::string>();
    std::vector<RingVariable> vars;
    for (const auto& v : j.at("variables")) vars.push_back({v.at("name").get<std::string>(), 0, v.at("weight").get<int>()});
    out.ring = std::make_shared<const PolyRing>(vars);
    for (const auto& [name, pairs] : j.at("coefficients").items())
      out.coefficients.emplace(name, from_pairs(out.alphabet, pairs.get<std::vector<std::pair<std::string, std::string>>>()));
    for (const auto& g : j.at("generators")) out.generators.push_back(parse_polynomial(out.ring, g.get<std::string>()));
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("ideal file: ") + e.what());
  }
}

}  // namespace ck
