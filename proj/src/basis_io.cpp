#include "ck/basis_io.hpp"

#include <fstream>
#include <sstream>

#include "ck/error.hpp"
#include "ck/geometric.hpp"

namespace ck {

namespace {

constexpr int kBasisFormatVersion = 1;

Rational parse_rational(const std::string& s) {
  try {
    Rational r(s);
    r.canonicalize();
    return r;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  }
}

OrderedJson element_to_json(const MotivicBasisElement& e) {
  OrderedJson j;
  switch (e.kind) {
    case MotivicBasisElement::Kind::Log:
      j["kind"] = "log";
      j["prime"] = e.prime;
      break;
    case MotivicBasisElement::Kind::Zeta:
      j["kind"] = "zeta";
      j["weight"] = e.depth;
      break;
    case MotivicBasisElement::Kind::PolyLog:
      j["kind"] = "polylog";
      j["weight"] = e.depth;
      j["point"] = e.point.value.get_str();
      break;
  }
  return j;
}

MotivicBasisElement element_from_json(const OrderedJson& j, long q_M) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "log") return MotivicBasisElement::log(j.at("prime").get<long>());
  if (kind == "zeta") return MotivicBasisElement::zeta(j.at("weight").get<int>());
  if (kind == "polylog")
    return MotivicBasisElement::polylog(j.at("weight").get<int>(),
                                        SUnitPoint::make(parse_rational(j.at("point").get<std::string>()),
                                                         primes_up_to(q_M)));
  throw Error(ErrorCode::ParseError, "unknown generator kind '" + kind + "'");
}

}  // namespace

OrderedJson approx_to_json(const Approx& x) {
  OrderedJson j;
  j["value"] = x.value().get_str();
  if (x.is_exact()) j["precision"] = nullptr;
  else j["precision"] = x.precision();
  return j;
}

Approx approx_from_json(long p, const OrderedJson& j) {
  const Rational v = parse_rational(j.at("value").get<std::string>());
  if (j.at("precision").is_null()) return Approx(p, v);
  return Approx(p, v, j.at("precision").get<long>());
}

OrderedJson padic_to_json(const PadicNumber& x) {
  OrderedJson j;
  j["p"] = x.prime();
  j["valuation"] = x.valuation();
  j["digits"] = x.unit_digits();
  j["precision"] = x.precision();
  return j;
}

PadicNumber padic_from_json(const OrderedJson& j) {
  return PadicNumber::from_digits(j.at("p").get<long>(), j.at("valuation").get<long>(),
                                  j.at("digits").get<std::vector<long>>(), j.at("precision").get<long>());
}

OrderedJson basis_to_json(const BasisResult& r) {
  const auto& B = r.basis;
  OrderedJson j;
  j["format"] = "ck-basis";
  j["version"] = kBasisFormatVersion;
  j["q_M"] = B.q_M;
  j["p"] = B.p;
  j["depth"] = B.depth;
  j["precision"] = B.precision;
  j["height"] = B.height;
  j["complete"] = B.complete;
  j["target_dims"] = B.target_dims;
  j["generators"] = OrderedJson::array();
  for (std::size_t i = 0; i < B.generators.size(); ++i) {
    OrderedJson g = element_to_json(B.generators[i]);
    g["period"] = padic_to_json(r.table.generator_periods.at(i));
    j["generators"].push_back(std::move(g));
  }
  j["expansions"] = OrderedJson::array();
  for (const auto& [key, rec] : r.table.records) {
    OrderedJson e;
    e["point"] = key.first.get_str();
    e["weight"] = key.second;
    e["coefficients"] = OrderedJson::array();
    for (const auto& c : rec.coefficients) e["coefficients"].push_back(approx_to_json(c));
    e["sigma_pairing"] = approx_to_json(rec.sigma_pairing);
    e["period"] = padic_to_json(rec.period);
    j["expansions"].push_back(std::move(e));
  }
  return j;
}

BasisResult basis_from_json(const OrderedJson& j) {
  try {
    if (j.at("format").get<std::string>() != "ck-basis")
      throw Error(ErrorCode::ParseError, "not a basis document");
    if (j.at("version").get<int>() != kBasisFormatVersion)
      throw Error(ErrorCode::ParseError, "unsupported basis format version");
    BasisResult r;
    auto& B = r.basis;
    B.q_M = j.at("q_M").get<long>();
    B.p = j.at("p").get<long>();
    B.depth = j.at("depth").get<int>();
    B.precision = j.at("precision").get<long>();
    B.height = j.at("height").get<long>();
    B.complete = j.at("complete").get<bool>();
    B.target_dims = j.at("target_dims").get<std::vector<int>>();
    B.alphabet = geometric_alphabet(primes_up_to(B.q_M), B.depth);
    r.table.p = B.p;
    r.table.precision = B.precision;
    for (const auto& g : j.at("generators")) {
      B.generators.push_back(element_from_json(g, B.q_M));
      r.table.generator_periods.push_back(padic_from_json(g.at("period")));
    }
    for (const auto& e : j.at("expansions")) {
      ExpansionRecord rec;
      for (const auto& c : e.at("coefficients")) rec.coefficients.push_back(approx_from_json(B.p, c));
      rec.sigma_pairing = approx_from_json(B.p, e.at("sigma_pairing"));
      rec.period = padic_from_json(e.at("period"));
      r.table.records[{parse_rational(e.at("point").get<std::string>()), e.at("weight").get<int>()}] = std::move(rec);
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed basis document: ") + e.what());
  }
}

std::string basis_cache_name(long q_s, int n, const BasisSchedule& s, std::optional<long> prime) {
  std::ostringstream os;
  os << "basis-v" << kBasisFormatVersion << "-qs" << q_s << "-n" << n << "-p" << (prime ? *prime : 0) << "-b"
     << s.initial_height << "-N" << s.initial_precision << "+" << s.precision_step << "x" << s.steps << "-f"
     << s.fibers << ".json";
  return os.str();
}

BasisResult cached_build_basis(long q_s, int n, const BasisSchedule& schedule, std::optional<long> prime,
                               const std::optional<std::filesystem::path>& cache_dir) {
  if (!cache_dir) return build_basis(q_s, n, schedule, prime);
  const auto path = *cache_dir / basis_cache_name(q_s, n, schedule, prime);
  if (std::ifstream in{path}) {
    try {
      return basis_from_json(OrderedJson::parse(in));
    } catch (const std::exception&) {
      // fall through and rebuild
    }
  }
  BasisResult r = build_basis(q_s, n, schedule, prime);
  std::error_code ec;
  std::filesystem::create_directories(*cache_dir, ec);
  std::ofstream out{path};
  if (!out) throw Error(ErrorCode::IoError, "cannot write basis cache " + path.string());
  out << basis_to_json(r).dump(1) << "\n";
  return r;
}

}  // namespace ck
