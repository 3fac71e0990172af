#include "annular/serialize.hpp"

#include "annular/errors.hpp"

namespace annular {

using nlohmann::json;

json to_json(const MomentPolynomial& p) {
  json terms = json::array();
  const auto& t = p.terms();
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    terms.push_back({{"N", it->first.first},
                     {"c", it->first.second},
                     {"num", boost::multiprecision::numerator(it->second).str()},
                     {"den", boost::multiprecision::denominator(it->second).str()}});
  }
  return json{{"terms", std::move(terms)}};
}

MomentPolynomial polynomial_from_json(const json& j) {
  MomentPolynomial p;
  try {
    for (const auto& term : j.at("terms")) {
      const BigInt num(term.at("num").get<std::string>());
      const BigInt den(term.at("den").get<std::string>());
      if (den == 0) throw ParseError("zero denominator in polynomial");
      p.add(term.at("N").get<int>(), term.at("c").get<int>(), Rational(num, den));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed polynomial json: ") + e.what());
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw ParseError(std::string("malformed polynomial coefficient: ") + e.what());
  }
  return p;
}

json to_json(const BijectionReport& r) {
  json witnesses = json::array();
  for (const auto& [in, out] : r.witnesses) witnesses.push_back({{"input", in}, {"image", out}});
  return json{{"name", r.name},
              {"n", r.n},
              {"p", r.p},
              {"domain_size", r.domain_size},
              {"codomain_size", r.codomain_size},
              {"injective", r.injective},
              {"surjective", r.surjective},
              {"verified", r.verified()},
              {"failure_count", r.failure_count},
              {"failures", r.failures},
              {"unreached_count", r.unreached_count},
              {"unreached", r.unreached},
              {"witnesses", std::move(witnesses)}};
}

json to_json(const McEstimate& m) {
  json j{{"mean", m.mean},
         {"std_error", m.std_error},
         {"samples", m.samples},
         {"seed", m.seed},
         {"dim", m.dim},
         {"generator", m.generator},
         {"block_size", m.block_size}};
  j["rect_dim"] = m.rect_dim ? json(*m.rect_dim) : json(nullptr);
  return j;
}

json to_json(const FamilySet& s) {
  json out = json::array();
  for (const auto& p : s) out.push_back(to_cycle_string(p));
  return out;
}

}  // namespace annular
