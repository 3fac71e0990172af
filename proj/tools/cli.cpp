#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "annular/bijections.hpp"
#include "annular/enumerate.hpp"
#include "annular/errors.hpp"
#include "annular/map_families.hpp"
#include "annular/moments.hpp"
#include "annular/monte_carlo.hpp"
#include "annular/nc_families.hpp"
#include "annular/parallel.hpp"
#include "annular/permutation.hpp"
#include "annular/serialize.hpp"

namespace annular::cli {

namespace {

using nlohmann::json;

struct Globals {
  int threads = 1;
  std::optional<std::uint64_t> max_elements;
  std::string on_overflow = "error";
  bool no_timing = false;
  bool full_witnesses = false;
};

struct Outcome {
  json parameters = json::object();
  json result;
  int exit_code = kExitOk;
  std::optional<std::string> csv;  // replaces the JSON record when set
};

json rational_json(const Rational& r) {
  return json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()}};
}

template <class T>
json opt_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

void require_format(const std::string& format) {
  require(format == "json" || format == "csv", "--format must be json or csv");
}

// enumerate

struct EnumerateArgs {
  std::string family;
  int n = 0;
  std::optional<int> genus;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<std::size_t> limit;
  std::string format = "json";
};

bool is_ribbon_family(const std::string& f) {
  return f == "a" || f == "b" || f == "a-tilde" || f == "b-tilde" || f == "a-hat" ||
         f == "b-hat";
}

int need(const std::optional<int>& v, const char* flag, const std::string& family) {
  require(v.has_value(), "family " + family + " needs " + flag);
  return *v;
}

Outcome cmd_enumerate(const EnumerateArgs& a) {
  require_format(a.format);
  require(a.n >= 1, "--n must be positive");
  Outcome o;
  o.parameters = {{"family", a.family}, {"n", a.n},       {"genus", opt_json(a.genus)},
                  {"k", opt_json(a.k)},  {"p", opt_json(a.p)}, {"limit", opt_json(a.limit)},
                  {"format", a.format}};

  FamilySet members;
  bool truncated = false;
  const std::map<Permutation, std::vector<Witness>>* witnesses = nullptr;
  NCFamily nc;
  const EnumerationBudget& budget = default_budget();

  if (is_ribbon_family(a.family)) {
    const std::string& f = a.family;
    EnumerationOutcome eo;
    if (f == "a") {
      require(!a.p, "family a takes no --p");
      members = family_a(a.n, need(a.genus, "--genus", f), budget, &eo);
    } else if (f == "b") {
      require(!a.p, "family b takes no --p");
      members = family_b(a.n, need(a.k, "--k", f), budget, &eo);
    } else if (f == "a-tilde") {
      members = family_a_tilde(a.n, need(a.genus, "--genus", f), need(a.p, "--p", f), budget, &eo);
    } else if (f == "b-tilde") {
      members = family_b_tilde(a.n, need(a.k, "--k", f), need(a.p, "--p", f), budget, &eo);
    } else if (f == "a-hat") {
      members = family_a_hat(a.n, need(a.genus, "--genus", f), need(a.p, "--p", f), budget, &eo);
    } else {
      members = family_b_hat(a.n, need(a.k, "--k", f), need(a.p, "--p", f), budget, &eo);
    }
    truncated = eo.truncated;
  } else {
    const auto tag = nc_tag_from_string(a.family);
    require(tag.has_value(), "unknown family: " + a.family);
    require(!a.genus && !a.k, "non-crossing families take no --genus or --k");
    NCFamilyId id{*tag, a.n, 0};
    if (is_graded(*tag)) {
      id.p = need(a.p, "--p", a.family);
    } else {
      require(!a.p, "family " + a.family + " is not graded");
    }
    nc = family_nc(id, budget);
    members = nc.members;
    truncated = nc.truncated;
    if (is_union(*tag)) witnesses = &nc.witnesses;
  }

  if (a.format == "csv") {
    std::ostringstream s;
    s << "family,n,genus,k,p,count,truncated\n"
      << a.family << ',' << a.n << ',' << (a.genus ? std::to_string(*a.genus) : "") << ','
      << (a.k ? std::to_string(*a.k) : "") << ',' << (a.p ? std::to_string(*a.p) : "") << ','
      << members.size() << ',' << (truncated ? "true" : "false") << '\n';
    o.csv = s.str();
    return o;
  }

  const std::size_t listed = a.limit ? std::min(*a.limit, members.size()) : members.size();
  json elements = json::array();
  json wit = json::object();
  for (std::size_t i = 0; i < listed; ++i) {
    const std::string s = to_cycle_string(members[i]);
    elements.push_back(s);
    if (witnesses) {
      json w = json::array();
      for (const auto& [u, v] : witnesses->at(members[i])) w.push_back({u, v});
      wit[s] = std::move(w);
    }
  }
  o.result = {{"count", members.size()},
              {"listed", listed},
              {"truncated", truncated},
              {"elements", std::move(elements)}};
  if (witnesses) o.result["witnesses"] = std::move(wit);
  return o;
}

// verify

struct VerifyArgs {
  std::string bijection;
  int n = 0;
  std::optional<int> p;
  std::string hat_map = "inverse";
  std::string orientation = "both";
  std::string format = "json";
};

Outcome cmd_verify(const VerifyArgs& a, const Globals& g) {
  require_format(a.format);
  require(a.hat_map == "inverse" || a.hat_map == "tau0", "--hat-map must be inverse or tau0");
  require(a.orientation == "both" || a.orientation == "orientable" ||
              a.orientation == "nonorientable",
          "--orientation must be orientable, nonorientable or both");
  Outcome o;
  o.parameters = {{"bijection", a.bijection}, {"n", a.n},         {"p", opt_json(a.p)},
                  {"hat_map", a.hat_map},     {"orientation", a.orientation},
                  {"format", a.format}};

  ReportOptions opts;
  opts.budget = default_budget();
  if (g.full_witnesses) opts.witness_cap = 0;
  const HatMap hm = a.hat_map == "tau0" ? HatMap::Tau0 : HatMap::Inverse;

  using Graded = std::function<BijectionReport(int, int)>;
  std::optional<Graded> graded;
  std::vector<BijectionReport> reports;
  const std::string& b = a.bijection;
  if (b == "phi1" || b == "phi2" || b == "torus-eq" || b == "lemma3") {
    require(!a.p, "--p only applies to graded bijections");
    if (b == "phi1") reports.push_back(verify_phi1(a.n, opts));
    if (b == "phi2") reports.push_back(verify_phi2(a.n, opts));
    if (b == "torus-eq") reports.push_back(verify_torus_equality(a.n, opts));
    if (b == "lemma3") {
      if (a.orientation != "nonorientable") reports.push_back(verify_lemma3_orientable(a.n, opts));
      if (a.orientation != "orientable") {
        reports.push_back(verify_lemma3_nonorientable(a.n, opts));
      }
    }
  } else if (b == "phi1-tilde") {
    graded = [&](int n, int p) { return verify_phi1_tilde(n, p, opts); };
  } else if (b == "phi2-tilde") {
    graded = [&](int n, int p) { return verify_phi2_tilde(n, p, opts); };
  } else if (b == "a-tilde-eq") {
    graded = [&](int n, int p) { return verify_a_tilde_equality(n, p, opts); };
  } else if (b == "phi1-hat") {
    graded = [&](int n, int p) { return verify_phi1_hat(n, p, hm, opts); };
  } else if (b == "phi2-hat") {
    graded = [&](int n, int p) { return verify_phi2_hat(n, p, hm, opts); };
  } else if (b == "a-hat-eq") {
    graded = [&](int n, int p) { return verify_a_hat_equality(n, p, opts); };
  } else {
    throw InvalidArgument("unknown bijection: " + b);
  }
  if (graded) {
    require(a.n >= 1, "--n must be positive");
    if (a.p) {
      require(*a.p >= 1 && *a.p <= a.n, "--p must lie in 1..n");
      reports.push_back((*graded)(a.n, *a.p));
    } else {
      for (int p = 1; p <= a.n; ++p) reports.push_back((*graded)(a.n, p));
    }
  }

  bool verified = true;
  for (const auto& r : reports) verified = verified && r.verified();
  o.exit_code = verified ? kExitOk : kExitVerificationFailed;

  if (a.format == "csv") {
    std::ostringstream s;
    s << "name,n,p,domain_size,codomain_size,injective,surjective,failure_count,unreached_count,"
         "verified\n";
    for (const auto& r : reports) {
      s << r.name << ',' << r.n << ',' << r.p << ',' << r.domain_size << ',' << r.codomain_size
        << ',' << r.injective << ',' << r.surjective << ',' << r.failure_count << ','
        << r.unreached_count << ',' << r.verified() << '\n';
    }
    o.csv = s.str();
    return o;
  }
  json list = json::array();
  for (const auto& r : reports) list.push_back(to_json(r));
  o.result = {{"verified", verified}, {"reports", std::move(list)}};
  return o;
}

// moment

struct MomentArgs {
  std::string ensemble;
  int order = 0;
  bool symbolic = false;
  std::optional<int> dim;
  std::optional<int> rect_dim;
  bool mc = false;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
  std::string method = "wick";
  std::string format = "json";
};

Outcome cmd_moment(const MomentArgs& a) {
  require_format(a.format);
  const auto ens = ensemble_from_string(a.ensemble);
  require(ens.has_value(), "unknown ensemble: " + a.ensemble);
  require(a.order >= 1, "--order must be positive");
  require(a.method == "wick" || a.method == "genus", "--method must be wick or genus");
  require(!(a.symbolic && a.dim), "--symbolic and --dim are exclusive");
  require(!a.rect_dim || a.dim, "--rect-dim needs --dim");
  require(!a.mc || a.dim, "--mc needs --dim");
  require(!a.dim || *a.dim >= 1, "--dim must be positive");
  require(!a.rect_dim || *a.rect_dim >= 1, "--rect-dim must be positive");
  if (a.dim && is_laguerre(*ens)) {
    require(a.rect_dim.has_value(), "Laguerre ensembles need --rect-dim with --dim");
  }
  require(a.format == "json" || !a.dim, "CSV output covers the symbolic polynomial only");

  Outcome o;
  o.parameters = {{"ensemble", to_string(*ens)}, {"order", a.order},
                  {"symbolic", !a.dim},          {"dim", opt_json(a.dim)},
                  {"rect_dim", opt_json(a.rect_dim)},
                  {"mc", a.mc},                  {"method", a.method},
                  {"format", a.format}};
  if (a.mc) {
    o.parameters["samples"] = a.samples;
    o.parameters["seed"] = a.seed;
  }

  const MomentPolynomial poly = a.method == "wick" ? wick_moment(*ens, a.order)
                                                   : genus_expansion_moment(*ens, a.order);
  if (!a.dim) {
    if (a.format == "csv") {
      std::ostringstream s;
      s << "N,c,num,den\n";
      for (const auto& t : to_json(poly)["terms"]) {
        s << t["N"].get<int>() << ',' << t["c"].get<int>() << ','
          << t["num"].get<std::string>() << ',' << t["den"].get<std::string>() << '\n';
      }
      o.csv = s.str();
      return o;
    }
    o.result = {{"polynomial", to_json(poly)}, {"display", poly.to_string()}};
    return o;
  }

  const Rational N(*a.dim);
  const Rational c = is_laguerre(*ens) ? Rational(*a.rect_dim) / N : Rational(1);
  const Rational exact = poly.evaluate(N, c);
  o.result = {{"exact", rational_json(exact)},
              {"exact_double", static_cast<double>(exact)},
              {"c", rational_json(c)}};
  if (a.mc) {
    const auto est = mc_moment(*ens, a.order, *a.dim,
                               is_laguerre(*ens) ? a.rect_dim : std::nullopt, a.samples, a.seed);
    o.result["mc"] = to_json(est);
    const double diff = est.mean - static_cast<double>(exact);
    o.result["z_score"] = est.std_error > 0 ? json(diff / est.std_error) : json(nullptr);
  }
  return o;
}

// classify

struct ClassifyArgs {
  std::string perm;
  int n = 0;
  bool is_signed = false;
};

json nc_memberships(const Permutation& pi, bool is_signed) {
  static const std::vector<NCTag> kAll = {
      NCTag::NC,          NCTag::NC2,      NCTag::NCdelta,  NCTag::NC2delta,
      NCTag::NC2T,        NCTag::NC2K,     NCTag::NC2delta_bip, NCTag::NC2T_bip,
      NCTag::NC2K_bip,    NCTag::NCdelta_p, NCTag::NCT_p,  NCTag::NCK_p};
  const int n = pi.domain().n();
  json out = json::array();
  for (NCTag tag : kAll) {
    if (acts_on_signed(tag) != is_signed) continue;
    const int pmax = is_graded(tag) ? n : 0;
    for (int p = is_graded(tag) ? 1 : 0; p <= pmax; ++p) {
      std::optional<std::vector<Witness>> w;
      try {
        w = nc_membership({tag, n, p}, pi);
      } catch (const InvalidArgument&) {
        break;  // family undefined at this n
      }
      if (!w) continue;
      json entry{{"family", to_string(tag)}, {"n", n}};
      if (is_graded(tag)) entry["p"] = p;
      if (is_union(tag)) {
        json ws = json::array();
        for (const auto& [u, v] : *w) ws.push_back({u, v});
        entry["witnesses"] = std::move(ws);
      }
      out.push_back(std::move(entry));
    }
  }
  return out;
}

Outcome cmd_classify(const ClassifyArgs& a) {
  require(a.n >= 1, "--n must be positive");
  Outcome o;
  o.parameters = {{"perm", a.perm}, {"n", a.n}, {"signed", a.is_signed}};
  const GroundSet dom = a.is_signed ? GroundSet::signed_set(a.n) : GroundSet::unsigned_set(a.n);
  const Permutation pi = parse_cycles(a.perm, dom);
  const int n = a.n;

  json families = json::array();
  if (!a.is_signed) {
    if (Pairing::satisfies(pi)) {
      const Pairing pr(pi);
      families.push_back({{"family", "a"}, {"n", n}, {"genus", orientable_genus(pr)}});
      if (n % 2 == 0 && is_bipartite_pairing(pi)) {
        const auto [g, p] = bipartite_orientable_grade(pr);
        families.push_back({{"family", "a-tilde"}, {"n", n / 2}, {"genus", g}, {"p", p}});
      }
    }
    if (const auto gp = hypermap_orientable_grade(pi)) {
      families.push_back(
          {{"family", "a-hat"}, {"n", n}, {"genus", gp->first}, {"p", gp->second}});
    }
  } else {
    if (Pairing::satisfies(pi) && is_signed_symmetric(pi) && has_twist(pi) && n % 2 == 0) {
      const Pairing pr(pi);
      families.push_back({{"family", "b"}, {"n", n}, {"k", nonorientable_euler_genus(pr)}});
      if (preserves_black(pi)) {
        const auto [k, p] = bipartite_nonorientable_grade(pr);
        families.push_back({{"family", "b-tilde"}, {"n", n / 2}, {"k", k}, {"p", p}});
      }
    }
    bool negative = false;
    for (int x = 1; x <= n; ++x) negative = negative || pi(x) < 0;
    if (negative && SignedSymmetricPermutationStream::admits(pi)) {
      if (const auto kp = hypermap_nonorientable_grade(pi)) {
        families.push_back({{"family", "b-hat"}, {"n", n}, {"k", kp->first}, {"p", kp->second}});
      }
    }
  }
  for (auto& e : nc_memberships(pi, a.is_signed)) families.push_back(std::move(e));

  o.result = {{"domain", dom.describe()},
              {"perm", to_cycle_string(pi)},
              {"cycles", num_cycles(pi)},
              {"pairing", Pairing::satisfies(pi)},
              {"families", std::move(families)}};
  if (a.is_signed) o.result["delta_symmetric"] = is_delta_symmetric(pi);
  return o;
}

void emit(std::ostream& out, const std::string& command, const Outcome& o, long long timing_ms) {
  if (o.csv) {
    out << *o.csv;
    return;
  }
  json record{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", o.parameters},
              {"result", o.result},
              {"timing_ms", timing_ms}};
  out << record.dump(2) << '\n';
}

void emit_error(std::ostream& out, const std::string& command, const char* kind,
                const std::string& message) {
  json record{{"schema_version", kSchemaVersion},
              {"command", command},
              {"parameters", json::object()},
              {"result", nullptr},
              {"error", {{"kind", kind}, {"message", message}}},
              {"timing_ms", 0}};
  out << record.dump(2) << '\n';
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Annular non-crossing families, ribbon graphs and matrix moments", "annular"};
  app.require_subcommand(1);

  Globals g;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-elements", g.max_elements,
                    "Cap on raw search spaces (overrides ANNULAR_MAX_ELEMENTS)");
    sub->add_option("--on-overflow", g.on_overflow, "error or truncate when over the cap")
        ->check(CLI::IsMember({"error", "truncate"}));
    sub->add_flag("--no-timing", g.no_timing, "Report timing_ms as 0");
    sub->add_flag("--full-witnesses", g.full_witnesses, "Do not cap report witness lists");
  };

  EnumerateArgs ea;
  auto* en = app.add_subcommand("enumerate", "List the members of a family");
  en->add_option("--family", ea.family, "a, b, a-tilde, b-tilde, a-hat, b-hat or an nc tag")
      ->required();
  en->add_option("--n", ea.n, "Size parameter")->required();
  en->add_option("--genus,-g", ea.genus, "Orientable genus");
  en->add_option("--k", ea.k, "Euler genus");
  en->add_option("--p", ea.p, "Grade");
  en->add_option("--limit", ea.limit, "List at most this many elements");
  en->add_option("--format", ea.format, "json or csv");
  add_globals(en);

  VerifyArgs va;
  auto* ve = app.add_subcommand("verify", "Check a bijection or set equality exhaustively");
  ve->add_option("--bijection", va.bijection,
                 "phi1, phi2, torus-eq, phi1-tilde, phi2-tilde, a-tilde-eq, phi1-hat, "
                 "phi2-hat, a-hat-eq, lemma3")
      ->required();
  ve->add_option("--n", va.n, "Size parameter")->required();
  ve->add_option("--p", va.p, "Grade; every grade when omitted");
  ve->add_option("--hat-map", va.hat_map, "inverse or tau0");
  ve->add_option("--orientation", va.orientation, "lemma3: orientable, nonorientable or both");
  ve->add_option("--format", va.format, "json or csv");
  add_globals(ve);

  MomentArgs ma;
  auto* mo = app.add_subcommand("moment", "Compute E Tr M^n");
  mo->add_option("--ensemble", ma.ensemble, "goe, gue, loe or lue")->required();
  mo->add_option("--order", ma.order, "Moment order n")->required();
  mo->add_flag("--symbolic", ma.symbolic, "Emit the exact polynomial (default)");
  mo->add_option("--dim", ma.dim, "Evaluate at this N");
  mo->add_option("--rect-dim", ma.rect_dim, "Rows M of the Laguerre factor");
  mo->add_flag("--mc", ma.mc, "Add a Monte Carlo estimate");
  mo->add_option("--samples", ma.samples, "Monte Carlo samples");
  mo->add_option("--seed", ma.seed, "Monte Carlo seed");
  mo->add_option("--method", ma.method, "wick or genus");
  mo->add_option("--format", ma.format, "json or csv");
  add_globals(mo);

  ClassifyArgs ca;
  auto* cl = app.add_subcommand("classify", "Report every family a permutation belongs to");
  cl->add_option("--perm", ca.perm, "Cycle notation")->required();
  cl->add_option("--n", ca.n, "Size of the ground set")->required();
  cl->add_flag("--signed", ca.is_signed, "Permutation of +-[n]");
  add_globals(cl);

  std::string command;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    const auto subs = app.get_subcommands();
    if (!subs.empty()) command = subs.front()->get_name();
    err << "annular: " << e.what() << '\n';
    emit_error(out, command, "usage", e.what());
    return kExitUsage;
  }
  command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  try {
    set_thread_count(g.threads);
    EnumerationBudget budget = EnumerationBudget::from_environment();
    if (g.max_elements) budget.max_elements = *g.max_elements;
    budget.on_overflow = g.on_overflow == "truncate" ? OverflowPolicy::Truncate
                                                     : OverflowPolicy::Error;
    set_default_budget(budget);

    Outcome o;
    if (command == "enumerate") o = cmd_enumerate(ea);
    if (command == "verify") o = cmd_verify(va, g);
    if (command == "moment") o = cmd_moment(ma);
    if (command == "classify") o = cmd_classify(ca);
    const auto elapsed = std::chrono::steady_clock::now() - start;
    const long long ms =
        g.no_timing ? 0 : std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
    emit(out, command, o, ms);
    return o.exit_code;
  } catch (const CapExceeded& e) {
    err << "annular: " << e.what() << '\n';
    emit_error(out, command, "cap_exceeded", e.what());
    return kExitCap;
  } catch (const InvalidArgument& e) {
    err << "annular: " << e.what() << '\n';
    emit_error(out, command, "usage", e.what());
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "annular: " << e.what() << '\n';
    emit_error(out, command, "usage", e.what());
    return kExitUsage;
  } catch (const DomainMismatch& e) {
    err << "annular: " << e.what() << '\n';
    emit_error(out, command, "usage", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "annular: internal error: " << e.what() << '\n';
    emit_error(out, command, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace annular::cli
