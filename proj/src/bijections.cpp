#include "annular/bijections.hpp"

#include <algorithm>

#include "annular/errors.hpp"
#include "annular/nc_families.hpp"

namespace annular {

namespace {

bool under_cap(std::size_t size, std::size_t cap) { return cap == 0 || size < cap; }

void require_even(int n, const char* what) {
  if (n < 2 || n % 2) {
    throw InvalidArgument(std::string(what) + " needs an even n >= 2, got " + std::to_string(n));
  }
}

void require_positive(int n, const char* what) {
  if (n < 1) throw InvalidArgument(std::string(what) + " needs n >= 1");
}

Permutation times_tau0(const Permutation& p) { return compose(p, tau0(p.domain().n())); }

}  // namespace

BijectionReport compare_map(std::string name, int n, int p, const FamilySet& domain,
                            const FamilySet& codomain, const ElementMap& map,
                            const ReportOptions& options, const ImageCheck& check) {
  BijectionReport r;
  r.name = std::move(name);
  r.n = n;
  r.p = p;
  r.domain_size = domain.size();
  r.codomain_size = codomain.size();
  const std::size_t cap = options.witness_cap;

  FamilySet images;
  images.reserve(domain.size());
  for (const auto& x : domain) {
    Permutation y = map(x);
    const bool ok = contains(codomain, y) && (!check || check(x, y));
    if (!ok) {
      ++r.failure_count;
      if (under_cap(r.failures.size(), cap)) {
        r.failures.push_back(to_cycle_string(x) + " -> " + to_cycle_string(y));
      }
    }
    if (under_cap(r.witnesses.size(), cap)) {
      r.witnesses.emplace_back(to_cycle_string(x), to_cycle_string(y));
    }
    images.push_back(std::move(y));
  }
  const std::size_t mapped = images.size();
  canonicalize(images);
  r.injective = images.size() == mapped;

  for (const auto& y : codomain) {
    if (contains(images, y)) continue;
    ++r.unreached_count;
    if (under_cap(r.unreached.size(), cap)) r.unreached.push_back(to_cycle_string(y));
  }
  r.surjective = r.unreached_count == 0;
  return r;
}

Permutation phi1(const Pairing& t1) {
  if (RibbonGraph::nonorientable(t1).euler_genus() != 1) {
    throw InvalidArgument("phi1 needs a member of b1(n), got " + to_cycle_string(t1));
  }
  return times_tau0(t1);
}

Permutation phi1_inverse(const Permutation& pi) { return times_tau0(pi); }

Permutation phi2(const Pairing& t1) {
  if (RibbonGraph::nonorientable(t1).euler_genus() != 2) {
    throw InvalidArgument("phi2 needs a member of b2(n), got " + to_cycle_string(t1));
  }
  return times_tau0(t1);
}

Permutation phi2_inverse(const Permutation& pi) { return times_tau0(pi); }

BijectionReport verify_phi1(int n, const ReportOptions& options) {
  require_even(n, "phi1");
  const FamilySet dom = family_b(n, 1, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2delta, n}, options.budget).members;
  return compare_map("phi1", n, 0, dom, cod, times_tau0, options);
}

BijectionReport verify_torus_equality(int n, const ReportOptions& options) {
  require_even(n, "torus-eq");
  const FamilySet dom = family_a(n, 1, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2T, n}, options.budget).members;
  return compare_map("torus-eq", n, 0, dom, cod, [](const Permutation& x) { return x; }, options);
}

BijectionReport verify_phi2(int n, const ReportOptions& options) {
  require_even(n, "phi2");
  const FamilySet dom = family_b(n, 2, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2K, n}, options.budget).members;
  return compare_map("phi2", n, 0, dom, cod, times_tau0, options);
}

BijectionReport verify_phi1_tilde(int n, int p, const ReportOptions& options) {
  require_positive(n, "phi1-tilde");
  const FamilySet dom = family_b_tilde(n, 1, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2delta_bip, 2 * n, p}, options.budget).members;
  return compare_map("phi1-tilde", n, p, dom, cod, times_tau0, options);
}

BijectionReport verify_phi2_tilde(int n, int p, const ReportOptions& options) {
  require_positive(n, "phi2-tilde");
  const FamilySet dom = family_b_tilde(n, 2, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2K_bip, 2 * n, p}, options.budget).members;
  return compare_map("phi2-tilde", n, p, dom, cod, times_tau0, options);
}

BijectionReport verify_a_tilde_equality(int n, int p, const ReportOptions& options) {
  require_positive(n, "a-tilde-eq");
  const FamilySet dom = family_a_tilde(n, 1, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NC2T_bip, 2 * n, p}, options.budget).members;
  return compare_map("a-tilde-eq", n, p, dom, cod, [](const Permutation& x) { return x; },
                     options);
}

std::string to_string(HatMap m) { return m == HatMap::Inverse ? "inverse" : "tau0"; }

namespace {

ElementMap hat_map(HatMap m) {
  if (m == HatMap::Inverse) return [](const Permutation& t) { return inverse(t); };
  return times_tau0;
}

std::string hat_name(const char* base, HatMap m) {
  return m == HatMap::Inverse ? std::string(base) : std::string(base) + "-literal";
}

}  // namespace

BijectionReport verify_phi1_hat(int n, int p, HatMap map, const ReportOptions& options) {
  require_positive(n, "phi1-hat");
  const FamilySet dom = family_b_hat(n, 1, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NCdelta_p, n, p}, options.budget).members;
  return compare_map(hat_name("phi1-hat", map), n, p, dom, cod, hat_map(map), options);
}

BijectionReport verify_phi2_hat(int n, int p, HatMap map, const ReportOptions& options) {
  require_positive(n, "phi2-hat");
  const FamilySet dom = family_b_hat(n, 2, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NCK_p, n, p}, options.budget).members;
  return compare_map(hat_name("phi2-hat", map), n, p, dom, cod, hat_map(map), options);
}

BijectionReport verify_a_hat_equality(int n, int p, const ReportOptions& options) {
  require_positive(n, "a-hat-eq");
  const FamilySet dom = family_a_hat(n, 1, p, options.budget);
  const FamilySet cod = family_nc({NCTag::NCT_p, n, p}, options.budget).members;
  return compare_map("a-hat-eq", n, p, dom, cod, [](const Permutation& x) { return x; },
                     options);
}

BijectionReport verify_lemma3_orientable(int n, const ReportOptions& options) {
  require_positive(n, "lemma3");
  FamilySet dom;
  PairingStream pairs(GroundSet::unsigned_set(2 * n));
  drain(pairs, PairingStream::total(GroundSet::unsigned_set(2 * n)), options.budget,
        "lemma3 domain", [&](const Pairing& pi) {
          if (is_bipartite_pairing(pi)) dom.push_back(pi);
        });
  canonicalize(dom);
  // Codomain: every hypermap on [n], whatever its grade.
  FamilySet cod;
  PermutationStream perms(GroundSet::unsigned_set(n));
  drain(perms, PermutationStream::total(GroundSet::unsigned_set(n)), options.budget,
        "lemma3 codomain", [&](const Permutation& pi) {
          if (hypermap_orientable_grade(pi)) cod.push_back(pi);
        });
  canonicalize(cod);
  return compare_map(
      "lemma3-orientable", n, 0, dom, cod,
      [](const Permutation& x) { return hypermap_from_bipartite_orientable(Pairing(x)); },
      options,
      [](const Permutation& x, const Permutation& y) {
        const auto gy = hypermap_orientable_grade(y);
        return gy && *gy == bipartite_orientable_grade(Pairing(x));
      });
}

BijectionReport verify_lemma3_nonorientable(int n, const ReportOptions& options) {
  require_positive(n, "lemma3");
  FamilySet dom;
  SignedSymmetricPairingStream pairs(2 * n);
  drain(pairs, SignedSymmetricPairingStream::total(2 * n), options.budget, "lemma3 domain",
        [&](const Pairing& t1) {
          if (has_twist(t1) && preserves_black(t1)) dom.push_back(t1);
        });
  canonicalize(dom);
  // Codomain: every twisted hypermap on +-[n], whatever its grade.
  FamilySet cod;
  SignedSymmetricPermutationStream hyper(n);
  drain(hyper, SignedSymmetricPermutationStream::raw_total(n), options.budget, "lemma3 codomain",
        [&](const Permutation& t1) {
          for (int a = 1; a <= n; ++a) {
            if (t1(a) < 0) {
              if (hypermap_nonorientable_grade(t1)) cod.push_back(t1);
              return;
            }
          }
        });
  canonicalize(cod);
  return compare_map(
      "lemma3-nonorientable", n, 0, dom, cod,
      [](const Permutation& x) { return hypermap_from_bipartite_nonorientable(Pairing(x)); },
      options,
      [](const Permutation& x, const Permutation& y) {
        const auto gy = hypermap_nonorientable_grade(y);
        return gy && *gy == bipartite_nonorientable_grade(Pairing(x));
      });
}

std::vector<ConjectureRow> conjecture_table(int max_n, const EnumerationBudget& budget) {
  std::vector<ConjectureRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    const auto counts = count_b_tilde(n, budget);
    for (int p = 1; p <= n; ++p) {
      const auto it = counts.find({1, p});
      const std::uint64_t bt = it == counts.end() ? 0 : it->second;
      const std::uint64_t nc = family_nc({NCTag::NC2delta_bip, 2 * n, p}, budget).members.size();
      rows.push_back({n, p, bt, nc});
    }
  }
  return rows;
}

}  // namespace annular
