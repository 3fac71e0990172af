#include "annular/moments.hpp"

#include <cmath>
#include <functional>
#include <vector>

#include "annular/errors.hpp"
#include "annular/map_families.hpp"
#include "filter.hpp"

namespace annular {

std::string to_string(Ensemble e) {
  switch (e) {
    case Ensemble::GOE:
      return "goe";
    case Ensemble::GUE:
      return "gue";
    case Ensemble::LOE:
      return "loe";
    case Ensemble::LUE:
      return "lue";
  }
  return "?";
}

std::optional<Ensemble> ensemble_from_string(const std::string& s) {
  for (Ensemble e : {Ensemble::GOE, Ensemble::GUE, Ensemble::LOE, Ensemble::LUE}) {
    if (s == to_string(e)) return e;
  }
  return std::nullopt;
}

bool is_laguerre(Ensemble e) noexcept { return e == Ensemble::LOE || e == Ensemble::LUE; }

int MomentCaps::max_order(Ensemble e) const noexcept {
  switch (e) {
    case Ensemble::GOE:
      return goe;
    case Ensemble::GUE:
      return gue;
    case Ensemble::LOE:
      return loe;
    case Ensemble::LUE:
      return lue;
  }
  return 0;
}

namespace {

// Returns false when the moment is identically zero.
bool check_order(Ensemble e, int n, const MomentCaps& caps) {
  if (n < 1) throw InvalidArgument("moment order must be positive, got " + std::to_string(n));
  if (n > caps.max_order(e)) {
    throw CapExceeded(to_string(e) + " moment order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(caps.max_order(e)));
  }
  return is_laguerre(e) || n % 2 == 0;
}

}  // namespace

MomentPolynomial wick_moment(Ensemble e, int n, const EnumerationBudget& budget,
                             const MomentCaps& caps) {
  if (!check_order(e, n, caps)) return {};
  MomentPolynomial out;
  switch (e) {
    case Ensemble::GUE: {
      const GroundSet dom = GroundSet::unsigned_set(n);
      const Permutation gamma = one_n(n);
      const auto hist = detail::parallel_tally<int>(
          PairingStream::total(dom), budget, "gue wick sum",
          [&](Slice s) { return PairingStream(dom, s); },
          [&](const Pairing& pi) { return std::optional<int>(num_cycles(compose(pi, gamma))); });
      for (const auto& [c, count] : hist) out.add(c, 0, Rational(count));
      out *= pow2(-n / 2);
      break;
    }
    case Ensemble::GOE: {
      const Permutation t2 = tau2(n);
      const auto hist = detail::parallel_tally<int>(
          SignedSymmetricPairingStream::total(n), budget, "goe wick sum",
          [&](Slice s) { return SignedSymmetricPairingStream(n, s); },
          [&](const Pairing& t1) { return std::optional<int>(num_cycles(compose(t2, t1))); });
      for (const auto& [c, count] : hist) {
        if (c % 2) throw InvariantViolation("odd #(t2 t1) in the goe sum");
        out.add(c / 2, 0, Rational(count));
      }
      out *= pow2(-n);
      break;
    }
    case Ensemble::LUE: {
      const GroundSet dom = GroundSet::unsigned_set(n);
      const Permutation gamma = one_n(n);
      const auto hist = detail::parallel_tally<std::pair<int, int>>(
          PermutationStream::total(dom), budget, "lue wick sum",
          [&](Slice s) { return PermutationStream(dom, s); },
          [&](const Permutation& pi) {
            return std::optional(
                std::pair{num_cycles(pi), num_cycles(compose(inverse(pi), gamma))});
          });
      for (const auto& [k, count] : hist) out.add(k.first + k.second, k.first, Rational(count));
      break;
    }
    case Ensemble::LOE: {
      const Permutation t2 = tau2(2 * n);
      const std::vector<int> black = black_labels(n);
      const std::vector<int> white = white_labels(n);
      const auto hist = detail::parallel_tally<std::pair<int, int>>(
          SignedSymmetricPairingStream::total(2 * n), budget, "loe wick sum",
          [&](Slice s) { return SignedSymmetricPairingStream(2 * n, s); },
          [&](const Pairing& t1) -> std::optional<std::pair<int, int>> {
            if (!preserves_black(t1)) return std::nullopt;
            const Permutation m = compose(t2, t1);
            return std::pair{restrict_to(m, black).num_cycles(),
                             restrict_to(m, white).num_cycles()};
          });
      for (const auto& [k, count] : hist) {
        const auto [nb, nw] = k;
        if (nw % 2 || (nb + nw) % 2) throw InvariantViolation("odd boundary count in the loe sum");
        out.add((nb + nw) / 2, nw / 2, Rational(count));
      }
      out *= pow2(-n);
      break;
    }
  }
  return out;
}

MomentPolynomial genus_expansion_moment(Ensemble e, int n, const EnumerationBudget& budget,
                                        const MomentCaps& caps) {
  if (!check_order(e, n, caps)) return {};
  MomentPolynomial sum;
  switch (e) {
    case Ensemble::GUE: {
      const auto a = count_a(n, budget);
      for (const auto& [g, count] : a) sum.add(1 - 2 * g, 0, Rational(count));
      return sum * MomentPolynomial::monomial(n / 2, 0, pow2(-n / 2));
    }
    case Ensemble::GOE: {
      const auto a = count_a(n, budget);
      const auto b = count_b(n, budget);
      for (const auto& [g, count] : a) sum.add(1 - 2 * g, 0, Rational(count));
      for (const auto& [k, count] : b) sum.add(1 - k, 0, Rational(count));
      return sum * MomentPolynomial::monomial(n / 2, 0, pow2(-n));
    }
    case Ensemble::LUE: {
      const auto a = count_a_tilde(n, budget);
      for (const auto& [gp, count] : a) sum.add(1 - 2 * gp.first, gp.second, Rational(count));
      return sum * MomentPolynomial::monomial(n, 0, Rational(1));
    }
    case Ensemble::LOE: {
      const auto a = count_a_tilde(n, budget);
      const auto b = count_b_tilde(n, budget);
      for (const auto& [gp, count] : a) sum.add(1 - 2 * gp.first, gp.second, Rational(count));
      for (const auto& [kp, count] : b) sum.add(1 - kp.first, kp.second, Rational(count));
      return sum * MomentPolynomial::monomial(n, 0, pow2(-n));
    }
  }
  return sum;
}

MomentPolynomial correction_coefficient(Ensemble e, int n, int n_power,
                                        const EnumerationBudget& budget, const MomentCaps& caps) {
  return wick_moment(e, n, budget, caps).coefficient_of_N(n_power);
}

namespace {

// One entry M_{row,col} of the product, or a Ginibre entry (conj flag for LUE).
struct Factor {
  int row;
  int col;
  bool conj;
};

// Sum over pairings of `f` of the product of weight(a, b) over pairs.
std::uint64_t wick_expand(std::vector<Factor>& f, std::size_t used_mask,
                          const std::function<std::uint64_t(const Factor&, const Factor&)>& w) {
  std::size_t first = 0;
  while (first < f.size() && ((used_mask >> first) & 1u)) ++first;
  if (first == f.size()) return 1;
  std::uint64_t total = 0;
  for (std::size_t j = first + 1; j < f.size(); ++j) {
    if ((used_mask >> j) & 1u) continue;
    const std::uint64_t wj = w(f[first], f[j]);
    if (wj == 0) continue;
    total += wj * wick_expand(f, used_mask | (std::size_t{1} << first) | (std::size_t{1} << j), w);
  }
  return total;
}

bool advance(std::vector<int>& idx, int base) {
  for (auto& x : idx) {
    if (++x < base) return true;
    x = 0;
  }
  return false;
}

}  // namespace

Rational wick_oracle_small_n(Ensemble e, int n, int N, std::optional<int> M) {
  if (n < 1 || N < 1) throw InvalidArgument("oracle needs n >= 1 and N >= 1");
  if (is_laguerre(e) && (!M || *M < 1)) throw InvalidArgument("Laguerre oracle needs M >= 1");
  const double work = std::pow(static_cast<double>(N), n) *
                      (is_laguerre(e) ? std::pow(static_cast<double>(*M), n) : 1.0);
  if (work > 1e7) throw CapExceeded("oracle index space too large");
  if (!is_laguerre(e) && n % 2) return Rational(0);

  std::uint64_t count = 0;
  std::vector<Factor> f;
  if (!is_laguerre(e)) {
    // E[H_ab H_cd]: GUE 1/2 d_ad d_bc; GOE 1/4 (d_ad d_bc + d_ac d_bd).
    const bool goe = e == Ensemble::GOE;
    auto w = [goe](const Factor& x, const Factor& y) -> std::uint64_t {
      std::uint64_t r = (x.row == y.col && x.col == y.row) ? 1 : 0;
      if (goe) r += (x.row == y.row && x.col == y.col) ? 1 : 0;
      return r;
    };
    std::vector<int> i(static_cast<std::size_t>(n), 0);
    do {
      f.clear();
      for (int u = 0; u < n; ++u) {
        f.push_back({i[static_cast<std::size_t>(u)], i[static_cast<std::size_t>((u + 1) % n)], false});
      }
      count += wick_expand(f, 0, w);
    } while (advance(i, N));
    return Rational(count) * (goe ? pow2(-n) : pow2(-n / 2));
  }

  // Tr (G* G)^n = sum_{i,j} prod_u G*_{j_u i_u} G_{j_u i_(u+1)}, G of size M x N.
  // LUE: only conj/plain pairs with equal entries survive, weight 1.
  // LOE: any pair with equal entries, weight 1/2.
  const bool lue = e == Ensemble::LUE;
  auto w = [lue](const Factor& x, const Factor& y) -> std::uint64_t {
    if (x.row != y.row || x.col != y.col) return 0;
    if (lue && x.conj == y.conj) return 0;
    return 1;
  };
  std::vector<int> i(static_cast<std::size_t>(n), 0);
  std::vector<int> j(static_cast<std::size_t>(n), 0);
  do {
    do {
      f.clear();
      for (int u = 0; u < n; ++u) {
        const auto uu = static_cast<std::size_t>(u);
        f.push_back({j[uu], i[uu], true});
        f.push_back({j[uu], i[static_cast<std::size_t>((u + 1) % n)], false});
      }
      count += wick_expand(f, 0, w);
    } while (advance(j, *M));
  } while (advance(i, N));
  return lue ? Rational(count) : Rational(count) * pow2(-n);
}

}  // namespace annular
