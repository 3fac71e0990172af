#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "annular/enumerate.hpp"
#include "annular/polynomial.hpp"

namespace annular {

enum class Ensemble : std::uint8_t { GOE, GUE, LOE, LUE };

std::string to_string(Ensemble e);
std::optional<Ensemble> ensemble_from_string(const std::string& s);
bool is_laguerre(Ensemble e) noexcept;

/// Largest order accepted per ensemble.
struct MomentCaps {
  int gue = 12;
  int goe = 10;
  int lue = 8;
  int loe = 5;

  int max_order(Ensemble e) const noexcept;
};

/// E Tr M^n as an exact polynomial, summed over pairings or permutations:
///   GUE: 2^(-n/2) sum_{pi in P2(n)} N^#(pi^-1 1_n)
///   GOE: 2^(-n) sum_{t1} N^(#(t2 t1)/2), t1 over signed symmetric pairings of +-[n]
///   LUE: sum_{pi in S_n} c^#pi N^(#pi + #(pi^-1 1_n))
///   LOE: 2^(-n) sum_{t1} c^(#W/2) N^((#B + #W)/2), t1 over signed symmetric
///        pairings of +-[2n] preserving B(n); #B, #W count cycles of t2 t1
///        on B(n) and W(n).
/// Laguerre moments use M = cN.
MomentPolynomial wick_moment(Ensemble e, int n, const EnumerationBudget& budget = default_budget(),
                             const MomentCaps& caps = {});

/// The same moment from family sizes:
///   GUE: (N/2)^(n/2) sum_g N^(1-2g) |a_g(n)|
///   GOE: (N/4)^(n/2) sum_k N^(1-k) (|a_{k/2}(n)| [k even] + |b_k(n)|)
///   LUE: N^n sum_{g,p} c^p N^(1-2g) |a~_{g,p}(n)|
///   LOE: (N/2)^n sum_{k,p} c^p N^(1-k) (|a~_{k/2,p}(n)| [k even] + |b~_{k,p}(n)|)
MomentPolynomial genus_expansion_moment(Ensemble e, int n,
                                        const EnumerationBudget& budget = default_budget(),
                                        const MomentCaps& caps = {});

/// Coefficient of N^n_power in wick_moment(e, n), as a polynomial in c.
MomentPolynomial correction_coefficient(Ensemble e, int n, int n_power,
                                        const EnumerationBudget& budget = default_budget(),
                                        const MomentCaps& caps = {});

/// Literal index sum sum_{i} E[M_{i1 i2} ... M_{in i1}] with each expectation
/// expanded by Wick's rule over the entries' covariances. Laguerre ensembles
/// need the rectangular dimension M (rows of G). Requires N^n M^n <= 1e7.
Rational wick_oracle_small_n(Ensemble e, int n, int N, std::optional<int> M = std::nullopt);

}  // namespace annular
