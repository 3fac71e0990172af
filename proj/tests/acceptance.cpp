// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails. Criterion 10 is reported as evidence only.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "annular/bijections.hpp"
#include "annular/map_families.hpp"
#include "annular/moments.hpp"
#include "annular/monte_carlo.hpp"
#include "annular/nc_families.hpp"
#include "annular/parallel.hpp"
#include "oracles.hpp"

using namespace annular;

namespace {

// Pinned tolerances and limits.
constexpr double kLimitCatalanSeconds = 10;
constexpr double kLimitCrossMethodSeconds = 300;
constexpr double kLimitOracleSeconds = 120;
constexpr double kLimitPhi1Seconds = 60;
constexpr double kLimitTorusSeconds = 60;
constexpr double kLimitPhi2Seconds = 120;
constexpr double kLimitBipartiteSeconds = 300;
constexpr double kLimitMonteCarloSeconds = 180;
constexpr double kMcSigmas = 4.0;
constexpr std::uint64_t kMcSamples = 100000;
constexpr int kMcDim = 10;
constexpr int kMcRectDim = 20;
constexpr int kMcOrder = 4;
constexpr int kBatterySeeds = 20;
constexpr std::uint64_t kBatterySamples = 20000;
constexpr int kBatteryMaxFailures = 1;  // 5% of 20
constexpr int kDefectTrials = 10000;
constexpr int kDefectMaxN = 8;

struct Check {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void report(int id, const std::string& title, Check& c, double secs, double limit) {
  if (secs > limit) {
    std::ostringstream s;
    s << "took " << secs << " s, limit " << limit << " s";
    c.require(false, s.str());
  }
  std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", id, c.ok ? "PASS" : "FAIL", title.c_str(),
              secs, c.ok ? "" : "  ", c.ok ? "" : c.note.str().c_str());
  std::fflush(stdout);
  if (!c.ok) ++failures;
}

void criterion1() {
  const auto t = Clock::now();
  Check c;
  const std::vector<std::uint64_t> want = {1, 2, 5, 14, 42, 132};
  for (int m = 1; m <= 6; ++m) {
    const auto counts = count_a(2 * m);
    const auto it = counts.find(0);
    const std::uint64_t got = it == counts.end() ? 0 : it->second;
    c.require(got == want[static_cast<std::size_t>(m - 1)],
              "|a_0(" + std::to_string(2 * m) + ")| = " + std::to_string(got));
  }
  report(1, "Catalan leading order |a_0(2m)|, m = 1..6", c, seconds_since(t),
         kLimitCatalanSeconds);
}

void criterion2() {
  const auto t = Clock::now();
  Check c;
  MomentPolynomial gue;
  gue.add(3, 0, Rational(1, 2));
  gue.add(1, 0, Rational(1, 4));
  MomentPolynomial lue;
  lue.add(3, 2, Rational(1));
  lue.add(3, 1, Rational(1));
  const auto g = wick_moment(Ensemble::GUE, 4);
  const auto l = wick_moment(Ensemble::LUE, 2);
  c.require(g == gue, "GUE m4 = " + g.to_string());
  c.require(l == lue, "LUE m2 = " + l.to_string());
  report(2, "GUE m4 = (2N^3+N)/4 and LUE m2 = c^2N^3 + cN^3", c, seconds_since(t), 1e9);
}

void criterion3() {
  const auto t = Clock::now();
  Check c;
  auto check = [&](Ensemble e, int n) {
    const auto w = wick_moment(e, n);
    const auto g = genus_expansion_moment(e, n);
    c.require(w == g, to_string(e) + " n=" + std::to_string(n) + ": " + w.to_string() +
                          " vs " + g.to_string());
  };
  for (int n = 2; n <= 12; n += 2) check(Ensemble::GUE, n);
  for (int n = 2; n <= 10; n += 2) check(Ensemble::GOE, n);
  for (int n = 1; n <= 6; ++n) check(Ensemble::LUE, n);
  for (int n = 1; n <= 4; ++n) check(Ensemble::LOE, n);
  report(3, "Wick sums equal genus expansions (GUE<=12, GOE<=10, LUE<=6, LOE<=4)", c,
         seconds_since(t), kLimitCrossMethodSeconds);
}

void criterion4() {
  const auto t = Clock::now();
  Check c;
  for (Ensemble e : {Ensemble::GUE, Ensemble::GOE}) {
    for (int n = 1; n <= 6; ++n) {
      const auto w = wick_moment(e, n);
      for (int N = 1; N <= 5; ++N) {
        c.require(w.evaluate(Rational(N)) == wick_oracle_small_n(e, n, N),
                  to_string(e) + " n=" + std::to_string(n) + " N=" + std::to_string(N));
      }
    }
  }
  for (Ensemble e : {Ensemble::LUE, Ensemble::LOE}) {
    for (int n = 1; n <= 3; ++n) {
      const auto w = wick_moment(e, n);
      for (int N = 1; N <= 5; ++N) {
        for (int M = 1; M <= 5; ++M) {
          c.require(w.evaluate(Rational(N), Rational(M) / Rational(N)) ==
                        wick_oracle_small_n(e, n, N, M),
                    to_string(e) + " n=" + std::to_string(n) + " N=" + std::to_string(N) +
                        " M=" + std::to_string(M));
        }
      }
    }
  }
  report(4, "Wick sums equal the literal index-sum oracle at N = 1..5", c, seconds_since(t),
         kLimitOracleSeconds);
}

void criterion5() {
  const auto t = Clock::now();
  Check c;
  for (int n = 2; n <= 8; n += 2) {
    const BijectionReport r = verify_phi1(n);
    const auto nc = family_nc({NCTag::NC2delta, n}).members.size();
    c.require(r.verified(), "phi1 n=" + std::to_string(n) + " not verified");
    c.require(r.domain_size == nc, "|b_1(" + std::to_string(n) + ")| != |NC2delta|");
  }
  report(5, "phi1: b_1(n) -> NC2delta(n,-n) bijective, n = 2,4,6,8", c, seconds_since(t),
         kLimitPhi1Seconds);
}

// Genus-one pairings counted from the Euler characteristic alone.
std::uint64_t oracle_genus_one(int n) {
  std::uint64_t count = 0;
  const oracle::Perm gamma = oracle::long_cycle(n);
  for (const auto& p : oracle::pairings(oracle::unsigned_labels(n))) {
    count += oracle::cycles(oracle::compose(p, gamma)) == n / 2 - 1;
  }
  return count;
}

void criterion6() {
  const auto t = Clock::now();
  Check c;
  const std::vector<std::pair<int, std::uint64_t>> sizes = {{4, 1}, {6, 10}, {8, 70}};
  for (const auto& [n, size] : sizes) {
    const BijectionReport r = verify_torus_equality(n);
    c.require(r.verified(), "a_1(" + std::to_string(n) + ") != NC2T");
    c.require(r.domain_size == size && oracle_genus_one(n) == size,
              "size at n=" + std::to_string(n));
  }
  report(6, "a_1(n) = NC2T(n) as sets, n = 4,6,8 (sizes 1, 10, 70)", c, seconds_since(t),
         kLimitTorusSeconds);
}

void criterion7() {
  const auto t = Clock::now();
  Check c;
  for (int n : {4, 6}) {
    const BijectionReport r = verify_phi2(n);
    c.require(r.verified(), "phi2 n=" + std::to_string(n) + " not verified");
    if (n == 4) c.require(r.domain_size == 4, "|b_2(4)| = " + std::to_string(r.domain_size));
  }
  report(7, "phi2: b_2(n) -> NC2K(n) bijective, n = 4,6; |b_2(4)| = 4", c, seconds_since(t),
         kLimitPhi2Seconds);
}

void criterion8() {
  const auto t = Clock::now();
  Check c;
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int N = 1; N <= 5; ++N) {
    xs.emplace_back(N);
    ys.push_back(wick_oracle_small_n(Ensemble::GOE, 4, N));
  }
  const auto interp = oracle::interpolate(xs, ys);
  const Rational scale = pow2(4);
  const Rational n2 = correction_coefficient(Ensemble::GOE, 4, 2).coefficient(0);
  const Rational n1 = correction_coefficient(Ensemble::GOE, 4, 1).coefficient(0);
  const auto a = count_a(4);
  const auto b = count_b(4);
  c.require(n2 == interp[2] && n1 == interp[1], "coefficients disagree with the oracle");
  c.require(n2 * scale == 5 && b.at(1) == 5, "N^2 coefficient * 16 != |b_1(4)| = 5");
  c.require(n1 * scale == 5 && a.at(1) + b.at(2) == 5,
            "N^1 coefficient * 16 != |a_1(4)| + |b_2(4)| = 5");
  report(8, "GOE n=4 corrections: 16[N^2] = |b_1(4)|, 16[N] = |a_1(4)| + |b_2(4)|", c,
         seconds_since(t), 1e9);
}

void criterion9() {
  const auto t = Clock::now();
  Check c;
  std::vector<std::string> literal;
  for (int n = 1; n <= 3; ++n) {
    for (int p = 1; p <= n; ++p) {
      const std::string at = " n=" + std::to_string(n) + " p=" + std::to_string(p);
      c.require(verify_phi1_tilde(n, p).verified(), "phi1-tilde" + at);
      c.require(verify_phi2_tilde(n, p).verified(), "phi2-tilde" + at);
      c.require(verify_a_tilde_equality(n, p).verified(), "a-tilde-eq" + at);
      c.require(verify_phi1_hat(n, p).verified(), "phi1-hat" + at);
      c.require(verify_phi2_hat(n, p).verified(), "phi2-hat" + at);
      c.require(verify_a_hat_equality(n, p).verified(), "a-hat-eq" + at);
      for (auto* f : {&verify_phi1_hat, &verify_phi2_hat}) {
        const BijectionReport r = (*f)(n, p, HatMap::Tau0, {});
        std::ostringstream s;
        s << "    " << r.name << at << ": domain " << r.domain_size << ", codomain "
          << r.codomain_size << ", images outside " << r.failure_count << ", unreached "
          << r.unreached_count << (r.verified() ? " (verifies)" : " (does not verify)");
        literal.push_back(s.str());
      }
    }
    c.require(verify_lemma3_orientable(n).verified(), "lemma3 orientable n=" + std::to_string(n));
    c.require(verify_lemma3_nonorientable(n).verified(),
              "lemma3 non-orientable n=" + std::to_string(n));
  }
  std::printf("  hat maps with t1 -> t1 t0 taken literally:\n");
  for (const auto& l : literal) std::printf("%s\n", l.c_str());
  report(9, "bipartite and hypermap bijections, 2n = 2,4,6, every p (hat maps via t1^-1)", c,
         seconds_since(t), kLimitBipartiteSeconds);
}

void criterion10() {
  const auto t = Clock::now();
  const auto rows = conjecture_table(3);
  std::printf("  n  p  |b~_1,p(n)|  |NC~2^delta,p(2n,-2n)|  equal\n");
  int equal = 0;
  for (const auto& r : rows) {
    std::printf("  %d  %d  %11llu  %22llu  %s\n", r.n, r.p,
                static_cast<unsigned long long>(r.b_tilde),
                static_cast<unsigned long long>(r.nc_delta_bip), r.equal() ? "yes" : "no");
    equal += r.equal();
  }
  std::printf("criterion 10: EVIDENCE  bipartite count identity holds in %d of %zu rows (%.2f s)\n",
              equal, rows.size(), seconds_since(t));
  std::fflush(stdout);
}

void criterion11() {
  const auto t = Clock::now();
  Check c;
  const Rational N(kMcDim);
  const Rational cc = Rational(kMcRectDim) / N;
  for (Ensemble e : {Ensemble::GOE, Ensemble::GUE, Ensemble::LOE, Ensemble::LUE}) {
    const std::optional<int> M = is_laguerre(e) ? std::optional<int>(kMcRectDim) : std::nullopt;
    const double exact =
        static_cast<double>(wick_moment(e, kMcOrder).evaluate(N, is_laguerre(e) ? cc : Rational(1)));
    const McEstimate est = mc_moment(e, kMcOrder, kMcDim, M, kMcSamples, 1);
    const double z = (est.mean - exact) / est.std_error;
    std::printf("  %s: exact %.4f, estimate %.4f +- %.4f, z = %+.2f\n", to_string(e).c_str(),
                exact, est.mean, est.std_error, z);
    c.require(std::abs(z) < kMcSigmas, to_string(e) + " single run outside 4 SE");
    int misses = 0;
    for (int s = 0; s < kBatterySeeds; ++s) {
      const McEstimate b = mc_moment(e, kMcOrder, kMcDim, M, kBatterySamples, 1000 + s);
      misses += std::abs(b.mean - exact) >= kMcSigmas * b.std_error;
    }
    std::printf("  %s: battery misses %d of %d\n", to_string(e).c_str(), misses, kBatterySeeds);
    c.require(misses <= kBatteryMaxFailures, to_string(e) + " battery misses " +
                                                 std::to_string(misses));
  }
  report(11, "Monte Carlo within 4 SE at N=10, M=20, order 4; battery <= 1/20 misses", c,
         seconds_since(t), kLimitMonteCarloSeconds);
}

void criterion12() {
  const auto t = Clock::now();
  Check c;
  for (int n = 1; n <= 11; n += 2) {
    c.require(wick_moment(Ensemble::GUE, n).is_zero(), "GUE n=" + std::to_string(n));
    if (n <= 9) c.require(wick_moment(Ensemble::GOE, n).is_zero(), "GOE n=" + std::to_string(n));
  }
  std::mt19937_64 rng(12);
  int bad = 0;
  for (int trial = 0; trial < kDefectTrials; ++trial) {
    const int n = 2 + static_cast<int>(rng() % (kDefectMaxN - 1));
    AnnularFrame f = disk_frame(n);
    switch (rng() % 4) {
      case 0:
        break;
      case 1:
        f = annulus_frame(n);
        break;
      case 2: {
        if (n < 3) break;
        const int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 2));
        const int v = u + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1 - u));
        f = torus_frame(n, u, v);
        break;
      }
      default: {
        const int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
        const int v = u + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - u));
        f = klein_frame(n, u, v);
        break;
      }
    }
    const GroundSet d = f.gamma.domain();
    std::vector<int> img(static_cast<std::size_t>(d.size()));
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<int>(i);
    std::shuffle(img.begin(), img.end(), rng);
    const int defect = euler_defect(Permutation::from_indices(d, img), f.gamma);
    bad += defect < 0 || defect % 2 != 0;
  }
  c.require(bad == 0, std::to_string(bad) + " negative or odd defects");
  report(12, "odd GUE/GOE moments vanish; Euler defect >= 0 and even on 10^4 samples", c,
         seconds_since(t), 1e9);
}

}  // namespace

int main() {
  set_thread_count(static_cast<int>(std::max(1U, std::thread::hardware_concurrency())));
  const std::vector<std::function<void()>> criteria = {
      criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
      criterion7, criterion8, criterion9, criterion10, criterion11, criterion12};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      std::printf("criterion %2zu: FAIL  unexpected error: %s\n", i + 1, e.what());
      ++failures;
    }
  }
  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
