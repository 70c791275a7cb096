// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "gmew/analysis.hpp"
#include "gmew/eigen.hpp"
#include "gmew/maps.hpp"
#include "gmew/states.hpp"
#include "gmew/witness.hpp"

using namespace gmew;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail.clear();
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
  void note(const std::string& what) {
    if (!pass) return;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const SpaceShape kQubits({2, 2, 2});
const SpaceShape kQutrits({3, 3, 3});

ComplexVector two_term(const SpaceShape& shape, std::vector<std::size_t> plus, std::vector<std::size_t> minus) {
  const double a = 1.0 / std::sqrt(2.0);
  ComplexVector v(shape.total_dim());
  v[shape.flat_index(plus)] = a;
  v[shape.flat_index(minus)] = -a;
  return v;
}

ComplexMatrix qubit_witness() {
  const auto t = transpose_map(2);
  std::vector<WitnessSeed> seeds{
      {Bipartition{{0}, {1, 2}}, MapSide::inside, two_term(kQubits, {0, 1, 1}, {1, 0, 0}), t},
      {Bipartition{{0, 1}, {2}}, MapSide::outside, two_term(kQubits, {1, 1, 0}, {0, 0, 1}), t},
      {Bipartition{{0, 2}, {1}}, MapSide::outside, two_term(kQubits, {1, 0, 1}, {0, 1, 0}), t},
  };
  return build_witness(std::move(seeds), kQubits).witness;
}

std::vector<double> tenths() {
  std::vector<double> v;
  for (int k = 1; k <= 9; ++k) v.push_back(0.1 * k);
  return v;
}

Outcome golden_qubit_witness() {
  Outcome o;
  const auto expect = ComplexMatrix::identity(8) * Complex{0.5} - ComplexMatrix::projector(ghz(3, 2));
  const double diff = max_abs_diff(qubit_witness(), expect);
  if (diff > 1e-12) o.fail("max deviation " + num(diff));
  else o.note("max deviation " + num(diff));
  return o;
}

Outcome ppt_invariance() {
  Outcome o;
  double worst = 0.0;
  for (double l : tenths()) {
    const auto rho = rho_lambda(l);
    for (const auto& b : enumerate_bipartitions(kQutrits))
      worst = std::max(worst, max_abs_diff(partial_transpose(rho, kQutrits, b.inside), rho));
  }
  if (worst > 1e-13) o.fail("max deviation " + num(worst));
  else o.note("max deviation " + num(worst));
  return o;
}

Outcome bound_entanglement() {
  Outcome o;
  double least_negative = -1e300;
  for (double l : tenths()) {
    const auto rho = rho_lambda(l);
    for (const auto& c : ppt_check(rho, kQutrits))
      if (c.min_eigenvalue < -1e-12) o.fail("not PPT at lambda " + num(l) + " cut " + c.bipartition.to_string());
    for (const auto& c : map_check(rho, kQutrits, MapSpec::parse("choi3"))) {
      least_negative = std::max(least_negative, c.min_eigenvalue);
      if (!(c.min_eigenvalue < -1e-6))
        o.fail("Choi map min eigenvalue " + num(c.min_eigenvalue) + " at lambda " + num(l) + " cut " +
               c.bipartition.to_string());
    }
  }
  o.note("largest min eigenvalue " + num(least_negative));
  return o;
}

Outcome gme_window() {
  Outcome o;
  const auto w = choi_ghz_witness();
  for (int k = 1; k <= 18; ++k) {
    const double l = 0.05 * k;
    const double v = trace_product(rho_lambda(l), w).real();
    if (l < 0.325 && !(v < 0.0)) o.fail("value " + num(v) + " at lambda " + num(l) + " should be negative");
    if (l > 0.325 && !(v >= 0.0)) o.fail("value " + num(v) + " at lambda " + num(l) + " should be >= 0");
  }
  const auto [lo, hi] = bracket_lambda_sign_change(w, 0.3, 0.35);
  const double mid = 0.5 * (lo + hi);
  if (std::abs(mid - 1.0 / 3.0) > 0.005) o.fail("sign change at " + num(mid));
  o.note("sign change in [" + num(lo) + ", " + num(hi) + "]");
  return o;
}

Outcome noise() {
  Outcome o;
  const auto r = noise_robustness(1.0 / 9.0, choi_ghz_witness());
  if (!r.p_crit || !r.p_crit_bisection) {
    o.fail("rho(1/9) not detected");
    return o;
  }
  if (std::abs(*r.p_crit - 9.0 / 179.0) > 1e-6) o.fail("p_crit " + num(*r.p_crit));
  const double gap = std::abs(*r.p_crit - *r.p_crit_bisection);
  if (gap > 1e-12) o.fail("affine and bisection differ by " + num(gap));
  o.note("p_crit " + num(*r.p_crit) + ", bisection gap " + num(gap));
  return o;
}

Outcome biseparable_suite() {
  Outcome o;
  const std::size_t samples = 10000;
  const auto wq = qubit_witness();
  const auto wc = choi_ghz_witness();
  const auto parts2 = enumerate_bipartitions(kQubits);
  const auto parts3 = enumerate_bipartitions(kQutrits);
  double min_q = 1e300, min_c = 1e300;
  std::size_t violations = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const std::size_t terms = 1 + k % 8;
    const double vq = trace_product(random_biseparable(kQubits, parts2, terms, 2 * k).rho, wq).real();
    const double vc = trace_product(random_biseparable(kQutrits, parts3, terms, 2 * k + 1).rho, wc).real();
    min_q = std::min(min_q, vq);
    min_c = std::min(min_c, vc);
    violations += (vq < -1e-9) + (vc < -1e-9);
  }
  if (violations) o.fail(std::to_string(violations) + " samples below -1e-9");
  o.note("min qubit value " + num(min_q) + ", min qutrit value " + num(min_c));
  return o;
}

Outcome oracle_identities() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::normal_distribution<double> g;
  const auto random_matrix = [&](std::size_t d) {
    ComplexMatrix m(d);
    for (auto& z : m.data()) z = Complex{g(rng), g(rng)};
    return m;
  };
  const auto random_hermitian = [&](std::size_t d) {
    auto m = random_matrix(d);
    return (m + m.adjoint()) * Complex{0.5};
  };
  const auto random_state = [&](std::size_t d) {
    auto m = random_matrix(d);
    auto rho = m * m.adjoint();
    return rho * Complex{1.0 / rho.trace().real()};
  };

  const std::vector<std::pair<std::string, Superoperator>> maps{
      {"identity", identity_map(3)},     {"transpose", transpose_map(3)}, {"reduction", reduction_map(3)},
      {"choi3", choi_map()},             {"gchoi:2,0,1", generalized_choi(2, 0, 1)},
      {"breuer-hall:4", breuer_hall_map(4)}};
  double worst_pairing = 0.0, worst_positive = 0.0;
  for (const auto& [name, map] : maps) {
    const auto star = dual(map);
    const std::size_t d = map.local_dim();
    for (int k = 0; k < 100; ++k) {
      const auto a = random_hermitian(d), b = random_hermitian(d);
      const double gap = std::abs(trace_product(map.apply(a), b) - trace_product(a, star.apply(b)));
      worst_pairing = std::max(worst_pairing, gap);
      if (gap > 1e-12) o.fail(name + " pairing gap " + num(gap));

      const auto rho = random_state(d);
      const double shortfall = trace_product(rho, a).real() - trace_product(rho, positive_part(a)).real();
      worst_positive = std::max(worst_positive, shortfall);
      if (shortfall > 1e-10) o.fail("positive part shortfall " + num(shortfall));
    }
  }
  o.note("pairing gap " + num(worst_pairing) + ", dominance shortfall " + num(worst_positive));
  return o;
}

Outcome region_reproduction() {
  Outcome o;
  const auto wp = ppt_pair_witness();
  const auto wc = choi_ghz_witness();
  const auto check = [&](double p, double q, RegionVerdict want) {
    const auto row = region_scan(std::vector<double>{p}, std::vector<double>{q}, wp, wc).front();
    if (row.verdict != want)
      o.fail("(" + num(p) + "," + num(q) + ") gives " + to_string(row.verdict) + " (ppt " + num(row.value_ppt) +
             ", choi " + num(row.value_choi) + "), expected " + to_string(want));
  };
  check(0.0, 1.0, RegionVerdict::choi);
  check(0.0, 0.9, RegionVerdict::choi);
  check(1.0, 0.0, RegionVerdict::both);
  check(0.0, 0.0, RegionVerdict::none);

  std::size_t ppt_only = 0, ppt_total = 0, choi_total = 0;
  for (const auto& r : region_scan(51)) {
    ppt_only += r.verdict == RegionVerdict::ppt;
    ppt_total += r.verdict == RegionVerdict::ppt || r.verdict == RegionVerdict::both;
    choi_total += r.verdict == RegionVerdict::choi || r.verdict == RegionVerdict::both;
  }
  if (ppt_only) o.fail(std::to_string(ppt_only) + " grid points detected by the transpose witness only");
  o.note("transpose detects " + std::to_string(ppt_total) + ", Choi detects " + std::to_string(choi_total) +
         " of 1326 grid points");
  return o;
}

Outcome bipartite_construction() {
  Outcome o;
  const double a = 1.0 / std::sqrt(2.0);
  const auto bell = ComplexMatrix::projector(ComplexVector{a, 0, 0, a});
  const SpaceShape two({2, 2});
  const auto w = bipartite_witness_from_map(transpose_map(2), bell, two, Bipartition{{0}, {1}}, MapSide::inside);
  if (!w) {
    o.fail("no witness returned");
    return o;
  }
  const double v = trace_product(bell, *w).real();
  // independent check: the most negative eigenvalue of the partial transpose
  const std::vector<std::size_t> first{0};
  const double oracle = min_eigenvalue(partial_transpose(bell, two, first));
  if (std::abs(v + 0.5) > 1e-10) o.fail("value " + num(v));
  if (std::abs(v - oracle) > 1e-10) o.fail("value " + num(v) + " differs from eigenvalue oracle " + num(oracle));
  o.note("value " + num(v));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 qubit witness equals 1/2 - |GHZ><GHZ|", golden_qubit_witness},
      {"2 rho(lambda) invariant under partial transposition", ppt_invariance},
      {"3 rho(lambda) PPT yet Choi-map entangled on every cut", bound_entanglement},
      {"4 Choi witness detects exactly for lambda < 1/3", gme_window},
      {"5 white-noise threshold 9/179 at lambda = 1/9", noise},
      {"6 witnesses non-negative on 10^4 biseparable samples", biseparable_suite},
      {"7 positive-part dominance and dual pairing", oracle_identities},
      {"8 (p, q) region verdicts", region_reproduction},
      {"9 bipartite witness on |phi+>", bipartite_construction},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failed += !o.pass;
    std::printf("%s  %s  [%s]\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
