#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "aqc/eigensolver.hpp"
#include "aqc/errors.hpp"
#include "aqc/minima.hpp"
#include "aqc/perturbation.hpp"
#include "aqc/wmis.hpp"
#include "helpers.hpp"

using namespace aqc;

namespace {

// chi from an explicit superposition vector and a dense transverse-field action.
double chi_by_vector(const IsingProblem& p, const MinimaCluster& c) {
  const std::size_t dim = p.dimension();
  std::vector<double> psi(dim, 0.0), hb(dim, 0.0);
  for (const auto& m : c.members) psi[m.bits] = 1.0 / std::sqrt(static_cast<double>(c.size()));
  for (std::size_t a = 0; a < dim; ++a)
    for (int k = 0; k < p.n_qubits(); ++k) hb[a] += p.delta() * psi[a ^ (std::size_t{1} << k)];
  double sum = 0.0;
  for (std::size_t a = 0; a < dim; ++a)
    if (!c.contains(static_cast<std::uint32_t>(a)) && hb[a] != 0.0)
      sum += hb[a] * hb[a] / (testing::direct_energy(p, static_cast<std::uint32_t>(a)) - c.energy);
  return sum;
}

// Every ordering of the differing bits, enumerated explicitly.
double permutation_sum(const IsingProblem& p, std::uint32_t start, std::uint32_t end,
                       double e_ref) {
  std::vector<int> bits;
  for (int k = 0; k < p.n_qubits(); ++k)
    if (((start ^ end) >> k) & 1u) bits.push_back(k);
  double total = 0.0;
  do {
    double term = 1.0;
    std::uint32_t s = start;
    for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
      s ^= 1u << bits[i];
      term /= e_ref - testing::direct_energy(p, s);
    }
    total += term;
  } while (std::next_permutation(bits.begin(), bits.end()));
  return total;
}

}  // namespace

TEST_CASE("chi matches the explicit superposition") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    const auto p = testing::random_problem(rng, 3 + static_cast<int>(rng() % 8), 0.5, 0.7);
    for (const auto& c : enumerate_minima(p)) {
      const auto level = chi(p, c);
      CHECK(testing::relative_error(level.chi, chi_by_vector(p, c)) <= 1e-10);
      if (c.is_global) CHECK(level.chi > 0.0);
      ++checked;
    }
  }
  const auto f = fig2_problem({1.0, 1.8, 2.0}, 1.0);
  for (const auto& c : enumerate_minima(f)) {
    CHECK(testing::relative_error(chi(f, c).chi, chi_by_vector(f, c)) <= 1e-10);
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("chi closed values") {
  const IsingProblem one(1, {-1.0}, {}, 1.0);
  CHECK(chi(one, enumerate_minima(one)[0]).chi == doctest::Approx(0.5));
  const auto f = fig2_problem({1.0, 1.8, 2.0}, 1.0);
  const auto c = enumerate_minima(f);
  CHECK(chi(f, c[0]).chi == doctest::Approx(0.25 * (6.0 + 9.0 / 6.2)).epsilon(1e-12));
  CHECK(chi(f, c[1]).chi == doctest::Approx(16.75).epsilon(1e-12));
  CHECK(chi(f, c[1]).superposition_norm == 27);
  // A state one flip from the cluster shares its energy.
  const IsingProblem flat(2, {1.0, 0.0}, {}, 1.0);
  CHECK_THROWS_AS(chi(flat, make_cluster(flat, {{0u, 2}}, true)), DegeneracyError);
}

TEST_CASE("perturbed energy") {
  const auto f = fig2_problem({1.0, 1.8, 2.0}, 1.0);
  const auto g = chi(f, enumerate_minima(f)[0]);
  CHECK(perturbed_energy(g, 1.0) == -69.6);
  CHECK(perturbed_energy(g, 0.9) ==
        doctest::Approx(0.9 * -69.6 - g.chi * 0.01 / 0.9).epsilon(1e-14));
  CHECK(perturbed_energy(g, 0.9) == doctest::Approx(-62.660699).epsilon(1e-8));
  PerturbativeLevel zero = g;
  zero.chi = 0.0;
  CHECK(perturbed_energy(zero, 0.3) == doctest::Approx(0.3 * -69.6));
  CHECK_THROWS_AS(perturbed_energy(g, 0.0), DomainError);
  CHECK_THROWS_AS(perturbed_energy(g, 1.2), DomainError);
}

TEST_CASE("subset DP equals permutation enumeration") {
  std::mt19937_64 rng(23);
  for (int f = 1; f <= 6; ++f)
    for (int t = 0; t < 8; ++t) {
      const int n = 8;
      const auto p = testing::random_problem(rng, n, 0.6, 0.5 + 0.1 * t);
      const std::uint32_t a = static_cast<std::uint32_t>(rng() % p.dimension());
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      std::uint32_t b = a;
      for (int i = 0; i < f; ++i) b ^= 1u << idx[i];
      const auto ga = make_cluster(p, {{a, n}}, true);
      const auto lb = make_cluster(p, {{b, n}}, false);
      const double lambda = 0.3 + 0.05 * t;
      const auto c = effective_coupling(p, ga, lb, lambda);
      CHECK(c.f == f);
      CHECK(c.pairs == 1);
      const double pre = std::pow((1 - lambda) * p.delta(), f) / std::pow(lambda, f - 1);
      const double lg = pre * permutation_sum(p, b, a, ga.energy);
      const double gl = pre * permutation_sum(p, a, b, lb.energy);
      CHECK(std::abs(c.coupling_LG - lg) <= 1e-12 * std::abs(lg));
      CHECK(std::abs(c.coupling_GL - gl) <= 1e-12 * std::abs(gl));
    }
}

TEST_CASE("one-flip coupling has no denominators") {
  const IsingProblem p(2, {-1.0, 0.5}, {{0, 1, 0.3}}, 0.8);
  const auto c = effective_coupling(p, make_cluster(p, {{0b01u, 2}}, true),
                                    make_cluster(p, {{0b00u, 2}}, false), 0.4);
  CHECK(c.f == 1);
  CHECK(c.coupling_LG == doctest::Approx(0.6 * 0.8));
  CHECK(c.coupling_GL == doctest::Approx(0.6 * 0.8));
  CHECK(predicted_min_gap(c.coupling_LG, c.coupling_GL) == doctest::Approx(2 * 0.6 * 0.8));
  CHECK(predicted_min_gap(0.25, 0.25) == doctest::Approx(0.5));
  CHECK(predicted_min_gap(-0.25, 0.25) == doctest::Approx(0.5));
}

TEST_CASE("effective coupling rejects degenerate input") {
  const IsingProblem p(2, {-1.0, 0.5}, {{0, 1, 0.3}}, 1.0);
  const auto g = make_cluster(p, {{0b01u, 2}}, true);
  CHECK_THROWS_AS(effective_coupling(p, g, g, 0.5), InputError);
  CHECK_THROWS_AS(effective_coupling(p, g, make_cluster(p, {{0b10u, 2}}, false), 1.0), InputError);
  // Middle state degenerate with the reference energy.
  const IsingProblem flat(2, {0.0, 0.0}, {}, 1.0);
  CHECK_THROWS_AS(effective_coupling(flat, make_cluster(flat, {{0u, 2}}, true),
                                     make_cluster(flat, {{3u, 2}}, false), 0.5),
                  DegeneracyError);
}

TEST_CASE("path sum respects the envelope bound") {
  const auto f = fig2_problem({1.0, 1.8, 2.0}, 1.0);
  const auto cl = enumerate_minima(f);
  const double lambda = 0.7;
  const auto c = effective_coupling(f, cl[0], cl[1], lambda);
  CHECK(c.f == 9);
  CHECK(c.pairs == 27);
  // Smallest |E_ref - E_n| over every state strictly between the clusters.
  double min_den = 1e300;
  for (std::uint32_t s = 0; s < f.dimension(); ++s) {
    if (cl[0].contains(s) || cl[1].contains(s)) continue;
    const double e = testing::direct_energy(f, s);
    min_den = std::min({min_den, std::abs(cl[0].energy - e), std::abs(cl[1].energy - e)});
  }
  double sequences = 27.0;
  for (int i = 2; i <= 9; ++i) sequences *= i;
  const double bound = std::pow((1 - lambda) / lambda, 9) * lambda * sequences / std::pow(min_den, 8);
  CHECK(std::abs(c.coupling_LG) <= bound);
  CHECK(std::abs(c.coupling_GL) <= bound);
  CHECK(std::abs(c.coupling_GL) > std::abs(c.coupling_LG));
}

TEST_CASE("crossing consistency") {
  std::mt19937_64 rng(29);
  int with_lambda = 0, without = 0;
  for (int t = 0; t < 80; ++t) {
    const auto p = testing::random_problem(rng, 4 + static_cast<int>(rng() % 7), 0.6, 0.6);
    const auto cl = enumerate_minima(p);
    if (cl.size() < 2) continue;
    const auto scale = scale_and_zeta(p, 0.5).first;
    PerturbativeLevel g, l;
    try {
      g = chi(p, cl[0]);
      l = chi(p, cl[1]);
    } catch (const DegeneracyError&) {
      continue;
    }
    const auto pr = predict_crossing(p, g, l, scale);
    if (l.chi <= g.chi) {
      CHECK(pr.reason == CrossingStatus::no_real_solution);
      CHECK_FALSE(pr.lambda_star.has_value());
      CHECK_FALSE(pr.valid);
      ++without;
      continue;
    }
    REQUIRE(pr.lambda_star.has_value());
    const double ls = *pr.lambda_star;
    CHECK(testing::relative_error(perturbed_energy(g, ls), perturbed_energy(l, ls)) <= 1e-10);
    if (ls <= scale.lambda_c) CHECK(pr.reason == CrossingStatus::below_lambda_c);
    if (pr.valid) CHECK(pr.g_min_predicted >= 0.0);
    ++with_lambda;
  }
  CHECK(with_lambda > 5);
  CHECK(without > 5);
}

TEST_CASE("crossing gates") {
  const auto scale_of = [](const IsingProblem& p) { return scale_and_zeta(p, 0.5).first; };
  // Heavy couplings make chi_L < chi_G.
  const auto heavy = fig2_problem({1.0, 1.9, 20.0}, 1.0);
  const auto hc = enumerate_minima(heavy);
  const auto hp = predict_crossing(heavy, chi(heavy, hc[0]), chi(heavy, hc[1]), scale_of(heavy));
  CHECK(hp.reason == CrossingStatus::no_real_solution);
  CHECK_FALSE(hp.lambda_star.has_value());

  // Ferromagnetic pair with a strong bias: the crossing sits below lambda_c.
  const IsingProblem pair(2, {-1.0, -1.0}, {{0, 1, -4.0}}, 1.0);
  const auto pc = enumerate_minima(pair);
  REQUIRE(pc.size() == 2);
  const auto pp = predict_crossing(pair, chi(pair, pc[0]), chi(pair, pc[1]), scale_of(pair));
  REQUIRE(pp.lambda_star.has_value());
  CHECK(*pp.lambda_star <= scale_of(pair).lambda_c);
  CHECK(pp.reason == CrossingStatus::below_lambda_c);
  CHECK_FALSE(pp.valid);

  CHECK_THROWS_AS(predict_crossing(pair, chi(pair, pc[1]), chi(pair, pc[0]), scale_of(pair)),
                  InputError);
}

TEST_CASE("fig2 prediction at w_L = 1.8") {
  const auto f = fig2_problem({1.0, 1.8, 2.0}, 1.0);
  const auto cl = enumerate_minima(f);
  const auto pr = predict_crossing(f, chi(f, cl[0]), chi(f, cl[1]), scale_and_zeta(f, 0.5).first);
  REQUIRE(pr.valid);
  CHECK(pr.f == 9);
  CHECK(*pr.lambda_star == doctest::Approx(1.0 / (1.0 + std::sqrt(2.4 / 14.887097))).epsilon(1e-6));
  CHECK(*pr.lambda_star == doctest::Approx(0.71351).epsilon(1e-4));
  CHECK(pr.g_min_predicted == doctest::Approx(predicted_min_gap(pr.coupling_LG, pr.coupling_GL)));
  const auto at = predict_crossing(f, chi(f, cl[0]), chi(f, cl[1]), scale_and_zeta(f, 0.5).first, 0.6);
  CHECK(at.prefactor_lambda == 0.6);
  CHECK(at.g_min_predicted > pr.g_min_predicted);
}

TEST_CASE("double well tunnel splitting") {
  const IsingProblem p(2, {0.0, 0.0}, {{0, 1, -1.0}}, 1.0);
  const auto up = make_cluster(p, {{0b11u, 2}}, true);
  const auto down = make_cluster(p, {{0b00u, 2}}, false);
  for (double lambda : {0.75, 0.8, 0.85, 0.9}) {
    const auto c = effective_coupling(p, up, down, lambda);
    CHECK(c.f == 2);
    const double expected = (1 - lambda) * (1 - lambda) / lambda * 2.0 / (-1.0 - 1.0);
    CHECK(c.coupling_LG == doctest::Approx(expected).epsilon(1e-14));
    const auto d = dense_spectrum(InterpolatedHamiltonian(p, lambda));
    const double pred = predicted_min_gap(c.coupling_LG, c.coupling_GL);
    CHECK(std::abs(pred / (d[1] - d[0]) - 1.0) <= 0.2);
  }
}

TEST_CASE("predicted gap collapses with w_L away from the five-central resonance") {
  // The state with five centrals set sits at E_G + 4 w_G, which meets E_L at
  // w_L = 5/3 (w_G = 1): a denominator of the GL path sum vanishes there.
  auto predict = [](double w) {
    const auto f = fig2_problem({1.0, w, 2.0}, 1.0);
    const auto cl = enumerate_minima(f);
    return predict_crossing(f, chi(f, cl[0]), chi(f, cl[1]), scale_and_zeta(f, 0.5).first);
  };
  auto decreasing = [&](double lo, double hi) {
    double previous = INFINITY;
    for (double w = lo; w <= hi + 1e-9; w += 0.02) {
      const auto pr = predict(w);
      REQUIRE(pr.valid);
      CHECK(pr.g_min_predicted < previous);
      previous = pr.g_min_predicted;
    }
  };
  decreasing(1.5, 1.64);
  decreasing(1.68, 1.98);
  CHECK(predict(1.66).coupling_GL < 0.0);
  CHECK(predict(1.67).coupling_GL > 0.0);
  CHECK(predict(1.66).g_min_predicted > predict(1.64).g_min_predicted);
  CHECK(predict(5.0 / 3.0).reason == CrossingStatus::degenerate_path);
}
