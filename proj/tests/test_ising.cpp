#include <doctest.h>

#include <filesystem>
#include <random>

#include "aqc/errors.hpp"
#include "aqc/ising.hpp"
#include "helpers.hpp"

using namespace aqc;

TEST_CASE("spin configuration validates its register") {
  CHECK_THROWS_AS(SpinConfiguration(4u, 2), InputError);
  CHECK_THROWS_AS(SpinConfiguration(0u, 0), InputError);
  CHECK_THROWS_AS(SpinConfiguration(0u, kMaxQubits + 1), InputError);
  const SpinConfiguration s(0b101u, 3);
  CHECK(s.spin(0) == 1);
  CHECK(s.spin(1) == -1);
  CHECK(s.spin(2) == 1);
  CHECK(s.flipped(1).bits == 0b111u);
  CHECK_THROWS_AS(s.flipped(3), InputError);
}

TEST_CASE("classical energy on a hand-worked pair") {
  const IsingProblem p(2, {1.0, -0.5}, {{0, 1, 2.0}}, 1.0);
  // s = (+1, -1): 1 + 0.5 - 2
  CHECK(classical_energy(p, {0b01u, 2}) == doctest::Approx(-0.5));
  CHECK(classical_energy(p, {0b11u, 2}) == doctest::Approx(2.5));
  CHECK(classical_energy(p, {0b00u, 2}) == doctest::Approx(1.5));
  CHECK_THROWS_AS(classical_energy(p, {0u, 3}), InputError);
}

TEST_CASE("single flip delta equals the energy difference") {
  std::mt19937_64 rng(11);
  int trials = 0;
  for (int inst = 0; inst < 40; ++inst) {
    const int n = 1 + static_cast<int>(rng() % 16);
    const auto p = testing::random_problem(rng, n, 0.4);
    for (int t = 0; t < 300; ++t, ++trials) {
      const SpinConfiguration s(static_cast<std::uint32_t>(rng() % p.dimension()), n);
      const int k = static_cast<int>(rng() % n);
      const double expected =
          testing::direct_energy(p, s.flipped(k).bits) - testing::direct_energy(p, s.bits);
      REQUIRE(std::abs(single_flip_delta(p, s, k) - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
    }
  }
  CHECK(trials >= 10000);
}

TEST_CASE("hamming distance") {
  CHECK(hamming_distance({0b1010u, 4}, {0b0101u, 4}) == 4);
  CHECK(hamming_distance({0b1010u, 4}, {0b1010u, 4}) == 0);
  CHECK_THROWS_AS(hamming_distance({0u, 4}, {0u, 5}), InputError);
}

TEST_CASE("problem construction rejects malformed data") {
  CHECK_THROWS_AS(IsingProblem(2, {0, 0}, {{0, 0, 1.0}}, 1.0), InputError);
  CHECK_THROWS_AS(IsingProblem(2, {0, 0}, {{0, 1, 1.0}, {1, 0, 2.0}}, 1.0), InputError);
  CHECK_THROWS_AS(IsingProblem(2, {0, 0}, {{0, 2, 1.0}}, 1.0), InputError);
  CHECK_THROWS_AS(IsingProblem(2, {0, 0}, {}, 0.0), InputError);
  CHECK_THROWS_AS(IsingProblem(2, {0}, {}, 1.0), InputError);
  const IsingProblem p(3, {0, 0, 0}, {{2, 0, 1.5}}, 1.0);
  CHECK(p.couplings()[0].i == 0);
  CHECK(p.couplings()[0].j == 2);
  CHECK(p.neighbors(2).size() == 1);
}

TEST_CASE("instance text round trip") {
  const auto p = parse_instance(
      "# two spins\n"
      "n 2\n"
      "delta 0.5\n"
      "h 0 -1.25\n"
      "J 0 1 0.1\n");
  CHECK(p.n_qubits() == 2);
  CHECK(p.delta() == 0.5);
  CHECK(p.h()[0] == -1.25);
  CHECK(p.h()[1] == 0.0);
  const auto q = parse_instance(format_instance(p));
  CHECK(format_instance(q) == format_instance(p));
  CHECK(parse_instance("n 1\n").delta() == 1.0);
}

TEST_CASE("instance parse errors carry the line number") {
  auto line_of = [](const char* text) {
    try {
      parse_instance(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("h 0 1\n") == 1);
  CHECK(line_of("n 2\nJ 0 0 1\n") == 2);
  CHECK(line_of("n 2\nJ 0 1 1\nJ 1 0 2\n") == 3);
  CHECK(line_of("n 2\n\nh 5 1\n") == 3);
  CHECK(line_of("n 2\nh 0 abc\n") == 2);
  CHECK(line_of("n 2\ndelta -1\n") == 2);
  CHECK(line_of("n 2\nfoo 1\n") == 2);
  CHECK(line_of("n 30\n") == 1);
  CHECK_THROWS_AS(load_instance("/nonexistent/instance.txt"), IoError);
}
