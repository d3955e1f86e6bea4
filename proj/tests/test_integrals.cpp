#include <catch2/catch.hpp>

#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "hylz/integrals.hpp"
#include "hylz/quadrature.hpp"

using namespace hylz;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
}

TEST_CASE("closed form matches independent high-precision values", "[integrals][oracle]") {
  CHECK(rel(hylleraas_integral({1.5, 2.5, -1, 2, 1}), 0.53975111111111111111) < 1e-14);
  CHECK(rel(hylleraas_integral({1, 1, -2, 0, -1}), 1.7725887222397812377) < 1e-14);
  CHECK(rel(hylleraas_integral({2, 4, 1, 0, 2}), 0.134765625) < 1e-14);
  CHECK(rel(hylleraas_integral({2, 2, 0, 0, 0}), 0.125) < 1e-14);
}

TEST_CASE("closed form agrees with adaptive quadrature", "[integrals][quadrature]") {
  const std::vector<IntegralKey> keys{
      {1.5, 2.5, -1, 2, 1}, {3, 3, 0, 0, -1}, {0.7, 5.2, 1.3, -1.6, 0}, {4, 1, -2.5, 0.5, 3}, {2, 6, 0.25, 0.75, 2},
  };
  for (const auto& key : keys) {
    INFO(key.a << " " << key.b << " " << key.i << " " << key.j << " " << key.k);
    CHECK(rel(hylleraas_integral(key), quadrature_oracle(key, {1e-9})) < 1e-9);
  }
}

TEST_CASE("swapping the electrons is bit exact", "[integrals]") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> rate(0.3, 9), power(-2.5, 3);
  for (int n = 0; n < 200; ++n) {
    const IntegralKey key{rate(rng), rate(rng), power(rng), power(rng), static_cast<int>(rng() % 6) - 1};
    if (!(key.i + key.j + key.k + 6 > 0)) continue;
    CHECK(hylleraas_integral(key) == hylleraas_integral(key.swapped()));
  }
}

TEST_CASE("homogeneity under rate scaling", "[integrals]") {
  const IntegralKey key{1.3, 2.1, 0.5, -1, 2};
  const double base = hylleraas_integral(key);
  for (double c : {0.5, 2.0, 7.0}) {
    const double scaled = hylleraas_integral({c * key.a, c * key.b, key.i, key.j, key.k});
    CHECK(rel(scaled, base * std::pow(c, -(key.i + key.j + key.k + 6))) < 1e-13);
  }
}

TEST_CASE("positive and decreasing in each rate", "[integrals]") {
  for (int k = -1; k <= 5; ++k) {
    double prev = hylleraas_integral({0.5, 1, 0, 0, k});
    for (double a = 1; a <= 8; a += 0.5) {
      const double v = hylleraas_integral({a, 1, 0, 0, k});
      CHECK(v > 0);
      CHECK(v < prev);
      prev = v;
    }
  }
}

TEST_CASE("integrals outside the convergence domain are rejected", "[integrals]") {
  CHECK_THROWS_AS(hylleraas_integral({0, 1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1, -1, 0, 0, 0}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1, 1, 0, 0, -2}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1, 1, -3, 0, 0}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1, 1, -2.5, -2.5, -1}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1, 1, NAN, 0, 0}), DomainError);
  CHECK_THROWS_AS(hylleraas_integral({1e-6, 1e-6, 40, 40, 5}), DomainError);
}

TEST_CASE("cache is consistent under concurrent use", "[integrals]") {
  IntegralCache cache;
  std::vector<IntegralKey> keys;
  for (int q = 0; q < 40; ++q) keys.push_back({1 + 0.1 * q, 2 - 0.02 * q, q % 3 - 1.0, q % 4 - 1.0, q % 5});
  std::vector<std::vector<double>> seen(8);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < seen.size(); ++t) {
      pool.emplace_back([&, t] {
        for (int rep = 0; rep < 5; ++rep)
          for (const auto& key : keys) seen[t].push_back(cache(key));
      });
    }
  }
  CHECK(cache.size() == keys.size());
  for (const auto& s : seen) CHECK(s == seen.front());
  for (std::size_t q = 0; q < keys.size(); ++q) CHECK(seen[0][q] == hylleraas_integral(keys[q]));
  cache.clear();
  CHECK(cache.size() == 0);
}

TEST_CASE("quadrature oracle guards", "[integrals][quadrature]") {
  CHECK_THROWS_AS(quadrature_oracle({1, 1, 0, 0, 0}, {1e-14}), DomainError);
  CHECK_THROWS_AS(quadrature_oracle({1, 1, 0, 0, -2}), DomainError);
  QuadratureOptions tiny;
  tiny.max_evaluations = 10;
  CHECK_THROWS_AS(quadrature_oracle({1, 1, 0, 0, 0}, tiny), ConvergenceError);
  CHECK(detail::r12_odd_sum(0.5, 2) == Approx(2 * 0.5 * 2 / 2.0).epsilon(1e-15));
}
