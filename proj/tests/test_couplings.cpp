#include <catch2/catch.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hylz/couplings.hpp"
#include "hylz/hydrogenic.hpp"

using namespace hylz;

namespace {

struct OracleRow {
  int z;
  std::vector<std::string> cells;  // L1 L2 L3 d1 d2 d3 A0 A1 B0 B1 C
};

std::vector<OracleRow> load_oracle() {
  std::ifstream in(std::string(HYLZ_TEST_DATA_DIR) + "/delta_oracle.csv");
  REQUIRE(in);
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "Z,L1,L2,L3,d1,d2,d3,A0,A1,B0,B1,C");
  std::vector<OracleRow> rows;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string cell;
    OracleRow r{};
    std::getline(ss, cell, ',');
    r.z = std::stoi(cell);
    while (std::getline(ss, cell, ',')) r.cells.push_back(cell);
    REQUIRE(r.cells.size() == 11);
    rows.push_back(r);
  }
  return rows;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

} // namespace

TEST_CASE("kdot is 1 across the supported range", "[couplings]") {
  CHECK(kdot(1) == 1);
  CHECK(kdot(99) == 1);
  CHECK(kdot(137) == 1);
  CHECK(kdot<ExtendedReal>(137) == 1);
  CHECK_THROWS_AS(kdot(138), DomainError);
  CHECK_THROWS_AS(kdot(0), DomainError);
}

TEST_CASE("production couplings match the 50-digit oracle", "[couplings][oracle]") {
  const auto oracle = load_oracle();
  REQUIRE(oracle.size() == 99);
  for (const auto& row : oracle) {
    INFO("Z = " << row.z);
    const auto lam = lambdas(row.z);
    const auto d = deltas(row.z);
    const auto e = basis_exponents(d);
    const double got[] = {lam.l1, lam.l2, lam.l3, d.d1, d.d2, d.d3, e.a0, e.a1, e.b0, e.b1, e.c};
    for (std::size_t q = 0; q < 11; ++q) {
      INFO("column " << q);
      CHECK(rel(got[q], std::stod(row.cells[q])) < 1e-10);
    }
  }
}

TEST_CASE("literal formulas in extended precision match the oracle", "[couplings][oracle]") {
  const auto oracle = load_oracle();
  for (int z : {1, 2, 10, 50, 99}) {
    INFO("Z = " << z);
    const auto& row = oracle[static_cast<std::size_t>(z - 1)];
    const auto d = deltas_from_lambdas(lambdas_literal<ExtendedReal>(z));
    const auto e = basis_exponents_literal(d);
    const ExtendedReal got[] = {d.d1, d.d2, d.d3, e.a0, e.a1, e.c};
    const std::size_t col[] = {3, 4, 5, 6, 7, 10};
    for (std::size_t q = 0; q < 6; ++q) {
      const ExtendedReal want(row.cells[col[q]]);
      CHECK(static_cast<double>(abs(got[q] - want) / abs(want)) < 1e-18);
    }
  }
}

TEST_CASE("literal formulas in double precision lose digits to cancellation", "[couplings]") {
  const auto oracle = load_oracle();
  const auto& row = oracle[0];
  const double want = std::stod(row.cells[3]);
  const double safe = deltas(1).d1;
  const double naive = deltas_from_lambdas(lambdas_literal<double>(1)).d1;
  CHECK(rel(safe, want) < 1e-12);
  CHECK(rel(naive, want) > 1e-6);
}

TEST_CASE("2 - 2 sqrt(1 - x) rewrite agrees with the naive form to 10 digits", "[couplings]") {
  const auto pc = PhysicalConstants<double>::standard();
  const auto pcx = PhysicalConstants<ExtendedReal>::standard();
  for (int z = 1; z <= 99; ++z) {
    const double x = (pc.alpha * z) * (pc.alpha * z);
    const ExtendedReal xx = (pcx.alpha * z) * (pcx.alpha * z);
    const double want = static_cast<double>(2 - 2 * sqrt(1 - xx));
    const double safe = 2 * x / (1 + std::sqrt(1 - x));
    const double naive = 2 - 2 * std::sqrt(1 - x);
    INFO("Z = " << z);
    CHECK(rel(safe, want) < 1e-15);
    CHECK(rel(naive, want) < 1e-10);
  }
}

TEST_CASE("vanishing Lambdas are rejected as degenerate", "[couplings]") {
  CHECK_THROWS_AS(deltas_from_lambdas(LambdaSet<double>{0, 0, 0, 1}), DegenerateInputError);
}

TEST_CASE("zero couplings give zero exponents", "[couplings]") {
  const DeltaSet<double> zero{0, 0, 0};
  for (const auto& e : {basis_exponents(zero), basis_exponents_literal(zero)}) {
    CHECK(e.a0 == 0);
    CHECK(e.a1 == 0);
    CHECK(e.b0 == 0);
    CHECK(e.b1 == 0);
    CHECK(e.c == 0);
  }
}

TEST_CASE("coupling invariants over the charge range", "[couplings]") {
  for (int z = 1; z <= 99; ++z) {
    INFO("Z = " << z);
    const auto lam = lambdas(z);
    const auto d = deltas(z);
    const auto e = basis_exponents(d);
    CHECK(lam.kdot == 1);
    CHECK(lam.l1 >= 0);
    CHECK(lam.l2 >= 0);
    CHECK(lam.l3 >= 0);
    CHECK(d.d1 >= 0);
    CHECK(0.25 - 2 * d.d2 >= 0);
    CHECK(std::isfinite(d.d1 + d.d2 + d.d3));
    CHECK(e.b0 == -e.b1);
    CHECK(e.a0 > -0.5);
    CHECK(e.a1 > -0.5);
    if (z <= 10) {
      CHECK(std::abs(d.d1) < 0.01);
      CHECK(std::abs(d.d2) < 0.01);
      CHECK(std::abs(d.d3) < 0.01);
    }
    const auto& cached = couplings(z);
    CHECK(cached.deltas.d1 == d.d1);
    CHECK(cached.exponents.a0 == e.a0);
  }
  CHECK_THROWS_AS(deltas(0), DomainError);
  CHECK_THROWS_AS(deltas(100), DomainError);
}

TEST_CASE("orbital powers equal the hydrogen-like 1s exponents", "[couplings][hydrogenic]") {
  for (int z = 1; z <= 99; ++z) {
    const auto e = basis_exponents(z);
    for (int p = 0; p <= 1; ++p) {
      INFO("Z = " << z << ", P = " << p);
      const auto s = solve_orbital(Orbital{1, 0, 0, 0, p}, z);
      CHECK(std::abs(s.radial_power - e.a(p)) < 1e-12);
      CHECK(std::abs(s.sine_power - e.b(p)) < 1e-12);
      CHECK(std::abs(s.xi - z / (e.a(p) + 1)) < 1e-12 * z);
    }
  }
}
