#include <catch2/catch.hpp>

#include <cmath>
#include <string>

#include "hylz/reference_data.hpp"

using namespace hylz;

namespace {

const ReferenceData& data() { return ReferenceData::embedded(); }

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  REQUIRE(pos != std::string::npos);
  return text.replace(pos, from.size(), to);
}

} // namespace

TEST_CASE("embedded tables carry the pinned digests", "[reference_data]") {
  const auto& d = data().digests();
  CHECK(d.table1 == pinned_digests.table1);
  CHECK(d.table2 == pinned_digests.table2);
  CHECK(d.table3 == pinned_digests.table3);
  const auto disk = ReferenceData::from_directory(HYLZ_TEST_DATA_DIR "/../../data");
  CHECK(disk.digests().table1 == pinned_digests.table1);
  CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
  CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
}

TEST_CASE("row counts and coefficient lengths", "[reference_data]") {
  CHECK(data().rows().size() == 99);
  int with_table2 = 0;
  for (const auto& r : data().rows()) {
    CHECK(r.order() == (r.z <= 56 ? 3 : 2));
    if (r.has_table2()) ++with_table2;
  }
  CHECK(with_table2 == 8);
  CHECK_FALSE(data().row(1).e_exp.has_value());
  CHECK(data().row(2).e_exp.has_value());
}

TEST_CASE("spot cells match the published tables", "[reference_data][published]") {
  const auto& r10 = data().row(10);
  CHECK(r10.lambda2 == 10.70673);
  CHECK(r10.e_z == -94.0314664);
  CHECK(r10.b[2] == 0.30108);
  const auto& r50 = data().row(50);
  CHECK(r50.xi2 == 47.448);
  CHECK(r50.diff == 89.275121);
  CHECK(r50.b[2] == -39.155);
  const auto& r57 = data().row(57);
  CHECK(r57.lambda1 == 54.7504);
  CHECK(r57.b[1] == 4.6584);
  const auto& r99 = data().row(99);
  CHECK(r99.e_s == -9739.280349);
  CHECK(r99.b[1] == 73.84860);
  CHECK(data().row(8).e0 == -59.154532846064);
  CHECK(data().row(4).eta == 1.61);
}

TEST_CASE("eta recomputed from the tables", "[reference_data]") {
  for (int z = 1; z <= 8; ++z) {
    const auto& r = data().row(z);
    INFO("Z = " << z);
    CHECK(std::abs(eta_metric(r.e_s, r.e_z, *r.e0, *r.e_corr) - *r.eta) <= 0.01);
  }
  CHECK_THROWS_AS(eta_metric(1, 0, 2, 2), DomainError);
}

TEST_CASE("epsilon metric against decimal arithmetic", "[reference_data][oracle]") {
  const double want[] = {4.18159968837493500e-04, 4.39417119126577226e-05, 1.14442786489753511e-05,
                         7.81459420382624788e-05, 1.34941407897993154e-04, 1.67751066614999975e-04,
                         2.31585207668016680e-04};
  for (int z = 2; z <= 8; ++z) {
    const auto& r = data().row(z);
    INFO("Z = " << z);
    // Double subtraction of nearby table energies: relative error ~ eps |E| / |E - E_exp|.
    const double bound = 4e-16 * std::abs(*r.e_exp) / std::abs(r.e_z - *r.e_exp);
    CHECK(std::abs(epsilon_metric(r.e_z, *r.e_exp) / want[z - 2] - 1) <= bound);
  }
  CHECK_THROWS_AS(epsilon_metric(1, 0), DomainError);
}

TEST_CASE("relativistic correction is bracketed for Z = 1..3", "[reference_data]") {
  for (int z = 1; z <= 3; ++z) {
    const auto c = check_inequality_11(z);
    INFO("Z = " << z << " lower " << c.lower << " dirac " << c.dirac << " upper " << c.upper);
    CHECK(c.holds());
  }
  CHECK_THROWS_AS(check_inequality_11(0), DataError);
  CHECK_THROWS_AS(check_inequality_11(4), DataError);
}

TEST_CASE("malformed tables are rejected", "[reference_data]") {
  const std::string t1(embedded::table1_csv), t2(embedded::table2_csv), t3(embedded::table3_csv);
  CHECK_NOTHROW(ReferenceData::parse(t1, t2, t3));
  CHECK_THROWS_AS(ReferenceData::parse(replace_once(t1, "lambda1", "lam1"), t2, t3), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(replace_once(t1, "-2.9020117", "abc"), t2, t3), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(replace_once(t1, "\n3,", "\n2,"), t2, t3), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(t1, replace_once(t2, "\n8,", "\n100,"), t3), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(t1, t2, replace_once(t3, "0.00852", "")), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(t1, t2, replace_once(t3, ",0.30108", ",")), DataError);
  CHECK_THROWS_AS(ReferenceData::parse(t1.substr(0, t1.rfind("\n99,")), t2, t3), DataError);
  CHECK_THROWS_AS(ReferenceData::from_directory("/nonexistent"), DataError);
}
