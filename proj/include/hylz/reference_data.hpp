#pragma once

// Reference tables for helium-like ions and the comparison metrics built on
// them.
//
//   table1.csv  Z,lambda1,lambda2,xi1,xi2,E_S,E_Z,diff,remark      (Z = 1..99)
//   table2.csv  Z,E0,E,E_exp,diff,eta                              (Z = 1..8)
//   table3.csv  Z,a1,a2,a3,b1,b2,b3                                (Z = 1..99)
//
// Values are stored exactly as published, including the exponent order;
// rows whose printed xi1 exceeds xi2 carry a remark.
// The CSV texts are compiled in; from_directory() loads replacements.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hylz/couplings.hpp"
#include "hylz/embedded_tables.hpp"
#include "hylz/errors.hpp"
#include "hylz/hydrogenic.hpp"

namespace hylz {

struct ReferenceRow {
  int z = 0;
  // table 1
  double lambda1 = 0, lambda2 = 0;  // Schrodinger exponents
  double xi1 = 0, xi2 = 0;          // corrected exponents, printed order
  double e_s = 0, e_z = 0;          // hartree
  double diff = 0;                  // printed E_S - E_Z
  std::string remark;
  // table 3
  std::vector<double> a, b;
  // table 2 (Z <= 8)
  std::optional<double> e0, e_corr, e_exp, table2_diff, eta;

  bool has_table2() const { return e0.has_value(); }
  int order() const { return static_cast<int>(b.size()); }
};

struct TableDigests {
  std::uint64_t table1 = 0, table2 = 0, table3 = 0;
  bool operator==(const TableDigests&) const = default;
};

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline constexpr TableDigests pinned_digests{0x8bea864ba2dc3f6cull, 0xe6642b8349d7adb0ull, 0x26a327101e11e401ull};

namespace detail {

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::string cell;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cell);
      cell.clear();
    } else if (ch != '\r') {
      cell.push_back(ch);
    }
  }
  out.push_back(cell);
  return out;
}

inline std::vector<std::vector<std::string>> parse_csv(std::string_view text, std::string_view header, const char* name) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      if (line != header) throw DataError(std::string(name) + ": unexpected header '" + line + "'");
      first = false;
      continue;
    }
    rows.push_back(split_csv_line(line));
  }
  if (first) throw DataError(std::string(name) + ": empty table");
  return rows;
}

inline double parse_number(const std::string& cell, const char* name, int z) {
  try {
    std::size_t used = 0;
    const double v = std::stod(cell, &used);
    if (used != cell.size() || !std::isfinite(v)) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw DataError(std::string(name) + ": bad number '" + cell + "' in row Z=" + std::to_string(z));
  }
}

inline std::optional<double> parse_optional(const std::string& cell, const char* name, int z) {
  if (cell.empty()) return std::nullopt;
  return parse_number(cell, name, z);
}

inline int parse_charge(const std::string& cell, const char* name) {
  try {
    std::size_t used = 0;
    const int z = std::stoi(cell, &used);
    if (used != cell.size()) throw std::invalid_argument("trailing");
    return z;
  } catch (const std::exception&) {
    throw DataError(std::string(name) + ": bad Z '" + cell + "'");
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace detail

class ReferenceData {
 public:
  static ReferenceData parse(std::string_view table1, std::string_view table2, std::string_view table3) {
    ReferenceData data;
    data.digests_ = {fnv1a64(table1), fnv1a64(table2), fnv1a64(table3)};
    data.rows_.resize(max_charge);
    std::vector<bool> seen1(max_charge, false), seen3(max_charge, false);

    for (const auto& c : detail::parse_csv(table1, "Z,lambda1,lambda2,xi1,xi2,E_S,E_Z,diff,remark", "table1")) {
      if (c.size() != 9) throw DataError("table1: expected 9 columns");
      const int z = slot(detail::parse_charge(c[0], "table1"), "table1", seen1);
      auto& r = data.rows_[static_cast<std::size_t>(z - 1)];
      r.z = z;
      r.lambda1 = detail::parse_number(c[1], "table1", z);
      r.lambda2 = detail::parse_number(c[2], "table1", z);
      r.xi1 = detail::parse_number(c[3], "table1", z);
      r.xi2 = detail::parse_number(c[4], "table1", z);
      r.e_s = detail::parse_number(c[5], "table1", z);
      r.e_z = detail::parse_number(c[6], "table1", z);
      r.diff = detail::parse_number(c[7], "table1", z);
      r.remark = c[8];
    }
    for (const auto& c : detail::parse_csv(table3, "Z,a1,a2,a3,b1,b2,b3", "table3")) {
      if (c.size() != 7) throw DataError("table3: expected 7 columns");
      const int z = slot(detail::parse_charge(c[0], "table3"), "table3", seen3);
      auto& r = data.rows_[static_cast<std::size_t>(z - 1)];
      for (int q = 1; q <= 3; ++q) {
        const auto a = detail::parse_optional(c[static_cast<std::size_t>(q)], "table3", z);
        const auto b = detail::parse_optional(c[static_cast<std::size_t>(q + 3)], "table3", z);
        if (a.has_value() != b.has_value()) throw DataError("table3: a/b length mismatch in row Z=" + std::to_string(z));
        if (!a) break;
        r.a.push_back(*a);
        r.b.push_back(*b);
      }
      const std::size_t expected = z <= 56 ? 3 : 2;
      if (r.a.size() != expected) throw DataError("table3: wrong coefficient count in row Z=" + std::to_string(z));
    }
    for (int z = min_charge; z <= max_charge; ++z) {
      if (!seen1[static_cast<std::size_t>(z - 1)]) throw DataError("table1: missing row Z=" + std::to_string(z));
      if (!seen3[static_cast<std::size_t>(z - 1)]) throw DataError("table3: missing row Z=" + std::to_string(z));
    }
    std::vector<bool> seen2(max_charge, false);
    for (const auto& c : detail::parse_csv(table2, "Z,E0,E,E_exp,diff,eta", "table2")) {
      if (c.size() != 6) throw DataError("table2: expected 6 columns");
      const int z = slot(detail::parse_charge(c[0], "table2"), "table2", seen2);
      auto& r = data.rows_[static_cast<std::size_t>(z - 1)];
      r.e0 = detail::parse_number(c[1], "table2", z);
      r.e_corr = detail::parse_number(c[2], "table2", z);
      r.e_exp = detail::parse_optional(c[3], "table2", z);
      r.table2_diff = detail::parse_number(c[4], "table2", z);
      r.eta = detail::parse_number(c[5], "table2", z);
    }
    return data;
  }

  static ReferenceData from_directory(const std::filesystem::path& dir) {
    return parse(detail::read_file(dir / "table1.csv"), detail::read_file(dir / "table2.csv"),
                 detail::read_file(dir / "table3.csv"));
  }

  static const ReferenceData& embedded() {
    static const ReferenceData data = parse(embedded::table1_csv, embedded::table2_csv, embedded::table3_csv);
    return data;
  }

  const ReferenceRow& row(int z) const {
    detail::check_charge(z);
    return rows_[static_cast<std::size_t>(z - 1)];
  }

  const std::vector<ReferenceRow>& rows() const { return rows_; }

  /// Digests of the raw CSV texts this data was parsed from.
  const TableDigests& digests() const { return digests_; }

 private:
  static int slot(int z, const char* name, std::vector<bool>& seen) {
    if (z < min_charge || z > max_charge) throw DataError(std::string(name) + ": Z out of range");
    if (seen[static_cast<std::size_t>(z - 1)]) throw DataError(std::string(name) + ": duplicate row Z=" + std::to_string(z));
    seen[static_cast<std::size_t>(z - 1)] = true;
    return z;
  }

  std::vector<ReferenceRow> rows_;
  TableDigests digests_;
};

/// |(E_Z - E_exp) / E_exp|
inline double epsilon_metric(double e_z, double e_exp) {
  if (e_exp == 0) throw DomainError("epsilon metric: E_exp = 0");
  return std::abs((e_z - e_exp) / e_exp);
}

/// (E_S - E_Z) / (E0 - E)
inline double eta_metric(double e_s, double e_z, double e0, double e_corr) {
  if (e0 == e_corr) throw DomainError("eta metric: E0 = E");
  return (e_s - e_z) / (e0 - e_corr);
}

struct BracketCheck {
  int z = 0;
  double lower = 0;  // E0 - E, table 2
  double dirac = 0;  // relativistic correction of the hydrogen-like ion
  double upper = 0;  // E_S - E_Z, table 1
  bool lower_holds = false;
  bool upper_holds = false;

  bool holds() const { return lower_holds && upper_holds; }
};

/// (E0 - E) < dirac_correction(Z) < (E_S - E_Z) for Z <= 3.
inline BracketCheck check_inequality_11(int z, const ReferenceData& data = ReferenceData::embedded(),
                                        const PhysicalConstants<double>& pc = PhysicalConstants<double>::standard()) {
  if (z < 1 || z > 3) throw DataError("bracketing check is defined for Z = 1..3 only");
  const auto& r = data.row(z);
  if (!r.has_table2()) throw DataError("bracketing check: no table 2 row for Z=" + std::to_string(z));
  BracketCheck c;
  c.z = z;
  c.lower = *r.table2_diff;
  c.dirac = dirac_correction(z, pc);
  c.upper = r.diff;
  c.lower_holds = c.lower < c.dirac;
  c.upper_holds = c.dirac < c.upper;
  return c;
}

} // namespace hylz
