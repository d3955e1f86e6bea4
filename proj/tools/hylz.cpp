// hylz: command-line front end.
//
//   hylz deltas   --z Z
//   hylz hydrogen --z Z --n N --l L --m M --j J --p P [--zero-couplings]
//   hylz solve    --z Z [--model schrodinger|improved|both] [--order 2|3|auto]
//   hylz table    --from A --to B [--threads N]
//   hylz compare  --from A --to B
//   hylz verify   [--only NAME] [--data-dir DIR]
//
// Exit codes: 0 ok, 1 internal error, 2 usage, 3 non-convergence,
// 4 verification failure.

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hylz/acceptance.hpp"
#include "hylz/couplings.hpp"
#include "hylz/functionals.hpp"
#include "hylz/hydrogenic.hpp"
#include "hylz/optimizer.hpp"
#include "hylz/reference_data.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_usage = 2;
constexpr int exit_not_converged = 3;
constexpr int exit_verify = 4;
constexpr int schema_version = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Format { csv, json, pretty };

/// Shortest decimal that reads back to the same double.
std::string shortest(double x) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) return "nan";
  return std::string(buf, end);
}

std::string sig15(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

struct Options {
  int z = 0;
  int from = 1;
  int to = 0;
  std::string model = "both";
  std::string order = "auto";
  Format format = Format::pretty;
  std::string out;
  int threads = 0;
  bool seed_from_table = false;
  std::string only;
  std::string data_dir;
  std::string config;
  // optimizer
  double tol = 1e-9;
  int max_iters = 500;
  double simplex_scale = 0.05;
  int restarts = 0;
  // hydrogen
  int n = 1, l = 0, m = 0, j = 0, p = 0;
  bool zero_couplings = false;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void check_z(int z) {
  if (z < hylz::min_charge || z > hylz::max_charge) throw UsageError("Z must lie in [1, 99], got " + std::to_string(z));
}

std::pair<int, int> z_range(const Options& o) {
  if (o.z != 0) {
    check_z(o.z);
    return {o.z, o.z};
  }
  const int to = o.to == 0 ? o.from : o.to;
  check_z(o.from);
  check_z(to);
  if (to < o.from) throw UsageError("--to must not be below --from");
  return {o.from, to};
}

std::vector<hylz::ModelKind> models(const std::string& name) {
  if (name == "schrodinger") return {hylz::ModelKind::schrodinger};
  if (name == "improved") return {hylz::ModelKind::improved};
  return {hylz::ModelKind::schrodinger, hylz::ModelKind::improved};
}

hylz::OptimizerConfig optimizer_config(const Options& o) {
  hylz::OptimizerConfig cfg;
  cfg.xi_init_strategy = o.seed_from_table ? hylz::SeedStrategy::table_seed : hylz::SeedStrategy::heuristic;
  cfg.outer_tol = o.tol;
  cfg.max_outer_iters = o.max_iters;
  cfg.simplex_scale = o.simplex_scale;
  cfg.order = o.order == "auto" ? 0 : std::stoi(o.order);
  cfg.restarts = o.restarts;
  try {
    cfg.validate();
  } catch (const hylz::DomainError& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

const hylz::ReferenceData& reference(const Options& o) {
  static std::optional<hylz::ReferenceData> loaded;
  if (o.data_dir.empty()) return hylz::ReferenceData::embedded();
  if (!loaded) loaded = hylz::ReferenceData::from_directory(o.data_dir);
  return *loaded;
}

int thread_count(const Options& o) {
  if (o.threads > 0) return o.threads;
  if (const char* env = std::getenv("HYLZ_THREADS")) {
    const int n = std::atoi(env);
    if (n < 1) throw UsageError("HYLZ_THREADS must be a positive integer");
    return n;
  }
  return 1;
}

// Tabular output shared by csv and pretty: a header row plus string cells.
void write_rows(std::ostream& os, Format fmt, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
  if (fmt == Format::csv) {
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < r.size(); ++c) os << (c ? "," : "") << r[c];
      os << '\n';
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) {
      os << (c ? "  " : "") << cells[c] << std::string(width[c] - cells[c].size(), ' ');
    }
    os << '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
}

ordered_json envelope(const std::string& command) {
  ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  return j;
}

int cmd_deltas(const Options& o) {
  check_z(o.z);
  const auto lam = hylz::lambdas(o.z);
  const auto d = hylz::deltas(o.z);
  const auto e = hylz::basis_exponents(d);
  const std::vector<std::pair<std::string, double>> values{
      {"L1", lam.l1}, {"L2", lam.l2}, {"L3", lam.l3}, {"d1", d.d1}, {"d2", d.d2},
      {"d3", d.d3},   {"A0", e.a0},   {"A1", e.a1},   {"B0", e.b0}, {"B1", e.b1},
      {"C", e.c}};
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == Format::json) {
    auto j = envelope("deltas");
    j["z"] = o.z;
    j["kdot"] = lam.kdot;
    for (const auto& [k, v] : values) j[k] = v;
    os << j.dump(2) << '\n';
  } else if (o.format == Format::csv) {
    std::vector<std::string> header{"Z"}, row{std::to_string(o.z)};
    for (const auto& [k, v] : values) {
      header.push_back(k);
      row.push_back(shortest(v));
    }
    write_rows(os, Format::csv, header, {row});
  } else {
    os << "Z = " << o.z << "  (K-dot = " << lam.kdot << ")\n";
    for (const auto& [k, v] : values) os << "  " << k << std::string(4 - k.size(), ' ') << sig15(v) << '\n';
  }
  return exit_ok;
}

int cmd_hydrogen(const Options& o) {
  check_z(o.z);
  const hylz::Orbital orb{o.n, o.l, o.m, o.j, o.p};
  try {
    orb.validate();
  } catch (const hylz::DomainError& e) {
    throw UsageError(e.what());
  }
  const auto d = o.zero_couplings ? hylz::DeltaSet<double>{0, 0, 0} : hylz::couplings(o.z).deltas;
  const auto s = hylz::solve_orbital(orb, o.z, d);
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == Format::json) {
    auto j = envelope("hydrogen");
    j["z"] = o.z;
    j["orbital"] = {{"n", o.n}, {"l", o.l}, {"m", o.m}, {"J", o.j}, {"P", o.p}};
    j["zero_couplings"] = o.zero_couplings;
    j["T"] = s.t;
    j["L"] = s.big_l;
    j["sine_power"] = s.sine_power;
    j["radial_power"] = s.radial_power;
    j["xi"] = s.xi;
    j["energy"] = s.energy;
    j["angular_coeffs"] = s.angular_coeffs;
    j["radial_coeffs"] = s.radial_coeffs;
    os << j.dump(2) << '\n';
    return exit_ok;
  }
  auto join = [](const std::vector<double>& v) {
    std::string r;
    for (std::size_t q = 0; q < v.size(); ++q) r += (q ? ";" : "") + shortest(v[q]);
    return r;
  };
  std::vector<std::string> header{"Z", "n", "l", "m", "J", "P", "T", "L", "xi", "energy", "angular_coeffs", "radial_coeffs"};
  std::vector<std::string> row{std::to_string(o.z), std::to_string(o.n), std::to_string(o.l), std::to_string(o.m),
                               std::to_string(o.j), std::to_string(o.p), shortest(s.t), shortest(s.big_l),
                               shortest(s.xi), shortest(s.energy), join(s.angular_coeffs), join(s.radial_coeffs)};
  write_rows(os, o.format, header, {row});
  return exit_ok;
}

ordered_json result_json(int z, hylz::ModelKind kind, const hylz::VariationalResult& r) {
  ordered_json j;
  j["z"] = z;
  j["model"] = std::string(hylz::to_string(kind));
  j["energy"] = r.energy;
  j["xi1"] = r.state.xi1;
  j["xi2"] = r.state.xi2;
  j["pairing"] = r.params.pairing == hylz::Pairing::standard ? "standard" : "swapped";
  j["order"] = r.state.order();
  j["coeffs"] = r.state.coeffs;
  j["outer_iters"] = r.outer_iters;
  j["evaluations"] = r.evaluations;
  j["converged"] = r.converged;
  return j;
}

std::vector<std::string> result_row(int z, hylz::ModelKind kind, const hylz::VariationalResult& r) {
  std::vector<std::string> row{std::to_string(z), std::string(hylz::to_string(kind)), shortest(r.energy),
                               shortest(r.state.xi1), shortest(r.state.xi2),
                               r.params.pairing == hylz::Pairing::standard ? "standard" : "swapped"};
  for (std::size_t q = 1; q <= 3; ++q) row.push_back(q < r.state.coeffs.size() ? shortest(r.state.coeffs[q]) : "");
  row.push_back(std::to_string(r.outer_iters));
  row.push_back(r.converged ? "true" : "false");
  return row;
}

int cmd_solve(const Options& o) {
  check_z(o.z);
  const auto cfg = optimizer_config(o);
  const auto& data = reference(o);
  std::vector<std::pair<hylz::ModelKind, hylz::VariationalResult>> results;
  bool converged = true;
  for (auto kind : models(o.model)) {
    results.emplace_back(kind, hylz::solve_full(o.z, kind, cfg, data));
    converged = converged && results.back().second.converged;
  }
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == Format::json) {
    auto j = envelope("solve");
    j["records"] = ordered_json::array();
    for (const auto& [kind, r] : results) j["records"].push_back(result_json(o.z, kind, r));
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [kind, r] : results) rows.push_back(result_row(o.z, kind, r));
    write_rows(os, o.format,
               {"Z", "model", "energy", "xi1", "xi2", "pairing", "b1", "b2", "b3", "outer_iters", "converged"}, rows);
  }
  if (!converged) {
    std::cerr << "hylz: optimizer did not converge within " << cfg.max_outer_iters << " iterations\n";
    return exit_not_converged;
  }
  return exit_ok;
}

struct TableRow {
  int z = 0;
  std::optional<hylz::VariationalResult> s, i;
  std::string status = "ok";
};

int cmd_table(const Options& o) {
  const auto [lo, hi] = z_range(o);
  const auto cfg = optimizer_config(o);
  const auto& data = reference(o);
  const int workers = std::min(thread_count(o), hi - lo + 1);
  std::vector<TableRow> rows(static_cast<std::size_t>(hi - lo + 1));
  std::atomic<int> next{lo};
  auto work = [&] {
    for (int z = next++; z <= hi; z = next++) {
      auto& row = rows[static_cast<std::size_t>(z - lo)];
      row.z = z;
      try {
        row.s = hylz::solve_full(z, hylz::ModelKind::schrodinger, cfg, data);
        row.i = hylz::solve_full(z, hylz::ModelKind::improved, cfg, data);
        if (!row.s->converged || !row.i->converged) row.status = "not-converged";
      } catch (const std::exception& e) {
        row.status = std::string("error: ") + e.what();
        std::replace(row.status.begin(), row.status.end(), ',', ';');
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
  }

  Output out(o.out);
  auto& os = out.stream();
  bool all_converged = true;
  if (o.format == Format::json) {
    auto j = envelope("table");
    j["records"] = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json rec;
      rec["z"] = r.z;
      rec["status"] = r.status;
      if (r.s && r.i) {
        rec["lambda1"] = r.s->state.xi1;
        rec["lambda2"] = r.s->state.xi2;
        rec["xi1"] = r.i->state.xi1;
        rec["xi2"] = r.i->state.xi2;
        rec["E_S"] = r.s->energy;
        rec["E_Z"] = r.i->energy;
        rec["diff"] = r.s->energy - r.i->energy;
      }
      j["records"].push_back(rec);
      all_converged = all_converged && r.status == "ok";
    }
    os << j.dump(2) << '\n';
  } else {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
      if (r.s && r.i) {
        cells.push_back({std::to_string(r.z), shortest(r.s->state.xi1), shortest(r.s->state.xi2),
                         shortest(r.i->state.xi1), shortest(r.i->state.xi2), shortest(r.s->energy),
                         shortest(r.i->energy), shortest(r.s->energy - r.i->energy), r.status});
      } else {
        cells.push_back({std::to_string(r.z), "", "", "", "", "", "", "", r.status});
      }
      all_converged = all_converged && r.status == "ok";
    }
    write_rows(os, o.format, {"Z", "lambda1", "lambda2", "xi1", "xi2", "E_S", "E_Z", "diff", "status"}, cells);
  }
  return all_converged ? exit_ok : exit_not_converged;
}

int cmd_compare(const Options& o) {
  const auto [lo, hi] = z_range(o);
  const auto cfg = optimizer_config(o);
  const auto& data = reference(o);
  std::vector<std::vector<std::string>> cells;
  auto j = envelope("compare");
  j["records"] = ordered_json::array();
  bool converged = true;
  for (int z = lo; z <= hi; ++z) {
    const auto& ref = data.row(z);
    const auto s = hylz::solve_full(z, hylz::ModelKind::schrodinger, cfg, data);
    const auto i = hylz::solve_full(z, hylz::ModelKind::improved, cfg, data);
    converged = converged && s.converged && i.converged;
    std::optional<double> eta, eps;
    if (ref.has_table2()) {
      eta = hylz::eta_metric(s.energy, i.energy, *ref.e0, *ref.e_corr);
      if (ref.e_exp) eps = hylz::epsilon_metric(i.energy, *ref.e_exp);
    }
    ordered_json rec;
    rec["z"] = z;
    rec["E_S"] = s.energy;
    rec["E_S_table"] = ref.e_s;
    rec["E_Z"] = i.energy;
    rec["E_Z_table"] = ref.e_z;
    rec["eta"] = eta ? ordered_json(*eta) : ordered_json(nullptr);
    rec["eta_table"] = ref.eta ? ordered_json(*ref.eta) : ordered_json(nullptr);
    rec["epsilon"] = eps ? ordered_json(*eps) : ordered_json(nullptr);
    j["records"].push_back(rec);
    cells.push_back({std::to_string(z), shortest(s.energy), shortest(ref.e_s), shortest(s.energy - ref.e_s),
                     shortest(i.energy), shortest(ref.e_z), shortest(i.energy - ref.e_z), eta ? shortest(*eta) : "",
                     ref.eta ? shortest(*ref.eta) : "", eps ? shortest(*eps) : ""});
  }
  Output out(o.out);
  auto& os = out.stream();
  if (o.format == Format::json) {
    os << j.dump(2) << '\n';
  } else {
    write_rows(os, o.format,
               {"Z", "E_S", "E_S_table", "dE_S", "E_Z", "E_Z_table", "dE_Z", "eta", "eta_table", "epsilon"}, cells);
  }
  return converged ? exit_ok : exit_not_converged;
}

int cmd_verify(const Options& o) {
  if (!o.only.empty()) {
    const auto groups = hylz::acceptance_groups();
    bool known = std::find(groups.begin(), groups.end(), o.only) != groups.end();
    for (const auto& c : hylz::acceptance_criteria()) known = known || c.id == o.only;
    if (!known) throw UsageError("--only: unknown criterion or group '" + o.only + "'");
  }
  std::vector<hylz::CriterionReport> reports;
  try {
    reports = hylz::run_acceptance(reference(o), o.only);
  } catch (const hylz::DataError& e) {
    std::cerr << "hylz: reference data rejected: " << e.what() << '\n';
    return exit_verify;
  }
  Output out(o.out);
  auto& os = out.stream();
  const bool passed = hylz::acceptance_passed(reports);
  if (o.format == Format::json) {
    auto j = envelope("verify");
    j["passed"] = passed;
    j["criteria"] = ordered_json::array();
    for (const auto& r : reports) {
      j["criteria"].push_back({{"id", r.id}, {"group", r.group}, {"title", r.title},
                               {"verdict", std::string(hylz::to_string(r.verdict))}, {"detail", r.detail}});
    }
    os << j.dump(2) << '\n';
  } else if (o.format == Format::csv) {
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : reports) {
      std::string detail = r.detail;
      std::replace(detail.begin(), detail.end(), ',', ';');
      cells.push_back({r.id, r.group, r.title, std::string(hylz::to_string(r.verdict)), detail});
    }
    write_rows(os, Format::csv, {"id", "group", "title", "verdict", "detail"}, cells);
  } else {
    for (const auto& r : reports) os << hylz::format_report(r) << '\n';
    os << (passed ? "all criteria passed" : "verification FAILED") << '\n';
  }
  return passed ? exit_ok : exit_verify;
}

/// key=value lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(lineno) + ": expected key=value");
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

/// Fill options of the chosen subcommand that were not given on the command line.
void apply_config(CLI::App* sub, const std::map<std::string, std::string>& kv) {
  for (const auto& [key, value] : kv) {
    CLI::Option* opt = sub->get_option_no_throw("--" + key);
    if (!opt) throw UsageError("config: option '" + key + "' does not apply to '" + sub->get_name() + "'");
    if (opt->count() > 0) continue;
    if (opt->get_type_size() == 0) {
      if (value == "true" || value == "1") opt->add_result("true");
      else if (value != "false" && value != "0") throw UsageError("config: '" + key + "' expects true or false");
    } else {
      opt->add_result(value);
    }
    opt->run_callback();
  }
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Helium-like ground states in a correlated Hylleraas basis"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  const std::map<std::string, Format> formats{{"csv", Format::csv}, {"json", Format::json}, {"pretty", Format::pretty}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
    sub->add_option("--config", o.config, "key=value file with option defaults");
  };
  auto optimizer = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Correlation polynomial order")->check(CLI::IsMember({"0", "1", "2", "3", "auto"}));
    sub->add_flag("--seed-from-table", o.seed_from_table, "Start from the reference exponents");
    sub->add_option("--tol", o.tol, "Outer convergence tolerance, hartree");
    sub->add_option("--max-iters", o.max_iters, "Outer iteration limit");
    sub->add_option("--simplex-scale", o.simplex_scale, "Initial simplex edge as a fraction of Z");
    sub->add_option("--restarts", o.restarts, "Seeded restarts after the first search");
    sub->add_option("--data-dir", o.data_dir, "Directory with table1.csv, table2.csv, table3.csv");
  };

  auto* deltas = app.add_subcommand("deltas", "Couplings and orbital powers for one charge");
  deltas->add_option("--z", o.z, "Nuclear charge")->required();
  common(deltas);

  auto* hydrogen = app.add_subcommand("hydrogen", "Exact one-electron solution");
  hydrogen->add_option("--z", o.z, "Nuclear charge")->required();
  hydrogen->add_option("--n", o.n, "Principal quantum number");
  hydrogen->add_option("--l", o.l, "Azimuthal quantum number");
  hydrogen->add_option("--m", o.m, "Magnetic quantum number");
  hydrogen->add_option("--j", o.j, "Spin label J (0 or 1)");
  hydrogen->add_option("--p", o.p, "Parity label P (0 or 1)");
  hydrogen->add_flag("--zero-couplings", o.zero_couplings, "Set all couplings to zero");
  common(hydrogen);

  auto* solve = app.add_subcommand("solve", "Variational ground state for one charge");
  solve->add_option("--z", o.z, "Nuclear charge")->required();
  solve->add_option("--model", o.model, "Functional")->check(CLI::IsMember({"schrodinger", "improved", "both"}));
  common(solve);
  optimizer(solve);

  auto* table = app.add_subcommand("table", "Computed table over a range of charges");
  table->add_option("--from", o.from, "First charge");
  table->add_option("--to", o.to, "Last charge (default: --from)");
  table->add_option("--threads", o.threads, "Worker threads (default: HYLZ_THREADS or 1)")->check(CLI::PositiveNumber);
  common(table);
  optimizer(table);

  auto* compare = app.add_subcommand("compare", "Computed energies against the reference tables");
  compare->add_option("--z", o.z, "Single charge");
  compare->add_option("--from", o.from, "First charge");
  compare->add_option("--to", o.to, "Last charge (default: --from)");
  common(compare);
  optimizer(compare);

  auto* verify = app.add_subcommand("verify", "Run the acceptance suite");
  verify->add_option("--only", o.only, "Run one criterion id or group");
  verify->add_option("--data-dir", o.data_dir, "Directory with table1.csv, table2.csv, table3.csv");
  common(verify);

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    if (!o.config.empty()) apply_config(sub, read_config(o.config));

    if (sub == deltas) return cmd_deltas(o);
    if (sub == hydrogen) return cmd_hydrogen(o);
    if (sub == solve) return cmd_solve(o);
    if (sub == table) return cmd_table(o);
    if (sub == compare) return cmd_compare(o);
    if (sub == verify) return cmd_verify(o);
    return exit_usage;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  } catch (const UsageError& e) {
    std::cerr << "hylz: " << e.what() << '\n';
    return exit_usage;
  } catch (const hylz::DomainError& e) {
    std::cerr << "hylz: domain error: " << e.what() << '\n';
    return exit_usage;
  } catch (const hylz::ConvergenceError& e) {
    std::cerr << "hylz: " << e.what() << '\n';
    return exit_not_converged;
  } catch (const hylz::DataError& e) {
    std::cerr << "hylz: reference data: " << e.what() << '\n';
    return exit_verify;
  } catch (const std::exception& e) {
    std::cerr << "hylz: " << e.what() << '\n';
    return exit_internal;
  }
}
