#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sqprod/arith.hpp"
#include "sqprod/errors.hpp"
#include "sqprod/exact.hpp"
#include "sqprod/multopt.hpp"
#include "sqprod/oeis.hpp"
#include "sqprod/sampler.hpp"

#ifndef SQPROD_VERSION
#define SQPROD_VERSION "0.0.0"
#endif

namespace sqprod::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Manifest {
  std::string command;
  std::map<std::string, std::string> parameters;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> outputs;

  template <typename T>
  void set(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    parameters[key] = s.str();
  }

  json to_json() const {
    json j = {{"command", command},
              {"parameters", parameters},
              {"tool_version", SQPROD_VERSION},
              {"outputs", outputs}};
    j["seed"] = seed ? json(*seed) : json(nullptr);
    return j;
  }
};

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) throw Error("cannot write " + path.string());
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

struct Budget {
  std::uint32_t max_n = exact::kDefaultSolverLimit;
  std::uint64_t edge_budget = exact::kDefaultEdgeBudget;
  std::uint64_t node_budget = 0;

  void add_to(CLI::App* app) {
    app->add_option("--max-n", max_n, "Largest N the exact solver accepts")
        ->check(CLI::Range(1u, exact::kMaxSolverLimit))
        ->capture_default_str();
    app->add_option("--edge-budget", edge_budget, "Maximum number of bad tuples")
        ->capture_default_str();
    app->add_option("--node-budget", node_budget, "Maximum search nodes (0 = unlimited)")
        ->capture_default_str();
  }

  void record(Manifest& m) const {
    m.set("max_n", max_n);
    m.set("edge_budget", edge_budget);
    m.set("node_budget", node_budget);
  }

  exact::ComputeOptions options() const {
    exact::ComputeOptions o;
    o.enumeration.max_n = max_n;
    o.enumeration.edge_budget = edge_budget;
    o.solver.node_budget = node_budget;
    return o;
  }
};

void emit_bfile(const fs::path& path, const std::vector<oeis::BFileEntry>& entries,
                Manifest& manifest) {
  write_text(path, oeis::serialize_bfile(entries));
  manifest.outputs.push_back(path.string());
}

// Values the tool can compute for the sequences it knows about.
std::function<mpz_class(std::int64_t)> generator_for(const std::string& id,
                                                     const exact::ComputeOptions& options) {
  auto fk = [options](std::uint32_t k) {
    return [options, k](std::int64_t n) -> mpz_class {
      if (n < 1) return 0;
      return mpz_class(static_cast<unsigned long>(
          exact::compute_fk(static_cast<std::uint32_t>(n), k, 2, options)));
    };
  };
  if (id == "A373114") {
    return [](std::int64_t n) -> mpz_class {
      if (n < 1) return 0;
      return mpz_class(static_cast<unsigned long>(multopt::compute_f(static_cast<std::uint32_t>(n))));
    };
  }
  if (id == "A360659") {
    return [](std::int64_t n) -> mpz_class {
      if (n < 1) return 0;
      return mpz_class(
          static_cast<long>(multopt::min_multiplicative_sum(static_cast<std::uint32_t>(n)).min_sum));
    };
  }
  if (id == "A013928") {
    return [f2 = fk(2)](std::int64_t n) { return f2(n - 1); };
  }
  if (id == "A028391") return fk(1);
  if (id == "A372306") return fk(3);
  if (id == "A373119") return fk(4);
  if (id == "A373178") return fk(5);
  throw ArgumentError("no generator for sequence " + id);
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(const std::vector<std::string>& args) {
    CLI::App app{"Exact and probabilistic tools for square-product-free subsets"};
    app.set_version_flag("--version", SQPROD_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", json_, "Machine-readable output");
    app.add_option("--manifest", manifest_path_, "Run manifest path");

    setup_fk(app);
    setup_lk(app);
    setup_solve(app);
    setup_f(app);
    setup_const(app);
    setup_hall(app);
    setup_sample(app);
    setup_table(app);
    setup_oeis(app);

    std::vector<std::string> storage{"sqprod"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());

    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out_, err_);
      return code == 0 ? kOk : kArgumentError;
    }

    try {
      const int code = action_();
      write_manifest();
      return code;
    } catch (const CapacityError& e) {
      err_ << "capacity error: " << e.what() << "\n";
      return kCapacityError;
    } catch (const ArgumentError& e) {
      err_ << "argument error: " << e.what() << "\n";
      return kArgumentError;
    } catch (const std::exception& e) {
      err_ << "error: " << e.what() << "\n";
      return kFailure;
    }
  }

 private:
  void write_manifest() {
    fs::path path = manifest_path_;
    if (path.empty()) {
      path = manifest_.outputs.empty() ? fs::path("sqprod-" + manifest_.command + ".manifest.json")
                                       : fs::path(manifest_.outputs.front() + ".manifest.json");
    }
    write_text(path, manifest_.to_json().dump(2) + "\n");
  }

  CLI::App* subcommand(CLI::App& app, const std::string& name, const std::string& help,
                       std::function<int()> action) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([this, name, action] {
      manifest_.command = name;
      action_ = action;
    });
    return sub;
  }

  void setup_fk(CLI::App& app) {
    auto* sub = subcommand(app, "fk", "Largest subset of 1..N with no k-product an m-th power",
                           [this] { return cmd_fk(); });
    sub->add_option("--n", fk_.n, "N")->required()->check(CLI::Range(1u, 1u << 30));
    sub->add_option("--k", fk_.k, "Tuple size")->required()->check(CLI::Range(1u, 7u));
    sub->add_option("--m", fk_.m, "Power")->check(CLI::Range(2u, 64u))->capture_default_str();
    sub->add_option("--emit-bfile", fk_.bfile, "Write F_k(1..N) in b-file format");
    sub->add_option("--export-hypergraph", fk_.hypergraph, "Write the bad-tuple hypergraph JSON");
    fk_.budget.add_to(sub);
  }

  int cmd_fk() {
    manifest_.set("N", fk_.n);
    manifest_.set("k", fk_.k);
    manifest_.set("m", fk_.m);
    fk_.budget.record(manifest_);
    const auto options = fk_.budget.options();

    json j = {{"N", fk_.n}, {"k", fk_.k}, {"m", fk_.m}};
    std::uint64_t value = 0;
    if (fk_.k == 1) {
      value = exact::compute_fk(fk_.n, 1, fk_.m, options);
    } else {
      const auto h = exact::enumerate_bad_tuples(fk_.n, fk_.k, fk_.m, options.enumeration);
      const auto solution =
          exact::max_independent_subset(h, exact::Objective::kCardinality, options.solver);
      value = solution.cardinality;
      j["edges"] = h.edge_count();
      j["solution"] = exact::to_json(solution);
      if (!fk_.hypergraph.empty()) {
        write_text(fk_.hypergraph, exact::to_json(h).dump() + "\n");
        manifest_.outputs.push_back(fk_.hypergraph);
      }
    }
    j["F"] = value;

    if (!fk_.bfile.empty()) {
      std::vector<oeis::BFileEntry> entries;
      for (std::uint32_t n = 1; n <= fk_.n; ++n) {
        const auto v = n == fk_.n ? value : exact::compute_fk(n, fk_.k, fk_.m, options);
        entries.push_back({n, mpz_class(static_cast<unsigned long>(v))});
      }
      emit_bfile(fk_.bfile, entries, manifest_);
    }

    if (json_) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "F_{" << fk_.k << "," << fk_.m << "}(" << fk_.n << ") = " << value << "\n";
    }
    return kOk;
  }

  void setup_lk(CLI::App& app) {
    auto* sub = subcommand(app, "lk", "Largest reciprocal sum over square-product-free subsets",
                           [this] { return cmd_lk(); });
    sub->add_option("--n", lk_.n, "N")->required()->check(CLI::Range(1u, 1u << 30));
    sub->add_option("--k", lk_.k, "Tuple size")->capture_default_str()->check(CLI::Range(1u, 7u));
    lk_.budget.add_to(sub);
  }

  int cmd_lk() {
    manifest_.set("N", lk_.n);
    manifest_.set("k", lk_.k);
    lk_.budget.record(manifest_);
    const mpq_class value = exact::compute_lk(lk_.n, lk_.k, lk_.budget.options());
    const std::string exact_text = exact::rational_string(value);
    const double approx = value.get_d();
    if (json_) {
      out_ << json{{"N", lk_.n}, {"k", lk_.k}, {"L", exact_text}, {"L_approx", approx}}.dump(2)
           << "\n";
    } else {
      out_ << "L_" << lk_.k << "(" << lk_.n << ") = " << exact_text << " ~ " << fixed(approx, 12)
           << "\n";
    }
    return kOk;
  }

  void setup_solve(CLI::App& app) {
    auto* sub = subcommand(app, "solve", "Solve a hypergraph instance read from JSON",
                           [this] { return cmd_solve(); });
    sub->add_option("--instance", solve_.instance, "Hypergraph JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--objective", solve_.objective, "cardinality or reciprocal")
        ->check(CLI::IsMember({"cardinality", "reciprocal"}))
        ->capture_default_str();
    sub->add_option("--node-budget", solve_.node_budget, "Maximum search nodes (0 = unlimited)");
    sub->add_option("--out", solve_.out, "Write the solution JSON here");
  }

  int cmd_solve() {
    manifest_.set("instance", solve_.instance);
    manifest_.set("objective", solve_.objective);
    manifest_.set("node_budget", solve_.node_budget);
    std::ifstream in(solve_.instance);
    json instance;
    try {
      instance = json::parse(in);
    } catch (const json::exception& e) {
      throw ArgumentError(std::string("cannot parse instance: ") + e.what());
    }
    const auto h = exact::hypergraph_from_json(instance);
    const auto objective = solve_.objective == "reciprocal" ? exact::Objective::kReciprocalSum
                                                            : exact::Objective::kCardinality;
    const auto solution = exact::max_independent_subset(h, objective, {solve_.node_budget});
    const json j = exact::to_json(solution);
    if (!solve_.out.empty()) {
      write_text(solve_.out, j.dump(2) + "\n");
      manifest_.outputs.push_back(solve_.out);
    }
    if (json_) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "cardinality " << solution.cardinality << ", weight "
           << exact::rational_string(solution.weight) << "\n";
    }
    return kOk;
  }

  void setup_f(CLI::App& app) {
    auto* sub = subcommand(app, "f", "Largest subset with no odd-size square product",
                           [this] { return cmd_f(); });
    sub->add_option("--n", f_.n, "N")
        ->required()
        ->check(CLI::Range(1u, multopt::kDefaultMinSumLimit));
    sub->add_option("--emit-bfile", f_.bfile, "Write F(1..N) in b-file format");
  }

  int cmd_f() {
    manifest_.set("N", f_.n);
    const auto result = multopt::min_multiplicative_sum(f_.n);
    const std::int64_t f = (static_cast<std::int64_t>(f_.n) - result.min_sum) / 2;
    if (!f_.bfile.empty()) {
      std::vector<oeis::BFileEntry> entries;
      for (std::uint32_t n = 1; n <= f_.n; ++n) {
        entries.push_back({n, mpz_class(static_cast<unsigned long>(multopt::compute_f(n)))});
      }
      emit_bfile(f_.bfile, entries, manifest_);
    }
    if (json_) {
      out_ << multopt::to_json(result).dump(2) << "\n";
    } else {
      out_ << "F(" << f_.n << ") = " << f << "\n";
      out_ << "N - 2F(N) = " << result.min_sum << "\n";
    }
    return kOk;
  }

  void setup_const(CLI::App& app) {
    auto* sub = subcommand(app, "const", "Hall-Montgomery constant", [this] { return cmd_const(); });
    sub->add_option("--tolerance", const_.tolerance, "Quadrature tolerance")
        ->check(CLI::Range(1e-15, 1e-1))
        ->capture_default_str();
  }

  int cmd_const() {
    manifest_.set("tolerance", const_.tolerance);
    const double c = multopt::hall_montgomery_constant(const_.tolerance);
    if (json_) {
      out_ << json{{"c", c}, {"one_minus_c", 1.0 - c}, {"tolerance", const_.tolerance}}.dump(2)
           << "\n";
    } else {
      out_ << "c = " << fixed(c, 12) << "\n";
      out_ << "1 - c = " << fixed(1.0 - c, 12) << "\n";
    }
    return kOk;
  }

  void setup_hall(CLI::App& app) {
    auto* sub = subcommand(app, "hall", "Hall set: one large prime factor above N^(1/u)",
                           [this] { return cmd_hall(); });
    sub->add_option("--n", hall_.n, "N")->required()->check(CLI::Range(4ull, 100'000'000ull));
    sub->add_option("--u", hall_.u, "Exponent (default 1 + sqrt(e))")->check(CLI::Range(2.0, 4.0));
    sub->add_option("--out", hall_.out, "Write members, one per line");
  }

  int cmd_hall() {
    const double u = hall_.u.value_or(multopt::optimal_hall_exponent());
    manifest_.set("N", hall_.n);
    manifest_.parameters["u"] = fixed(u, 15);
    const auto table = arith::build_factor_table(hall_.n);
    const auto set = multopt::build_hall_set(hall_.n, u, table);
    const bool certified = multopt::certify_no_odd_power_products(set.members, set.threshold, table);
    const double density = static_cast<double>(set.members.size()) / static_cast<double>(hall_.n);
    if (!hall_.out.empty()) {
      std::string text;
      for (auto x : set.members) text += std::to_string(x) + "\n";
      write_text(hall_.out, text);
      manifest_.outputs.push_back(hall_.out);
    }
    if (json_) {
      out_ << json{{"N", hall_.n},
                   {"u", u},
                   {"threshold", set.threshold},
                   {"size", set.members.size()},
                   {"density", density},
                   {"certified", certified}}
                  .dump(2)
           << "\n";
    } else {
      out_ << "threshold " << set.threshold << ", |A| = " << set.members.size() << ", density "
           << fixed6(density) << ", certificate " << (certified ? "ok" : "FAILED") << "\n";
    }
    return certified ? kOk : kMismatch;
  }

  void setup_sample(CLI::App& app) {
    auto* sub = subcommand(app, "sample", "Monte Carlo run of the random tuple construction",
                           [this] { return cmd_sample(); });
    sub->add_option("--n", sample_.n, "N")->required();
    sub->add_option("--k", sample_.k, "Tuple size")->required();
    sub->add_option("--m", sample_.m, "Power")->capture_default_str();
    sub->add_option("--eps", sample_.eps, "Epsilon")->required();
    sub->add_option("--trials", sample_.trials, "Number of trials")->required();
    sub->add_option("--seed", sample_.seed, "Seed")->capture_default_str();
    sub->add_option("--threads", sample_.threads, "Worker threads")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    sub->add_option("--out", sample_.out, "Write the report JSON here");
    sub->add_option("--csv", sample_.csv, "Stream every trial to this CSV file");
  }

  int cmd_sample() {
    manifest_.set("N", sample_.n);
    manifest_.set("k", sample_.k);
    manifest_.set("m", sample_.m);
    manifest_.parameters["eps"] = fixed(sample_.eps, 15);
    manifest_.set("trials", sample_.trials);
    manifest_.set("threads", sample_.threads);
    manifest_.seed = sample_.seed;

    const auto config =
        sampler::SamplerConfig::make(sample_.n, sample_.k, sample_.m, sample_.eps, sample_.seed);
    const sampler::Sampler s(config);

    sampler::MonteCarloReport report;
    if (!sample_.csv.empty()) {
      if (fs::path(sample_.csv).has_parent_path()) {
        fs::create_directories(fs::path(sample_.csv).parent_path());
      }
      std::ofstream csv(sample_.csv, std::ios::binary | std::ios::trunc);
      sampler::write_csv_header(csv, config);
      report = sampler::run_monte_carlo(s, sample_.trials, 1,
                                        [&csv](std::uint64_t trial, const sampler::TupleSample& t) {
                                          sampler::write_csv_row(csv, trial, t);
                                        });
      if (!csv) throw Error("cannot write " + sample_.csv);
    } else {
      report = sampler::run_monte_carlo(s, sample_.trials, sample_.threads);
    }

    const json j = sampler::to_json(report);
    if (!sample_.out.empty()) {
      write_text(sample_.out, j.dump(2) + "\n");
      manifest_.outputs.insert(manifest_.outputs.begin(), sample_.out);
    }
    if (!sample_.csv.empty()) manifest_.outputs.push_back(sample_.csv);

    if (json_) {
      out_ << j.dump(2) << "\n";
    } else {
      out_ << "trials " << report.trials << ", E hits " << report.hits_e << ", perfect "
           << config.m << "-th power products " << report.perfect_power_hits << ", collisions "
           << report.collisions << "\n";
    }
    return report.perfect_power_hits == report.trials ? kOk : kMismatch;
  }

  void setup_table(CLI::App& app) {
    auto* sub = subcommand(app, "table", "CSV of F(N)/N and F_k(N)/N", [this] { return cmd_table(); });
    sub->add_option("--kmax", table_.kmax, "Largest k")->required()->check(CLI::Range(2u, 7u));
    sub->add_option("--nmax", table_.nmax, "Largest N")
        ->required()
        ->check(CLI::Range(1u, exact::kMaxSolverLimit));
    sub->add_option("--out", table_.out, "CSV path")->required();
    table_.budget.node_budget = 2'000'000;
    table_.budget.add_to(sub);
  }

  int cmd_table() {
    manifest_.set("kmax", table_.kmax);
    manifest_.set("nmax", table_.nmax);
    table_.budget.record(manifest_);
    auto options = table_.budget.options();
    options.enumeration.max_n = std::max(options.enumeration.max_n, table_.nmax);

    const std::uint32_t columns = table_.kmax;  // F, F2..Fkmax
    std::vector<std::vector<std::optional<std::uint64_t>>> rows(table_.nmax + 1);
    for (std::uint32_t n = 1; n <= table_.nmax; ++n) {
      rows[n].resize(columns);
      if (n <= multopt::kDefaultMinSumLimit) rows[n][0] = multopt::compute_f(n);
    }
    for (std::uint32_t k = 2; k <= table_.kmax; ++k) {
      for (std::uint32_t n = 1; n <= table_.nmax; ++n) {
        try {
          rows[n][k - 1] = exact::compute_fk(n, k, 2, options);
        } catch (const CapacityError&) {
          break;  // larger N only grow the instance
        }
      }
    }

    std::string csv = "N,F";
    for (std::uint32_t k = 2; k <= table_.kmax; ++k) csv += ",F" + std::to_string(k);
    csv += ",F/N";
    for (std::uint32_t k = 2; k <= table_.kmax; ++k) csv += ",F" + std::to_string(k) + "/N";
    csv += "\n";
    for (std::uint32_t n = 1; n <= table_.nmax; ++n) {
      csv += std::to_string(n);
      for (const auto& v : rows[n]) csv += "," + (v ? std::to_string(*v) : std::string());
      for (const auto& v : rows[n]) {
        csv += "," + (v ? fixed6(static_cast<double>(*v) / n) : std::string());
      }
      csv += "\n";
    }
    write_text(table_.out, csv);
    manifest_.outputs.push_back(table_.out);

    std::size_t missing = 0;
    for (std::uint32_t n = 1; n <= table_.nmax; ++n) {
      for (const auto& v : rows[n]) missing += v ? 0 : 1;
    }
    if (json_) {
      out_ << json{{"out", table_.out}, {"rows", table_.nmax}, {"empty_cells", missing}}.dump(2)
           << "\n";
    } else {
      out_ << "wrote " << table_.nmax << " rows to " << table_.out << " (" << missing
           << " empty cells)\n";
    }
    return kOk;
  }

  void setup_oeis(CLI::App& app) {
    auto* sub = subcommand(app, "oeis-check", "Compare computed values with an OEIS b-file",
                           [this] { return cmd_oeis(); });
    sub->add_option("--seq", oeis_.id, "Sequence id, e.g. A373114")->required();
    sub->add_option("--upto", oeis_.upto, "Largest index compared")->required();
    auto* online = sub->add_flag("--online", oeis_.online, "Fetch over HTTP on cache miss");
    sub->add_flag("--offline", "Never touch the network (default)")->excludes(online);
    sub->add_option("--cache-dir", oeis_.cache_dir, "Cache directory");
    sub->add_option("--base-url", oeis_.base_url, "Server root")->capture_default_str();
    sub->add_option("--inject-fault", oeis_.fault, "Add 1 to the computed value at this index");
    sub->add_option("--emit-bfile", oeis_.bfile, "Write the computed values in b-file format");
    oeis_.budget.add_to(sub);
  }

  int cmd_oeis() {
    manifest_.set("seq", oeis_.id);
    manifest_.set("upto", oeis_.upto);
    manifest_.set("online", oeis_.online);
    manifest_.set("base_url", oeis_.base_url);
    if (oeis_.fault) manifest_.set("inject_fault", *oeis_.fault);
    oeis_.budget.record(manifest_);

    if (!oeis::is_valid_id(oeis_.id)) {
      throw ArgumentError("invalid OEIS id \"" + oeis_.id + "\" (expected A + 6 digits)");
    }
    const auto generate = generator_for(oeis_.id, oeis_.budget.options());

    oeis::FetchOptions fetch;
    if (!oeis_.cache_dir.empty()) fetch.cache_dir = oeis_.cache_dir;
    fetch.offline = !oeis_.online;
    fetch.base_url = oeis_.base_url;
    const auto fetched = oeis::fetch_sequence_with_source(oeis_.id, fetch);

    std::map<std::int64_t, mpz_class> computed;
    std::vector<oeis::BFileEntry> emitted;
    for (const auto& e : fetched.entries) {
      if (e.index > oeis_.upto) break;
      mpz_class v = generate(e.index);
      if (oeis_.fault && *oeis_.fault == e.index) v += 1;
      computed[e.index] = v;
      emitted.push_back({e.index, v});
    }
    if (!oeis_.bfile.empty()) emit_bfile(oeis_.bfile, emitted, manifest_);

    const auto comparison = oeis::compare_prefix(computed, fetched.entries, oeis_.upto);
    const char* source = fetched.source == oeis::FetchSource::kCache     ? "cache"
                         : fetched.source == oeis::FetchSource::kNetwork ? "network"
                                                                         : "fixture";
    if (json_) {
      json j = oeis::to_json(comparison);
      j["seq"] = oeis_.id;
      j["upto"] = oeis_.upto;
      j["source"] = source;
      out_ << j.dump(2) << "\n";
    } else {
      out_ << oeis_.id << " (" << source << "): " << comparison.matches << "/"
           << comparison.items.size() << " match\n";
      for (const auto& item : comparison.items) {
        if (item.match) continue;
        out_ << "  mismatch at " << item.index << ": computed " << item.computed.get_str()
             << ", reference " << item.reference.get_str() << "\n";
      }
    }
    return comparison.mismatches == 0 ? kOk : kMismatch;
  }

  std::ostream& out_;
  std::ostream& err_;
  bool json_ = false;
  std::string manifest_path_;
  Manifest manifest_;
  std::function<int()> action_;

  struct {
    std::uint32_t n = 0, k = 0, m = 2;
    std::string bfile, hypergraph;
    Budget budget;
  } fk_;
  struct {
    std::uint32_t n = 0, k = 2;
    Budget budget;
  } lk_;
  struct {
    std::string instance, objective = "cardinality", out;
    std::uint64_t node_budget = 0;
  } solve_;
  struct {
    std::uint32_t n = 0;
    std::string bfile;
  } f_;
  struct {
    double tolerance = 1e-12;
  } const_;
  struct {
    std::uint64_t n = 0;
    std::optional<double> u;
    std::string out;
  } hall_;
  struct {
    std::uint64_t n = 0, trials = 0, seed = 0;
    std::uint32_t k = 0, m = 2;
    double eps = 0.0;
    unsigned threads = 1;
    std::string out, csv;
  } sample_;
  struct {
    std::uint32_t kmax = 0, nmax = 0;
    std::string out;
    Budget budget;
  } table_;
  struct {
    std::string id;
    std::int64_t upto = 0;
    bool online = false;
    std::string cache_dir, base_url = "https://oeis.org", bfile;
    std::optional<std::int64_t> fault;
    Budget budget;
  } oeis_;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out, err);
  return runner.run(args);
}

}  // namespace sqprod::cli
