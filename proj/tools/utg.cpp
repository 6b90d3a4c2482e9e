// utg: command-line front end.
//
// Exit codes: 0 all checks passed, 1 a verdict contradicts what was expected,
// 2 usage or input error, 3 a computation was refused by a cap.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "utg/catalog.hpp"
#include "utg/reduction.hpp"
#include "utg/report.hpp"
#include "utg/semigroup.hpp"
#include "utg/utp.hpp"

namespace {

  using namespace utg;

  enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kRefused = 3 };

  struct Config {
    std::size_t closure_cap = SemigroupCaps{}.closure;
    std::size_t bfs_cap = SemigroupCaps{}.bfs;
    std::size_t utp_degree_cap = 12;
    std::size_t sync_degree_cap = 10;
    std::size_t workers = 1;
    std::string data_dir = default_data_dir().string();
    std::string format = "text";
    bool timing = true;

    SemigroupCaps caps() const { return {closure_cap, bfs_cap}; }
    UtpOptions utp() const {
      UtpOptions o;
      o.degree_cap = utp_degree_cap;
      o.workers = workers;
      return o;
    }
  };

  Json group_json(NamedGroup const& ng) {
    return {{"name", ng.name},
            {"degree", ng.group.degree()},
            {"order", to_string(ng.group.order())}};
  }

  // "true"/"false" for --expect; empty means no expectation.
  int expectation_exit(std::string const& expect, bool observed) {
    if (expect.empty()) {
      return kOk;
    }
    return (expect == "true") == observed ? kOk : kMismatch;
  }

  class Cli {
   public:
    explicit Cli(Config& cfg) : cfg_(cfg) {}

    void add_group_commands(CLI::App& app) {
      auto* group = app.add_subcommand("group", "Build groups and orbits");
      group->require_subcommand(1);

      auto* build_cmd = group->add_subcommand(
          "build", "Degree, order, generators, transitivity, primitivity");
      build_cmd->add_option("name", name_, "Catalogue name or .grp file")
          ->required();
      build_cmd->callback([this] { run_group_build(); });

      auto* orbit_cmd = group->add_subcommand(
          "orbit", "Orbit of a set or a partition");
      orbit_cmd->add_option("name", name_)->required();
      auto* set_opt = orbit_cmd->add_option("--set", set_, "e.g. {1,2,3}");
      auto* part_opt = orbit_cmd->add_option("--partition", partition_,
                                             "e.g. {{1},{2,3}}");
      set_opt->excludes(part_opt);
      orbit_cmd->callback([this, set_opt, part_opt] {
        if (set_opt->count() + part_opt->count() != 1) {
          throw CLI::ValidationError("give one of --set or --partition");
        }
        run_group_orbit();
      });
    }

    void add_utp_commands(CLI::App& app) {
      auto* utp = app.add_subcommand("utp", "Universal transversal property");
      utp->require_subcommand(1);

      auto* check = utp->add_subcommand("check", "Decide the property");
      check->add_option("name", name_)->required();
      add_expect(check);
      check->callback([this] { run_utp_check(); });

      auto* witness = utp->add_subcommand(
          "witness", "Check that a set and partition refute the property");
      witness->add_option("name", name_)->required();
      witness->add_option("--set", set_)->required();
      witness->add_option("--partition", partition_)->required();
      witness->callback([this] { run_utp_witness(); });

      auto* affine = utp->add_subcommand(
          "affine", "Refuting pair for AGL(k,p), verified");
      affine->add_option("p", p_)->required();
      affine->add_option("k", k_)->required();
      affine->callback([this] { run_utp_affine(); });
    }

    void add_semigroup_commands(CLI::App& app) {
      auto* sg = app.add_subcommand("semigroup",
                                    "Semigroups generated by G and one map");
      sg->require_subcommand(1);

      auto* analyze = sg->add_subcommand(
          "analyze", "Property check and both cone properties at every rank");
      analyze->add_option("name", name_)->required();
      analyze->add_flag("--skip-idempotent", skip_idempotent_,
                        "Do not test idempotent generation");
      analyze->add_flag("--skip-regular", skip_regular_,
                        "Do not test regularity");
      analyze->add_flag("--stop-after-failure", stop_after_failure_,
                        "Stop testing a property after its first failing rank");
      analyze->callback([this] { run_semigroup_analyze(); });

      auto* cone = sg->add_subcommand("cone", "Test the cone of one map");
      cone->add_option("name", name_)->required();
      cone->add_option("--map", map_, "e.g. [1,3,2,2,2]")->required();
      cone->add_option("--test", test_)
          ->required()
          ->check(CLI::IsMember({"idempotent-generated", "regular"}));
      add_expect(cone);
      cone->callback([this] { run_semigroup_cone(); });
    }

    void add_paper_command(CLI::App& app) {
      auto* paper = app.add_subcommand("paper", "Reproduction suites");
      std::vector<std::string> allowed = suite_names();
      allowed.push_back("all");
      paper->add_option("suites", suites_, "table1 theorem27 theorem11 "
                                           "theorem12 bounds, or all")
          ->required()
          ->check(CLI::IsMember(allowed));
      paper->callback([this] { run_paper(); });
    }

    int exit_code() const { return exit_; }

   private:
    void add_expect(CLI::App* cmd) {
      cmd->add_option("--expect", expect_,
                      "Exit 1 unless the verdict matches")
          ->check(CLI::IsMember({"true", "false"}));
    }

    NamedGroup load() const { return build(name_, cfg_.data_dir); }

    void emit(Json const& doc) {
      std::cout << format_document(doc, cfg_.format == "json");
    }

    void run_group_build() {
      auto ng = load();
      Json doc;
      doc["kind"] = "group-info";
      doc["group"] = group_json(ng);
      Json gens = Json::array();
      for (auto const& x : ng.group.generators()) {
        gens.push_back(to_string(x));
      }
      doc["generators"] = gens;
      doc["transitive"] = is_transitive(ng.group);
      doc["primitive"] = is_primitive(ng.group);
      if (ng.group.degree() <= cfg_.sync_degree_cap) {
        doc["synchronizing"] = is_synchronizing(ng.group, cfg_.sync_degree_cap)
                                   .holds;
      }
      emit(doc);
    }

    void run_group_orbit() {
      auto ng = load();
      std::size_t const n = ng.group.degree();
      Json doc;
      doc["kind"] = "orbit";
      doc["group"] = group_json(ng);
      Json elems = Json::array();
      if (!set_.empty()) {
        auto seed = parse_point_set(set_, n);
        doc["seed"] = to_string(seed);
        auto o = orbit(ng.group, seed);
        for (auto const& x : o.elements()) {
          elems.push_back(to_string(x));
        }
      } else {
        auto seed = parse_partition(partition_);
        if (seed.degree() != n) {
          throw Error("partition covers " + std::to_string(seed.degree())
                      + " points, the group has degree " + std::to_string(n));
        }
        doc["seed"] = to_string(seed);
        auto o = orbit(ng.group, seed);
        for (auto const& x : o.elements()) {
          elems.push_back(to_string(x));
        }
      }
      doc["size"] = elems.size();
      doc["elements"] = elems;
      emit(doc);
    }

    void run_utp_check() {
      auto ng = load();
      auto v = has_utp(ng.group, cfg_.utp());
      Json doc;
      doc["kind"] = "utp-verdict";
      doc["holds"] = v.holds;
      doc["group"] = group_json(ng);
      if (v.witness) {
        doc["witness"] = witness_json(*v.witness);
      }
      doc["subset_orbits"] = v.subset_orbits;
      doc["partition_orbits"] = v.partition_orbits;
      doc["pairs_checked"] = v.pairs_checked;
      doc["largest_size"] = v.largest_size;
      emit(doc);
      exit_ = expectation_exit(expect_, v.holds);
    }

    void run_utp_witness() {
      auto ng = load();
      auto s = parse_point_set(set_, ng.group.degree());
      auto p = parse_partition(partition_);
      bool refutes = verify_witness(ng.group, s, p);
      Json doc;
      doc["kind"] = "witness-check";
      doc["refutes"] = refutes;
      doc["group"] = group_json(ng);
      doc["witness"] = witness_json({s, p});
      emit(doc);
      exit_ = refutes ? kOk : kMismatch;
    }

    void run_utp_affine() {
      auto w = affine_witness(p_, k_);
      auto g = affine_general_linear(k_, p_);
      bool refutes = verify_witness(g, w.set, w.partition);
      Json doc;
      doc["kind"] = "affine-witness";
      doc["refutes"] = refutes;
      doc["group"] = group_json(
          {"AGL(" + std::to_string(k_) + "," + std::to_string(p_) + ")", g});
      doc["witness"] = witness_json({w.set, w.partition});
      doc["construction"] = w.construction;
      emit(doc);
      exit_ = refutes ? kOk : kMismatch;
    }

    void run_semigroup_analyze() {
      auto ng = load();
      AnalysisOptions opts;
      opts.caps = cfg_.caps();
      opts.utp = cfg_.utp();
      opts.idempotent_generation = !skip_idempotent_;
      opts.regularity = !skip_regular_;
      opts.stop_after_failure = stop_after_failure_;
      auto report = analyze_group(ng.name, ng.group, opts);
      emit(to_json(report, cfg_.timing));
      bool refused = report.utp == Outcome::refused
                     || report.idempotent_generated == Outcome::refused
                     || report.regular == Outcome::refused;
      exit_ = refused ? kRefused : kOk;
    }

    void run_semigroup_cone() {
      auto ng = load();
      auto a = parse_transformation(map_);
      ConeVerdict v = test_ == "regular"
                          ? is_regular_cone(ng.group, a, cfg_.caps())
                          : is_idempotent_generated_cone(ng.group, a,
                                                         cfg_.caps());
      Json doc;
      doc["kind"] = "cone-verdict";
      doc["holds"] = v.holds;
      doc["group"] = group_json(ng);
      doc["map"] = to_string(a);
      doc["test"] = test_;
      if (v.witness) {
        doc["witness"] = to_string(*v.witness);
      }
      doc["idempotents"] = v.idempotents;
      doc["states"] = v.states;
      emit(doc);
      exit_ = expectation_exit(expect_, v.holds);
    }

    void run_paper() {
      SuiteOptions opts;
      opts.data_dir = cfg_.data_dir;
      opts.caps = cfg_.caps();
      opts.utp_degree_cap = cfg_.utp_degree_cap;
      opts.workers = cfg_.workers;
      std::vector<std::string> names;
      for (auto const& s : suites_) {
        if (s == "all") {
          names.insert(names.end(), suite_names().begin(),
                       suite_names().end());
        } else {
          names.push_back(s);
        }
      }
      std::vector<SuiteReport> reports;
      for (auto const& s : names) {
        reports.push_back(run_suite(s, opts));
      }
      auto doc = to_json(reports, cfg_.timing);
      emit(doc);
      exit_ = doc["exit_code"].get<int>();
    }

    Config& cfg_;
    int exit_ = kOk;
    std::string name_;
    std::string set_;
    std::string partition_;
    std::string map_;
    std::string test_;
    std::string expect_;
    unsigned p_ = 0;
    unsigned k_ = 0;
    bool skip_idempotent_ = false;
    bool skip_regular_ = false;
    bool stop_after_failure_ = false;
    std::vector<std::string> suites_;
  };

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  auto const positive =
      CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max());
  CLI::App app{"Transversal properties of permutation groups and the "
               "semigroups they generate with one singular map"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_flag("!--no-timing", cfg.timing,
               "Leave wall-clock figures out of reports");
  app.add_option("--closure-cap", cfg.closure_cap,
                 "Largest materialized semigroup")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--bfs-cap", cfg.bfs_cap, "Largest breadth-first search")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--utp-degree-cap", cfg.utp_degree_cap,
                 "Largest degree for the property check (at most 16)")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  app.add_option("--sync-degree-cap", cfg.sync_degree_cap,
                 "Largest degree for the synchronization check")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "Worker threads")
      ->check(positive)
      ->capture_default_str();
  app.add_option("--data-dir", cfg.data_dir,
                 "Directory holding groups/*.grp (default $UTG_DATA_DIR)")
      ->capture_default_str();

  Cli cli(cfg);
  cli.add_group_commands(app);
  cli.add_utp_commands(app);
  cli.add_semigroup_commands(app);
  cli.add_paper_command(app);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (utg::CapExceeded const& e) {
    std::cerr << "utg: refused: " << e.what() << '\n';
    return kRefused;
  } catch (utg::Error const& e) {
    std::cerr << "utg: error: " << e.what() << '\n';
    return kUsage;
  }
  return cli.exit_code();
}
