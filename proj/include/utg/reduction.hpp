// Covering sets of singular maps and whole-group analyses.
//
// Every a of rank i can be written g f s u h with g, h in G, f = f_{j,k} the
// base map with kernel K_k and image I_j, s a coset representative of the
// induced group H = (G_{I_j})^{I_j} in Sym(I_j) and u in G_{I_j}. Then
// <G,a> = <G, f s>, so the maps f s cover every cone up to equality. The
// base map sends the class with the t-th least element to the t-th smallest
// point of I_j.

#ifndef UTG_REDUCTION_HPP_
#define UTG_REDUCTION_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "utg/bigint.hpp"
#include "utg/catalog.hpp"
#include "utg/group.hpp"
#include "utg/semigroup.hpp"
#include "utg/utp.hpp"

namespace utg {

  struct RepresentativeCell {
    std::size_t image = 0;   // index into RepresentativeSet::images
    std::size_t kernel = 0;  // index into RepresentativeSet::kernels
    Transformation base;
    // base * s for every coset representative s, base first.
    std::vector<Transformation> members;
  };

  struct RepresentativeSet {
    std::size_t degree = 0;
    std::size_t rank = 0;
    std::vector<PointSet> images;
    std::vector<Partition> kernels;
    // |Sym(I_j) : (G_{I_j})^{I_j}| per image.
    std::vector<std::size_t> coset_counts;
    // Image-major, then kernel.
    std::vector<RepresentativeCell> cells;

    std::size_t size() const;
    std::vector<Transformation> all() const;
  };

  // Throws Error unless 1 <= rank < degree, CapExceeded when the number of
  // maps or the permutations of one image exceed cap.
  RepresentativeSet representatives(Group const& g, std::size_t rank,
                                    std::size_t cap = 5'000'000);

  enum class Outcome { holds, fails, refused };
  char const* to_string(Outcome o);

  struct PropertyResult {
    Outcome outcome = Outcome::holds;
    std::size_t checked = 0;  // representatives decided
    // On failure: the first failing representative and the witness the
    // engine returned for it.
    std::optional<Transformation> representative;
    std::optional<Transformation> witness;
    std::string reason;  // on refusal
  };

  struct RankReport {
    std::size_t rank = 0;
    std::size_t image_orbits = 0;
    std::size_t kernel_orbits = 0;
    std::size_t representatives = 0;
    // nullopt when not examined.
    std::optional<PropertyResult> idempotent_generated;
    std::optional<PropertyResult> regular;
    std::string reason;  // set when the representatives could not be built
  };

  struct GroupReport {
    std::string name;
    std::size_t degree = 0;
    BigInt order;
    Outcome utp = Outcome::holds;
    std::optional<TransversalWitness> utp_witness;
    std::string utp_reason;
    std::vector<RankReport> ranks;
    // Aggregates over all ranks; nullopt when the property was not asked for.
    std::optional<Outcome> idempotent_generated;
    std::optional<Outcome> regular;
    double seconds = 0;
  };

  struct AnalysisOptions {
    SemigroupCaps caps;
    UtpOptions utp;
    bool idempotent_generation = true;
    bool regularity = true;
    std::size_t representative_cap = 5'000'000;
    // Once a property fails at some rank, leave it unexamined (nullopt) at
    // the higher ranks, and stop listing ranks when nothing is left to
    // examine. The aggregate verdicts are unchanged.
    bool stop_after_failure = false;
  };

  // UTP check, then for every rank the covering set and both cone
  // properties. Within a rank the scan stops at the first failing
  // representative in cell order. Refusals are recorded per rank and
  // property and never stop the other ranks. Cells run on
  // options.utp.workers threads; results do not depend on the count.
  GroupReport analyze_group(std::string const& name, Group const& g,
                            AnalysisOptions const& options = {});

  // Reproduction suites. Each row compares one computed verdict with the
  // expected one.
  enum class RowStatus { pass, fail, skipped, refused };
  char const* to_string(RowStatus s);

  struct SuiteRow {
    std::string group;
    std::size_t degree = 0;
    std::string check;
    std::string expected;
    std::string observed;
    RowStatus status = RowStatus::pass;
    // Witness and input data, in display order.
    std::vector<std::pair<std::string, std::string>> details;
    double seconds = 0;
  };

  struct SuiteReport {
    std::string suite;
    std::vector<SuiteRow> rows;
    double seconds = 0;

    std::size_t count(RowStatus s) const;
    // 0 when nothing failed or was refused, 1 on a failure, else 3.
    int exit_code() const;
  };

  struct SuiteOptions {
    std::filesystem::path data_dir = default_data_dir();
    SemigroupCaps caps;
    std::size_t utp_degree_cap = 12;
    std::size_t workers = 1;
  };

  SuiteReport run_table1(SuiteOptions const& options);
  SuiteReport run_theorem27(SuiteOptions const& options);
  SuiteReport run_theorem11(SuiteOptions const& options);
  SuiteReport run_theorem12(SuiteOptions const& options);
  SuiteReport run_bounds(SuiteOptions const& options);

  // Suite names accepted by run_suite, in their canonical order.
  std::vector<std::string> const& suite_names();
  // Throws Error for an unknown name.
  SuiteReport run_suite(std::string const& name, SuiteOptions const& options);

}  // namespace utg

#endif  // UTG_REDUCTION_HPP_
