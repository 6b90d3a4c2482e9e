// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
//
// Criteria 1-5, 7 and 9 read the reproduction suites, the same code the
// `utg paper` command runs. Criteria 6 and 8 recompute the lemma and oracle
// checks against brute force.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "helpers.hpp"
#include "utg/catalog.hpp"
#include "utg/reduction.hpp"
#include "utg/report.hpp"
#include "utg/semigroup.hpp"
#include "utg/utp.hpp"

using namespace utg;

namespace {

  // Wall-clock limits, seconds.
  constexpr double kUtpSuiteLimit = 120.0;
  constexpr double kTable1Limit = 300.0;
  constexpr double kBoundsLimit = 1.0;

  // Sample sizes and seeds for the randomized parts.
  constexpr int kIdempotentSetPairs = 200;
  constexpr int kRandomDegree6Cases = 50;
  constexpr unsigned kSeed = 20240601;

  constexpr std::size_t kWorkers = 4;

  struct Verdict {
    bool pass = true;
    std::string detail;
  };

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
  }

  SuiteOptions suite_options() {
    SuiteOptions o;
    o.workers = kWorkers;
    return o;
  }

  std::string describe(SuiteRow const& row) {
    return (row.group.empty() ? "" : row.group + " ") + row.check
           + ": expected " + row.expected
           + ", observed " + row.observed;
  }

  // Every row accepted by `keep` has status PASS; the first one that does
  // not is reported.
  Verdict rows_pass(SuiteReport const& suite,
                    std::function<bool(SuiteRow const&)> const& keep,
                    std::size_t& kept) {
    Verdict v;
    std::size_t failures = 0;
    kept = 0;
    for (auto const& row : suite.rows) {
      if (!keep(row)) {
        continue;
      }
      ++kept;
      if (row.status != RowStatus::pass) {
        if (failures == 0) {
          v.detail = "first: " + describe(row);
        }
        ++failures;
      }
    }
    v.pass = failures == 0 && kept > 0;
    v.detail = std::to_string(kept - failures) + "/" + std::to_string(kept)
               + " rows pass" + (v.detail.empty() ? "" : "; " + v.detail);
    return v;
  }

  struct Suites {
    SuiteReport table1;
    SuiteReport theorem27;
    SuiteReport theorem11;
    SuiteReport theorem12;
    SuiteReport bounds;
  };

  Verdict criterion1(Suites const& s) {
    std::size_t kept = 0;
    auto v = rows_pass(s.theorem27,
                       [](SuiteRow const& r) {
                         return r.check == "has_utp" && r.expected == "true";
                       },
                       kept);
    // Nine named groups plus A_n, S_n for n = 3..9.
    if (kept != 9 + 14) {
      v.pass = false;
      v.detail += "; expected 23 groups";
    }
    if (s.theorem27.seconds >= kUtpSuiteLimit) {
      v.pass = false;
    }
    v.detail += "; " + std::to_string(s.theorem27.seconds) + " s";
    return v;
  }

  Verdict criterion2(Suites const& s) {
    std::size_t kept = 0;
    auto v = rows_pass(s.theorem27,
                       [](SuiteRow const& r) {
                         return !(r.check == "has_utp" && r.expected == "true");
                       },
                       kept);
    auto c7 = build("C7").group;
    auto verdict = has_utp(c7);
    bool witnessed = !verdict.holds && verdict.witness
                     && verify_witness(c7, verdict.witness->set,
                                       verdict.witness->partition);
    if (!witnessed) {
      v.pass = false;
      v.detail += "; C7 witness not verified";
    }
    return v;
  }

  Verdict criterion3(Suites const& s) {
    Verdict v;
    std::size_t pass = 0;
    std::size_t skipped = 0;
    std::vector<std::string> failing;
    for (auto const& row : s.table1.rows) {
      if (row.status == RowStatus::pass) {
        ++pass;
      } else if (row.status == RowStatus::skipped && is_file_backed(row.group)) {
        ++skipped;
      } else {
        failing.push_back(row.group + " (" + row.observed + ")");
      }
    }
    // Without data files the file-backed rows are skipped, never failed.
    SuiteOptions bare = suite_options();
    bare.data_dir = "/nonexistent/utg-data";
    std::size_t bad_skips = 0;
    for (auto const& row : run_table1(bare).rows) {
      if (is_file_backed(row.group) && row.status != RowStatus::skipped) {
        ++bad_skips;
      }
    }
    v.pass = failing.empty() && bad_skips == 0
             && s.table1.seconds < kTable1Limit;
    v.detail = std::to_string(pass) + " PASS, " + std::to_string(skipped)
               + " SKIPPED, " + std::to_string(failing.size()) + " FAIL";
    if (!failing.empty()) {
      v.detail += " [";
      for (std::size_t i = 0; i < failing.size(); ++i) {
        v.detail += (i ? ", " : "") + failing[i];
      }
      v.detail += "]";
    }
    if (bad_skips) {
      v.detail += "; " + std::to_string(bad_skips)
                  + " file-backed rows not skipped without data";
    }
    v.detail += "; " + std::to_string(s.table1.seconds) + " s";
    return v;
  }

  Verdict criterion4(Suites const& s) {
    std::size_t kept = 0;
    return rows_pass(s.theorem11, [](SuiteRow const&) { return true; }, kept);
  }

  Verdict criterion5(Suites const& s) {
    std::size_t kept = 0;
    auto v = rows_pass(s.theorem12, [](SuiteRow const&) { return true; },
                       kept);
    std::size_t oracle_rows = 0;
    for (auto const& row : s.theorem12.rows) {
      oracle_rows += row.check == "closure oracle agrees" ? 1 : 0;
    }
    if (oracle_rows == 0) {
      v.pass = false;
      v.detail += "; no closure oracle rows";
    }
    return v;
  }

  std::vector<Transformation> sorted(std::vector<Transformation> v) {
    std::sort(v.begin(), v.end());
    return v;
  }

  bool brute_idempotent_generated(std::vector<Transformation> const& cone) {
    auto idem = test::idempotents_in(cone);
    return !idem.empty()
           && test::brute_force_semigroup(idem).size() == cone.size();
  }

  bool brute_regular(std::vector<Transformation> const& cone) {
    for (auto const& b : cone) {
      bool found = false;
      for (auto const& v : cone) {
        if (compose(compose(b, v), b) == b) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  // With kernel p and image s, class i going to the i-th point of s.
  Transformation with_kernel_image(Partition const& p, PointSet const& s) {
    auto pts = s.points();
    std::vector<Point> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = pts[p.label(i)];
    }
    return Transformation(img);
  }

  std::vector<NamedGroup> groups_up_to(std::size_t degree) {
    std::set<std::string> names;
    for (auto const& n : catalog_names()) {
      if (!is_file_backed(n)) {
        names.insert(n);
      }
    }
    for (std::size_t n = 3; n <= degree; ++n) {
      for (auto const& family : {"C", "D", "A", "S"}) {
        names.insert(family + std::to_string(n));
      }
    }
    std::vector<NamedGroup> out;
    for (auto const& n : names) {
      auto g = build(n);
      if (g.group.degree() <= degree) {
        out.push_back(std::move(g));
      }
    }
    return out;
  }

  Verdict criterion6() {
    std::size_t violations = 0;
    std::string first;
    auto note = [&](bool ok, std::string const& what) {
      if (!ok) {
        if (violations == 0) {
          first = what;
        }
        ++violations;
      }
    };

    // S_n and A_n: the cones and conjugate semigroups coincide for every
    // singular map; each distinct cone is regular and idempotent generated.
    std::size_t sym_maps = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
      auto sn = symmetric_group(n);
      auto an = alternating_group(n);
      std::set<std::vector<Transformation>> seen;
      for (auto const& a : test::singular_maps(n)) {
        auto cone_s = sorted(cone_elements(sn, a));
        auto what = "S" + std::to_string(n) + " " + to_string(a);
        note(sorted(cone_elements(an, a)) == cone_s, what + " cone of A_n");
        note(sorted(conjugate_semigroup_elements(sn, a)) == cone_s,
             what + " conjugates of S_n");
        note(sorted(conjugate_semigroup_elements(an, a)) == cone_s,
             what + " conjugates of A_n");
        if (seen.insert(cone_s).second) {
          note(brute_regular(cone_s), what + " regular");
          note(brute_idempotent_generated(cone_s),
               what + " idempotent generated");
        }
        ++sym_maps;
      }
    }

    // Idempotent sets of the cone and of the conjugate semigroup.
    std::mt19937 rng(kSeed);
    auto small = groups_up_to(6);
    std::size_t pairs = 0;
    while (pairs < kIdempotentSetPairs) {
      auto const& g = small[rng() % small.size()];
      auto a = test::random_transformation(g.group.degree(), rng);
      if (a.is_permutation()) {
        continue;
      }
      auto e1 = test::idempotents_in(cone_elements(g.group, a));
      auto e2 = test::idempotents_in(conjugate_semigroup_elements(g.group, a));
      note(e1 == e2, g.name + " " + to_string(a) + " idempotent sets");
      ++pairs;
    }

    // Empty K_G(a) in C7: no idempotent of the rank of a, neither property.
    // The covering set reaches every cone, and whether K_G(a) is empty does
    // not change under a -> g a h.
    auto c7 = build("C7").group;
    std::size_t empty_kg = 0;
    std::vector<Transformation> c7_maps;
    for (std::size_t r = 2; r < 7; ++r) {
      auto f = representatives(c7, r).all();
      c7_maps.insert(c7_maps.end(), f.begin(), f.end());
    }
    for (auto const& a : c7_maps) {
      if (kg_nonempty(c7, a)) {
        continue;
      }
      auto what = "C7 " + to_string(a);
      note(idempotents_of_rank(c7, a).empty(), what + " idempotents");
      note(!is_idempotent_generated_cone(c7, a).holds,
           what + " idempotent generated");
      auto reg = is_regular_cone(c7, a);
      note(!reg.holds && reg.witness == a, what + " regular");
      ++empty_kg;
    }
    note(empty_kg > 0, "C7 has no map with empty K_G(a)");

    // K_G(a) non-empty for every singular a iff the property holds.
    auto catalog = groups_up_to(7);
    for (auto const& g : catalog) {
      std::size_t n = g.group.degree();
      bool all = true;
      for (auto const& p : test::all_partitions(n)) {
        if (p.num_classes() == n) {
          continue;
        }
        for (auto const& s : test::all_subsets(n, p.num_classes())) {
          auto a = with_kernel_image(p, s);
          auto m = kg_member(g.group, a);
          if (m) {
            note(compose(compose(a, *m), a).rank() == a.rank(),
                 g.name + " " + to_string(a) + " K_G member");
          }
          all = all && m.has_value();
        }
      }
      note(all == has_utp(g.group).holds, g.name + " K_G equivalence");
    }

    Verdict v;
    v.pass = violations == 0;
    v.detail = std::to_string(sym_maps) + " S_n/A_n maps, "
               + std::to_string(pairs) + " idempotent-set pairs, "
               + std::to_string(empty_kg) + " C7 maps with empty K_G, "
               + std::to_string(catalog.size()) + " groups for K_G; "
               + std::to_string(violations) + " violations"
               + (first.empty() ? "" : " (first: " + first + ")");
    return v;
  }

  Verdict criterion7(Suites const& s) {
    std::size_t kept = 0;
    auto v = rows_pass(s.bounds, [](SuiteRow const&) { return true; }, kept);
    if (s.bounds.seconds >= kBoundsLimit) {
      v.pass = false;
    }
    v.detail += "; " + std::to_string(s.bounds.seconds) + " s";
    return v;
  }

  Verdict criterion8() {
    std::size_t mismatches = 0;
    std::string first;
    std::size_t exhaustive = 0;
    std::vector<NamedGroup> degree6;
    for (auto const& g : groups_up_to(6)) {
      if (g.group.degree() == 6) {
        degree6.push_back(g);
        continue;
      }
      for (auto const& a : test::singular_maps(g.group.degree())) {
        auto got = sorted(idempotents_of_rank(g.group, a));
        if (got != test::idempotents_in(cone_elements(g.group, a), a.rank())) {
          if (mismatches++ == 0) {
            first = g.name + " " + to_string(a);
          }
        }
        ++exhaustive;
      }
    }
    std::mt19937 rng(kSeed + 1);
    int random_cases = 0;
    while (random_cases < kRandomDegree6Cases) {
      auto const& g = degree6[rng() % degree6.size()];
      auto a = test::random_transformation(6, rng);
      if (a.is_permutation()) {
        continue;
      }
      auto got = sorted(idempotents_of_rank(g.group, a));
      if (got != test::idempotents_in(cone_elements(g.group, a), a.rank())) {
        if (mismatches++ == 0) {
          first = g.name + " " + to_string(a);
        }
      }
      ++random_cases;
    }

    // Every singular a shares its cone with some member of the covering set.
    std::size_t uncovered = 0;
    std::size_t covered_maps = 0;
    for (auto const& g : groups_up_to(5)) {
      std::size_t n = g.group.degree();
      std::vector<std::vector<std::pair<Transformation,
                                        std::unordered_set<Transformation>>>>
          by_rank(n);
      for (std::size_t r = 1; r < n; ++r) {
        for (auto const& b : representatives(g.group, r).all()) {
          auto cone = test::brute_cone(g.group.generators(), b);
          by_rank[r].emplace_back(
              b, std::unordered_set<Transformation>(cone.begin(), cone.end()));
        }
      }
      for (auto const& a : test::singular_maps(n)) {
        auto cone = test::brute_cone(g.group.generators(), a);
        std::unordered_set<Transformation> cone_a(cone.begin(), cone.end());
        bool found = false;
        for (auto const& [b, cone_b] : by_rank[a.rank()]) {
          if (cone_b.contains(a) && cone_a.contains(b)) {
            found = true;
            break;
          }
        }
        if (!found && uncovered++ == 0 && first.empty()) {
          first = g.name + " " + to_string(a) + " uncovered";
        }
        ++covered_maps;
      }
    }

    Verdict v;
    v.pass = mismatches == 0 && uncovered == 0;
    v.detail = std::to_string(exhaustive) + " exhaustive and "
               + std::to_string(random_cases) + " random idempotent checks, "
               + std::to_string(mismatches) + " mismatches; "
               + std::to_string(covered_maps) + " maps for covering, "
               + std::to_string(uncovered) + " uncovered"
               + (first.empty() ? "" : " (first: " + first + ")");
    return v;
  }

  Verdict criterion9(Suites const& s) {
    auto opts = suite_options();
    std::vector<SuiteReport> first{s.table1, s.theorem27, s.theorem11,
                                   s.theorem12};
    std::vector<SuiteReport> second{run_table1(opts), run_theorem27(opts),
                                    run_theorem11(opts), run_theorem12(opts)};
    auto a = to_json(first, false).dump(2);
    auto b = to_json(second, false).dump(2);
    Verdict v;
    v.pass = a == b;
    v.detail = std::to_string(a.size()) + " bytes, "
               + (v.pass ? "identical" : "different");
    return v;
  }

  template <class F>
  bool report(int number, char const* title, F&& check) {
    auto const start = Clock::now();
    Verdict v;
    try {
      v = check();
    } catch (std::exception const& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %d: %s  %s (%s) [%.2f s]\n", number,
                v.pass ? "PASS" : "FAIL", title, v.detail.c_str(),
                seconds_since(start));
    std::fflush(stdout);
    return v.pass;
  }

}  // namespace

int main() {
  auto opts = suite_options();
  Suites s{run_table1(opts), run_theorem27(opts), run_theorem11(opts),
           run_theorem12(opts), run_bounds(opts)};

  bool ok = true;
  ok &= report(1, "listed groups have the property",
               [&] { return criterion1(s); });
  ok &= report(2, "C7 counterexample and worked orbit values",
               [&] { return criterion2(s); });
  ok &= report(3, "tabulated witnesses refute", [&] { return criterion3(s); });
  ok &= report(4, "idempotent generation verdicts",
               [&] { return criterion4(s); });
  ok &= report(5, "regularity verdicts and closure oracle",
               [&] { return criterion5(s); });
  ok &= report(6, "cone, idempotent-set and K_G properties", [] { return criterion6(); });
  ok &= report(7, "counting filter and degree-47 inequalities",
               [&] { return criterion7(s); });
  ok &= report(8, "oracle equivalence and covering soundness",
               [] { return criterion8(); });
  ok &= report(9, "suite reports are deterministic",
               [&] { return criterion9(s); });
  return ok ? 0 : 1;
}
