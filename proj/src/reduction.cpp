#include "utg/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace utg {

  namespace {

    using Clock = std::chrono::steady_clock;

    double seconds_since(Clock::time_point start) {
      return std::chrono::duration<double>(Clock::now() - start).count();
    }

    // Lehmer rank of a permutation of 0..r-1.
    std::size_t permutation_rank(std::vector<Point> const& p) {
      std::size_t out = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < p.size(); ++j) {
          smaller += p[j] < p[i];
        }
        out = out * (p.size() - i) + smaller;
      }
      return out;
    }

    // One permutation pi per orbit of Sym(r) under pi -> h o pi, h in H,
    // lexicographically least first; the identity comes first.
    std::vector<std::vector<Point>> induced_coset_reps(Group const& h,
                                                       std::size_t r,
                                                       std::size_t cap) {
      std::vector<Point> pi(r);
      std::iota(pi.begin(), pi.end(), Point{0});
      std::size_t total = 1;
      for (std::size_t i = 2; i <= r; ++i) {
        total *= i;
        if (total > cap) {
          throw CapExceeded("coset enumeration over " + std::to_string(r)
                            + "! permutations exceeds " + std::to_string(cap));
        }
      }
      if (h.order() == BigInt(total)) {
        return {pi};
      }
      std::vector<std::vector<Point>> reps;
      std::vector<bool> seen(total, false);
      do {
        if (seen[permutation_rank(pi)]) {
          continue;
        }
        reps.push_back(pi);
        std::vector<std::vector<Point>> queue{pi};
        seen[permutation_rank(pi)] = true;
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (auto const& s : h.generators()) {
            std::vector<Point> next(r);
            for (std::size_t t = 0; t < r; ++t) {
              next[t] = s[queue[q][t]];
            }
            auto code = permutation_rank(next);
            if (!seen[code]) {
              seen[code] = true;
              queue.push_back(std::move(next));
            }
          }
        }
      } while (std::next_permutation(pi.begin(), pi.end()));
      return reps;
    }

    Transformation class_map(Partition const& kernel,
                             std::vector<Point> const& image_points,
                             std::vector<Point> const& pi) {
      std::vector<Point> img(kernel.degree());
      for (std::size_t x = 0; x < img.size(); ++x) {
        img[x] = image_points[pi[kernel.label(x)]];
      }
      return Transformation(std::move(img));
    }

    // Runs task(i) for every i < count on up to `workers` threads. A task
    // returning true stops the scan: indices above the least stopping index
    // are skipped, everything below it still runs, so what the caller sees
    // up to that index does not depend on the worker count.
    void scan(std::size_t count, std::size_t workers,
              std::function<bool(std::size_t)> const& task) {
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> stop{count};
      std::mutex error_mutex;
      std::size_t error_index = count;
      std::exception_ptr error;
      auto body = [&] {
        for (;;) {
          auto i = next.fetch_add(1);
          if (i >= count || i > stop.load()) {
            return;
          }
          try {
            if (task(i)) {
              auto cur = stop.load();
              while (i < cur && !stop.compare_exchange_weak(cur, i)) {
              }
            }
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (i < error_index) {
              error_index = i;
              error = std::current_exception();
            }
            auto cur = stop.load();
            while (i < cur && !stop.compare_exchange_weak(cur, i)) {
            }
          }
        }
      };
      workers = std::max<std::size_t>(1, std::min(workers, count));
      if (workers == 1) {
        body();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back(body);
        }
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }

    struct CellResult {
      bool done = false;
      bool refused = false;
      std::string reason;
      // Index of the first failing member, or members.size().
      std::size_t failing = 0;
      std::optional<Transformation> witness;
    };

    PropertyResult merge(RepresentativeSet const& reps,
                         std::vector<CellResult> const& cells) {
      PropertyResult out;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto const& cell = cells[c];
        auto const& members = reps.cells[c].members;
        if (!cell.done) {
          break;  // only after a failure
        }
        if (cell.refused) {
          if (out.outcome == Outcome::holds) {
            out.outcome = Outcome::refused;
            out.reason = cell.reason;
          }
          continue;
        }
        if (cell.failing < members.size()) {
          out.outcome = Outcome::fails;
          out.reason.clear();
          out.checked += cell.failing + 1;
          out.representative = members[cell.failing];
          out.witness = cell.witness;
          return out;
        }
        out.checked += members.size();
      }
      return out;
    }

    PropertyResult scan_idempotent_generation(Group const& g,
                                              RepresentativeSet const& reps,
                                              AnalysisOptions const& options) {
      std::vector<CellResult> results(reps.cells.size());
      scan(reps.cells.size(), options.utp.workers, [&](std::size_t c) {
        auto const& cell = reps.cells[c];
        auto& res = results[c];
        try {
          auto verdicts = is_idempotent_generated_cone(g, cell.base,
                                                       cell.members,
                                                       options.caps);
          res.failing = verdicts.size();
          for (std::size_t i = 0; i < verdicts.size(); ++i) {
            if (!verdicts[i].holds) {
              res.failing = i;
              res.witness = verdicts[i].witness;
              break;
            }
          }
        } catch (CapExceeded const& e) {
          res.refused = true;
          res.reason = e.what();
        }
        res.done = true;
        return !res.refused && res.failing < cell.members.size();
      });
      return merge(reps, results);
    }

    PropertyResult scan_regularity(Group const& g,
                                   RepresentativeSet const& reps,
                                   UtpVerdict const& known,
                                   AnalysisOptions const& options) {
      std::vector<CellResult> results(reps.cells.size());
      scan(reps.cells.size(), options.utp.workers, [&](std::size_t c) {
        auto const& cell = reps.cells[c];
        auto& res = results[c];
        res.failing = cell.members.size();
        try {
          for (std::size_t i = 0; i < cell.members.size(); ++i) {
            auto v = is_regular_cone(g, cell.members[i], known, options.caps);
            if (!v.holds) {
              res.failing = i;
              res.witness = v.witness;
              break;
            }
          }
        } catch (CapExceeded const& e) {
          res.refused = true;
          res.reason = e.what();
        }
        res.done = true;
        return !res.refused && res.failing < cell.members.size();
      });
      return merge(reps, results);
    }

    Outcome aggregate(std::vector<RankReport> const& ranks,
                      std::optional<PropertyResult> RankReport::*field) {
      Outcome out = Outcome::holds;
      for (auto const& r : ranks) {
        auto const& p = r.*field;
        if (!p) {
          continue;
        }
        if (p->outcome == Outcome::fails) {
          return Outcome::fails;
        }
        if (p->outcome == Outcome::refused) {
          out = Outcome::refused;
        }
      }
      return out;
    }

    PropertyResult refusal(std::string reason) {
      PropertyResult p;
      p.outcome = Outcome::refused;
      p.reason = std::move(reason);
      return p;
    }

  }  // namespace

  std::size_t RepresentativeSet::size() const {
    std::size_t out = 0;
    for (auto const& c : cells) {
      out += c.members.size();
    }
    return out;
  }

  std::vector<Transformation> RepresentativeSet::all() const {
    std::vector<Transformation> out;
    for (auto const& c : cells) {
      out.insert(out.end(), c.members.begin(), c.members.end());
    }
    return out;
  }

  RepresentativeSet representatives(Group const& g, std::size_t rank,
                                    std::size_t cap) {
    std::size_t const n = g.degree();
    if (rank < 1 || rank >= n) {
      throw Error("rank must lie in 1.." + std::to_string(n - 1) + ", got "
                  + std::to_string(rank));
    }
    RepresentativeSet out;
    out.degree = n;
    out.rank = rank;
    for (auto const& orbit : detail::subset_orbits(g, rank)) {
      out.images.emplace_back(n, orbit.front());
    }
    out.kernels = detail::partition_orbit_reps(g, rank);
    std::size_t total = 0;
    for (std::size_t j = 0; j < out.images.size(); ++j) {
      auto induced = induced_action(g, out.images[j]);
      auto pis = induced_coset_reps(induced, rank, cap);
      out.coset_counts.push_back(pis.size());
      total += pis.size() * out.kernels.size();
      if (total > cap) {
        throw CapExceeded("more than " + std::to_string(cap)
                          + " representatives of rank "
                          + std::to_string(rank));
      }
      auto pts = out.images[j].points();
      for (std::size_t k = 0; k < out.kernels.size(); ++k) {
        RepresentativeCell cell;
        cell.image = j;
        cell.kernel = k;
        for (auto const& pi : pis) {
          cell.members.push_back(class_map(out.kernels[k], pts, pi));
        }
        cell.base = cell.members.front();
        out.cells.push_back(std::move(cell));
      }
    }
    return out;
  }

  char const* to_string(Outcome o) {
    switch (o) {
      case Outcome::holds:
        return "holds";
      case Outcome::fails:
        return "fails";
      case Outcome::refused:
        return "refused";
    }
    return "?";
  }

  GroupReport analyze_group(std::string const& name, Group const& g,
                            AnalysisOptions const& options) {
    auto const start = Clock::now();
    GroupReport report;
    report.name = name;
    report.degree = g.degree();
    report.order = g.order();

    std::optional<UtpVerdict> utp;
    try {
      utp = has_utp(g, options.utp);
      report.utp = utp->holds ? Outcome::holds : Outcome::fails;
      report.utp_witness = utp->witness;
    } catch (CapExceeded const& e) {
      report.utp = Outcome::refused;
      report.utp_reason = e.what();
    }

    std::size_t const n = g.degree();
    bool idempotent_open = options.idempotent_generation;
    bool regular_open = options.regularity;
    for (std::size_t i = 1; i < n && (idempotent_open || regular_open); ++i) {
      RankReport rr;
      rr.rank = i;
      auto refuse_all = [&](std::string const& reason) {
        rr.reason = reason;
        if (idempotent_open) {
          rr.idempotent_generated = refusal(reason);
        }
        if (regular_open) {
          rr.regular = refusal(reason);
        }
      };
      if (n > 16) {
        refuse_all("semigroup computations are limited to degree 16");
        report.ranks.push_back(std::move(rr));
        continue;
      }
      std::optional<RepresentativeSet> reps;
      try {
        reps = representatives(g, i, options.representative_cap);
      } catch (CapExceeded const& e) {
        refuse_all(e.what());
        report.ranks.push_back(std::move(rr));
        continue;
      }
      rr.image_orbits = reps->images.size();
      rr.kernel_orbits = reps->kernels.size();
      rr.representatives = reps->size();
      if (idempotent_open) {
        rr.idempotent_generated = scan_idempotent_generation(g, *reps,
                                                             options);
        idempotent_open = !options.stop_after_failure
                          || rr.idempotent_generated->outcome != Outcome::fails;
      }
      if (regular_open) {
        std::optional<UtpVerdict> known;
        if (utp && (!utp->holds || utp->largest_size >= std::min(i, n - 1))) {
          known = utp;
        } else {
          try {
            UtpOptions limited = options.utp;
            limited.degree_cap = 16;
            limited.max_size = i;
            known = has_utp(g, limited);
          } catch (CapExceeded const& e) {
            rr.regular = refusal(e.what());
          }
        }
        if (known) {
          rr.regular = scan_regularity(g, *reps, *known, options);
        }
        regular_open = !options.stop_after_failure
                       || rr.regular->outcome != Outcome::fails;
      }
      report.ranks.push_back(std::move(rr));
    }
    if (options.idempotent_generation) {
      report.idempotent_generated = aggregate(report.ranks,
                                              &RankReport::idempotent_generated);
    }
    if (options.regularity) {
      report.regular = aggregate(report.ranks, &RankReport::regular);
    }
    report.seconds = seconds_since(start);
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suites
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(RowStatus s) {
    switch (s) {
      case RowStatus::pass:
        return "PASS";
      case RowStatus::fail:
        return "FAIL";
      case RowStatus::skipped:
        return "SKIPPED";
      case RowStatus::refused:
        return "REFUSED";
    }
    return "?";
  }

  std::size_t SuiteReport::count(RowStatus s) const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [s](auto const& r) { return r.status == s; }));
  }

  int SuiteReport::exit_code() const {
    if (count(RowStatus::fail) != 0) {
      return 1;
    }
    return count(RowStatus::refused) != 0 ? 3 : 0;
  }

  namespace {

    char const* yes_no(bool b) { return b ? "true" : "false"; }

    // Runs `body` for one row: timing, and errors turned into a row status.
    // Missing data files make a row SKIPPED, cap refusals REFUSED.
    template <typename Body>
    SuiteRow make_row(std::string group, std::string check,
                      std::string expected, Body&& body) {
      SuiteRow row;
      row.group = std::move(group);
      row.check = std::move(check);
      row.expected = std::move(expected);
      auto const start = Clock::now();
      try {
        body(row);
        if (row.status == RowStatus::pass && row.observed != row.expected) {
          row.status = RowStatus::fail;
        }
      } catch (CapExceeded const& e) {
        row.status = RowStatus::refused;
        row.observed = "refused";
        row.details.emplace_back("reason", e.what());
      } catch (Error const& e) {
        if (is_file_backed(row.group)) {
          row.status = RowStatus::skipped;
          row.observed = "skipped";
        } else {
          row.status = RowStatus::fail;
          row.observed = "error";
        }
        row.details.emplace_back("reason", e.what());
      }
      row.seconds = seconds_since(start);
      return row;
    }

    SuiteReport finish(std::string name, std::vector<SuiteRow> rows,
                       Clock::time_point start) {
      SuiteReport out;
      out.suite = std::move(name);
      out.rows = std::move(rows);
      out.seconds = seconds_since(start);
      return out;
    }

    struct Table1Row {
      char const* group;
      char const* set;
      char const* partition;
    };

    // Witness pairs in the library labelling.
    std::vector<Table1Row> const& table1_rows() {
      static char const* const ten_set = "{1,2,3,5,6}";
      static char const* const ten_part = "{{1},{2},{3},{4},{5},{6,7,8,9,10}}";
      static char const* const twelve_part
          = "{{1},{2},{3},{4},{5},{6,7,8,9,10,11,12}}";
      static char const* const thirteen_part
          = "{{1},{2},{3},{4},{5},{6},{7,8,9,10,11,12,13}}";
      static char const* const fourteen_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8,9,10,11,12,13,14}}";
      static char const* const fifteen_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8,9,10,11,12,13,14,15}}";
      static char const* const seventeen_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8},{9,10,11,12,13,14,15,16,17}}";
      static char const* const eighteen_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8},{9},"
            "{10,11,12,13,14,15,16,17,18}}";
      static char const* const twentyone_set = "{1,2,3,4,5,6,7,8,9,11,13}";
      static char const* const twentyone_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8},{9},{10},"
            "{11,12,13,14,15,16,17,18,19,20,21}}";
      static char const* const twentytwo_set = "{1,2,3,4,5,6,7,8,9,10,12,15}";
      static char const* const twentytwo_part
          = "{{1},{2},{3},{4},{5},{6},{7},{8},{9},{10},{11},"
            "{12,13,14,15,16,17,18,19,20,21,22}}";
      static std::vector<Table1Row> const rows{
          {"PSL(3,2)", "{1,2,4}", "{{1},{2,3,4,7},{5,6}}"},
          {"7:3", "{1,2,4,7}", "{{1},{2},{3},{4,5,6,7}}"},
          {"D7", "{1,3,7}", "{{1},{2},{3,4,5,6,7}}"},
          {"PSL(2,7)", "{1,2,3,5}", "{{1},{2},{3,4,5,7},{6,8}}"},
          {"A5@10", ten_set, ten_part},
          {"S5@10", ten_set, ten_part},
          {"PSL(2,9)", ten_set, ten_part},
          {"PGL(2,9)", ten_set, ten_part},
          {"S6@10", ten_set, ten_part},
          {"M10", ten_set, ten_part},
          {"PGammaL(2,9)", ten_set, ten_part},
          {"PSL(2,11)@11", "{1,2,3,5}", "{{1},{2},{3,4,5,6,7,8,10,11},{9}}"},
          {"M11@11", "{1,2,3,4,6}", "{{1},{2},{3},{4,5,6,7,10,11},{8,9}}"},
          {"M12", "{1,2,3,4,5,6}", "{{1,2,3,4,5,6},{7,8},{9},{10},{11},{12}}"},
          {"M11@12", "{1,2,3,4,11,12}", twelve_part},
          {"PGL(2,11)", "{1,2,3,4,6,7}", twelve_part},
          {"PSL(2,11)", "{1,2,3,4,6,7}", twelve_part},
          {"PSL(3,3)", "{1,2,3,4,5,7,8}", thirteen_part},
          {"PGL(2,13)", "{1,2,3,4,5,6,9,12}", fourteen_part},
          {"PSL(2,13)", "{1,2,3,4,5,6,9,12}", fourteen_part},
          {"PSL(4,2)", "{1,2,3,4,5,6,8,12}", fifteen_part},
          {"A7@15", "{1,2,3,4,5,6,8,12}", fifteen_part},
          {"PSL(2,16)", "{1,2,3,4,5,6,7,11,14}", seventeen_part},
          {"PSL(2,16):4", "{1,2,3,4,5,6,7,11,14}", seventeen_part},
          {"PSL(2,16):2", "{8,9,10,11,12,13,14,16,17}", seventeen_part},
          {"PGL(2,17)", "{1,2,3,4,5,6,7,8,10,11}", eighteen_part},
          {"PSigmaL(3,4)", twentyone_set, twentyone_part},
          {"PGL(3,4)", twentyone_set, twentyone_part},
          {"PGammaL(3,4)", twentyone_set, twentyone_part},
          {"M22", twentytwo_set, twentytwo_part},
          {"M22:2", twentytwo_set, twentytwo_part},
          {"M23", "{1,2,3,4,5,8,11}",
           "{{1},{2},{3},{4},{5},{6},"
           "{7,8,9,10,11,12,13,14,15,16,17,18,19,20,21,22,23}}"},
      };
      return rows;
    }

    // The groups shown to have the property, by name and builder.
    std::vector<NamedGroup> utp_groups(std::filesystem::path const& dir,
                                       bool with_alternating_symmetric) {
      std::vector<NamedGroup> out;
      for (char const* name : {"C5", "D5", "AGL(1,5)", "PSL(2,5)", "PGL(2,5)",
                               "AGL(1,7)", "PGL(2,7)", "PSL(2,8)",
                               "PGammaL(2,8)"}) {
        out.push_back(build(name, dir));
      }
      if (with_alternating_symmetric) {
        for (std::size_t n = 3; n <= 9; ++n) {
          out.push_back({"A" + std::to_string(n), alternating_group(n)});
          out.push_back({"S" + std::to_string(n), symmetric_group(n)});
        }
      }
      return out;
    }

    std::string orbit_listing(std::vector<PointSet> sets) {
      std::string out;
      for (auto const& s : sets) {
        out += (out.empty() ? "" : ",") + to_string(s);
      }
      return out;
    }

    // Orbit of `seed` as a sorted listing, so that it compares with a
    // listing written in any order.
    std::string sorted_orbit(Group const& g, PointSet const& seed) {
      auto elems = orbit(g, seed).elements();
      std::sort(elems.begin(), elems.end(),
                [](PointSet const& x, PointSet const& y) {
                  return x.points() < y.points();
                });
      return orbit_listing(elems);
    }

    std::string sorted_listing(std::size_t n,
                               std::vector<char const*> const& sets) {
      std::vector<PointSet> elems;
      for (auto s : sets) {
        elems.push_back(parse_point_set(s, n));
      }
      std::sort(elems.begin(), elems.end(),
                [](PointSet const& x, PointSet const& y) {
                  return x.points() < y.points();
                });
      return orbit_listing(elems);
    }

    void add_witness(SuiteRow& row, std::optional<TransversalWitness> const& w) {
      if (w) {
        row.details.emplace_back("set", to_string(w->set));
        row.details.emplace_back("partition", to_string(w->partition));
      }
    }

    std::string outcome_word(Outcome o) {
      switch (o) {
        case Outcome::holds:
          return "true";
        case Outcome::fails:
          return "false";
        case Outcome::refused:
          return "refused";
      }
      return "?";
    }

    // Row for a whole-group property over every rank; failures carry the
    // rank, representative and engine witness.
    void record_property(SuiteRow& row, GroupReport const& report,
                         std::optional<PropertyResult> RankReport::*field,
                         Outcome overall) {
      row.observed = outcome_word(overall);
      std::size_t checked = 0;
      for (auto const& rr : report.ranks) {
        auto const& p = rr.*field;
        if (!p) {
          continue;
        }
        checked += p->checked;
        if (p->outcome == Outcome::fails) {
          row.details.emplace_back("rank", std::to_string(rr.rank));
          row.details.emplace_back("representative",
                                   to_string(*p->representative));
          row.details.emplace_back("witness", to_string(*p->witness));
          break;
        }
        if (p->outcome == Outcome::refused) {
          row.details.emplace_back("rank " + std::to_string(rr.rank),
                                   p->reason);
        }
      }
      row.details.emplace_back("representatives checked",
                               std::to_string(checked));
      if (overall == Outcome::refused) {
        row.status = RowStatus::refused;
      }
    }

    AnalysisOptions analysis_options(SuiteOptions const& options,
                                     bool idempotent, bool regular) {
      AnalysisOptions out;
      out.caps = options.caps;
      out.utp.degree_cap = options.utp_degree_cap;
      out.utp.workers = options.workers;
      out.idempotent_generation = idempotent;
      out.regularity = regular;
      out.stop_after_failure = true;
      return out;
    }

  }  // namespace

  SuiteReport run_table1(SuiteOptions const& options) {
    auto const start = Clock::now();
    std::vector<SuiteRow> rows;
    for (auto const& t : table1_rows()) {
      rows.push_back(make_row(t.group, "witness refutes", "true",
                              [&](SuiteRow& row) {
        row.details.emplace_back("set", t.set);
        row.details.emplace_back("partition", t.partition);
        auto g = build_library_labelled(t.group, options.data_dir).group;
        row.degree = g.degree();
        auto set = parse_point_set(t.set, g.degree());
        auto partition = parse_partition(t.partition);
        if (set.size() == partition.num_classes()) {
          row.observed = yes_no(verify_witness(g, set, partition));
          return;
        }
        // The pair as given cannot refute anything. Record that, and what
        // the checker finds for the group instead.
        row.observed = "malformed";
        row.details.emplace_back(
            "reason", "set has " + std::to_string(set.size())
                          + " points but the partition has "
                          + std::to_string(partition.num_classes())
                          + " classes");
        if (g.degree() <= options.utp_degree_cap) {
          UtpOptions utp;
          utp.degree_cap = options.utp_degree_cap;
          auto v = has_utp(g, utp);
          if (v.witness
              && verify_witness(g, v.witness->set, v.witness->partition)) {
            row.details.emplace_back("computed set", to_string(v.witness->set));
            row.details.emplace_back("computed partition",
                                     to_string(v.witness->partition));
          }
        }
      }));
    }
    return finish("table1", std::move(rows), start);
  }

  SuiteReport run_theorem27(SuiteOptions const& options) {
    auto const start = Clock::now();
    std::vector<SuiteRow> rows;
    UtpOptions utp;
    utp.degree_cap = options.utp_degree_cap;
    utp.workers = options.workers;
    for (auto& ng : utp_groups(options.data_dir, true)) {
      rows.push_back(make_row(ng.name, "has_utp", "true", [&](SuiteRow& row) {
        row.degree = ng.group.degree();
        auto v = has_utp(ng.group, utp);
        row.observed = yes_no(v.holds);
        row.details.emplace_back("pairs checked",
                                 std::to_string(v.pairs_checked));
        add_witness(row, v.witness);
      }));
    }

    // The two worked examples.
    auto c5 = build("C5", options.data_dir).group;
    rows.push_back(make_row("C5", "orbit of {1,2}",
                            sorted_listing(5, {"{1,2}", "{2,3}", "{3,4}",
                                               "{4,5}", "{1,5}"}),
                            [&](SuiteRow& row) {
      row.degree = 5;
      row.observed = sorted_orbit(c5, parse_point_set("{1,2}", 5));
    }));
    rows.push_back(make_row("C5", "orbit of {1,3}",
                            sorted_listing(5, {"{1,3}", "{2,4}", "{3,5}",
                                               "{1,4}", "{2,5}"}),
                            [&](SuiteRow& row) {
      row.degree = 5;
      row.observed = sorted_orbit(c5, parse_point_set("{1,3}", 5));
    }));
    rows.push_back(make_row("C5", "3-subset orbit representatives",
                            "{1,2,3},{1,2,4}", [&](SuiteRow& row) {
      row.degree = 5;
      std::vector<PointSet> reps;
      for (auto const& o : detail::subset_orbits(c5, 3)) {
        reps.emplace_back(5, o.front());
      }
      row.observed = orbit_listing(reps);
    }));

    auto c7 = cyclic_group(7);
    rows.push_back(make_row("C7", "orbit of {1,2,3}",
                            sorted_listing(7, {"{1,2,3}", "{2,3,4}", "{3,4,5}",
                                               "{4,5,6}", "{5,6,7}", "{1,6,7}",
                                               "{1,2,7}"}),
                            [&](SuiteRow& row) {
      row.degree = 7;
      row.observed = sorted_orbit(c7, parse_point_set("{1,2,3}", 7));
    }));
    rows.push_back(make_row("C7", "example pair refutes", "true",
                            [&](SuiteRow& row) {
      row.degree = 7;
      char const* set = "{1,2,3}";
      char const* partition = "{{1},{2,3,4,6,7},{5}}";
      row.details.emplace_back("set", set);
      row.details.emplace_back("partition", partition);
      row.observed = yes_no(verify_witness(c7, parse_point_set(set, 7),
                                           parse_partition(partition)));
    }));
    rows.push_back(make_row("C7", "has_utp", "false", [&](SuiteRow& row) {
      row.degree = 7;
      auto v = has_utp(c7, utp);
      row.observed = yes_no(v.holds);
      add_witness(row, v.witness);
      if (v.witness && !verify_witness(c7, v.witness->set,
                                       v.witness->partition)) {
        row.status = RowStatus::fail;
        row.details.emplace_back("reason", "witness does not verify");
      }
    }));
    return finish("theorem27", std::move(rows), start);
  }

  SuiteReport run_theorem11(SuiteOptions const& options) {
    auto const start = Clock::now();
    std::vector<SuiteRow> rows;
    auto const opts = analysis_options(options, true, false);
    struct Expectation {
      char const* group;
      bool idempotent_generated;
    };
    static std::vector<Expectation> const expectations{
        {"AGL(1,5)", true},  {"PSL(2,5)", true},     {"PGL(2,5)", true},
        {"S5", true},        {"A5", true},           {"C5", false},
        {"D5", false},       {"AGL(1,7)", false},    {"PGL(2,7)", false},
        {"PSL(2,8)", false}, {"PGammaL(2,8)", false}};
    for (auto const& e : expectations) {
      rows.push_back(make_row(e.group, "all cones idempotent generated",
                              yes_no(e.idempotent_generated),
                              [&](SuiteRow& row) {
        auto ng = build(e.group, options.data_dir);
        row.degree = ng.group.degree();
        auto report = analyze_group(ng.name, ng.group, opts);
        record_property(row, report, &RankReport::idempotent_generated,
                        *report.idempotent_generated);
      }));
    }

    // Maps quoted as counterexamples, in the library labelling.
    struct Literal {
      char const* group;
      char const* map;
    };
    static std::vector<Literal> const literals{
        {"C5", "[1,3,2,2,2]"},
        {"D5", "[1,2,3,3,3]"},
        {"AGL(1,7)", "[1,2,3,3,3,3,3]"},
        {"PGL(2,7)", "[6,2,3,4,6,6,6,6]"},
        {"PSL(2,8)", "[1,2,3,5,4,5,4,4,5]"},
        {"PGammaL(2,8)", "[1,2,3,5,4,5,4,4,5]"}};
    for (auto const& l : literals) {
      rows.push_back(make_row(l.group, "quoted map: cone idempotent generated",
                              "false", [&](SuiteRow& row) {
        auto g = build_library_labelled(l.group, options.data_dir).group;
        row.degree = g.degree();
        auto a = parse_transformation(l.map);
        row.details.emplace_back("map", to_string(a));
        auto v = is_idempotent_generated_cone(g, a, options.caps);
        row.observed = yes_no(v.holds);
        if (v.witness) {
          row.details.emplace_back("witness", to_string(*v.witness));
        }
      }));
    }
    return finish("theorem11", std::move(rows), start);
  }

  SuiteReport run_theorem12(SuiteOptions const& options) {
    auto const start = Clock::now();
    std::vector<SuiteRow> rows;
    auto const opts = analysis_options(options, false, true);
    auto groups = utp_groups(options.data_dir, true);
    for (auto& ng : groups) {
      rows.push_back(make_row(ng.name, "all cones regular", "true",
                              [&](SuiteRow& row) {
        row.degree = ng.group.degree();
        auto report = analyze_group(ng.name, ng.group, opts);
        record_property(row, report, &RankReport::regular, *report.regular);
      }));
    }
    // Materialized cones against the same verdicts.
    for (auto& ng : groups) {
      if (ng.group.degree() > 6) {
        continue;
      }
      rows.push_back(make_row(ng.name, "closure oracle agrees", "true",
                              [&](SuiteRow& row) {
        row.degree = ng.group.degree();
        std::size_t disagreements = 0;
        std::size_t checked = 0;
        for (std::size_t i = 1; i < ng.group.degree(); ++i) {
          for (auto const& b : representatives(ng.group, i).all()) {
            bool fast = is_regular_cone(ng.group, b, options.caps).holds;
            bool brute = regular_cone_by_closure(ng.group, b,
                                                 options.caps.closure);
            ++checked;
            if (fast != brute) {
              if (disagreements++ == 0) {
                row.details.emplace_back("first disagreement", to_string(b));
              }
            }
          }
        }
        row.details.emplace_back("representatives checked",
                                 std::to_string(checked));
        row.observed = yes_no(disagreements == 0);
      }));
    }
    auto c7 = NamedGroup{"C7", cyclic_group(7)};
    rows.push_back(make_row("C7", "all cones regular", "false",
                            [&](SuiteRow& row) {
      row.degree = 7;
      auto report = analyze_group(c7.name, c7.group, opts);
      record_property(row, report, &RankReport::regular, *report.regular);
    }));
    return finish("theorem12", std::move(rows), start);
  }

  SuiteReport run_bounds(SuiteOptions const& options) {
    auto const start = Clock::now();
    std::vector<SuiteRow> rows;
    rows.push_back(make_row("C7", "counting bound: first failing r", "3",
                            [&](SuiteRow& row) {
      row.degree = 7;
      auto r = singular_bound_failure(7, BigInt(7));
      row.observed = r ? std::to_string(*r) : "none";
      row.details.emplace_back("|G|(r+1)", "28");
      row.details.emplace_back("C(n,r)", "35");
    }));
    for (auto& ng : utp_groups(options.data_dir, true)) {
      rows.push_back(make_row(ng.name, "counting bound: first failing r",
                              "none", [&](SuiteRow& row) {
        row.degree = ng.group.degree();
        auto r = singular_bound_failure(ng.group.degree(), ng.group.order());
        row.observed = r ? std::to_string(*r) : "none";
      }));
    }
    for (auto& ng : utp_groups(options.data_dir, false)) {
      rows.push_back(make_row(ng.name, "order below 50 n^sqrt(n)", "true",
                              [&](SuiteRow& row) {
        row.degree = ng.group.degree();
        row.observed = yes_no(maroti_gate(ng.group.degree(), ng.group.order()));
      }));
    }
    auto report = degree47_inequalities();
    auto add = [&](InequalityRow const& r, char const* family) {
      rows.push_back(make_row("", std::string(family) + " inequality at r="
                                       + std::to_string(r.r),
                              "true", [&](SuiteRow& row) {
        row.degree = r.n;
        row.observed = yes_no(r.holds);
      }));
    };
    for (auto const& r : report.even) {
      add(r, "even");
    }
    for (auto const& r : report.odd) {
      add(r, "odd");
    }
    rows.push_back(make_row("", "growth step at r=46", "true",
                            [&](SuiteRow& row) {
      row.degree = 94;
      row.observed = yes_no(report.step_at_46);
    }));
    return finish("bounds", std::move(rows), start);
  }

  std::vector<std::string> const& suite_names() {
    static std::vector<std::string> const names{"table1", "theorem27",
                                                "theorem11", "theorem12",
                                                "bounds"};
    return names;
  }

  SuiteReport run_suite(std::string const& name, SuiteOptions const& options) {
    if (name == "table1") {
      return run_table1(options);
    }
    if (name == "theorem27") {
      return run_theorem27(options);
    }
    if (name == "theorem11") {
      return run_theorem11(options);
    }
    if (name == "theorem12") {
      return run_theorem12(options);
    }
    if (name == "bounds") {
      return run_bounds(options);
    }
    throw Error("unknown suite '" + name + "'");
  }

}  // namespace utg
