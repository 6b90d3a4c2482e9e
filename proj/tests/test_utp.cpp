#include <cmath>
#include <cstdio>
#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "helpers.hpp"
#include "utg/catalog.hpp"
#include "utg/utp.hpp"

using namespace utg;

namespace {

  // Direct reading of the definition over all group elements.
  bool brute_utp(Group const& g) {
    auto elems = test::brute_force_group(g.degree(), g.generators());
    std::size_t n = g.degree();
    for (std::size_t k = 1; k <= n; ++k) {
      auto subsets = test::all_subsets(n, k);
      for (auto const& p : test::all_partitions(n)) {
        if (p.num_classes() != k) {
          continue;
        }
        for (auto const& s : subsets) {
          bool found = false;
          for (auto const& x : elems) {
            if (is_transversal(move_set(s, x), p)) {
              found = true;
              break;
            }
          }
          if (!found) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool brute_refutes(Group const& g, PointSet const& s, Partition const& p) {
    for (auto const& x : test::brute_force_group(g.degree(), g.generators())) {
      if (is_transversal(move_set(s, x), p)) {
        return false;
      }
    }
    return true;
  }

  // A transformation with kernel p and image s (class i goes to the i-th
  // point of s).
  Transformation with_kernel_image(Partition const& p, PointSet const& s) {
    auto pts = s.points();
    std::vector<Point> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = pts[p.label(i)];
    }
    return Transformation(img);
  }

  std::vector<std::string> const theorem27_groups{
      "C5",       "D5",       "AGL(1,5)", "PSL(2,5)",    "PGL(2,5)",
      "AGL(1,7)", "PGL(2,7)", "PSL(2,8)", "PGammaL(2,8)"};

}  // namespace

TEST_CASE("worked examples", "[utp]") {
  auto c5 = build("C5").group;
  auto v5 = has_utp(c5);
  CHECK(v5.holds);
  CHECK_FALSE(v5.witness);

  auto c7 = build("C7").group;
  auto v7 = has_utp(c7);
  REQUIRE_FALSE(v7.holds);
  REQUIRE(v7.witness);
  // Least partition representative first; no translate of {1,3,5} holds two
  // consecutive points.
  CHECK(to_string(v7.witness->set) == "{1,3,5}");
  CHECK(to_string(v7.witness->partition) == "{{1,2,3,4,5},{6},{7}}");
  CHECK(verify_witness(c7, v7.witness->set, v7.witness->partition));
  CHECK(verify_witness(c7, parse_point_set("{1,2,3}", 7),
                       parse_partition("{{1},{2,3,4,6,7},{5}}")));
}

TEST_CASE("listed groups have the property", "[utp]") {
  for (auto const& name : theorem27_groups) {
    CAPTURE(name);
    CHECK(has_utp(build(name).group).holds);
  }
  for (std::size_t n = 2; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(has_utp(symmetric_group(n)).holds);
    CHECK(has_utp(alternating_group(n)).holds);
  }
}

TEST_CASE("has_utp agrees with the definition", "[utp][exhaustive]") {
  std::vector<std::string> names{"C5",  "D5",       "AGL(1,5)", "C6",
                                 "D6",  "PSL(2,5)", "C7",       "D7",
                                 "7:3", "AGL(1,7)", "PSL(3,2)", "A4",
                                 "C4",  "S4",       "A5",       "Cyclic(3)"};
  for (auto const& name : names) {
    CAPTURE(name);
    auto g = build(name).group;
    auto v = has_utp(g);
    CHECK(v.holds == brute_utp(g));
    if (!v.holds) {
      CHECK(brute_refutes(g, v.witness->set, v.witness->partition));
    }
  }
}

TEST_CASE("parallel checks report the same witness", "[utp]") {
  for (auto name : {"C7", "D7", "PSL(3,2)", "7:3", "Cyclic(9)"}) {
    CAPTURE(name);
    auto g = build(name).group;
    auto one = has_utp(g, {12, 1});
    auto four = has_utp(g, {12, 4});
    REQUIRE(one.holds == four.holds);
    if (!one.holds) {
      CHECK(one.witness->set == four.witness->set);
      CHECK(one.witness->partition == four.witness->partition);
    }
  }
}

TEST_CASE("degree cap refuses", "[utp]") {
  CHECK_THROWS_AS(has_utp(build("PSL(2,13)").group), CapExceeded);
  CHECK_THROWS_AS(has_utp(symmetric_group(10), {9, 1}), CapExceeded);
  CHECK_THROWS_AS(is_synchronizing(symmetric_group(11)), CapExceeded);
}

TEST_CASE("verify_witness", "[utp]") {
  // Points as labelled by the GAP primitive groups library.
  auto psl32 = relabel(build("PSL(3,2)").group,
                       parse_permutation("(2 3 7 4 5 6)", 7));
  CHECK(verify_witness(psl32, parse_point_set("{1,2,4}", 7),
                       parse_partition("{{1},{2,3,4,7},{5,6}}")));
  auto pgl217 = build("PGL(2,17)").group;
  CHECK(verify_witness(pgl217, parse_point_set("{1,2,3,4,5,6,7,8,10,11}", 18),
                       parse_partition("{{1},{2},{3},{4},{5},{6},{7},{8},{9},"
                                       "{10,11,12,13,14,15,16,17,18}}")));
  auto s5 = symmetric_group(5);
  CHECK_FALSE(verify_witness(s5, parse_point_set("{1,2}", 5),
                             parse_partition("{{1,2,3},{4,5}}")));
  CHECK_THROWS_AS(verify_witness(s5, parse_point_set("{1,2,3}", 5),
                                 parse_partition("{{1,2,3},{4,5}}")),
                  Error);

  std::mt19937 rng(4);
  for (auto name : {"C7", "D7", "PSL(3,2)", "AGL(1,7)", "PSL(2,7)"}) {
    auto g = build(name).group;
    auto parts = test::all_partitions(g.degree());
    for (int i = 0; i < 40; ++i) {
      auto const& p = parts[rng() % parts.size()];
      auto subsets = test::all_subsets(g.degree(), p.num_classes());
      auto const& s = subsets[rng() % subsets.size()];
      CAPTURE(name, to_string(s), to_string(p));
      CHECK(verify_witness(g, s, p) == brute_refutes(g, s, p));
    }
  }
}

TEST_CASE("K_G(a)", "[utp]") {
  auto c7 = build("C7").group;
  auto a = Transformation::from_one_based({1, 2, 2, 2, 3, 2, 2});
  CHECK(to_string(image(a)) == "{1,2,3}");
  CHECK(kernel(a) == parse_partition("{{1},{2,3,4,6,7},{5}}"));
  CHECK_FALSE(kg_nonempty(c7, a));
  auto s7 = symmetric_group(7);
  auto g = kg_member(s7, a);
  REQUIRE(g);
  CHECK(compose(compose(a, *g), a).rank() == a.rank());

  // An idempotent always has the identity available.
  std::mt19937 rng(12);
  auto c6 = build("C6").group;
  for (int i = 0; i < 100; ++i) {
    auto t = test::random_transformation(6, rng);
    auto k = kernel(t);
    std::vector<Point> firsts;
    for (auto const& c : k.classes()) {
      firsts.push_back(c.points().front());
    }
    auto e = idempotent_from(k, PointSet::from_points(6, firsts));
    CHECK(kg_nonempty(c6, e));
  }
}

TEST_CASE("K_G(a) is non-empty for all a iff the property holds",
          "[utp][exhaustive]") {
  std::vector<std::string> names{"C5",  "D5",       "AGL(1,5)", "PSL(2,5)",
                                 "PGL(2,5)", "C6",  "C7",       "D7",
                                 "7:3", "AGL(1,7)", "PSL(3,2)", "S5",
                                 "A6"};
  for (auto const& name : names) {
    CAPTURE(name);
    auto g = build(name).group;
    std::size_t n = g.degree();
    bool all = true;
    for (auto const& p : test::all_partitions(n)) {
      if (p.num_classes() == n) {
        continue;
      }
      for (auto const& s : test::all_subsets(n, p.num_classes())) {
        auto a = with_kernel_image(p, s);
        auto m = kg_member(g, a);
        if (m) {
          CHECK(compose(compose(a, *m), a).rank() == a.rank());
        }
        all = all && m.has_value();
      }
    }
    CHECK(all == has_utp(g).holds);
  }
}

TEST_CASE("counting bound", "[utp][bounds]") {
  auto c7 = build("C7").group;
  auto r = singular_bound_failure(7, c7.order());
  REQUIRE(r);
  CHECK(*r == 3);
  CHECK(binomial(7, 3) == 35);
  CHECK(c7.order() * 4 == 28);
  for (std::size_t n = 2; n <= 12; ++n) {
    CHECK(singular_bound_holds(symmetric_group(n)));
  }
  for (auto const& name : theorem27_groups) {
    CAPTURE(name);
    CHECK(singular_bound_holds(build(name).group));
  }
}

TEST_CASE("exact comparison with n^sqrt(n)", "[utp][bounds]") {
  // Perfect squares are exact.
  CHECK(maroti_gate(4, 799));
  CHECK_FALSE(maroti_gate(4, 800));
  CHECK(maroti_gate(9, 1512));
  CHECK_FALSE(maroti_gate(48, BigInt("100000000000000000000")));
  // Against long double away from the boundary.
  std::mt19937 rng(8);
  for (int i = 0; i < 200; ++i) {
    unsigned n = 2 + rng() % 60;
    long double bound = 50.0L * std::pow((long double)n, std::sqrt((long double)n));
    long double scale = 0.5L + (rng() % 1000) / 1000.0L;
    long double x = std::floor(bound * scale);
    if (std::fabs(x - bound) < bound * 1e-9L) {
      continue;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.0Lf", x);
    CAPTURE(n, buf);
    CHECK(maroti_gate(n, BigInt(buf)) == (x < bound));
  }
  CHECK(compare_pow_sqrt(2, 3, 1) < 0);  // 2^1.414 = 2.66
  CHECK(compare_pow_sqrt(2, 2, 1) > 0);
  CHECK(compare_pow_sqrt(1, 1, 1) == 0);
}

TEST_CASE("degree-47 inequalities as computed", "[utp][bounds]") {
  auto rep = degree47_inequalities();
  REQUIRE(rep.even.size() == 23);
  REQUIRE(rep.odd.size() == 24);
  for (auto const& row : rep.even) {
    CAPTURE(row.r);
    CHECK(row.n == 2 * row.r);
    CHECK(row.holds == (row.r >= 30));
  }
  for (auto const& row : rep.odd) {
    CAPTURE(row.r);
    CHECK(row.n == 2 * row.r + 1);
    CHECK(row.holds == (row.r >= 30));
  }
  CHECK(rep.step_at_46);
  CHECK_FALSE(rep.all_hold());
}

TEST_CASE("affine witnesses", "[utp][affine]") {
  auto w11 = affine_witness(11, 1);
  CHECK(w11.set == parse_point_set("{1,2,4,5}", 11));
  CHECK(w11.partition
        == parse_partition("{{1},{2},{3},{4,5,6,7,8,9,10,11}}"));

  auto w23 = affine_witness(2, 3);
  CHECK(w23.set == parse_point_set("{1,2,3,4}", 8));
  CHECK(w23.partition == parse_partition("{{1,2},{3,4,5,6},{7},{8}}"));
  CHECK(brute_refutes(affine_general_linear(3, 2), w23.set, w23.partition));

  auto w32 = affine_witness(3, 2);
  CHECK(w32.set == parse_point_set("{1,2,3}", 9));
  CHECK(w32.partition == parse_partition("{{1},{2,3,6,8},{4,5,7,9}}"));
  CHECK(brute_refutes(affine_general_linear(2, 3), w32.set, w32.partition));

  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 4}, {2, 5}, {2, 6}, {3, 3}, {5, 2}, {7, 2}, {13, 1},
           {17, 1}, {19, 1}, {23, 1}, {29, 1}, {31, 1}, {37, 1},
           {41, 1}, {43, 1}, {47, 1}, {53, 1}, {59, 1}, {61, 1}}) {
    CAPTURE(p, k);
    auto w = affine_witness(p, k);
    CHECK(w.set.size() == w.partition.num_classes());
  }
  CHECK_THROWS_AS(affine_witness(5, 1), Error);
  CHECK_THROWS_AS(affine_witness(7, 1), Error);
  CHECK_THROWS_AS(affine_witness(2, 2), Error);
  CHECK_THROWS_AS(affine_witness(67, 1), Error);
  CHECK_THROWS_AS(affine_witness(4, 2), Error);
}

TEST_CASE("synchronization", "[utp][sync]") {
  CHECK(is_synchronizing(build("C5").group).holds);
  auto c6 = is_synchronizing(build("C6").group);
  CHECK_FALSE(c6.holds);
  REQUIRE(c6.witness);
  for (std::size_t n = 3; n <= 6; ++n) {
    CHECK(is_synchronizing(symmetric_group(n)).holds);
  }
  // Brute force for a handful of small groups.
  for (auto name : {"C5", "C6", "D6", "C7", "PSL(3,2)", "AGL(1,7)", "C4",
                    "Cyclic(9)", "AGL(2,3)"}) {
    CAPTURE(name);
    auto g = build(name).group;
    auto elems = test::brute_force_group(g.degree(), g.generators());
    bool sync = true;
    for (auto const& p : test::all_partitions(g.degree())) {
      if (p.num_classes() == 1 || p.num_classes() == g.degree()) {
        continue;
      }
      for (auto const& s : test::all_subsets(g.degree(), p.num_classes())) {
        if (!is_transversal(s, p)) {
          continue;
        }
        bool moved_off = false;
        for (auto const& x : elems) {
          if (!is_transversal(move_set(s, x), p)) {
            moved_off = true;
            break;
          }
        }
        sync = sync && moved_off;
      }
    }
    CHECK(is_synchronizing(g).holds == sync);
  }
}

TEST_CASE("consequences of the property", "[utp]") {
  for (auto name : {"C5", "D5", "AGL(1,5)", "PSL(2,5)", "PGL(2,5)", "C6",
                    "AGL(1,7)", "C7", "PSL(3,2)", "PGL(2,7)", "PSL(2,7)",
                    "PSL(2,8)", "PGammaL(2,8)", "AGL(2,3)", "A4", "S4"}) {
    CAPTURE(name);
    auto g = build(name).group;
    if (has_utp(g).holds) {
      CHECK(singular_bound_holds(g));
      CHECK(is_synchronizing(g).holds);
      CHECK(is_transitive(g));
      CHECK(is_primitive(g));
    }
  }
  // C5 <= D5 <= AGL(1,5)
  CHECK(has_utp(build("C5").group).holds);
  CHECK(has_utp(build("D5").group).holds);
  CHECK(has_utp(build("AGL(1,5)").group).holds);
}
