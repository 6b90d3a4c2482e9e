#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "helpers.hpp"
#include "utg/group.hpp"

using namespace utg;

namespace {

  Group cyclic(std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) {
      img[i] = static_cast<Point>((i + 1) % n);
    }
    return Group(n, {Permutation(img)});
  }

  Group from_cycles(std::size_t n, std::vector<std::string> const& gens) {
    std::vector<Permutation> perms;
    for (auto const& s : gens) {
      perms.push_back(parse_permutation(s, n));
    }
    return Group(n, perms);
  }

  std::set<PointSet> as_set(Orbit<PointSet> const& o) {
    return {o.elements().begin(), o.elements().end()};
  }

}  // namespace

TEST_CASE("set orbits of cyclic groups", "[group]") {
  auto c5 = cyclic(5);
  auto o = orbit(c5, parse_point_set("{1,3}", 5));
  std::set<PointSet> expected;
  for (auto s : {"{1,3}", "{2,4}", "{3,5}", "{4,1}", "{5,2}"}) {
    expected.insert(parse_point_set(s, 5));
  }
  CHECK(as_set(o) == expected);
  CHECK(o[0] == parse_point_set("{1,3}", 5));

  auto c7 = cyclic(7);
  auto o7 = orbit(c7, parse_point_set("{1,2,3}", 7));
  std::set<PointSet> expected7;
  for (auto s : {"{1,2,3}", "{2,3,4}", "{3,4,5}", "{4,5,6}", "{5,6,7}",
                 "{1,6,7}", "{1,2,7}"}) {
    expected7.insert(parse_point_set(s, 7));
  }
  CHECK(as_set(o7) == expected7);

  auto fixed = orbit(c5, PointSet::full(5));
  CHECK(fixed.size() == 1);
}

TEST_CASE("orbit witnesses map the seed to each element", "[group]") {
  auto g = from_cycles(6, {"(1 2 3 4 5 6)", "(1 2)"});
  auto o = orbit(g, parse_partition("{{1,2},{3},{4,5,6}}"));
  CHECK(o.size() == 60);
  for (std::size_t i = 0; i < o.size(); ++i) {
    CHECK(move_partition(o[0], o.witness(i)) == o[i]);
    for (auto const& s : g.generators()) {
      CHECK(o.contains(move_partition(o[i], s)));
    }
  }
}

TEST_CASE("order and membership", "[group]") {
  auto s4 = from_cycles(4, {"(1 2)", "(1 2 3 4)"});
  CHECK(s4.order() == 24);
  auto a4 = from_cycles(4, {"(1 2 3)", "(2 3 4)"});
  CHECK(a4.order() == 12);
  CHECK_FALSE(a4.contains(parse_permutation("(1 2)", 4)));
  CHECK(a4.contains(parse_permutation("(1 2)(3 4)", 4)));

  // AGL(1,5): x -> x+1 and x -> 2x on points 0..4.
  auto agl15 = from_cycles(5, {"(1 2 3 4 5)", "(2 3 5 4)"});
  auto brute = test::brute_force_group(5, agl15.generators());
  CHECK(brute.size() == 20);
  CHECK(agl15.order() == 20);
}

TEST_CASE("membership agrees with brute-force closure", "[group][property]") {
  std::mt19937 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Permutation> gens;
    std::size_t k = 1 + rng() % 2;
    for (std::size_t i = 0; i < k; ++i) {
      // Sparse generators keep some groups small.
      auto p = test::random_permutation(n, rng);
      gens.push_back(trial % 3 == 0 ? compose(p, p) : p);
    }
    Group g(n, gens);
    auto elems = test::brute_force_group(n, gens);
    CHECK(g.order() == elems.size());
    std::set<Permutation> in(elems.begin(), elems.end());
    for (auto const& p : test::brute_force_group(
             n, {parse_permutation("(1 2)", n),
                 Permutation(test::random_permutation(n, rng))})) {
      if (p.degree() == n) {
        CHECK(g.contains(p) == (in.count(p) == 1));
      }
    }
    auto listed = g.elements();
    CHECK(std::set<Permutation>(listed.begin(), listed.end()) == in);
    CHECK(listed.front().is_identity());
  }
}

TEST_CASE("setwise stabilizers and induced actions", "[group]") {
  auto s5 = from_cycles(5, {"(1 2)", "(1 2 3 4 5)"});
  auto gamma = parse_point_set("{1,2,3}", 5);
  CHECK(setwise_stabilizer(s5, gamma).order() == 12);
  CHECK(induced_action(s5, gamma).order() == 6);
  CHECK(induced_action(s5, gamma).degree() == 3);

  auto c5 = cyclic(5);
  auto st = setwise_stabilizer(c5, parse_point_set("{1,2}", 5));
  CHECK(st.order() == 1);

  CHECK(setwise_stabilizer(c5, PointSet::full(5)).order() == 5);
}

TEST_CASE("orbit-stabilizer for random sets", "[group][property]") {
  std::mt19937 rng(2);
  auto g = from_cycles(8, {"(1 2 3 4 5 6 7)", "(2 3 5)(4 7 6)", "(8 1)(2 7)(3 4)(5 6)"});
  REQUIRE(g.order() == 168);
  for (int i = 0; i < 20; ++i) {
    PointSet s(8, 1 + rng() % 255);
    auto o = orbit(g, s);
    CHECK(setwise_stabilizer(g, s).order() * o.size() == g.order());
    CHECK(g.order() % o.size() == 0);
  }
}

TEST_CASE("coset transversals", "[group]") {
  auto s3 = from_cycles(3, {"(1 2)", "(1 2 3)"});
  auto h = setwise_stabilizer(s3, parse_point_set("{1}", 3));
  auto t = coset_transversal(s3, h);
  CHECK(t.size() == 3);
  CHECK(t.front().is_identity());

  auto c5 = cyclic(5);
  auto stab = setwise_stabilizer(c5, parse_point_set("{1,2}", 5));
  auto t5 = coset_transversal(c5, stab);
  CHECK(t5.size() == 5);
  // Distinct right cosets of a trivial subgroup: distinct elements.
  CHECK(std::set<Permutation>(t5.begin(), t5.end()).size() == 5);

  CHECK(coset_transversal(c5, c5).size() == 1);
  CHECK_THROWS_AS(coset_transversal(c5, s3), Error);

  // Replay gives the same list.
  CHECK(coset_transversal(c5, stab) == t5);
}

TEST_CASE("transitivity and primitivity", "[group]") {
  auto c6 = cyclic(6);
  CHECK(is_transitive(c6));
  CHECK_FALSE(is_primitive(c6));
  auto blocks = nontrivial_block_system(c6);
  REQUIRE(blocks);
  CHECK(*blocks == parse_partition("{{1,3,5},{2,4,6}}"));

  CHECK(is_primitive(cyclic(5)));
  auto g = from_cycles(3, {"(1 2)"});
  CHECK_FALSE(is_transitive(g));
  CHECK_FALSE(is_primitive(g));
}

TEST_CASE("relabel conjugates every generator", "[group]") {
  auto c5 = cyclic(5);
  auto sigma = parse_permutation("(1 3)(2 5)", 5);
  auto r = relabel(c5, sigma);
  CHECK(r.order() == 5);
  for (auto const& s : c5.generators()) {
    auto moved = compose(compose(sigma.inverse(), s), sigma);
    CHECK(r.contains(moved));
  }
}

TEST_CASE("large groups: M23-sized chain from S_n", "[group]") {
  std::vector<Permutation> gens{parse_permutation("(1 2)", 23),
                                parse_permutation(
                                    "(1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 "
                                    "17 18 19 20 21 22 23)",
                                    23)};
  Group s23(23, gens);
  CHECK(s23.order() == factorial(23));
  CHECK(s23.base().front() == 0);
}
