#include <random>
#include <set>

#include "catch_amalgamated.hpp"

#include "helpers.hpp"
#include "utg/catalog.hpp"
#include "utg/finite_field.hpp"

using namespace utg;

namespace {
  BigInt psl2_order(unsigned q) {
    BigInt r = BigInt(q) * (q * q - 1);
    return q % 2 == 1 ? r / 2 : r;
  }

  bool two_transitive(Group const& g) {
    if (!is_transitive(g)) {
      return false;
    }
    auto stab = setwise_stabilizer(g, PointSet(g.degree(), 1));
    return orbit(stab, Point(1)).size() == g.degree() - 1;
  }

  // Names used by the reproduction suites.
  std::vector<std::string> const& listed_groups() {
    static std::vector<std::string> const names{
        "C5",           "D5",           "AGL(1,5)",    "PSL(2,5)",
        "PGL(2,5)",     "AGL(1,7)",     "PGL(2,7)",    "PSL(2,8)",
        "PGammaL(2,8)", "PSL(3,2)",     "7:3",         "D7",
        "PSL(2,7)",     "A5@10",        "S5@10",       "PSL(2,9)",
        "PGL(2,9)",     "S6@10",        "M10",         "PGammaL(2,9)",
        "PGL(2,11)",    "PSL(2,11)",    "PSL(3,3)",    "PSL(2,13)",
        "PGL(2,13)",    "PSL(4,2)",     "PSL(2,16)",   "PSL(2,16):2",
        "PSL(2,16):4",  "PGL(2,17)",    "PSigmaL(3,4)", "PGL(3,4)",
        "PGammaL(3,4)"};
    return names;
  }
}  // namespace

TEST_CASE("finite fields satisfy the axioms", "[field][exhaustive]") {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    FiniteField f(q);
    CAPTURE(q);
    CHECK_NOTHROW(f.self_test());
    CHECK(f.multiplicative_order(f.generator()) == q - 1);
    std::set<unsigned> seen;
    for (std::size_t i = 0; i < q; ++i) {
      seen.insert(f.element(i));
      CHECK(f.index_of(f.element(i)) == i);
    }
    CHECK(seen.size() == q);
    CHECK(f.element(0) == 0);
    CHECK(f.element(1) == 1);
  }
  for (unsigned q : {17u, 25u, 27u, 32u, 49u, 61u, 64u}) {
    CHECK_NOTHROW(FiniteField(q).self_test());
  }
  CHECK_THROWS_AS(FiniteField(6), Error);
  CHECK_THROWS_AS(FiniteField(1), Error);
}

TEST_CASE("small named groups", "[catalog]") {
  auto agl15 = build("AGL(1,5)").group;
  CHECK(agl15.degree() == 5);
  CHECK(agl15.order() == 20);
  CHECK(test::brute_force_group(5, agl15.generators()).size() == 20);
  CHECK(two_transitive(agl15));

  auto pgl25 = build("PGL(2,5)").group;
  CHECK(pgl25.degree() == 6);
  CHECK(pgl25.order() == 120);

  CHECK(build("Sym(3)").group.order() == 6);
  CHECK(build("S3").group.order() == 6);
  CHECK(build("7:3").group.order() == 21);
  CHECK(build("C5").group.order() == 5);
  CHECK(build("D5").group.order() == 10);
  CHECK(build("PSL(2,11)@12").group.degree() == 12);
  CHECK_THROWS_AS(build("PSL(2,11)@13"), Error);
  CHECK_THROWS_AS(build("Frob(3)"), Error);
  CHECK_THROWS_AS(build("AGL(1,6)"), Error);
  CHECK(build("PΓL(2,8)").group.order() == 1512);

  // C5 and D5 sit inside AGL(1,5) in the same numbering.
  auto d5 = build("D5").group;
  auto c5 = build("C5").group;
  for (auto const& s : d5.generators()) {
    CHECK(agl15.contains(s));
  }
  for (auto const& s : c5.generators()) {
    CHECK(d5.contains(s));
  }
}

TEST_CASE("projective line generators", "[catalog]") {
  using E = ProjectiveLineExtension;
  CHECK(Group(6, psl2_action(5)).order() == 60);
  CHECK(Group(6, psl2_action(5, E::general)).order() == 120);
  CHECK(Group(9, psl2_action(8, E::full)).order() == 1512);
  Group pgl22(3, psl2_action(2, E::general));
  CHECK(pgl22.degree() == 3);
  CHECK(pgl22.order() == 6);

  // Point 1 is infinity and x -> x+1 fixes it.
  auto gens = psl2_action(7);
  CHECK(gens[0][0] == 0);
  // x -> -1/x swaps infinity and 0.
  CHECK(gens[2][0] == 1);
  CHECK(gens[2][1] == 0);
}

TEST_CASE("order formulas", "[catalog]") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u}) {
    CAPTURE(p);
    CHECK(affine_general_linear(1, p).order() == p * (p - 1));
  }
  auto agl = [](unsigned k, unsigned p) {
    BigInt pk = power(BigInt(p), k);
    BigInt r = pk;
    for (unsigned i = 0; i < k; ++i) {
      r *= pk - power(BigInt(p), i);
    }
    return r;
  };
  for (auto [k, p] : std::vector<std::pair<unsigned, unsigned>>{
           {2, 2}, {3, 2}, {4, 2}, {5, 2}, {6, 2}, {2, 3}, {3, 3}, {2, 5},
           {2, 7}}) {
    CAPTURE(k, p);
    CHECK(affine_general_linear(k, p).order() == agl(k, p));
  }
  using E = ProjectiveLineExtension;
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 17u}) {
    CAPTURE(q);
    BigInt pgl = BigInt(q) * (q * q - 1);
    unsigned k = FiniteField(q).degree();
    CHECK(projective_line_group(q, E::special).order() == psl2_order(q));
    CHECK(projective_line_group(q, E::general).order() == pgl);
    CHECK(projective_line_group(q, E::semilinear).order()
          == psl2_order(q) * k);
    CHECK(projective_line_group(q, E::full).order() == pgl * k);
  }
  CHECK(build("M10").group.order() == 720);
  CHECK(build("PSL(2,16):2").group.order() == 8160);
  CHECK(build("PSL(2,16):4").group.order() == 16320);

  using S = ProjectiveSpaceExtension;
  CHECK(projective_space_group(3, 2, S::special).order() == 168);
  CHECK(projective_space_group(3, 3, S::special).order() == 5616);
  CHECK(projective_space_group(3, 4, S::special).order() == 20160);
  CHECK(projective_space_group(3, 4, S::general).order() == 60480);
  CHECK(projective_space_group(3, 4, S::semilinear).order() == 40320);
  CHECK(projective_space_group(3, 4, S::full).order() == 120960);
  CHECK(projective_space_group(4, 2, S::special).order() == 20160);
  CHECK(projective_space_group(4, 2, S::special).degree() == 15);

  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(symmetric_group(n).order() == factorial(n));
    CHECK(alternating_group(n).order() == (n < 2 ? 1 : factorial(n) / 2));
  }
}

TEST_CASE("k-subset actions", "[catalog]") {
  auto subsets = lex_k_subsets(5, 2);
  REQUIRE(subsets.size() == 10);
  CHECK(subsets.front() == parse_point_set("{1,2}", 5));
  CHECK(subsets[4] == parse_point_set("{2,3}", 5));
  CHECK(subsets.back() == parse_point_set("{4,5}", 5));
  auto a = build("ActionOnKSubsets(Alt(5),2)").group;
  CHECK(a.degree() == 10);
  CHECK(a.order() == 60);
  CHECK(build("S5@10").group.order() == 120);
  CHECK(lex_k_subsets(4, 0).size() == 1);
  CHECK(lex_k_subsets(3, 4).empty());
}

TEST_CASE("catalog groups are transitive, listed groups primitive",
          "[catalog]") {
  for (auto const& name : listed_groups()) {
    CAPTURE(name);
    auto g = build(name).group;
    CHECK(is_transitive(g));
    CHECK(is_primitive(g));
    for (Point p = 0; p < g.degree(); p += 3) {
      CHECK(g.order() % orbit(g, p).size() == 0);
    }
    std::mt19937 rng(g.degree());
    for (int i = 0; i < 5; ++i) {
      PointSet s(g.degree(), rng() & ((std::uint64_t(1) << g.degree()) - 1));
      CHECK(g.order() % orbit(g, s).size() == 0);
    }
  }
  CHECK_FALSE(is_primitive(cyclic_group(6)));
  CHECK(is_transitive(cyclic_group(6)));
}

TEST_CASE("membership agrees with closure for catalog groups",
          "[catalog][exhaustive]") {
  std::mt19937 rng(17);
  for (auto const& name : listed_groups()) {
    auto g = build(name).group;
    if (g.order() > 5000) {
      continue;
    }
    CAPTURE(name);
    auto elems = test::brute_force_group(g.degree(), g.generators());
    CHECK(elems.size() == g.order());
    std::set<Permutation> in(elems.begin(), elems.end());
    for (std::size_t i = 0; i < elems.size(); i += 7) {
      CHECK(g.contains(elems[i]));
    }
    for (int i = 0; i < 50; ++i) {
      auto p = test::random_permutation(g.degree(), rng);
      CHECK(g.contains(p) == (in.count(p) == 1));
    }
  }
}

TEST_CASE("group files", "[catalog][io]") {
  auto text = write_group_file("A4", alternating_group(4), {"test"});
  auto back = parse_group_file(text);
  CHECK(back.name == "A4");
  CHECK(back.group.order() == 12);
  CHECK(back.group.same_generators(alternating_group(4)));

  CHECK_THROWS_AS(parse_group_file("name X\ndegree 4\norder 13\n"
                                   "gen (1 2 3)\ngen (2 3 4)\n"),
                  Error);
  try {
    parse_group_file("# c\nname X\ndegree 4\norder 12\ngen (1 2 5)\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 5);
  }
  try {
    parse_group_file("name X\ndegree 4\nordre 12\n");
    FAIL("expected a parse error");
  } catch (ParseError const& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_group_file("name X\ngen (1 2)\n"), ParseError);
  CHECK_THROWS_AS(load_group_file("/nonexistent/x.grp"), Error);
}

TEST_CASE("file-backed groups", "[catalog][data]") {
  struct Row {
    char const* name;
    std::size_t degree;
    BigInt order;
  };
  std::vector<Row> rows{{"M11@11", 11, 7920},      {"M11@12", 12, 7920},
                        {"M12", 12, 95040},        {"M22", 22, 443520},
                        {"M22:2", 22, 887040},     {"M23", 23, 10200960},
                        {"A7@15", 15, 2520},       {"PSL(2,11)@11", 11, 660}};
  for (auto const& r : rows) {
    CAPTURE(r.name);
    CHECK(is_file_backed(r.name));
    auto g = build(r.name).group;
    CHECK(g.degree() == r.degree);
    CHECK(g.order() == r.order);
    CHECK(is_primitive(g));
  }
  CHECK_FALSE(is_file_backed("M10"));
}

TEST_CASE("library labelling matches the reference generators",
          "[catalog][data]") {
  auto dir = default_data_dir();
  std::size_t compared = 0;
  for (auto const& entry : library_labels()) {
    CAPTURE(entry.name);
    auto ref_path = dir / "reference"
                    / ("prim_" + std::to_string(entry.degree) + "_"
                       + std::to_string(entry.library_id) + ".grp");
    auto g = build_library_labelled(entry.name).group;
    CHECK(g.degree() == entry.degree);
    if (is_file_backed(entry.name)) {
      CHECK(entry.relabeling == "()");
      continue;
    }
    REQUIRE(std::filesystem::exists(ref_path));
    auto ref = load_group_file(ref_path).group;
    CHECK(ref.order() == g.order());
    for (auto const& x : ref.generators()) {
      CHECK(g.contains(x));
    }
    for (auto const& x : g.generators()) {
      CHECK(ref.contains(x));
    }
    ++compared;
  }
  CHECK(compared == 33);
  CHECK_THROWS_AS(build_library_labelled("C7"), Error);
}
