#include "utg/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "utg/finite_field.hpp"

#ifndef UTG_DATA_DIR
#define UTG_DATA_DIR "data"
#endif

namespace utg {

  namespace {
    using Vec = std::vector<FiniteField::Element>;
    using Matrix = std::vector<Vec>;

    Permutation from_map(std::size_t n, auto&& f) {
      std::vector<Point> img(n);
      for (std::size_t i = 0; i < n; ++i) {
        img[i] = static_cast<Point>(f(i));
      }
      return Permutation(img);
    }

    void check_degree(std::size_t n) {
      if (n == 0 || n > kMaxDegree) {
        throw Error("degree " + std::to_string(n) + " out of range 1.."
                    + std::to_string(kMaxDegree));
      }
    }
  }  // namespace

  Group symmetric_group(std::size_t n) {
    check_degree(n);
    if (n == 1) {
      return Group::trivial(1);
    }
    return Group(n,
                 {from_map(n, [](std::size_t i) { return i < 2 ? 1 - i : i; }),
                  from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
  }

  Group alternating_group(std::size_t n) {
    check_degree(n);
    if (n < 3) {
      return Group::trivial(n);
    }
    auto three = from_map(n, [](std::size_t i) { return i < 3 ? (i + 1) % 3 : i; });
    Permutation long_cycle;
    if (n % 2 == 1) {
      long_cycle = from_map(n, [n](std::size_t i) { return (i + 1) % n; });
    } else {
      long_cycle = from_map(n, [n](std::size_t i) {
        return i == 0 ? 0 : (i == n - 1 ? 1 : i + 1);
      });
    }
    return Group(n, {three, long_cycle});
  }

  Group cyclic_group(std::size_t n) {
    check_degree(n);
    return Group(n, {from_map(n, [n](std::size_t i) { return (i + 1) % n; })});
  }

  Group dihedral_group(std::size_t p) {
    check_degree(p);
    return Group(p,
                 {from_map(p, [p](std::size_t i) { return (i + 1) % p; }),
                  from_map(p, [p](std::size_t i) { return (p - i) % p; })});
  }

  Group affine_frobenius_group(unsigned p, unsigned d) {
    if (!is_prime(p) || (p - 1) % d != 0) {
      throw Error("no subgroup of AGL(1," + std::to_string(p) + ") of order "
                  + std::to_string(p) + "*" + std::to_string(d));
    }
    FiniteField f(p);
    auto c = f.pow(f.generator(), (p - 1) / d);
    return Group(p, {from_map(p, [p](std::size_t i) { return (i + 1) % p; }),
                     from_map(p, [&](std::size_t i) {
                       return f.mul(c, static_cast<unsigned>(i));
                     })});
  }

  namespace {
    // Point index of a vector over GF(p): c1 is the most significant digit.
    std::size_t affine_index(Vec const& v, unsigned p) {
      std::size_t x = 0;
      for (auto c : v) {
        x = x * p + c;
      }
      return x;
    }

    Vec affine_vector(std::size_t x, unsigned k, unsigned p) {
      Vec v(k);
      for (unsigned i = k; i-- > 0;) {
        v[i] = static_cast<unsigned>(x % p);
        x /= p;
      }
      return v;
    }

    Vec times(Vec const& v, Matrix const& m, FiniteField const& f) {
      Vec out(m.front().size(), 0);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < out.size(); ++j) {
          out[j] = f.add(out[j], f.mul(v[i], m[i][j]));
        }
      }
      return out;
    }

    Matrix identity_matrix(unsigned d) {
      Matrix m(d, Vec(d, 0));
      for (unsigned i = 0; i < d; ++i) {
        m[i][i] = 1;
      }
      return m;
    }

    // Transvections I + t E_ij, t running over an additive basis of the
    // field, generate SL(d,q).
    std::vector<Matrix> special_linear_generators(unsigned d,
                                                  FiniteField const& f) {
      std::vector<Matrix> gens;
      for (unsigned i = 0; i < d; ++i) {
        for (unsigned j = 0; j < d; ++j) {
          if (i == j) {
            continue;
          }
          for (unsigned e = 0; e < f.degree(); ++e) {
            auto m = identity_matrix(d);
            m[i][j] = f.pow(f.generator(), e);
            gens.push_back(std::move(m));
          }
        }
      }
      return gens;
    }

    Matrix scaling_matrix(unsigned d, FiniteField const& f) {
      auto m = identity_matrix(d);
      m[0][0] = f.generator();
      return m;
    }
  }  // namespace

  Group affine_general_linear(unsigned k, unsigned p) {
    if (!is_prime(p) || k == 0) {
      throw Error("AGL(k,p) needs a prime p and k >= 1");
    }
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
      n *= p;
    }
    check_degree(n);
    FiniteField f(p);
    std::vector<Permutation> gens;
    for (unsigned i = 0; i < k; ++i) {
      gens.push_back(from_map(n, [&](std::size_t x) {
        auto v = affine_vector(x, k, p);
        v[i] = f.add(v[i], 1);
        return affine_index(v, p);
      }));
    }
    auto mats = special_linear_generators(k, f);
    mats.push_back(scaling_matrix(k, f));
    for (auto const& m : mats) {
      gens.push_back(from_map(n, [&](std::size_t x) {
        return affine_index(times(affine_vector(x, k, p), m, f), p);
      }));
    }
    return Group(n, gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Projective line
  ////////////////////////////////////////////////////////////////////////

  std::vector<Permutation> psl2_action(unsigned q,
                                       ProjectiveLineExtension ext) {
    FiniteField f(q);
    unsigned const inf = q;  // sentinel for the point at infinity
    std::size_t const n = q + 1;
    auto to_value = [&](std::size_t pt) -> unsigned {
      return pt == 0 ? inf : f.element(pt - 1);
    };
    auto to_point = [&](unsigned v) -> std::size_t {
      return v == inf ? 0 : f.index_of(v) + 1;
    };
    // x -> (a x^(p^e) + b) / (c x^(p^e) + d)
    auto mobius = [&](unsigned a, unsigned b, unsigned c, unsigned d,
                      unsigned e) {
      return from_map(n, [&, a, b, c, d, e](std::size_t pt) {
        unsigned x = to_value(pt);
        if (x != inf) {
          for (unsigned i = 0; i < e; ++i) {
            x = f.frobenius(x);
          }
        }
        unsigned y;
        if (x == inf) {
          y = c == 0 ? inf : f.mul(a, f.inv(c));
        } else {
          unsigned den = f.add(f.mul(c, x), d);
          y = den == 0 ? inf : f.mul(f.add(f.mul(a, x), b), f.inv(den));
        }
        return to_point(y);
      });
    };
    unsigned const l = f.generator();
    unsigned const square = q % 2 == 1 ? f.mul(l, l) : l;
    std::vector<Permutation> gens{mobius(1, 1, 0, 1, 0),
                                  mobius(square, 0, 0, 1, 0),
                                  mobius(0, f.neg(1), 1, 0, 0)};
    using E = ProjectiveLineExtension;
    if (ext == E::general || ext == E::full) {
      gens.push_back(mobius(l, 0, 0, 1, 0));
    }
    if (ext == E::semilinear || ext == E::full) {
      gens.push_back(mobius(1, 0, 0, 1, 1));
    }
    if (ext == E::mathieu10) {
      if (q != 9) {
        throw Error("the M10 extension needs q = 9");
      }
      gens.push_back(mobius(l, 0, 0, 1, 1));
    }
    if (ext == E::frobenius_sq) {
      if (f.degree() % 2 != 0) {
        throw Error("x -> x^(p^2) is not of order dividing the field degree");
      }
      gens.push_back(mobius(1, 0, 0, 1, 2));
    }
    return gens;
  }

  Group projective_line_group(unsigned q, ProjectiveLineExtension ext) {
    return Group(q + 1, psl2_action(q, ext));
  }

  ////////////////////////////////////////////////////////////////////////
  // Projective spaces
  ////////////////////////////////////////////////////////////////////////

  Group projective_space_group(unsigned d, unsigned q,
                               ProjectiveSpaceExtension ext) {
    if (d < 2) {
      throw Error("projective space needs dimension >= 2");
    }
    FiniteField f(q);
    std::vector<Vec> points;
    std::unordered_map<std::size_t, std::size_t> index;
    std::size_t total = 1;
    for (unsigned i = 0; i < d; ++i) {
      total *= q;
    }
    for (std::size_t x = 0; x < total; ++x) {
      Vec v(d);
      std::size_t y = x;
      for (unsigned i = d; i-- > 0;) {
        v[i] = static_cast<unsigned>(y % q);
        y /= q;
      }
      auto lead = std::find_if(v.begin(), v.end(), [](auto c) { return c; });
      if (lead != v.end() && *lead == 1) {
        index.emplace(x, points.size());
        points.push_back(std::move(v));
      }
    }
    std::size_t const n = points.size();
    check_degree(n);
    auto point_of = [&](Vec v) {
      auto lead = *std::find_if(v.begin(), v.end(), [](auto c) { return c; });
      auto s = f.inv(lead);
      std::size_t x = 0;
      for (auto& c : v) {
        x = x * q + f.mul(c, s);
      }
      return index.at(x);
    };

    auto mats = special_linear_generators(d, f);
    using E = ProjectiveSpaceExtension;
    if (ext == E::general || ext == E::full) {
      mats.push_back(scaling_matrix(d, f));
    }
    std::vector<Permutation> gens;
    for (auto const& m : mats) {
      gens.push_back(from_map(
          n, [&](std::size_t i) { return point_of(times(points[i], m, f)); }));
    }
    if (ext == E::semilinear || ext == E::full) {
      gens.push_back(from_map(n, [&](std::size_t i) {
        Vec v = points[i];
        for (auto& c : v) {
          c = f.frobenius(c);
        }
        return point_of(v);
      }));
    }
    return Group(n, gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // k-subset actions
  ////////////////////////////////////////////////////////////////////////

  std::vector<PointSet> lex_k_subsets(std::size_t n, std::size_t k) {
    std::vector<PointSet> out;
    if (k > n) {
      return out;
    }
    std::vector<Point> c(k);
    std::iota(c.begin(), c.end(), 0);
    while (true) {
      out.push_back(PointSet::from_points(n, c));
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(k) - 1;
      while (i >= 0 && c[i] == n - k + i) {
        --i;
      }
      if (i < 0) {
        break;
      }
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) {
        c[j] = c[j - 1] + 1;
      }
    }
    return out;
  }

  Group action_on_k_subsets(Group const& g, std::size_t k) {
    auto subsets = lex_k_subsets(g.degree(), k);
    check_degree(subsets.size());
    std::unordered_map<PointSet, std::size_t> index;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      index.emplace(subsets[i], i);
    }
    std::vector<Permutation> gens;
    for (auto const& s : g.generators()) {
      gens.push_back(from_map(subsets.size(), [&](std::size_t i) {
        return index.at(move_set(subsets[i], s));
      }));
    }
    return Group(subsets.size(), gens);
  }

  ////////////////////////////////////////////////////////////////////////
  // Group files
  ////////////////////////////////////////////////////////////////////////

  GroupFile parse_group_file(std::string_view text) {
    std::string name;
    std::size_t degree = 0;
    std::optional<BigInt> order;
    std::vector<Permutation> gens;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto last = line.find_last_not_of(" \t\r");
      line = line.substr(first, last - first + 1);
      auto sp = line.find_first_of(" \t");
      std::string key = line.substr(0, sp);
      std::string value;
      if (sp != std::string::npos) {
        value = line.substr(line.find_first_not_of(" \t", sp));
      }
      auto need_value = [&] {
        if (value.empty()) {
          throw ParseError("'" + key + "' needs a value", lineno, first + 1);
        }
      };
      if (key == "name") {
        need_value();
        name = value;
      } else if (key == "degree") {
        need_value();
        char* end = nullptr;
        unsigned long d = std::strtoul(value.c_str(), &end, 10);
        if (*end != '\0' || d == 0 || d > kMaxDegree) {
          throw ParseError("bad degree '" + value + "'", lineno, first + 1);
        }
        degree = d;
      } else if (key == "order") {
        need_value();
        if (!std::all_of(value.begin(), value.end(),
                         [](unsigned char c) { return std::isdigit(c); })) {
          throw ParseError("bad order '" + value + "'", lineno, first + 1);
        }
        order = BigInt(value);
      } else if (key == "gen") {
        need_value();
        if (degree == 0) {
          throw ParseError("'gen' before 'degree'", lineno, first + 1);
        }
        try {
          gens.push_back(parse_permutation(value, degree));
        } catch (ParseError const& e) {
          throw ParseError(e.what(), lineno, first + 1);
        }
      } else {
        throw ParseError("unknown key '" + key + "'", lineno, first + 1);
      }
    }
    if (name.empty() || degree == 0 || !order) {
      throw ParseError("group file needs name, degree and order", lineno, 1);
    }
    Group g(degree, gens);
    if (g.order() != *order) {
      throw Error("group file '" + name + "': declared order "
                  + order->str() + " but generators give "
                  + g.order().str());
    }
    return {name, g};
  }

  GroupFile load_group_file(std::filesystem::path const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open group file " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return parse_group_file(buf.str());
    } catch (ParseError const& e) {
      throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    }
  }

  std::string write_group_file(std::string const& name, Group const& g,
                               std::vector<std::string> const& comments) {
    std::string out;
    for (auto const& c : comments) {
      out += "# " + c + "\n";
    }
    out += "name " + name + "\n";
    out += "degree " + std::to_string(g.degree()) + "\n";
    out += "order " + g.order().str() + "\n";
    for (auto const& s : g.generators()) {
      out += "gen " + to_string(s) + "\n";
    }
    return out;
  }

  std::filesystem::path default_data_dir() {
    if (char const* env = std::getenv("UTG_DATA_DIR"); env && *env) {
      return env;
    }
    return UTG_DATA_DIR;
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Groups read from data/groups.
    std::map<std::string, std::string> const& file_table() {
      static std::map<std::string, std::string> const table{
          {"M11@11", "M11_11.grp"},
          {"M11@12", "M11_12.grp"},
          {"M12", "M12.grp"},
          {"M22", "M22.grp"},
          {"M22:2", "M22_2.grp"},
          {"M23", "M23.grp"},
          {"A7@15", "A7_15.grp"},
          {"PSL(2,11)@11", "PSL2_11_11.grp"},
      };
      return table;
    }

    std::string strip_spaces(std::string_view s) {
      std::string out;
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          out += c;
        }
      }
      return out;
    }

    std::string normalise(std::string s) {
      auto replace = [&s](std::string const& from, std::string const& to) {
        for (std::size_t pos; (pos = s.find(from)) != std::string::npos;) {
          s.replace(pos, from.size(), to);
        }
      };
      replace("Γ", "Gamma");  // Greek capital gamma
      replace("Σ", "Sigma");  // Greek capital sigma
      return s;
    }

    bool parse_uint(std::string_view s, unsigned& out) {
      if (s.empty() || s.size() > 6
          || !std::all_of(s.begin(), s.end(),
                          [](unsigned char c) { return std::isdigit(c); })) {
        return false;
      }
      out = static_cast<unsigned>(std::stoul(std::string(s)));
      return true;
    }

    // "Head(x,y)" -> {"x","y"}; nested parentheses in arguments are kept.
    bool call_form(std::string const& s, std::string const& head,
                   std::vector<std::string>& args) {
      if (s.rfind(head + "(", 0) != 0 || s.back() != ')') {
        return false;
      }
      args.clear();
      std::string cur;
      int depth = 0;
      for (std::size_t i = head.size() + 1; i + 1 < s.size(); ++i) {
        char c = s[i];
        if (c == '(') {
          ++depth;
        } else if (c == ')') {
          if (--depth < 0) {
            return false;
          }
        } else if (c == ',' && depth == 0) {
          args.push_back(cur);
          cur.clear();
          continue;
        }
        cur += c;
      }
      args.push_back(cur);
      return depth == 0;
    }

    std::vector<unsigned> uint_args(std::vector<std::string> const& args,
                                    std::string const& s) {
      std::vector<unsigned> out;
      for (auto const& a : args) {
        unsigned v;
        if (!parse_uint(a, v)) {
          throw Error("bad parameter '" + a + "' in " + s);
        }
        out.push_back(v);
      }
      return out;
    }

    NamedGroup build_internal(std::string const& s,
                              std::filesystem::path const& data_dir);

    NamedGroup build_plain(std::string const& s,
                           std::filesystem::path const& data_dir) {
      std::vector<std::string> args;
      unsigned n;
      using L = ProjectiveLineExtension;
      using P = ProjectiveSpaceExtension;

      if (call_form(s, "ActionOnKSubsets", args)) {
        if (args.size() != 2 || !parse_uint(args[1], n)) {
          throw Error("usage: ActionOnKSubsets(<group>,<k>)");
        }
        auto inner = build_internal(args[0], data_dir);
        return {"ActionOnKSubsets(" + inner.name + "," + args[1] + ")",
                action_on_k_subsets(inner.group, n)};
      }

      struct OneArg {
        char const* head;
        char const* prefix;
        Group (*make)(std::size_t);
      };
      static OneArg const one_arg[] = {
          {"Sym", "S", symmetric_group},
          {"Alt", "A", alternating_group},
          {"Cyclic", "C", cyclic_group},
          {"Dihedral", "D", dihedral_group},
      };
      for (auto const& f : one_arg) {
        if (call_form(s, f.head, args)) {
          auto v = uint_args(args, s);
          if (v.size() != 1) {
            throw Error(std::string(f.head) + " takes one parameter");
          }
          return {std::string(f.prefix) + std::to_string(v[0]),
                  f.make(v[0])};
        }
        if (s.rfind(f.prefix, 0) == 0 && s.size() > 1
            && parse_uint(s.substr(1), n)) {
          return {s, f.make(n)};
        }
      }

      if (call_form(s, "AGL", args)) {
        auto v = uint_args(args, s);
        if (v.size() != 2) {
          throw Error("AGL takes two parameters");
        }
        return {s, affine_general_linear(v[0], v[1])};
      }

      struct Projective {
        char const* head;
        L line;
        P space;
      };
      static Projective const projective[] = {
          {"PSL", L::special, P::special},
          {"PGL", L::general, P::general},
          {"PSigmaL", L::semilinear, P::semilinear},
          {"PGammaL", L::full, P::full},
      };
      for (auto const& pr : projective) {
        if (call_form(s, pr.head, args)) {
          auto v = uint_args(args, s);
          if (v.size() != 2) {
            throw Error(std::string(pr.head) + " takes two parameters");
          }
          if (v[0] == 2) {
            return {s, projective_line_group(v[1], pr.line)};
          }
          return {s, projective_space_group(v[0], v[1], pr.space)};
        }
      }

      if (s == "M10") {
        return {s, projective_line_group(9, L::mathieu10)};
      }
      if (s == "PSL(2,16):2") {
        return {s, projective_line_group(16, L::frobenius_sq)};
      }
      if (s == "PSL(2,16):4") {
        return {s, projective_line_group(16, L::full)};
      }

      // p:d, a subgroup of AGL(1,p)
      if (auto colon = s.find(':'); colon != std::string::npos) {
        unsigned p, d;
        if (parse_uint(s.substr(0, colon), p)
            && parse_uint(s.substr(colon + 1), d)) {
          return {s, affine_frobenius_group(p, d)};
        }
      }
      throw Error("unknown group name '" + s + "'");
    }

    // Actions of small groups on 10 points that are not natural.
    std::map<std::string, std::string> const& alias_table() {
      static std::map<std::string, std::string> const table{
          {"A5@10", "ActionOnKSubsets(Alt(5),2)"},
          {"S5@10", "ActionOnKSubsets(Sym(5),2)"},
          {"A6@10", "PSL(2,9)"},
          {"S6@10", "PSigmaL(2,9)"},
      };
      return table;
    }

    NamedGroup build_internal(std::string const& s,
                              std::filesystem::path const& data_dir) {
      if (auto it = file_table().find(s); it != file_table().end()) {
        auto file = load_group_file(data_dir / "groups" / it->second);
        return {s, std::move(file.group)};
      }
      if (auto it = alias_table().find(s); it != alias_table().end()) {
        return {s, build_plain(it->second, data_dir).group};
      }
      auto at = s.rfind('@');
      if (at != std::string::npos && s.find('(', at) == std::string::npos) {
        unsigned d;
        if (!parse_uint(s.substr(at + 1), d)) {
          throw Error("bad degree suffix in '" + s + "'");
        }
        auto inner = build_plain(s.substr(0, at), data_dir);
        if (inner.group.degree() != d) {
          throw Error("'" + s.substr(0, at) + "' has degree "
                      + std::to_string(inner.group.degree()) + ", not "
                      + std::to_string(d));
        }
        return {s, std::move(inner.group)};
      }
      return build_plain(s, data_dir);
    }
  }  // namespace

  bool is_file_backed(std::string_view name) {
    auto s = normalise(strip_spaces(name));
    return file_table().count(s) != 0 || s.ends_with(".grp")
           || s.find('/') != std::string::npos;
  }

  NamedGroup build(std::string_view name,
                   std::filesystem::path const& data_dir) {
    std::string raw = strip_spaces(name);
    if (raw.empty()) {
      throw Error("empty group name");
    }
    if (raw.ends_with(".grp") || raw.find('/') != std::string::npos) {
      auto file = load_group_file(std::string(name));
      return {file.name, std::move(file.group)};
    }
    return build_internal(normalise(raw), data_dir);
  }

  std::vector<std::string> catalog_names() {
    std::vector<std::string> out{
        "C5",          "D5",           "AGL(1,5)",     "PSL(2,5)",
        "PGL(2,5)",    "AGL(1,7)",     "7:3",          "D7",
        "PSL(3,2)",    "PSL(2,7)",     "PGL(2,7)",     "PSL(2,8)",
        "PGammaL(2,8)", "PSL(2,9)",    "PGL(2,9)",     "PGammaL(2,9)",
        "M10",         "PSL(2,11)",    "PGL(2,11)",    "PSL(3,3)",
        "PSL(2,13)",   "PGL(2,13)",    "PSL(4,2)",     "PSL(2,16)",
        "PSL(2,16):2", "PSL(2,16):4",  "PGL(2,17)",    "PSL(3,4)",
        "PSigmaL(3,4)", "PGL(3,4)",    "PGammaL(3,4)"};
    for (auto const& [k, v] : alias_table()) {
      out.push_back(k);
    }
    for (auto const& [k, v] : file_table()) {
      out.push_back(k);
    }
    return out;
  }

  std::vector<LibraryLabel> const& library_labels() {
    // Found with RepresentativeAction against PrimitiveGroup(degree, id).
    static std::vector<LibraryLabel> const table{
        {"C5", 5, 1, "()"},
        {"D5", 5, 2, "(4 5)"},
        {"AGL(1,5)", 5, 3, "(2 4 3 5)"},
        {"PSL(2,5)", 6, 1, "()"},
        {"PGL(2,5)", 6, 2, "()"},
        {"D7", 7, 2, "(2 7 4)"},
        {"7:3", 7, 3, "(2 5 3 7)(4 6)"},
        {"AGL(1,7)", 7, 4, "(2 7 4)"},
        {"PSL(3,2)", 7, 5, "(2 3 7 4 5 6)"},
        {"PSL(2,7)", 8, 4, "(2 5 6 4 8)(3 7)"},
        {"PGL(2,7)", 8, 5, "(2 5 6 4 8)(3 7)"},
        {"PSL(2,8)", 9, 8, "(2 7 3 6 9 4 5 8)"},
        {"PGammaL(2,8)", 9, 9, "(2 7 3 6 9 4 5 8)"},
        {"A5@10", 10, 1, "()"},
        {"S5@10", 10, 2, "()"},
        {"PSL(2,9)", 10, 3, "(2 7 10)(3 4 9 6 8)"},
        {"PGL(2,9)", 10, 4, "(2 10)(3 9 8 4 7 5 6)"},
        {"S6@10", 10, 5, "(2 7 10)(3 4 9 6 8)"},
        {"M10", 10, 6, "(2 10)(3 9 8 4 7 5 6)"},
        {"PGammaL(2,9)", 10, 7, "(2 10)(3 9 8 4 7 5 6)"},
        {"PSL(2,11)@11", 11, 5, "()"},
        {"M11@11", 11, 6, "()"},
        {"M11@12", 12, 1, "()"},
        {"M12", 12, 2, "()"},
        {"PSL(2,11)", 12, 3, "(2 7 5 10 11 9 3 12)(4 6 8)"},
        {"PGL(2,11)", 12, 4, "(2 7 5 10 11 9 3 12)(4 6 8)"},
        {"PSL(3,3)", 13, 7, "(2 5 11 3 6 12 9 10 4 8)"},
        {"PSL(2,13)", 14, 1, "()"},
        {"PGL(2,13)", 14, 2, "()"},
        {"A7@15", 15, 1, "()"},
        {"PSL(4,2)", 15, 4, "()"},
        {"PSL(2,16)", 17, 6, "(2 16 7 8 5 10)(3 17 11 15 4 6 13 12)(9 14)"},
        {"PSL(2,16):2", 17, 7, "(2 16 7 8 5 10)(3 17 11 15 4 6 13 12)(9 14)"},
        {"PSL(2,16):4", 17, 8, "(2 12)(3 5 6 13 16 14 9 7 15 4 10)(8 17 11)"},
        {"PGL(2,17)", 18, 2, "()"},
        {"PSigmaL(3,4)", 21, 5,
         "(2 9 15 21 10 20 6 7 16 18)(3 14 5 4 13 11 17 19 12)"},
        {"PGL(3,4)", 21, 6,
         "(2 9 15 21 10 20 6 7 16 18)(3 14 5 4 13 11 17 19 12)"},
        {"PGammaL(3,4)", 21, 7,
         "(2 9 15 21 10 20 6 7 16 18)(3 14 5 4 13 11 17 19 12)"},
        {"M22", 22, 1, "()"},
        {"M22:2", 22, 2, "()"},
        {"M23", 23, 5, "()"},
    };
    return table;
  }

  NamedGroup build_library_labelled(std::string_view name,
                                    std::filesystem::path const& data_dir) {
    auto key = normalise(strip_spaces(name));
    for (auto const& entry : library_labels()) {
      if (entry.name == key) {
        auto built = build(entry.name, data_dir);
        auto sigma = parse_permutation(entry.relabeling, entry.degree);
        return {entry.name, relabel(built.group, sigma)};
      }
    }
    throw Error("no library labelling for '" + std::string(name) + "'");
  }

}  // namespace utg
