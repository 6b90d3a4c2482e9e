#include "utg/utp.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <thread>
#include <unordered_set>

#include "utg/catalog.hpp"
#include "utg/finite_field.hpp"

namespace utg {

  namespace detail {

    std::uint64_t move_mask(std::uint64_t m, Permutation const& g) {
      std::uint64_t out = 0;
      while (m != 0) {
        int i = std::countr_zero(m);
        m &= m - 1;
        out |= std::uint64_t(1) << g[i];
      }
      return out;
    }

    std::vector<std::vector<std::uint64_t>> subset_orbits(Group const& g,
                                                          std::size_t k) {
      std::size_t const n = g.degree();
      std::vector<std::vector<std::uint64_t>> out;
      if (k > n) {
        return out;
      }
      std::vector<char> seen_small;
      std::unordered_set<std::uint64_t> seen_large;
      bool const small = n <= 24;
      if (small) {
        seen_small.assign(std::size_t(1) << n, 0);
      }
      auto mark = [&](std::uint64_t m) {
        if (small) {
          return std::exchange(seen_small[m], 1) == 0;
        }
        return seen_large.insert(m).second;
      };
      auto const& gens = g.generators();
      std::uint64_t const top
          = n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << n) - 1;
      std::uint64_t m = k == 0 ? 0 : (std::uint64_t(1) << k) - 1;
      while (true) {
        if (mark(m)) {
          std::vector<std::uint64_t> orb{m};
          for (std::size_t i = 0; i < orb.size(); ++i) {
            for (auto const& s : gens) {
              auto y = move_mask(orb[i], s);
              if (mark(y)) {
                orb.push_back(y);
              }
            }
          }
          out.push_back(std::move(orb));
        }
        // Gosper's hack: next mask with the same popcount.
        if (k == 0) {
          break;
        }
        std::uint64_t c = m & (~m + 1);
        std::uint64_t r = m + c;
        if (r == 0 || (r & ~top) != 0) {
          break;
        }
        std::uint64_t next = (((r ^ m) >> 2) / c) | r;
        if ((next & ~top) != 0) {
          break;
        }
        m = next;
      }
      return out;
    }

    namespace {
      // Restricted-growth strings with exactly k classes, in lex order.
      void for_each_rgs(std::size_t n, std::size_t k,
                        std::function<void(std::vector<Point> const&)> const& f) {
        if (n == 0 || k == 0 || k > n) {
          return;
        }
        std::vector<Point> rgs(n, 0);
        std::function<void(std::size_t, std::size_t)> rec
            = [&](std::size_t pos, std::size_t used) {
                if (pos == n) {
                  if (used == k) {
                    f(rgs);
                  }
                  return;
                }
                std::size_t const hi = std::min(used, k - 1);
                for (std::size_t v = 0; v <= hi; ++v) {
                  std::size_t now = std::max(used, v + 1);
                  if (n - pos - 1 < k - now) {
                    continue;
                  }
                  rgs[pos] = static_cast<Point>(v);
                  rec(pos + 1, now);
                }
              };
        rec(1, 1);
      }

      // Partitions of at most 16 points packed four bits per point.
      std::uint64_t pack(std::span<Point const> labels) {
        std::uint64_t c = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
          c |= std::uint64_t(labels[i]) << (4 * i);
        }
        return c;
      }

      std::uint64_t move_packed(std::uint64_t code, std::size_t n,
                                Permutation const& g) {
        Point moved[16];
        for (std::size_t i = 0; i < n; ++i) {
          moved[g[i]] = static_cast<Point>((code >> (4 * i)) & 0xF);
        }
        Point relabel[16];
        std::fill(relabel, relabel + 16, Point(0xFF));
        Point next = 0;
        std::uint64_t out = 0;
        for (std::size_t i = 0; i < n; ++i) {
          Point& l = relabel[moved[i]];
          if (l == 0xFF) {
            l = next++;
          }
          out |= std::uint64_t(l) << (4 * i);
        }
        return out;
      }
    }  // namespace

    std::vector<Partition> partition_orbit_reps(Group const& g,
                                                std::size_t k) {
      std::size_t const n = g.degree();
      std::vector<Partition> reps;
      auto const& gens = g.generators();
      if (n <= 16) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> queue;
        for_each_rgs(n, k, [&](std::vector<Point> const& rgs) {
          auto c = pack(rgs);
          if (!seen.insert(c).second) {
            return;
          }
          reps.emplace_back(rgs);
          queue.assign(1, c);
          for (std::size_t i = 0; i < queue.size(); ++i) {
            for (auto const& s : gens) {
              auto y = move_packed(queue[i], n, s);
              if (seen.insert(y).second) {
                queue.push_back(y);
              }
            }
          }
        });
        return reps;
      }
      std::unordered_set<Partition> seen;
      for_each_rgs(n, k, [&](std::vector<Point> const& rgs) {
        Partition p(rgs);
        if (seen.count(p) != 0) {
          return;
        }
        reps.push_back(p);
        seen.insert(p);
        std::vector<Partition> queue{p};
        for (std::size_t i = 0; i < queue.size(); ++i) {
          for (auto const& s : gens) {
            auto y = move_partition(queue[i], s);
            if (seen.insert(y).second) {
              queue.push_back(std::move(y));
            }
          }
        }
      });
      return reps;
    }

  }  // namespace detail

  using detail::move_mask;

  ////////////////////////////////////////////////////////////////////////
  // has_utp
  ////////////////////////////////////////////////////////////////////////

  UtpVerdict has_utp(Group const& g, UtpOptions const& options) {
    std::size_t const n = g.degree();
    if (n > options.degree_cap || n > 16) {
      throw CapExceeded("universal transversal check refused at degree "
                        + std::to_string(n) + " (cap "
                        + std::to_string(std::min<std::size_t>(
                            options.degree_cap, 16))
                        + ")");
    }
    UtpVerdict verdict;
    std::size_t const top
        = options.max_size == 0 ? n - 1 : std::min(options.max_size, n - 1);
    verdict.largest_size = top;
    for (std::size_t k = 2; k <= top; ++k) {
      auto orbits = detail::subset_orbits(g, k);
      auto reps = detail::partition_orbit_reps(g, k);
      verdict.subset_orbits += orbits.size();
      verdict.partition_orbits += reps.size();

      std::size_t const none = std::numeric_limits<std::size_t>::max();
      std::atomic<std::size_t> first_fail{none};
      std::atomic<std::size_t> next{0};
      std::atomic<std::size_t> pairs{0};
      // Index of a failing pair: partition index * #orbits + orbit index.
      auto work = [&] {
        std::size_t local_pairs = 0;
        for (std::size_t i; (i = next.fetch_add(1)) < reps.size();) {
          if (i * orbits.size() >= first_fail.load()) {
            break;
          }
          auto classes = reps[i].class_masks();
          for (std::size_t j = 0; j < orbits.size(); ++j) {
            ++local_pairs;
            bool found = std::any_of(
                orbits[j].begin(), orbits[j].end(),
                [&](std::uint64_t m) { return is_transversal(m, classes); });
            if (!found) {
              std::size_t idx = i * orbits.size() + j;
              std::size_t cur = first_fail.load();
              while (idx < cur && !first_fail.compare_exchange_weak(cur, idx)) {
              }
              break;
            }
          }
        }
        pairs += local_pairs;
      };
      std::size_t const workers
          = std::max<std::size_t>(1, std::min(options.workers, reps.size()));
      if (workers == 1) {
        work();
      } else {
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
          pool.emplace_back(work);
        }
      }
      verdict.pairs_checked += pairs.load();
      if (first_fail.load() != none) {
        std::size_t idx = first_fail.load();
        verdict.holds = false;
        verdict.largest_size = k;
        verdict.witness = TransversalWitness{
            PointSet(n, orbits[idx % orbits.size()].front()),
            reps[idx / orbits.size()]};
        return verdict;
      }
    }
    return verdict;
  }

  ////////////////////////////////////////////////////////////////////////
  // verify_witness
  ////////////////////////////////////////////////////////////////////////

  bool verify_witness(Group const& g, PointSet const& s, Partition const& p) {
    if (s.degree() != g.degree() || p.degree() != g.degree()) {
      throw Error("witness degree differs from the group degree");
    }
    if (s.size() != p.num_classes()) {
      throw Error("witness set has " + std::to_string(s.size())
                  + " points but the partition has "
                  + std::to_string(p.num_classes()) + " classes");
    }
    auto const classes = p.class_masks();
    if (is_transversal(s.mask(), classes)) {
      return false;
    }
    auto const& gens = g.generators();
    // Sg is a transversal of P iff S is a transversal of P g^-1, so either
    // orbit settles the question; grow both and stop with the first to close.
    std::vector<std::uint64_t> sets{s.mask()};
    std::unordered_set<std::uint64_t> set_seen{s.mask()};
    std::vector<Partition> parts{p};
    std::unordered_set<Partition> part_seen{p};
    std::size_t si = 0, pi = 0;
    while (true) {
      if (si == sets.size()) {
        return true;
      }
      for (auto const& x : gens) {
        auto y = move_mask(sets[si], x);
        if (set_seen.insert(y).second) {
          if (is_transversal(y, classes)) {
            return false;
          }
          sets.push_back(y);
        }
      }
      ++si;
      if (pi == parts.size()) {
        return true;
      }
      for (auto const& x : gens) {
        auto q = move_partition(parts[pi], x);
        if (part_seen.insert(q).second) {
          if (is_transversal(s, q)) {
            return false;
          }
          parts.push_back(std::move(q));
        }
      }
      ++pi;
    }
  }

  std::optional<Permutation> kg_member(Group const& g,
                                       Transformation const& a) {
    if (a.degree() != g.degree()) {
      throw Error("transformation degree differs from the group degree");
    }
    auto ker = kernel(a);
    auto orb = orbit(g, image(a));
    auto classes = ker.class_masks();
    for (std::size_t i = 0; i < orb.size(); ++i) {
      if (is_transversal(orb[i].mask(), classes)) {
        return orb.witness(i);
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting bounds
  ////////////////////////////////////////////////////////////////////////

  std::optional<unsigned> singular_bound_failure(std::size_t n,
                                                 BigInt const& order) {
    for (unsigned r = 1; r + 1 <= n; ++r) {
      if (order * (r + 1) < binomial(static_cast<unsigned>(n), r)) {
        return r;
      }
    }
    return std::nullopt;
  }

  namespace {
    BigInt isqrt(BigInt const& x) {
      return boost::multiprecision::sqrt(x);
    }

    // floor(b sqrt(n)) for b = 2^j.
    unsigned scaled_sqrt_floor(unsigned n, unsigned j) {
      BigInt b = BigInt(1) << j;
      return static_cast<unsigned>(isqrt(BigInt(n) * b * b));
    }

    int sign(BigInt const& x) {
      return x > 0 ? 1 : (x < 0 ? -1 : 0);
    }
  }  // namespace

  int compare_pow_sqrt(unsigned n, BigInt const& num, BigInt const& den) {
    if (den <= 0) {
      throw Error("compare_pow_sqrt needs a positive denominator");
    }
    if (num <= 0) {
      return 1;
    }
    unsigned s = static_cast<unsigned>(isqrt(BigInt(n)));
    if (s * s == n) {
      return sign(power(BigInt(n), s) * den - num);
    }
    // sqrt(n) is irrational, so a/b < sqrt(n) < (a+1)/b with a = floor(b
    // sqrt(n)), and n^(a/b) * den >= num or n^((a+1)/b) * den <= num
    // decides the sign. Raise both sides to the power b.
    for (unsigned j = 0; j <= 16; ++j) {
      unsigned b = 1u << j;
      unsigned a = scaled_sqrt_floor(n, j);
      BigInt den_b = power(den, b);
      BigInt num_b = power(num, b);
      if (power(BigInt(n), a) * den_b >= num_b) {
        return 1;
      }
      if (power(BigInt(n), a + 1) * den_b <= num_b) {
        return -1;
      }
    }
    throw Error("comparison with " + std::to_string(n)
                + "^sqrt(n) not decided at exponent precision 2^-16");
  }

  bool maroti_gate(std::size_t n, BigInt const& order) {
    return compare_pow_sqrt(static_cast<unsigned>(n), order, 50) > 0;
  }

  bool Degree47Report::all_hold() const {
    auto ok = [](InequalityRow const& r) { return r.holds; };
    return std::all_of(even.begin(), even.end(), ok)
           && std::all_of(odd.begin(), odd.end(), ok) && step_at_46;
  }

  Degree47Report degree47_inequalities() {
    Degree47Report rep;
    // 50 n^sqrt(n) (r+1) < C(n, r)  <=>  n^sqrt(n) * 50(r+1) - C(n,r) < 0
    for (unsigned r = 24; r <= 46; ++r) {
      unsigned n = 2 * r;
      rep.even.push_back(
          {r, n, compare_pow_sqrt(n, binomial(n, r), BigInt(50) * (r + 1)) < 0});
    }
    for (unsigned r = 23; r <= 46; ++r) {
      unsigned n = 2 * r + 1;
      rep.odd.push_back(
          {r, n, compare_pow_sqrt(n, binomial(n, r), BigInt(50) * (r + 1)) < 0});
    }
    // m^sqrt(m) (r+1) < (2r+1) n^sqrt(n) with m = 2r+2, n = 2r, r = 46:
    // true once an upper bound of the left side is below a lower bound of
    // the right side; false once the reverse holds.
    unsigned const r = 46, m = 2 * r + 2, n = 2 * r;
    rep.step_at_46 = false;
    for (unsigned j = 0; j <= 16; ++j) {
      unsigned b = 1u << j;
      unsigned am = scaled_sqrt_floor(m, j);
      unsigned an = scaled_sqrt_floor(n, j);
      BigInt lhs_hi = power(BigInt(m), am + 1) * power(BigInt(r + 1), b);
      BigInt lhs_lo = power(BigInt(m), am) * power(BigInt(r + 1), b);
      BigInt rhs_lo = power(BigInt(2 * r + 1), b) * power(BigInt(n), an);
      BigInt rhs_hi = power(BigInt(2 * r + 1), b) * power(BigInt(n), an + 1);
      if (lhs_hi < rhs_lo) {
        rep.step_at_46 = true;
        break;
      }
      if (lhs_lo >= rhs_hi) {
        break;
      }
    }
    return rep;
  }

  ////////////////////////////////////////////////////////////////////////
  // Affine witnesses
  ////////////////////////////////////////////////////////////////////////

  AffineWitness affine_witness(unsigned p, unsigned k) {
    if (!is_prime(p) || k == 0) {
      throw Error("affine_witness needs a prime p and k >= 1");
    }
    std::size_t n = 1;
    for (unsigned i = 0; i < k; ++i) {
      n *= p;
      if (n > 64) {
        break;
      }
    }
    if (n <= 4 || n > 64 || (k == 1 && (p == 5 || p == 7))) {
      throw Error("no affine witness for p=" + std::to_string(p)
                  + ", k=" + std::to_string(k)
                  + " (needs 4 < p^k <= 64, not AGL(1,5) or AGL(1,7))");
    }
    // Coordinates (c1,...,ck) to 0-based point index.
    auto pt = [&](std::vector<unsigned> c) {
      c.resize(k, 0);
      std::size_t x = 0;
      for (auto v : c) {
        x = x * p + v;
      }
      return static_cast<Point>(x);
    };
    auto basis = [&](unsigned i) {
      std::vector<unsigned> c(k, 0);
      c[i] = 1;
      return c;
    };
    auto add = [&](std::vector<unsigned> a, std::vector<unsigned> const& b) {
      for (unsigned i = 0; i < k; ++i) {
        a[i] = (a[i] + b[i]) % p;
      }
      return a;
    };
    std::vector<unsigned> const zero(k, 0);
    auto singletons_and_rest = [&](std::vector<Point> const& singles) {
      std::vector<PointSet> classes;
      std::uint64_t rest = n == 64 ? ~std::uint64_t(0)
                                   : (std::uint64_t(1) << n) - 1;
      for (Point x : singles) {
        classes.push_back(PointSet::from_points(n, {x}));
        rest &= ~(std::uint64_t(1) << x);
      }
      classes.emplace_back(n, rest);
      return Partition::from_classes(n, classes);
    };

    AffineWitness w{p, k, {}, {}, {}};
    if (p == 2 && k == 3) {
      w.set = PointSet::from_points(n, {0, 1, 2, 3});
      w.partition = Partition::from_classes(
          n, {PointSet::from_points(n, {0, 1}),
              PointSet::from_points(n, {2, 3, 4, 5}),
              PointSet::from_points(n, {6}), PointSet::from_points(n, {7})});
      w.construction = "AGL(3,2): four points of a plane against a partition"
                       " with two singletons";
    } else if (p == 3 && k == 2) {
      w.set = PointSet::from_points(n, {0, 1, 2});
      w.partition = Partition::from_classes(
          n, {PointSet::from_points(n, {0}),
              PointSet::from_points(n, {1, 2, 5, 7}),
              PointSet::from_points(n, {3, 4, 6, 8})});
      w.construction = "AGL(2,3): a line against a three-class partition";
    } else if (k == 1) {
      w.set = PointSet::from_points(n, {0, 1, 3, 4});
      w.partition = singletons_and_rest({0, 1, 2});
      w.construction = "k=1, p>=11: {0,1,3,4} has no three-term progression"
                       " that a transversal of {0},{1},{2},rest needs";
    } else if (p >= 5) {
      auto b1 = basis(0), b2 = basis(1);
      auto b1x2 = add(b1, b1);
      w.set = PointSet::from_points(
          n, {pt(zero), pt(b1), pt(b1x2), pt(add(b1x2, b1))});
      w.partition = singletons_and_rest({pt(zero), pt(b1), pt(b2)});
      w.construction = "p>=5, k>=2: four collinear points against three"
                       " non-collinear singletons";
    } else {
      auto b1 = basis(0), b2 = basis(1), b3 = basis(2);
      std::vector<unsigned> fifth
          = p == 2 ? basis(3) : add(add(b1, b2), b3);
      w.set = PointSet::from_points(
          n, {pt(zero), pt(b1), pt(b2), pt(b3), pt(fifth)});
      w.partition = singletons_and_rest(
          {pt(zero), pt(b1), pt(b2), pt(add(b1, b2))});
      w.construction = "p in {2,3}: five points with no four coplanar against"
                       " four coplanar singletons";
    }
    if (!verify_witness(affine_general_linear(k, p), w.set, w.partition)) {
      throw Error("affine witness for p=" + std::to_string(p) + ", k="
                  + std::to_string(k) + " does not verify");
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Synchronization
  ////////////////////////////////////////////////////////////////////////

  SyncVerdict is_synchronizing(Group const& g, std::size_t degree_cap) {
    std::size_t const n = g.degree();
    if (n > degree_cap || n > 16) {
      throw CapExceeded("synchronization check refused at degree "
                        + std::to_string(n) + " (cap "
                        + std::to_string(degree_cap) + ")");
    }
    SyncVerdict verdict;
    for (std::size_t k = 2; k + 1 <= n; ++k) {
      auto orbits = detail::subset_orbits(g, k);
      for (auto const& rep : detail::partition_orbit_reps(g, k)) {
        auto classes = rep.class_masks();
        for (auto const& orb : orbits) {
          bool all = std::all_of(orb.begin(), orb.end(), [&](std::uint64_t m) {
            return is_transversal(m, classes);
          });
          if (all) {
            verdict.holds = false;
            verdict.witness = TransversalWitness{PointSet(n, orb.front()), rep};
            return verdict;
          }
        }
      }
    }
    return verdict;
  }

}  // namespace utg
