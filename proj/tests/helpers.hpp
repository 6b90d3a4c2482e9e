// Test-only generators and brute-force oracles. Nothing here calls into the
// stabilizer chain or the semigroup engine.

#ifndef UTG_TESTS_HELPERS_HPP_
#define UTG_TESTS_HELPERS_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "utg/core.hpp"

namespace utg::test {

  inline Transformation random_transformation(std::size_t n,
                                              std::mt19937& rng) {
    std::vector<Point> img(n);
    for (auto& x : img) {
      x = static_cast<Point>(rng() % n);
    }
    return Transformation(img);
  }

  inline Permutation random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<Point> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(img);
  }

  inline std::vector<Transformation> all_transformations(std::size_t n) {
    std::vector<Transformation> out;
    std::vector<Point> img(n, 0);
    while (true) {
      out.emplace_back(img);
      std::size_t i = 0;
      while (i < n && ++img[i] == n) {
        img[i] = 0;
        ++i;
      }
      if (i == n) {
        break;
      }
    }
    return out;
  }

  // Closure of a set of permutations by repeated multiplication.
  inline std::vector<Permutation>
  brute_force_group(std::size_t n, std::vector<Permutation> const& gens) {
    std::set<Permutation> seen{Permutation::identity(n)};
    std::vector<Permutation> frontier{Permutation::identity(n)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto const& x : frontier) {
        for (auto const& s : gens) {
          auto y = compose(x, s);
          if (seen.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
  }

  // Closure of a set of transformations under right multiplication.
  inline std::unordered_set<Transformation>
  brute_force_semigroup(std::vector<Transformation> const& gens) {
    std::unordered_set<Transformation> seen(gens.begin(), gens.end());
    std::vector<Transformation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<Transformation> next;
      for (auto const& x : frontier) {
        for (auto const& s : gens) {
          auto y = compose(x, s);
          if (seen.insert(y).second) {
            next.push_back(y);
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  inline std::vector<PointSet> all_subsets(std::size_t n, std::size_t k) {
    std::vector<PointSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t(1) << n); ++m) {
      if (static_cast<std::size_t>(std::popcount(m)) == k) {
        out.emplace_back(n, m);
      }
    }
    return out;
  }

  // Every set partition of {1..n}, via restricted growth strings.
  inline std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<Point> rgs(n, 0);
    std::vector<Point> mx(n, 0);
    while (true) {
      out.emplace_back(rgs);
      std::ptrdiff_t i = static_cast<std::ptrdiff_t>(n) - 1;
      while (i > 0 && rgs[i] > mx[i - 1]) {
        --i;
      }
      if (i <= 0) {
        break;
      }
      ++rgs[i];
      mx[i] = std::max(mx[i - 1], rgs[i]);
      for (std::size_t j = i + 1; j < n; ++j) {
        rgs[j] = 0;
        mx[j] = mx[i];
      }
    }
    return out;
  }

  inline std::vector<Transformation> singular_maps(std::size_t n) {
    auto all = all_transformations(n);
    std::erase_if(all, [](Transformation const& x) {
      return x.is_permutation();
    });
    return all;
  }

  // <G,a> \ G by plain closure, sorted.
  inline std::vector<Transformation>
  brute_cone(std::vector<Permutation> const& gens, Transformation const& a) {
    std::vector<Transformation> ys{a};
    for (auto const& g : gens) {
      ys.push_back(g.as_transformation());
    }
    std::vector<Transformation> out;
    for (auto const& x : brute_force_semigroup(ys)) {
      if (!x.is_permutation()) {
        out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline std::vector<Transformation>
  idempotents_in(std::vector<Transformation> const& xs, std::size_t rank = 0) {
    std::vector<Transformation> out;
    for (auto const& x : xs) {
      if (x.is_idempotent() && (rank == 0 || x.rank() == rank)) {
        out.push_back(x);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

}  // namespace utg::test

#endif  // UTG_TESTS_HELPERS_HPP_
