// The universal transversal property and the checks around it.
//
// G has the property when for every k-subset I and every partition P with k
// classes some image I g is a transversal of P. Since I g is a transversal
// of P exactly when I g h is a transversal of P h, it is enough to test one
// representative per G-orbit of partitions against every G-orbit of
// k-subsets. Representatives are lexicographically least: least bitmask for
// sets, least restricted-growth string for partitions.

#ifndef UTG_UTP_HPP_
#define UTG_UTP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "utg/bigint.hpp"
#include "utg/group.hpp"

namespace utg {

  struct TransversalWitness {
    PointSet set;
    Partition partition;
  };

  struct UtpVerdict {
    bool holds = true;
    // On failure: no element of the orbit of `set` is a transversal of
    // `partition`.
    std::optional<TransversalWitness> witness;
    std::size_t subset_orbits = 0;
    std::size_t partition_orbits = 0;
    std::size_t pairs_checked = 0;
    // Largest set size examined.
    std::size_t largest_size = 0;
  };

  struct UtpOptions {
    std::size_t degree_cap = 12;
    std::size_t workers = 1;
    // Only sets of size <= max_size are examined (0: no bound). Sizes are
    // taken in increasing order, so a witness always has the least failing
    // size.
    std::size_t max_size = 0;
  };

  // Throws CapExceeded when the degree is above options.degree_cap (hard
  // limit 16).
  UtpVerdict has_utp(Group const& g, UtpOptions const& options = {});

  // True iff no element of the orbit of s is a transversal of p, i.e. the
  // pair refutes the property. Enumerates whichever of the two orbits (of s,
  // or of p) closes first. Throws Error if |s| differs from the number of
  // classes of p.
  bool verify_witness(Group const& g, PointSet const& s, Partition const& p);

  // Some g with rank(a g a) = rank(a), equivalently (im a) g a transversal
  // of ker a; nullopt when there is none.
  std::optional<Permutation> kg_member(Group const& g, Transformation const& a);
  inline bool kg_nonempty(Group const& g, Transformation const& a) {
    return kg_member(g, a).has_value();
  }

  // |G|(r+1) >= C(n,r) for r = 1..n-1. Returns the first r where the
  // inequality fails, or nullopt.
  std::optional<unsigned> singular_bound_failure(std::size_t n,
                                                 BigInt const& order);
  inline bool singular_bound_holds(Group const& g) {
    return !singular_bound_failure(g.degree(), g.order());
  }

  // Exact sign of n^sqrt(n) * den - num for n >= 1, den > 0. Exponent bounds
  // are refined through dyadic rationals a/2^j until the comparison is
  // decided; throws Error if it is not decided by j = 16.
  int compare_pow_sqrt(unsigned n, BigInt const& num, BigInt const& den);

  // |G| < 50 n^sqrt(n), decided exactly.
  bool maroti_gate(std::size_t n, BigInt const& order);

  struct InequalityRow {
    unsigned r;
    unsigned n;
    bool holds;
  };

  struct Degree47Report {
    // 50 (2r)^sqrt(2r) (r+1) < C(2r, r), r = 24..46
    std::vector<InequalityRow> even;
    // 50 (2r+1)^sqrt(2r+1) (r+1) < C(2r+1, r), r = 23..46
    std::vector<InequalityRow> odd;
    // (2r+2)^sqrt(2r+2) / (2r)^sqrt(2r) < (2r+1)/(r+1) at r = 46
    bool step_at_46 = false;

    bool all_hold() const;
  };

  Degree47Report degree47_inequalities();

  struct AffineWitness {
    unsigned p;
    unsigned k;
    PointSet set;
    Partition partition;
    std::string construction;
  };

  // Vector (c1,...,ck) over GF(p) is point 1 + sum ci p^(k-i). Requires
  // 4 < p^k <= 64 and (p,k) not (5,1) or (7,1). The pair is checked with
  // verify_witness against AGL(k,p) before it is returned.
  AffineWitness affine_witness(unsigned p, unsigned k);

  struct SyncVerdict {
    bool holds = true;
    // On failure: every image of `set` under G is a transversal of the
    // non-trivial `partition`.
    std::optional<TransversalWitness> witness;
  };

  // For every non-trivial partition P and every transversal S of P some
  // image S g is not a transversal of P. Throws CapExceeded above degree_cap.
  SyncVerdict is_synchronizing(Group const& g, std::size_t degree_cap = 10);

  namespace detail {
    std::uint64_t move_mask(std::uint64_t m, Permutation const& g);
    // Orbits of k-subsets as bitmask lists, orbits ordered by least member,
    // each list starting with that member.
    std::vector<std::vector<std::uint64_t>> subset_orbits(Group const& g,
                                                          std::size_t k);
    // Orbit representatives of partitions with k classes, increasing.
    std::vector<Partition> partition_orbit_reps(Group const& g,
                                                std::size_t k);
  }  // namespace detail

}  // namespace utg

#endif  // UTG_UTP_HPP_
