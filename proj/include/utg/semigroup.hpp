// Transformation semigroups generated by a group and one singular map.
//
// For a in T_n \ S_n the cone <G,a> \ G is the set of products
// g0 a g1 a ... a gm. Its rank-r idempotents (r = rank a) are exactly the
// idempotents with kernel in the G-orbit of ker a and image a transversal of
// that kernel in the G-orbit of im a: such a (K,T) pair is the kernel and
// image of some g a h, which permutes T, so a power of g a h is the
// idempotent. Conversely every cone element of rank r has its kernel and
// image in those orbits. This is cross-checked against materialized cones in
// the tests.
//
// Dense transformations are packed 4 bits per point, so everything here is
// limited to degree 16.

#ifndef UTG_SEMIGROUP_HPP_
#define UTG_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "utg/group.hpp"
#include "utg/utp.hpp"

namespace utg {

  struct SemigroupCaps {
    std::size_t closure = 5'000'000;
    std::size_t bfs = 20'000'000;
  };

  namespace detail {
    std::uint64_t pack(Transformation const& a);
    std::uint64_t pack(std::span<Point const> images);
    Transformation unpack(std::uint64_t code, std::size_t degree);
  }  // namespace detail

  // Breadth-first closure of a generating set under right multiplication by
  // the generators, in generator order.
  class ClosureResult {
   public:
    std::size_t degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return codes_.size(); }
    // Set when the cap was reached; the elements are then a prefix of the
    // breadth-first order and the set need not be closed.
    bool truncated() const noexcept { return truncated_; }

    Transformation operator[](std::size_t i) const {
      return detail::unpack(codes_[i], degree_);
    }
    std::vector<Transformation> elements() const;
    bool contains(Transformation const& x) const;
    std::optional<std::size_t> index_of(Transformation const& x) const;
    // Generator indices whose left-to-right product is element i.
    std::vector<std::size_t> word(std::size_t i) const;

   private:
    friend ClosureResult closure(std::vector<Transformation> const&,
                                 std::size_t);

    std::size_t degree_ = 0;
    bool truncated_ = false;
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint32_t> parent_;  // UINT32_MAX for generators
    std::vector<std::uint32_t> via_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
  };

  // Throws Error for an empty list, mixed degrees or cap 0, CapExceeded above
  // degree 16. Hitting the cap is not an error: see truncated().
  ClosureResult closure(std::vector<Transformation> const& generators,
                        std::size_t cap = SemigroupCaps{}.closure);

  // Elements of <G,a> \ G and of <a^g | g in G>. Throw CapExceeded when the
  // closure does not fit under cap.
  std::vector<Transformation> cone_elements(Group const& g,
                                            Transformation const& a,
                                            std::size_t cap
                                            = SemigroupCaps{}.closure);
  std::vector<Transformation> conjugate_semigroup_elements(
      Group const& g, Transformation const& a,
      std::size_t cap = SemigroupCaps{}.closure);

  // The cone with its orbit data and rank-r idempotents computed up front.
  class SemigroupCone {
   public:
    // Throws Error when a is a permutation or degrees differ.
    SemigroupCone(Group g, Transformation a);

    Group const& group() const noexcept { return group_; }
    Transformation const& generator() const noexcept { return a_; }
    std::size_t rank() const noexcept { return rank_; }
    Orbit<Partition> const& kernel_orbit() const noexcept { return kernels_; }
    Orbit<PointSet> const& image_orbit() const noexcept { return images_; }
    // In kernel-orbit order, then image-orbit order.
    std::vector<Transformation> const& idempotents() const noexcept {
      return idempotents_;
    }

   private:
    Group group_;
    Transformation a_;
    std::size_t rank_;
    Orbit<Partition> kernels_;
    Orbit<PointSet> images_;
    std::vector<Transformation> idempotents_;
  };

  std::vector<Transformation> idempotents_of_rank(Group const& g,
                                                  Transformation const& a);

  // Elements of <E> with a fixed kernel and the common rank r of E. A product
  // keeps rank r only if every prefix does, and then its kernel is that of
  // its first factor, so the search starts at the members of E with the
  // given kernel and multiplies on the right by E while the rank stays r.
  class RankPreservingSearch {
   public:
    // E must be non-empty idempotents of one rank; throws Error otherwise.
    RankPreservingSearch(std::vector<Transformation> idempotents,
                         Partition kernel, std::size_t cap
                                           = SemigroupCaps{}.bfs);

    // Breadth-first until every target is reached or the state space is
    // exhausted. Throws CapExceeded past the cap. Returns the number of
    // targets reached.
    std::size_t explore(std::vector<Transformation> const& targets = {});
    bool reached(Transformation const& x) const;
    // Indices into E whose product is x; empty when x was not reached.
    std::vector<std::size_t> factorization(Transformation const& x) const;
    std::size_t states() const noexcept { return codes_.size(); }
    std::vector<Transformation> const& idempotents() const noexcept {
      return e_;
    }

   private:
    std::uint64_t encode(Transformation const& x) const;
    Transformation decode(std::uint64_t tuple) const;
    std::vector<std::uint32_t> const& moves(std::uint64_t image_mask);

    std::vector<Transformation> e_;
    Partition kernel_;
    std::size_t cap_;
    std::size_t n_;
    std::size_t r_;
    std::vector<Point> class_rep_;  // least point of each class
    // E grouped by kernel.
    std::vector<std::vector<std::uint64_t>> group_masks_;
    std::vector<std::vector<std::uint32_t>> group_members_;
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> moves_;
    // Tuples: the image of each class of the kernel, 4 bits each.
    std::vector<std::uint64_t> codes_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> via_;
    std::unordered_map<std::uint64_t, std::uint32_t> index_;
    std::size_t done_ = 0;
    bool started_ = false;
  };

  struct MembershipResult {
    bool member = false;
    std::vector<std::size_t> factors;  // indices into E
    std::size_t states = 0;
  };

  // Decides target in <E> for idempotents E of the target's rank.
  MembershipResult rank_preserving_membership(
      Transformation const& target, std::vector<Transformation> const& E,
      std::size_t cap = SemigroupCaps{}.bfs);

  struct ConeVerdict {
    bool holds = true;
    // For idempotent generation: an element of aG outside <E>. For
    // regularity: a cone element that is not regular in the cone.
    std::optional<Transformation> witness;
    std::size_t idempotents = 0;
    std::size_t states = 0;
  };

  // <G,a> \ G is idempotent generated iff aG lies in <E>: g1 a g2 is the
  // conjugate of a g2 g1 by g1^-1 and <E> is closed under conjugation by G.
  ConeVerdict is_idempotent_generated_cone(Group const& g,
                                           Transformation const& a,
                                           SemigroupCaps const& caps = {});
  // Same, for several maps sharing kernel and image orbits with `a`: one
  // search serves all of them. All of `maps` must have the kernel of a.
  std::vector<ConeVerdict> is_idempotent_generated_cone(
      Group const& g, Transformation const& a,
      std::vector<Transformation> const& maps,
      SemigroupCaps const& caps = {});

  // Brute force: some v in the closure of the generators with b v b = b.
  // Throws Error when b is not in the closure.
  bool is_regular_element(Transformation const& b,
                          std::vector<Transformation> const& generators,
                          std::size_t cap = SemigroupCaps{}.closure);

  // Every element of the cone is regular in the cone. Since b is regular
  // exactly when g b h is, it suffices to look at the products
  // w = a g1 a ... a (one per class map into im a). A w with K_G(w)
  // non-empty is regular in <G,w>; K_G depends only on the orbits of ker w
  // and im w, so when no pair of orbits up to rank a fails the answer is
  // immediate. Otherwise w is regular iff rank(w u w) = rank(w) for some
  // cone element u, which is decided per pair of orbits of ker w and im w.
  // The witness is a non-regular element.
  ConeVerdict is_regular_cone(Group const& g, Transformation const& a,
                              SemigroupCaps const& caps = {});
  // With a property check already done for set sizes up to at least rank a.
  ConeVerdict is_regular_cone(Group const& g, Transformation const& a,
                              UtpVerdict const& known,
                              SemigroupCaps const& caps = {});
  // Oracle on the materialized cone: every b has some v in the cone with
  // b v b = b.
  bool regular_cone_by_closure(Group const& g, Transformation const& a,
                               std::size_t cap = SemigroupCaps{}.closure);

  bool idempotent_sets_agree(Group const& g, Transformation const& a,
                             std::size_t cap = SemigroupCaps{}.closure);

}  // namespace utg

#endif  // UTG_SEMIGROUP_HPP_
