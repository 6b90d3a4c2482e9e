// Permutation groups given by generators.
//
// A Group owns its generator list and a stabilizer chain (base and strong
// generating set) built by deterministic Schreier-Sims the first time order,
// membership or enumeration is asked for. Base points are taken in
// increasing numeric order. After the chain exists a Group is read-only and
// may be shared between threads.

#ifndef UTG_GROUP_HPP_
#define UTG_GROUP_HPP_

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "utg/bigint.hpp"
#include "utg/core.hpp"

namespace utg {

  class StabChain;

  class Group {
   public:
    Group(std::size_t degree, std::vector<Permutation> generators);

    static Group trivial(std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    // Non-identity, duplicate-free, in the order given.
    std::vector<Permutation> const& generators() const noexcept {
      return gens_;
    }

    BigInt order() const;
    bool contains(Permutation const& g) const;
    std::vector<Point> base() const;

    // All elements in a fixed order (identity first). Throws CapExceeded if
    // the order exceeds cap.
    std::vector<Permutation> elements(std::size_t cap = 2'000'000) const;

    // Set when this group was produced by setwise_stabilizer.
    std::optional<PointSet> const& stabilized_set() const noexcept {
      return stabilized_;
    }
    std::vector<Permutation> const& parent_generators() const noexcept {
      return parent_gens_;
    }

    // Same generator list (not just the same group).
    bool same_generators(Group const& other) const {
      return degree_ == other.degree_ && gens_ == other.gens_;
    }

   private:
    friend Group setwise_stabilizer(Group const&, PointSet const&);

    StabChain const& chain() const;

    std::size_t degree_;
    std::vector<Permutation> gens_;
    std::optional<PointSet> stabilized_;
    std::vector<Permutation> parent_gens_;

    struct Lazy {
      std::once_flag once;
      std::unique_ptr<StabChain> chain;
    };
    std::shared_ptr<Lazy> lazy_;
  };

  // Stabilizer chain. Exposed for tests and for callers that sift directly.
  class StabChain {
   public:
    struct Level {
      Point base;
      std::vector<Permutation> gens;
      std::vector<int> orbit_index;  // per point, -1 when outside the orbit
      std::vector<Point> orbit;
      std::vector<Permutation> transversal;
      std::vector<Permutation> transversal_inv;
    };

    StabChain(std::size_t degree, std::vector<Permutation> const& gens);

    std::size_t degree() const noexcept { return degree_; }
    std::vector<Level> const& levels() const noexcept { return levels_; }
    BigInt order() const;
    bool contains(Permutation const& g) const;

    // Strips g through levels from `from` on. Returns the residue and the
    // level at which sifting stopped (levels().size() when it got through).
    std::pair<Permutation, std::size_t> sift(Permutation g,
                                             std::size_t from = 0) const;

   private:
    void add_level(Point base);
    void rebuild_orbit(std::size_t level);
    void schreier_sims();

    std::size_t degree_;
    std::vector<Level> levels_;
  };

  // An orbit under the group generators, with the Schreier tree that maps the
  // seed to every element. Elements are in breadth-first discovery order,
  // generators applied in listed order.
  template <typename T>
  class Orbit {
   public:
    Orbit(std::size_t degree, std::vector<Permutation> gens, T seed);

    std::size_t size() const noexcept { return elements_.size(); }
    std::vector<T> const& elements() const noexcept { return elements_; }
    T const& operator[](std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index_of(T const& x) const;
    bool contains(T const& x) const { return index_.count(x) != 0; }

    // w with seed * w == elements()[i].
    Permutation witness(std::size_t i) const;
    std::vector<Permutation> schreier_generators() const;

   private:
    std::size_t degree_;
    std::vector<Permutation> gens_;
    std::vector<T> elements_;
    std::vector<std::ptrdiff_t> parent_;
    std::vector<std::size_t> via_;
    std::unordered_map<T, std::size_t> index_;
  };

  extern template class Orbit<Point>;
  extern template class Orbit<PointSet>;
  extern template class Orbit<Partition>;

  Orbit<Point> orbit(Group const& g, Point seed);
  Orbit<PointSet> orbit(Group const& g, PointSet const& seed);
  Orbit<Partition> orbit(Group const& g, Partition const& seed);

  Group setwise_stabilizer(Group const& g, PointSet const& gamma);
  // (G_gamma)^gamma on points 1..|gamma|, the i-th point being the i-th
  // smallest element of gamma. Duplicate restrictions are dropped.
  Group induced_action(Group const& g, PointSet const& gamma);

  // One representative per right coset of h in g, identity first. h must be
  // g itself or a setwise stabilizer computed from g.
  std::vector<Permutation> coset_transversal(Group const& g, Group const& h);

  bool is_transitive(Group const& g);
  bool is_primitive(Group const& g);
  // For a transitive group: the block system generated by the minimal block
  // containing {1, beta}, for the first beta where that block is proper.
  // nullopt when there is none, i.e. the group is primitive.
  std::optional<Partition> nontrivial_block_system(Group const& g);

  // g^sigma: the group acting on relabelled points, x -> x sigma.
  Group relabel(Group const& g, Permutation const& sigma);

}  // namespace utg

#endif  // UTG_GROUP_HPP_
