#include "utg/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace utg {

  BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  BigInt binomial(unsigned n, unsigned k) {
    if (k > n) {
      return 0;
    }
    k = std::min(k, n - k);
    BigInt r = 1;
    for (unsigned i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  BigInt power(BigInt base, unsigned exponent) {
    BigInt r = 1;
    while (exponent != 0) {
      if (exponent & 1) {
        r *= base;
      }
      base *= base;
      exponent >>= 1;
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // StabChain
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::optional<Point> first_moved(Permutation const& g) {
      for (std::size_t i = 0; i < g.degree(); ++i) {
        if (g[i] != i) {
          return static_cast<Point>(i);
        }
      }
      return std::nullopt;
    }

  }  // namespace

  StabChain::StabChain(std::size_t degree, std::vector<Permutation> const& gens)
      : degree_(degree) {
    std::vector<Permutation> nontrivial;
    for (auto const& g : gens) {
      if (g.degree() != degree) {
        throw Error("generator degree mismatch");
      }
      if (!g.is_identity()) {
        nontrivial.push_back(g);
      }
    }
    if (nontrivial.empty()) {
      return;
    }
    // Make sure no generator fixes the whole base.
    for (auto const& g : nontrivial) {
      bool moves_base = false;
      for (auto const& lvl : levels_) {
        if (g[lvl.base] != lvl.base) {
          moves_base = true;
          break;
        }
      }
      if (!moves_base) {
        // Every moved point is outside the current base, since g fixes it.
        add_level(*first_moved(g));
      }
    }
    std::sort(levels_.begin(), levels_.end(), [](Level const& x, Level const& y) {
      return x.base < y.base;
    });
    for (auto const& g : nontrivial) {
      for (std::size_t j = 0; j < levels_.size(); ++j) {
        levels_[j].gens.push_back(g);
        if (g[levels_[j].base] != levels_[j].base) {
          break;
        }
      }
    }
    for (std::size_t j = 0; j < levels_.size(); ++j) {
      rebuild_orbit(j);
    }
    schreier_sims();
  }

  void StabChain::add_level(Point base) {
    Level lvl;
    lvl.base = base;
    levels_.push_back(std::move(lvl));
  }

  void StabChain::rebuild_orbit(std::size_t j) {
    Level& lvl = levels_[j];
    lvl.orbit_index.assign(degree_, -1);
    lvl.orbit.assign(1, lvl.base);
    lvl.transversal.assign(1, Permutation::identity(degree_));
    lvl.transversal_inv.assign(1, Permutation::identity(degree_));
    lvl.orbit_index[lvl.base] = 0;
    for (std::size_t i = 0; i < lvl.orbit.size(); ++i) {
      for (auto const& s : lvl.gens) {
        Point y = s[lvl.orbit[i]];
        if (lvl.orbit_index[y] < 0) {
          lvl.orbit_index[y] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(y);
          lvl.transversal.push_back(compose(lvl.transversal[i], s));
          lvl.transversal_inv.push_back(lvl.transversal.back().inverse());
        }
      }
    }
  }

  std::pair<Permutation, std::size_t> StabChain::sift(Permutation g,
                                                      std::size_t from) const {
    for (std::size_t j = from; j < levels_.size(); ++j) {
      Level const& lvl = levels_[j];
      int idx = lvl.orbit_index[g[lvl.base]];
      if (idx < 0) {
        return {std::move(g), j};
      }
      g = compose(g, lvl.transversal_inv[idx]);
    }
    return {std::move(g), levels_.size()};
  }

  // Deterministic Schreier-Sims: at each level every Schreier generator must
  // sift through the levels below; a residue becomes a new strong generator.
  void StabChain::schreier_sims() {
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
    while (i >= 0) {
      bool extended = false;
      Level const* lvl = &levels_[i];
      for (std::size_t k = 0; !extended && k < lvl->orbit.size(); ++k) {
        for (std::size_t s = 0; !extended && s < lvl->gens.size(); ++s) {
          Permutation const& gen = lvl->gens[s];
          Point image = gen[lvl->orbit[k]];
          Permutation h = compose(compose(lvl->transversal[k], gen),
                                  lvl->transversal_inv[lvl->orbit_index[image]]);
          if (h.is_identity()) {
            continue;
          }
          auto [residue, j] = sift(std::move(h), i + 1);
          if (j == levels_.size() && residue.is_identity()) {
            continue;
          }
          if (j == levels_.size()) {
            // The residue fixes every base point; extend the base with the
            // smallest point it moves.
            add_level(*first_moved(residue));
          }
          for (std::size_t l = i + 1; l <= j; ++l) {
            levels_[l].gens.push_back(residue);
            rebuild_orbit(l);
          }
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
        }
      }
      if (!extended) {
        --i;
      }
    }
  }

  BigInt StabChain::order() const {
    BigInt r = 1;
    for (auto const& lvl : levels_) {
      r *= lvl.orbit.size();
    }
    return r;
  }

  bool StabChain::contains(Permutation const& g) const {
    if (g.degree() != degree_) {
      return false;
    }
    auto [residue, j] = sift(g);
    return j == levels_.size() && residue.is_identity();
  }

  ////////////////////////////////////////////////////////////////////////
  // Group
  ////////////////////////////////////////////////////////////////////////

  Group::Group(std::size_t degree, std::vector<Permutation> generators)
      : degree_(degree), lazy_(std::make_shared<Lazy>()) {
    if (degree == 0 || degree > kMaxDegree) {
      throw Error("group degree must be in 1.." + std::to_string(kMaxDegree));
    }
    for (auto& g : generators) {
      if (g.degree() != degree) {
        throw Error("generator " + to_string(g) + " has degree "
                    + std::to_string(g.degree()) + ", expected "
                    + std::to_string(degree));
      }
      if (!g.is_identity()
          && std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
        gens_.push_back(std::move(g));
      }
    }
  }

  Group Group::trivial(std::size_t degree) {
    return Group(degree, {});
  }

  StabChain const& Group::chain() const {
    std::call_once(lazy_->once, [this] {
      lazy_->chain = std::make_unique<StabChain>(degree_, gens_);
    });
    return *lazy_->chain;
  }

  BigInt Group::order() const {
    return chain().order();
  }

  bool Group::contains(Permutation const& g) const {
    return chain().contains(g);
  }

  std::vector<Point> Group::base() const {
    std::vector<Point> out;
    for (auto const& lvl : chain().levels()) {
      out.push_back(lvl.base);
    }
    return out;
  }

  std::vector<Permutation> Group::elements(std::size_t cap) const {
    auto const& levels = chain().levels();
    if (order() > cap) {
      throw CapExceeded("group of order " + order().str()
                        + " exceeds enumeration cap " + std::to_string(cap));
    }
    // g = t_{k-1} ... t_1 t_0 with t_j from the level-j transversal.
    std::vector<Permutation> out{Permutation::identity(degree_)};
    for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
      auto const& lvl = *it;
      std::vector<Permutation> next;
      next.reserve(out.size() * lvl.orbit.size());
      for (auto const& t : lvl.transversal) {
        for (auto const& g : out) {
          next.push_back(compose(g, t));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Orbits
  ////////////////////////////////////////////////////////////////////////

  namespace {
    inline Point act(Point p, Permutation const& g) {
      return g[p];
    }
    inline PointSet act(PointSet const& s, Permutation const& g) {
      return move_set(s, g);
    }
    inline Partition act(Partition const& p, Permutation const& g) {
      return move_partition(p, g);
    }
  }  // namespace

  template <typename T>
  Orbit<T>::Orbit(std::size_t degree, std::vector<Permutation> gens, T seed)
      : degree_(degree), gens_(std::move(gens)) {
    elements_.push_back(seed);
    parent_.push_back(-1);
    via_.push_back(0);
    index_.emplace(std::move(seed), 0);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t s = 0; s < gens_.size(); ++s) {
        T y = act(elements_[i], gens_[s]);
        if (index_.emplace(y, elements_.size()).second) {
          elements_.push_back(std::move(y));
          parent_.push_back(static_cast<std::ptrdiff_t>(i));
          via_.push_back(s);
        }
      }
    }
  }

  template <typename T>
  std::optional<std::size_t> Orbit<T>::index_of(T const& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  template <typename T>
  Permutation Orbit<T>::witness(std::size_t i) const {
    std::vector<std::size_t> path;
    for (std::ptrdiff_t j = static_cast<std::ptrdiff_t>(i); parent_[j] >= 0;
         j = parent_[j]) {
      path.push_back(via_[j]);
    }
    Permutation w = Permutation::identity(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      w = compose(w, gens_[*it]);
    }
    return w;
  }

  template <typename T>
  std::vector<Permutation> Orbit<T>::schreier_generators() const {
    std::vector<Permutation> out;
    std::vector<Permutation> wit;
    wit.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
      wit.push_back(witness(i));
    }
    for (std::size_t i = 0; i < size(); ++i) {
      for (auto const& s : gens_) {
        std::size_t j = index_.at(act(elements_[i], s));
        Permutation h = compose(compose(wit[i], s), wit[j].inverse());
        if (!h.is_identity()) {
          out.push_back(std::move(h));
        }
      }
    }
    return out;
  }

  template class Orbit<Point>;
  template class Orbit<PointSet>;
  template class Orbit<Partition>;

  Orbit<Point> orbit(Group const& g, Point seed) {
    if (seed >= g.degree()) {
      throw Error("seed point out of range");
    }
    return Orbit<Point>(g.degree(), g.generators(), seed);
  }

  Orbit<PointSet> orbit(Group const& g, PointSet const& seed) {
    if (seed.degree() != g.degree()) {
      throw Error("seed degree does not match group degree");
    }
    return Orbit<PointSet>(g.degree(), g.generators(), seed);
  }

  Orbit<Partition> orbit(Group const& g, Partition const& seed) {
    if (seed.degree() != g.degree()) {
      throw Error("seed degree does not match group degree");
    }
    return Orbit<Partition>(g.degree(), g.generators(), seed);
  }

  ////////////////////////////////////////////////////////////////////////
  // Stabilizers and cosets
  ////////////////////////////////////////////////////////////////////////

  Group setwise_stabilizer(Group const& g, PointSet const& gamma) {
    if (gamma.empty()) {
      throw Error("setwise stabilizer of the empty set");
    }
    auto orb = orbit(g, gamma);
    BigInt const target = g.order() / orb.size();
    std::vector<Permutation> gens;
    std::unique_ptr<StabChain> chain
        = std::make_unique<StabChain>(g.degree(), gens);
    // Schreier generators, added only when not already in the subgroup built
    // so far; stop once orbit-stabilizer says the subgroup is complete.
    std::vector<Permutation> wit;
    wit.reserve(orb.size());
    for (std::size_t i = 0; i < orb.size(); ++i) {
      wit.push_back(orb.witness(i));
    }
    for (std::size_t i = 0; i < orb.size() && chain->order() < target; ++i) {
      for (auto const& s : g.generators()) {
        if (chain->order() == target) {
          break;
        }
        std::size_t j = *orb.index_of(move_set(orb[i], s));
        Permutation h = compose(compose(wit[i], s), wit[j].inverse());
        if (!chain->contains(h)) {
          gens.push_back(std::move(h));
          chain = std::make_unique<StabChain>(g.degree(), gens);
        }
      }
    }
    Group result(g.degree(), gens);
    result.stabilized_ = gamma;
    result.parent_gens_ = g.generators();
    return result;
  }

  Group induced_action(Group const& g, PointSet const& gamma) {
    Group stab = setwise_stabilizer(g, gamma);
    auto const pts = gamma.points();
    std::vector<int> pos(g.degree(), -1);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      pos[pts[i]] = static_cast<int>(i);
    }
    std::vector<Permutation> gens;
    for (auto const& s : stab.generators()) {
      std::vector<Point> img(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) {
        img[i] = static_cast<Point>(pos[s[pts[i]]]);
      }
      gens.emplace_back(std::move(img));
    }
    return Group(pts.size(), std::move(gens));
  }

  std::vector<Permutation> coset_transversal(Group const& g, Group const& h) {
    if (h.same_generators(g)) {
      return {Permutation::identity(g.degree())};
    }
    if (!h.stabilized_set() || h.parent_generators() != g.generators()) {
      throw Error("coset transversal is only available for setwise "
                  "stabilizers computed from the same group");
    }
    auto orb = orbit(g, *h.stabilized_set());
    std::vector<Permutation> out;
    out.reserve(orb.size());
    for (std::size_t i = 0; i < orb.size(); ++i) {
      out.push_back(orb.witness(i));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Transitivity and primitivity
  ////////////////////////////////////////////////////////////////////////

  bool is_transitive(Group const& g) {
    return orbit(g, Point(0)).size() == g.degree();
  }

  namespace {

    struct UnionFind {
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x = parent[x];
        }
        return x;
      }
      // Keeps the smaller root.
      bool unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x == y) {
          return false;
        }
        if (y < x) {
          std::swap(x, y);
        }
        parent[y] = x;
        return true;
      }
      std::vector<std::size_t> parent;
    };

    // Atkinson's minimal block closure of {0, beta}.
    Partition minimal_blocks(Group const& g, Point beta) {
      std::size_t const n = g.degree();
      UnionFind uf(n);
      std::deque<std::pair<Point, Point>> queue;
      uf.unite(0, beta);
      queue.emplace_back(0, beta);
      while (!queue.empty()) {
        auto [x, y] = queue.front();
        queue.pop_front();
        for (auto const& s : g.generators()) {
          Point sx = s[x], sy = s[y];
          if (uf.unite(sx, sy)) {
            queue.emplace_back(sx, sy);
          }
        }
      }
      std::vector<Point> labels(n);
      for (std::size_t i = 0; i < n; ++i) {
        labels[i] = static_cast<Point>(uf.find(i));
      }
      return Partition(labels);
    }

  }  // namespace

  std::optional<Partition> nontrivial_block_system(Group const& g) {
    for (std::size_t beta = 1; beta < g.degree(); ++beta) {
      Partition p = minimal_blocks(g, static_cast<Point>(beta));
      if (p.num_classes() > 1) {
        return p;
      }
    }
    return std::nullopt;
  }

  bool is_primitive(Group const& g) {
    if (g.degree() < 2) {
      throw Error("primitivity needs degree at least 2");
    }
    return is_transitive(g) && !nontrivial_block_system(g);
  }

  Group relabel(Group const& g, Permutation const& sigma) {
    if (sigma.degree() != g.degree()) {
      throw Error("relabelling degree mismatch");
    }
    Permutation const inv = sigma.inverse();
    std::vector<Permutation> gens;
    for (auto const& s : g.generators()) {
      gens.push_back(compose(compose(inv, s), sigma));
    }
    return Group(g.degree(), std::move(gens));
  }

}  // namespace utg
