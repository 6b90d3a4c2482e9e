#include "utg/semigroup.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <limits>
#include <map>
#include <unordered_set>

namespace utg {

  namespace {

    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
    constexpr std::uint64_t kNoCode = ~std::uint64_t(0);

    inline Point nibble(std::uint64_t code, std::size_t i) {
      return static_cast<Point>((code >> (4 * i)) & 15);
    }

    // x then y, both packed.
    inline std::uint64_t compose_codes(std::uint64_t x, std::uint64_t y,
                                       std::size_t n) {
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < n; ++i) {
        out |= std::uint64_t(nibble(y, nibble(x, i))) << (4 * i);
      }
      return out;
    }

    inline std::uint64_t image_mask(std::uint64_t code, std::size_t len) {
      std::uint64_t m = 0;
      for (std::size_t i = 0; i < len; ++i) {
        m |= std::uint64_t(1) << nibble(code, i);
      }
      return m;
    }

    void check_degree(std::size_t n) {
      if (n > 16) {
        throw CapExceeded("semigroup computations are limited to degree 16, got "
                          + std::to_string(n));
      }
    }

    void check_singular(Group const& g, Transformation const& a) {
      if (a.degree() != g.degree()) {
        throw Error("map degree " + std::to_string(a.degree())
                    + " differs from group degree "
                    + std::to_string(g.degree()));
      }
      if (a.is_permutation()) {
        throw Error("expected a singular map, got " + to_string(a));
      }
      check_degree(a.degree());
    }

    // Distinct restrictions of G to the points of `pts` (in that order), as
    // packed tuples; the first is the identity restriction.
    std::vector<std::uint64_t> restrictions(Group const& g,
                                            std::vector<Point> const& pts) {
      std::uint64_t start = 0;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        start |= std::uint64_t(pts[i]) << (4 * i);
      }
      std::vector<std::uint64_t> out{start};
      std::unordered_set<std::uint64_t> seen{start};
      for (std::size_t i = 0; i < out.size(); ++i) {
        for (auto const& s : g.generators()) {
          std::uint64_t y = 0;
          for (std::size_t j = 0; j < pts.size(); ++j) {
            y |= std::uint64_t(s[nibble(out[i], j)]) << (4 * j);
          }
          if (seen.insert(y).second) {
            out.push_back(y);
          }
        }
      }
      return out;
    }

    // a g for every distinct restriction of g to im a.
    std::vector<Transformation> right_translates(Group const& g,
                                                 Transformation const& a) {
      auto pts = image(a).points();
      std::vector<std::size_t> pos(a.degree(), 0);
      for (std::size_t i = 0; i < pts.size(); ++i) {
        pos[pts[i]] = i;
      }
      std::vector<Transformation> out;
      for (auto tuple : restrictions(g, pts)) {
        std::vector<Point> img(a.degree());
        for (std::size_t x = 0; x < img.size(); ++x) {
          img[x] = nibble(tuple, pos[a[x]]);
        }
        out.emplace_back(std::move(img));
      }
      return out;
    }

    std::vector<Transformation> group_as_maps(Group const& g) {
      std::vector<Transformation> out;
      for (auto const& s : g.generators()) {
        out.push_back(s.as_transformation());
      }
      return out;
    }

  }  // namespace

  namespace detail {

    std::uint64_t pack(std::span<Point const> images) {
      check_degree(images.size());
      std::uint64_t out = 0;
      for (std::size_t i = 0; i < images.size(); ++i) {
        out |= std::uint64_t(images[i]) << (4 * i);
      }
      return out;
    }

    std::uint64_t pack(Transformation const& a) { return pack(a.images()); }

    Transformation unpack(std::uint64_t code, std::size_t degree) {
      std::vector<Point> img(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        img[i] = nibble(code, i);
      }
      return Transformation(std::move(img));
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  std::vector<Transformation> ClosureResult::elements() const {
    std::vector<Transformation> out;
    out.reserve(codes_.size());
    for (auto c : codes_) {
      out.push_back(detail::unpack(c, degree_));
    }
    return out;
  }

  std::optional<std::size_t> ClosureResult::index_of(
      Transformation const& x) const {
    if (x.degree() != degree_) {
      return std::nullopt;
    }
    auto it = index_.find(detail::pack(x));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool ClosureResult::contains(Transformation const& x) const {
    return index_of(x).has_value();
  }

  std::vector<std::size_t> ClosureResult::word(std::size_t i) const {
    std::vector<std::size_t> w;
    for (std::uint32_t j = static_cast<std::uint32_t>(i); j != kNone;
         j = parent_[j]) {
      w.push_back(via_[j]);
    }
    std::reverse(w.begin(), w.end());
    return w;
  }

  ClosureResult closure(std::vector<Transformation> const& generators,
                        std::size_t cap) {
    if (generators.empty()) {
      throw Error("closure of an empty generating set");
    }
    if (cap == 0) {
      throw Error("closure cap must be positive");
    }
    std::size_t const n = generators.front().degree();
    for (auto const& x : generators) {
      if (x.degree() != n) {
        throw Error("generators of different degrees");
      }
    }
    check_degree(n);
    cap = std::min<std::size_t>(cap, kNone - 1);

    ClosureResult r;
    r.degree_ = n;
    std::vector<std::uint64_t> gens;
    for (auto const& x : generators) {
      gens.push_back(detail::pack(x));
    }
    auto add = [&](std::uint64_t c, std::uint32_t parent, std::size_t via) {
      if (r.index_.count(c) != 0) {
        return true;
      }
      if (r.codes_.size() >= cap) {
        r.truncated_ = true;
        return false;
      }
      r.index_.emplace(c, static_cast<std::uint32_t>(r.codes_.size()));
      r.codes_.push_back(c);
      r.parent_.push_back(parent);
      r.via_.push_back(static_cast<std::uint32_t>(via));
      return true;
    };
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!add(gens[j], kNone, j)) {
        return r;
      }
    }
    for (std::size_t i = 0; i < r.codes_.size(); ++i) {
      for (std::size_t j = 0; j < gens.size(); ++j) {
        if (!add(compose_codes(r.codes_[i], gens[j], n),
                 static_cast<std::uint32_t>(i), j)) {
          return r;
        }
      }
    }
    return r;
  }

  std::vector<Transformation> cone_elements(Group const& g,
                                            Transformation const& a,
                                            std::size_t cap) {
    check_singular(g, a);
    auto gens = group_as_maps(g);
    gens.push_back(a);
    auto all = closure(gens, cap);
    if (all.truncated()) {
      throw CapExceeded("closure of <G,a> exceeds " + std::to_string(cap)
                        + " elements");
    }
    std::vector<Transformation> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
      auto x = all[i];
      if (!x.is_permutation()) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  std::vector<Transformation> conjugate_semigroup_elements(
      Group const& g, Transformation const& a, std::size_t cap) {
    check_singular(g, a);
    std::vector<Transformation> gens;
    std::unordered_set<Transformation> seen;
    for (auto const& h : g.elements(cap)) {
      auto c = conjugate(a, h);
      if (seen.insert(c).second) {
        gens.push_back(std::move(c));
      }
    }
    auto all = closure(gens, cap);
    if (all.truncated()) {
      throw CapExceeded("closure of <a^g> exceeds " + std::to_string(cap)
                        + " elements");
    }
    return all.elements();
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotents of the cone
  ////////////////////////////////////////////////////////////////////////

  SemigroupCone::SemigroupCone(Group g, Transformation a)
      : group_((check_singular(g, a), std::move(g))),
        a_(std::move(a)),
        rank_(a_.rank()),
        kernels_(orbit(group_, kernel(a_))),
        images_(orbit(group_, image(a_))) {
    for (auto const& k : kernels_.elements()) {
      auto classes = k.class_masks();
      for (auto const& t : images_.elements()) {
        if (is_transversal(t.mask(), classes)) {
          idempotents_.push_back(idempotent_from(k, t));
        }
      }
    }
  }

  std::vector<Transformation> idempotents_of_rank(Group const& g,
                                                  Transformation const& a) {
    return SemigroupCone(g, a).idempotents();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rank-preserving search
  ////////////////////////////////////////////////////////////////////////

  RankPreservingSearch::RankPreservingSearch(
      std::vector<Transformation> idempotents, Partition kernel_in,
      std::size_t cap)
      : e_(std::move(idempotents)),
        kernel_(std::move(kernel_in)),
        cap_(std::min<std::size_t>(cap, kNone - 1)),
        n_(kernel_.degree()),
        r_(kernel_.num_classes()) {
    if (e_.empty()) {
      throw Error("rank-preserving search needs at least one idempotent");
    }
    check_degree(n_);
    class_rep_.assign(r_, 0);
    std::vector<bool> seen(r_, false);
    for (std::size_t x = 0; x < n_; ++x) {
      auto l = kernel_.label(x);
      if (!seen[l]) {
        seen[l] = true;
        class_rep_[l] = static_cast<Point>(x);
      }
    }
    std::unordered_map<Partition, std::size_t> group_of;
    for (std::size_t i = 0; i < e_.size(); ++i) {
      auto const& e = e_[i];
      if (e.degree() != n_ || e.rank() != r_ || !e.is_idempotent()) {
        throw Error("expected idempotents of degree " + std::to_string(n_)
                    + " and rank " + std::to_string(r_) + ", got "
                    + to_string(e));
      }
      auto k = kernel(e);
      auto [it, fresh] = group_of.emplace(k, group_masks_.size());
      if (fresh) {
        group_masks_.push_back(k.class_masks());
        group_members_.emplace_back();
      }
      group_members_[it->second].push_back(static_cast<std::uint32_t>(i));
    }
  }

  std::uint64_t RankPreservingSearch::encode(Transformation const& x) const {
    if (x.degree() != n_ || kernel(x) != kernel_) {
      return kNoCode;
    }
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < r_; ++i) {
      t |= std::uint64_t(x[class_rep_[i]]) << (4 * i);
    }
    return t;
  }

  Transformation RankPreservingSearch::decode(std::uint64_t tuple) const {
    std::vector<Point> img(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      img[x] = nibble(tuple, kernel_.label(x));
    }
    return Transformation(std::move(img));
  }

  std::vector<std::uint32_t> const& RankPreservingSearch::moves(
      std::uint64_t mask) {
    auto it = moves_.find(mask);
    if (it != moves_.end()) {
      return it->second;
    }
    std::vector<std::uint32_t> out;
    for (std::size_t gi = 0; gi < group_masks_.size(); ++gi) {
      if (is_transversal(mask, group_masks_[gi])) {
        out.insert(out.end(), group_members_[gi].begin(),
                   group_members_[gi].end());
      }
    }
    return moves_.emplace(mask, std::move(out)).first->second;
  }

  std::size_t RankPreservingSearch::explore(
      std::vector<Transformation> const& targets) {
    std::vector<std::uint64_t> packed_e;
    packed_e.reserve(e_.size());
    for (auto const& e : e_) {
      packed_e.push_back(detail::pack(e));
    }
    std::unordered_set<std::uint64_t> wanted;
    for (auto const& t : targets) {
      auto c = encode(t);
      if (c != kNoCode) {
        wanted.insert(c);
      }
    }
    std::size_t found = 0;
    for (auto c : wanted) {
      found += index_.count(c);
    }
    auto add = [&](std::uint64_t c, std::uint32_t parent, std::uint32_t via) {
      if (index_.count(c) != 0) {
        return;
      }
      if (codes_.size() >= cap_) {
        throw CapExceeded("rank-preserving search exceeds "
                          + std::to_string(cap_) + " states");
      }
      index_.emplace(c, static_cast<std::uint32_t>(codes_.size()));
      codes_.push_back(c);
      parent_.push_back(parent);
      via_.push_back(via);
      found += wanted.count(c);
    };
    if (!started_) {
      started_ = true;
      for (std::size_t i = 0; i < e_.size(); ++i) {
        auto c = encode(e_[i]);
        if (c != kNoCode) {
          add(c, kNone, static_cast<std::uint32_t>(i));
        }
      }
    }
    bool const all = wanted.empty();
    while (done_ < codes_.size() && (all || found < wanted.size())) {
      std::uint32_t const cur = static_cast<std::uint32_t>(done_++);
      std::uint64_t const tuple = codes_[cur];
      for (auto m : moves(image_mask(tuple, r_))) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < r_; ++i) {
          next |= std::uint64_t(nibble(packed_e[m], nibble(tuple, i)))
                  << (4 * i);
        }
        add(next, cur, m);
      }
    }
    return found;
  }

  bool RankPreservingSearch::reached(Transformation const& x) const {
    auto c = encode(x);
    return c != kNoCode && index_.count(c) != 0;
  }

  std::vector<std::size_t> RankPreservingSearch::factorization(
      Transformation const& x) const {
    std::vector<std::size_t> out;
    auto c = encode(x);
    if (c == kNoCode) {
      return out;
    }
    auto it = index_.find(c);
    if (it == index_.end()) {
      return out;
    }
    for (std::uint32_t j = it->second; j != kNone; j = parent_[j]) {
      out.push_back(via_[j]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

  MembershipResult rank_preserving_membership(
      Transformation const& target, std::vector<Transformation> const& E,
      std::size_t cap) {
    if (!E.empty() && E.front().rank() != target.rank()) {
      throw Error("target rank differs from the idempotents' rank");
    }
    MembershipResult out;
    if (E.empty()) {
      return out;
    }
    RankPreservingSearch search(E, kernel(target), cap);
    search.explore({target});
    out.member = search.reached(target);
    out.factors = search.factorization(target);
    out.states = search.states();
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Idempotent generation
  ////////////////////////////////////////////////////////////////////////

  std::vector<ConeVerdict> is_idempotent_generated_cone(
      Group const& g, Transformation const& a,
      std::vector<Transformation> const& maps, SemigroupCaps const& caps) {
    SemigroupCone cone(g, a);
    auto const ker = kernel(a);
    for (auto const& m : maps) {
      if (m.degree() != a.degree() || kernel(m) != ker) {
        throw Error("map " + to_string(m) + " does not share the kernel of "
                    + to_string(a));
      }
    }
    std::vector<ConeVerdict> out(maps.size());
    auto const& E = cone.idempotents();
    for (auto& v : out) {
      v.idempotents = E.size();
    }
    if (E.empty()) {
      // No rank-r idempotent at all, so nothing of rank r is a product of
      // idempotents.
      for (std::size_t i = 0; i < maps.size(); ++i) {
        out[i].holds = false;
        out[i].witness = maps[i];
      }
      return out;
    }
    RankPreservingSearch search(E, ker, caps.bfs);
    std::vector<std::vector<Transformation>> targets;
    std::vector<Transformation> all;
    for (auto const& m : maps) {
      targets.push_back(right_translates(g, m));
      all.insert(all.end(), targets.back().begin(), targets.back().end());
    }
    search.explore(all);
    for (std::size_t i = 0; i < maps.size(); ++i) {
      out[i].states = search.states();
      for (auto const& t : targets[i]) {
        if (!search.reached(t)) {
          out[i].holds = false;
          out[i].witness = t;
          break;
        }
      }
    }
    return out;
  }

  ConeVerdict is_idempotent_generated_cone(Group const& g,
                                           Transformation const& a,
                                           SemigroupCaps const& caps) {
    return is_idempotent_generated_cone(g, a, {a}, caps).front();
  }

  ////////////////////////////////////////////////////////////////////////
  // Regularity
  ////////////////////////////////////////////////////////////////////////

  bool is_regular_element(Transformation const& b,
                          std::vector<Transformation> const& generators,
                          std::size_t cap) {
    auto all = closure(generators, cap);
    if (all.truncated()) {
      throw CapExceeded("closure exceeds " + std::to_string(cap)
                        + " elements");
    }
    if (!all.contains(b)) {
      throw Error(to_string(b) + " is not in the generated semigroup");
    }
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (compose(compose(b, all[i]), b) == b) {
        return true;
      }
    }
    return false;
  }

  ConeVerdict is_regular_cone(Group const& g, Transformation const& a,
                              UtpVerdict const& known,
                              SemigroupCaps const& caps) {
    check_singular(g, a);
    std::size_t const n = a.degree();
    std::size_t const r = a.rank();
    ConeVerdict out;
    // Every cone element has rank <= r, and K_G(b) depends only on the
    // orbits of ker b and im b.
    bool const covered = known.holds ? known.largest_size >= std::min(r, n - 1)
                                     : known.witness->set.size() > r;
    if (covered || r == 1) {
      return out;
    }
    if (known.holds) {
      throw Error("property check covers set sizes up to "
                  + std::to_string(known.largest_size) + ", rank is "
                  + std::to_string(r));
    }

    // Products a g1 a ... g_m a, m >= 0. Each is the class map of ker a
    // followed by maps rho_g : y -> (y g) a on im a.
    auto const ker = kernel(a);
    auto pts = image(a).points();
    std::vector<Point> class_rep(r, 0);
    {
      std::vector<bool> seen(r, false);
      for (std::size_t x = 0; x < n; ++x) {
        if (!seen[ker.label(x)]) {
          seen[ker.label(x)] = true;
          class_rep[ker.label(x)] = static_cast<Point>(x);
        }
      }
    }
    std::vector<std::uint64_t> rhos;
    {
      std::unordered_set<std::uint64_t> seen;
      for (auto tuple : restrictions(g, pts)) {
        std::uint64_t rho = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          rho |= std::uint64_t(a[nibble(tuple, i)]) << (4 * pts[i]);
        }
        if (seen.insert(rho).second) {
          rhos.push_back(rho);
        }
      }
    }
    std::uint64_t start = 0;
    for (std::size_t i = 0; i < r; ++i) {
      start |= std::uint64_t(a[class_rep[i]]) << (4 * i);
    }
    std::vector<std::uint64_t> states{start};
    // Visited tuples: a bitmap over base-n codes when that is small.
    std::size_t dense_size = 1;
    for (std::size_t i = 0; i < r && dense_size <= (std::size_t(1) << 24);
         ++i) {
      dense_size *= n;
    }
    bool const dense = dense_size <= (std::size_t(1) << 24);
    std::vector<bool> dense_seen(dense ? dense_size : 0, false);
    std::unordered_set<std::uint64_t> seen;
    auto first_visit = [&](std::uint64_t tuple) {
      if (!dense) {
        return seen.insert(tuple).second;
      }
      std::size_t code = 0;
      for (std::size_t i = r; i-- > 0;) {
        code = code * n + nibble(tuple, i);
      }
      if (dense_seen[code]) {
        return false;
      }
      dense_seen[code] = true;
      return true;
    };
    first_visit(start);
    for (std::size_t s = 0; s < states.size(); ++s) {
      for (auto rho : rhos) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < r; ++i) {
          next |= std::uint64_t(nibble(rho, nibble(states[s], i))) << (4 * i);
        }
        if (first_visit(next)) {
          if (states.size() >= caps.bfs) {
            throw CapExceeded("regularity search exceeds "
                              + std::to_string(caps.bfs) + " states");
          }
          states.push_back(next);
        }
      }
    }
    out.states = states.size();
    auto as_map = [&](std::uint64_t tuple) {
      std::vector<Point> img(n);
      for (std::size_t x = 0; x < n; ++x) {
        img[x] = nibble(tuple, ker.label(x));
      }
      return Transformation(std::move(img));
    };

    // w is regular in the cone iff rank(w u w) = rank(w) for some cone
    // element u: then y -> y u w permutes im w, say with order k, and
    // v = u (w u)^(k-1) gives w v w = w. With u = g w' h that asks for a set
    // J = (im w) g w' of size rank(w) with some J h a transversal of ker w,
    // which depends on ker w and im w only. The sets s(L) reachable from a
    // set L of class labels are cached per L.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> reachable;
    auto images_of_labels = [&](std::uint64_t labels)
        -> std::vector<std::uint64_t> const& {
      auto it = reachable.find(labels);
      if (it != reachable.end()) {
        return it->second;
      }
      std::size_t const want = std::popcount(labels);
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::uint64_t> out;
      for (auto state : states) {
        std::uint64_t j = 0;
        for (std::size_t i = 0; i < r; ++i) {
          if ((labels >> i) & 1) {
            j |= std::uint64_t(1) << nibble(state, i);
          }
        }
        if (static_cast<std::size_t>(std::popcount(j)) == want
            && seen.insert(j).second) {
          out.push_back(j);
        }
      }
      std::sort(out.begin(), out.end());
      return reachable.emplace(labels, std::move(out)).first->second;
    };
    auto const& gens = g.generators();
    auto regular_in_cone = [&](Transformation const& w) {
      auto const classes = kernel(w).class_masks();
      auto const moved = orbit(g, image(w));
      for (auto const& js : moved.elements()) {
        std::uint64_t labels = 0;
        for (auto p : js.points()) {
          labels |= std::uint64_t(1) << ker.label(p);
        }
        if (static_cast<std::size_t>(std::popcount(labels)) != js.size()) {
          continue;
        }
        for (auto j : images_of_labels(labels)) {
          // Some image of j under G a transversal of ker w.
          std::vector<std::uint64_t> frontier{j};
          std::unordered_set<std::uint64_t> seen{j};
          for (std::size_t f = 0; f < frontier.size(); ++f) {
            if (is_transversal(frontier[f], classes)) {
              return true;
            }
            for (auto const& x : gens) {
              auto next = detail::move_mask(frontier[f], x);
              if (seen.insert(next).second) {
                frontier.push_back(next);
              }
            }
          }
        }
      }
      return false;
    };

    // Regularity is preserved by g b h, so the words w settle it, and by the
    // above only the G-orbits of ker w and im w matter. ker w is the union of
    // the classes of ker a with equal images, so the restricted-growth string
    // of the tuple identifies it.
    std::unordered_map<std::uint64_t, std::uint32_t> kernel_by_rgs;
    std::unordered_map<std::uint64_t, std::uint32_t> kernel_orbit_id;
    std::unordered_map<std::uint64_t, std::uint32_t> image_orbit_id;
    std::uint32_t kernel_orbits = 0;
    std::uint32_t image_orbits = 0;
    std::unordered_map<std::uint64_t, bool> decided;
    for (auto tuple : states) {
      std::uint64_t rgs = 0;
      std::uint64_t img = 0;
      std::array<std::uint8_t, 16> label_of;
      label_of.fill(0xff);
      std::uint8_t next_label = 0;
      for (std::size_t i = 0; i < r; ++i) {
        auto y = nibble(tuple, i);
        img |= std::uint64_t(1) << y;
        if (label_of[y] == 0xff) {
          label_of[y] = next_label++;
        }
        rgs |= std::uint64_t(label_of[y]) << (4 * i);
      }
      auto kit = kernel_by_rgs.find(rgs);
      if (kit == kernel_by_rgs.end()) {
        auto k = kernel(as_map(tuple));
        auto code = detail::pack(k.labels());
        auto oit = kernel_orbit_id.find(code);
        if (oit == kernel_orbit_id.end()) {
          auto const moved = orbit(g, k);
          for (auto const& p : moved.elements()) {
            kernel_orbit_id.emplace(detail::pack(p.labels()), kernel_orbits);
          }
          ++kernel_orbits;
          oit = kernel_orbit_id.find(code);
        }
        kit = kernel_by_rgs.emplace(rgs, oit->second).first;
      }
      auto iit = image_orbit_id.find(img);
      if (iit == image_orbit_id.end()) {
        auto const moved = orbit(g, PointSet(n, img));
        for (auto const& p : moved.elements()) {
          image_orbit_id.emplace(p.mask(), image_orbits);
        }
        ++image_orbits;
        iit = image_orbit_id.find(img);
      }
      auto key = (std::uint64_t(kit->second) << 32) | iit->second;
      auto it = decided.find(key);
      if (it == decided.end()) {
        auto w = as_map(tuple);
        it = decided.emplace(key, kg_nonempty(g, w) || regular_in_cone(w))
                 .first;
      }
      if (!it->second) {
        out.holds = false;
        out.witness = as_map(tuple);
        return out;
      }
    }
    return out;
  }

  ConeVerdict is_regular_cone(Group const& g, Transformation const& a,
                              SemigroupCaps const& caps) {
    check_singular(g, a);
    UtpOptions options;
    options.degree_cap = 16;
    options.max_size = a.rank();
    return is_regular_cone(g, a, has_utp(g, options), caps);
  }

  bool regular_cone_by_closure(Group const& g, Transformation const& a,
                               std::size_t cap) {
    auto cone = cone_elements(g, a, cap);
    std::size_t const n = a.degree();
    std::vector<std::uint64_t> codes;
    for (auto const& x : cone) {
      codes.push_back(detail::pack(x));
    }
    // b v b = b only depends on v restricted to im b.
    std::unordered_map<std::uint64_t, std::vector<std::uint64_t>> by_image;
    for (auto c : codes) {
      std::uint64_t const mask = image_mask(c, n);
      if (by_image.count(mask) != 0) {
        continue;
      }
      std::vector<Point> pts;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        pts.push_back(static_cast<Point>(std::countr_zero(m)));
      }
      std::unordered_set<std::uint64_t> rs;
      for (auto v : codes) {
        std::uint64_t t = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
          t |= std::uint64_t(nibble(v, pts[i])) << (4 * i);
        }
        rs.insert(t);
      }
      by_image.emplace(mask, std::vector<std::uint64_t>(rs.begin(), rs.end()));
    }
    for (auto b : codes) {
      std::uint64_t const mask = image_mask(b, n);
      std::vector<Point> pts;
      for (std::uint64_t m = mask; m != 0; m &= m - 1) {
        pts.push_back(static_cast<Point>(std::countr_zero(m)));
      }
      bool ok = std::any_of(
          by_image[mask].begin(), by_image[mask].end(), [&](std::uint64_t t) {
            for (std::size_t i = 0; i < pts.size(); ++i) {
              if (nibble(b, nibble(t, i)) != pts[i]) {
                return false;
              }
            }
            return true;
          });
      if (!ok) {
        return false;
      }
    }
    return true;
  }

  bool idempotent_sets_agree(Group const& g, Transformation const& a,
                             std::size_t cap) {
    auto idempotents = [](std::vector<Transformation> const& xs) {
      std::vector<Transformation> out;
      std::copy_if(xs.begin(), xs.end(), std::back_inserter(out),
                   [](Transformation const& x) { return x.is_idempotent(); });
      std::sort(out.begin(), out.end());
      return out;
    };
    return idempotents(cone_elements(g, a, cap))
           == idempotents(conjugate_semigroup_elements(g, a, cap));
  }

}  // namespace utg
