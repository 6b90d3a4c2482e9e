// Points, permutations, transformations, subsets and set partitions of a
// finite set {1, ..., n}.
//
// All values are immutable once built. Internally points are 0-based bytes;
// every parser and printer in this header uses the 1-based notation.
// Composition acts on the right: the image of a point x under compose(a, b)
// is (x a) b.

#ifndef UTG_CORE_HPP_
#define UTG_CORE_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace utg {

  using Point = std::uint8_t;

  inline constexpr std::size_t kMaxDegree = 64;

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Thrown when a computation would exceed a configured limit. Callers turn
  // this into a refusal instead of a verdict.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    ParseError(std::string const& what, std::size_t line, std::size_t column);
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  class Permutation;

  class Transformation {
   public:
    Transformation() = default;
    // 0-based images; every entry must be < images.size().
    explicit Transformation(std::vector<Point> images);

    static Transformation identity(std::size_t degree);
    // 1-based images, as written [a1,...,an].
    static Transformation from_one_based(std::vector<unsigned> const& images);

    std::size_t degree() const noexcept { return img_.size(); }
    Point operator[](std::size_t i) const { return img_[i]; }
    std::span<Point const> images() const noexcept { return img_; }

    std::size_t rank() const;
    bool is_permutation() const { return rank() == degree(); }
    bool is_idempotent() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<Point> img_;
  };

  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<Point> images);
    explicit Permutation(Transformation const& t);

    static Permutation identity(std::size_t degree);

    std::size_t degree() const noexcept { return img_.size(); }
    Point operator[](std::size_t i) const { return img_[i]; }
    std::span<Point const> images() const noexcept { return img_; }

    Permutation inverse() const;
    bool is_identity() const;
    Transformation as_transformation() const { return Transformation(img_); }

    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<Point> img_;
  };

  // A subset of {1..n}, n <= 64, stored as a bitmask.
  class PointSet {
   public:
    PointSet() = default;
    PointSet(std::size_t degree, std::uint64_t mask);

    static PointSet from_points(std::size_t degree,
                                std::vector<Point> const& points);
    static PointSet from_one_based(std::size_t degree,
                                   std::vector<unsigned> const& points);
    static PointSet full(std::size_t degree);

    std::size_t degree() const noexcept { return degree_; }
    std::uint64_t mask() const noexcept { return mask_; }
    std::size_t size() const noexcept { return std::popcount(mask_); }
    bool empty() const noexcept { return mask_ == 0; }
    bool contains(Point p) const noexcept { return (mask_ >> p) & 1; }
    // 0-based, increasing.
    std::vector<Point> points() const;

    friend bool operator==(PointSet const&, PointSet const&) = default;
    friend auto operator<=>(PointSet const&, PointSet const&) = default;

   private:
    std::uint8_t degree_ = 0;
    std::uint64_t mask_ = 0;
  };

  // A set partition of {1..n} in restricted-growth form: point 1 has label 0
  // and each new class takes the next unused label.
  class Partition {
   public:
    Partition() = default;
    // Any labelling; it is canonicalised.
    explicit Partition(std::vector<Point> const& labels);

    static Partition from_classes(std::size_t degree,
                                  std::vector<PointSet> const& classes);
    static Partition singletons(std::size_t degree);
    static Partition one_class(std::size_t degree);

    std::size_t degree() const noexcept { return labels_.size(); }
    std::size_t num_classes() const noexcept { return num_classes_; }
    Point label(std::size_t i) const { return labels_[i]; }
    std::span<Point const> labels() const noexcept { return labels_; }
    // Class masks indexed by label.
    std::vector<std::uint64_t> class_masks() const;
    std::vector<PointSet> classes() const;

    friend bool operator==(Partition const& x, Partition const& y) {
      return x.labels_ == y.labels_;
    }
    friend auto operator<=>(Partition const& x, Partition const& y) {
      return x.labels_ <=> y.labels_;
    }

   private:
    std::vector<Point> labels_;
    std::size_t num_classes_ = 0;
  };

  Transformation compose(Transformation const& a, Transformation const& b);
  Permutation compose(Permutation const& a, Permutation const& b);
  Transformation compose(Transformation const& a, Permutation const& g);
  Transformation compose(Permutation const& g, Transformation const& a);

  // g^-1 a g
  Transformation conjugate(Transformation const& a, Permutation const& g);

  Partition kernel(Transformation const& a);
  PointSet image(Transformation const& a);
  inline std::size_t rank(Transformation const& a) { return a.rank(); }

  bool is_transversal(PointSet const& t, Partition const& p);
  // Mask form of the same test, for inner loops.
  bool is_transversal(std::uint64_t t,
                      std::span<std::uint64_t const> class_masks);

  // The unique idempotent with kernel k and image t.
  Transformation idempotent_from(Partition const& k, PointSet const& t);

  Point move_point(Point p, Permutation const& g);
  PointSet move_set(PointSet const& s, Permutation const& g);
  PointSet move_set(PointSet const& s, Transformation const& a);
  Partition move_partition(Partition const& p, Permutation const& g);

  // Text forms.
  std::string to_string(Transformation const& a);
  std::string to_string(Permutation const& g);  // cycle notation
  std::string to_string(PointSet const& s);
  std::string to_string(Partition const& p);
  std::string to_image_list(Permutation const& g);

  Transformation parse_transformation(std::string_view text);
  // Accepts "(1 2 3)(4 5)", "(1,2,3)(4,5)" and "()"; degree must cover every
  // point mentioned.
  Permutation parse_permutation(std::string_view text, std::size_t degree);
  PointSet parse_point_set(std::string_view text, std::size_t degree);
  // The degree is the number of points covered; classes must partition
  // {1..n} exactly.
  Partition parse_partition(std::string_view text);

  namespace detail {
    inline std::size_t hash_bytes(std::span<Point const> bytes) noexcept {
      // FNV-1a
      std::size_t h = 1469598103934665603ull;
      for (Point b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
      }
      return h;
    }
  }  // namespace detail

}  // namespace utg

template <>
struct std::hash<utg::Transformation> {
  std::size_t operator()(utg::Transformation const& a) const noexcept {
    return utg::detail::hash_bytes(a.images());
  }
};

template <>
struct std::hash<utg::Permutation> {
  std::size_t operator()(utg::Permutation const& g) const noexcept {
    return utg::detail::hash_bytes(g.images());
  }
};

template <>
struct std::hash<utg::PointSet> {
  std::size_t operator()(utg::PointSet const& s) const noexcept {
    return std::hash<std::uint64_t>()(s.mask() * 0x9E3779B97F4A7C15ull
                                      ^ s.degree());
  }
};

template <>
struct std::hash<utg::Partition> {
  std::size_t operator()(utg::Partition const& p) const noexcept {
    return utg::detail::hash_bytes(p.labels());
  }
};

#endif  // UTG_CORE_HPP_
