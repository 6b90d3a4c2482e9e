#include "utg/core.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <sstream>

namespace utg {

  ParseError::ParseError(std::string const& what,
                         std::size_t line,
                         std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column "
              + std::to_string(column)),
        line_(line),
        column_(column) {}

  namespace {

    void check_degree(std::size_t n) {
      if (n > kMaxDegree) {
        throw Error("degree " + std::to_string(n) + " exceeds "
                    + std::to_string(kMaxDegree));
      }
    }

    void check_same_degree(std::size_t m, std::size_t n) {
      if (m != n) {
        throw Error("degree mismatch: " + std::to_string(m) + " vs "
                    + std::to_string(n));
      }
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Transformation
  ////////////////////////////////////////////////////////////////////////

  Transformation::Transformation(std::vector<Point> images)
      : img_(std::move(images)) {
    check_degree(img_.size());
    for (Point p : img_) {
      if (p >= img_.size()) {
        throw Error("image " + std::to_string(p + 1) + " out of range for degree "
                    + std::to_string(img_.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    check_degree(degree);
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<Point>(i);
    }
    return Transformation(std::move(img));
  }

  Transformation
  Transformation::from_one_based(std::vector<unsigned> const& images) {
    check_degree(images.size());
    std::vector<Point> img;
    img.reserve(images.size());
    for (unsigned x : images) {
      if (x < 1 || x > images.size()) {
        throw Error("image " + std::to_string(x) + " out of range for degree "
                    + std::to_string(images.size()));
      }
      img.push_back(static_cast<Point>(x - 1));
    }
    return Transformation(std::move(img));
  }

  std::size_t Transformation::rank() const {
    std::uint64_t seen = 0;
    for (Point p : img_) {
      seen |= std::uint64_t(1) << p;
    }
    return std::popcount(seen);
  }

  bool Transformation::is_idempotent() const {
    for (Point p : img_) {
      if (img_[p] != p) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutation
  ////////////////////////////////////////////////////////////////////////

  Permutation::Permutation(std::vector<Point> images) : img_(std::move(images)) {
    check_degree(img_.size());
    std::uint64_t seen = 0;
    for (Point p : img_) {
      if (p >= img_.size() || ((seen >> p) & 1)) {
        throw Error("images do not form a permutation");
      }
      seen |= std::uint64_t(1) << p;
    }
  }

  Permutation::Permutation(Transformation const& t)
      : Permutation(std::vector<Point>(t.images().begin(), t.images().end())) {}

  Permutation Permutation::identity(std::size_t degree) {
    return Permutation(Transformation::identity(degree));
  }

  Permutation Permutation::inverse() const {
    Permutation result;
    result.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
      result.img_[img_[i]] = static_cast<Point>(i);
    }
    return result;
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (img_[i] != i) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // PointSet
  ////////////////////////////////////////////////////////////////////////

  PointSet::PointSet(std::size_t degree, std::uint64_t mask)
      : degree_(static_cast<std::uint8_t>(degree)), mask_(mask) {
    check_degree(degree);
    if (degree < 64 && (mask >> degree) != 0) {
      throw Error("point set has points beyond degree "
                  + std::to_string(degree));
    }
  }

  PointSet PointSet::from_points(std::size_t degree,
                                 std::vector<Point> const& points) {
    check_degree(degree);
    std::uint64_t mask = 0;
    for (Point p : points) {
      if (p >= degree) {
        throw Error("point " + std::to_string(p + 1) + " out of range");
      }
      mask |= std::uint64_t(1) << p;
    }
    return PointSet(degree, mask);
  }

  PointSet PointSet::from_one_based(std::size_t degree,
                                    std::vector<unsigned> const& points) {
    std::vector<Point> pts;
    for (unsigned x : points) {
      if (x < 1 || x > degree) {
        throw Error("point " + std::to_string(x) + " out of range for degree "
                    + std::to_string(degree));
      }
      pts.push_back(static_cast<Point>(x - 1));
    }
    return from_points(degree, pts);
  }

  PointSet PointSet::full(std::size_t degree) {
    check_degree(degree);
    return PointSet(degree,
                    degree == 64 ? ~std::uint64_t(0)
                                 : (std::uint64_t(1) << degree) - 1);
  }

  std::vector<Point> PointSet::points() const {
    std::vector<Point> out;
    out.reserve(size());
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
      out.push_back(static_cast<Point>(std::countr_zero(m)));
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition::Partition(std::vector<Point> const& labels) {
    check_degree(labels.size());
    std::array<int, 256> relabel;
    relabel.fill(-1);
    labels_.resize(labels.size());
    int next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      int& r = relabel[labels[i]];
      if (r < 0) {
        r = next++;
      }
      labels_[i] = static_cast<Point>(r);
    }
    num_classes_ = static_cast<std::size_t>(next);
  }

  Partition Partition::from_classes(std::size_t degree,
                                    std::vector<PointSet> const& classes) {
    check_degree(degree);
    std::vector<Point> labels(degree, 0);
    std::uint64_t covered = 0;
    for (std::size_t c = 0; c < classes.size(); ++c) {
      check_same_degree(classes[c].degree(), degree);
      if (classes[c].empty()) {
        throw Error("partition has an empty class");
      }
      if (covered & classes[c].mask()) {
        throw Error("partition classes overlap");
      }
      covered |= classes[c].mask();
      for (Point p : classes[c].points()) {
        labels[p] = static_cast<Point>(c);
      }
    }
    if (covered != PointSet::full(degree).mask()) {
      throw Error("partition classes do not cover the domain");
    }
    return Partition(labels);
  }

  Partition Partition::singletons(std::size_t degree) {
    std::vector<Point> labels(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      labels[i] = static_cast<Point>(i);
    }
    return Partition(labels);
  }

  Partition Partition::one_class(std::size_t degree) {
    return Partition(std::vector<Point>(degree, 0));
  }

  std::vector<std::uint64_t> Partition::class_masks() const {
    std::vector<std::uint64_t> masks(num_classes_, 0);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      masks[labels_[i]] |= std::uint64_t(1) << i;
    }
    return masks;
  }

  std::vector<PointSet> Partition::classes() const {
    std::vector<PointSet> out;
    for (std::uint64_t m : class_masks()) {
      out.emplace_back(degree(), m);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Algebra
  ////////////////////////////////////////////////////////////////////////

  Transformation compose(Transformation const& a, Transformation const& b) {
    check_same_degree(a.degree(), b.degree());
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = b[a[i]];
    }
    return Transformation(std::move(img));
  }

  Permutation compose(Permutation const& a, Permutation const& b) {
    check_same_degree(a.degree(), b.degree());
    std::vector<Point> img(a.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = b[a[i]];
    }
    return Permutation(std::move(img));
  }

  Transformation compose(Transformation const& a, Permutation const& g) {
    return compose(a, g.as_transformation());
  }

  Transformation compose(Permutation const& g, Transformation const& a) {
    return compose(g.as_transformation(), a);
  }

  Transformation conjugate(Transformation const& a, Permutation const& g) {
    check_same_degree(a.degree(), g.degree());
    // x (g^-1 a g) = ((x g^-1) a) g, so (y g) maps to (y a) g.
    std::vector<Point> img(a.degree());
    for (std::size_t y = 0; y < img.size(); ++y) {
      img[g[y]] = g[a[y]];
    }
    return Transformation(std::move(img));
  }

  Partition kernel(Transformation const& a) {
    // Labelling each point by its image and canonicalising gives the kernel.
    return Partition(std::vector<Point>(a.images().begin(), a.images().end()));
  }

  PointSet image(Transformation const& a) {
    std::uint64_t mask = 0;
    for (Point p : a.images()) {
      mask |= std::uint64_t(1) << p;
    }
    return PointSet(a.degree(), mask);
  }

  bool is_transversal(std::uint64_t t,
                      std::span<std::uint64_t const> class_masks) {
    if (static_cast<std::size_t>(std::popcount(t)) != class_masks.size()) {
      return false;
    }
    for (std::uint64_t c : class_masks) {
      if (std::popcount(t & c) != 1) {
        return false;
      }
    }
    return true;
  }

  bool is_transversal(PointSet const& t, Partition const& p) {
    check_same_degree(t.degree(), p.degree());
    auto const masks = p.class_masks();
    return is_transversal(t.mask(), masks);
  }

  Transformation idempotent_from(Partition const& k, PointSet const& t) {
    check_same_degree(k.degree(), t.degree());
    if (!is_transversal(t, k)) {
      throw Error(to_string(t) + " is not a transversal of " + to_string(k));
    }
    std::vector<Point> rep(k.num_classes());
    for (Point p : t.points()) {
      rep[k.label(p)] = p;
    }
    std::vector<Point> img(k.degree());
    for (std::size_t i = 0; i < img.size(); ++i) {
      img[i] = rep[k.label(i)];
    }
    return Transformation(std::move(img));
  }

  Point move_point(Point p, Permutation const& g) {
    return g[p];
  }

  PointSet move_set(PointSet const& s, Permutation const& g) {
    check_same_degree(s.degree(), g.degree());
    std::uint64_t mask = 0;
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
      mask |= std::uint64_t(1) << g[std::countr_zero(m)];
    }
    return PointSet(s.degree(), mask);
  }

  PointSet move_set(PointSet const& s, Transformation const& a) {
    check_same_degree(s.degree(), a.degree());
    std::uint64_t mask = 0;
    for (std::uint64_t m = s.mask(); m != 0; m &= m - 1) {
      mask |= std::uint64_t(1) << a[std::countr_zero(m)];
    }
    return PointSet(s.degree(), mask);
  }

  Partition move_partition(Partition const& p, Permutation const& g) {
    check_same_degree(p.degree(), g.degree());
    std::vector<Point> labels(p.degree());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      labels[g[i]] = p.label(i);
    }
    return Partition(labels);
  }

  ////////////////////////////////////////////////////////////////////////
  // Rendering
  ////////////////////////////////////////////////////////////////////////

  namespace {
    template <typename Range>
    std::string join_one_based(Range const& pts) {
      std::string out;
      bool first = true;
      for (auto p : pts) {
        if (!first) {
          out += ',';
        }
        first = false;
        out += std::to_string(static_cast<unsigned>(p) + 1);
      }
      return out;
    }
  }  // namespace

  std::string to_string(Transformation const& a) {
    return "[" + join_one_based(a.images()) + "]";
  }

  std::string to_image_list(Permutation const& g) {
    return "[" + join_one_based(g.images()) + "]";
  }

  std::string to_string(Permutation const& g) {
    std::string out;
    std::vector<bool> done(g.degree(), false);
    for (std::size_t i = 0; i < g.degree(); ++i) {
      if (done[i] || g[i] == i) {
        continue;
      }
      out += '(';
      std::size_t j = i;
      bool first = true;
      do {
        if (!first) {
          out += ' ';
        }
        first = false;
        out += std::to_string(j + 1);
        done[j] = true;
        j = g[j];
      } while (j != i);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  std::string to_string(PointSet const& s) {
    return "{" + join_one_based(s.points()) + "}";
  }

  std::string to_string(Partition const& p) {
    std::string out = "{";
    bool first = true;
    for (PointSet const& c : p.classes()) {
      if (!first) {
        out += ',';
      }
      first = false;
      out += to_string(c);
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Cursor {
     public:
      explicit Cursor(std::string_view text) : text_(text) {}

      void skip_space() {
        while (pos_ < text_.size()
               && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
          advance();
        }
      }

      bool at_end() {
        skip_space();
        return pos_ >= text_.size();
      }

      char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
      }

      bool accept(char c) {
        if (peek() == c) {
          advance();
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!accept(c)) {
          fail(std::string("expected '") + c + "'");
        }
      }

      unsigned number() {
        skip_space();
        if (pos_ >= text_.size()
            || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          fail("expected a number");
        }
        unsigned long value = 0;
        while (pos_ < text_.size()
               && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
          if (value > 1000000) {
            fail("number too large");
          }
          advance();
        }
        return static_cast<unsigned>(value);
      }

      void finish() {
        if (!at_end()) {
          fail("unexpected trailing input");
        }
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, line_, column_);
      }

     private:
      void advance() {
        if (text_[pos_] == '\n') {
          ++line_;
          column_ = 1;
        } else {
          ++column_;
        }
        ++pos_;
      }

      std::string_view text_;
      std::size_t pos_ = 0;
      std::size_t line_ = 1;
      std::size_t column_ = 1;
    };

    std::vector<unsigned> number_list(Cursor& cur, char open, char close) {
      std::vector<unsigned> out;
      cur.expect(open);
      if (cur.accept(close)) {
        return out;
      }
      do {
        out.push_back(cur.number());
      } while (cur.accept(','));
      cur.expect(close);
      return out;
    }

  }  // namespace

  Transformation parse_transformation(std::string_view text) {
    Cursor cur(text);
    auto values = number_list(cur, '[', ']');
    cur.finish();
    if (values.empty()) {
      cur.fail("empty transformation");
    }
    try {
      return Transformation::from_one_based(values);
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      cur.fail(e.what());
    }
  }

  Permutation parse_permutation(std::string_view text, std::size_t degree) {
    check_degree(degree);
    Cursor cur(text);
    std::vector<Point> img(degree);
    for (std::size_t i = 0; i < degree; ++i) {
      img[i] = static_cast<Point>(i);
    }
    std::uint64_t used = 0;
    while (!cur.at_end()) {
      cur.expect('(');
      std::vector<unsigned> cycle;
      while (cur.peek() != ')') {
        unsigned x = cur.number();
        if (x < 1 || x > degree) {
          cur.fail("point " + std::to_string(x) + " out of range for degree "
                   + std::to_string(degree));
        }
        if ((used >> (x - 1)) & 1) {
          cur.fail("point " + std::to_string(x) + " repeated");
        }
        used |= std::uint64_t(1) << (x - 1);
        cycle.push_back(x - 1);
        cur.accept(',');
      }
      cur.expect(')');
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        img[cycle[i]] = static_cast<Point>(cycle[(i + 1) % cycle.size()]);
      }
    }
    return Permutation(std::move(img));
  }

  PointSet parse_point_set(std::string_view text, std::size_t degree) {
    Cursor cur(text);
    auto values = number_list(cur, '{', '}');
    cur.finish();
    std::sort(values.begin(), values.end());
    if (std::adjacent_find(values.begin(), values.end()) != values.end()) {
      cur.fail("repeated point in set");
    }
    try {
      return PointSet::from_one_based(degree, values);
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      cur.fail(e.what());
    }
  }

  Partition parse_partition(std::string_view text) {
    Cursor cur(text);
    std::vector<std::vector<unsigned>> classes;
    cur.expect('{');
    if (!cur.accept('}')) {
      do {
        classes.push_back(number_list(cur, '{', '}'));
      } while (cur.accept(','));
      cur.expect('}');
    }
    cur.finish();
    std::size_t degree = 0;
    for (auto const& c : classes) {
      degree += c.size();
    }
    if (degree == 0) {
      cur.fail("empty partition");
    }
    if (degree > kMaxDegree) {
      cur.fail("partition degree exceeds " + std::to_string(kMaxDegree));
    }
    std::vector<PointSet> sets;
    std::uint64_t seen = 0;
    for (auto const& c : classes) {
      if (c.empty()) {
        cur.fail("empty class");
      }
      for (unsigned x : c) {
        if (x < 1 || x > degree) {
          cur.fail("point " + std::to_string(x)
                   + " out of range for a partition of "
                   + std::to_string(degree) + " points");
        }
        if ((seen >> (x - 1)) & 1) {
          cur.fail("point " + std::to_string(x) + " in two classes");
        }
        seen |= std::uint64_t(1) << (x - 1);
      }
      sets.push_back(PointSet::from_one_based(degree, c));
    }
    return Partition::from_classes(degree, sets);
  }

}  // namespace utg
