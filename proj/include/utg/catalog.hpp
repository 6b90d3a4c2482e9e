// Named permutation groups in fixed actions.
//
// Point numbering:
//   affine groups        vector (c1,...,ck) over GF(p) is point 1 + sum ci p^(k-i)
//   projective line      point 1 is infinity, point i+2 is field element of
//                        index i (see FiniteField)
//   higher projective    normalised row vectors (first non-zero entry 1),
//                        lexicographic on coefficient codes
//   k-subset actions     k-subsets of the inner domain in lexicographic order
//
// Matrices act on row vectors from the right.

#ifndef UTG_CATALOG_HPP_
#define UTG_CATALOG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "utg/group.hpp"

namespace utg {

  Group symmetric_group(std::size_t n);
  Group alternating_group(std::size_t n);
  Group cyclic_group(std::size_t n);
  // Degree p, order 2p: x -> x+1 and x -> -x on GF(p).
  Group dihedral_group(std::size_t p);
  // Subgroup of AGL(1,p) of order p*d generated by x -> x+1 and x -> c x,
  // c of multiplicative order d.
  Group affine_frobenius_group(unsigned p, unsigned d);
  Group affine_general_linear(unsigned k, unsigned p);

  enum class ProjectiveLineExtension {
    special,        // PSL(2,q)
    general,        // PGL(2,q)
    semilinear,     // PSigmaL(2,q): PSL and the Frobenius map
    full,           // PGammaL(2,q)
    mathieu10,      // PSL(2,9) and x -> l x^3
    frobenius_sq,   // PSL(2,q) and x -> x^(p^2)
  };

  // Generators of the given extension of PSL(2,q) on the q+1 points of the
  // projective line: x+1, l^2 x (l x for even q), -1/x, then l x for PGL,
  // then x -> x^p for the semilinear groups.
  std::vector<Permutation> psl2_action(unsigned q,
                                       ProjectiveLineExtension ext
                                       = ProjectiveLineExtension::special);
  Group projective_line_group(unsigned q, ProjectiveLineExtension ext);

  enum class ProjectiveSpaceExtension { special, general, semilinear, full };
  // PSL(d,q) and its extensions on the (q^d-1)/(q-1) projective points.
  Group projective_space_group(unsigned d, unsigned q,
                               ProjectiveSpaceExtension ext);

  // G acting on the lexicographically ordered k-subsets of its domain.
  Group action_on_k_subsets(Group const& g, std::size_t k);
  std::vector<PointSet> lex_k_subsets(std::size_t n, std::size_t k);

  // Group file (see README for the grammar). The declared order must equal
  // the computed one.
  struct GroupFile {
    std::string name;
    Group group;
  };
  GroupFile parse_group_file(std::string_view text);
  GroupFile load_group_file(std::filesystem::path const& path);
  std::string write_group_file(std::string const& name, Group const& g,
                               std::vector<std::string> const& comments = {});

  // Directory holding groups/*.grp: $UTG_DATA_DIR if set, else the
  // directory configured at build time.
  std::filesystem::path default_data_dir();

  struct NamedGroup {
    std::string name;
    Group group;
  };

  // Builds a group from a catalogue name such as "C5", "AGL(1,7)",
  // "PGammaL(2,8)", "PSL(2,11)@11", "M23", "ActionOnKSubsets(Alt(5),2)" or a
  // path to a .grp file. Throws Error for unknown names and for missing or
  // invalid data files.
  NamedGroup build(std::string_view name,
                   std::filesystem::path const& data_dir = default_data_dir());

  // True if `name` would be read from a data file.
  bool is_file_backed(std::string_view name);

  // Renumbering of a catalogue group onto the point labels of the GAP
  // primitive groups library, which published witness tables refer to.
  // `relabeling` is in cycle notation; file-backed groups already use those
  // labels and carry "()".
  struct LibraryLabel {
    std::string name;
    std::size_t degree;
    unsigned library_id;
    std::string relabeling;
  };
  std::vector<LibraryLabel> const& library_labels();

  // build(name), renumbered by its library_labels() entry. Throws Error for
  // names without an entry.
  NamedGroup build_library_labelled(
      std::string_view name,
      std::filesystem::path const& data_dir = default_data_dir());

  // Every name accepted by build() without parameters, for listings.
  std::vector<std::string> catalog_names();

}  // namespace utg

#endif  // UTG_CATALOG_HPP_
