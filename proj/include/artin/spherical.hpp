// Recognition of finite-type (spherical) Coxeter subdiagrams, an exact
// breadth-first oracle for Coxeter group orders, spherical subset enumeration
// and spherical factors.

#ifndef ARTIN_SPHERICAL_HPP_
#define ARTIN_SPHERICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "artin/diagram.hpp"

namespace artin {

  using CoxOrder = boost::multiprecision::cpp_int;

  enum class Family { A, B, D, E, F, H, I };

  //! One irreducible finite-type component, e.g. A_3 on {a,b,c}.
  struct FamilyComponent {
    Family        family;
    std::size_t   rank;
    std::uint32_t dihedral_label = 0;  // m for I_2(m), 0 otherwise
    Subset        subset;

    //! "A_3", "E_6", "I_2(7)"
    std::string tag() const;
    CoxOrder    order() const;

    friend bool operator==(FamilyComponent const&,
                           FamilyComponent const&) = default;
  };

  struct SphericalReport {
    Subset                       subset;
    bool                         spherical = false;
    std::vector<FamilyComponent> families;   // when spherical
    std::vector<Subset> infinite_components;  // components that failed to match
    std::optional<CoxOrder>      coxeter_order;
  };

  //! Order of the finite Coxeter group of the given family.
  CoxOrder family_order(Family f, std::size_t rank, std::uint32_t m = 0);

  //! Classifies an irreducible subdiagram; nullopt if it is of infinite type.
  std::optional<FamilyComponent> classify_irreducible(CoxeterDiagram const& d,
                                                      GenMask mask);

  SphericalReport is_spherical(CoxeterDiagram const& d, Subset const& subset);
  bool            is_spherical(CoxeterDiagram const& d, GenMask mask);
  bool            is_spherical(CoxeterDiagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Finite-type table
  ////////////////////////////////////////////////////////////////////////

  //! A row of the built-in finite-type table: the labels that can occur on
  //! edges of a diagram of this family.
  struct FamilyTableRow {
    Family                     family;
    std::string                name;
    std::size_t                min_rank;
    std::optional<std::size_t> max_rank;  // nullopt: unbounded
    std::vector<std::uint32_t> edge_labels;  // empty for I_2(m): any m >= 3
  };

  std::vector<FamilyTableRow> const& finite_type_table();

  //! Families whose diagrams may carry an edge labelled \p m.
  std::vector<Family> families_admitting_label(std::uint32_t m);

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first oracle
  ////////////////////////////////////////////////////////////////////////

  class UnsupportedLabels : public std::runtime_error {
   public:
    explicit UnsupportedLabels(std::string const& what)
        : std::runtime_error(what) {}
  };

  struct ExceededCap {
    std::uint64_t cap;
    friend bool   operator==(ExceededCap, ExceededCap) = default;
  };

  using BfsOrder = std::variant<std::uint64_t, ExceededCap>;

  inline constexpr std::uint64_t default_bfs_cap = 20000;

  //! True iff the exact oracle applies: rank <= 2, or every label lies in
  //! {2, 3, 4, 6, inf}.
  bool bfs_supported(CoxeterDiagram const& d, GenMask mask);

  //! Closure of the orbit of a chamber point under the reflections of the
  //! geometric representation, computed exactly over Z[sqrt2, sqrt3].
  //! Rank <= 2 is answered by |W| = 2m. Throws UnsupportedLabels when the
  //! labels are not supported.
  BfsOrder coxeter_order_bfs(CoxeterDiagram const& d,
                             Subset const&         subset,
                             std::uint64_t         cap = default_bfs_cap);
  BfsOrder coxeter_order_bfs(CoxeterDiagram const& d,
                             GenMask               mask,
                             std::uint64_t         cap = default_bfs_cap);

  //! Longest element of a finite parabolic subgroup, from the same BFS.
  struct LongestElement {
    std::vector<std::string> reduced_word;
    bool                     central = false;
    std::uint64_t            group_order = 0;
  };

  //! Throws UnsupportedLabels, or std::domain_error if the group is infinite
  //! or larger than \p cap.
  LongestElement longest_element(CoxeterDiagram const& d,
                                 Subset const&         subset,
                                 std::uint64_t         cap = default_bfs_cap);

  //! Same element by the numbers game: starting at the chamber point, fire
  //! the first generator with a positive coordinate until none is left. Takes
  //! length(w0) steps instead of |W|; group_order is left at 0. Throws
  //! UnsupportedLabels, or std::domain_error after \p max_length firings.
  LongestElement longest_element_game(CoxeterDiagram const& d,
                                      Subset const&         subset,
                                      std::size_t           max_length = 4096);

  //! Floating-point cross-check: the Gram matrix (entries -cos(pi/m)) is
  //! positive definite with smallest eigenvalue above \p tol.
  bool gram_positive_definite(CoxeterDiagram const& d,
                              Subset const&         subset,
                              double                tol = 1e-9);

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  //! Maximal size of a spherical subset, with every subset attaining it.
  struct CdReport {
    std::size_t         value = 0;
    std::vector<Subset> witnesses;  // lexicographic order

    friend bool operator==(CdReport const&, CdReport const&) = default;
  };

  //! All spherical subsets (including the empty set) in graded
  //! lexicographic order. A subset is tested only if all of its maximal
  //! proper subsets are spherical.
  std::vector<Subset> spherical_subsets(CoxeterDiagram const& d);
  std::vector<GenMask> spherical_masks(CoxeterDiagram const& d);

  CdReport    max_spherical(CoxeterDiagram const& d);
  std::size_t max_spherical_value(CoxeterDiagram const& d, GenMask within);

  struct FactorSplit {
    std::vector<Subset> spherical;  // U_1..U_p
    std::vector<Subset> infinite;   // V_1..V_q

    friend bool operator==(FactorSplit const&, FactorSplit const&) = default;
  };

  FactorSplit spherical_factors(CoxeterDiagram const& d);

}  // namespace artin

#endif  // ARTIN_SPHERICAL_HPP_
