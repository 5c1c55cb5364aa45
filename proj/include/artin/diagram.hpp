// Coxeter diagrams: labeled generator sets, subsets, induced subdiagrams and
// connected components.

#ifndef ARTIN_DIAGRAM_HPP_
#define ARTIN_DIAGRAM_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace artin {

  //! Raised for malformed diagram files and invalid diagram constructions.
  class DiagramError : public std::runtime_error {
   public:
    explicit DiagramError(std::string const& what) : std::runtime_error(what) {}
  };

  //! An entry m_st of a Coxeter matrix: an integer >= 2 or infinity.
  class Label {
   public:
    static Label infinity() noexcept {
      return Label(0);
    }
    //! Throws DiagramError if \p m < 2.
    static Label finite(std::uint32_t m);

    bool is_infinite() const noexcept {
      return m_ == 0;
    }
    bool is_finite() const noexcept {
      return m_ != 0;
    }
    //! The integer value; throws std::logic_error for infinity.
    std::uint32_t value() const;

    //! True iff the pair is joined by an edge of the Coxeter graph (m > 2).
    bool is_edge() const noexcept {
      return m_ != 2;
    }

    std::string to_string() const;

    friend bool operator==(Label, Label) = default;

   private:
    explicit constexpr Label(std::uint32_t m) : m_(m) {}
    std::uint32_t m_;  // 0 encodes infinity
  };

  //! A set of generator names, always held in sorted order.
  class Subset {
   public:
    Subset() = default;
    Subset(std::vector<std::string> names);
    Subset(std::initializer_list<std::string> names)
        : Subset(std::vector<std::string>(names)) {}

    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::size_t size() const noexcept {
      return names_.size();
    }
    bool empty() const noexcept {
      return names_.empty();
    }
    bool contains(std::string_view name) const;
    bool is_subset_of(Subset const& other) const;

    Subset united(Subset const& other) const;
    Subset intersected(Subset const& other) const;
    Subset without(Subset const& other) const;
    Subset with(std::string const& name) const;

    //! "{a,b,c}"
    std::string to_string() const;

    auto begin() const {
      return names_.begin();
    }
    auto end() const {
      return names_.end();
    }

    friend bool operator==(Subset const&, Subset const&) = default;
    friend auto operator<=>(Subset const&, Subset const&) = default;

   private:
    std::vector<std::string> names_;
  };

  //! Graded lexicographic order: by size, then lexicographically.
  bool graded_less(Subset const& a, Subset const& b);

  //! Bit mask over generator indices of a fixed diagram (rank <= 64).
  using GenMask = std::uint64_t;

  //! A Coxeter diagram: ordered generators and a symmetric label matrix.
  //!
  //! Generators keep the order in which they were declared. The label of an
  //! unordered pair of distinct generators is always defined; the diagonal is
  //! not stored.
  class CoxeterDiagram {
   public:
    static constexpr std::size_t max_rank = 64;

    CoxeterDiagram() = default;

    //! All pairs default to \p fill.
    explicit CoxeterDiagram(std::vector<std::string> generators,
                            Label fill = Label::finite(2));

    std::size_t rank() const noexcept {
      return generators_.size();
    }
    bool empty() const noexcept {
      return generators_.empty();
    }
    std::vector<std::string> const& generators() const noexcept {
      return generators_;
    }
    std::string const& name(std::size_t i) const {
      return generators_.at(i);
    }

    std::optional<std::size_t> index_of(std::string_view name) const;
    //! Throws DiagramError for unknown names.
    std::size_t require_index(std::string_view name) const;

    Label label(std::size_t i, std::size_t j) const;
    Label label(std::string_view s, std::string_view t) const;

    void set_label(std::size_t i, std::size_t j, Label m);
    void set_label(std::string_view s, std::string_view t, Label m);

    //! All generators as a sorted Subset.
    Subset all() const;

    GenMask mask_of(Subset const& subset) const;
    Subset subset_of(GenMask mask) const;
    GenMask full_mask() const noexcept;

    friend bool operator==(CoxeterDiagram const&,
                           CoxeterDiagram const&) = default;

   private:
    std::vector<std::string> generators_;
    std::vector<Label>       labels_;  // row-major rank x rank
  };

  //! Reads the diagram file format:
  //!
  //!   generators: a b c
  //!   default: 2          (optional, "2" or "inf")
  //!   a b 3
  //!   b c inf             # comment
  CoxeterDiagram parse_diagram(std::string_view text);

  //! Canonical text form; parse_diagram(serialize(d)) == d.
  std::string serialize(CoxeterDiagram const& d);

  //! Restriction of \p d to \p subset, keeping the ambient generator order.
  CoxeterDiagram induced(CoxeterDiagram const& d, Subset const& subset);
  CoxeterDiagram induced(CoxeterDiagram const& d, GenMask mask);

  //! Connected components of the Coxeter graph (edges: m > 2), ordered by
  //! their least generator name.
  std::vector<Subset> components(CoxeterDiagram const& d);
  std::vector<GenMask> component_masks(CoxeterDiagram const& d, GenMask within);

  bool is_small_type(CoxeterDiagram const& d);
  bool is_free_of_infinity(CoxeterDiagram const& d);
  bool is_irreducible(CoxeterDiagram const& d);

  //! Disjoint union; throws DiagramError on a name clash.
  CoxeterDiagram disjoint_union(CoxeterDiagram const& a,
                                CoxeterDiagram const& b);

}  // namespace artin

#endif  // ARTIN_DIAGRAM_HPP_
