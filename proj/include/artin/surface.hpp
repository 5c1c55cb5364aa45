// Combinatorial model of the plumbed surface of a small-type diagram.
//
// Every generator s contributes an annulus whose core curve gamma_s is a
// closed edge path in a ribbon graph K. Two cores meet in one crossing vertex
// when m_st = 3 and are disjoint when m_st = 2. The thickening of K is the
// surface; faces of the ribbon structure are its boundary circles. The
// mapping class action of the generators is shadowed on H_1 by transvections.

#ifndef ARTIN_SURFACE_HPP_
#define ARTIN_SURFACE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "artin/diagram.hpp"
#include "artin/linalg.hpp"

namespace artin {

  class NotSmallType : public std::runtime_error {
   public:
    explicit NotSmallType(std::string const& what) : std::runtime_error(what) {}
  };

  //! A subset argument violates a check's hypotheses (for instance it is not
  //! irreducible spherical).
  class PreconditionError : public std::runtime_error {
   public:
    explicit PreconditionError(std::string const& what)
        : std::runtime_error(what) {}
  };

  //! Two multicurves outside the cases the disjointness rules characterize.
  class UnsupportedPair : public std::runtime_error {
   public:
    explicit UnsupportedPair(std::string const& what)
        : std::runtime_error(what) {}
  };

  ////////////////////////////////////////////////////////////////////////
  // Ribbon graph
  ////////////////////////////////////////////////////////////////////////

  struct RibbonVertex {
    enum class Kind { private_vertex, crossing };
    Kind        kind;
    std::size_t first;   // generator index; the lexicographically smaller
    std::size_t second;  // partner for crossings, == first otherwise
  };

  //! An arc of some gamma_s, oriented along gamma_s. Its darts are 2e (at the
  //! tail, pointing along the arc) and 2e+1 (at the head).
  struct RibbonEdge {
    std::size_t generator;
    std::size_t tail;
    std::size_t head;
  };

  //! One traversal of an edge.
  struct Step {
    std::size_t edge;
    bool        forward;

    friend bool operator==(Step, Step) = default;
  };

  //! A closed walk; consecutive steps share a vertex, and so do the last and
  //! the first.
  using Walk = std::vector<Step>;

  class CurveSystem;

  //! H_1 of the surface as the cycle space of K, with the intersection form.
  struct HomologyModel {
    std::size_t              rank = 0;
    std::vector<std::size_t> basis_edges;  // non-tree edge of each basis cycle
    std::vector<Walk>        basis_cycles;
    IntMatrix                pairing;  // <basis_i, basis_j>
  };

  class CurveSystem {
   public:
    //! Throws NotSmallType.
    explicit CurveSystem(CoxeterDiagram d);

    CoxeterDiagram const& diagram() const noexcept {
      return diagram_;
    }
    std::vector<RibbonVertex> const& vertices() const noexcept {
      return vertices_;
    }
    std::vector<RibbonEdge> const& edges() const noexcept {
      return edges_;
    }
    //! Darts around vertex v in counterclockwise order.
    std::vector<std::size_t> const& rotation(std::size_t v) const {
      return rotation_.at(v);
    }
    //! gamma_s for the generator with index s.
    Walk const& core(std::size_t s) const {
      return cores_.at(s);
    }
    HomologyModel const& homology() const noexcept {
      return homology_;
    }

    std::size_t dart_vertex(std::size_t dart) const;
    std::size_t start_vertex(Step st) const;
    std::size_t end_vertex(Step st) const;
    std::size_t out_dart(Step st) const {
      return st.forward ? 2 * st.edge : 2 * st.edge + 1;
    }
    std::size_t in_dart(Step st) const {
      return st.forward ? 2 * st.edge + 1 : 2 * st.edge;
    }

    //! Euler characteristic V - E of K.
    std::int64_t euler_characteristic() const;
    //! Number of connected components of K.
    std::size_t connected_components() const;

    //! Faces of the ribbon structure restricted to the edges of \p edge_mask
    //! (all edges when empty), as closed walks.
    std::vector<Walk> faces(std::vector<bool> const& edge_mask = {}) const;

    //! Edge chain of a walk (signed traversal counts).
    IntVector chain(Walk const& w) const;
    //! Coordinates of a closed walk in the basis of homology().
    IntVector h1_class(Walk const& w) const;
    //! Algebraic intersection number of two closed walks, by signed corner
    //! counting after pushing the first walk to its left.
    std::int64_t intersection(Walk const& w1, Walk const& w2) const;
    //! <x, y> on coordinate vectors.
    std::int64_t pairing(IntVector const& x, IntVector const& y) const;

    //! Edges of the cores of the generators in \p t.
    std::vector<bool> edges_of(Subset const& t) const;
    //! Vertices touched by the given walk.
    std::vector<bool> vertices_of(Walk const& w) const;

   private:
    void build();
    void build_homology();

    CoxeterDiagram                        diagram_;
    std::vector<RibbonVertex>             vertices_;
    std::vector<RibbonEdge>               edges_;
    std::vector<std::vector<std::size_t>> rotation_;
    std::vector<std::size_t>              dart_position_;  // index in rotation
    std::vector<Walk>                     cores_;
    HomologyModel                         homology_;
  };

  CurveSystem build_surface(CoxeterDiagram const& d);

  //! Boundary circles of the thickened surface.
  std::vector<Walk> boundary_components(CurveSystem const& cs);

  //! Orientation-insensitive free homotopy test in K: both walks are
  //! cyclically reduced and compared up to rotation and reversal.
  bool freely_homotopic(CurveSystem const& cs, Walk const& a, Walk const& b);
  Walk cyclically_reduced(Walk w);

  ////////////////////////////////////////////////////////////////////////
  // Curves and multicurves
  ////////////////////////////////////////////////////////////////////////

  struct Curve {
    enum class Origin { core, boundary };
    std::string name;    // "gamma_a", "Gamma_{a,b}#0"
    Origin      origin;
    Subset      support;  // {s} for a core, T for a boundary component
    std::size_t index = 0;
    Walk        walk;
    IntVector   h1;
  };

  struct Multicurve {
    std::string        name;
    Curve::Origin      origin;
    Subset             support;
    std::vector<Curve> components;
    bool               pairwise_disjoint = true;
    std::string        disjointness_evidence;
  };

  //! The single curve gamma_s.
  Multicurve core_curve(CurveSystem const& cs, std::string const& s);

  //! Boundary multicurve of the subsurface of an irreducible spherical T.
  //! Throws PreconditionError otherwise.
  Multicurve gamma_T(CurveSystem const& cs, Subset const& t);

  struct DisjointResult {
    bool        disjoint;
    bool        non_isotopic = false;  // set by the boundary-vs-boundary rule
    std::string rule;
    std::string evidence;
  };

  //! Disjointness for the characterized pairs: gamma_s/gamma_t,
  //! gamma_s/Gamma_T with s outside T, and Gamma_T1/Gamma_T2 with T1, T2
  //! disjoint. Throws UnsupportedPair otherwise.
  DisjointResult disjoint(CurveSystem const& cs,
                          Multicurve const&  a,
                          Multicurve const&  b);

  ////////////////////////////////////////////////////////////////////////
  // Action on homology
  ////////////////////////////////////////////////////////////////////////

  //! Transvection x -> x + <x, c> c.
  IntMatrix twist_h1(CurveSystem const& cs, IntVector const& c, std::int64_t power = 1);

  //! Product of generator twists along a word of generator names.
  IntMatrix word_h1(CurveSystem const& cs, std::vector<std::string> const& word);

  struct Multitwist {
    std::map<std::string, std::int64_t> exponents;  // component name -> power
    std::map<std::string, Curve>        curves;

    void add(Curve const& c, std::int64_t power);
  };

  IntMatrix multitwist_h1(CurveSystem const& cs, Multitwist const& mt);

  enum class CommuteVerdict { commute, not_commute, inconclusive };

  //! verdict: commute when every component pair is disjoint, not_commute on
  //! an H_1 witness, inconclusive otherwise. mapping_class additionally
  //! turns a known intersecting pair into not_commute by the twist
  //! commutation criterion, even when H_1 cannot tell.
  struct CommuteResult {
    CommuteVerdict verdict;
    CommuteVerdict mapping_class;
    bool           h1_commute;
    std::string    evidence;
  };

  std::string to_string(CommuteVerdict v);

  CommuteResult commute_check(CurveSystem const& cs,
                              Multitwist const&  a,
                              Multitwist const&  b);

  //! z_T: Delta_T if the longest element is central in W_T, else Delta_T^2.
  std::vector<std::string> center_word(CoxeterDiagram const& d, Subset const& t);

  //! rho(z_T^2) on H_1.
  IntMatrix center_h1(CurveSystem const& cs, Subset const& t);

  //! Integer exponents e_j with I + sum_j (T_{c_j}^{e_j} - I) = target, for
  //! the components c_j of Gamma_T; the components are disjoint, so the
  //! multitwist is that sum.
  struct MultitwistFit {
    bool                      matches = false;
    std::vector<std::int64_t> exponents;

    friend bool operator==(MultitwistFit const&, MultitwistFit const&) = default;
  };

  MultitwistFit fit_boundary_multitwist(CurveSystem const& cs,
                                        Multicurve const&  boundary,
                                        IntMatrix const&   target);

  struct CenterCheck {
    Subset        t;
    std::size_t   word_length = 0;
    bool          delta_central = false;
    MultitwistFit square;  // rho(z_T^2)
    MultitwistFit fourth;  // rho(z_T^4)

    friend bool operator==(CenterCheck const&, CenterCheck const&) = default;
  };

  CenterCheck check_center(CurveSystem const& cs, Subset const& t);

  ////////////////////////////////////////////////////////////////////////
  // Checks with an independent computation on each side
  ////////////////////////////////////////////////////////////////////////

  //! Both sides of: gamma_s meets Gamma_T iff gamma_s meets some gamma_t.
  struct CoreBoundaryCheck {
    bool        criterion;  // some m_st = 3
    bool        computed;   // graph contact and homology support
    std::string detail;
    bool        agree() const {
      return criterion == computed;
    }
  };

  CoreBoundaryCheck check_core_vs_boundary(CurveSystem const& cs,
                               Subset const&      t,
                               std::string const& s);

  //! Components of Gamma_T1 and Gamma_T2 are disjoint and pairwise
  //! non-isotopic. T1 and T2 must be irreducible spherical, disjoint and
  //! mutually commuting.
  struct BoundaryPairCheck {
    bool        disjoint;
    bool        non_isotopic;
    std::string detail;
    bool        holds() const {
      return disjoint && non_isotopic;
    }
  };

  BoundaryPairCheck check_boundary_pair(CurveSystem const& cs,
                               Subset const&      t1,
                               Subset const&      t2);

  struct CheckItem {
    std::string name;
    bool        passed;
    std::string detail;

    friend bool operator==(CheckItem const&, CheckItem const&) = default;
  };

  //! Relations on H_1, core disjointness and crossings, center multitwists
  //! and core-vs-boundary agreement, one item per instance.
  std::vector<CheckItem> check_representation(CurveSystem const& cs);

  //! Irreducible spherical subsets, graded lexicographic order.
  std::vector<Subset> irreducible_spherical_subsets(CoxeterDiagram const& d);

  //! Everything: Euler characteristic, boundary/genus consistency, pairing,
  //! transvections, braid relations, the core-vs-boundary and boundary-pair checks and the z_T checks.
  struct SurfaceSuite {
    std::size_t              vertices = 0;
    std::size_t              edges = 0;
    std::int64_t             euler = 0;
    std::size_t              boundary = 0;
    std::size_t              genus = 0;
    std::size_t              h1_rank = 0;
    std::vector<CheckItem>   checks;
    std::vector<CenterCheck> centers;

    bool passed() const;

    friend bool operator==(SurfaceSuite const&, SurfaceSuite const&) = default;
  };

  SurfaceSuite run_surface_suite(CoxeterDiagram const& d);

}  // namespace artin

#endif  // ARTIN_SURFACE_HPP_
