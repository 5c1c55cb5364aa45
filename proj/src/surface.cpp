#include "artin/surface.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <utility>

#include "artin/quadratic.hpp"
#include "artin/spherical.hpp"

namespace artin {

  namespace {
    std::string core_name(std::string const& s) {
      return "gamma_" + s;
    }

    std::string boundary_name(Subset const& t, std::size_t i) {
      return "Gamma_" + t.to_string() + "#" + std::to_string(i);
    }

    Step step_of_out_dart(std::size_t d) {
      return {d / 2, d % 2 == 0};
    }

    Step reversed(Step s) {
      return {s.edge, !s.forward};
    }

    Walk reversed(Walk const& w) {
      Walk out;
      for (auto it = w.rbegin(); it != w.rend(); ++it) {
        out.push_back(reversed(*it));
      }
      return out;
    }

    bool is_three(CoxeterDiagram const& d, std::size_t i, std::size_t j) {
      return d.label(i, j).is_edge();
    }

    void require_irreducible_spherical(CoxeterDiagram const& d,
                                       Subset const&         t) {
      if (t.empty()) {
        throw PreconditionError("TNotIrreducibleSpherical: empty subset");
      }
      for (auto const& s : t) {
        if (!d.index_of(s)) {
          throw PreconditionError("TNotIrreducibleSpherical: unknown generator "
                                  + s);
        }
      }
      if (!is_irreducible(induced(d, t)) || !is_spherical(d, d.mask_of(t))) {
        throw PreconditionError("TNotIrreducibleSpherical: " + t.to_string());
      }
    }

    std::string join(std::vector<std::string> const& parts, char const* sep) {
      std::string out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        out += (i ? sep : "") + parts[i];
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Ribbon graph
  ////////////////////////////////////////////////////////////////////////

  CurveSystem::CurveSystem(CoxeterDiagram d) : diagram_(std::move(d)) {
    if (!is_small_type(diagram_)) {
      throw NotSmallType("surface model needs all labels in {2,3}");
    }
    build();
    build_homology();
  }

  void CurveSystem::build() {
    auto const  n     = diagram_.rank();
    auto const& names = diagram_.generators();
    for (std::size_t s = 0; s < n; ++s) {
      vertices_.push_back({RibbonVertex::Kind::private_vertex, s, s});
    }
    std::vector<std::vector<std::size_t>> crossing(
        n, std::vector<std::size_t>(n, SIZE_MAX));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (is_three(diagram_, i, j)) {
          auto lo = names[i] < names[j] ? i : j;
          auto hi = lo == i ? j : i;
          crossing[i][j] = crossing[j][i] = vertices_.size();
          vertices_.push_back({RibbonVertex::Kind::crossing, lo, hi});
        }
      }
    }

    // out_edge[s][v], in_edge[s][v]: the arcs of gamma_s leaving and
    // entering vertex v.
    std::vector<std::vector<std::size_t>> out_edge(
        n, std::vector<std::size_t>(vertices_.size(), SIZE_MAX));
    auto in_edge = out_edge;
    cores_.resize(n);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<std::size_t> partners;
      for (std::size_t t = 0; t < n; ++t) {
        if (t != s && is_three(diagram_, s, t)) {
          partners.push_back(t);
        }
      }
      std::sort(partners.begin(), partners.end(), [&](auto a, auto b) {
        return names[a] < names[b];
      });
      std::vector<std::size_t> seq;
      for (auto t : partners) {
        seq.push_back(crossing[s][t]);
      }
      seq.push_back(s);
      for (std::size_t i = 0; i < seq.size(); ++i) {
        auto tail = seq[i];
        auto head = seq[(i + 1) % seq.size()];
        auto e    = edges_.size();
        edges_.push_back({s, tail, head});
        out_edge[s][tail] = e;
        in_edge[s][head]  = e;
        cores_[s].push_back({e, true});
      }
    }

    rotation_.resize(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      auto const& vx = vertices_[v];
      if (vx.kind == RibbonVertex::Kind::private_vertex) {
        rotation_[v] = {2 * out_edge[vx.first][v], 2 * in_edge[vx.first][v] + 1};
      } else {
        auto s       = vx.first;
        auto t       = vx.second;
        rotation_[v] = {2 * out_edge[s][v],
                        2 * out_edge[t][v],
                        2 * in_edge[s][v] + 1,
                        2 * in_edge[t][v] + 1};
      }
    }
    dart_position_.assign(2 * edges_.size(), 0);
    for (auto const& rot : rotation_) {
      for (std::size_t i = 0; i < rot.size(); ++i) {
        dart_position_[rot[i]] = i;
      }
    }
  }

  std::size_t CurveSystem::dart_vertex(std::size_t dart) const {
    auto const& e = edges_.at(dart / 2);
    return dart % 2 == 0 ? e.tail : e.head;
  }

  std::size_t CurveSystem::start_vertex(Step st) const {
    return dart_vertex(out_dart(st));
  }

  std::size_t CurveSystem::end_vertex(Step st) const {
    return dart_vertex(in_dart(st));
  }

  std::int64_t CurveSystem::euler_characteristic() const {
    return static_cast<std::int64_t>(vertices_.size())
           - static_cast<std::int64_t>(edges_.size());
  }

  namespace {
    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::size_t a, std::size_t b) {
        parent[find(a)] = find(b);
      }
    };
  }  // namespace

  std::size_t CurveSystem::connected_components() const {
    UnionFind uf(vertices_.size());
    for (auto const& e : edges_) {
      uf.unite(e.tail, e.head);
    }
    std::size_t c = 0;
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      c += uf.find(v) == v;
    }
    return c;
  }

  std::vector<Walk> CurveSystem::faces(std::vector<bool> const& edge_mask) const {
    auto in_mask = [&](std::size_t dart) {
      return edge_mask.empty() || edge_mask.at(dart / 2);
    };
    // Counterclockwise successor among the darts kept by the mask.
    auto sigma = [&](std::size_t dart) {
      auto const& rot = rotation_[dart_vertex(dart)];
      auto        pos = dart_position_[dart];
      for (std::size_t k = 1; k <= rot.size(); ++k) {
        auto next = rot[(pos + k) % rot.size()];
        if (in_mask(next)) {
          return next;
        }
      }
      return dart;
    };
    std::vector<Walk> out;
    std::vector<bool> seen(2 * edges_.size(), false);
    for (std::size_t d = 0; d < seen.size(); ++d) {
      if (seen[d] || !in_mask(d)) {
        continue;
      }
      Walk        face;
      std::size_t cur = d;
      do {
        seen[cur] = true;
        face.push_back(step_of_out_dart(cur));
        cur = sigma(cur ^ 1);
      } while (cur != d);
      out.push_back(std::move(face));
    }
    return out;
  }

  IntVector CurveSystem::chain(Walk const& w) const {
    IntVector c(edges_.size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
      auto next = w[(i + 1) % w.size()];
      if (end_vertex(w[i]) != start_vertex(next)) {
        throw std::invalid_argument("walk is not closed");
      }
      c.at(w[i].edge) += w[i].forward ? 1 : -1;
    }
    return c;
  }

  IntVector CurveSystem::h1_class(Walk const& w) const {
    auto      c = chain(w);
    IntVector x(homology_.rank);
    for (std::size_t i = 0; i < homology_.rank; ++i) {
      x[i] = c[homology_.basis_edges[i]];
    }
    return x;
  }

  std::int64_t CurveSystem::intersection(Walk const& w1, Walk const& w2) const {
    struct Passage {
      std::size_t in;
      std::size_t out;
    };
    std::vector<std::vector<Passage>> at(vertices_.size());
    for (std::size_t j = 0; j < w2.size(); ++j) {
      at[end_vertex(w2[j])].push_back(
          {in_dart(w2[j]), out_dart(w2[(j + 1) % w2.size()])});
    }
    std::int64_t total = 0;
    for (std::size_t i = 0; i < w1.size(); ++i) {
      auto v   = end_vertex(w1[i]);
      auto a   = in_dart(w1[i]);
      auto b   = out_dart(w1[(i + 1) % w1.size()]);
      auto deg = rotation_[v].size();
      auto pb  = dart_position_[b];
      auto span = (dart_position_[a] + deg - pb) % deg;
      // Darts strictly between b and a counterclockwise: the side the
      // pushed-off copy of w1 passes on.
      auto left = [&](std::size_t x) {
        auto off = (dart_position_[x] + deg - pb) % deg;
        return off > 0 && off < span;
      };
      for (auto const& p : at[v]) {
        bool li = left(p.in);
        bool lo = left(p.out);
        total += (!li && lo) ? 1 : (li && !lo) ? -1 : 0;
      }
    }
    return total;
  }

  std::int64_t CurveSystem::pairing(IntVector const& x, IntVector const& y) const {
    return dot(x, homology_.pairing * y);
  }

  std::vector<bool> CurveSystem::edges_of(Subset const& t) const {
    std::vector<bool> mask(edges_.size(), false);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      mask[e] = t.contains(diagram_.name(edges_[e].generator));
    }
    return mask;
  }

  std::vector<bool> CurveSystem::vertices_of(Walk const& w) const {
    std::vector<bool> mask(vertices_.size(), false);
    for (auto st : w) {
      mask[start_vertex(st)] = true;
      mask[end_vertex(st)]   = true;
    }
    return mask;
  }

  void CurveSystem::build_homology() {
    auto const nv = vertices_.size();
    std::vector<std::vector<std::size_t>> incident(nv);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      incident[edges_[e].tail].push_back(e);
      if (edges_[e].head != edges_[e].tail) {
        incident[edges_[e].head].push_back(e);
      }
    }
    std::vector<std::size_t> parent_edge(nv, SIZE_MAX);
    std::vector<std::size_t> depth(nv, 0);
    std::vector<bool>        reached(nv, false);
    std::vector<bool>        tree(edges_.size(), false);
    for (std::size_t root = 0; root < nv; ++root) {
      if (reached[root]) {
        continue;
      }
      reached[root] = true;
      std::deque<std::size_t> queue{root};
      while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        for (auto e : incident[v]) {
          auto u = edges_[e].tail == v ? edges_[e].head : edges_[e].tail;
          if (!reached[u]) {
            reached[u]     = true;
            parent_edge[u] = e;
            depth[u]       = depth[v] + 1;
            tree[e]        = true;
            queue.push_back(u);
          }
        }
      }
    }
    auto parent = [&](std::size_t v) {
      auto const& e = edges_[parent_edge[v]];
      return e.tail == v ? e.head : e.tail;
    };
    auto up_step = [&](std::size_t v) {
      return Step{parent_edge[v], edges_[parent_edge[v]].tail == v};
    };
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      if (tree[e]) {
        continue;
      }
      Walk        cycle{{e, true}};
      std::size_t u = edges_[e].head;
      std::size_t v = edges_[e].tail;
      Walk        down;
      while (u != v) {
        if (depth[u] >= depth[v]) {
          cycle.push_back(up_step(u));
          u = parent(u);
        } else {
          down.push_back(reversed(up_step(v)));
          v = parent(v);
        }
      }
      cycle.insert(cycle.end(), down.rbegin(), down.rend());
      homology_.basis_edges.push_back(e);
      homology_.basis_cycles.push_back(std::move(cycle));
    }
    homology_.rank    = homology_.basis_edges.size();
    homology_.pairing = IntMatrix(homology_.rank, homology_.rank);
    for (std::size_t i = 0; i < homology_.rank; ++i) {
      for (std::size_t j = 0; j < homology_.rank; ++j) {
        homology_.pairing(i, j) =
            intersection(homology_.basis_cycles[i], homology_.basis_cycles[j]);
      }
    }
  }

  CurveSystem build_surface(CoxeterDiagram const& d) {
    return CurveSystem(d);
  }

  std::vector<Walk> boundary_components(CurveSystem const& cs) {
    return cs.faces();
  }

  Walk cyclically_reduced(Walk w) {
    Walk stack;
    for (auto st : w) {
      if (!stack.empty() && stack.back() == reversed(st)) {
        stack.pop_back();
      } else {
        stack.push_back(st);
      }
    }
    std::size_t lo = 0;
    std::size_t hi = stack.size();
    while (hi - lo >= 2 && stack[hi - 1] == reversed(stack[lo])) {
      ++lo;
      --hi;
    }
    return Walk(stack.begin() + static_cast<std::ptrdiff_t>(lo),
                stack.begin() + static_cast<std::ptrdiff_t>(hi));
  }

  bool freely_homotopic(CurveSystem const&, Walk const& a, Walk const& b) {
    auto ra = cyclically_reduced(a);
    auto rb = cyclically_reduced(b);
    if (ra.size() != rb.size()) {
      return false;
    }
    if (ra.empty()) {
      return true;
    }
    auto is_rotation = [&](Walk const& x) {
      Walk doubled = ra;
      doubled.insert(doubled.end(), ra.begin(), ra.end());
      return std::search(doubled.begin(), doubled.end(), x.begin(), x.end())
             != doubled.end();
    };
    return is_rotation(rb) || is_rotation(reversed(rb));
  }

  ////////////////////////////////////////////////////////////////////////
  // Curves and multicurves
  ////////////////////////////////////////////////////////////////////////

  Multicurve core_curve(CurveSystem const& cs, std::string const& s) {
    auto  i = cs.diagram().require_index(s);
    Curve c{core_name(s), Curve::Origin::core, Subset{s}, 0, cs.core(i), {}};
    c.h1 = cs.h1_class(c.walk);
    Multicurve mc{core_name(s), Curve::Origin::core, Subset{s}, {c}, true,
                  "single curve"};
    return mc;
  }

  Multicurve gamma_T(CurveSystem const& cs, Subset const& t) {
    require_irreducible_spherical(cs.diagram(), t);
    Multicurve mc;
    mc.name    = "Gamma_" + t.to_string();
    mc.origin  = Curve::Origin::boundary;
    mc.support = t;
    auto faces = cs.faces(cs.edges_of(t));
    for (std::size_t i = 0; i < faces.size(); ++i) {
      Curve c{boundary_name(t, i), Curve::Origin::boundary, t, i, faces[i], {}};
      c.h1 = cs.h1_class(c.walk);
      mc.components.push_back(std::move(c));
    }
    mc.pairwise_disjoint     = true;
    mc.disjointness_evidence = "distinct boundary circles of the ribbon "
                               "subgraph K_T (face tracing)";
    return mc;
  }

  namespace {
    bool share_vertex(CurveSystem const& cs, Walk const& a, Walk const& b) {
      auto va = cs.vertices_of(a);
      auto vb = cs.vertices_of(b);
      for (std::size_t v = 0; v < va.size(); ++v) {
        if (va[v] && vb[v]) {
          return true;
        }
      }
      return false;
    }

    bool commuting_sets(CoxeterDiagram const& d, Subset const& a, Subset const& b) {
      for (auto const& s : a) {
        for (auto const& t : b) {
          if (d.label(s, t).is_edge()) {
            return false;
          }
        }
      }
      return true;
    }

    // A generator of T joined to s, if any.
    std::optional<std::string> neighbour_in(CoxeterDiagram const& d,
                                            std::string const&    s,
                                            Subset const&         t) {
      for (auto const& u : t) {
        if (d.label(s, u).is_edge()) {
          return u;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  DisjointResult disjoint(CurveSystem const& cs,
                          Multicurve const&  a,
                          Multicurve const&  b) {
    auto const& d = cs.diagram();
    using O       = Curve::Origin;
    if (a.origin == O::core && b.origin == O::core) {
      auto s = a.support.names().front();
      auto t = b.support.names().front();
      if (s == t) {
        throw UnsupportedPair("a core curve against itself");
      }
      bool dis = !d.label(s, t).is_edge();
      return {dis, false, "core curves are disjoint iff m_st = 2",
              "m_" + s + t + " = " + d.label(s, t).to_string()};
    }
    if (a.origin != b.origin) {
      auto const& core = a.origin == O::core ? a : b;
      auto const& bdry = a.origin == O::core ? b : a;
      auto        s    = core.support.names().front();
      if (bdry.support.contains(s)) {
        throw UnsupportedPair("core curve of a generator inside T");
      }
      auto nb = neighbour_in(d, s, bdry.support);
      return {!nb, false,
              "a core curve misses Gamma_T iff m_st = 2 for all t in T",
              nb ? "m_" + s + *nb + " = 3" : "m_" + s + "t = 2 for all t in "
                                                 + bdry.support.to_string()};
    }
    if (!a.support.intersected(b.support).empty()) {
      throw UnsupportedPair("boundary multicurves of overlapping subsets");
    }
    if (commuting_sets(d, a.support, b.support)) {
      auto chk = check_boundary_pair(cs, a.support, b.support);
      return {chk.disjoint, chk.non_isotopic,
              "boundary multicurves of disjoint commuting irreducible "
              "spherical subsets are disjoint and non-isotopic",
              chk.detail};
    }
    for (auto const& x : a.components) {
      for (auto const& y : b.components) {
        auto k = cs.intersection(x.walk, y.walk);
        if (k != 0) {
          return {false, false, "nonzero algebraic intersection",
                  "<" + x.name + ", " + y.name + "> = " + std::to_string(k)};
        }
      }
    }
    throw UnsupportedPair("boundary multicurves of adjacent subsets with "
                          "zero algebraic intersection");
  }

  ////////////////////////////////////////////////////////////////////////
  // Action on homology
  ////////////////////////////////////////////////////////////////////////

  IntMatrix twist_h1(CurveSystem const& cs, IntVector const& c, std::int64_t power) {
    auto const& p  = cs.homology().pairing;
    auto const  n  = p.rows();
    auto        pc = p * c;
    IntMatrix   m  = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) = detail::checked_add(
            m(i, j), detail::checked_mul(power, detail::checked_mul(c[i], pc[j])));
      }
    }
    return m;
  }

  IntMatrix word_h1(CurveSystem const& cs, std::vector<std::string> const& word) {
    auto const n = cs.homology().rank;
    std::vector<std::optional<IntMatrix>> cache(cs.diagram().rank());
    IntMatrix m = IntMatrix::identity(n);
    for (auto const& s : word) {
      auto i = cs.diagram().require_index(s);
      if (!cache[i]) {
        cache[i] = twist_h1(cs, cs.h1_class(cs.core(i)));
      }
      m = m * *cache[i];
    }
    return m;
  }

  void Multitwist::add(Curve const& c, std::int64_t power) {
    auto& e = exponents[c.name];
    e += power;
    curves.insert_or_assign(c.name, c);
    if (e == 0) {
      exponents.erase(c.name);
      curves.erase(c.name);
    }
  }

  IntMatrix multitwist_h1(CurveSystem const& cs, Multitwist const& mt) {
    IntMatrix m = IntMatrix::identity(cs.homology().rank);
    for (auto const& [name, e] : mt.exponents) {
      m = m * twist_h1(cs, mt.curves.at(name).h1, e);
    }
    return m;
  }

  std::string to_string(CommuteVerdict v) {
    switch (v) {
      case CommuteVerdict::commute:
        return "Commute";
      case CommuteVerdict::not_commute:
        return "NotCommute";
      case CommuteVerdict::inconclusive:
        return "Inconclusive";
    }
    return "?";
  }

  namespace {
    enum class Relation { disjoint, intersect, unknown };

    Relation relation(CurveSystem const& cs, Curve const& x, Curve const& y) {
      auto const& d = cs.diagram();
      using O       = Curve::Origin;
      if (x.name == y.name) {
        return Relation::disjoint;  // one curve: the twists commute
      }
      if (cs.intersection(x.walk, y.walk) != 0) {
        return Relation::intersect;
      }
      if (x.origin == O::core && y.origin == O::core) {
        return d.label(x.support.names().front(), y.support.names().front())
                       .is_edge()
                   ? Relation::intersect
                   : Relation::disjoint;
      }
      if (x.origin != y.origin) {
        auto const& core = x.origin == O::core ? x : y;
        auto const& bdry = x.origin == O::core ? y : x;
        auto        s    = core.support.names().front();
        if (bdry.support.contains(s)) {
          return Relation::disjoint;  // core lies inside Sigma_T
        }
        if (!neighbour_in(d, s, bdry.support)) {
          return Relation::disjoint;
        }
        return cs.faces(cs.edges_of(bdry.support)).size() == 1
                   ? Relation::intersect
                   : Relation::unknown;
      }
      if (x.support == y.support) {
        return Relation::disjoint;
      }
      if (x.support.intersected(y.support).empty()
          && commuting_sets(d, x.support, y.support)) {
        return Relation::disjoint;
      }
      return Relation::unknown;
    }
  }  // namespace

  CommuteResult commute_check(CurveSystem const& cs,
                              Multitwist const&  a,
                              Multitwist const&  b) {
    bool        all_disjoint = true;
    std::string hit;
    for (auto const& [na, ca] : a.curves) {
      for (auto const& [nb, cb] : b.curves) {
        auto r = relation(cs, ca, cb);
        all_disjoint = all_disjoint && r == Relation::disjoint;
        if (r == Relation::intersect && hit.empty()) {
          hit = na + " and " + nb;
        }
      }
    }
    auto ma = multitwist_h1(cs, a);
    auto mb = multitwist_h1(cs, b);
    bool h1 = commute(ma, mb);
    if (all_disjoint) {
      return {CommuteVerdict::commute, CommuteVerdict::commute, h1,
              "all component pairs are disjoint; twists about disjoint "
              "curves commute"};
    }
    if (!h1) {
      return {CommuteVerdict::not_commute, CommuteVerdict::not_commute, false,
              "H1 matrices do not commute"};
    }
    if (!hit.empty()) {
      return {CommuteVerdict::inconclusive, CommuteVerdict::not_commute, true,
              hit + " intersect, so the multitwists do not commute "
                    "(twist commutation criterion, cited); H1 matrices commute"};
    }
    return {CommuteVerdict::inconclusive, CommuteVerdict::inconclusive, true,
            "H1 matrices commute and disjointness is not decided"};
  }

  std::vector<std::string> center_word(CoxeterDiagram const& d, Subset const& t) {
    require_irreducible_spherical(d, t);
    auto w0   = longest_element_game(d, t);
    auto word = w0.reduced_word;
    if (!w0.central) {
      word.insert(word.end(), w0.reduced_word.begin(), w0.reduced_word.end());
    }
    return word;
  }

  IntMatrix center_h1(CurveSystem const& cs, Subset const& t) {
    auto z = center_word(cs.diagram(), t);
    return power(word_h1(cs, z), 2);
  }

  MultitwistFit fit_boundary_multitwist(CurveSystem const& cs,
                                        Multicurve const&  boundary,
                                        IntMatrix const&   target) {
    auto const n = cs.homology().rank;
    auto const k = boundary.components.size();
    // T_c^e - I = e N_c with N_c = c (P c)^T; parallel components share N_c
    // and only the sum of their exponents is determined.
    std::vector<IntMatrix>   steps;
    std::vector<std::size_t> group(k, SIZE_MAX);
    auto const               id = IntMatrix::identity(n);
    for (std::size_t j = 0; j < k; ++j) {
      auto nj = twist_h1(cs, boundary.components[j].h1) - id;
      if (nj == IntMatrix(n, n)) {
        continue;
      }
      auto it = std::find(steps.begin(), steps.end(), nj);
      group[j] = static_cast<std::size_t>(it - steps.begin());
      if (it == steps.end()) {
        steps.push_back(nj);
      }
    }
    MultitwistFit fit;
    fit.exponents.assign(k, 0);
    auto      rhs = target - id;
    IntMatrix a(n * n, steps.size());
    IntVector b(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        b[i * n + j] = rhs(i, j);
        for (std::size_t g = 0; g < steps.size(); ++g) {
          a(i * n + j, g) = steps[g](i, j);
        }
      }
    }
    auto sol = solve_integer(a, b);
    if (!sol) {
      return fit;
    }
    for (std::size_t g = 0; g < steps.size(); ++g) {
      std::vector<std::size_t> members;
      for (std::size_t j = 0; j < k; ++j) {
        if (group[j] == g) {
          members.push_back(j);
        }
      }
      auto total = (*sol)[g];
      auto share = total / static_cast<std::int64_t>(members.size());
      for (auto j : members) {
        fit.exponents[j] = share;
      }
      fit.exponents[members.front()] +=
          total - share * static_cast<std::int64_t>(members.size());
    }
    IntMatrix check = id;
    for (std::size_t j = 0; j < k; ++j) {
      check = check * twist_h1(cs, boundary.components[j].h1, fit.exponents[j]);
    }
    fit.matches = check == target;
    return fit;
  }

  CenterCheck check_center(CurveSystem const& cs, Subset const& t) {
    auto        bdry = gamma_T(cs, t);
    auto        w0   = longest_element_game(cs.diagram(), t);
    auto        z    = center_word(cs.diagram(), t);
    auto        rz2  = power(word_h1(cs, z), 2);
    CenterCheck out;
    out.t             = t;
    out.word_length   = z.size();
    out.delta_central = w0.central;
    out.square        = fit_boundary_multitwist(cs, bdry, rz2);
    out.fourth        = fit_boundary_multitwist(cs, bdry, rz2 * rz2);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks with an independent computation on each side
  ////////////////////////////////////////////////////////////////////////

  CoreBoundaryCheck check_core_vs_boundary(CurveSystem const& cs,
                               Subset const&      t,
                               std::string const& s) {
    auto const& d = cs.diagram();
    require_irreducible_spherical(d, t);
    auto si = d.require_index(s);
    if (t.contains(s)) {
      throw PreconditionError("generator " + s + " lies in " + t.to_string());
    }
    CoreBoundaryCheck out;
    out.criterion = neighbour_in(d, s, t).has_value();

    auto const& core  = cs.core(si);
    auto        kt    = cs.edges_of(t);
    auto        vcore = cs.vertices_of(core);
    bool        meets = false;
    for (std::size_t e = 0; e < kt.size() && !meets; ++e) {
      if (kt[e]) {
        auto const& edge = cs.edges()[e];
        meets            = vcore[edge.tail] || vcore[edge.head];
      }
    }
    // [gamma_s] in H_1(K_T) iff its chain is supported on K_T.
    auto chain     = cs.chain(core);
    bool supported = true;
    for (std::size_t e = 0; e < chain.size(); ++e) {
      supported = supported && (chain[e] == 0 || kt[e]);
    }
    out.computed = meets && !supported;
    out.detail   = std::string(meets ? "gamma_" + s + " touches K_T"
                                     : "gamma_" + s + " misses K_T")
                 + (supported ? ", class inside H1(K_T)"
                              : ", class outside H1(K_T)");
    return out;
  }

  BoundaryPairCheck check_boundary_pair(CurveSystem const& cs,
                               Subset const&      t1,
                               Subset const&      t2) {
    auto const& d = cs.diagram();
    require_irreducible_spherical(d, t1);
    require_irreducible_spherical(d, t2);
    if (!t1.intersected(t2).empty()) {
      throw PreconditionError("subsets overlap: " + t1.to_string() + ", "
                              + t2.to_string());
    }
    if (!commuting_sets(d, t1, t2)) {
      throw PreconditionError("subsets are joined by an edge: " + t1.to_string()
                              + ", " + t2.to_string());
    }
    auto g1 = gamma_T(cs, t1);
    auto g2 = gamma_T(cs, t2);
    BoundaryPairCheck out{true, true, {}};
    std::vector<std::string> notes;
    for (auto const& x : g1.components) {
      for (auto const& y : g2.components) {
        if (share_vertex(cs, x.walk, y.walk)) {
          out.disjoint = false;
          notes.push_back(x.name + " meets " + y.name);
        }
        if (freely_homotopic(cs, x.walk, y.walk)) {
          out.non_isotopic = false;
          notes.push_back(x.name + " ~ " + y.name);
        }
      }
    }
    out.detail = notes.empty()
                     ? std::to_string(g1.components.size()) + "+"
                           + std::to_string(g2.components.size())
                           + " components, vertex-disjoint walks, distinct "
                             "reduced cyclic words"
                     : join(notes, "; ");
    return out;
  }

  std::vector<Subset> irreducible_spherical_subsets(CoxeterDiagram const& d) {
    std::vector<Subset> out;
    for (auto const& t : spherical_subsets(d)) {
      if (!t.empty() && is_irreducible(induced(d, t))) {
        out.push_back(t);
      }
    }
    return out;
  }

  namespace {
    std::string pair_name(CoxeterDiagram const& d, std::size_t s, std::size_t t) {
      return d.name(s) + "," + d.name(t);
    }
  }  // namespace

  std::vector<CheckItem> check_representation(CurveSystem const& cs) {
    auto const&            d = cs.diagram();
    auto const             n = d.rank();
    std::vector<CheckItem> out;
    std::vector<IntVector> cls(n);
    std::vector<IntMatrix> tw(n);
    for (std::size_t s = 0; s < n; ++s) {
      cls[s] = cs.h1_class(cs.core(s));
      tw[s]  = twist_h1(cs, cls[s]);
    }
    for (std::size_t s = 0; s < n; ++s) {
      for (std::size_t t = s + 1; t < n; ++t) {
        bool three = is_three(d, s, t);
        bool rel   = three ? tw[s] * tw[t] * tw[s] == tw[t] * tw[s] * tw[t]
                           : commute(tw[s], tw[t]);
        out.push_back({"relation " + pair_name(d, s, t), rel,
                       three ? "braid relation on H1" : "commutation on H1"});
        auto shared_v = [&] {
          auto vs = cs.vertices_of(cs.core(s));
          auto vt = cs.vertices_of(cs.core(t));
          std::size_t k = 0;
          for (std::size_t v = 0; v < vs.size(); ++v) {
            k += vs[v] && vt[v];
          }
          return k;
        }();
        auto p = cs.pairing(cls[s], cls[t]);
        out.push_back({"disjoint iff m=2 " + pair_name(d, s, t),
                       (shared_v == 0) == !three && (three || p == 0),
                       std::to_string(shared_v) + " shared vertices"});
        out.push_back({"one crossing iff m=3 " + pair_name(d, s, t),
                       (shared_v == 1 && (p == 1 || p == -1)) == three,
                       "pairing " + std::to_string(p)});
      }
    }
    for (auto const& t : irreducible_spherical_subsets(d)) {
      auto cc = check_center(cs, t);
      out.push_back({"z_T^2 multitwist " + t.to_string(), cc.square.matches,
                     std::string("z_T^4 ")
                         + (cc.fourth.matches ? "also matches" : "does not match")});
      auto zc = center_h1(cs, t);
      for (std::size_t s = 0; s < n; ++s) {
        if (t.contains(d.name(s))) {
          continue;
        }
        auto cvb = check_core_vs_boundary(cs, t, d.name(s));
        bool ok  = cvb.agree();
        std::string detail = cvb.detail;
        if (!cvb.criterion) {
          bool c = commute(zc, tw[s]);
          ok     = ok && c;
          detail += c ? "; center commutes with twist" : "; center fails to commute";
        }
        out.push_back({"core " + d.name(s) + " vs boundary of " + t.to_string(), ok, detail});
      }
    }
    return out;
  }

  bool SurfaceSuite::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](auto const& c) {
      return c.passed;
    });
  }

  SurfaceSuite run_surface_suite(CoxeterDiagram const& d) {
    CurveSystem  cs(d);
    SurfaceSuite out;
    auto const&  h = cs.homology();
    out.vertices   = cs.vertices().size();
    out.edges      = cs.edges().size();
    out.euler      = cs.euler_characteristic();
    out.h1_rank    = h.rank;
    auto& checks   = out.checks;

    // Euler characteristic against the plumbing count: one annulus per
    // generator, one square glued per crossing.
    std::int64_t crossings = 0;
    for (auto const& v : cs.vertices()) {
      crossings += v.kind == RibbonVertex::Kind::crossing;
    }
    checks.push_back({"euler characteristic", out.euler == -crossings,
                      "V-E = " + std::to_string(out.euler)});

    // Genus and boundary per connected component.
    auto faces   = boundary_components(cs);
    out.boundary = faces.size();
    UnionFind uf(cs.vertices().size());
    for (auto const& e : cs.edges()) {
      uf.unite(e.tail, e.head);
    }
    std::map<std::size_t, std::pair<std::int64_t, std::int64_t>> comp;  // chi, B
    for (std::size_t v = 0; v < cs.vertices().size(); ++v) {
      comp[uf.find(v)].first += 1;
    }
    for (auto const& e : cs.edges()) {
      comp[uf.find(e.tail)].first -= 1;
    }
    for (auto const& f : faces) {
      comp[uf.find(cs.start_vertex(f.front()))].second += 1;
    }
    bool         genus_ok = true;
    std::int64_t genus    = 0;
    for (auto const& [root, cb] : comp) {
      auto twice = 2 - cb.first - cb.second;
      genus_ok   = genus_ok && twice >= 0 && twice % 2 == 0;
      genus += twice / 2;
    }
    out.genus = static_cast<std::size_t>(std::max<std::int64_t>(genus, 0));
    checks.push_back({"2-2g-B = chi per component", genus_ok,
                      "B = " + std::to_string(out.boundary)
                          + ", g = " + std::to_string(genus)});
    auto c = static_cast<std::int64_t>(cs.connected_components());
    checks.push_back({"H1 rank = E-V+c",
                      static_cast<std::int64_t>(h.rank) == -out.euler + c,
                      "rank " + std::to_string(h.rank)});
    checks.push_back({"rank of pairing = 2g",
                      static_cast<std::int64_t>(rank(h.pairing)) == 2 * genus,
                      "rank " + std::to_string(rank(h.pairing))});
    if (is_spherical(d)) {
      checks.push_back({"spherical: H1 rank = |S|", h.rank == d.rank(), ""});
    }

    auto p = h.pairing;
    checks.push_back({"pairing antisymmetric",
                      p.transposed() == IntMatrix(h.rank, h.rank) - p, ""});
    bool radical = true;
    for (auto const& f : faces) {
      auto x  = cs.h1_class(f);
      auto px = p * x;
      radical = radical && std::all_of(px.begin(), px.end(), [](auto v) {
                  return v == 0;
                });
    }
    checks.push_back({"boundary classes pair trivially", radical, ""});

    std::vector<IntVector> cls;
    for (std::size_t s = 0; s < d.rank(); ++s) {
      cls.push_back(cs.h1_class(cs.core(s)));
    }
    for (std::size_t s = 0; s < d.rank(); ++s) {
      for (std::size_t t = s + 1; t < d.rank(); ++t) {
        auto q      = cs.pairing(cls[s], cls[t]);
        auto direct = cs.intersection(cs.core(s), cs.core(t));
        bool three  = is_three(d, s, t);
        checks.push_back({"pairing " + pair_name(d, s, t),
                          (three ? (q == 1 || q == -1) : q == 0) && q == direct,
                          std::to_string(q)});
      }
    }
    for (std::size_t s = 0; s < d.rank(); ++s) {
      auto m   = twist_h1(cs, cls[s]);
      auto nil = m - IntMatrix::identity(h.rank);
      checks.push_back({"transvection " + d.name(s),
                        m.transposed() * p * m == p
                            && nil * nil == IntMatrix(h.rank, h.rank),
                        "preserves pairing, unipotent"});
    }

    auto props = check_representation(cs);
    checks.insert(checks.end(), props.begin(), props.end());

    auto irr = irreducible_spherical_subsets(d);
    for (std::size_t i = 0; i < irr.size(); ++i) {
      for (std::size_t j = i + 1; j < irr.size(); ++j) {
        if (!irr[i].intersected(irr[j]).empty()
            || !commuting_sets(d, irr[i], irr[j])) {
          continue;
        }
        auto pair = check_boundary_pair(cs, irr[i], irr[j]);
        // Supports of the boundary classes lie in disjoint edge sets.
        std::vector<bool> used(cs.edges().size(), false);
        bool              support = true;
        for (auto const& x : gamma_T(cs, irr[i]).components) {
          auto ch = cs.chain(x.walk);
          for (std::size_t e = 0; e < ch.size(); ++e) {
            used[e] = used[e] || ch[e] != 0;
          }
        }
        for (auto const& y : gamma_T(cs, irr[j]).components) {
          auto ch = cs.chain(y.walk);
          for (std::size_t e = 0; e < ch.size(); ++e) {
            support = support && !(used[e] && ch[e] != 0);
          }
        }
        checks.push_back({"disjoint pair " + irr[i].to_string() + " "
                              + irr[j].to_string(),
                          pair.holds() && support, pair.detail});
      }
    }
    for (auto const& t : irr) {
      out.centers.push_back(check_center(cs, t));
    }
    return out;
  }

}  // namespace artin
