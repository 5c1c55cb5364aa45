#include "artin/spherical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>
#include <unordered_set>

#include <Eigen/Eigenvalues>

#include "artin/quadratic.hpp"

namespace artin {

  namespace {
    std::vector<std::size_t> indices_of(GenMask mask) {
      std::vector<std::size_t> out;
      while (mask != 0) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
        mask &= mask - 1;
      }
      return out;
    }

    CoxOrder factorial(std::size_t n) {
      CoxOrder r = 1;
      for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
      }
      return r;
    }

    // Vertices of a path in traversal order, starting from an endpoint.
    std::vector<std::size_t> path_order(CoxeterDiagram const&           d,
                                        std::vector<std::size_t> const& verts) {
      auto degree = [&](std::size_t v) {
        std::size_t deg = 0;
        for (auto u : verts) {
          if (u != v && d.label(u, v).is_edge()) {
            ++deg;
          }
        }
        return deg;
      };
      std::size_t start = verts.front();
      for (auto v : verts) {
        if (degree(v) == 1) {
          start = v;
          break;
        }
      }
      std::vector<std::size_t> order{start};
      std::size_t              prev = SIZE_MAX;
      std::size_t              cur  = start;
      while (order.size() < verts.size()) {
        auto before = order.size();
        for (auto u : verts) {
          if (u != cur && u != prev && d.label(u, cur).is_edge()) {
            prev = cur;
            cur  = u;
            order.push_back(u);
            break;
          }
        }
        if (order.size() == before) {
          throw std::logic_error("path_order: subdiagram is not a path");
        }
      }
      return order;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Families
  ////////////////////////////////////////////////////////////////////////

  std::string FamilyComponent::tag() const {
    static constexpr char const* letter[] = {"A", "B", "D", "E", "F", "H", "I"};
    std::string out = letter[static_cast<int>(family)];
    out += '_';
    out += std::to_string(rank);
    if (family == Family::I) {
      out += "(" + std::to_string(dihedral_label) + ")";
    }
    return out;
  }

  CoxOrder FamilyComponent::order() const {
    return family_order(family, rank, dihedral_label);
  }

  CoxOrder family_order(Family f, std::size_t n, std::uint32_t m) {
    switch (f) {
      case Family::A:
        return factorial(n + 1);
      case Family::B:
        return (CoxOrder(1) << n) * factorial(n);
      case Family::D:
        return (CoxOrder(1) << (n - 1)) * factorial(n);
      case Family::E:
        return n == 6 ? CoxOrder(51840)
                      : (n == 7 ? CoxOrder(2903040) : CoxOrder(696729600));
      case Family::F:
        return 1152;
      case Family::H:
        return n == 3 ? 120 : 14400;
      case Family::I:
        return CoxOrder(2) * m;
    }
    return 0;
  }

  std::optional<FamilyComponent> classify_irreducible(CoxeterDiagram const& d,
                                                      GenMask mask) {
    auto       verts = indices_of(mask);
    auto const k     = verts.size();
    Subset     subset = d.subset_of(mask);
    if (k == 0) {
      return std::nullopt;
    }
    if (k == 1) {
      return FamilyComponent{Family::A, 1, 0, subset};
    }
    if (k == 2) {
      auto m = d.label(verts[0], verts[1]);
      if (m.is_infinite() || !m.is_edge()) {
        return std::nullopt;
      }
      if (m.value() == 3) {
        return FamilyComponent{Family::A, 2, 0, subset};
      }
      if (m.value() == 4) {
        return FamilyComponent{Family::B, 2, 0, subset};
      }
      return FamilyComponent{Family::I, 2, m.value(), subset};
    }

    // Rank >= 3: a tree without infinite labels.
    std::size_t                  edges = 0;
    std::vector<std::size_t>     degree(d.rank(), 0);
    std::vector<std::uint32_t>   big_labels;
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = a + 1; b < k; ++b) {
        auto m = d.label(verts[a], verts[b]);
        if (!m.is_edge()) {
          continue;
        }
        if (m.is_infinite()) {
          return std::nullopt;
        }
        ++edges;
        ++degree[verts[a]];
        ++degree[verts[b]];
        if (m.value() > 3) {
          big_labels.push_back(m.value());
        }
      }
    }
    if (edges != k - 1) {
      return std::nullopt;
    }
    std::size_t max_degree = 0, branch_points = 0;
    std::size_t center = 0;
    for (auto v : verts) {
      max_degree = std::max(max_degree, degree[v]);
      if (degree[v] >= 3) {
        ++branch_points;
        center = v;
      }
    }
    if (max_degree > 3 || branch_points > 1 || big_labels.size() > 1) {
      return std::nullopt;
    }

    if (big_labels.empty()) {
      if (branch_points == 0) {
        return FamilyComponent{Family::A, k, 0, subset};
      }
      // Arm lengths from the branch point.
      std::vector<std::size_t> arms;
      for (auto start : verts) {
        if (start == center || !d.label(start, center).is_edge()) {
          continue;
        }
        std::size_t len = 1, prev = center, cur = start;
        bool        more = true;
        while (more) {
          more = false;
          for (auto u : verts) {
            if (u != cur && u != prev && d.label(u, cur).is_edge()) {
              prev = cur;
              cur  = u;
              ++len;
              more = true;
              break;
            }
          }
        }
        arms.push_back(len);
      }
      std::sort(arms.begin(), arms.end());
      if (arms[0] == 1 && arms[1] == 1) {
        return FamilyComponent{Family::D, k, 0, subset};
      }
      if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
        return FamilyComponent{Family::E, k, 0, subset};
      }
      return std::nullopt;
    }

    if (branch_points != 0) {
      return std::nullopt;
    }
    auto order = path_order(d, verts);
    // Position of the unique big edge along the path.
    std::size_t pos = 0;
    for (std::size_t i = 0; i + 1 < k; ++i) {
      if (d.label(order[i], order[i + 1]).value() > 3) {
        pos = i;
      }
    }
    bool const at_end = pos == 0 || pos == k - 2;
    auto const m      = big_labels.front();
    if (m == 4) {
      if (at_end) {
        return FamilyComponent{Family::B, k, 0, subset};
      }
      if (k == 4) {
        return FamilyComponent{Family::F, 4, 0, subset};
      }
      return std::nullopt;
    }
    if (m == 5 && at_end && k <= 4) {
      return FamilyComponent{Family::H, k, 0, subset};
    }
    return std::nullopt;
  }

  SphericalReport is_spherical(CoxeterDiagram const& d, Subset const& subset) {
    SphericalReport report;
    report.subset = subset;
    CoxOrder order = 1;
    for (auto comp : component_masks(d, d.mask_of(subset))) {
      auto fam = classify_irreducible(d, comp);
      if (fam) {
        order *= fam->order();
        report.families.push_back(std::move(*fam));
      } else {
        report.infinite_components.push_back(d.subset_of(comp));
      }
    }
    auto by_name = [](auto const& a, auto const& b) { return a < b; };
    std::sort(report.infinite_components.begin(),
              report.infinite_components.end(),
              by_name);
    std::sort(report.families.begin(),
              report.families.end(),
              [](FamilyComponent const& a, FamilyComponent const& b) {
                return a.subset < b.subset;
              });
    report.spherical = report.infinite_components.empty();
    if (report.spherical) {
      report.coxeter_order = order;
    } else {
      report.families.clear();
    }
    return report;
  }

  bool is_spherical(CoxeterDiagram const& d, GenMask mask) {
    for (auto comp : component_masks(d, mask)) {
      if (!classify_irreducible(d, comp)) {
        return false;
      }
    }
    return true;
  }

  bool is_spherical(CoxeterDiagram const& d) {
    return is_spherical(d, d.full_mask());
  }

  std::vector<FamilyTableRow> const& finite_type_table() {
    static std::vector<FamilyTableRow> const table{
        {Family::A, "A_n", 1, std::nullopt, {3}},
        {Family::B, "B_n", 2, std::nullopt, {3, 4}},
        {Family::D, "D_n", 4, std::nullopt, {3}},
        {Family::E, "E_6,E_7,E_8", 6, 8, {3}},
        {Family::F, "F_4", 4, 4, {3, 4}},
        {Family::H, "H_3,H_4", 3, 4, {3, 5}},
        {Family::I, "I_2(m)", 2, 2, {}},
    };
    return table;
  }

  std::vector<Family> families_admitting_label(std::uint32_t m) {
    std::vector<Family> out;
    for (auto const& row : finite_type_table()) {
      bool admits = row.edge_labels.empty()
                        ? m >= 3
                        : std::find(row.edge_labels.begin(),
                                    row.edge_labels.end(),
                                    m)
                              != row.edge_labels.end();
      if (admits) {
        out.push_back(row.family);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Breadth-first oracle
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // 2cos(pi/m) for the supported labels.
    enum class Coef : std::uint8_t { zero, one, two, root2, root3 };

    Coef coefficient(Label m) {
      if (m.is_infinite()) {
        return Coef::two;
      }
      switch (m.value()) {
        case 2:
          return Coef::zero;
        case 3:
          return Coef::one;
        case 4:
          return Coef::root2;
        case 6:
          return Coef::root3;
        default:
          throw UnsupportedLabels("label " + m.to_string()
                                  + " has no exact coordinates in Z[r2,r3]");
      }
    }

    QuadInt scale(Coef c, QuadInt const& x) {
      auto const& v = x.coords();
      using detail::checked_mul;
      switch (c) {
        case Coef::zero:
          return QuadInt();
        case Coef::one:
          return x;
        case Coef::two:
          return x + x;
        case Coef::root2:
          return {checked_mul(2, v[1]), v[0], checked_mul(2, v[3]), v[2]};
        case Coef::root3:
          return {checked_mul(3, v[2]), checked_mul(3, v[3]), v[0], v[1]};
      }
      return QuadInt();
    }

    struct Orbit {
      std::size_t                rank = 0;
      std::vector<QuadInt>       points;  // rank entries per element
      std::vector<std::uint32_t> parent;
      std::vector<std::uint8_t>  generator;
      std::vector<std::uint32_t> depth;
      bool                       exceeded = false;

      std::size_t size() const {
        return rank == 0 ? 1 : points.size() / rank;
      }
    };

    struct PointHash {
      Orbit const* orbit;
      std::size_t  operator()(std::uint32_t i) const noexcept {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (std::size_t k = 0; k < orbit->rank; ++k) {
          for (auto c : orbit->points[i * orbit->rank + k].coords()) {
            h ^= std::hash<std::int64_t>()(c) + 0x9e3779b97f4a7c15ULL
                 + (h << 6) + (h >> 2);
          }
        }
        return h;
      }
    };

    struct PointEq {
      Orbit const* orbit;
      bool         operator()(std::uint32_t i, std::uint32_t j) const noexcept {
        auto r = orbit->rank;
        return std::equal(orbit->points.begin() + i * r,
                          orbit->points.begin() + (i + 1) * r,
                          orbit->points.begin() + j * r);
      }
    };

    // Orbit of the chamber point (1,...,1) in the dual of the geometric
    // representation: s sends x to x' with x'_s = -x_s and
    // x'_t = x_t + 2cos(pi/m_st) x_s. The stabiliser is trivial, so the orbit
    // is in bijection with W and BFS depth equals Coxeter length.
    Orbit orbit_bfs(CoxeterDiagram const& d, GenMask mask, std::uint64_t cap) {
      auto  verts = indices_of(mask);
      Orbit orbit;
      orbit.rank   = verts.size();
      auto const r = orbit.rank;
      std::vector<Coef> coef(r * r, Coef::zero);
      for (std::size_t a = 0; a < r; ++a) {
        for (std::size_t b = 0; b < r; ++b) {
          if (a != b) {
            coef[a * r + b] = coefficient(d.label(verts[a], verts[b]));
          }
        }
      }
      orbit.points.assign(r, QuadInt(1));
      orbit.parent.push_back(0);
      orbit.generator.push_back(0);
      orbit.depth.push_back(0);

      std::unordered_set<std::uint32_t, PointHash, PointEq> seen(
          1024, PointHash{&orbit}, PointEq{&orbit});
      seen.insert(0);
      std::vector<QuadInt> image(r);
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (std::size_t s = 0; s < r; ++s) {
          auto const  idx = static_cast<std::uint32_t>(orbit.size());
          auto const* x   = &orbit.points[head * r];
          for (std::size_t t = 0; t < r; ++t) {
            image[t] = t == s ? -x[t] : x[t] + scale(coef[s * r + t], x[s]);
          }
          orbit.points.insert(orbit.points.end(), image.begin(), image.end());
          if (!seen.insert(idx).second) {
            orbit.points.resize(orbit.points.size() - r);
            continue;
          }
          orbit.parent.push_back(static_cast<std::uint32_t>(head));
          orbit.generator.push_back(static_cast<std::uint8_t>(s));
          orbit.depth.push_back(orbit.depth[head] + 1);
          if (orbit.size() > cap) {
            orbit.exceeded = true;
            return orbit;
          }
        }
      }
      return orbit;
    }
  }  // namespace

  bool bfs_supported(CoxeterDiagram const& d, GenMask mask) {
    auto verts = indices_of(mask & d.full_mask());
    if (verts.size() <= 2) {
      return true;
    }
    for (std::size_t a = 0; a < verts.size(); ++a) {
      for (std::size_t b = a + 1; b < verts.size(); ++b) {
        auto m = d.label(verts[a], verts[b]);
        if (m.is_finite() && m.value() != 2 && m.value() != 3 && m.value() != 4
            && m.value() != 6) {
          return false;
        }
      }
    }
    return true;
  }

  BfsOrder coxeter_order_bfs(CoxeterDiagram const& d,
                             GenMask               mask,
                             std::uint64_t         cap) {
    if (cap < 1) {
      throw std::invalid_argument("coxeter_order_bfs: cap must be positive");
    }
    auto verts = indices_of(mask & d.full_mask());
    std::uint64_t order = 0;
    if (verts.size() <= 2) {
      if (verts.size() < 2) {
        order = verts.size() + 1;
      } else {
        auto m = d.label(verts[0], verts[1]);
        if (m.is_infinite()) {
          return ExceededCap{cap};
        }
        order = 2 * static_cast<std::uint64_t>(m.value());
      }
      if (order > cap) {
        return ExceededCap{cap};
      }
      return order;
    }
    if (!bfs_supported(d, mask)) {
      throw UnsupportedLabels(
          "exact BFS needs labels in {2,3,4,6,inf} at rank >= 3");
    }
    auto orbit = orbit_bfs(d, mask & d.full_mask(), cap);
    if (orbit.exceeded) {
      return ExceededCap{cap};
    }
    return static_cast<std::uint64_t>(orbit.size());
  }

  BfsOrder coxeter_order_bfs(CoxeterDiagram const& d,
                             Subset const&         subset,
                             std::uint64_t         cap) {
    return coxeter_order_bfs(d, d.mask_of(subset), cap);
  }

  LongestElement longest_element(CoxeterDiagram const& d,
                                 Subset const&         subset,
                                 std::uint64_t         cap) {
    auto const     mask  = d.mask_of(subset);
    auto const     verts = indices_of(mask);
    LongestElement out;
    if (verts.size() <= 2) {
      // Names in lexicographic order.
      auto const& names = subset.names();
      if (names.size() < 2) {
        out.reduced_word = names;
        out.central      = true;
        out.group_order  = names.size() + 1;
        return out;
      }
      auto m = d.label(verts[0], verts[1]);
      if (m.is_infinite()) {
        throw std::domain_error("longest_element: infinite dihedral group");
      }
      for (std::uint32_t i = 0; i < m.value(); ++i) {
        out.reduced_word.push_back(names[i % 2]);
      }
      out.central     = m.value() % 2 == 0;
      out.group_order = 2 * static_cast<std::uint64_t>(m.value());
      return out;
    }
    if (!bfs_supported(d, mask)) {
      throw UnsupportedLabels(
          "exact BFS needs labels in {2,3,4,6,inf} at rank >= 3");
    }
    auto orbit = orbit_bfs(d, mask, cap);
    if (orbit.exceeded) {
      throw std::domain_error("longest_element: group order exceeds cap");
    }
    std::size_t far = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (orbit.depth[i] > orbit.depth[far]) {
        far = i;
      }
    }
    // The element at index far is g_k ... g_1 with g_1 applied first.
    for (std::size_t i = far; i != 0; i = orbit.parent[i]) {
      out.reduced_word.push_back(d.name(verts[orbit.generator[i]]));
    }
    // w0 maps the chamber point x to -x composed with the diagram symmetry
    // it induces; w0 is central iff that symmetry is trivial, which shows up
    // on a point with pairwise distinct coordinates.
    std::vector<Coef> coef(orbit.rank * orbit.rank, Coef::zero);
    for (std::size_t a = 0; a < orbit.rank; ++a) {
      for (std::size_t b = 0; b < orbit.rank; ++b) {
        if (a != b) {
          coef[a * orbit.rank + b] = coefficient(d.label(verts[a], verts[b]));
        }
      }
    }
    std::vector<QuadInt> x(orbit.rank);
    for (std::size_t t = 0; t < orbit.rank; ++t) {
      x[t] = QuadInt(static_cast<std::int64_t>(t + 1));
    }
    auto                     y = x;
    std::vector<std::size_t> letters;
    for (std::size_t i = far; i != 0; i = orbit.parent[i]) {
      letters.push_back(orbit.generator[i]);
    }
    // The first letter found is the last one applied.
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      auto s  = *it;
      auto ys = y[s];
      for (std::size_t t = 0; t < orbit.rank; ++t) {
        y[t] = t == s ? -ys : y[t] + scale(coef[s * orbit.rank + t], ys);
      }
    }
    out.central = true;
    for (std::size_t t = 0; t < orbit.rank; ++t) {
      out.central = out.central && y[t] == -x[t];
    }
    out.group_order = orbit.size();
    return out;
  }

  LongestElement longest_element_game(CoxeterDiagram const& d,
                                      Subset const&         subset,
                                      std::size_t           max_length) {
    auto const verts = indices_of(d.mask_of(subset));
    if (verts.size() <= 2) {
      return longest_element(d, subset);
    }
    auto const mask = d.mask_of(subset);
    if (!bfs_supported(d, mask)) {
      throw UnsupportedLabels(
          "exact numbers game needs labels in {2,3,4,6,inf} at rank >= 3");
    }
    auto const        r = verts.size();
    std::vector<Coef> coef(r * r, Coef::zero);
    for (std::size_t a = 0; a < r; ++a) {
      for (std::size_t b = 0; b < r; ++b) {
        if (a != b) {
          coef[a * r + b] = coefficient(d.label(verts[a], verts[b]));
        }
      }
    }
    auto fire = [&](std::vector<QuadInt>& x, std::size_t s) {
      auto xs = x[s];
      for (std::size_t t = 0; t < r; ++t) {
        x[t] = t == s ? -xs : x[t] + scale(coef[s * r + t], xs);
      }
    };
    std::vector<QuadInt>     x(r, QuadInt(1));
    std::vector<std::size_t> letters;
    for (;;) {
      std::size_t s = r;
      for (std::size_t t = 0; t < r; ++t) {
        if (x[t].sign() > 0) {
          s = t;
          break;
        }
      }
      if (s == r) {
        break;
      }
      if (letters.size() == max_length) {
        throw std::domain_error("longest_element_game: no termination");
      }
      fire(x, s);
      letters.push_back(s);
    }
    LongestElement out;
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
      out.reduced_word.push_back(d.name(verts[*it]));
    }
    std::vector<QuadInt> y(r);
    for (std::size_t t = 0; t < r; ++t) {
      y[t] = QuadInt(static_cast<std::int64_t>(t + 1));
    }
    auto const start = y;
    for (auto s : letters) {
      fire(y, s);
    }
    out.central = true;
    for (std::size_t t = 0; t < r; ++t) {
      out.central = out.central && y[t] == -start[t];
    }
    return out;
  }

  bool gram_positive_definite(CoxeterDiagram const& d,
                              Subset const&         subset,
                              double                tol) {
    auto verts = indices_of(d.mask_of(subset));
    auto n     = static_cast<Eigen::Index>(verts.size());
    if (n == 0) {
      return true;
    }
    Eigen::MatrixXd gram(n, n);
    for (Eigen::Index a = 0; a < n; ++a) {
      for (Eigen::Index b = 0; b < n; ++b) {
        if (a == b) {
          gram(a, b) = 1.0;
          continue;
        }
        auto m     = d.label(verts[a], verts[b]);
        gram(a, b) = m.is_infinite()
                         ? -1.0
                         : -std::cos(std::numbers::pi / m.value());
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
        gram, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff() > tol;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  std::vector<GenMask> spherical_masks(CoxeterDiagram const& d) {
    std::vector<GenMask>        all{0};
    std::vector<GenMask>        level{0};
    std::unordered_set<GenMask> previous{0};
    auto const                  n = d.rank();
    for (std::size_t k = 1; k <= n && !level.empty(); ++k) {
      std::vector<GenMask>        next;
      std::unordered_set<GenMask> next_set;
      for (auto x : level) {
        std::size_t first = x == 0 ? 0 : 64 - std::countl_zero(x);
        for (std::size_t j = first; j < n; ++j) {
          GenMask y  = x | GenMask(1) << j;
          bool    ok = true;
          for (GenMask rest = y; rest != 0 && ok; rest &= rest - 1) {
            ok = previous.contains(y & ~(rest & -rest));
          }
          if (ok && is_spherical(d, y)) {
            next.push_back(y);
            next_set.insert(y);
          }
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      level    = std::move(next);
      previous = std::move(next_set);
    }
    return all;
  }

  std::vector<Subset> spherical_subsets(CoxeterDiagram const& d) {
    std::vector<Subset> out;
    for (auto mask : spherical_masks(d)) {
      out.push_back(d.subset_of(mask));
    }
    std::sort(out.begin(), out.end(), graded_less);
    return out;
  }

  CdReport max_spherical(CoxeterDiagram const& d) {
    CdReport report;
    auto     masks = spherical_masks(d);
    for (auto m : masks) {
      report.value = std::max<std::size_t>(report.value, std::popcount(m));
    }
    for (auto m : masks) {
      if (static_cast<std::size_t>(std::popcount(m)) == report.value) {
        report.witnesses.push_back(d.subset_of(m));
      }
    }
    std::sort(report.witnesses.begin(), report.witnesses.end());
    return report;
  }

  std::size_t max_spherical_value(CoxeterDiagram const& d, GenMask within) {
    return max_spherical(induced(d, within)).value;
  }

  FactorSplit spherical_factors(CoxeterDiagram const& d) {
    FactorSplit split;
    for (auto const& comp : components(d)) {
      if (is_spherical(d, d.mask_of(comp))) {
        split.spherical.push_back(comp);
      } else {
        split.infinite.push_back(comp);
      }
    }
    return split;
  }

}  // namespace artin
