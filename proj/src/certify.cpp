#include "artin/certify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "artin/spherical.hpp"
#include "artin/surface.hpp"

namespace artin {

  ////////////////////////////////////////////////////////////////////////
  // K(pi,1) classes
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Kpi1Class c) {
    switch (c) {
      case Kpi1Class::spherical:
        return "Spherical";
      case Kpi1Class::fc:
        return "FC";
      case Kpi1Class::two_dimensional:
        return "TwoDimensional";
      case Kpi1Class::locally_reducible:
        return "LocallyReducible";
    }
    return "?";
  }

  std::optional<Kpi1Class> Kpi1Status::primary() const {
    if (classes.empty()) {
      return std::nullopt;
    }
    return classes.front();
  }

  std::string Kpi1Status::to_string() const {
    switch (kind) {
      case Kind::unknown:
        return "Unknown";
      case Kind::assumed:
        return "Assumed";
      case Kind::known:
        break;
    }
    std::string out = "Known(" + artin::to_string(classes.front()) + ")";
    if (classes.size() > 1) {
      out += " also";
      for (std::size_t i = 1; i < classes.size(); ++i) {
        out += " " + artin::to_string(classes[i]);
      }
    }
    return out;
  }

  bool is_fc_type(CoxeterDiagram const& d) {
    auto const n = d.rank();
    // Depth-first over cliques of finite labels; spherical subsets are closed
    // under taking subsets, so only spherical cliques are ever extended.
    std::function<bool(GenMask, std::size_t)> grow = [&](GenMask mask,
                                                         std::size_t next) {
      for (std::size_t j = next; j < n; ++j) {
        bool finite = true;
        for (std::size_t i = 0; i < n && finite; ++i) {
          if ((mask >> i) & 1) {
            finite = d.label(i, j).is_finite();
          }
        }
        if (!finite) {
          continue;
        }
        GenMask bigger = mask | (GenMask(1) << j);
        if (!is_spherical(d, bigger) || !grow(bigger, j + 1)) {
          return false;
        }
      }
      return true;
    };
    return grow(0, 0);
  }

  bool is_two_dimensional(CoxeterDiagram const& d) {
    return max_spherical_value(d, d.full_mask()) <= 2;
  }

  bool is_locally_reducible(CoxeterDiagram const& d) {
    for (auto m : spherical_masks(d)) {
      if (std::popcount(m) >= 3 && is_irreducible(induced(d, m))) {
        return false;
      }
    }
    return true;
  }

  Kpi1Status kpi1_class(CoxeterDiagram const& d, bool assume) {
    Kpi1Status st;
    if (is_spherical(d)) {
      st.classes.push_back(Kpi1Class::spherical);
    }
    if (is_fc_type(d)) {
      st.classes.push_back(Kpi1Class::fc);
    }
    if (is_two_dimensional(d)) {
      st.classes.push_back(Kpi1Class::two_dimensional);
    }
    if (is_locally_reducible(d)) {
      st.classes.push_back(Kpi1Class::locally_reducible);
    }
    st.kind = !st.classes.empty() ? Kpi1Status::Kind::known
              : assume            ? Kpi1Status::Kind::assumed
                                  : Kpi1Status::Kind::unknown;
    return st;
  }

  ////////////////////////////////////////////////////////////////////////
  // Names
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Rule r) {
    switch (r) {
      case Rule::empty_base:
        return "EmptyBase";
      case Rule::free_of_infinity_base:
        return "FreeOfInfinityBase";
      case Rule::free_group_base:
        return "FreeGroupBase";
      case Rule::amalgam_split:
        return "AmalgamSplit";
      case Rule::spherical_peel:
        return "SphericalPeel";
      case Rule::label_seven_quotient:
        return "LabelSevenQuotient";
    }
    return "?";
  }

  std::optional<Rule> rule_from_string(std::string const& s) {
    for (auto r : {Rule::empty_base, Rule::free_of_infinity_base,
                   Rule::free_group_base, Rule::amalgam_split,
                   Rule::spherical_peel, Rule::label_seven_quotient}) {
      if (to_string(r) == s) {
        return r;
      }
    }
    return std::nullopt;
  }

  bool is_leaf(Rule r) {
    return r == Rule::empty_base || r == Rule::free_of_infinity_base
           || r == Rule::free_group_base;
  }

  std::string to_string(Refusal::Kind k) {
    return k == Refusal::Kind::spherical_factor_obstruction
               ? "SphericalFactorObstruction"
               : "NoKpi1";
  }

  std::string to_string(Conditionality c) {
    switch (c) {
      case Conditionality::unconditional:
        return "Unconditional";
      case Conditionality::conditional_on_kpi1:
        return "ConditionalOnKpi1";
      case Conditionality::conditional_on_center_conjecture:
        return "ConditionalOnCenterConjecture";
    }
    return "?";
  }

  std::string center_symbol(Subset const& u) {
    auto s = u.to_string();
    return "z_" + s;
  }

  CoxeterDiagram label_seven(CoxeterDiagram const& d) {
    auto q = d;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = i + 1; j < d.rank(); ++j) {
        if (d.label(i, j).is_infinite()) {
          q.set_label(i, j, Label::finite(7));
        }
      }
    }
    return q;
  }

  VerificationFailure::VerificationFailure(Premise premise, std::string const& where)
      : std::runtime_error("premise failed at " + where + ": " + premise.fact
                           + " [" + premise.check + "]"),
        premise_(std::move(premise)) {}

  ////////////////////////////////////////////////////////////////////////
  // Premise checks
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Args = std::map<std::string, std::vector<std::string>>;

    std::string joined(Subset const& s) {
      std::string out;
      for (auto const& n : s) {
        out += (out.empty() ? "" : ",") + n;
      }
      return out;
    }

    Subset split_joined(std::string const& text) {
      std::vector<std::string> names;
      std::stringstream        in(text);
      std::string              item;
      while (std::getline(in, item, ',')) {
        if (!item.empty()) {
          names.push_back(item);
        }
      }
      return Subset(names);
    }

    std::vector<std::string> parts_arg(std::vector<Subset> const& parts) {
      std::vector<std::string> out;
      for (auto const& p : parts) {
        out.push_back(joined(p));
      }
      return out;
    }

    // Missing or malformed arguments make the check fail rather than throw.
    struct BadArgs {};

    std::vector<std::string> const& arg(Args const& a, std::string const& key) {
      auto it = a.find(key);
      if (it == a.end()) {
        throw BadArgs{};
      }
      return it->second;
    }

    std::string const& one(Args const& a, std::string const& key) {
      auto const& v = arg(a, key);
      if (v.size() != 1) {
        throw BadArgs{};
      }
      return v.front();
    }

    Subset subset_arg(CoxeterDiagram const& d, Args const& a, std::string const& key) {
      Subset s(arg(a, key));
      for (auto const& n : s) {
        if (!d.index_of(n)) {
          throw BadArgs{};
        }
      }
      return s;
    }

    std::vector<Subset> parts_of(CoxeterDiagram const& d,
                                 Args const&           a,
                                 std::string const&    key) {
      std::vector<Subset> out;
      for (auto const& text : arg(a, key)) {
        auto s = split_joined(text);
        for (auto const& n : s) {
          if (!d.index_of(n)) {
            throw BadArgs{};
          }
        }
        out.push_back(s);
      }
      return out;
    }

    std::size_t child_index(TraceNode const& node, Args const& a) {
      auto i = std::stoul(one(a, "child"));
      if (i >= node.children.size()) {
        throw BadArgs{};
      }
      return i;
    }

    std::string gen(CoxeterDiagram const& d, Args const& a, std::string const& key) {
      auto const& s = one(a, key);
      if (!d.index_of(s)) {
        throw BadArgs{};
      }
      return s;
    }

    std::size_t cd_of(CoxeterDiagram const& d, Subset const& x) {
      return max_spherical_value(d, d.mask_of(x));
    }

    bool all_infinite(CoxeterDiagram const& d) {
      for (std::size_t i = 0; i < d.rank(); ++i) {
        for (std::size_t j = i + 1; j < d.rank(); ++j) {
          if (!d.label(i, j).is_infinite()) {
            return false;
          }
        }
      }
      return true;
    }

    Subset component_of(CoxeterDiagram const& d, std::string const& v, Subset const& x) {
      for (auto const& c : components(induced(d, x))) {
        if (c.contains(v)) {
          return c;
        }
      }
      return {};
    }

    Subset union_of(std::vector<Subset> const& parts) {
      Subset u;
      for (auto const& p : parts) {
        u = u.united(p);
      }
      return u;
    }

    using Check = std::function<bool(TraceNode const&, Args const&)>;

    std::map<std::string, Check> const& checks() {
      static std::map<std::string, Check> const table = {
          {"empty", [](auto const& n, auto const&) { return n.diagram.rank() == 0; }},
          {"no_spherical_factor",
           [](auto const& n, auto const&) {
             return spherical_factors(n.diagram).spherical.empty();
           }},
          {"free_of_infinity",
           [](auto const& n, auto const&) { return is_free_of_infinity(n.diagram); }},
          {"not_free_of_infinity",
           [](auto const& n, auto const&) { return !is_free_of_infinity(n.diagram); }},
          {"infinite_type",
           [](auto const& n, auto const&) { return !is_spherical(n.diagram); }},
          {"irreducible",
           [](auto const& n, auto const&) { return is_irreducible(n.diagram); }},
          {"free_group",
           [](auto const& n, auto const&) {
             return n.diagram.rank() >= 2 && all_infinite(n.diagram);
           }},
          {"maximal_spherical",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        t = subset_arg(d, a, "T");
             return is_spherical(d, d.mask_of(t))
                    && t.size() == max_spherical_value(d, d.full_mask());
           }},
          {"decomposition",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        t = subset_arg(d, a, "T");
             return components(induced(d, t)) == parts_of(d, a, "parts");
           }},
          {"witness_pair",
           [](auto const& n, auto const& a) {
             auto const& d    = n.diagram;
             auto        t    = subset_arg(d, a, "T");
             auto        part = subset_arg(d, a, "part");
             auto        s    = gen(d, a, "s");
             auto        u    = gen(d, a, "t");
             return !t.contains(s) && part.is_subset_of(t) && part.contains(u)
                    && d.label(s, u).is_edge();
           }},
          {"infinite_pair",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        v = gen(d, a, "v");
             auto        w = gen(d, a, "w");
             return v != w && d.label(v, w).is_infinite();
           }},
          {"avoids",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             return !subset_arg(d, a, "T").contains(gen(d, a, "v"));
           }},
          {"cd_value",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             return cd_of(d, subset_arg(d, a, "X")) == std::stoul(one(a, "value"));
           }},
          {"factor_split",
           [](auto const& n, auto const& a) {
             auto const& d     = n.diagram;
             auto        split = spherical_factors(induced(d, subset_arg(d, a, "X")));
             return split.spherical == parts_of(d, a, "U")
                    && union_of(split.infinite) == subset_arg(d, a, "V");
           }},
          {"contained",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        t = subset_arg(d, a, "T");
             auto        u = parts_of(d, a, "U");
             return std::all_of(u.begin(), u.end(), [&](auto const& p) {
               return p.is_subset_of(t);
             });
           }},
          {"adjacent_to",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        v = gen(d, a, "v");
             auto        u = parts_of(d, a, "U");
             return std::all_of(u.begin(), u.end(), [&](auto const& p) {
               return std::any_of(p.begin(), p.end(), [&](auto const& x) {
                 return d.label(v, x).is_edge();
               });
             });
           }},
          {"not_spherical",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             return !is_spherical(d, d.mask_of(subset_arg(d, a, "X")));
           }},
          {"component_of",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             return component_of(d, gen(d, a, "v"), subset_arg(d, a, "X"))
                    == subset_arg(d, a, "C");
           }},
          {"peel_component",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        c = subset_arg(d, a, "C");
             auto        dc = induced(d, c);
             return !c.empty() && is_irreducible(dc) && !is_spherical(dc)
                    && max_spherical_value(dc, dc.full_mask()) + 1 == c.size();
           }},
          {"label7_table",
           [](auto const&, auto const&) {
             return families_admitting_label(7) == std::vector<Family>{Family::I};
           }},
          {"quotient_dihedral",
           [](auto const& n, auto const&) {
             auto q = label_seven(n.diagram);
             if (q.rank() != 2 || !is_spherical(q)) {
               return false;
             }
             auto c = classify_irreducible(q, q.full_mask());
             return c && c->family == Family::I && c->dihedral_label == 7;
           }},
          {"quotient_infinite",
           [](auto const& n, auto const&) {
             auto q = label_seven(n.diagram);
             return is_free_of_infinity(q) && is_irreducible(q) && !is_spherical(q)
                    && max_spherical_value(q, q.full_mask()) + 1 == q.rank();
           }},
          {"child_induced",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             return n.children[child_index(n, a)].diagram
                    == induced(d, subset_arg(d, a, "X"));
           }},
          {"child_drops",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             auto        v = gen(d, a, "v");
             return n.children[child_index(n, a)].diagram
                    == induced(d, d.all().without(Subset{v}));
           }},
          {"child_label7",
           [](auto const& n, auto const& a) {
             return n.children[child_index(n, a)].diagram == label_seven(n.diagram);
           }},
          {"child_same",
           [](auto const& n, auto const& a) {
             return n.children[child_index(n, a)].diagram == n.diagram;
           }},
          {"surface_meets",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             if (!is_small_type(d)) {
               return false;
             }
             CurveSystem cs(d);
             auto r = check_core_vs_boundary(cs, subset_arg(d, a, "T"), gen(d, a, "s"));
             return r.criterion && r.computed;
           }},
          {"surface_h1",
           [](auto const& n, auto const& a) {
             auto const& d = n.diagram;
             if (!is_small_type(d)) {
               return false;
             }
             CurveSystem cs(d);
             auto        s = d.require_index(gen(d, a, "s"));
             auto z = center_h1(cs, subset_arg(d, a, "T"));
             return !commute(z, twist_h1(cs, cs.h1_class(cs.core(s))));
           }},
          {"cited", [](auto const&, auto const&) { return true; }},
      };
      return table;
    }
  }  // namespace

  bool evaluate(TraceNode const& node, Premise const& p) {
    auto it = checks().find(p.check);
    if (it == checks().end()) {
      return false;
    }
    try {
      return it->second(node, p.args);
    } catch (BadArgs const&) {
      return false;
    } catch (std::exception const&) {
      return false;
    }
  }

  std::vector<Rule> leaves(TraceNode const& node) {
    if (node.children.empty()) {
      return {node.rule};
    }
    std::vector<Rule> out;
    for (auto const& c : node.children) {
      auto l = leaves(c);
      out.insert(out.end(), l.begin(), l.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Emission
  ////////////////////////////////////////////////////////////////////////

  namespace {
    namespace cite {
      char const* const kpi1_cd =
          "under K(pi,1) the cohomological dimension equals the spherical "
          "dimension";
      char const* const twists =
          "small-type multitwist representation: twists about intersecting "
          "multicurves do not commute (cited)";
      char const* const amalgam =
          "an amalgam of Artin groups along a special subgroup has center "
          "inside the center of the factor (cited)";
      char const* const additivity =
          "cd of a product with its maximal spherical factor is additive "
          "(cited)";
      char const* const label7 =
          "only the dihedral family admits a label >= 7 (table scan)";
      char const* const quotient =
          "replacing infinite labels by 7 is a quotient of Artin groups";
      char const* const free_group =
          "a free group of rank >= 2 has trivial center";
      char const* const computed = "computed";
    }  // namespace cite

    class Emitter {
     public:
      TraceNode node(CoxeterDiagram const& d);

     private:
      void add(TraceNode&           n,
               std::string          check,
               Args                 args,
               std::string          fact,
               std::string const&   citation = cite::computed) {
        Premise p{std::move(check), std::move(args), std::move(fact), citation, false};
        p.ok = evaluate(n, p);
        if (!p.ok) {
          throw VerificationFailure(p, to_string(n.rule) + " on "
                                           + n.diagram.all().to_string());
        }
        n.premises.push_back(std::move(p));
      }

      TraceNode free_of_infinity(CoxeterDiagram const& d);
      TraceNode label_seven_node(CoxeterDiagram const& d);
    };

    TraceNode Emitter::free_of_infinity(CoxeterDiagram const& d) {
      TraceNode n{d, Rule::free_of_infinity_base, {}, {}};
      add(n, "free_of_infinity", {}, "no label is infinite");
      add(n, "no_spherical_factor", {}, "no spherical factor");
      auto t     = max_spherical(d).witnesses.front();
      auto parts = components(induced(d, t));
      add(n, "maximal_spherical", {{"T", t.names()}},
          "T = " + t.to_string() + " is spherical of maximal size "
              + std::to_string(t.size()),
          cite::kpi1_cd);
      add(n, "decomposition", {{"T", t.names()}, {"parts", parts_arg(parts)}},
          "irreducible parts of T: " + [&] {
            std::string out;
            for (auto const& p : parts) {
              out += (out.empty() ? "" : ", ") + p.to_string();
            }
            return out;
          }());
      bool small = is_small_type(d);
      for (auto const& part : parts) {
        std::optional<std::pair<std::string, std::string>> pick;
        for (auto const& s : d.all()) {
          if (t.contains(s) || pick) {
            continue;
          }
          for (auto const& u : part) {
            if (d.label(s, u).is_edge()) {
              pick.emplace(s, u);
              break;
            }
          }
        }
        if (!pick) {
          Premise p{"witness_pair", {{"T", t.names()}, {"part", part.names()}},
                    "some generator outside T is joined to " + part.to_string(),
                    cite::computed, false};
          throw VerificationFailure(p, "FreeOfInfinityBase on "
                                           + d.all().to_string());
        }
        auto const& [s, u] = *pick;
        add(n, "witness_pair",
            {{"T", t.names()}, {"part", part.names()}, {"s", {s}}, {"t", {u}}},
            "s = " + s + " outside T, t = " + u + " in " + part.to_string()
                + ", m_st = " + d.label(s, u).to_string(),
            cite::twists);
        if (small) {
          add(n, "surface_meets", {{"T", part.names()}, {"s", {s}}},
              "gamma_" + s + " meets the boundary multicurve of "
                  + part.to_string(),
              cite::twists);
          Premise h1{"surface_h1", {{"T", part.names()}, {"s", {s}}},
                     "rho(z^2) of " + part.to_string() + " and the twist about gamma_"
                         + s + " do not commute on H1",
                     cite::computed, false};
          h1.ok = evaluate(n, h1);
          if (h1.ok) {
            n.premises.push_back(std::move(h1));
          }
        }
      }
      return n;
    }

    TraceNode Emitter::label_seven_node(CoxeterDiagram const& d) {
      TraceNode n{d, Rule::label_seven_quotient, {}, {}};
      add(n, "no_spherical_factor", {}, "no spherical factor");
      add(n, "not_free_of_infinity", {}, "some label is infinite");
      add(n, "irreducible", {}, "irreducible");
      add(n, "label7_table", {}, "label 7 occurs only in I_2(7)", cite::label7);
      auto q = label_seven(d);
      if (q.rank() == 2) {
        TraceNode leaf{d, Rule::free_group_base, {}, {}};
        add(leaf, "no_spherical_factor", {}, "no spherical factor");
        add(leaf, "free_group", {}, "all labels infinite, rank 2: a free group",
            cite::free_group);
        n.children.push_back(std::move(leaf));
        add(n, "quotient_dihedral", {}, "the label-7 quotient is I_2(7)",
            cite::quotient);
        add(n, "child_same", {{"child", {"0"}}},
            "the group itself is free on " + d.all().to_string());
        return n;
      }
      n.children.push_back(free_of_infinity(q));
      add(n, "quotient_infinite", {},
          "the label-7 quotient is free of infinity, irreducible, of infinite "
          "type with spherical dimension rank - 1",
          cite::quotient);
      add(n, "child_label7", {{"child", {"0"}}}, "child is the label-7 quotient");
      return n;
    }

    TraceNode Emitter::node(CoxeterDiagram const& d) {
      if (d.rank() == 0) {
        TraceNode n{d, Rule::empty_base, {}, {}};
        add(n, "empty", {}, "no generators: trivial group");
        return n;
      }
      if (is_free_of_infinity(d)) {
        return free_of_infinity(d);
      }
      auto const t = max_spherical(d).witnesses.front();
      auto const k = t.size();

      // Least pair with an infinite label; v is the generator removed.
      std::optional<std::pair<std::string, std::string>> vw;
      auto                                               names = d.all().names();
      for (std::size_t i = 0; i < names.size() && !vw; ++i) {
        for (std::size_t j = i + 1; j < names.size() && !vw; ++j) {
          if (d.label(names[i], names[j]).is_infinite()) {
            vw = t.contains(names[i]) ? std::pair{names[j], names[i]}
                                      : std::pair{names[i], names[j]};
          }
        }
      }
      auto const& [v, w] = *vw;
      auto const rest    = d.all().without(Subset{v});
      auto const sub     = induced(d, rest);
      auto const split   = spherical_factors(sub);

      TraceNode n{d, split.spherical.empty() ? Rule::amalgam_split : Rule::spherical_peel,
                  {}, {}};
      add(n, "no_spherical_factor", {}, "no spherical factor");
      add(n, "maximal_spherical", {{"T", t.names()}},
          "T = " + t.to_string() + " is spherical of maximal size " + std::to_string(k),
          cite::kpi1_cd);
      add(n, "infinite_pair", {{"v", {v}}, {"w", {w}}},
          "m(" + v + "," + w + ") = inf: amalgam of the two complements");
      add(n, "avoids", {{"T", t.names()}, {"v", {v}}},
          v + " is not in T");
      add(n, "cd_value", {{"X", rest.names()}, {"value", {std::to_string(k)}}},
          "spherical dimension of S - {" + v + "} is " + std::to_string(k),
          cite::kpi1_cd);
      auto const v_part = union_of(split.infinite);
      add(n, "factor_split",
          {{"X", rest.names()}, {"U", parts_arg(split.spherical)}, {"V", v_part.names()}},
          "spherical factors of S - {" + v + "}: "
              + std::to_string(split.spherical.size()));

      if (split.spherical.empty()) {
        n.children.push_back(node(sub));
        add(n, "child_drops", {{"child", {"0"}}, {"v", {v}}},
            "child is S - {" + v + "}");
        add(n, "cited", {}, "the center lifts through the amalgam", cite::amalgam);
        return n;
      }

      auto const u_sum = [&] {
        std::size_t s = 0;
        for (auto const& u : split.spherical) {
          s += u.size();
        }
        return s;
      }();
      add(n, "contained", {{"T", t.names()}, {"U", parts_arg(split.spherical)}},
          "every spherical factor of S - {" + v + "} lies in T");
      if (u_sum > k) {
        Premise p{"cd_value", {}, "spherical factors exceed T", cite::additivity, false};
        throw VerificationFailure(p, "SphericalPeel on " + d.all().to_string());
      }
      add(n, "cd_value",
          {{"X", v_part.names()}, {"value", {std::to_string(k - u_sum)}}},
          "spherical dimension of V = " + v_part.to_string() + " is "
              + std::to_string(k - u_sum) + " = |V and T|",
          cite::additivity);
      add(n, "cd_value",
          {{"X", v_part.intersected(t).names()},
           {"value", {std::to_string(k - u_sum)}}},
          "V and T has spherical dimension " + std::to_string(k - u_sum));
      add(n, "adjacent_to", {{"v", {v}}, {"U", parts_arg(split.spherical)}},
          v + " is joined to every spherical factor");

      auto const tv = t.with(v);
      auto const c  = component_of(d, v, tv);
      add(n, "not_spherical", {{"X", tv.names()}}, "T + {" + v + "} is not spherical",
          cite::kpi1_cd);
      add(n, "component_of", {{"v", {v}}, {"X", tv.names()}, {"C", c.names()}},
          "C = " + c.to_string() + " is the component of " + v + " in T + {" + v + "}");
      add(n, "peel_component", {{"C", c.names()}},
          "C is irreducible of infinite type with spherical dimension |C| - 1");

      n.children.push_back(node(induced(d, v_part)));
      add(n, "child_induced", {{"child", {"0"}}, {"X", v_part.names()}},
          "first child is V");
      auto const dc = induced(d, c);
      n.children.push_back(is_free_of_infinity(dc) ? free_of_infinity(dc)
                                                   : label_seven_node(dc));
      add(n, "child_induced", {{"child", {"1"}}, {"X", c.names()}},
          "second child is C");
      add(n, "cited", {}, "the center lifts through the amalgam", cite::amalgam);
      return n;
    }
  }  // namespace

  CertifyResult certify_trivial_center(CoxeterDiagram const& d, bool assume) {
    auto split = spherical_factors(d);
    if (!split.spherical.empty()) {
      Refusal r{Refusal::Kind::spherical_factor_obstruction, {}, {}};
      for (auto const& u : split.spherical) {
        r.center_generators.push_back(center_symbol(u));
      }
      r.reason = std::to_string(split.spherical.size())
                 + " spherical factor(s), each with infinite cyclic center";
      return r;
    }
    auto st = kpi1_class(d, assume);
    if (st.kind == Kpi1Status::Kind::unknown) {
      return Refusal{Refusal::Kind::no_kpi1,
                     "no known K(pi,1) class; rerun with the assumption flag",
                     {}};
    }
    ProofTrace trace;
    trace.assumptions = {
        "K(pi,1): " + st.to_string(),
        "cd = spherical dimension = " + std::to_string(max_spherical_value(d, d.full_mask())),
        "special subgroups inherit K(pi,1) (cited)",
        "FC: every free-of-infinity subset is spherical",
        "TwoDimensional: every spherical subset has at most 2 generators",
        "LocallyReducible: every irreducible spherical subset has at most 2 "
        "generators",
    };
    trace.root = Emitter().node(d);
    return trace;
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool has(TraceNode const& n, std::string const& check) {
      return std::any_of(n.premises.begin(), n.premises.end(),
                         [&](auto const& p) { return p.check == check; });
    }

    Premise const* first(TraceNode const& n, std::string const& check) {
      for (auto const& p : n.premises) {
        if (p.check == check) {
          return &p;
        }
      }
      return nullptr;
    }

    bool replay_node(TraceNode const& n, std::string& why) {
      auto fail = [&](std::string const& msg) {
        why = to_string(n.rule) + " on " + n.diagram.all().to_string() + ": " + msg;
        return false;
      };
      if (is_leaf(n.rule) != n.children.empty()) {
        return fail("leaf/internal rule does not match its children");
      }
      std::vector<std::string> required;
      std::size_t              arity = 0;
      switch (n.rule) {
        case Rule::empty_base:
          required = {"empty"};
          break;
        case Rule::free_group_base:
          required = {"no_spherical_factor", "free_group"};
          break;
        case Rule::free_of_infinity_base:
          required = {"free_of_infinity", "no_spherical_factor", "maximal_spherical",
                      "decomposition", "witness_pair"};
          break;
        case Rule::amalgam_split:
          required = {"no_spherical_factor", "maximal_spherical", "infinite_pair",
                      "avoids", "cd_value", "factor_split", "child_drops"};
          arity    = 1;
          break;
        case Rule::spherical_peel:
          required = {"no_spherical_factor", "maximal_spherical", "infinite_pair",
                      "avoids", "cd_value", "factor_split", "contained",
                      "adjacent_to", "not_spherical", "component_of",
                      "peel_component", "child_induced"};
          arity    = 2;
          break;
        case Rule::label_seven_quotient:
          required = {"no_spherical_factor", "not_free_of_infinity", "irreducible",
                      "label7_table"};
          arity    = 1;
          break;
      }
      if (n.children.size() != arity) {
        return fail("wrong number of children");
      }
      for (auto const& r : required) {
        if (!has(n, r)) {
          return fail("missing premise " + r);
        }
      }
      for (auto const& p : n.premises) {
        if (!p.ok || !evaluate(n, p)) {
          return fail("premise [" + p.check + "] " + p.fact);
        }
      }

      // Arguments that must agree across premises.
      auto t_of = [&](Premise const& p) {
        auto it = p.args.find("T");
        return it == p.args.end() ? Subset{} : Subset(it->second);
      };
      if (n.rule == Rule::free_of_infinity_base) {
        auto t = t_of(*first(n, "maximal_spherical"));
        auto const* dec = first(n, "decomposition");
        if (t_of(*dec) != t) {
          return fail("decomposition of a different T");
        }
        for (auto const& text : dec->args.at("parts")) {
          auto part    = split_joined(text);
          bool covered = std::any_of(n.premises.begin(), n.premises.end(), [&](auto const& p) {
            return p.check == "witness_pair" && t_of(p) == t
                   && Subset(p.args.at("part")) == part;
          });
          if (!covered) {
            return fail("no witness for " + part.to_string());
          }
        }
      }
      if (n.rule == Rule::amalgam_split || n.rule == Rule::spherical_peel) {
        auto t = t_of(*first(n, "maximal_spherical"));
        auto v = first(n, "infinite_pair")->args.at("v");
        if (t_of(*first(n, "avoids")) != t || first(n, "avoids")->args.at("v") != v) {
          return fail("avoidance premise about a different T or v");
        }
        if (n.rule == Rule::amalgam_split) {
          if (first(n, "child_drops")->args.at("v") != v
              || !first(n, "factor_split")->args.at("U").empty()) {
            return fail("child is not the complement of v without spherical factors");
          }
        } else {
          std::size_t covered = 0;
          for (auto const& p : n.premises) {
            covered += p.check == "child_induced";
          }
          if (covered != 2 || t_of(*first(n, "contained")) != t) {
            return fail("children or containment not tied to the premises");
          }
        }
        // The recursive child is strictly smaller. The peeled component may
        // be all of S but then it is closed by a base or quotient rule.
        if (n.children[0].diagram.rank() >= n.diagram.rank()) {
          return fail("child does not have fewer generators");
        }
        if (n.rule == Rule::spherical_peel
            && n.children[1].rule != Rule::free_of_infinity_base
            && n.children[1].rule != Rule::label_seven_quotient) {
          return fail("peeled component is not closed by a base or quotient rule");
        }
      }
      if (n.rule == Rule::label_seven_quotient) {
        bool dihedral = has(n, "quotient_dihedral") && has(n, "child_same")
                        && n.children[0].rule == Rule::free_group_base;
        bool general = has(n, "quotient_infinite") && has(n, "child_label7")
                       && n.children[0].rule == Rule::free_of_infinity_base;
        if (!dihedral && !general) {
          return fail("quotient premises do not match the child");
        }
      }
      for (auto const& c : n.children) {
        if (!replay_node(c, why)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool replay(ProofTrace const& trace, std::string* first_failure) {
    std::string why;
    bool        ok = replay_node(trace.root, why);
    if (!ok && first_failure) {
      *first_failure = why;
    }
    return ok;
  }

  ////////////////////////////////////////////////////////////////////////
  // Center rank
  ////////////////////////////////////////////////////////////////////////

  CenterReport center_of(CoxeterDiagram const& d, bool assume) {
    auto         split = spherical_factors(d);
    CenterReport out;
    out.rank = split.spherical.size();
    for (auto const& u : split.spherical) {
      out.generators.push_back(center_symbol(u));
    }
    std::vector<std::string> notes;
    for (auto const& v : split.infinite) {
      auto res = certify_trivial_center(induced(d, v), assume);
      if (auto const* r = std::get_if<Refusal>(&res)) {
        out.conditionality = Conditionality::conditional_on_center_conjecture;
        notes.push_back(v.to_string() + ": " + to_string(r->kind));
        continue;
      }
      auto const& tr = std::get<ProofTrace>(res);
      auto        lv = leaves(tr.root);
      bool        free = std::all_of(lv.begin(), lv.end(), [](Rule r) {
        return r == Rule::free_group_base || r == Rule::empty_base;
      });
      if (!free && out.conditionality == Conditionality::unconditional) {
        out.conditionality = Conditionality::conditional_on_kpi1;
      }
      notes.push_back(v.to_string() + ": trivial center ("
                      + (free ? "free group" : tr.assumptions.front()) + ")");
    }
    for (std::size_t i = 0; i < notes.size(); ++i) {
      out.note += (i ? "; " : "") + notes[i];
    }
    return out;
  }

}  // namespace artin
