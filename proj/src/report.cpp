#include "artin/report.hpp"

#include <sstream>

namespace artin {

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  AnalyzeReport analyze(CoxeterDiagram const& d, bool assume_kpi1) {
    AnalyzeReport r;
    r.diagram    = d;
    r.components = components(d);
    r.split      = spherical_factors(d);
    for (auto const& u : r.split.spherical) {
      r.families.push_back(*classify_irreducible(d, d.mask_of(u)));
    }
    r.spherical = r.split.infinite.empty();
    if (r.spherical) {
      CoxOrder order = 1;
      for (auto const& f : r.families) {
        order *= f.order();
      }
      r.coxeter_order = order.str();
    }
    r.spherical_dimension = max_spherical(d);
    r.kpi1                = kpi1_class(d, assume_kpi1);
    r.center              = center_of(d, assume_kpi1);
    return r;
  }

  OracleReport order_oracle(CoxeterDiagram const& d, std::uint64_t cap) {
    return {d, cap, coxeter_order_bfs(d, d.full_mask(), cap)};
  }

  ////////////////////////////////////////////////////////////////////////
  // JSON helpers
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Json const& field(Json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string("missing key \"") + key + "\"");
      }
      return j.at(key);
    }

    template <typename T>
    T get(Json const& j, char const* key) {
      try {
        return field(j, key).get<T>();
      } catch (nlohmann::json::exception const& e) {
        throw SchemaError(std::string("bad value for \"") + key + "\": " + e.what());
      }
    }

    Json subset_json(Subset const& s) {
      return Json(s.names());
    }

    Subset subset_from(Json const& j, char const* key) {
      return Subset(get<std::vector<std::string>>(j, key));
    }

    Json subsets_json(std::vector<Subset> const& v) {
      Json out = Json::array();
      for (auto const& s : v) {
        out.push_back(subset_json(s));
      }
      return out;
    }

    std::vector<Subset> subsets_from(Json const& j, char const* key) {
      std::vector<Subset> out;
      for (auto const& names : get<std::vector<std::vector<std::string>>>(j, key)) {
        out.emplace_back(names);
      }
      return out;
    }

    std::string family_letter(Family f) {
      return std::string(1, "ABDEFHI"[static_cast<int>(f)]);
    }

    Family family_from(std::string const& s) {
      auto pos = std::string("ABDEFHI").find(s);
      if (s.size() != 1 || pos == std::string::npos) {
        throw SchemaError("unknown family " + s);
      }
      return static_cast<Family>(pos);
    }

    template <typename E>
    E enum_from(std::string const& s, std::vector<E> const& all) {
      for (auto e : all) {
        if (to_string(e) == s) {
          return e;
        }
      }
      throw SchemaError("unknown value " + s);
    }

    std::vector<Kpi1Class> const all_classes = {
        Kpi1Class::spherical, Kpi1Class::fc, Kpi1Class::two_dimensional,
        Kpi1Class::locally_reducible};

    std::vector<Conditionality> const all_conditionalities = {
        Conditionality::unconditional, Conditionality::conditional_on_kpi1,
        Conditionality::conditional_on_center_conjecture};

    std::string kind_name(Kpi1Status::Kind k) {
      switch (k) {
        case Kpi1Status::Kind::known:
          return "Known";
        case Kpi1Status::Kind::assumed:
          return "Assumed";
        case Kpi1Status::Kind::unknown:
          return "Unknown";
      }
      return "?";
    }

    Json node_json(TraceNode const& n) {
      Json premises = Json::array();
      for (auto const& p : n.premises) {
        premises.push_back({{"fact", p.fact},
                            {"citation", p.citation},
                            {"ok", p.ok},
                            {"check", p.check},
                            {"args", p.args}});
      }
      Json children = Json::array();
      for (auto const& c : n.children) {
        children.push_back(node_json(c));
      }
      return {{"diagram", to_json(n.diagram)},
              {"rule", to_string(n.rule)},
              {"premises", premises},
              {"children", children}};
    }

    TraceNode node_from(Json const& j) {
      TraceNode n;
      n.diagram = diagram_from_json(field(j, "diagram"));
      auto rule = rule_from_string(get<std::string>(j, "rule"));
      if (!rule) {
        throw SchemaError("unknown rule " + get<std::string>(j, "rule"));
      }
      n.rule = *rule;
      for (auto const& p : field(j, "premises")) {
        n.premises.push_back(
            {get<std::string>(p, "check"),
             get<std::map<std::string, std::vector<std::string>>>(p, "args"),
             get<std::string>(p, "fact"), get<std::string>(p, "citation"),
             get<bool>(p, "ok")});
      }
      for (auto const& c : field(j, "children")) {
        n.children.push_back(node_from(c));
      }
      return n;
    }

    Json fit_json(MultitwistFit const& f) {
      return {{"matches", f.matches}, {"exponents", f.exponents}};
    }

    MultitwistFit fit_from(Json const& j) {
      return {get<bool>(j, "matches"), get<std::vector<std::int64_t>>(j, "exponents")};
    }

    Json order_json(BfsOrder const& o) {
      if (auto const* n = std::get_if<std::uint64_t>(&o)) {
        return {{"order", *n}};
      }
      return {{"exceeded_cap", std::get<ExceededCap>(o).cap}};
    }

    std::string list(std::vector<Subset> const& v, char const* sep = ", ") {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i].to_string();
      }
      return out;
    }

    std::string list(std::vector<std::string> const& v) {
      std::string out;
      for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i];
      }
      return out;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  Json to_json(CoxeterDiagram const& d) {
    Json labels = Json::array();
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = i + 1; j < d.rank(); ++j) {
        auto m = d.label(i, j);
        if (m != Label::finite(2)) {
          labels.push_back({d.name(i), d.name(j), m.to_string()});
        }
      }
    }
    return {{"generators", d.generators()}, {"labels", labels}};
  }

  CoxeterDiagram diagram_from_json(Json const& j) {
    try {
      CoxeterDiagram d(get<std::vector<std::string>>(j, "generators"));
      for (auto const& e : field(j, "labels")) {
        auto triple = e.get<std::vector<std::string>>();
        if (triple.size() != 3) {
          throw SchemaError("label entries are [s, t, m]");
        }
        d.set_label(triple[0], triple[1],
                    triple[2] == "inf" ? Label::infinity()
                                       : Label::finite(std::stoul(triple[2])));
      }
      return d;
    } catch (SchemaError const&) {
      throw;
    } catch (std::exception const& e) {
      throw SchemaError(std::string("bad diagram: ") + e.what());
    }
  }

  Json to_json(ProofTrace const& t) {
    auto root = node_json(t.root);
    Json out  = {{"diagram", root["diagram"]}, {"assumptions", t.assumptions}};
    for (auto const& [k, v] : root.items()) {
      if (k != "diagram") {
        out[k] = v;
      }
    }
    return out;
  }

  ProofTrace trace_from_json(Json const& j) {
    return {get<std::vector<std::string>>(j, "assumptions"), node_from(j)};
  }

  Json to_json(Refusal const& r) {
    return {{"refusal", to_string(r.kind)},
            {"reason", r.reason},
            {"center_generators", r.center_generators}};
  }

  Refusal refusal_from_json(Json const& j) {
    auto kind = get<std::string>(j, "refusal");
    Refusal r;
    if (kind == "SphericalFactorObstruction") {
      r.kind = Refusal::Kind::spherical_factor_obstruction;
    } else if (kind == "NoKpi1") {
      r.kind = Refusal::Kind::no_kpi1;
    } else {
      throw SchemaError("unknown refusal " + kind);
    }
    r.reason            = get<std::string>(j, "reason");
    r.center_generators = get<std::vector<std::string>>(j, "center_generators");
    return r;
  }

  Json to_json(CertifyResult const& r) {
    return std::visit([](auto const& x) { return to_json(x); }, r);
  }

  CertifyResult certify_result_from_json(Json const& j) {
    if (j.is_object() && j.contains("refusal")) {
      return refusal_from_json(j);
    }
    return trace_from_json(j);
  }

  Json to_json(AnalyzeReport const& r) {
    Json families = Json::array();
    for (auto const& f : r.families) {
      families.push_back({{"tag", f.tag()},
                          {"family", family_letter(f.family)},
                          {"rank", f.rank},
                          {"dihedral_label", f.dihedral_label},
                          {"subset", subset_json(f.subset)}});
    }
    Json classes = Json::array();
    for (auto c : r.kpi1.classes) {
      classes.push_back(to_string(c));
    }
    return {
        {"diagram", to_json(r.diagram)},
        {"components", subsets_json(r.components)},
        {"spherical_factors", subsets_json(r.split.spherical)},
        {"infinite_factors", subsets_json(r.split.infinite)},
        {"families", families},
        {"spherical", r.spherical},
        {"coxeter_order", r.coxeter_order ? Json(*r.coxeter_order) : Json(nullptr)},
        {"spherical_dimension",
         {{"value", r.spherical_dimension.value},
          {"witnesses", subsets_json(r.spherical_dimension.witnesses)}}},
        {"kpi1", {{"kind", kind_name(r.kpi1.kind)}, {"classes", classes}}},
        {"center",
         {{"rank", r.center.rank},
          {"generators", r.center.generators},
          {"conditionality", to_string(r.center.conditionality)},
          {"note", r.center.note}}},
    };
  }

  AnalyzeReport analyze_from_json(Json const& j) {
    AnalyzeReport r;
    r.diagram         = diagram_from_json(field(j, "diagram"));
    r.components      = subsets_from(j, "components");
    r.split.spherical = subsets_from(j, "spherical_factors");
    r.split.infinite  = subsets_from(j, "infinite_factors");
    for (auto const& f : field(j, "families")) {
      r.families.push_back({family_from(get<std::string>(f, "family")),
                            get<std::size_t>(f, "rank"),
                            get<std::uint32_t>(f, "dihedral_label"),
                            subset_from(f, "subset")});
    }
    r.spherical = get<bool>(j, "spherical");
    if (!field(j, "coxeter_order").is_null()) {
      r.coxeter_order = get<std::string>(j, "coxeter_order");
    }
    auto const& sd                  = field(j, "spherical_dimension");
    r.spherical_dimension.value     = get<std::size_t>(sd, "value");
    r.spherical_dimension.witnesses = subsets_from(sd, "witnesses");
    auto const& k                   = field(j, "kpi1");
    auto        kind                = get<std::string>(k, "kind");
    r.kpi1.kind = kind == "Known"     ? Kpi1Status::Kind::known
                  : kind == "Assumed" ? Kpi1Status::Kind::assumed
                  : kind == "Unknown" ? Kpi1Status::Kind::unknown
                                      : throw SchemaError("unknown kpi1 kind " + kind);
    for (auto const& c : get<std::vector<std::string>>(k, "classes")) {
      r.kpi1.classes.push_back(enum_from(c, all_classes));
    }
    auto const& c          = field(j, "center");
    r.center.rank          = get<std::size_t>(c, "rank");
    r.center.generators    = get<std::vector<std::string>>(c, "generators");
    r.center.conditionality =
        enum_from(get<std::string>(c, "conditionality"), all_conditionalities);
    r.center.note = get<std::string>(c, "note");
    return r;
  }

  Json to_json(SurfaceSuite const& s) {
    Json checks = Json::array();
    for (auto const& c : s.checks) {
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    Json centers = Json::array();
    for (auto const& c : s.centers) {
      centers.push_back({{"T", subset_json(c.t)},
                         {"word_length", c.word_length},
                         {"delta_central", c.delta_central},
                         {"square", fit_json(c.square)},
                         {"fourth", fit_json(c.fourth)}});
    }
    return {{"vertices", s.vertices}, {"edges", s.edges},     {"euler", s.euler},
            {"boundary", s.boundary}, {"genus", s.genus},     {"h1_rank", s.h1_rank},
            {"passed", s.passed()},   {"checks", checks},     {"centers", centers}};
  }

  SurfaceSuite surface_suite_from_json(Json const& j) {
    SurfaceSuite s;
    s.vertices = get<std::size_t>(j, "vertices");
    s.edges    = get<std::size_t>(j, "edges");
    s.euler    = get<std::int64_t>(j, "euler");
    s.boundary = get<std::size_t>(j, "boundary");
    s.genus    = get<std::size_t>(j, "genus");
    s.h1_rank  = get<std::size_t>(j, "h1_rank");
    for (auto const& c : field(j, "checks")) {
      s.checks.push_back({get<std::string>(c, "name"), get<bool>(c, "passed"),
                          get<std::string>(c, "detail")});
    }
    for (auto const& c : field(j, "centers")) {
      s.centers.push_back({subset_from(c, "T"), get<std::size_t>(c, "word_length"),
                           get<bool>(c, "delta_central"), fit_from(field(c, "square")),
                           fit_from(field(c, "fourth"))});
    }
    return s;
  }

  Json to_json(OracleReport const& r) {
    Json out = {{"diagram", to_json(r.diagram)}, {"cap", r.cap}};
    out.update(order_json(r.order));
    return out;
  }

  OracleReport oracle_from_json(Json const& j) {
    OracleReport r;
    r.diagram = diagram_from_json(field(j, "diagram"));
    r.cap     = get<std::uint64_t>(j, "cap");
    if (j.contains("order")) {
      r.order = get<std::uint64_t>(j, "order");
    } else {
      r.order = ExceededCap{get<std::uint64_t>(j, "exceeded_cap")};
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void render_node(std::ostringstream& out, TraceNode const& n, std::size_t depth) {
      std::string const pad(2 * depth, ' ');
      out << pad << to_string(n.rule) << " on " << n.diagram.all().to_string() << "\n";
      for (auto const& p : n.premises) {
        out << pad << "  [" << (p.ok ? "ok" : "FAILED") << "] " << p.fact;
        if (p.citation != "computed") {
          out << "  (" << p.citation << ")";
        }
        out << "\n";
      }
      for (auto const& c : n.children) {
        render_node(out, c, depth + 1);
      }
    }
  }  // namespace

  std::string render_text(ProofTrace const& t) {
    std::ostringstream out;
    out << "trivial center certified\n";
    out << "assumptions:\n";
    for (auto const& a : t.assumptions) {
      out << "  - " << a << "\n";
    }
    render_node(out, t.root, 0);
    return out.str();
  }

  std::string render_text(Refusal const& r) {
    std::string out = "refused: " + to_string(r.kind) + "\n  " + r.reason + "\n";
    if (!r.center_generators.empty()) {
      out += "  center generators: " + list(r.center_generators) + "\n";
    }
    return out;
  }

  std::string render_text(AnalyzeReport const& r) {
    std::ostringstream out;
    out << "generators: " << r.diagram.all().to_string() << "\n";
    if (r.components.size() <= 1) {
      out << "irreducible\n";
    } else {
      out << r.components.size() << " components: " << list(r.components) << "\n";
    }
    if (r.spherical) {
      std::string tags;
      for (auto const& f : r.families) {
        tags += (tags.empty() ? "" : " x ") + f.tag();
      }
      out << "spherical, famil" << (r.families.size() == 1 ? "y " : "ies ") << tags
          << ", |W|=" << *r.coxeter_order << "; center rank " << r.center.rank << "\n";
    } else {
      out << "infinite type\n";
    }
    if (!r.split.spherical.empty()) {
      out << "spherical factors:";
      for (auto const& f : r.families) {
        out << " " << f.tag() << " " << f.subset.to_string();
      }
      out << "\n";
    }
    if (!r.split.infinite.empty() && !r.split.spherical.empty()) {
      out << "infinite-type factors: " << list(r.split.infinite) << "\n";
    }
    out << "spherical dimension " << r.spherical_dimension.value << "; witnesses "
        << list(r.spherical_dimension.witnesses) << "\n";
    out << "K(pi,1) class: " << r.kpi1.to_string() << "\n";
    out << "center rank " << r.center.rank;
    if (!r.center.generators.empty()) {
      out << " (" << list(r.center.generators) << ")";
    }
    out << ", " << to_string(r.center.conditionality) << "\n";
    if (!r.center.note.empty()) {
      out << "  " << r.center.note << "\n";
    }
    return out.str();
  }

  std::string render_text(SurfaceSuite const& s) {
    std::ostringstream out;
    out << "K: V=" << s.vertices << " E=" << s.edges << " chi=" << s.euler
        << "; boundary " << s.boundary << ", genus " << s.genus << ", H1 rank "
        << s.h1_rank << "\n";
    for (auto const& c : s.checks) {
      out << (c.passed ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) {
        out << ": " << c.detail;
      }
      out << "\n";
    }
    for (auto const& c : s.centers) {
      out << "z_T for T=" << c.t.to_string() << ": word length " << c.word_length
          << (c.delta_central ? " (Delta)" : " (Delta^2)") << "; square "
          << (c.square.matches ? "matches" : "does not match") << ", fourth "
          << (c.fourth.matches ? "matches" : "does not match") << "\n";
    }
    out << (s.passed() ? "all checks passed" : "some checks FAILED") << "\n";
    return out.str();
  }

  std::string render_text(OracleReport const& r) {
    if (auto const* n = std::get_if<std::uint64_t>(&r.order)) {
      return "|W| = " + std::to_string(*n) + "\n";
    }
    return "ExceededCap(" + std::to_string(r.cap) + ")\n";
  }

}  // namespace artin
