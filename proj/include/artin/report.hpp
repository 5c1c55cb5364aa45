// Reports for the command-line tool and the Python module, with JSON and
// text renderings. Every JSON form parses back to an equal value.
//
// Trace schema:
//   {"diagram": D, "assumptions": [str], "rule": str,
//    "premises": [{"fact", "citation", "ok", "check", "args"}],
//    "children": [node]}
// where the root object carries "assumptions" and child nodes do not, and a
// diagram D is {"generators": [str], "labels": [[s, t, m]]} listing every
// label other than 2 (m is a decimal string or "inf").

#ifndef ARTIN_REPORT_HPP_
#define ARTIN_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "artin/certify.hpp"
#include "artin/diagram.hpp"
#include "artin/spherical.hpp"
#include "artin/surface.hpp"

namespace artin {

  using Json = nlohmann::ordered_json;

  //! Raised when a JSON document does not match the schema.
  class SchemaError : public std::runtime_error {
   public:
    explicit SchemaError(std::string const& what) : std::runtime_error(what) {}
  };

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  struct AnalyzeReport {
    CoxeterDiagram               diagram;
    std::vector<Subset>          components;
    FactorSplit                  split;
    std::vector<FamilyComponent> families;  // spherical components
    bool                         spherical = false;
    std::optional<std::string>   coxeter_order;  // decimal, when spherical
    CdReport                     spherical_dimension;
    Kpi1Status                   kpi1;
    CenterReport                 center;

    friend bool operator==(AnalyzeReport const&, AnalyzeReport const&) = default;
  };

  AnalyzeReport analyze(CoxeterDiagram const& d, bool assume_kpi1);

  struct OracleReport {
    CoxeterDiagram diagram;
    std::uint64_t  cap = default_bfs_cap;
    BfsOrder       order;

    friend bool operator==(OracleReport const&, OracleReport const&) = default;
  };

  //! Throws UnsupportedLabels.
  OracleReport order_oracle(CoxeterDiagram const& d, std::uint64_t cap);

  ////////////////////////////////////////////////////////////////////////
  // JSON
  ////////////////////////////////////////////////////////////////////////

  Json to_json(CoxeterDiagram const& d);
  Json to_json(ProofTrace const& t);
  Json to_json(Refusal const& r);
  Json to_json(CertifyResult const& r);
  Json to_json(AnalyzeReport const& r);
  Json to_json(SurfaceSuite const& s);
  Json to_json(OracleReport const& r);

  //! Each throws SchemaError on malformed input.
  CoxeterDiagram diagram_from_json(Json const& j);
  ProofTrace     trace_from_json(Json const& j);
  Refusal        refusal_from_json(Json const& j);
  CertifyResult  certify_result_from_json(Json const& j);
  AnalyzeReport  analyze_from_json(Json const& j);
  SurfaceSuite   surface_suite_from_json(Json const& j);
  OracleReport   oracle_from_json(Json const& j);

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  //! Indented rule tree with premises and citations.
  std::string render_text(ProofTrace const& t);
  std::string render_text(Refusal const& r);
  std::string render_text(AnalyzeReport const& r);
  //! One PASS/FAIL line per check.
  std::string render_text(SurfaceSuite const& s);
  std::string render_text(OracleReport const& r);

}  // namespace artin

#endif  // ARTIN_REPORT_HPP_
