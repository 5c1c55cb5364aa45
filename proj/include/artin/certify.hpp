// Trivial-center certification for Artin groups without spherical factors.
//
// The engine follows an induction on the number of generators: the
// free-of-infinity case is a base case, an infinite label splits the group
// as an amalgam over a smaller special subgroup, and the remaining cases are
// peeled down to a free-of-infinity diagram or a free group after replacing
// infinite labels by 7. Every step carries premises that are re-checked by
// replay() from the diagram alone.

#ifndef ARTIN_CERTIFY_HPP_
#define ARTIN_CERTIFY_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "artin/diagram.hpp"

namespace artin {

  ////////////////////////////////////////////////////////////////////////
  // K(pi,1) classes
  ////////////////////////////////////////////////////////////////////////

  enum class Kpi1Class { spherical, fc, two_dimensional, locally_reducible };

  struct Kpi1Status {
    enum class Kind { known, assumed, unknown };
    Kind                   kind = Kind::unknown;
    std::vector<Kpi1Class> classes;  // every class the diagram satisfies
    std::optional<Kpi1Class> primary() const;
    std::string            to_string() const;

    friend bool operator==(Kpi1Status const&, Kpi1Status const&) = default;
  };

  std::string to_string(Kpi1Class c);

  //! FC: every free-of-infinity subset is spherical.
  bool is_fc_type(CoxeterDiagram const& d);
  //! Every spherical subset has at most two generators.
  bool is_two_dimensional(CoxeterDiagram const& d);
  //! Every irreducible spherical subset has at most two generators.
  bool is_locally_reducible(CoxeterDiagram const& d);

  //! Known classes in the order spherical, FC, two-dimensional, locally
  //! reducible. Unknown diagrams become Assumed when \p assume is set.
  Kpi1Status kpi1_class(CoxeterDiagram const& d, bool assume = false);

  ////////////////////////////////////////////////////////////////////////
  // Traces
  ////////////////////////////////////////////////////////////////////////

  enum class Rule {
    empty_base,
    free_of_infinity_base,
    free_group_base,
    amalgam_split,
    spherical_peel,
    label_seven_quotient,
  };

  std::string          to_string(Rule r);
  std::optional<Rule>  rule_from_string(std::string const& s);
  bool                 is_leaf(Rule r);

  //! A checkable fact about the diagram of the step it belongs to. \p check
  //! selects the procedure that replay() re-runs on \p args. Cited facts are
  //! trusted and marked as such.
  struct Premise {
    std::string                                     check;
    std::map<std::string, std::vector<std::string>> args;
    std::string                                     fact;
    std::string                                     citation;
    bool                                            ok = false;

    bool cited() const {
      return check == "cited";
    }

    friend bool operator==(Premise const&, Premise const&) = default;
  };

  struct TraceNode {
    CoxeterDiagram         diagram;
    Rule                   rule = Rule::empty_base;
    std::vector<Premise>   premises;
    std::vector<TraceNode> children;

    friend bool operator==(TraceNode const&, TraceNode const&) = default;
  };

  struct ProofTrace {
    std::vector<std::string> assumptions;
    TraceNode                root;

    friend bool operator==(ProofTrace const&, ProofTrace const&) = default;
  };

  struct Refusal {
    enum class Kind { spherical_factor_obstruction, no_kpi1 };
    Kind                     kind;
    std::string              reason;
    std::vector<std::string> center_generators;  // z_U per spherical factor

    friend bool operator==(Refusal const&, Refusal const&) = default;
  };

  std::string to_string(Refusal::Kind k);

  //! A premise that the argument needs failed on this diagram.
  class VerificationFailure : public std::runtime_error {
   public:
    VerificationFailure(Premise premise, std::string const& where);
    Premise const& premise() const noexcept {
      return premise_;
    }

   private:
    Premise premise_;
  };

  using CertifyResult = std::variant<ProofTrace, Refusal>;

  //! Throws VerificationFailure.
  CertifyResult certify_trivial_center(CoxeterDiagram const& d, bool assume);

  //! Re-runs every premise on a trace. On failure \p first_failure (if
  //! given) receives a description of the first failing premise.
  bool replay(ProofTrace const& trace, std::string* first_failure = nullptr);

  //! Evaluates one premise in the context of a trace node.
  bool evaluate(TraceNode const& node, Premise const& p);

  //! Leaf rules of a trace, depth first.
  std::vector<Rule> leaves(TraceNode const& node);

  ////////////////////////////////////////////////////////////////////////
  // Center rank
  ////////////////////////////////////////////////////////////////////////

  enum class Conditionality {
    unconditional,
    conditional_on_kpi1,
    conditional_on_center_conjecture,
  };

  std::string to_string(Conditionality c);

  struct CenterReport {
    std::size_t              rank = 0;
    std::vector<std::string> generators;
    Conditionality           conditionality = Conditionality::unconditional;
    std::string              note;

    friend bool operator==(CenterReport const&, CenterReport const&) = default;
  };

  //! One z_U per irreducible spherical factor U; the infinite-type part is
  //! certified separately.
  CenterReport center_of(CoxeterDiagram const& d, bool assume);

  //! "z_{a,b}"
  std::string center_symbol(Subset const& u);

  //! The diagram with every infinite label replaced by 7.
  CoxeterDiagram label_seven(CoxeterDiagram const& d);

}  // namespace artin

#endif  // ARTIN_CERTIFY_HPP_
