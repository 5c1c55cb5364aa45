#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/certify.hpp"
#include "artin/spherical.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {
  CoxeterDiagram const kite = parse_diagram(
      "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n");
  CoxeterDiagram const free2 = parse_diagram("generators: v w\nv w inf\n");
  CoxeterDiagram const a2    = parse_diagram("generators: s t\ns t 3\n");

  ProofTrace trace_of(CoxeterDiagram const& d, bool assume = true) {
    auto r = certify_trivial_center(d, assume);
    REQUIRE(std::holds_alternative<ProofTrace>(r));
    return std::get<ProofTrace>(r);
  }

  std::vector<Premise> premises_of(TraceNode const& n, std::string const& check) {
    std::vector<Premise> out;
    for (auto const& p : n.premises) {
      if (p.check == check) {
        out.push_back(p);
      }
    }
    return out;
  }

  // Brute-force largest spherical subset, independent of max_spherical. The
  // largest finite group at rank <= 4 over {2,3} is W(D_4) of order 192.
  std::size_t brute_spherical_dimension(CoxeterDiagram const& d) {
    std::size_t best = 0;
    for (auto const& s : oracle::all_subsets(d)) {
      if (s.size() > best
          && oracle::float_group_order(induced(d, s), 1000).has_value()) {
        best = s.size();
      }
    }
    return best;
  }

}  // namespace

TEST_CASE("kpi1_class") {
  auto all2 = parse_diagram("generators: a b c\n");
  auto st   = kpi1_class(all2);
  CHECK(st.kind == Kpi1Status::Kind::known);
  CHECK(st.primary() == Kpi1Class::spherical);
  CHECK(std::find(st.classes.begin(), st.classes.end(), Kpi1Class::fc)
        != st.classes.end());

  CHECK(kpi1_class(kite).kind == Kpi1Status::Kind::unknown);
  CHECK(kpi1_class(kite, true).kind == Kpi1Status::Kind::assumed);
  CHECK(kpi1_class(free2).primary() == Kpi1Class::fc);
  CHECK(is_two_dimensional(free2));

  // Affine A_2 triangle: every pair spherical, the whole not: not FC.
  auto tri = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3\n");
  CHECK_FALSE(is_fc_type(tri));
  CHECK(is_two_dimensional(tri));
  CHECK(kpi1_class(tri).primary() == Kpi1Class::two_dimensional);

  // A_3 is irreducible spherical of rank 3: not locally reducible.
  CHECK_FALSE(is_locally_reducible(parse_diagram("generators: a b c\na b 3\nb c 3\n")));
}

TEST_CASE("certify: kite is a single free-of-infinity step") {
  auto tr = trace_of(kite);
  CHECK(tr.root.rule == Rule::free_of_infinity_base);
  CHECK(tr.root.children.empty());
  CHECK(tr.assumptions.front() == "K(pi,1): Assumed");
  auto ms = premises_of(tr.root, "maximal_spherical");
  REQUIRE(ms.size() == 1);
  CHECK(Subset(ms[0].args.at("T")) == Subset{"a", "b", "c"});
  auto wp = premises_of(tr.root, "witness_pair");
  REQUIRE(wp.size() == 1);
  CHECK(wp[0].args.at("s") == std::vector<std::string>{"d"});
  CHECK(wp[0].args.at("t") == std::vector<std::string>{"a"});
  CHECK(premises_of(tr.root, "surface_meets").size() == 1);
  CHECK(replay(tr));
}

TEST_CASE("certify: kite without the assumption is refused") {
  auto r = certify_trivial_center(kite, false);
  REQUIRE(std::holds_alternative<Refusal>(r));
  CHECK(std::get<Refusal>(r).kind == Refusal::Kind::no_kpi1);
}

TEST_CASE("certify: spherical factors are refused with their centers") {
  auto r = certify_trivial_center(a2, true);
  REQUIRE(std::holds_alternative<Refusal>(r));
  auto const& ref = std::get<Refusal>(r);
  CHECK(ref.kind == Refusal::Kind::spherical_factor_obstruction);
  CHECK(ref.center_generators == std::vector<std::string>{"z_{s,t}"});
}

TEST_CASE("certify: free group of rank 2") {
  auto tr = trace_of(free2, false);
  REQUIRE(tr.root.rule == Rule::spherical_peel);
  REQUIRE(tr.root.children.size() == 2);
  CHECK(tr.root.children[0].rule == Rule::empty_base);
  auto const& q = tr.root.children[1];
  CHECK(q.rule == Rule::label_seven_quotient);
  REQUIRE(q.children.size() == 1);
  CHECK(q.children[0].rule == Rule::free_group_base);
  CHECK(replay(tr));
  CHECK(leaves(tr.root) == std::vector<Rule>{Rule::empty_base, Rule::free_group_base});
}

TEST_CASE("certify: an infinite edge without spherical factors splits as an amalgam") {
  // a - b - c all infinite plus d joined by 3 to all: S - {a} = {b,c,d}.
  auto d = parse_diagram(
      "generators: a b c d\na b inf\nb c inf\na c inf\na d 3\nb d 3\nc d 3\n");
  auto tr = trace_of(d);
  CHECK(tr.root.rule == Rule::amalgam_split);
  REQUIRE(tr.root.children.size() == 1);
  CHECK(tr.root.children[0].diagram.rank() == 3);
  CHECK(replay(tr));
}

TEST_CASE("replay rejects tampered traces") {
  auto tr = trace_of(kite);
  std::string why;

  SUBCASE("non-maximal T") {
    for (auto& p : tr.root.premises) {
      if (p.check == "maximal_spherical") {
        p.args["T"] = {"a", "b"};
      }
    }
    CHECK_FALSE(replay(tr, &why));
    CHECK(why.find("maximal_spherical") != std::string::npos);
  }
  SUBCASE("witness pair with s inside T") {
    for (auto& p : tr.root.premises) {
      if (p.check == "witness_pair") {
        p.args["t"] = {"c"};  // another valid choice, m_dc = 3
        p.args["s"] = {"d"};
        p.args["part"] = {"a", "b", "c"};
      }
    }
    CHECK(replay(tr));
    for (auto& p : tr.root.premises) {
      if (p.check == "witness_pair") {
        p.args["s"] = {"b"};  // b is inside T
      }
    }
    CHECK_FALSE(replay(tr));
  }
  SUBCASE("missing witness") {
    std::erase_if(tr.root.premises,
                  [](auto const& p) { return p.check == "witness_pair"; });
    CHECK_FALSE(replay(tr));
  }
  SUBCASE("ok flag cleared") {
    tr.root.premises.front().ok = false;
    CHECK_FALSE(replay(tr));
  }
  SUBCASE("unknown check") {
    tr.root.premises.front().check = "trust_me";
    CHECK_FALSE(replay(tr));
  }
  SUBCASE("wrong child diagram") {
    auto f = trace_of(free2);
    f.root.children[1].diagram = a2;
    CHECK_FALSE(replay(f));
  }
}

TEST_CASE("center_of") {
  auto both = disjoint_union(a2, kite);
  auto r    = center_of(both, true);
  CHECK(r.rank == 1);
  CHECK(r.generators == std::vector<std::string>{"z_{s,t}"});
  CHECK(r.conditionality == Conditionality::conditional_on_kpi1);

  auto free3 = parse_diagram("generators: a b c\na b inf\nb c inf\na c inf\n");
  auto f     = center_of(free3, false);
  CHECK(f.rank == 0);
  CHECK(f.conditionality == Conditionality::unconditional);

  CHECK(center_of(CoxeterDiagram{}, false).rank == 0);
  CHECK(center_of(kite, false).conditionality
        == Conditionality::conditional_on_center_conjecture);
}

TEST_CASE("label_seven replaces only infinite labels") {
  auto d = parse_diagram("generators: a b c\na b inf\nb c 3\n");
  auto q = label_seven(d);
  CHECK(q.label("a", "b") == Label::finite(7));
  CHECK(q.label("b", "c") == Label::finite(3));
  CHECK(q.label("a", "c") == Label::finite(2));
}

TEST_CASE("property: every diagram of rank <= 4 over {2,3,inf} certifies and replays") {
  std::size_t certified = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& d : oracle::all_diagrams(n, {2, 3, 0})) {
      INFO(serialize(d));
      CertifyResult r = Refusal{};
      REQUIRE_NOTHROW(r = certify_trivial_center(d, true));
      bool has_factor = !spherical_factors(d).spherical.empty();
      CHECK(std::holds_alternative<Refusal>(r) == has_factor);
      if (auto const* tr = std::get_if<ProofTrace>(&r)) {
        std::string why;
        CHECK_MESSAGE(replay(*tr, &why), why);
        auto ms = premises_of(tr->root, "maximal_spherical");
        if (!ms.empty()) {
          CHECK(ms[0].args.at("T").size() == brute_spherical_dimension(d));
        }
        ++certified;
      }
    }
  }
  CHECK(certified > 100);
}

TEST_CASE("property: random diagrams of rank <= 6 with labels {2,3,4,6,inf}") {
  std::mt19937_64 rng(20261019);
  for (int trial = 0; trial < 60; ++trial) {
    auto d = oracle::random_diagram(rng, 2 + trial % 5, {2, 3, 4, 6, 0});
    INFO(serialize(d));
    CertifyResult r = Refusal{};
    REQUIRE_NOTHROW(r = certify_trivial_center(d, true));
    if (auto const* tr = std::get_if<ProofTrace>(&r)) {
      std::string why;
      CHECK_MESSAGE(replay(*tr, &why), why);
      CHECK(std::ranges::all_of(leaves(tr->root), is_leaf));
    }
  }
}

TEST_CASE("property: center rank is additive over disjoint unions") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = oracle::random_diagram(rng, 1 + trial % 3, {2, 3, 0}, "x");
    auto y = oracle::random_diagram(rng, 1 + (trial / 3) % 3, {2, 3, 0}, "y");
    INFO(serialize(x), serialize(y));
    CHECK(center_of(disjoint_union(x, y), true).rank
          == center_of(x, true).rank + center_of(y, true).rank);
  }
}
