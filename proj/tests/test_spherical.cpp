#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/spherical.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {
  CoxeterDiagram path(std::vector<std::uint32_t> labels) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= labels.size(); ++i) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    }
    CoxeterDiagram d(names);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      d.set_label(i, i + 1, Label::finite(labels[i]));
    }
    return d;
  }

  std::uint64_t exact(BfsOrder const& r) {
    REQUIRE(std::holds_alternative<std::uint64_t>(r));
    return std::get<std::uint64_t>(r);
  }

  CoxeterDiagram const kite = parse_diagram(
      "generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\nb d 3\n");
}  // namespace

TEST_CASE("is_spherical: A_3 path") {
  auto d = path({3, 3});
  auto r = is_spherical(d, d.all());
  CHECK(r.spherical);
  REQUIRE(r.families.size() == 1);
  CHECK(r.families[0].tag() == "A_3");
  CHECK(*r.coxeter_order == 24);
  // Independent oracle.
  CHECK(oracle::float_group_order(d, 10000) == 24u);
}

TEST_CASE("is_spherical: affine triangle is infinite type") {
  auto d = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3\n");
  auto r = is_spherical(d, d.all());
  CHECK_FALSE(r.spherical);
  CHECK_FALSE(r.coxeter_order.has_value());
  CHECK(r.infinite_components == std::vector<Subset>{d.all()});
  CHECK_FALSE(gram_positive_definite(d, d.all()));
  CHECK(std::holds_alternative<ExceededCap>(
      coxeter_order_bfs(d, d.all(), 10000)));
  CHECK_FALSE(oracle::float_group_order(d, 2000).has_value());
}

TEST_CASE("is_spherical: rank one and dihedral") {
  auto s = parse_diagram("generators: s\n");
  auto r = is_spherical(s, s.all());
  CHECK(r.spherical);
  CHECK(r.families[0].tag() == "A_1");
  CHECK(*r.coxeter_order == 2);
  CHECK(exact(coxeter_order_bfs(s, s.all(), 2)) == 2);

  auto i7 = parse_diagram("generators: s t\ns t 7\n");
  auto r7 = is_spherical(i7, i7.all());
  CHECK(r7.spherical);
  CHECK(r7.families[0].tag() == "I_2(7)");
  CHECK(*r7.coxeter_order == 14);
  CHECK(exact(coxeter_order_bfs(i7, i7.all())) == 14);
  CHECK(oracle::float_group_order(i7, 100) == 14u);
}

TEST_CASE("is_spherical: empty subset is the trivial group") {
  auto r = is_spherical(kite, Subset{});
  CHECK(r.spherical);
  CHECK(*r.coxeter_order == 1);
  CHECK(exact(coxeter_order_bfs(kite, Subset{}, 1)) == 1);
}

TEST_CASE("classification of the finite-type families") {
  struct Case {
    CoxeterDiagram d;
    std::string    tag;
  };
  auto d4 = parse_diagram("generators: a b c d\na b 3\na c 3\na d 3\n");
  auto e6 = parse_diagram(
      "generators: a b c d e f\na b 3\nb c 3\nc d 3\nd e 3\nc f 3\n");
  auto e7 = parse_diagram(
      "generators: a b c d e f g\na b 3\nb c 3\nc d 3\nd e 3\ne f 3\nc g 3\n");
  auto e8 = parse_diagram("generators: a b c d e f g h\na b 3\nb c 3\nc d 3\n"
                          "d e 3\ne f 3\nf g 3\nc h 3\n");
  auto d5 = parse_diagram("generators: a b c d e\na b 3\nb c 3\nc d 3\nc e 3\n");
  std::vector<Case> cases{
      {path({3, 3, 3}), "A_4"},
      {path({4, 3, 3}), "B_4"},
      {path({3, 3, 4}), "B_4"},
      {path({3, 4, 3}), "F_4"},
      {path({5, 3}), "H_3"},
      {path({5, 3, 3}), "H_4"},
      {path({4}), "B_2"},
      {path({6}), "I_2(6)"},
      {path({5}), "I_2(5)"},
      {d4, "D_4"},
      {d5, "D_5"},
      {e6, "E_6"},
      {e7, "E_7"},
      {e8, "E_8"},
  };
  for (auto const& c : cases) {
    auto r = is_spherical(c.d, c.d.all());
    INFO(c.tag);
    REQUIRE(r.spherical);
    REQUIRE(r.families.size() == 1);
    CHECK(r.families[0].tag() == c.tag);
    CHECK(gram_positive_definite(c.d, c.d.all()));
  }
  // Infinite: H_5 pattern, B with inner 4 at rank 5, 4-4 path, star of degree 4,
  // E-type with long arms, label 6 at rank 3, cycle.
  std::vector<CoxeterDiagram> infinite{
      path({5, 3, 3, 3}),
      path({3, 4, 3, 3}),
      path({4, 3, 4}),
      path({6, 3}),
      path({3, 5, 3}),
      parse_diagram("generators: a b c d e\na b 3\na c 3\na d 3\na e 3\n"),
      parse_diagram(
          "generators: a b c d e f g\na b 3\nb c 3\nc d 3\nd e 3\nc f 3\nf g 3\n"),
      parse_diagram("generators: a b c d\na b 3\nb c 3\nc d 3\nd a 3\n"),
      parse_diagram("generators: a b c\na b inf\nb c 3\n"),
  };
  for (auto const& d : infinite) {
    INFO(serialize(d));
    CHECK_FALSE(is_spherical(d, d.all()).spherical);
    CHECK_FALSE(gram_positive_definite(d, d.all()));
  }
}

TEST_CASE("coxeter_order_bfs: family orders against formulas and the float "
          "oracle") {
  auto f4 = path({3, 4, 3});
  CHECK(exact(coxeter_order_bfs(f4, f4.all(), 2000)) == 1152);
  CHECK(std::holds_alternative<ExceededCap>(
      coxeter_order_bfs(f4, f4.all(), 1000)));
  CHECK(oracle::float_group_order(f4, 2000) == 1152u);

  auto a3 = path({3, 3});
  CHECK(exact(coxeter_order_bfs(a3, a3.all(), 10000)) == 24);

  auto b3 = path({4, 3});
  CHECK(exact(coxeter_order_bfs(b3, b3.all())) == 48);
  auto g2a1 = parse_diagram("generators: a b c\na b 6\n");
  CHECK(exact(coxeter_order_bfs(g2a1, g2a1.all())) == 24);
  auto d4 = parse_diagram("generators: a b c d\na b 3\na c 3\na d 3\n");
  CHECK(exact(coxeter_order_bfs(d4, d4.all())) == 192);
  auto e6 = parse_diagram(
      "generators: a b c d e f\na b 3\nb c 3\nc d 3\nd e 3\nc f 3\n");
  CHECK(exact(coxeter_order_bfs(e6, e6.all(), 60000)) == 51840);

  for (std::uint32_t m = 3; m <= 8; ++m) {
    auto d = path({m});
    CHECK(exact(coxeter_order_bfs(d, d.all())) == 2 * m);
  }
  auto inf2 = parse_diagram("generators: a b\na b inf\n");
  CHECK(std::holds_alternative<ExceededCap>(coxeter_order_bfs(inf2, inf2.all())));
  CHECK(std::holds_alternative<ExceededCap>(
      coxeter_order_bfs(path({7}), GenMask(3), 10)));
}

TEST_CASE("coxeter_order_bfs: unsupported labels at rank >= 3") {
  auto h3 = path({5, 3});
  CHECK_THROWS_AS(coxeter_order_bfs(h3, h3.all()), UnsupportedLabels);
  CHECK(oracle::float_group_order(h3, 1000) == 120u);
  CHECK(is_spherical(h3, h3.all()).coxeter_order == 120);
  // Rank 2 is always answered by formula.
  CHECK(exact(coxeter_order_bfs(h3, Subset{"a", "b"})) == 10);
}

TEST_CASE("longest elements") {
  auto a3 = path({3, 3});
  auto w  = longest_element(a3, a3.all());
  CHECK(w.reduced_word.size() == 6);
  CHECK_FALSE(w.central);
  CHECK(w.group_order == 24);

  auto b3 = path({4, 3});
  auto wb = longest_element(b3, b3.all());
  CHECK(wb.reduced_word.size() == 9);
  CHECK(wb.central);

  auto a2 = path({3});
  auto w2 = longest_element(a2, a2.all());
  CHECK(w2.reduced_word == std::vector<std::string>{"a", "b", "a"});
  CHECK_FALSE(w2.central);

  auto a1 = parse_diagram("generators: s\n");
  CHECK(longest_element(a1, a1.all()).reduced_word
        == std::vector<std::string>{"s"});
  CHECK(longest_element(a1, a1.all()).central);

  auto d4 = parse_diagram("generators: a b c d\na b 3\na c 3\na d 3\n");
  auto wd = longest_element(d4, d4.all());
  CHECK(wd.reduced_word.size() == 12);
  CHECK(wd.central);

  auto a1a1 = parse_diagram("generators: s t u\ns t 3\n");
  CHECK_FALSE(longest_element(a1a1, a1a1.all()).central);

  auto tri = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3\n");
  CHECK_THROWS_AS(longest_element(tri, tri.all(), 500), std::domain_error);
}

TEST_CASE("longest_element_game agrees with the orbit BFS") {
  auto e6 = parse_diagram(
      "generators: a b c d e f\na b 3\nb c 3\nc d 3\nd e 3\nc f 3\n");
  auto g6 = longest_element_game(e6, e6.all());
  CHECK(g6.reduced_word.size() == 36);
  CHECK_FALSE(g6.central);
  CHECK(g6.reduced_word.size() == longest_element(e6, e6.all(), 60000).reduced_word.size());

  auto tri = parse_diagram("generators: a b c\na b 3\nb c 3\na c 3\n");
  CHECK_THROWS_AS(longest_element_game(tri, tri.all()), std::domain_error);

  std::size_t finite = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& d : oracle::all_diagrams(n, {2, 3, 4, 6})) {
      if (!is_spherical(d)) {
        continue;
      }
      ++finite;
      auto bfs  = longest_element(d, d.all(), 20000);
      auto game = longest_element_game(d, d.all());
      CHECK(game.reduced_word.size() == bfs.reduced_word.size());
      CHECK(game.central == bfs.central);
    }
  }
  CHECK(finite > 100);
}

TEST_CASE("max_spherical: four-generator example agrees with exhaustive subset search") {
  auto report = max_spherical(kite);
  CHECK(report.value == 3);
  CHECK(report.witnesses
        == std::vector<Subset>{Subset{"a", "b", "c"}, Subset{"a", "c", "d"}});

  // Oracle: test all 16 subsets without pruning.
  std::size_t         best = 0;
  std::vector<Subset> found;
  for (auto const& t : oracle::all_subsets(kite)) {
    if (is_spherical(kite, t).spherical) {
      if (t.size() > best) {
        best = t.size();
        found.clear();
      }
      if (t.size() == best) {
        found.push_back(t);
      }
    }
  }
  std::sort(found.begin(), found.end());
  CHECK(best == report.value);
  CHECK(found == report.witnesses);
}

TEST_CASE("max_spherical: small cases") {
  auto inf2 = parse_diagram("generators: a b\na b inf\n");
  CHECK(max_spherical(inf2).value == 1);
  CHECK(max_spherical(inf2).witnesses
        == std::vector<Subset>{Subset{"a"}, Subset{"b"}});

  auto a3 = path({3, 3});
  CHECK(max_spherical(a3).value == 3);
  CHECK(max_spherical(a3).witnesses == std::vector<Subset>{a3.all()});

  CHECK(max_spherical(CoxeterDiagram()).value == 0);
  CHECK(max_spherical(CoxeterDiagram()).witnesses
        == std::vector<Subset>{Subset{}});
}

TEST_CASE("spherical_subsets: graded lexicographic order") {
  auto subsets = spherical_subsets(kite);
  CHECK(subsets.front() == Subset{});
  CHECK(std::is_sorted(subsets.begin(), subsets.end(), graded_less));
  // 1 + 4 + 6 + 2
  CHECK(subsets.size() == 13);
}

TEST_CASE("spherical_factors") {
  auto d = parse_diagram(
      "generators: a b x y z\na b 3\nx y 3\ny z 3\nx z 3\n");
  auto split = spherical_factors(d);
  CHECK(split.spherical == std::vector<Subset>{Subset{"a", "b"}});
  CHECK(split.infinite == std::vector<Subset>{Subset{"x", "y", "z"}});

  auto f = spherical_factors(kite);
  CHECK(f.spherical.empty());
  CHECK(f.infinite.size() == 1);

  auto e = spherical_factors(CoxeterDiagram());
  CHECK(e.spherical.empty());
  CHECK(e.infinite.empty());
}

TEST_CASE("finite-type table: only the dihedral family carries a label >= 7") {
  for (std::uint32_t m = 7; m <= 20; ++m) {
    CHECK(families_admitting_label(m) == std::vector<Family>{Family::I});
  }
  CHECK(families_admitting_label(5).size() == 2);  // H and I
}

TEST_CASE("property: hereditary and additive") {
  std::mt19937_64            rng(7);
  std::vector<std::uint32_t> alphabet{2, 2, 3, 3, 4, 5, 6, 0};
  for (int iter = 0; iter < 200; ++iter) {
    auto d = oracle::random_diagram(rng, 2 + iter % 5, alphabet, "p");
    // Hereditary: every subset of a spherical subset is spherical.
    for (auto mask : spherical_masks(d)) {
      for (GenMask sub = mask; sub != 0; sub = (sub - 1) & mask) {
        CHECK(is_spherical(d, sub));
      }
    }
    auto e = oracle::random_diagram(rng, 1 + iter % 4, alphabet, "q");
    CHECK(max_spherical(disjoint_union(d, e)).value
          == max_spherical(d).value + max_spherical(e).value);
  }
}

TEST_CASE("property: classification matches the exact BFS on rank <= 3") {
  std::vector<std::uint32_t> alphabet{2, 3, 4, 6, 0};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto const& d : oracle::all_diagrams(n, alphabet)) {
      auto r   = is_spherical(d, d.all());
      auto bfs = coxeter_order_bfs(d, d.all(), 1200);
      INFO(serialize(d));
      CHECK(r.spherical == std::holds_alternative<std::uint64_t>(bfs));
      if (r.spherical) {
        CHECK(*r.coxeter_order == std::get<std::uint64_t>(bfs));
      }
    }
  }
}
