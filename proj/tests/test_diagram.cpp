#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artin/diagram.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {
  char const* const kite_text = R"(generators: a b c d
a b 3
b c 3
c d 3
d a 3
b d 3
)";
}

TEST_CASE("parse_diagram: four-generator file defaults unlisted pairs to 2") {
  auto d = parse_diagram(kite_text);
  CHECK(d.rank() == 4);
  CHECK(d.label("a", "c") == Label::finite(2));
  CHECK(d.label("c", "a") == Label::finite(2));
  CHECK(d.label("d", "a") == Label::finite(3));
  CHECK(d.label("b", "d") == Label::finite(3));
  CHECK(d.generators() == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("parse_diagram: single generator, comments and blank lines") {
  auto d = parse_diagram("# header\n\ngenerators: s   # one\n\n");
  CHECK(d.rank() == 1);
  CHECK(d.generators().front() == "s");
}

TEST_CASE("parse_diagram: default inf header") {
  auto d = parse_diagram("generators: a b c\ndefault: inf\na b 2\n");
  CHECK(d.label("a", "b") == Label::finite(2));
  CHECK(d.label("a", "c").is_infinite());
  CHECK(d.label("b", "c").is_infinite());
}

TEST_CASE("parse_diagram: errors") {
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b 1\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b 0\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b x\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b 3.5\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b -3\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a a\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na c 3\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b 3\nb a 4\n"),
                  DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na a 3\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\na b\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators:\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram(""), DiagramError);
  CHECK_THROWS_AS(parse_diagram("a b 3\n"), DiagramError);
  CHECK_THROWS_AS(parse_diagram("generators: a b\ndefault: 3\n"), DiagramError);
  // Repeating an identical label is not a conflict.
  CHECK_NOTHROW(parse_diagram("generators: a b\na b 3\nb a 3\n"));
}

TEST_CASE("induced subdiagrams") {
  auto d   = parse_diagram(kite_text);
  auto abc = induced(d, Subset{"a", "b", "c"});
  CHECK(abc.generators() == std::vector<std::string>{"a", "b", "c"});
  CHECK(abc.label("a", "b") == Label::finite(3));
  CHECK(abc.label("b", "c") == Label::finite(3));
  CHECK(abc.label("a", "c") == Label::finite(2));

  CHECK(induced(d, d.all()) == d);
  CHECK(induced(d, Subset{}).rank() == 0);
  CHECK_THROWS_AS(induced(d, Subset{"a", "z"}), DiagramError);
}

TEST_CASE("components") {
  auto d = parse_diagram(kite_text);
  CHECK(components(d) == std::vector<Subset>{Subset{"a", "b", "c", "d"}});

  auto none = parse_diagram("generators: c a b\n");
  CHECK(components(none)
        == std::vector<Subset>{Subset{"a"}, Subset{"b"}, Subset{"c"}});

  auto ab = parse_diagram("generators: a b c\na b 3\n");
  CHECK(components(ab) == std::vector<Subset>{Subset{"a", "b"}, Subset{"c"}});

  auto inf = parse_diagram("generators: x y\nx y inf\n");
  CHECK(components(inf).size() == 1);
}

TEST_CASE("small type and free of infinity") {
  auto d = parse_diagram(kite_text);
  CHECK(is_small_type(d));
  CHECK(is_free_of_infinity(d));

  auto inf = parse_diagram("generators: x y\nx y inf\n");
  CHECK_FALSE(is_free_of_infinity(inf));
  CHECK_FALSE(is_small_type(inf));

  auto one = parse_diagram("generators: s\n");
  CHECK(is_small_type(one));
  CHECK(is_free_of_infinity(one));

  CHECK_FALSE(is_small_type(parse_diagram("generators: a b\na b 4\n")));
}

TEST_CASE("Subset ordering and set algebra") {
  Subset a{"c", "a", "b", "a"};
  CHECK(a.names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(a.to_string() == "{a,b,c}");
  CHECK(Subset{"a", "b"}.is_subset_of(a));
  CHECK(a.without(Subset{"b"}) == Subset{"a", "c"});
  CHECK(graded_less(Subset{"z"}, Subset{"a", "b"}));
  CHECK(graded_less(Subset{"a", "b", "c"}, Subset{"a", "c", "d"}));
}

TEST_CASE("property: serialize round-trips, induced is functorial, "
          "components refine") {
  std::mt19937_64 rng(20260101);
  std::vector<std::uint32_t> alphabet{2, 2, 3, 4, 5, 6, 7, 0};
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t n = 1 + iter % 7;
    auto        d = oracle::random_diagram(rng, n, alphabet, "x");
    CHECK(parse_diagram(serialize(d)) == d);

    std::uniform_int_distribution<GenMask> pick(0, d.full_mask());
    GenMask t  = pick(rng);
    GenMask t2 = t & pick(rng);
    auto    dt = induced(d, t);
    CHECK(induced(dt, d.subset_of(t2)) == induced(d, t2));

    // Every component of the induced diagram sits inside one component of d.
    auto big = components(d);
    for (auto const& c : components(dt)) {
      int hits = 0;
      for (auto const& b : big) {
        hits += c.is_subset_of(b) ? 1 : 0;
      }
      CHECK(hits == 1);
    }
  }
}
