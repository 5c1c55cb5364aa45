// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "artin/certify.hpp"
#include "artin/report.hpp"
#include "artin/spherical.hpp"
#include "artin/surface.hpp"
#include "oracles.hpp"

using namespace artin;

namespace {
  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  std::string fixed(double x, int digits = 2) {
    std::ostringstream out;
    out.precision(digits);
    out << std::fixed << x;
    return out.str();
  }

  struct Outcome {
    bool        passed;
    std::string detail;
  };

  struct Run {
    int         code;
    std::string out;
  };

  Run run_cli(std::string const& args) {
    std::string cmd = std::string(ARTIN_CLI) + " " + args + " 2>&1";
    FILE*       p   = popen(cmd.c_str(), "r");
    if (p == nullptr) {
      return {-1, ""};
    }
    std::string            out;
    std::array<char, 4096> buf{};
    while (auto n = fread(buf.data(), 1, buf.size(), p)) {
      out.append(buf.data(), n);
    }
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
  }

  std::string data(char const* name) {
    return std::string(ARTIN_DATA_DIR) + "/" + name;
  }

  std::optional<std::uint64_t> exact(BfsOrder const& o) {
    if (auto const* n = std::get_if<std::uint64_t>(&o)) {
      return *n;
    }
    return std::nullopt;
  }

  // Rank 1 to 6 with labels {2,3}; the rank cycles so every size appears.
  CoxeterDiagram small_type_sample(std::mt19937_64& rng, std::size_t i,
                                   std::size_t max_rank) {
    return oracle::random_diagram(rng, 1 + i % max_rank, {2, 3});
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome oracle_equivalence() {
    auto const  t0 = Clock::now();
    std::size_t exhaustive = 0, sampled = 0, disagreements = 0;
    auto        compare    = [&](CoxeterDiagram const& d, std::uint64_t cap) {
      auto r   = is_spherical(d, d.all());
      auto bfs = coxeter_order_bfs(d, d.all(), cap);
      bool ok  = r.spherical == exact(bfs).has_value()
                && (!r.spherical || *r.coxeter_order == *exact(bfs));
      disagreements += !ok;
    };
    std::vector<std::uint32_t> const alphabet{2, 3, 4, 6, 0};
    for (std::size_t n = 0; n <= 3; ++n) {
      for (auto const& d : oracle::all_diagrams(n, alphabet)) {
        compare(d, 1200);
        ++exhaustive;
      }
    }
    // Cap above |W(E_6)| = 51840, which does occur among rank-6 samples.
    std::mt19937_64 rng(1);
    for (std::size_t i = 0; i < 1000; ++i) {
      compare(oracle::random_diagram(rng, 4 + i % 3, alphabet), 60000);
      ++sampled;
    }
    auto secs = seconds_since(t0);
    return {disagreements == 0 && secs < 120,
            std::to_string(exhaustive) + " exhaustive (rank <= 3) + " + std::to_string(sampled)
                + " sampled (rank 4-6), " + std::to_string(disagreements)
                + " disagreements, " + fixed(secs) + " s"};
  }

  Outcome family_orders() {
    std::vector<std::pair<std::string, bool>> results;
    auto a3 = parse_diagram("generators: a b c\na b 3\nb c 3\n");
    auto f4 = parse_diagram("generators: a b c d\na b 3\nb c 4\nc d 3\n");
    results.emplace_back("A_3=24", exact(coxeter_order_bfs(a3, a3.all())) == 24u);
    results.emplace_back("F_4=1152",
                         exact(coxeter_order_bfs(f4, f4.all(), 2000)) == 1152u);
    for (std::uint32_t m = 3; m <= 8; ++m) {
      CoxeterDiagram d({"s", "t"});
      d.set_label("s", "t", Label::finite(m));
      results.emplace_back("I_2(" + std::to_string(m) + ")=" + std::to_string(2 * m),
                           exact(coxeter_order_bfs(d, d.all())) == 2u * m);
    }
    bool        all = true;
    std::string detail;
    for (auto const& [name, ok] : results) {
      all = all && ok;
      detail += (detail.empty() ? "" : " ") + name + (ok ? "" : "(wrong)");
    }
    return {all, detail};
  }

  CoxeterDiagram load_kite() {
    FILE* f = std::fopen(data("kite.txt").c_str(), "r");
    std::string text;
    if (f != nullptr) {
      std::array<char, 4096> buf{};
      while (auto n = std::fread(buf.data(), 1, buf.size(), f)) {
        text.append(buf.data(), n);
      }
      std::fclose(f);
    }
    return parse_diagram(text);
  }

  Outcome kite_certificate() {
    auto const t0   = Clock::now();
    auto       kite = load_kite();
    auto       cd   = max_spherical(kite).value;
    bool       no_factor = spherical_factors(kite).spherical.empty();
    auto       r         = run_cli("certify " + data("kite.txt") + " --assume-kpi1 --format json");
    bool       root_ok = false, replayed = false;
    if (r.code == 0) {
      auto tr  = trace_from_json(Json::parse(r.out));
      root_ok  = tr.root.rule == Rule::free_of_infinity_base;
      replayed = replay(tr);
    }
    auto secs = seconds_since(t0);
    return {cd == 3 && no_factor && r.code == 0 && root_ok && replayed && secs < 1,
            "spherical dimension " + std::to_string(cd) + ", "
                + (no_factor ? "no spherical factor" : "has a spherical factor")
                + ", certify exit " + std::to_string(r.code) + ", root "
                + (root_ok ? "FreeOfInfinityBase" : "other") + ", replay "
                + (replayed ? "true" : "false") + ", " + fixed(secs, 3) + " s"};
  }

  Outcome free_group_chain() {
    auto free2 = parse_diagram("generators: v w\nv w inf\n");
    auto res   = certify_trivial_center(free2, false);
    if (!std::holds_alternative<ProofTrace>(res)) {
      return {false, "refused"};
    }
    auto const& tr = std::get<ProofTrace>(res);
    // Root rule, then the label-7 step closed by the dihedral detection.
    std::string path = to_string(tr.root.rule);
    bool        reached = false;
    std::function<void(TraceNode const&)> walk = [&](TraceNode const& n) {
      for (auto const& c : n.children) {
        if (n.rule == Rule::label_seven_quotient && c.rule == Rule::free_group_base) {
          bool dihedral = std::any_of(n.premises.begin(), n.premises.end(), [](auto const& p) {
            return p.check == "quotient_dihedral" && p.ok;
          });
          reached = reached || dihedral;
        }
        walk(c);
      }
    };
    walk(tr.root);
    for (auto const* n = &tr.root; !n->children.empty(); n = &n->children.back()) {
      path += " -> " + to_string(n->children.back().rule);
    }
    bool root_ok = tr.root.rule == Rule::amalgam_split || tr.root.rule == Rule::spherical_peel;
    bool replayed = replay(tr);
    return {root_ok && reached && replayed,
            path + ", replay " + (replayed ? "true" : "false")};
  }

  Outcome surface_suite() {
    auto const  t0 = Clock::now();
    std::size_t diagrams = 0, checks = 0, failures = 0;
    auto        one = [&](CoxeterDiagram const& d) {
      auto suite = run_surface_suite(d);
      ++diagrams;
      for (auto const& c : suite.checks) {
        ++checks;
        failures += !c.passed;
      }
      // |<gamma_s, gamma_t>| = [m_st = 3], computed here from the walks.
      CurveSystem cs(d);
      for (std::size_t s = 0; s < d.rank(); ++s) {
        for (std::size_t t = s + 1; t < d.rank(); ++t) {
          auto x = std::llabs(cs.intersection(cs.core(s), cs.core(t)));
          ++checks;
          failures += x != (d.label(s, t) == Label::finite(3) ? 1 : 0);
        }
      }
    };
    for (std::size_t n = 1; n <= 4; ++n) {
      for (auto const& d : oracle::all_diagrams(n, {2, 3})) {
        one(d);
      }
    }
    std::mt19937_64 rng(5);
    for (std::size_t i = 0; i < 100; ++i) {
      one(small_type_sample(rng, i, 6));
    }
    auto secs = seconds_since(t0);
    return {failures == 0 && secs < 120,
            std::to_string(diagrams) + " diagrams, " + std::to_string(checks) + " checks, "
                + std::to_string(failures) + " failures, " + fixed(secs) + " s"};
  }

  Outcome center_multitwists() {
    auto a2 = parse_diagram("generators: s t\ns t 3\n");
    CurveSystem cs2(a2);
    auto        st6 = word_h1(cs2, {"s", "t", "s", "t", "s", "t", "s", "t", "s", "t", "s", "t"});
    auto        g   = gamma_T(cs2, a2.all());
    bool        null_homologous = std::all_of(g.components.begin(), g.components.end(),
                                              [](auto const& c) {
                                         return std::all_of(c.h1.begin(), c.h1.end(),
                                                            [](auto x) { return x == 0; });
                                       });
    auto fit_a2 = fit_boundary_multitwist(cs2, g, st6);
    bool a2_ok  = st6.is_identity() && null_homologous && fit_a2.matches;

    std::mt19937_64 rng(6);
    std::size_t     instances = 0, square_fit = 0, fourth_fit = 0, both = 0, mismatched = 0;
    for (std::size_t i = 0; i < 50; ++i) {
      auto        d = small_type_sample(rng, i, 5);
      CurveSystem cs(d);
      for (auto const& t : irreducible_spherical_subsets(d)) {
        if (t.size() > 3) {
          continue;
        }
        auto c = check_center(cs, t);
        ++instances;
        square_fit += c.square.matches;
        fourth_fit += c.fourth.matches;
        both += c.square.matches && c.fourth.matches;
        // The fitted exponents are verified exactly inside the fit.
        mismatched += !c.square.matches;
      }
    }
    return {a2_ok && mismatched == 0 && instances > 0,
            std::string("A_2: (st)^6 ") + (st6.is_identity() ? "= I" : "!= I")
                + ", Gamma null-homologous " + (null_homologous ? "yes" : "no") + "; "
                + std::to_string(instances) + " (T, ambient) instances: z^2 fits "
                + std::to_string(square_fit) + ", z^4 fits " + std::to_string(fourth_fit)
                + ", both " + std::to_string(both)};
  }

  Outcome induction_totality() {
    auto const  t0 = Clock::now();
    std::size_t certified = 0, failures = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
      for (auto const& d : oracle::all_diagrams(n, {2, 3, 0})) {
        if (!spherical_factors(d).spherical.empty()) {
          continue;
        }
        try {
          auto r = certify_trivial_center(d, true);
          auto const* tr = std::get_if<ProofTrace>(&r);
          failures += tr == nullptr || !replay(*tr);
          certified += tr != nullptr;
        } catch (VerificationFailure const&) {
          ++failures;
        }
      }
    }
    auto secs = seconds_since(t0);
    return {failures == 0 && certified > 0 && secs < 300,
            std::to_string(certified) + " diagrams without spherical factors certified and "
                                        "replayed, " + std::to_string(failures)
                + " failures, " + fixed(secs) + " s"};
  }

  Outcome additivity() {
    std::mt19937_64             rng(8);
    std::vector<std::uint32_t> const alphabet{2, 3, 4, 6, 0};
    std::size_t                 cd_bad = 0, center_bad = 0;
    for (std::size_t i = 0; i < 500; ++i) {
      auto x = oracle::random_diagram(rng, 1 + i % 3, alphabet, "x");
      auto y = oracle::random_diagram(rng, 1 + (i / 3) % 3, alphabet, "y");
      auto u = disjoint_union(x, y);
      cd_bad += max_spherical(u).value != max_spherical(x).value + max_spherical(y).value;
      center_bad += center_of(u, true).rank != center_of(x, true).rank + center_of(y, true).rank;
    }
    return {cd_bad == 0 && center_bad == 0,
            "500 pairs: spherical dimension violations " + std::to_string(cd_bad)
                + ", center rank violations " + std::to_string(center_bad)};
  }

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      {"oracle equivalence", oracle_equivalence},
      {"family orders", family_orders},
      {"four-generator certificate", kite_certificate},
      {"free-group chain", free_group_chain},
      {"surface suite", surface_suite},
      {"z_T multitwists", center_multitwists},
      {"induction totality", induction_totality},
      {"additivity", additivity},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
