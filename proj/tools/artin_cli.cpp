// artin: analyze|certify|surface|oracle <file> [--assume-kpi1]
//        [--format text|json] [--cap N] [--seed N]
//
// Exit codes: 0 ok, 1 input or configuration error, 2 refusal,
// 3 verification failure.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "artin/certify.hpp"
#include "artin/report.hpp"
#include "artin/spherical.hpp"
#include "artin/surface.hpp"

namespace {
  enum Exit { ok = 0, input_error = 1, refusal = 2, verification_failure = 3 };

  struct Config {
    std::string   command;
    std::string   path;
    bool          assume_kpi1 = false;
    std::string   format      = "text";
    std::uint64_t cap         = artin::default_bfs_cap;
    std::uint64_t seed        = 0;
  };

  std::uint64_t env_cap() {
    if (char const* v = std::getenv("ARTIN_BFS_CAP")) {
      try {
        auto cap = std::stoull(v);
        if (cap >= 2) {
          return cap;
        }
      } catch (std::exception const&) {
      }
      throw CLI::ValidationError("ARTIN_BFS_CAP", std::string("not an integer >= 2: ") + v);
    }
    return artin::default_bfs_cap;
  }

  artin::CoxeterDiagram load(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw artin::DiagramError("cannot read " + path);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return artin::parse_diagram(buf.str());
  }

  void emit(Config const& cfg, artin::Json const& json, std::string const& text) {
    if (cfg.format == "json") {
      std::cout << json.dump(2) << "\n";
    } else {
      std::cout << text;
    }
  }

  int run(Config const& cfg) {
    auto d = load(cfg.path);
    if (cfg.command == "analyze") {
      auto r = artin::analyze(d, cfg.assume_kpi1);
      emit(cfg, artin::to_json(r), artin::render_text(r));
      return ok;
    }
    if (cfg.command == "oracle") {
      auto r = artin::order_oracle(d, cfg.cap);
      emit(cfg, artin::to_json(r), artin::render_text(r));
      return ok;
    }
    if (cfg.command == "surface") {
      auto s = artin::run_surface_suite(d);
      emit(cfg, artin::to_json(s), artin::render_text(s));
      return s.passed() ? ok : verification_failure;
    }
    try {
      auto result = artin::certify_trivial_center(d, cfg.assume_kpi1);
      if (auto const* r = std::get_if<artin::Refusal>(&result)) {
        emit(cfg, artin::to_json(*r), artin::render_text(*r));
        return refusal;
      }
      auto const& trace = std::get<artin::ProofTrace>(result);
      std::string why;
      if (!artin::replay(trace, &why)) {
        std::cerr << "replay failed: " << why << "\n";
        return verification_failure;
      }
      emit(cfg, artin::to_json(trace), artin::render_text(trace));
      return ok;
    } catch (artin::VerificationFailure const& e) {
      std::cerr << "verification failure: " << e.what() << "\n";
      return verification_failure;
    }
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin group diagrams: spherical analysis, surface model checks "
               "and trivial-center certificates"};
  Config cfg;
  try {
    cfg.cap = env_cap();
  } catch (CLI::Error const& e) {
    std::cerr << e.what() << "\n";
    return input_error;
  }
  app.add_option("command", cfg.command, "analyze, certify, surface or oracle")
      ->required()
      ->check(CLI::IsMember({"analyze", "certify", "surface", "oracle"}));
  app.add_option("file", cfg.path, "diagram file")->required();
  app.add_flag("--assume-kpi1", cfg.assume_kpi1,
               "assume the K(pi,1) conjecture when no known class applies");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", cfg.cap, "element cap for the order oracle (default "
                                   "ARTIN_BFS_CAP or 20000)")
      ->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
  app.add_option("--seed", cfg.seed, "seed for sampled suites (current commands are "
                                     "deterministic and ignore it)");
  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return input_error;
  }

  try {
    return run(cfg);
  } catch (artin::DiagramError const& e) {
    std::cerr << "input error: " << e.what() << "\n";
  } catch (artin::NotSmallType const& e) {
    std::cerr << "NotSmallType: " << e.what() << "\n";
  } catch (artin::UnsupportedLabels const& e) {
    std::cerr << "UnsupportedLabels: " << e.what() << "\n";
  }
  return input_error;
}
