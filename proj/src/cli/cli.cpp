#include "distcol/cli.hpp"

#include <ostream>

#include "commands.hpp"
#include "distcol/errors.hpp"
#include "distcol/serialize.hpp"

namespace distcol {

namespace cli {

void ConstructionFlags::add_to(CLI::App& app) {
  app.add_option("--d", d, "degree parameter d");
  app.add_option("--t", t, "distance parameter t");
  app.add_option("--q", q, "prime field order q");
  app.add_option("--n", n, "size parameter n");
  app.add_option("--m", m, "size parameter m");
}

Params ConstructionFlags::params_for(const std::string& construction) const {
  Params p;
  std::vector<std::string> wanted;
  for (const auto& c : constructions()) {
    if (c.name == construction) {
      wanted = c.params;
    }
  }
  const std::pair<const char*, const std::optional<int>*> flags[] = {{"d", &d}, {"t", &t}, {"q", &q}, {"n", &n}, {"m", &m}};
  for (const auto& [name, value] : flags) {
    const bool takes = std::find(wanted.begin(), wanted.end(), name) != wanted.end();
    if (value->has_value() && (takes || std::string(name) != "t")) {
      p[name] = **value;
    }
  }
  return p;
}

void add_cap_flags(CLI::App& app, Caps& caps) {
  app.add_option("--max-vertices", caps.size.max_vertices, "vertex cap for constructions")->capture_default_str();
  app.add_option("--max-edges", caps.size.max_edges, "edge cap for constructions")->capture_default_str();
  app.add_option("--exact-limit", caps.exact_limit, "largest derived graph handed to the exact solver")
      ->capture_default_str();
  app.add_option("--cycle-cap", caps.cycle_cap, "longest cycle length searched")->capture_default_str();
}

}  // namespace cli

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance colouring constructions and measurements", "distcol"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("distcol ") + kVersion);

  int exit_code = cli::kExitOk;
  const cli::Io io{out, err};
  cli::add_construct(app, io, exit_code);
  cli::add_verify(app, io, exit_code);
  cli::add_measure(app, io, exit_code);
  cli::add_sweep(app, io, exit_code);
  cli::add_convert(app, io, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return cli::kExitUsage;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return cli::kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return cli::kExitFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return cli::kExitFailed;
  }
  return exit_code;
}

}  // namespace distcol
