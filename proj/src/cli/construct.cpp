#include <fstream>
#include <memory>

#include "commands.hpp"
#include "distcol/errors.hpp"

namespace distcol::cli {

namespace {

struct ConstructOptions {
  std::string name;
  ConstructionFlags flags;
  std::string out;
  std::string labels;
  Caps caps;
};

std::filesystem::path labels_path_for(const std::filesystem::path& graph_path) {
  std::filesystem::path p = graph_path;
  p.replace_extension(".labels.json");
  return p;
}

int run_construct(const ConstructOptions& o, Io io) {
  const Params params = o.flags.params_for(o.name);
  try {
    validate_construction(o.name, params, o.caps);
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  const Built built = build_construction(o.name, params, o.caps);

  const std::filesystem::path out = o.out.empty() ? construction_key(o.name, params) + ".col" : o.out;
  const std::filesystem::path labels = o.labels.empty() ? labels_path_for(out) : std::filesystem::path(o.labels);
  write_graph_file(out, built.graph);

  nlohmann::json sidecar = built.labels;
  sidecar["construction"] = o.name;
  sidecar["params"] = params;
  std::ofstream(labels) << sidecar.dump(1) << '\n';

  io.out << summary_line(built.graph) << '\n';
  io.out << "wrote " << out.string() << " and " << labels.string() << '\n';
  return kExitOk;
}

}  // namespace

void add_construct(CLI::App& app, Io io, int& exit_code) {
  auto opts = std::make_shared<ConstructOptions>();
  std::string names;
  for (const auto& c : constructions()) {
    names += "\n  " + c.name + ": " + c.description;
  }
  auto* sub = app.add_subcommand("construct", "Build a construction and write it as a .col file plus JSON labels" + names);
  sub->add_option("name", opts->name, "construction name")->required();
  opts->flags.add_to(*sub);
  sub->add_option("--out", opts->out, "graph file (.col, .json or .edges); default <key>.col");
  sub->add_option("--labels", opts->labels, "label sidecar path; default next to the graph file");
  add_cap_flags(*sub, opts->caps);
  sub->callback([opts, io, &exit_code] { exit_code = run_construct(*opts, io); });
}

}  // namespace distcol::cli
