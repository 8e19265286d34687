#include <memory>

#include "commands.hpp"

namespace distcol::cli {

void add_convert(CLI::App& app, Io io, int& exit_code) {
  auto input = std::make_shared<std::string>();
  auto output = std::make_shared<std::string>();
  auto* sub = app.add_subcommand("convert", "Convert a graph between .col, .json and .edges by file extension");
  sub->add_option("input", *input, "input graph file")->required()->check(CLI::ExistingFile);
  sub->add_option("output", *output, "output graph file")->required();
  sub->callback([input, output, io, &exit_code] {
    const Graph g = read_graph_file(*input);
    write_graph_file(*output, g);
    io.out << summary_line(g) << '\n';
    exit_code = kExitOk;
  });
}

}  // namespace distcol::cli
