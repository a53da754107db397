#include <array>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "topomap/topomap.hpp"

namespace {

using topomap::LabelSpace;

LabelSpace parse_space_or_throw(const std::string& s) {
  const auto space = topomap::parse_label_space(s);
  if (!space) throw topomap::PreconditionError("label space must be MACRO or FINE, got '" + s + "'");
  return *space;
}

int cmd_gen(std::uint64_t seed, int nodes, const std::vector<int>& counts, double p, int m,
            const std::string& out) {
  topomap::GenOptions opt;
  opt.seed = seed;
  opt.nodes = nodes;
  opt.edge_probability = p;
  opt.attach_per_node = m;
  if (!counts.empty()) {
    if (counts.size() != topomap::kFineClassCount)
      throw topomap::PreconditionError("--counts needs exactly 5 comma-separated values");
    for (int k = 0; k < topomap::kFineClassCount; ++k)
      opt.counts[static_cast<std::size_t>(k)] = counts[static_cast<std::size_t>(k)];
  }
  const auto summary = topomap::run_gen(opt, out);
  std::printf("wrote %d patterns to %s\n", summary.total, out.c_str());
  std::printf("connected per class:");
  for (int k = 0; k < topomap::kFineClassCount; ++k)
    std::printf(" %s %d/%d", std::string(topomap::to_string(static_cast<topomap::FineLabel>(k))).c_str(),
                summary.connected[static_cast<std::size_t>(k)],
                summary.generated[static_cast<std::size_t>(k)]);
  std::printf("\n");
  return 0;
}

int cmd_train(const std::string& data, const std::string& out,
              const std::optional<std::string>& qe_log, int epochs, int neurons,
              std::uint64_t seed) {
  topomap::TrainOptions opt;
  opt.epochs = epochs;
  opt.neurons = neurons;
  opt.seed = seed;
  std::optional<std::filesystem::path> qe_path;
  if (qe_log) qe_path = *qe_log;
  const auto result = topomap::run_train(data, out, opt, qe_path);
  std::printf("trained %d neurons for %d epochs (seed %llu)\n", neurons, epochs,
              static_cast<unsigned long long>(seed));
  std::printf("quantization error: initial %s, final %s\n",
              topomap::format_double(result.initial_qe).c_str(),
              topomap::format_double(result.model.meta.final_qe).c_str());
  std::printf("wrote model to %s\n", out.c_str());
  return 0;
}

int cmd_eval(const std::string& model, const std::string& data, const std::string& space_name,
             const std::optional<std::string>& out) {
  const LabelSpace space = parse_space_or_throw(space_name);
  std::optional<std::filesystem::path> confusion_path;
  if (out) confusion_path = *out;
  std::string rendered;
  topomap::run_eval(model, data, space, confusion_path, &rendered);
  std::fputs(rendered.c_str(), stdout);
  return 0;
}

int cmd_classify(const std::optional<std::string>& model, const std::string& graph,
                 const std::string& space_name, bool spectrum_only) {
  if (spectrum_only) {
    const auto g = topomap::read_graph_file(graph);
    const auto sig = topomap::signature_of(g);
    std::string line;
    for (std::size_t i = 0; i < sig.values.size(); ++i) {
      if (i) line += ' ';
      line += topomap::format_double(sig.values[i]);
    }
    std::printf("%s\n", line.c_str());
    return 0;
  }
  if (!model)
    throw topomap::PreconditionError("--model is required unless --spectrum-only is given");
  const LabelSpace space = parse_space_or_throw(space_name);
  const auto outcome = topomap::run_classify(*model, graph, space);
  std::printf("%s\n", outcome.label.c_str());
  return 0;
}

int cmd_project(const std::string& model, const std::string& data, const std::string& out,
                const std::optional<std::string>& svg) {
  std::optional<std::filesystem::path> svg_path;
  if (svg) svg_path = *svg;
  const auto records = topomap::run_project(model, data, out, svg_path);
  std::printf("wrote %zu projection records to %s\n", records.size(), out.c_str());
  if (svg) std::printf("wrote plot to %s\n", svg->c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph topology recognition: spectra in, self-organizing map out"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "generate a labeled signature dataset");
  std::uint64_t gen_seed = 0;
  int gen_nodes = 56;
  std::vector<int> gen_counts;
  double gen_p = 4.0 / 55.0;
  int gen_m = 2;
  std::string gen_out;
  gen->add_option("--seed", gen_seed, "master seed");
  gen->add_option("--nodes", gen_nodes, "nodes per graph")->check(CLI::PositiveNumber);
  gen->add_option("--counts", gen_counts,
                  "patterns per class as REG3,REG4,REG5,RANDOM,SCALEFREE (default "
                  "100,100,100,300,300)")
      ->delimiter(',');
  gen->add_option("--p", gen_p, "edge probability for the random family");
  gen->add_option("--m", gen_m, "edges per new node for the scale-free family")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", gen_out, "output dataset CSV")->required();

  // train
  auto* train = app.add_subcommand("train", "train and label a map on a dataset");
  std::string train_data;
  std::string train_out;
  std::string train_qe;
  int train_epochs = 2000;
  int train_neurons = 6;
  std::uint64_t train_seed = 0;
  train->add_option("--data", train_data, "input dataset CSV")->required();
  train->add_option("--out", train_out, "output model file")->required();
  train->add_option("--qe-log", train_qe, "optional per-epoch quantization error CSV");
  train->add_option("--epochs", train_epochs, "training epochs")->check(CLI::PositiveNumber);
  train->add_option("--neurons", train_neurons, "number of map neurons")
      ->check(CLI::PositiveNumber);
  train->add_option("--seed", train_seed, "training seed (init jitter + shuffles)");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a model against a labeled dataset");
  std::string eval_model;
  std::string eval_data;
  std::string eval_space = "MACRO";
  std::string eval_out;
  eval->add_option("--model", eval_model, "model file")->required();
  eval->add_option("--data", eval_data, "dataset CSV")->required();
  eval->add_option("--space", eval_space, "label space: MACRO or FINE");
  eval->add_option("--out", eval_out, "optional confusion matrix CSV");

  // classify
  auto* classify = app.add_subcommand("classify", "classify one graph file");
  std::string classify_model;
  std::string classify_graph;
  std::string classify_space = "MACRO";
  bool spectrum_only = false;
  classify->add_option("--model", classify_model, "model file");
  classify->add_option("--graph", classify_graph, "graph edge-list file")->required();
  classify->add_option("--space", classify_space, "label space: MACRO or FINE");
  classify->add_flag("--spectrum-only", spectrum_only,
                     "print the sorted eigenvalue signature and stop (no model needed)");

  // project
  auto* project = app.add_subcommand("project", "project dataset and neurons to 2-D");
  std::string project_model;
  std::string project_data;
  std::string project_out;
  std::string project_svg;
  project->add_option("--model", project_model, "model file")->required();
  project->add_option("--data", project_data, "dataset CSV")->required();
  project->add_option("--out", project_out, "output projection CSV")->required();
  project->add_option("--svg", project_svg, "optional SVG scatter plot");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exits 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_seed, gen_nodes, gen_counts, gen_p, gen_m, gen_out);
    if (train->parsed())
      return cmd_train(train_data, train_out,
                       train_qe.empty() ? std::nullopt : std::optional<std::string>(train_qe),
                       train_epochs, train_neurons, train_seed);
    if (eval->parsed())
      return cmd_eval(eval_model, eval_data, eval_space,
                      eval_out.empty() ? std::nullopt : std::optional<std::string>(eval_out));
    if (classify->parsed())
      return cmd_classify(
          classify_model.empty() ? std::nullopt : std::optional<std::string>(classify_model),
          classify_graph, classify_space, spectrum_only);
    if (project->parsed())
      return cmd_project(project_model, project_data, project_out,
                         project_svg.empty() ? std::nullopt : std::optional<std::string>(project_svg));
  } catch (const topomap::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return static_cast<int>(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 1;
}
