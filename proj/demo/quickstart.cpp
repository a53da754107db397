// Minimal end-to-end tour of the library: generate a small mixed dataset,
// train a 6-neuron map, look at the neuron labels and the confusion matrix.
// Everything runs in-memory; see the CLI for the file-based workflow.

#include <cstdio>
#include <string>

#include "topomap/topomap.hpp"

int main() {
  using namespace topomap;

  // 20-node graphs keep this quick; the degree-3/4/5 regular families stay
  // feasible and the random family matches their mean degree of ~4.
  GenOptions opt;
  opt.nodes = 20;
  opt.counts = {20, 20, 20, 20, 20};
  opt.edge_probability = 4.0 / 19.0;
  opt.attach_per_node = 2;
  opt.seed = 7;
  const Dataset ds = generate_dataset(opt);
  std::printf("generated %zu signatures of dimension %d\n", ds.records.size(), ds.n);

  const auto& first = ds.records.front();
  std::printf("first pattern (%s): top eigenvalues %s %s %s ...\n",
              std::string(to_string(first.fine_label)).c_str(),
              format_double(first.signature[0]).c_str(),
              format_double(first.signature[1]).c_str(),
              format_double(first.signature[2]).c_str());

  TrainOptions topt;
  topt.epochs = 400;
  topt.neurons = 6;
  topt.seed = 7;
  const TrainOutput trained = train_on_dataset(ds, topt);
  std::printf("quantization error: %s -> %s\n", format_double(trained.initial_qe).c_str(),
              format_double(trained.model.meta.final_qe).c_str());

  for (int j = 0; j < trained.model.som.neuron_count(); ++j) {
    const auto [q, r] = trained.model.som.lattice.coords[static_cast<std::size_t>(j)];
    const auto& label = trained.model.neuron_labels[static_cast<std::size_t>(j)];
    const std::string name =
        label ? std::string(class_name(trained.model.space, *label)) : std::string("-");
    std::printf("neuron %d at (%d,%d): %s\n", j, q, r, name.c_str());
  }

  const EvalReport report = evaluate_dataset(trained.model, ds, LabelSpace::kMacro);
  std::printf("macro purity on the training set: %s\n",
              format_double(report.eval.purity).c_str());

  // Classify a fresh graph the map has never seen.
  const Graph fresh = gen_regular(opt.nodes, 5, 12345);
  const ClassifyOutcome outcome = classify_graph(trained.model, fresh, LabelSpace::kMacro);
  std::printf("unseen 5-regular graph -> %s (neuron %d)\n", outcome.label.c_str(),
              outcome.neuron);
  return 0;
}
