#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topomap/classify.hpp"
#include "topomap/dataset.hpp"
#include "topomap/errors.hpp"
#include "topomap/generators.hpp"
#include "topomap/graph_io.hpp"
#include "topomap/model_io.hpp"
#include "topomap/pca.hpp"
#include "topomap/spectral.hpp"

namespace topomap {

// ---------------------------------------------------------------------------
// gen: graphs -> signatures -> dataset CSV

// Default experiment geometry: 56-node graphs, 900 patterns split
// 100/100/100 across regular degrees 3/4/5, 300 random at p = 4/55 (expected
// degree ~4), 300 scale-free with 2 edges per new node.
struct GenOptions {
  int nodes = 56;
  std::array<int, kFineClassCount> counts{100, 100, 100, 300, 300};
  double edge_probability = 4.0 / 55.0;
  int attach_per_node = 2;
  std::uint64_t seed = 0;
};

struct GenSummary {
  int total = 0;
  std::array<int, kFineClassCount> generated{};
  std::array<int, kFineClassCount> connected{};  // informational; never enforced
};

namespace detail {

inline Graph generate_pattern(const GenOptions& opt, FineLabel label, std::uint64_t pattern_seed,
                              std::string* params) {
  switch (label) {
    case FineLabel::kReg3:
    case FineLabel::kReg4:
    case FineLabel::kReg5: {
      const int r = 3 + static_cast<int>(label);
      if (params) *params = "regular r=" + std::to_string(r);
      return gen_regular(opt.nodes, r, pattern_seed);
    }
    case FineLabel::kRandom:
      if (params) *params = "random p=" + format_double(opt.edge_probability);
      return gen_random(opt.nodes, opt.edge_probability, pattern_seed);
    case FineLabel::kScaleFree:
    default:
      if (params) *params = "scalefree m=" + std::to_string(opt.attach_per_node);
      return gen_scale_free(opt.nodes, opt.attach_per_node, pattern_seed);
  }
}

}  // namespace detail

// Each pattern draws from its own stream, subseed(seed, pattern_id), so the
// dataset is reproducible record by record regardless of generation order.
inline Dataset generate_dataset(const GenOptions& opt, GenSummary* summary = nullptr) {
  if (opt.nodes < 1) throw PreconditionError("node count must be >= 1");
  long long total = 0;
  for (int c : opt.counts) {
    if (c < 0) throw PreconditionError("pattern counts must be >= 0");
    total += c;
  }
  if (total < 1) throw PreconditionError("at least one pattern must be requested");

  Dataset ds;
  ds.n = opt.nodes;
  ds.records.reserve(static_cast<std::size_t>(total));
  GenSummary sum;
  int pattern_id = 0;
  for (int k = 0; k < kFineClassCount; ++k) {
    const auto label = static_cast<FineLabel>(k);
    for (int i = 0; i < opt.counts[static_cast<std::size_t>(k)]; ++i, ++pattern_id) {
      DatasetRecord rec;
      rec.pattern_id = pattern_id;
      rec.fine_label = label;
      const Graph g = detail::generate_pattern(
          opt, label, subseed(opt.seed, static_cast<std::uint64_t>(pattern_id)), &rec.gen_params);
      rec.signature = signature_of(g).values;
      ++sum.generated[static_cast<std::size_t>(k)];
      if (is_connected(g)) ++sum.connected[static_cast<std::size_t>(k)];
      ds.records.push_back(std::move(rec));
    }
  }
  sum.total = pattern_id;
  if (summary) *summary = sum;
  return ds;
}

inline GenSummary run_gen(const GenOptions& opt, const std::filesystem::path& out_csv) {
  GenSummary summary;
  const Dataset ds = generate_dataset(opt, &summary);
  write_dataset_csv(out_csv, ds);
  return summary;
}

// ---------------------------------------------------------------------------
// train: dataset CSV -> trained + labeled model, QE log

struct TrainOptions {
  int epochs = 2000;
  int neurons = 6;
  std::uint64_t seed = 0;
};

struct TrainOutput {
  TrainedModel model;
  double initial_qe = 0.0;           // before the first epoch
  std::vector<double> qe_history;    // after each epoch
};

inline TrainOutput train_on_dataset(const Dataset& ds, const TrainOptions& opt) {
  if (opt.neurons < 1) throw PreconditionError("neuron count must be >= 1");
  TrainConfig config;
  config.epochs = opt.epochs;
  config.shuffle_seed = opt.seed;
  config.validate();

  const DataMatrix x = ds.signatures();
  Som som = init_som(x, config, HexLattice::compact(opt.neurons));

  TrainOutput out;
  out.initial_qe = quantization_error(som, x);
  TrainResult trained = train(std::move(som), x, config);
  out.qe_history = trained.qe_history;

  ModelMeta meta;
  meta.seed = opt.seed;
  meta.config = config;
  meta.qe_history = trained.qe_history;
  meta.final_qe = trained.qe_history.back();
  out.model = label_neurons(std::move(trained.som), x, ds.labels(), LabelSpace::kFine,
                            std::move(meta));
  return out;
}

// The QE log carries epoch 0 = the freshly initialized map, then one row per
// completed epoch.
inline std::string qe_log_csv(const TrainOutput& out) {
  std::string csv = "epoch,quantization_error\n";
  csv += "0," + format_double(out.initial_qe) + '\n';
  for (std::size_t t = 0; t < out.qe_history.size(); ++t)
    csv += std::to_string(t + 1) + ',' + format_double(out.qe_history[t]) + '\n';
  return csv;
}

inline TrainOutput run_train(const std::filesystem::path& dataset_csv,
                             const std::filesystem::path& model_out, const TrainOptions& opt,
                             const std::optional<std::filesystem::path>& qe_log_out = {}) {
  const Dataset ds = read_dataset_csv(dataset_csv);
  TrainOutput out = train_on_dataset(ds, opt);
  write_model(model_out, out.model);
  if (qe_log_out) write_text_file(*qe_log_out, qe_log_csv(out));
  return out;
}

// ---------------------------------------------------------------------------
// eval: model + dataset -> purity, confusion matrix, per-neuron histogram

struct EvalReport {
  LabelSpace space = LabelSpace::kMacro;
  std::size_t samples = 0;
  Evaluation eval;
  NeuronHistogram histogram;
};

inline EvalReport evaluate_dataset(const TrainedModel& model, const Dataset& ds,
                                   LabelSpace space) {
  if (ds.n != model.som.dim())
    throw NodeCountMismatch("dataset dimension " + std::to_string(ds.n) +
                            " does not match model dimension " +
                            std::to_string(model.som.dim()));
  const DataMatrix x = ds.signatures();
  const auto truth = ds.labels();
  EvalReport report;
  report.space = space;
  report.samples = x.size();
  report.eval = evaluate(model, x, truth, space);
  report.histogram = merge_report(model, x, truth);
  return report;
}

inline std::string confusion_csv(const ConfusionMatrix& cm) {
  std::string out = "truth\\pred";
  const int k = class_count(cm.space);
  for (int c = 0; c < k; ++c) {
    out += ',';
    out += class_name(cm.space, c);
  }
  out += '\n';
  for (int r = 0; r < k; ++r) {
    out += class_name(cm.space, r);
    for (int c = 0; c < k; ++c) {
      out += ',';
      out += std::to_string(cm.counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    out += '\n';
  }
  return out;
}

inline std::string render_eval_report(const TrainedModel& model, const EvalReport& report) {
  std::string out;
  out += "space: ";
  out += to_string(report.space);
  out += '\n';
  out += "samples: " + std::to_string(report.samples) + '\n';
  out += "purity: " + format_double(report.eval.purity) + '\n';
  out += "labeled_neurons: " + std::to_string(model.labeled_count()) + "/" +
         std::to_string(model.som.neuron_count()) + '\n';
  out += "confusion (rows=truth, cols=predicted):\n";
  out += confusion_csv(report.eval.confusion);
  out += "per-neuron BMU histogram over fine classes:\n";
  out += "neuron,q,r,label";
  for (int c = 0; c < kFineClassCount; ++c) {
    out += ',';
    out += to_string(static_cast<FineLabel>(c));
  }
  out += '\n';
  for (int j = 0; j < model.som.neuron_count(); ++j) {
    const auto [q, r] = model.som.lattice.coords[static_cast<std::size_t>(j)];
    out += std::to_string(j) + ',' + std::to_string(q) + ',' + std::to_string(r) + ',';
    const auto& label = model.neuron_labels[static_cast<std::size_t>(j)];
    out += label ? std::string(class_name(model.space, *label)) : std::string("-");
    for (int c = 0; c < kFineClassCount; ++c) {
      out += ',';
      out += std::to_string(report.histogram[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)]);
    }
    out += '\n';
  }
  return out;
}

inline EvalReport run_eval(const std::filesystem::path& model_path,
                           const std::filesystem::path& dataset_path, LabelSpace space,
                           const std::optional<std::filesystem::path>& confusion_out = {},
                           std::string* rendered = nullptr) {
  const TrainedModel model = read_model(model_path);
  const Dataset ds = read_dataset_csv(dataset_path);
  EvalReport report = evaluate_dataset(model, ds, space);
  if (confusion_out) write_text_file(*confusion_out, confusion_csv(report.eval.confusion));
  if (rendered) *rendered = render_eval_report(model, report);
  return report;
}

// ---------------------------------------------------------------------------
// classify: model + one graph file -> label

struct ClassifyOutcome {
  int class_idx = 0;
  std::string label;
  int neuron = 0;
  SpectralSignature signature;
};

inline ClassifyOutcome classify_graph(const TrainedModel& model, const Graph& g,
                                      LabelSpace space) {
  if (g.n != model.som.dim())
    throw NodeCountMismatch("graph has " + std::to_string(g.n) + " nodes, model expects " +
                            std::to_string(model.som.dim()));
  ClassifyOutcome out;
  out.signature = signature_of(g);
  out.neuron = nearest_labeled_neuron(model, out.signature.values);
  out.class_idx = classify_as(model, out.signature.values, space);
  out.label = std::string(class_name(space, out.class_idx));
  return out;
}

inline ClassifyOutcome run_classify(const std::filesystem::path& model_path,
                                    const std::filesystem::path& graph_path, LabelSpace space) {
  const TrainedModel model = read_model(model_path);
  const Graph g = read_graph_file(graph_path);
  return classify_graph(model, g, space);
}

// ---------------------------------------------------------------------------
// project: 2-D views of the dataset and the neurons in one shared basis

struct ProjectionRecord {
  enum class Kind { kTrainVector, kNeuron };
  Kind kind = Kind::kTrainVector;
  int id = 0;          // pattern_id or neuron index
  std::string label;   // class name, or '-' for unlabeled neurons
  double x = 0.0;
  double y = 0.0;
};

inline std::vector<ProjectionRecord> project_records(const TrainedModel& model,
                                                     const Dataset& ds) {
  if (ds.records.size() < 3)
    throw Error(ErrorKind::kData, "projection needs at least 3 dataset rows");
  if (ds.n != model.som.dim())
    throw NodeCountMismatch("dataset dimension " + std::to_string(ds.n) +
                            " does not match model dimension " +
                            std::to_string(model.som.dim()));
  const PlaneProjection plane = principal_plane(ds.signatures());
  std::vector<ProjectionRecord> records;
  records.reserve(ds.records.size() + static_cast<std::size_t>(model.som.neuron_count()));
  for (const auto& rec : ds.records) {
    const auto [px, py] = plane.project(rec.signature);
    records.push_back({ProjectionRecord::Kind::kTrainVector, rec.pattern_id,
                       std::string(to_string(rec.fine_label)), px, py});
  }
  for (int j = 0; j < model.som.neuron_count(); ++j) {
    const auto [px, py] = plane.project(model.som.weights[static_cast<std::size_t>(j)]);
    const auto& label = model.neuron_labels[static_cast<std::size_t>(j)];
    records.push_back({ProjectionRecord::Kind::kNeuron, j,
                       label ? std::string(class_name(model.space, *label)) : std::string("-"),
                       px, py});
  }
  return records;
}

inline std::string projection_csv(const std::vector<ProjectionRecord>& records) {
  std::string out = "kind,id,label,x,y\n";
  for (const auto& r : records) {
    out += r.kind == ProjectionRecord::Kind::kNeuron ? "NEURON" : "TRAIN_VECTOR";
    out += ',' + std::to_string(r.id) + ',' + r.label + ',' + format_double(r.x) + ',' +
           format_double(r.y) + '\n';
  }
  return out;
}

namespace detail {

inline std::string_view label_color(std::string_view label) {
  if (label == "REG3") return "#1f77b4";
  if (label == "REG4") return "#2ca02c";
  if (label == "REG5") return "#17becf";
  if (label == "RANDOM") return "#ff7f0e";
  if (label == "SCALEFREE") return "#d62728";
  if (label == "REGULAR") return "#1f77b4";
  return "#7f7f7f";
}

inline std::string svg_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return std::string(buf);
}

}  // namespace detail

// Self-contained SVG scatter plot: train vectors as small class-colored
// dots, neurons as ringed markers with their index.
inline std::string projection_svg(const std::vector<ProjectionRecord>& records) {
  const double width = 880.0;
  const double height = 640.0;
  const double left = 60.0;
  const double right = 200.0;
  const double top = 30.0;
  const double bottom = 45.0;

  double min_x = 0.0, max_x = 1.0, min_y = 0.0, max_y = 1.0;
  if (!records.empty()) {
    min_x = max_x = records.front().x;
    min_y = max_y = records.front().y;
    for (const auto& r : records) {
      min_x = std::min(min_x, r.x);
      max_x = std::max(max_x, r.x);
      min_y = std::min(min_y, r.y);
      max_y = std::max(max_y, r.y);
    }
  }
  double span_x = max_x - min_x;
  double span_y = max_y - min_y;
  if (span_x <= 0.0) span_x = 1.0;
  if (span_y <= 0.0) span_y = 1.0;
  min_x -= 0.05 * span_x;
  max_x += 0.05 * span_x;
  min_y -= 0.05 * span_y;
  max_y += 0.05 * span_y;

  const double plot_w = width - left - right;
  const double plot_h = height - top - bottom;
  const auto sx = [&](double v) { return left + (v - min_x) / (max_x - min_x) * plot_w; };
  const auto sy = [&](double v) { return top + (max_y - v) / (max_y - min_y) * plot_h; };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(width) +
         "\" height=\"" + detail::svg_num(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + detail::svg_num(left) + "\" y=\"" + detail::svg_num(top) + "\" width=\"" +
         detail::svg_num(plot_w) + "\" height=\"" + detail::svg_num(plot_h) +
         "\" fill=\"none\" stroke=\"#444\"/>\n";

  std::vector<std::string> legend;
  for (const auto& r : records) {
    if (r.kind != ProjectionRecord::Kind::kTrainVector) continue;
    bool known = false;
    for (const auto& l : legend) known = known || l == r.label;
    if (!known) legend.push_back(r.label);
    svg += "<circle cx=\"" + detail::svg_num(sx(r.x)) + "\" cy=\"" + detail::svg_num(sy(r.y)) +
           "\" r=\"3\" fill=\"" + std::string(detail::label_color(r.label)) +
           "\" fill-opacity=\"0.55\"/>\n";
  }
  for (const auto& r : records) {
    if (r.kind != ProjectionRecord::Kind::kNeuron) continue;
    svg += "<circle cx=\"" + detail::svg_num(sx(r.x)) + "\" cy=\"" + detail::svg_num(sy(r.y)) +
           "\" r=\"7\" fill=\"" + std::string(detail::label_color(r.label)) +
           "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + detail::svg_num(sx(r.x) + 9.0) + "\" y=\"" +
           detail::svg_num(sy(r.y) - 9.0) + "\" font-size=\"12\" font-family=\"sans-serif\">n" +
           std::to_string(r.id) + "</text>\n";
  }

  double ly = top + 10.0;
  for (const auto& label : legend) {
    svg += "<circle cx=\"" + detail::svg_num(width - right + 18.0) + "\" cy=\"" +
           detail::svg_num(ly) + "\" r=\"5\" fill=\"" + std::string(detail::label_color(label)) +
           "\"/>\n";
    svg += "<text x=\"" + detail::svg_num(width - right + 30.0) + "\" y=\"" +
           detail::svg_num(ly + 4.0) + "\" font-size=\"13\" font-family=\"sans-serif\">" + label +
           "</text>\n";
    ly += 20.0;
  }
  svg += "<circle cx=\"" + detail::svg_num(width - right + 18.0) + "\" cy=\"" +
         detail::svg_num(ly) + "\" r=\"6\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  svg += "<text x=\"" + detail::svg_num(width - right + 30.0) + "\" y=\"" +
         detail::svg_num(ly + 4.0) + "\" font-size=\"13\" font-family=\"sans-serif\">neuron</text>\n";

  svg += "<text x=\"" + detail::svg_num(left) + "\" y=\"" + detail::svg_num(height - 12.0) +
         "\" font-size=\"12\" font-family=\"sans-serif\">x: [" + format_double17(min_x) + ", " +
         format_double17(max_x) + "]  y: [" + format_double17(min_y) + ", " +
         format_double17(max_y) + "]</text>\n";
  svg += "</svg>\n";
  return svg;
}

inline std::vector<ProjectionRecord> run_project(
    const std::filesystem::path& model_path, const std::filesystem::path& dataset_path,
    const std::filesystem::path& csv_out,
    const std::optional<std::filesystem::path>& svg_out = {}) {
  const TrainedModel model = read_model(model_path);
  const Dataset ds = read_dataset_csv(dataset_path);
  std::vector<ProjectionRecord> records = project_records(model, ds);
  write_text_file(csv_out, projection_csv(records));
  if (svg_out) write_text_file(*svg_out, projection_svg(records));
  return records;
}

}  // namespace topomap
