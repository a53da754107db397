#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "topomap/errors.hpp"
#include "topomap/labels.hpp"
#include "topomap/som.hpp"
#include "topomap/types.hpp"

namespace topomap {

struct ModelMeta {
  std::uint64_t seed = 0;
  TrainConfig config;
  std::vector<double> qe_history;  // in-memory only; serialized models keep final_qe
  double final_qe = 0.0;
};

// A trained map with per-neuron class labels. Labels live in `space`;
// neurons that were nobody's BMU during labeling stay unlabeled.
struct TrainedModel {
  Som som;
  LabelSpace space = LabelSpace::kFine;
  std::vector<std::optional<int>> neuron_labels;  // class index within `space`
  ModelMeta meta;

  int labeled_count() const {
    int k = 0;
    for (const auto& l : neuron_labels) k += l.has_value() ? 1 : 0;
    return k;
  }
};

// Majority vote over the BMU assignments of a labeled dataset. Vote ties go
// to the class earlier in canonical order; zero-sample neurons stay
// unlabeled. Any non-empty dataset labels at least one neuron (its samples'
// BMUs), so the returned model is always usable by classify().
inline TrainedModel label_neurons(Som som, const DataMatrix& data,
                                  const std::vector<FineLabel>& truth, LabelSpace space,
                                  ModelMeta meta = {}) {
  if (data.empty()) throw EmptyDataset("cannot label neurons from an empty dataset");
  if (truth.size() != data.size())
    throw DimensionMismatch("label count " + std::to_string(truth.size()) +
                            " does not match sample count " + std::to_string(data.size()));
  const int m = som.neuron_count();
  const int k = class_count(space);
  std::vector<std::vector<long long>> votes(static_cast<std::size_t>(m),
                                            std::vector<long long>(static_cast<std::size_t>(k), 0));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int winner = bmu(som, data[i]);
    ++votes[static_cast<std::size_t>(winner)][static_cast<std::size_t>(class_index(space, truth[i]))];
  }

  TrainedModel model;
  model.som = std::move(som);
  model.space = space;
  model.meta = std::move(meta);
  model.neuron_labels.assign(static_cast<std::size_t>(m), std::nullopt);
  for (int j = 0; j < m; ++j) {
    long long best = 0;
    int best_class = -1;
    for (int c = 0; c < k; ++c) {
      const long long v = votes[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
      if (v > best) {  // strict: ties keep the earlier class
        best = v;
        best_class = c;
      }
    }
    if (best_class >= 0) model.neuron_labels[static_cast<std::size_t>(j)] = best_class;
  }
  return model;
}

// Index of the nearest labeled neuron; ties go to the lowest index.
inline int nearest_labeled_neuron(const TrainedModel& model, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != model.som.dim())
    throw DimensionMismatch("sample has " + std::to_string(x.size()) + " components, map has " +
                            std::to_string(model.som.dim()));
  int best = -1;
  double best_sq = 0.0;
  for (int j = 0; j < model.som.neuron_count(); ++j) {
    if (!model.neuron_labels[static_cast<std::size_t>(j)].has_value()) continue;
    const auto& w = model.som.weights[static_cast<std::size_t>(j)];
    double sq = 0.0;
    for (std::size_t c = 0; c < x.size(); ++c) {
      const double dv = x[c] - w[c];
      sq += dv * dv;
    }
    if (best < 0 || sq < best_sq) {
      best_sq = sq;
      best = j;
    }
  }
  if (best < 0) throw NoLabeledNeurons("model has no labeled neurons");
  return best;
}

// Class index (within model.space) of the nearest labeled neuron.
inline int classify(const TrainedModel& model, const std::vector<double>& x) {
  return *model.neuron_labels[static_cast<std::size_t>(nearest_labeled_neuron(model, x))];
}

// Classify and express the answer in `out_space`. Fine labels coarsen to
// macro; the reverse direction has no well-defined answer and is rejected.
inline int classify_as(const TrainedModel& model, const std::vector<double>& x,
                       LabelSpace out_space) {
  const int idx = classify(model, x);
  if (out_space == model.space) return idx;
  if (model.space == LabelSpace::kFine && out_space == LabelSpace::kMacro)
    return static_cast<int>(macro_of(static_cast<FineLabel>(idx)));
  throw Error(ErrorKind::kData, "macro-labeled model cannot answer in the fine space");
}

struct ConfusionMatrix {
  LabelSpace space = LabelSpace::kMacro;
  std::vector<std::vector<long long>> counts;  // [truth][predicted]

  long long total() const {
    long long t = 0;
    for (const auto& row : counts)
      for (long long v : row) t += v;
    return t;
  }

  long long trace() const {
    long long t = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) t += counts[i][i];
    return t;
  }
};

struct Evaluation {
  ConfusionMatrix confusion;
  double purity = 0.0;  // trace / total
};

inline Evaluation evaluate(const TrainedModel& model, const DataMatrix& data,
                           const std::vector<FineLabel>& truth, LabelSpace space) {
  if (data.empty()) throw EmptyDataset("cannot evaluate on an empty dataset");
  if (truth.size() != data.size())
    throw DimensionMismatch("label count does not match sample count");
  const int k = class_count(space);
  Evaluation out;
  out.confusion.space = space;
  out.confusion.counts.assign(static_cast<std::size_t>(k),
                              std::vector<long long>(static_cast<std::size_t>(k), 0));
  long long correct = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int predicted = classify_as(model, data[i], space);
    const int actual = class_index(space, truth[i]);
    ++out.confusion.counts[static_cast<std::size_t>(actual)][static_cast<std::size_t>(predicted)];
    if (predicted == actual) ++correct;
  }
  out.purity = static_cast<double>(correct) / static_cast<double>(data.size());
  return out;
}

// Per-neuron BMU histogram over fine classes. This is where class merges
// show up: a neuron claimed by two fine classes at once (the classic case
// being the two lowest regular degrees) collects counts from both.
using NeuronHistogram = std::vector<std::array<long long, kFineClassCount>>;

inline NeuronHistogram merge_report(const TrainedModel& model, const DataMatrix& data,
                                    const std::vector<FineLabel>& truth) {
  if (data.empty()) throw EmptyDataset("cannot build a merge report from an empty dataset");
  if (truth.size() != data.size())
    throw DimensionMismatch("label count does not match sample count");
  NeuronHistogram hist(static_cast<std::size_t>(model.som.neuron_count()));
  for (auto& row : hist) row.fill(0);
  for (std::size_t i = 0; i < data.size(); ++i) {
    const int winner = bmu(model.som, data[i]);
    ++hist[static_cast<std::size_t>(winner)][static_cast<std::size_t>(truth[i])];
  }
  return hist;
}

}  // namespace topomap
