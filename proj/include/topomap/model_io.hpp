#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topomap/classify.hpp"
#include "topomap/io_util.hpp"
#include "topomap/labels.hpp"

namespace topomap {

// Model files are line-oriented text: a magic/version line, the training
// configuration echo, then one line per neuron carrying its lattice
// coordinate, label ('-' when unlabeled) and weight vector. Reals use 17
// significant digits, so read-then-write reproduces the file byte for byte.
inline constexpr std::string_view kModelMagic = "topomap-model";
inline constexpr int kModelVersion = 1;

inline void write_model(const std::filesystem::path& path, const TrainedModel& model) {
  const int m = model.som.neuron_count();
  if (m < 1) throw PreconditionError("model has no neurons");
  if (static_cast<int>(model.neuron_labels.size()) != m)
    throw DimensionMismatch("label list does not match neuron count");

  std::string out;
  out += kModelMagic;
  out += ' ';
  out += std::to_string(kModelVersion);
  out += '\n';
  out += "space ";
  out += to_string(model.space);
  out += '\n';
  out += "neurons " + std::to_string(m) + '\n';
  out += "dim " + std::to_string(model.som.dim()) + '\n';
  out += "seed " + std::to_string(model.meta.seed) + '\n';
  const TrainConfig& c = model.meta.config;
  out += "epochs " + std::to_string(c.epochs) + '\n';
  out += "alpha0 " + format_double17(c.alpha0) + '\n';
  out += "alpha_min " + format_double17(c.alpha_min) + '\n';
  out += "sigma0 " + format_double17(c.sigma0) + '\n';
  out += "sigma_min " + format_double17(c.sigma_min) + '\n';
  out += "init_jitter " + format_double17(c.init_jitter) + '\n';
  out += "final_qe " + format_double17(model.meta.final_qe) + '\n';
  for (int j = 0; j < m; ++j) {
    const auto [q, r] = model.som.lattice.coords[static_cast<std::size_t>(j)];
    out += "neuron " + std::to_string(j) + ' ' + std::to_string(q) + ' ' + std::to_string(r);
    out += ' ';
    const auto& label = model.neuron_labels[static_cast<std::size_t>(j)];
    out += label ? std::string(class_name(model.space, *label)) : std::string("-");
    for (double w : model.som.weights[static_cast<std::size_t>(j)]) {
      out += ' ';
      out += format_double17(w);
    }
    out += '\n';
  }
  write_text_file(path, out);
}

inline TrainedModel read_model(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  const auto lines = split_lines(text);
  const std::string name = path.string();

  std::size_t li = 0;
  const auto next_line = [&]() -> std::string_view {
    while (li < lines.size() && lines[li].empty()) ++li;
    if (li >= lines.size()) throw ParseError(name, lines.size(), "unexpected end of file");
    return lines[li++];
  };
  const auto expect_field = [&](std::string_view key) -> std::string_view {
    const auto parts = split(next_line(), ' ');
    if (parts.size() != 2 || parts[0] != key)
      throw ParseError(name, li, "expected '" + std::string(key) + " <value>'");
    return parts[1];
  };
  const auto parse_real = [&](std::string_view key) {
    double v = 0.0;
    const auto s = expect_field(key);
    if (!parse_double(s, v))
      throw ParseError(name, li, "bad real for " + std::string(key) + ": '" + std::string(s) + "'");
    return v;
  };
  const auto parse_count = [&](std::string_view key) {
    long long v = 0;
    const auto s = expect_field(key);
    if (!parse_int(s, v) || v < 1)
      throw ParseError(name, li, "bad count for " + std::string(key) + ": '" + std::string(s) + "'");
    return static_cast<int>(v);
  };

  {
    const auto parts = split(next_line(), ' ');
    if (parts.size() != 2 || parts[0] != kModelMagic)
      throw ParseError(name, li, "not a model file");
    long long version = 0;
    if (!parse_int(parts[1], version) || version != kModelVersion)
      throw ParseError(name, li, "unsupported model version '" + std::string(parts[1]) + "'");
  }

  TrainedModel model;
  {
    const auto s = expect_field("space");
    const auto space = parse_label_space(s);
    if (!space) throw ParseError(name, li, "unknown label space '" + std::string(s) + "'");
    model.space = *space;
  }
  const int m = parse_count("neurons");
  const int dim = parse_count("dim");
  {
    const auto s = expect_field("seed");
    if (!parse_uint64(s, model.meta.seed))
      throw ParseError(name, li, "bad seed '" + std::string(s) + "'");
  }
  model.meta.config.epochs = parse_count("epochs");
  model.meta.config.alpha0 = parse_real("alpha0");
  model.meta.config.alpha_min = parse_real("alpha_min");
  model.meta.config.sigma0 = parse_real("sigma0");
  model.meta.config.sigma_min = parse_real("sigma_min");
  model.meta.config.init_jitter = parse_real("init_jitter");
  model.meta.config.shuffle_seed = model.meta.seed;
  model.meta.final_qe = parse_real("final_qe");
  try {
    model.meta.config.validate();
  } catch (const Error& e) {
    throw ParseError(name, li, std::string("invalid training configuration: ") + e.what());
  }

  model.som.lattice.coords.resize(static_cast<std::size_t>(m));
  model.som.weights.assign(static_cast<std::size_t>(m),
                           std::vector<double>(static_cast<std::size_t>(dim)));
  model.neuron_labels.assign(static_cast<std::size_t>(m), std::nullopt);
  for (int j = 0; j < m; ++j) {
    const auto parts = split(next_line(), ' ');
    if (static_cast<int>(parts.size()) != 5 + dim)
      throw ParseError(name, li, "neuron line needs " + std::to_string(5 + dim) + " tokens, got " +
                                     std::to_string(parts.size()));
    long long idx = 0;
    long long q = 0;
    long long r = 0;
    if (parts[0] != "neuron" || !parse_int(parts[1], idx) || idx != j)
      throw ParseError(name, li, "expected neuron " + std::to_string(j));
    if (!parse_int(parts[2], q) || !parse_int(parts[3], r))
      throw ParseError(name, li, "bad lattice coordinate");
    model.som.lattice.coords[static_cast<std::size_t>(j)] = {static_cast<int>(q),
                                                             static_cast<int>(r)};
    if (parts[4] != "-") {
      const auto cls = parse_class(model.space, parts[4]);
      if (!cls) throw ParseError(name, li, "unknown label '" + std::string(parts[4]) + "'");
      model.neuron_labels[static_cast<std::size_t>(j)] = *cls;
    }
    for (int c = 0; c < dim; ++c) {
      double w = 0.0;
      if (!parse_double(parts[static_cast<std::size_t>(c) + 5], w))
        throw ParseError(name, li, "bad weight component");
      model.som.weights[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)] = w;
    }
  }
  for (std::size_t a = 0; a < model.som.lattice.coords.size(); ++a)
    for (std::size_t b = a + 1; b < model.som.lattice.coords.size(); ++b)
      if (model.som.lattice.coords[a] == model.som.lattice.coords[b])
        throw ParseError(name, li, "duplicate lattice coordinate");
  while (li < lines.size()) {
    if (!lines[li].empty()) throw ParseError(name, li + 1, "trailing content after last neuron");
    ++li;
  }
  return model;
}

}  // namespace topomap
