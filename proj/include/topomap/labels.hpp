#pragma once

#include <optional>
#include <string_view>

#include "topomap/errors.hpp"

namespace topomap {

// Fine-grained pattern classes in canonical order. The order doubles as the
// tie-break rule wherever votes can tie.
enum class FineLabel : int {
  kReg3 = 0,
  kReg4 = 1,
  kReg5 = 2,
  kRandom = 3,
  kScaleFree = 4,
};

// The three topology families (regular degrees collapsed).
enum class MacroLabel : int {
  kRegular = 0,
  kRandom = 1,
  kScaleFree = 2,
};

inline constexpr int kFineClassCount = 5;
inline constexpr int kMacroClassCount = 3;

constexpr MacroLabel macro_of(FineLabel f) {
  switch (f) {
    case FineLabel::kReg3:
    case FineLabel::kReg4:
    case FineLabel::kReg5:
      return MacroLabel::kRegular;
    case FineLabel::kRandom:
      return MacroLabel::kRandom;
    case FineLabel::kScaleFree:
    default:
      return MacroLabel::kScaleFree;
  }
}

constexpr std::string_view to_string(FineLabel f) {
  switch (f) {
    case FineLabel::kReg3: return "REG3";
    case FineLabel::kReg4: return "REG4";
    case FineLabel::kReg5: return "REG5";
    case FineLabel::kRandom: return "RANDOM";
    case FineLabel::kScaleFree:
    default: return "SCALEFREE";
  }
}

constexpr std::string_view to_string(MacroLabel m) {
  switch (m) {
    case MacroLabel::kRegular: return "REGULAR";
    case MacroLabel::kRandom: return "RANDOM";
    case MacroLabel::kScaleFree:
    default: return "SCALEFREE";
  }
}

inline std::optional<FineLabel> parse_fine_label(std::string_view s) {
  for (int k = 0; k < kFineClassCount; ++k) {
    if (s == to_string(static_cast<FineLabel>(k))) return static_cast<FineLabel>(k);
  }
  return std::nullopt;
}

// Granularity a model is labeled (and evaluated) at.
enum class LabelSpace { kMacro, kFine };

constexpr std::string_view to_string(LabelSpace s) {
  return s == LabelSpace::kMacro ? "MACRO" : "FINE";
}

inline std::optional<LabelSpace> parse_label_space(std::string_view s) {
  if (s == "MACRO") return LabelSpace::kMacro;
  if (s == "FINE") return LabelSpace::kFine;
  return std::nullopt;
}

constexpr int class_count(LabelSpace s) {
  return s == LabelSpace::kMacro ? kMacroClassCount : kFineClassCount;
}

// Maps a ground-truth fine label to its class index within a space.
constexpr int class_index(LabelSpace s, FineLabel f) {
  return s == LabelSpace::kFine ? static_cast<int>(f)
                                : static_cast<int>(macro_of(f));
}

inline std::string_view class_name(LabelSpace s, int idx) {
  if (idx < 0 || idx >= class_count(s)) throw IndexOutOfRange("class index out of range");
  return s == LabelSpace::kFine ? to_string(static_cast<FineLabel>(idx))
                                : to_string(static_cast<MacroLabel>(idx));
}

inline std::optional<int> parse_class(LabelSpace s, std::string_view name) {
  for (int k = 0; k < class_count(s); ++k) {
    if (name == class_name(s, k)) return k;
  }
  return std::nullopt;
}

}  // namespace topomap
