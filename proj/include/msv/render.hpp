#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msv/permutation.hpp"

namespace msv {

enum class RenderTarget { ascii, tikz };

enum class Layer {
  dots,
  lasers,
  opposite_rothe,
  essential,
  dominant,
  southwest,
  l,
  l_prime,
  graph,
};

struct RenderSpec {
  RenderTarget target = RenderTarget::ascii;
  std::vector<Layer> show;  // at least one layer
  bool cell_labels = false;
};

// Deterministic rendering: identical input gives byte-identical output.
// ASCII uses matrix coordinates (row 1 on top), '●' for dots and one fill
// marker per layer; tikz emits a standalone document in the style of the
// dot-and-laser grid figures.
std::string render(const Permutation& w, const RenderSpec& spec);

std::optional<Layer> layer_from_name(std::string_view name);
const char* layer_name(Layer layer);

}  // namespace msv
