#pragma once

// SVG pictures of tilings: dominos as rounded rectangles colored by class,
// optional polar shading and limit-shape overlays.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>

#include "aztec/regions.hpp"

namespace aztec::render {

struct SvgOptions {
  double scale = 10.0;  // pixels per lattice unit
  // N, S, E, W fill colors
  std::array<std::string, 4> palette{"#d7301f", "#2b8cbe", "#41ab5d", "#fec44f"};
  bool polar = false;    // fade temperate dominos, keep polar ones saturated
  bool heights = false;  // vertex heights as grey dots (and labels when small)
  bool levels = false;   // level curves of the limiting placement probability
  bool overlay = true;   // arctic circle, or the bias ellipse
  std::optional<double> bias;
};

// "N=#aa0000,S=#0000aa,..." with any subset of the four classes.
std::array<std::string, 4> parse_palette(const std::string& text, std::array<std::string, 4> base);

void write_svg(std::ostream& os, const regions::Tiling& t, const SvgOptions& opts = {});

}  // namespace aztec::render
