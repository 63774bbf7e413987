#ifndef DPIC_DOT_HPP
#define DPIC_DOT_HPP

#include <string>

#include "dpic/knitting.hpp"
#include "dpic/translation_quiver.hpp"

namespace dpic {

// Graphviz text with one column per level and pinned grid positions
// pos="level,-index". Positions of `mod` carry P/I/S annotations.
std::string render_dot(const ZQuiverWindow& window, const ARQuiverModA* mod = nullptr);

// Levels [a, b] of ZΔ; an empty range (a > b) gives a header-only graph.
std::string render_dot(const Quiver& delta, int a, int b, const ARQuiverModA* mod = nullptr);

// The knitted region alone.
std::string render_dot(const ARQuiverModA& mod);

}  // namespace dpic

#endif  // DPIC_DOT_HPP
