#pragma once

#include <string>

#include "bergtop/lattice.hpp"

namespace bergtop::figures {

// SVG rendering of the domain's |z1|-|z2| cross-section: the bidisc piece Z,
// the tube X under the curve |z2| = 1/(|z1| log |z1|), and the thin slab Y
// around |z1| = 1/|z2| of half-width |z2|^(-m), each filled and labeled.
// extent sets the plotted range on both axes and must exceed e.
std::string domain_svg(const DomainSpec& spec, double extent = 6.0);

// SVG rendering of the exponent lattice up to `extent` on both axes:
// admissible points are filled, inadmissible ones hollow, and each
// admissible point carries an arrow for the two-step advance, solid when the
// image stays admissible and dashed when it leaves.
std::string lattice_svg(const DomainSpec& spec, int extent);

}  // namespace bergtop::figures
