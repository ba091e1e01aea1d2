#pragma once

#include "crosscap/family.hpp"

#include <string>

namespace crosscap {

/// Every face drawn as a regular polygon (a circle for one- and two-sided
/// faces), chords as straight segments. Cross-cap pairs get a ⊗ mark and free
/// edges a small circle. Output is byte-stable for a given family.
std::string render_svg(const CurveFamily& fam);

}  // namespace crosscap
