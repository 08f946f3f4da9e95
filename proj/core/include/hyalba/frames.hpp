#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hyalba/semantics.hpp"

namespace hyalba {

// First-order frame condition used to describe a set of valid frames.
struct FrameProperty {
  std::string name;
  std::function<bool(const KripkeFrame&)> holds;
};

// reflexive, irreflexive, symmetric, transitive, euclidean, serial,
// functional, dense, confluent.
const std::vector<FrameProperty>& frame_properties();
const FrameProperty* find_frame_property(std::string_view name);

// Name of the class `valid` marks out among `frames`: "all", "none", a single
// property, or two properties joined with '+'. "other" when nothing fits.
std::string describe_frame_class(const std::vector<KripkeFrame>& frames, const std::vector<bool>& valid);

// Same vocabulary as describe_frame_class; "other" never matches.
bool frame_in_class(const KripkeFrame& frame, std::string_view description);

}  // namespace hyalba
