#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "thue/plane_graph.hpp"

namespace thue {

/// Family tags understood by generate_family.
const std::vector<std::string>& family_names();

/// Builds a named family with its standard plane embedding and role labels.
///
///   path n | cycle n | star n | wheel n | grid n m | ladder n |
///   pendant-ladder n | prism n | apic n | antiprism n
///   subdivided-star n k            (k extra vertices on every edge)
///   subdivided-star n k_1 .. k_n
///   subdivided-wheel n s r         (s on every spoke, r on every rim edge)
///   subdivided-wheel n s_1 .. s_n r_1 .. r_n
///
/// Throws Error(BadParams) for unknown families or out-of-range parameters.
PlaneGraph generate_family(std::string_view family, std::span<const int> params);

}  // namespace thue
