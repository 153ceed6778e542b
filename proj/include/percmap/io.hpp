#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "percmap/halfedge.hpp"
#include "percmap/walk.hpp"

namespace percmap {

// Maps serialize as
//   {"half_edges": [{"twin": t, "next": n, "origin": o}, ...],
//    "root": h, "colors": [0|1, ...]}
// and the round trip is bit-exact (labels included).
nlohmann::json map_to_json(const TriMap& m);
TriMap map_from_json(const nlohmann::json& j);

// Walks serialize as two text lines: "start_l start_r" then the word.
std::string walk_to_text(const Walk& w);
Walk walk_from_text(std::string_view text);

// FNV-1a 64-bit content digest used to label output files in manifests.
std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t x);

}  // namespace percmap
