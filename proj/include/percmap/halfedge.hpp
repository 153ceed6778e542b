#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace percmap {

enum Color : std::uint8_t { Red = 0, Blue = 1 };

// Rooted combinatorial map of a disc triangulation, with a color per vertex.
// Half-edge h has a twin (the other side of its edge), a next (the
// counterclockwise rotation around its origin vertex), and an origin vertex.
// Face orbits follow phi(h) = next[twin[h]]; the face containing twin(root)
// is the outer one, every other face must be a triangle. The root half-edge
// lies on the boundary, pointing from the first boundary vertex to the
// second along the counterclockwise boundary cycle.
struct TriMap {
    std::vector<std::int32_t> twin, next, origin;
    std::vector<std::uint8_t> color;  // indexed by vertex
    std::int32_t root = 0;

    std::int32_t n_half_edges() const { return static_cast<std::int32_t>(twin.size()); }
    std::int32_t n_edges() const { return n_half_edges() / 2; }
    std::int32_t n_vertices() const { return static_cast<std::int32_t>(color.size()); }

    std::int32_t phi(std::int32_t h) const {
        return next[static_cast<std::size_t>(twin[static_cast<std::size_t>(h)])];
    }

    bool operator==(const TriMap& o) const {
        return twin == o.twin && next == o.next && origin == o.origin &&
               color == o.color && root == o.root;
    }
};

struct MapError : std::runtime_error {
    enum Kind {
        BadIndex,
        BadTwin,
        BadNext,
        BadOrigin,
        SelfLoop,
        Disconnected,
        NonTriangularInnerFace,
        NonSimpleBoundary,
        WrongGenus,
        BadColors,
        BadRoot,
        BadBoundaryColoring,
    };
    Kind kind;
    MapError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
};

// Throws MapError if m is not a valid colored disc triangulation with simple
// boundary. Does not constrain the coloring beyond the array shape.
void validate(const TriMap& m);

// All face orbits of phi; the orbit containing twin(root) comes first.
std::vector<std::vector<std::int32_t>> faces(const TriMap& m);

// Inner-side boundary half-edges in counterclockwise order, starting with
// the root: element i points from boundary vertex i to boundary vertex i+1.
std::vector<std::int32_t> boundary_cycle(const TriMap& m);

// Marks of which half-edges lie in the outer face orbit (outer sides).
std::vector<std::uint8_t> outer_side_mask(const TriMap& m);

// Boundary color split (l, r): the counterclockwise boundary colors must
// read red, then r+1 blues, then l reds (so the boundary length is l+r+2
// and the root points red to blue). Throws BadBoundaryColoring otherwise.
std::pair<std::int32_t, std::int32_t> boundary_signature(const TriMap& m);

// The single-edge map: one edge, red tail, blue head.
TriMap degenerate_map();

// Same map, new root half-edge (must be an inner-side boundary half-edge).
TriMap reroot(const TriMap& m, std::int32_t new_root);

// Relabel half-edges and vertices in breadth-first discovery order from the
// root (via twin and next). Isomorphic rooted colored maps, and only those,
// get equal canonical forms.
TriMap canonical_form(const TriMap& m);

// Rooting a map with an all-red or all-blue boundary: recolor one endpoint
// of the root edge so the root points red to blue (the head if the boundary
// was red, the tail if it was blue). Undone by mono_rooting.
void dichromatic_rooting(TriMap& m);
// Restores the mono boundary: recolors the root head back if the rest of
// the boundary is red, the tail if blue.
void mono_rooting(TriMap& m);

// Two-connected components of the underlying multigraph: each component is
// the set of edge ids (min of the two half-edge ids) of one block.
std::vector<std::vector<std::int32_t>> two_connected_components(const TriMap& m);

// Graph distance from src to every vertex (-1 if unreachable).
std::vector<std::int32_t> bfs_distances(const TriMap& m, std::int32_t src);

}  // namespace percmap
