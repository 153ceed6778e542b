#pragma once

// Hand-built small maps with known exploration words; these pin the
// orientation and letter conventions, so do not regenerate them from code
// under test.

#include "percmap/halfedge.hpp"

namespace percmap::fixtures {

// Triangulation of the 3-gon with no inner vertex. Boundary x0, y0, x1 with
// half-edges 0=(x0->y0) root, 1=(y0->x1), 2=(x1->x0), twins 3,4,5. With the
// default colors its exploration word is "bcc" from (1, 0).
inline TriMap triangle(Color c0 = Red, Color c1 = Blue, Color c2 = Red) {
    TriMap m;
    m.twin = {3, 4, 5, 0, 1, 2};
    m.next = {5, 3, 4, 1, 2, 0};
    m.origin = {0, 1, 2, 1, 2, 0};
    m.color = {c0, c1, c2};
    m.root = 0;
    return m;
}

// Triangulation of the 2-gon with one inner vertex v: boundary edge A
// (half-edges 0,1; the root side is 0), boundary edge B (2,3), spokes
// x0-v (4,5) and y0-v (6,7). Exploration word "abcc" when v is red,
// "bacc" when v is blue.
inline TriMap bigon_one_inner(Color apex) {
    TriMap m;
    m.twin = {1, 0, 3, 2, 5, 4, 7, 6};
    m.next = {3, 6, 1, 4, 0, 7, 2, 5};
    m.origin = {0, 1, 1, 0, 0, 2, 1, 2};
    m.color = {Red, Blue, apex};
    m.root = 0;
    return m;
}

// Two triangles (0,1,2) and (2,3,4) sharing the cut vertex 2. Not a valid
// disc triangulation (the boundary pinches), but a fine multigraph for the
// block decomposition.
inline TriMap bowtie() {
    TriMap m;
    m.twin = {3, 4, 5, 0, 1, 2, 9, 10, 11, 6, 7, 8};
    m.next = {5, 3, 11, 1, 2, 0, 4, 9, 10, 7, 8, 6};
    m.origin = {0, 1, 2, 1, 2, 0, 2, 3, 4, 3, 4, 2};
    m.color = {Red, Red, Red, Red, Red};
    m.root = 0;
    return m;
}

}  // namespace percmap::fixtures
