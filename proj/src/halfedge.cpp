#include "percmap/halfedge.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace percmap {

namespace {

void require(bool ok, MapError::Kind kind, const std::string& what) {
    if (!ok) throw MapError(kind, what);
}

std::vector<std::int32_t> orbit_of(const TriMap& m, std::int32_t h) {
    std::vector<std::int32_t> orbit;
    std::int32_t cur = h;
    do {
        orbit.push_back(cur);
        cur = m.phi(cur);
    } while (cur != h && static_cast<std::int32_t>(orbit.size()) <= m.n_half_edges());
    return orbit;
}

}  // namespace

void validate(const TriMap& m) {
    std::size_t H = m.twin.size();
    require(H >= 2 && H % 2 == 0, MapError::BadIndex, "need an even, positive half-edge count");
    require(m.next.size() == H && m.origin.size() == H, MapError::BadIndex,
            "twin/next/origin sizes differ");
    std::int32_t n = static_cast<std::int32_t>(H);
    auto inrange = [&](std::int32_t h) { return h >= 0 && h < n; };
    require(inrange(m.root), MapError::BadRoot, "root out of range");

    for (std::int32_t h = 0; h < n; ++h) {
        require(inrange(m.twin[static_cast<std::size_t>(h)]), MapError::BadTwin, "twin out of range");
        require(m.twin[static_cast<std::size_t>(h)] != h, MapError::BadTwin, "twin fixed point");
        require(m.twin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(h)])] == h,
                MapError::BadTwin, "twin not an involution");
        require(inrange(m.next[static_cast<std::size_t>(h)]), MapError::BadNext, "next out of range");
    }
    {
        std::vector<std::uint8_t> seen(H, 0);
        for (std::int32_t h = 0; h < n; ++h) {
            std::int32_t t = m.next[static_cast<std::size_t>(h)];
            require(!seen[static_cast<std::size_t>(t)], MapError::BadNext, "next not a permutation");
            seen[static_cast<std::size_t>(t)] = 1;
        }
    }

    std::int32_t nv = m.n_vertices();
    require(nv > 0, MapError::BadColors, "no vertices");
    for (std::int32_t h = 0; h < n; ++h) {
        require(m.origin[static_cast<std::size_t>(h)] >= 0 &&
                    m.origin[static_cast<std::size_t>(h)] < nv,
                MapError::BadOrigin, "origin out of range");
        require(m.color[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(h)])] <= 1,
                MapError::BadColors, "colors must be 0 or 1");
    }

    // next-orbits are the vertices: constant origin, one orbit per vertex.
    {
        std::vector<std::uint8_t> seen(H, 0);
        std::vector<std::uint8_t> vertex_seen(static_cast<std::size_t>(nv), 0);
        std::int32_t orbits = 0;
        for (std::int32_t h = 0; h < n; ++h) {
            if (seen[static_cast<std::size_t>(h)]) continue;
            ++orbits;
            std::int32_t v = m.origin[static_cast<std::size_t>(h)];
            require(!vertex_seen[static_cast<std::size_t>(v)], MapError::BadOrigin,
                    "two rotation orbits share a vertex");
            vertex_seen[static_cast<std::size_t>(v)] = 1;
            std::int32_t cur = h;
            do {
                seen[static_cast<std::size_t>(cur)] = 1;
                require(m.origin[static_cast<std::size_t>(cur)] == v, MapError::BadOrigin,
                        "rotation orbit with mixed origins");
                cur = m.next[static_cast<std::size_t>(cur)];
            } while (cur != h);
        }
        require(orbits == nv, MapError::BadOrigin, "isolated vertex");
    }

    for (std::int32_t h = 0; h < n; ++h)
        require(m.origin[static_cast<std::size_t>(h)] !=
                    m.origin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(h)])],
                MapError::SelfLoop, "loop edge");

    // Connectivity over half-edges via twin and next.
    {
        std::vector<std::uint8_t> seen(H, 0);
        std::vector<std::int32_t> stack{m.root};
        seen[static_cast<std::size_t>(m.root)] = 1;
        std::int32_t count = 0;
        while (!stack.empty()) {
            std::int32_t h = stack.back();
            stack.pop_back();
            ++count;
            for (std::int32_t nh : {m.twin[static_cast<std::size_t>(h)],
                                    m.next[static_cast<std::size_t>(h)]})
                if (!seen[static_cast<std::size_t>(nh)]) {
                    seen[static_cast<std::size_t>(nh)] = 1;
                    stack.push_back(nh);
                }
        }
        require(count == n, MapError::Disconnected, "map is not connected");
    }

    // Faces: the orbit of twin(root) is the outer face, the rest triangles.
    std::vector<std::int32_t> face_id(H, -1);
    std::int32_t n_faces = 0;
    {
        std::vector<std::int32_t> outer = orbit_of(m, m.twin[static_cast<std::size_t>(m.root)]);
        for (std::int32_t h : outer) {
            require(face_id[static_cast<std::size_t>(h)] == -1, MapError::BadNext,
                    "face orbit does not close");
            face_id[static_cast<std::size_t>(h)] = 0;
        }
        n_faces = 1;
        for (std::int32_t h = 0; h < n; ++h) {
            if (face_id[static_cast<std::size_t>(h)] != -1) continue;
            std::vector<std::int32_t> f = orbit_of(m, h);
            for (std::int32_t e : f) {
                require(face_id[static_cast<std::size_t>(e)] == -1, MapError::BadNext,
                        "face orbit does not close");
                face_id[static_cast<std::size_t>(e)] = n_faces;
            }
            require(f.size() == 3, MapError::NonTriangularInnerFace,
                    "inner face of degree != 3");
            ++n_faces;
        }
    }

    // Disc topology: V - E + F = 2.
    require(nv - m.n_edges() + n_faces == 2, MapError::WrongGenus, "map is not planar");

    // Simple boundary: boundary vertices pairwise distinct.
    {
        std::vector<std::int32_t> cycle = boundary_cycle(m);
        std::vector<std::uint8_t> seen(static_cast<std::size_t>(nv), 0);
        for (std::int32_t h : cycle) {
            std::int32_t v = m.origin[static_cast<std::size_t>(h)];
            require(!seen[static_cast<std::size_t>(v)], MapError::NonSimpleBoundary,
                    "boundary revisits a vertex");
            seen[static_cast<std::size_t>(v)] = 1;
        }
    }
}

std::vector<std::vector<std::int32_t>> faces(const TriMap& m) {
    std::size_t H = m.twin.size();
    std::vector<std::uint8_t> seen(H, 0);
    std::vector<std::vector<std::int32_t>> out;
    out.push_back(orbit_of(m, m.twin[static_cast<std::size_t>(m.root)]));
    for (std::int32_t h : out.back()) seen[static_cast<std::size_t>(h)] = 1;
    for (std::int32_t h = 0; h < static_cast<std::int32_t>(H); ++h) {
        if (seen[static_cast<std::size_t>(h)]) continue;
        out.push_back(orbit_of(m, h));
        for (std::int32_t e : out.back()) seen[static_cast<std::size_t>(e)] = 1;
    }
    return out;
}

std::vector<std::int32_t> boundary_cycle(const TriMap& m) {
    // The outer orbit visits outer sides clockwise, so reverse and twin it.
    std::vector<std::int32_t> outer = orbit_of(m, m.twin[static_cast<std::size_t>(m.root)]);
    std::size_t len = outer.size();
    std::vector<std::int32_t> cycle(len);
    for (std::size_t i = 0; i < len; ++i)
        cycle[i] = m.twin[static_cast<std::size_t>(outer[(len - i) % len])];
    assert(cycle[0] == m.root);
    return cycle;
}

std::vector<std::uint8_t> outer_side_mask(const TriMap& m) {
    std::vector<std::uint8_t> mask(m.twin.size(), 0);
    for (std::int32_t h : orbit_of(m, m.twin[static_cast<std::size_t>(m.root)]))
        mask[static_cast<std::size_t>(h)] = 1;
    return mask;
}

std::pair<std::int32_t, std::int32_t> boundary_signature(const TriMap& m) {
    std::vector<std::int32_t> cycle = boundary_cycle(m);
    std::int32_t len = static_cast<std::int32_t>(cycle.size());
    auto col = [&](std::int32_t i) {
        return m.color[static_cast<std::size_t>(
            m.origin[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])])];
    };
    require(len >= 2, MapError::BadBoundaryColoring, "boundary too short");
    require(col(0) == Red, MapError::BadBoundaryColoring, "root tail must be red");
    require(col(1) == Blue, MapError::BadBoundaryColoring, "root head must be blue");
    std::int32_t i = 2;
    while (i < len && col(i) == Blue) ++i;
    std::int32_t r = i - 2;
    for (; i < len; ++i)
        require(col(i) == Red, MapError::BadBoundaryColoring,
                "boundary is not a red arc and a blue arc");
    return {len - 2 - r, r};
}

TriMap degenerate_map() {
    TriMap m;
    m.twin = {1, 0};
    m.next = {0, 1};
    m.origin = {0, 1};
    m.color = {Red, Blue};
    m.root = 0;
    return m;
}

TriMap reroot(const TriMap& m, std::int32_t new_root) {
    std::vector<std::uint8_t> outer = outer_side_mask(m);
    require(outer[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(new_root)])],
            MapError::BadRoot, "new root is not an inner boundary side");
    TriMap out = m;
    out.root = new_root;
    return out;
}

TriMap canonical_form(const TriMap& m) {
    std::size_t H = m.twin.size();
    std::vector<std::int32_t> id(H, -1), order;
    order.reserve(H);
    id[static_cast<std::size_t>(m.root)] = 0;
    order.push_back(m.root);
    for (std::size_t q = 0; q < order.size(); ++q) {
        std::int32_t h = order[q];
        for (std::int32_t nh :
             {m.twin[static_cast<std::size_t>(h)], m.next[static_cast<std::size_t>(h)]})
            if (id[static_cast<std::size_t>(nh)] == -1) {
                id[static_cast<std::size_t>(nh)] = static_cast<std::int32_t>(order.size());
                order.push_back(nh);
            }
    }
    TriMap out;
    out.twin.resize(H);
    out.next.resize(H);
    out.origin.resize(H);
    std::vector<std::int32_t> vid(m.color.size(), -1);
    std::int32_t nv = 0;
    for (std::int32_t h : order) {
        std::int32_t v = m.origin[static_cast<std::size_t>(h)];
        if (vid[static_cast<std::size_t>(v)] == -1) vid[static_cast<std::size_t>(v)] = nv++;
    }
    out.color.resize(static_cast<std::size_t>(nv));
    for (std::size_t h = 0; h < H; ++h) {
        std::size_t nh = static_cast<std::size_t>(id[h]);
        out.twin[nh] = id[static_cast<std::size_t>(m.twin[h])];
        out.next[nh] = id[static_cast<std::size_t>(m.next[h])];
        out.origin[nh] = vid[static_cast<std::size_t>(m.origin[h])];
        out.color[static_cast<std::size_t>(out.origin[nh])] = m.color[static_cast<std::size_t>(m.origin[h])];
    }
    out.root = 0;
    return out;
}

void dichromatic_rooting(TriMap& m) {
    std::vector<std::int32_t> cycle = boundary_cycle(m);
    bool all_red = true, all_blue = true;
    for (std::int32_t h : cycle) {
        std::uint8_t c = m.color[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(h)])];
        all_red &= c == Red;
        all_blue &= c == Blue;
    }
    require(all_red || all_blue, MapError::BadBoundaryColoring, "boundary is not mono");
    if (all_red)
        m.color[static_cast<std::size_t>(
            m.origin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(m.root)])])] = Blue;
    else
        m.color[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(m.root)])] = Red;
}

void mono_rooting(TriMap& m, Color boundary_color) {
    auto [l, r] = boundary_signature(m);
    if (boundary_color == Red) {
        require(r == 0, MapError::BadBoundaryColoring, "head is not the only blue vertex");
        m.color[static_cast<std::size_t>(
            m.origin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(m.root)])])] = Red;
    } else {
        require(l == 0, MapError::BadBoundaryColoring, "tail is not the only red vertex");
        m.color[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(m.root)])] = Blue;
    }
}

std::vector<std::vector<std::int32_t>> two_connected_components(const TriMap& m) {
    std::int32_t nv = m.n_vertices();
    // Outgoing half-edges per vertex.
    std::vector<std::vector<std::int32_t>> out_he(static_cast<std::size_t>(nv));
    for (std::int32_t h = 0; h < m.n_half_edges(); ++h)
        out_he[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(h)])].push_back(h);

    std::vector<std::int32_t> num(static_cast<std::size_t>(nv), -1),
        low(static_cast<std::size_t>(nv), 0);
    std::vector<std::int32_t> edge_stack;
    std::vector<std::vector<std::int32_t>> blocks;
    std::int32_t counter = 0;

    // Iterative depth-first search; frame = (vertex, index into out_he, half-edge used to enter).
    struct Frame {
        std::int32_t v;
        std::size_t i;
        std::int32_t in_he;
    };
    for (std::int32_t start = 0; start < nv; ++start) {
        if (num[static_cast<std::size_t>(start)] != -1) continue;
        std::vector<Frame> stack{{start, 0, -1}};
        num[static_cast<std::size_t>(start)] = low[static_cast<std::size_t>(start)] = counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.i < out_he[static_cast<std::size_t>(f.v)].size()) {
                std::int32_t h = out_he[static_cast<std::size_t>(f.v)][f.i++];
                if (f.in_he != -1 && h == m.twin[static_cast<std::size_t>(f.in_he)])
                    continue;  // do not reuse the entering edge instance
                std::int32_t w = m.origin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(h)])];
                std::int32_t eid = std::min(h, m.twin[static_cast<std::size_t>(h)]);
                if (num[static_cast<std::size_t>(w)] == -1) {
                    edge_stack.push_back(eid);
                    num[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = counter++;
                    stack.push_back({w, 0, h});
                } else if (num[static_cast<std::size_t>(w)] < num[static_cast<std::size_t>(f.v)]) {
                    edge_stack.push_back(eid);
                    low[static_cast<std::size_t>(f.v)] =
                        std::min(low[static_cast<std::size_t>(f.v)], num[static_cast<std::size_t>(w)]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) continue;
                std::int32_t parent = stack.back().v;
                low[static_cast<std::size_t>(parent)] = std::min(
                    low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
                if (low[static_cast<std::size_t>(done.v)] >= num[static_cast<std::size_t>(parent)]) {
                    // parent is a cut vertex (or the root of this search): pop one block.
                    std::int32_t enter_eid =
                        std::min(done.in_he, m.twin[static_cast<std::size_t>(done.in_he)]);
                    std::vector<std::int32_t> block;
                    while (!edge_stack.empty()) {
                        std::int32_t e = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(e);
                        if (e == enter_eid) break;
                    }
                    std::sort(block.begin(), block.end());
                    blocks.push_back(std::move(block));
                }
            }
        }
    }
    std::sort(blocks.begin(), blocks.end());
    return blocks;
}

std::vector<std::int32_t> bfs_distances(const TriMap& m, std::int32_t src) {
    std::vector<std::int32_t> dist(m.color.size(), -1);
    std::vector<std::vector<std::int32_t>> adj(m.color.size());
    for (std::int32_t h = 0; h < m.n_half_edges(); ++h)
        adj[static_cast<std::size_t>(m.origin[static_cast<std::size_t>(h)])].push_back(
            m.origin[static_cast<std::size_t>(m.twin[static_cast<std::size_t>(h)])]);
    std::vector<std::int32_t> queue{src};
    dist[static_cast<std::size_t>(src)] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        std::int32_t v = queue[q];
        for (std::int32_t w : adj[static_cast<std::size_t>(v)])
            if (dist[static_cast<std::size_t>(w)] == -1) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

}  // namespace percmap
