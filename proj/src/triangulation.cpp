#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <set>

#include "fourvertex/simplicity.h"

namespace fourvertex {

namespace {

using Edge = std::pair<std::size_t, std::size_t>;

Edge undirected(std::size_t a, std::size_t b) { return a < b ? Edge{a, b} : Edge{b, a}; }

bool chord_blocked(const SphericalPolygon& q, std::size_t a, std::size_t b, const std::vector<Edge>& edges,
                   const Tolerances& tol) {
    for (const auto& [c, d] : edges) {
        if (c == a || c == b || d == a || d == b) continue;
        try {
            if (minor_arcs_cross(q.vertices()[a], q.vertices()[b], q.vertices()[c], q.vertices()[d], tol)) return true;
        } catch (const GeometryError&) {
            return true;
        }
    }
    return false;
}

// Neighbours of v sorted counterclockwise as seen from outside the sphere.
std::vector<std::size_t> ccw_neighbours(const SphericalPolygon& q, std::size_t v, std::vector<std::size_t> nbrs) {
    const Vec3& c = q.vertices()[v];
    auto tangent = [&](std::size_t w) {
        const Vec3& p = q.vertices()[w];
        return p - c * dot(p, c);
    };
    const Vec3 e1 = normalized(tangent(nbrs.front()));
    const Vec3 e2 = cross(c, e1);
    std::vector<std::pair<double, std::size_t>> keyed;
    for (std::size_t w : nbrs) {
        const Vec3 t = tangent(w);
        keyed.emplace_back(std::atan2(dot(t, e2), dot(t, e1)), w);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::size_t> out;
    for (const auto& kw : keyed) out.push_back(kw.second);
    return out;
}

}  // namespace

double spherical_triangle_area(const Vec3& a, const Vec3& b, const Vec3& c) {
    const double num = std::abs(det3(a, b, c));
    const double den = 1.0 + dot(a, b) + dot(b, c) + dot(c, a);
    return 2.0 * std::atan2(num, den);
}

SphericalTriangulation triangulate_regions(const SphericalPolygon& q, const Tolerances& tol) {
    const std::size_t n = q.size();
    if (n < 4) fail(ErrorCode::TooFewPoints, "triangulation needs n >= 4");
    const auto& u = q.vertices();

    std::vector<Edge> edges;
    std::set<Edge> polygon_edges;
    for (std::size_t i = 0; i < n; ++i) {
        edges.emplace_back(i, cyc(static_cast<std::ptrdiff_t>(i) + 1, n));
        polygon_edges.insert(undirected(i, cyc(static_cast<std::ptrdiff_t>(i) + 1, n)));
    }
    SphericalTriangulation out;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a + 1; b < n; ++b) {
            if (polygon_edges.count({a, b}) != 0) continue;
            if (parallel(u[a], u[b], tol.degeneracy)) continue;
            if (chord_blocked(q, a, b, edges, tol)) continue;
            edges.emplace_back(a, b);
            out.chords.emplace_back(a, b);
        }
    }
    if (edges.size() != 3 * n - 6) {
        fail(ErrorCode::TriangulationFailed,
             "greedy chords gave " + std::to_string(edges.size()) + " edges, expected " + std::to_string(3 * n - 6));
    }

    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (std::size_t v = 0; v < n; ++v) adj[v] = ccw_neighbours(q, v, adj[v]);

    auto prev_ccw = [&](std::size_t v, std::size_t w) {
        const auto& ring = adj[v];
        const auto it = std::find(ring.begin(), ring.end(), w);
        const auto k = static_cast<std::ptrdiff_t>(it - ring.begin());
        return ring[cyc(k - 1, ring.size())];
    };

    std::set<Edge> used;
    std::map<Edge, std::vector<std::size_t>> faces_of_edge;
    std::vector<int> region;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b : adj[a]) {
            if (used.count({a, b}) != 0) continue;
            std::array<std::size_t, 3> tri{};
            std::size_t x = a;
            std::size_t y = b;
            std::size_t len = 0;
            int tag = 0;
            do {
                if (len == 3) fail(ErrorCode::TriangulationFailed, "face with more than three sides");
                used.insert({x, y});
                tri[len++] = x;
                int side = 0;
                if (y == cyc(static_cast<std::ptrdiff_t>(x) + 1, n)) side = 1;
                else if (x == cyc(static_cast<std::ptrdiff_t>(y) + 1, n)) side = 2;
                if (side != 0) {
                    if (tag != 0 && tag != side) fail(ErrorCode::TriangulationFailed, "face touches both regions");
                    tag = side;
                }
                const std::size_t z = prev_ccw(y, x);
                x = y;
                y = z;
            } while (x != a || y != b);
            if (len != 3) fail(ErrorCode::TriangulationFailed, "degenerate face");
            const std::size_t f = out.triangles.size();
            out.triangles.push_back(tri);
            region.push_back(tag);
            for (int k = 0; k < 3; ++k) faces_of_edge[undirected(tri[k], tri[(k + 1) % 3])].push_back(f);
        }
    }
    if (out.triangles.size() != 2 * n - 4) fail(ErrorCode::TriangulationFailed, "unexpected face count");

    std::queue<std::size_t> pending;
    for (std::size_t f = 0; f < region.size(); ++f) {
        if (region[f] != 0) pending.push(f);
    }
    while (!pending.empty()) {
        const std::size_t f = pending.front();
        pending.pop();
        const auto& tri = out.triangles[f];
        for (int k = 0; k < 3; ++k) {
            const Edge e = undirected(tri[k], tri[(k + 1) % 3]);
            if (polygon_edges.count(e) != 0) continue;
            for (std::size_t g : faces_of_edge[e]) {
                if (g == f) continue;
                if (region[g] == 0) {
                    region[g] = region[f];
                    pending.push(g);
                } else if (region[g] != region[f]) {
                    fail(ErrorCode::TriangulationFailed, "chord separates the two regions");
                }
            }
        }
    }
    for (int r : region) {
        if (r == 0) fail(ErrorCode::TriangulationFailed, "untagged face");
    }
    out.region = std::move(region);
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> region_adjacency(const SphericalTriangulation& t, int region,
                                                       std::vector<std::size_t>& members) {
    std::map<Edge, std::vector<std::size_t>> faces_of_edge;
    std::set<Edge> chords;
    for (const auto& [a, b] : t.chords) chords.insert(undirected(a, b));
    std::map<std::size_t, std::size_t> local;
    for (std::size_t f = 0; f < t.triangles.size(); ++f) {
        if (t.region[f] != region) continue;
        local[f] = members.size();
        members.push_back(f);
        const auto& tri = t.triangles[f];
        for (int k = 0; k < 3; ++k) {
            const Edge e = undirected(tri[k], tri[(k + 1) % 3]);
            if (chords.count(e) != 0) faces_of_edge[e].push_back(f);
        }
    }
    std::vector<std::vector<std::size_t>> adj(members.size());
    for (const auto& [e, fs] : faces_of_edge) {
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = i + 1; j < fs.size(); ++j) {
                adj[local[fs[i]]].push_back(local[fs[j]]);
                adj[local[fs[j]]].push_back(local[fs[i]]);
            }
        }
    }
    return adj;
}

}  // namespace

DualGraphReport dual_graph(const SphericalTriangulation& t, int region) {
    std::vector<std::size_t> members;
    const auto adj = region_adjacency(t, region, members);
    DualGraphReport r;
    r.nodes = members.size();
    for (const auto& nb : adj) {
        r.edges += nb.size();
        if (nb.size() <= 1) ++r.leaves;
    }
    r.edges /= 2;
    if (r.nodes == 0) return r;
    std::vector<bool> seen(r.nodes, false);
    std::queue<std::size_t> pending;
    pending.push(0);
    seen[0] = true;
    std::size_t reached = 1;
    while (!pending.empty()) {
        const std::size_t v = pending.front();
        pending.pop();
        for (std::size_t w : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            ++reached;
            pending.push(w);
        }
    }
    r.connected = reached == r.nodes;
    return r;
}

std::vector<std::size_t> ear_vertices(const SphericalTriangulation& t, int region) {
    std::vector<std::size_t> members;
    const auto adj = region_adjacency(t, region, members);
    std::set<Edge> chords;
    for (const auto& [a, b] : t.chords) chords.insert(undirected(a, b));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < members.size(); ++k) {
        if (adj[k].size() != 1) continue;
        const auto& tri = t.triangles[members[k]];
        for (int m = 0; m < 3; ++m) {
            if (chords.count(undirected(tri[(m + 1) % 3], tri[(m + 2) % 3])) != 0) out.push_back(tri[m]);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace fourvertex
