#pragma once

#include <vector>

#include <json.hpp>

#include "minfact/enumerate.hpp"

namespace minfact {

// The gluing pattern of a factorization: one oriented polygon per color,
// polygons meet at shared vertices.  Vertex names are canonical ids
// 0..vertex_count-1 produced by a relabeling that minimizes the boundary
// encoding, so two factorizations that differ only by renaming the points
// compare equal here.
struct Constellation {
    int vertex_count = 0;
    struct Polygon {
        int color = 0;                // 1-based, one polygon per color
        std::vector<int> boundary;    // canonical vertex ids, cyclic, oriented
        bool operator==(const Polygon& o) const = default;
    };
    std::vector<Polygon> polygons;    // in color order

    bool operator==(const Constellation& o) const = default;
};

Constellation from_factorization(const Factorization& f);

// The faces cut out by the glued polygons, read off the cycles of the
// target permutation: one interior face per short cycle, plus the exterior
// face of the long cycle (the block containing point n).
struct FaceSet {
    struct Face {
        int length = 0;
        std::vector<int> essential_vertices;  // the sigma-cycle, cyclic order
        bool operator==(const Face& o) const = default;
    };
    std::vector<Face> interior_faces;  // lengths match the type's p, in order
    Face exterior_face;                // length n - sum(p)
};

FaceSet faces(const Factorization& f);

// Genus from the total defect of the factors plus target.  For a valid
// minimal factorization this is always 0; a nonzero or fractional result
// means corrupted input, and fractional throws invariant_error.
int euler_genus(const Factorization& f);

// Full boundary walk of one face.  Edges are reported as (from, to, color)
// with from -> to the polygon's own orientation; `essential` lists the
// vertices where the walk's color sequence wraps, in walk order -- these
// are exactly one cycle of the target.
struct FaceWalk {
    struct Edge {
        int from = 0, to = 0, color = 0;
        bool operator==(const Edge& o) const = default;
    };
    std::vector<Edge> edges;
    std::vector<int> essential;
};

// Traces every non-polygon face of the embedded gluing.  Around a vertex
// the polygons touching it are arranged in increasing color order, which
// pins down the whole embedding; the walk only needs that rule.  Returns
// c+1 walks; the one whose essential set contains point n is the exterior.
std::vector<FaceWalk> face_walks(const Factorization& f);

// Colors that own at least one exterior-face edge, ascending.  For every
// valid type (sum(p) < a_j) this must come back as all of 1..k.
std::vector<int> exterior_face_colors(const Factorization& f);

// Elements of the centralizer of the canonical target that map the long
// block {p+1..n} to itself.  This is the group whose conjugation action
// regroups factorizations into constellations; its order is
// p_1...p_c * (n-p) * aut_size(p) exactly.  (When some p_i equals n-p the
// full centralizer is strictly larger, but swapping the long cycle into a
// short one changes which face is exterior, so those elements must not be
// quotiented out.)
std::vector<Permutation> exterior_preserving_centralizer(const RamificationType& t);

// Number of orbits of that conjugation action on all minimal
// factorizations of the type.  Verifies on the way that the action is
// free -- every orbit has size exactly p_1...p_c*(n-p)*aut_size(p) -- and
// throws invariant_error if any orbit comes up short.
u128 count_constellations_by_orbits(const RamificationType& t);

// {"vertices":3,"polygons":[{"color":1,"boundary":[0,1]},...]}
nlohmann::ordered_json to_json(const Constellation& c);

}  // namespace minfact
