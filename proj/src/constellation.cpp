#include "minfact/constellation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "minfact/errors.hpp"

namespace minfact {

namespace {

// The one nontrivial cycle of each factor, min point first (the rotation is
// irrelevant to canonicalization, it just makes the input deterministic).
std::vector<std::vector<int>> polygon_cycles(const Factorization& f) {
    std::vector<std::vector<int>> polys;
    for (int j = 0; j < f.type.k(); ++j) {
        std::vector<int> boundary;
        for (auto& cy : cycles(f.factors[j]))
            if (cy.size() > 1) boundary = std::move(cy);
        if (static_cast<int>(boundary.size()) != f.type.a[j])
            throw invariant_error("factor is not a single cycle of the declared length");
        polys.push_back(std::move(boundary));
    }
    return polys;
}

// A partial relabeling: label[point] is the canonical id or -1, `next` the
// first unused id.  Ids are handed out in first-appearance order, so the
// only freedom is each polygon's starting rotation; canonicalization keeps
// every rotation choice that stays lexicographically minimal.
struct LabelState {
    std::vector<int> label;
    int next = 0;
    bool operator<(const LabelState& o) const { return label < o.label; }
    bool operator==(const LabelState& o) const { return label == o.label; }
};

std::vector<int> encode_rotation(LabelState& s, const std::vector<int>& poly, size_t rot) {
    std::vector<int> enc;
    enc.reserve(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        const int v = poly[(rot + i) % poly.size()];
        if (s.label[v] < 0) s.label[v] = s.next++;
        enc.push_back(s.label[v]);
    }
    return enc;
}

}  // namespace

Constellation from_factorization(const Factorization& f) {
    const auto polys = polygon_cycles(f);
    const int n = f.type.n;

    std::vector<LabelState> states;
    Constellation out;
    out.vertex_count = n;

    for (size_t j = 0; j < polys.size(); ++j) {
        const auto& poly = polys[j];
        std::vector<int> best;
        std::vector<LabelState> survivors;
        if (j == 0) {
            // Every rotation of the first polygon encodes as 0,1,...,a1-1;
            // all of them stay candidates until a later polygon separates them.
            for (size_t rot = 0; rot < poly.size(); ++rot) {
                LabelState s{std::vector<int>(n + 1, -1), 0};
                best = encode_rotation(s, poly, rot);
                survivors.push_back(std::move(s));
            }
        } else {
            for (const auto& base : states) {
                for (size_t rot = 0; rot < poly.size(); ++rot) {
                    LabelState s = base;
                    std::vector<int> enc = encode_rotation(s, poly, rot);
                    if (best.empty() || enc < best) {
                        best = std::move(enc);
                        survivors.clear();
                        survivors.push_back(std::move(s));
                    } else if (enc == best) {
                        survivors.push_back(std::move(s));
                    }
                }
            }
        }
        std::sort(survivors.begin(), survivors.end());
        survivors.erase(std::unique(survivors.begin(), survivors.end()), survivors.end());
        states = std::move(survivors);
        out.polygons.push_back({static_cast<int>(j) + 1, std::move(best)});
    }

    if (states.empty() || states.front().next != n)
        throw invariant_error("canonical relabeling did not reach every vertex");
    return out;
}

FaceSet faces(const Factorization& f) {
    FaceSet fs;
    const int n = f.type.n;
    for (auto& cy : cycles(f.sigma)) {
        FaceSet::Face face{static_cast<int>(cy.size()), std::move(cy)};
        // The long block of the canonical target holds point n; that face
        // is the exterior one even when a short cycle ties its length.
        if (std::find(face.essential_vertices.begin(), face.essential_vertices.end(), n) !=
            face.essential_vertices.end())
            fs.exterior_face = std::move(face);
        else
            fs.interior_faces.push_back(std::move(face));
    }
    if (fs.exterior_face.length != f.type.exterior_length())
        throw invariant_error("exterior face length mismatch");
    std::vector<int> lens;
    for (const auto& face : fs.interior_faces) lens.push_back(face.length);
    if (lens != f.type.p)
        throw invariant_error("interior face lengths do not match the type");
    return fs;
}

int euler_genus(const Factorization& f) {
    int total_defect = defect(f.sigma);
    for (const auto& fac : f.factors) total_defect += defect(fac);
    const int chi = 2 * f.type.n - total_defect;
    if ((2 - chi) % 2 != 0)
        throw invariant_error("fractional genus: corrupted factorization");
    const int g = (2 - chi) / 2;
    if (g < 0) throw invariant_error("negative genus: corrupted factorization");
    return g;
}

std::vector<FaceWalk> face_walks(const Factorization& f) {
    const int n = f.type.n;
    const int k = f.type.k();

    std::vector<std::vector<int>> colors_at(n + 1);
    for (int j = 0; j < k; ++j)
        for (int x = 1; x <= n; ++x)
            if (f.factors[j](x) != x) colors_at[x].push_back(j + 1);
    std::vector<Permutation> inv;
    inv.reserve(k);
    for (const auto& fac : f.factors) inv.push_back(fac.inverse());

    // A dart (j, u) stands for the reverse side of the color-j edge
    // u -> sigma_j(u); the walk traverses it from sigma_j(u) to u.  At u the
    // polygons are arranged in increasing color order, so the face continues
    // along the color just below j (cyclically), into that polygon's edge
    // arriving at u.
    auto successor = [&](int j, int u) -> std::pair<int, int> {
        const auto& cols = colors_at[u];
        auto it = std::lower_bound(cols.begin(), cols.end(), j);
        const int jp = it == cols.begin() ? cols.back() : *std::prev(it);
        return {jp, inv[jp - 1](u)};
    };

    std::map<std::pair<int, int>, bool> visited;
    for (int j = 1; j <= k; ++j)
        for (int x = 1; x <= n; ++x)
            if (f.factors[j - 1](x) != x) visited[{j, x}] = false;

    std::vector<FaceWalk> walks;
    for (auto& [start, seen] : visited) {
        if (seen) continue;
        FaceWalk walk;
        std::pair<int, int> d = start;
        do {
            visited[d] = true;
            const auto [j, u] = d;
            walk.edges.push_back({u, f.factors[j - 1](u), j});
            // The walk's color sequence decreases between essential
            // vertices; a wrap (j is u's smallest color) marks u essential.
            if (j == colors_at[u].front()) walk.essential.push_back(u);
            d = successor(j, u);
        } while (d != start);
        walks.push_back(std::move(walk));
    }
    return walks;
}

std::vector<int> exterior_face_colors(const Factorization& f) {
    const auto walks = face_walks(f);
    for (const auto& walk : walks) {
        if (std::find(walk.essential.begin(), walk.essential.end(), f.type.n) ==
            walk.essential.end())
            continue;
        std::set<int> colors;
        for (const auto& e : walk.edges) colors.insert(e.color);
        return {colors.begin(), colors.end()};
    }
    throw invariant_error("no face walk contains the exterior marker point");
}

std::vector<Permutation> exterior_preserving_centralizer(const RamificationType& t) {
    const Permutation sigma = canonical_sigma(t);
    const int first_long = static_cast<int>(t.p_sum()) + 1;
    std::vector<Permutation> out;
    for (auto& g : centralizer_elements(sigma)) {
        bool keeps_block = true;
        for (int x = first_long; x <= t.n && keeps_block; ++x)
            keeps_block = g(x) >= first_long;
        if (keeps_block) out.push_back(std::move(g));
    }

    u128 expected = aut_size(t.p);
    for (int v : t.p) expected = checked_mul(expected, static_cast<u128>(v));
    expected = checked_mul(expected, static_cast<u128>(t.exterior_length()));
    if (static_cast<u128>(out.size()) != expected)
        throw invariant_error("exterior-preserving centralizer of " + describe(t) +
                              " has size " + std::to_string(out.size()) +
                              ", expected " + to_string(expected));
    return out;
}

u128 count_constellations_by_orbits(const RamificationType& t) {
    const auto facts = all_minimal_factorizations(t);
    const auto group = exterior_preserving_centralizer(t);

    auto key_of = [&](const std::vector<Permutation>& factors) {
        std::vector<int> key;
        for (const auto& fac : factors)
            key.insert(key.end(), fac.image().begin(), fac.image().end());
        return key;
    };

    std::map<std::vector<int>, size_t> index;
    for (size_t i = 0; i < facts.size(); ++i) index[key_of(facts[i].factors)] = i;

    std::vector<bool> seen(facts.size(), false);
    u128 orbits = 0;
    for (size_t i = 0; i < facts.size(); ++i) {
        if (seen[i]) continue;
        std::set<size_t> orbit;
        for (const auto& g : group) {
            std::vector<Permutation> conj;
            conj.reserve(facts[i].factors.size());
            for (const auto& fac : facts[i].factors) conj.push_back(conjugate(g, fac));
            const auto it = index.find(key_of(conj));
            if (it == index.end())
                throw invariant_error("conjugation left the factorization set of " +
                                      describe(t));
            orbit.insert(it->second);
        }
        if (orbit.size() != group.size())
            throw invariant_error(
                "conjugation action on " + describe(t) + " is not free: orbit of size " +
                std::to_string(orbit.size()) + " under a group of order " +
                std::to_string(group.size()));
        for (size_t id : orbit) {
            if (seen[id] && id != i)
                throw invariant_error("orbits overlap: grouping is inconsistent");
            seen[id] = true;
        }
        orbits = checked_add(orbits, 1);
    }
    return orbits;
}

nlohmann::ordered_json to_json(const Constellation& c) {
    nlohmann::ordered_json j;
    j["vertices"] = c.vertex_count;
    auto& arr = j["polygons"] = nlohmann::ordered_json::array();
    for (const auto& poly : c.polygons) {
        nlohmann::ordered_json pj;
        pj["color"] = poly.color;
        pj["boundary"] = poly.boundary;
        arr.push_back(std::move(pj));
    }
    return j;
}

}  // namespace minfact
