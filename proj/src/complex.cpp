#include "indecomp/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace indecomp {

namespace {

void check_universe(int universe) {
    if (universe < 0 || universe > kMaxVertices)
        throw std::invalid_argument("complex: universe must be within [0, " +
                                    std::to_string(kMaxVertices) + "]");
}

}

SimplicialComplex SimplicialComplex::from_facets(int universe, std::vector<Face> candidates) {
    check_universe(universe);
    Face full = Face::full(universe);
    for (Face f : candidates)
        if (!f.subset_of(full))
            throw std::out_of_range("complex: face " + f.to_string() + " exceeds universe " +
                                    std::to_string(universe));
    std::sort(candidates.begin(), candidates.end(), face_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::vector<Face> maximal;
    for (Face f : candidates) {
        bool dominated = false;
        for (Face g : candidates)
            if (f != g && f.subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }
    return SimplicialComplex(universe, std::move(maximal));
}

SimplicialComplex SimplicialComplex::void_complex(int universe) {
    check_universe(universe);
    return SimplicialComplex(universe, {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(int universe) {
    check_universe(universe);
    return SimplicialComplex(universe, {Face{}});
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int best = -1;
    for (Face f : facets_) best = std::max(best, f.size() - 1);
    return best;
}

bool SimplicialComplex::is_pure() const {
    for (const Face& f : facets_)
        if (f.size() != facets_.front().size()) return false;
    return true;
}

bool SimplicialComplex::is_face(Face f) const {
    for (Face g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

Face SimplicialComplex::support() const {
    Face s;
    for (Face f : facets_) s |= f;
    return s;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (Face f : facets_) {
        std::uint64_t sub = f.bits();
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f.bits();
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t bits : seen) out.push_back(Face::from_bits(bits));
    std::sort(out.begin(), out.end(), [](Face a, Face b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return face_less(a, b);
    });
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int d) const {
    std::vector<Face> out;
    for (Face f : all_faces())
        if (f.size() == d + 1) out.push_back(f);
    return out;
}

SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.vertex_count(), maximal_independent_sets(g));
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
    if (!c.is_face(f))
        throw std::invalid_argument("link: " + f.to_string() + " is not a face");
    std::vector<Face> out;
    for (Face s : c.facets())
        if (f.subset_of(s)) out.push_back(s - f);
    return SimplicialComplex::from_facets(c.universe(), std::move(out));
}

SimplicialComplex delete_vertex(const SimplicialComplex& c, Vertex v) {
    if (v < 0 || v >= c.universe())
        throw std::out_of_range("delete_vertex: vertex out of universe");
    std::vector<Face> out;
    for (Face s : c.facets()) out.push_back(s.without(v));
    return SimplicialComplex::from_facets(c.universe(), std::move(out));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    int universe = a.universe() + b.universe();
    check_universe(universe);
    std::vector<Face> out;
    for (Face fa : a.facets())
        for (Face fb : b.facets())
            out.push_back(fa | Face::from_bits(fb.bits() << a.universe()));
    return SimplicialComplex::from_facets(universe, std::move(out));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& c, int i) {
    if (i < -1 || i > c.dimension())
        throw std::invalid_argument("pure_skeleton: index " + std::to_string(i) +
                                    " outside [-1, " + std::to_string(c.dimension()) + "]");
    if (i == -1) return SimplicialComplex::irrelevant_complex(c.universe());
    std::unordered_set<std::uint64_t> seen;
    int want = i + 1;
    for (Face f : c.facets()) {
        if (f.size() < want) continue;
        // Gosper's hack over the want-subsets of f, via dense positions.
        std::vector<int> verts = f.to_vector();
        int m = static_cast<int>(verts.size());
        std::uint64_t sub = (std::uint64_t{1} << want) - 1;
        std::uint64_t limit = std::uint64_t{1} << m;
        while (sub < limit) {
            std::uint64_t mask = 0;
            for (int bit = 0; bit < m; ++bit)
                if ((sub >> bit) & 1) mask |= std::uint64_t{1} << verts[static_cast<std::size_t>(bit)];
            seen.insert(mask);
            std::uint64_t lo = sub & (~sub + 1);
            std::uint64_t r = sub + lo;
            sub = (((r ^ sub) >> 2) / lo) | r;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t bits : seen) out.push_back(Face::from_bits(bits));
    return SimplicialComplex::from_facets(c.universe(), std::move(out));
}

std::vector<Face> minimal_nonfaces(const SimplicialComplex& c) {
    if (c.universe() > 22)
        throw std::invalid_argument("minimal_nonfaces: universe capped at 22 vertices");
    std::vector<Face> out;
    std::uint64_t limit = std::uint64_t{1} << c.universe();
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        Face f = Face::from_bits(bits);
        if (c.is_face(f)) continue;
        bool minimal = true;
        for (Vertex v : f)
            if (!c.is_face(f.without(v))) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

FlagResult is_flag(const SimplicialComplex& c) {
    std::vector<Face> nonfaces = minimal_nonfaces(c);
    for (Face f : nonfaces)
        if (f.size() != 2) return {false, std::nullopt};
    Graph g(c.universe());
    for (Face f : nonfaces) {
        auto vs = f.to_vector();
        g.add_edge(vs[0], vs[1]);
    }
    if (independence_complex(g) != c)
        throw std::logic_error("is_flag: recovered graph does not reproduce the complex");
    return {true, std::move(g)};
}

SimplicialComplex delta_complex(int n, int d) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("delta_complex: n must be odd and >= 3");
    int r = (n - 1) / 2;
    if (d <= 0 || d >= r)
        throw std::invalid_argument("delta_complex: d must satisfy 0 < d < (n-1)/2");
    std::vector<Face> facets;
    for (int s = 0; s < n; ++s) {
        Face f;
        for (int k = 0; k <= d; ++k) f = f.with((s + 2 * k) % n);
        facets.push_back(f);
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex moebius_complex(int n) {
    if (n < 4) throw std::invalid_argument("moebius_complex: n must be >= 4");
    std::vector<Face> facets;
    for (int i = 0; i < n; ++i)
        facets.push_back(Face::of({i, (i + 1) % n, (i + 2) % n}));
    return SimplicialComplex::from_facets(n, std::move(facets));
}

SimplicialComplex collapse_free_face(const SimplicialComplex& c, Face f) {
    if (f.empty()) throw std::invalid_argument("collapse_free_face: face must be nonempty");
    if (!c.is_face(f))
        throw std::invalid_argument("collapse_free_face: " + f.to_string() + " is not a face");
    Face carrier;
    int count = 0;
    for (Face s : c.facets())
        if (f.subset_of(s)) {
            carrier = s;
            ++count;
        }
    if (count != 1)
        throw std::invalid_argument("collapse_free_face: " + f.to_string() +
                                    " is contained in " + std::to_string(count) + " facets");
    if (f == carrier)
        throw std::invalid_argument("collapse_free_face: " + f.to_string() + " is itself a facet");
    std::vector<Face> out;
    for (Face s : c.facets())
        if (s != carrier) out.push_back(s);
    for (Vertex v : f) out.push_back(carrier.without(v));
    return SimplicialComplex::from_facets(c.universe(), std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& c, std::span<const int> old_to_new,
                          int new_universe) {
    std::vector<Face> out;
    for (Face s : c.facets()) {
        Face mapped;
        for (Vertex v : s) {
            if (v >= static_cast<int>(old_to_new.size()) || old_to_new[static_cast<std::size_t>(v)] < 0)
                throw std::invalid_argument("relabel: vertex " + std::to_string(v) + " unmapped");
            mapped = mapped.with(old_to_new[static_cast<std::size_t>(v)]);
        }
        if (mapped.size() != s.size())
            throw std::invalid_argument("relabel: map is not injective on the support");
        out.push_back(mapped);
    }
    return SimplicialComplex::from_facets(new_universe, std::move(out));
}

}
