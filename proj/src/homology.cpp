#include "indecomp/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace indecomp {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in exact arithmetic");
    return r;
}

std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) throw std::overflow_error("integer overflow in exact arithmetic");
    return a < 0 ? -a : a;
}

void add_row_multiple(IntMatrix& m, int dst, int src, std::int64_t factor) {
    for (int c = 0; c < m.cols; ++c)
        m.at(dst, c) = checked_add(m.at(dst, c), checked_mul(factor, m.at(src, c)));
}

void add_col_multiple(IntMatrix& m, int dst, int src, std::int64_t factor) {
    for (int r = 0; r < m.rows; ++r)
        m.at(r, dst) = checked_add(m.at(r, dst), checked_mul(factor, m.at(r, src)));
}

void swap_rows(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

// Smallest nonzero |entry| in the submatrix starting at (t, t); returns
// false when the submatrix is zero.
bool locate_pivot(const IntMatrix& m, int t, int& pr, int& pc) {
    std::int64_t best = 0;
    bool found = false;
    for (int r = t; r < m.rows; ++r)
        for (int c = t; c < m.cols; ++c) {
            std::int64_t v = m.at(r, c);
            if (v == 0) continue;
            std::int64_t av = checked_abs(v);
            if (!found || av < best) {
                best = av;
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

bool cross_clear(const IntMatrix& m, int t) {
    for (int r = t + 1; r < m.rows; ++r)
        if (m.at(r, t) != 0) return false;
    for (int c = t + 1; c < m.cols; ++c)
        if (m.at(t, c) != 0) return false;
    return true;
}

}

std::vector<std::int64_t> smith_normal_form(IntMatrix m) {
    int bound = std::min(m.rows, m.cols);
    for (int t = 0; t < bound; ++t) {
        int pr = t, pc = t;
        if (!locate_pivot(m, t, pr, pc)) break;
        swap_rows(m, t, pr);
        swap_cols(m, t, pc);
        while (true) {
            // Reduce the pivot cross; remainders shrink the pivot, so this
            // terminates.
            for (int r = t + 1; r < m.rows; ++r)
                if (m.at(r, t) != 0) add_row_multiple(m, r, t, -(m.at(r, t) / m.at(t, t)));
            for (int c = t + 1; c < m.cols; ++c)
                if (m.at(t, c) != 0) add_col_multiple(m, c, t, -(m.at(t, c) / m.at(t, t)));
            if (!cross_clear(m, t)) {
                int qr = t, qc = t;
                locate_pivot(m, t, qr, qc);
                swap_rows(m, t, qr);
                swap_cols(m, t, qc);
                continue;
            }
            // Pivot divides the rest of the submatrix, or pull a bad entry
            // into the pivot row and continue.
            int br = -1;
            for (int r = t + 1; r < m.rows && br < 0; ++r)
                for (int c = t + 1; c < m.cols; ++c)
                    if (m.at(r, c) % m.at(t, t) != 0) {
                        br = r;
                        break;
                    }
            if (br < 0) break;
            add_row_multiple(m, t, br, 1);
        }
    }
    std::vector<std::int64_t> factors;
    for (int t = 0; t < bound; ++t) {
        std::int64_t v = checked_abs(m.at(t, t));
        if (v != 0) factors.push_back(v);
    }
    std::sort(factors.begin(), factors.end());
    for (std::size_t i = 1; i < factors.size(); ++i)
        if (factors[i] % factors[i - 1] != 0)
            throw std::logic_error("smith_normal_form: divisibility chain violated");
    return factors;
}

int integer_rank(IntMatrix m) {
    return static_cast<int>(smith_normal_form(std::move(m)).size());
}

std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c) {
    if (c.is_void())
        throw std::invalid_argument("boundary_matrices: void complex has no chain complex");
    int dim = c.dimension();
    std::vector<std::vector<Face>> by_dim(static_cast<std::size_t>(dim) + 2);
    for (Face f : c.all_faces()) by_dim[static_cast<std::size_t>(f.size())].push_back(f);

    std::vector<IntMatrix> out;
    for (int d = 0; d <= dim; ++d) {
        const auto& lower = by_dim[static_cast<std::size_t>(d)];
        const auto& upper = by_dim[static_cast<std::size_t>(d) + 1];
        std::unordered_map<std::uint64_t, int> row_of;
        for (std::size_t i = 0; i < lower.size(); ++i)
            row_of[lower[i].bits()] = static_cast<int>(i);
        IntMatrix m(static_cast<int>(lower.size()), static_cast<int>(upper.size()));
        for (std::size_t col = 0; col < upper.size(); ++col) {
            int k = 0;
            for (Vertex v : upper[col]) {
                Face sub = upper[col].without(v);
                m.at(row_of.at(sub.bits()), static_cast<int>(col)) = (k % 2 == 0) ? 1 : -1;
                ++k;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

bool HomologyProfile::is_trivial() const {
    for (int b : betti)
        if (b != 0) return false;
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyProfile::operator==(const HomologyProfile& o) const {
    int hi = std::max(top_dimension, o.top_dimension);
    for (int d = -1; d <= hi; ++d) {
        if (betti_at(d) != o.betti_at(d)) return false;
        if (torsion_at(d) != o.torsion_at(d)) return false;
    }
    return true;
}

HomologyProfile reduced_homology(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("reduced_homology: void complex");
    int dim = c.dimension();
    auto mats = boundary_matrices(c);

    std::vector<int> face_counts(static_cast<std::size_t>(dim) + 2, 0);
    for (Face f : c.all_faces()) ++face_counts[static_cast<std::size_t>(f.size())];

    // rank ∂_d and the invariant factors of ∂_d for d = 0..dim.
    std::vector<std::vector<std::int64_t>> factors(static_cast<std::size_t>(dim) + 1);
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 2, 0);
    for (int d = 0; d <= dim; ++d) {
        factors[static_cast<std::size_t>(d)] = smith_normal_form(mats[static_cast<std::size_t>(d)]);
        ranks[static_cast<std::size_t>(d)] =
            static_cast<int>(factors[static_cast<std::size_t>(d)].size());
    }

    HomologyProfile profile;
    profile.top_dimension = dim;
    profile.betti.assign(static_cast<std::size_t>(dim) + 2, 0);
    profile.torsion.assign(static_cast<std::size_t>(dim) + 2, {});
    for (int d = -1; d <= dim; ++d) {
        int faces = face_counts[static_cast<std::size_t>(d) + 1];
        int rank_d = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
        int rank_up = d + 1 <= dim ? ranks[static_cast<std::size_t>(d) + 1] : 0;
        profile.betti[static_cast<std::size_t>(d) + 1] = faces - rank_d - rank_up;
        if (d + 1 <= dim)
            for (std::int64_t f : factors[static_cast<std::size_t>(d) + 1])
                if (f > 1) profile.torsion[static_cast<std::size_t>(d) + 1].push_back(f);
    }
    return profile;
}

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& c) {
    if (c.is_void()) throw std::invalid_argument("is_cohen_macaulay: void complex");
    CohenMacaulayResult res;
    if (!c.is_pure()) {
        Face lo = c.facets().front(), hi = c.facets().front();
        for (Face f : c.facets()) {
            if (f.size() < lo.size()) lo = f;
            if (f.size() > hi.size()) hi = f;
        }
        res.cm = false;
        res.failure = CohenMacaulayResult::Failure::impure;
        res.impure_a = lo;
        res.impure_b = hi;
        return res;
    }
    for (Face f : c.all_faces()) {
        SimplicialComplex lk = link(c, f);
        int dl = lk.dimension();
        if (dl <= -1) continue;
        HomologyProfile h = reduced_homology(lk);
        for (int i = -1; i < dl; ++i)
            if (h.betti_at(i) != 0 || !h.torsion_at(i).empty()) {
                res.cm = false;
                res.failure = CohenMacaulayResult::Failure::homology;
                res.witness_face = f;
                res.witness_dim = i;
                return res;
            }
    }
    res.cm = true;
    return res;
}

SequentiallyCmResult is_sequentially_cohen_macaulay(const SimplicialComplex& c) {
    if (c.is_void())
        throw std::invalid_argument("is_sequentially_cohen_macaulay: void complex");
    SequentiallyCmResult res;
    for (int i = 0; i <= c.dimension(); ++i) {
        CohenMacaulayResult cm = is_cohen_macaulay(pure_skeleton(c, i));
        if (!cm.cm) {
            res.scm = false;
            res.failing_skeleton = i;
            res.detail = cm;
            return res;
        }
    }
    res.scm = true;
    return res;
}

bool homology_vanishing_bound_check(const Graph& g) {
    int i = independent_domination_number(g);
    HomologyProfile h = reduced_homology(independence_complex(g));
    for (int j = -1; j < i - 1; ++j)
        if (h.betti_at(j) != 0 || !h.torsion_at(j).empty()) return false;
    return true;
}

}
