#ifndef INDECOMP_HOMOLOGY_HPP
#define INDECOMP_HOMOLOGY_HPP

#include <cstdint>
#include <vector>

#include "indecomp/complex.hpp"

namespace indecomp {

/// Dense integer matrix.  All arithmetic on these is overflow-checked;
/// overflow raises std::overflow_error rather than wrapping.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::int64_t> a;

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    std::int64_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::int64_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

/// Invariant factors d1 | d2 | ... (all positive); their count is the
/// rank.  Exact integer arithmetic throughout.
std::vector<std::int64_t> smith_normal_form(IntMatrix m);

int integer_rank(IntMatrix m);

/// Boundary matrices of the alternating-sum boundary, one per dimension
/// d = 0..dim; entry [d] maps d-faces to (d-1)-faces.  Faces are indexed
/// in canonical face order within each dimension.  ∂_0 is the
/// augmentation row mapping vertices to the empty face.
std::vector<IntMatrix> boundary_matrices(const SimplicialComplex& c);

/// Reduced integral homology, one Betti number and one torsion list per
/// dimension -1..top_dimension.
struct HomologyProfile {
    int top_dimension = -1;
    std::vector<int> betti;                                // index 0 <-> dim -1
    std::vector<std::vector<std::int64_t>> torsion;        // same indexing

    int betti_at(int d) const {
        int i = d + 1;
        if (i < 0 || i >= static_cast<int>(betti.size())) return 0;
        return betti[static_cast<std::size_t>(i)];
    }
    std::vector<std::int64_t> torsion_at(int d) const {
        int i = d + 1;
        if (i < 0 || i >= static_cast<int>(torsion.size())) return {};
        return torsion[static_cast<std::size_t>(i)];
    }
    bool is_trivial() const;

    /// Semantic equality: profiles padded with zeros compare equal.
    bool operator==(const HomologyProfile& o) const;
};

/// Exact reduced homology over the integers.  Rejects the void complex.
HomologyProfile reduced_homology(const SimplicialComplex& c);

struct CohenMacaulayResult {
    bool cm = false;
    enum class Failure { none, impure, homology } failure = Failure::none;
    // failure == impure: two facets of different dimensions.
    Face impure_a, impure_b;
    // failure == homology: link of witness_face has nonzero reduced
    // homology in witness_dim < dim(link).
    Face witness_face;
    int witness_dim = 0;
};

/// Cohen-Macaulay over the integers (hence over every field): purity,
/// then vanishing reduced homology below dim(link F) for every face F
/// including the empty one.
CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& c);

struct SequentiallyCmResult {
    bool scm = false;
    int failing_skeleton = -1;
    CohenMacaulayResult detail;
};

/// Runs is_cohen_macaulay on every pure i-skeleton, i = 0..dimension().
SequentiallyCmResult is_sequentially_cohen_macaulay(const SimplicialComplex& c);

/// True iff the reduced homology of I(G) vanishes (Betti and torsion) in
/// every dimension j < i(G) - 1, where i is the independent domination
/// number.
bool homology_vanishing_bound_check(const Graph& g);

}

#endif
