#pragma once

// Delzant polytopes Δ = {x : <x, v_i> >= a_i} with inward primitive normals
// v_i and exact rational offsets a_i measured in units of π. Facet indices are
// 0-based in this API; reports and the CLI print them 1-based.

#include "toricqh/errors.hpp"
#include "toricqh/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace toricqh {

enum class Convention { Inward, Outward };

using IndexSet = std::vector<int>;  // sorted, 0-based facet indices

struct Facet {
    IntVec normal;
    Rat offset;

    friend bool operator==(const Facet&, const Facet&) = default;
};

class Polytope {
public:
    Polytope() = default;

    /// Normals and offsets are read in `convention`; outward data
    /// (<x, v> <= b) is negated into the internal inward form
    /// (<x, -v> >= -b). Throws RejectMalformed on shape errors,
    /// non-primitive normals or fewer than dim+1 facets.
    Polytope(std::string name, int dim, const std::vector<Facet>& facets,
             Convention convention = Convention::Inward);

    const std::string& name() const noexcept { return name_; }
    int dim() const noexcept { return dim_; }
    int facet_count() const noexcept { return static_cast<int>(facets_.size()); }
    const std::vector<Facet>& facets() const noexcept { return facets_; }
    const Facet& facet(int i) const { return facets_.at(static_cast<std::size_t>(i)); }

    /// d×n matrix whose rows are the inward normals.
    IntMat normal_matrix() const;

    /// Facet k of the result is facet perm[k] of this polytope.
    Polytope permuted(const std::vector<int>& perm) const;

    friend bool operator==(const Polytope&, const Polytope&) = default;

private:
    std::string name_;
    int dim_ = 0;
    std::vector<Facet> facets_;
};

struct Vertex {
    RatVec coords;
    IndexSet tight;
    /// One primitive direction per tight facet (same order): w_j leaves facet
    /// tight[j] into the interior and stays on the other tight facets. Only
    /// filled for simple vertices.
    std::vector<IntVec> edge_dirs;
    /// |det| of the tight normals for simple vertices, 0 otherwise.
    Integer normal_det;

    bool simple(int dim) const { return static_cast<int>(tight.size()) == dim; }
};

struct DelzantIssue {
    ErrorCode code;
    std::string message;
};

struct DelzantReport {
    std::vector<Vertex> vertices;
    std::vector<DelzantIssue> issues;

    bool passed() const { return issues.empty(); }
    /// Throws the first issue as an Error; no-op when the report passed.
    void raise() const;
};

/// Every n-subset of facets with invertible normal matrix is solved; a
/// solution is kept iff it satisfies all inequalities. Vertices come back in
/// lexicographic order of their coordinates.
std::vector<Vertex> enumerate_vertices(const Polytope& p);

/// Simplicity, unimodularity, nonemptiness, boundedness and irredundancy.
DelzantReport validate_delzant(const Polytope& p);

/// Validated vertices or throws the first Delzant failure.
std::vector<Vertex> delzant_vertices(const Polytope& p);

/// F_I ≠ ∅. Exact for compact simple polytopes, where every nonempty face
/// contains a vertex.
bool face_nonempty(const std::vector<Vertex>& vertices, const IndexSet& face);

/// Inclusion-minimal index sets with empty face, sorted lexicographically.
std::vector<IndexSet> primitive_collections(const Polytope& p, const std::vector<Vertex>& vertices);

/// The unique integer relation Σ a_k v_k = 0 with a_k = 1 on `primitive` and
/// a_k <= 0 elsewhere, found by exhaustive search of the kernel lattice. The
/// search region is cut by Fano positivity (Σ_{k∉I} |a_k| <= |I| - 1).
/// Throws NoBatyrevVector or NonUniqueBatyrevVector.
IntVec batyrev_vector(const Polytope& p, const IndexSet& primitive);

/// m_I = |I| - Σ_{k∉I} |a_k|; throws FanoViolation unless m_I >= 1.
int quantum_degree(const IndexSet& primitive, const IntVec& batyrev);

struct PrimitiveCollection {
    IndexSet indices;
    IntVec batyrev;
    int degree = 0;
};

std::vector<PrimitiveCollection> primitive_data(const Polytope& p, const std::vector<Vertex>& vertices);

/// Number of edge directions at v pairing negatively with xi. Throws
/// NonGenericXi when some pairing vanishes.
int morse_index(const Vertex& v, const IntVec& xi);

/// b_k = number of vertices of Morse index k, k = 0..n.
std::vector<int> betti_numbers(const Polytope& p, const std::vector<Vertex>& vertices, const IntVec& xi);

/// xi = (1, B, B^2, ...) with B = 1 + max |edge entry|; generic for every
/// edge direction of the given vertices.
IntVec generic_xi(const Polytope& p, const std::vector<Vertex>& vertices);

}  // namespace toricqh
