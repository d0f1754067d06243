#pragma once

// Ring presentations of H(L), QH(L), H(M) and QH(M) for a Fano Delzant
// polytope, Lagrangian Seidel elements and the certificates built on them.
//
// Internally a presentation lives in F₂[X_1..X_d, t] with t = q^{-1}; for the
// ambient manifold the same polynomials are read with Y_i, Q and every
// codimension doubled.

#include "toricqh/polytope.hpp"
#include "toricqh/quotient.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace toricqh {

enum class Space { L, M };
enum class Flavor { Classical, Quantum };

std::string_view to_string(Space s);
std::string_view to_string(Flavor f);

struct Presentation {
    Space space = Space::L;
    Flavor flavor = Flavor::Quantum;
    std::vector<std::string> generators;  // X1..Xd or Y1..Yd
    std::vector<int> generator_cods;      // 1 for L, 2 for M
    std::vector<F2Poly> linear_relations;
    std::vector<F2Poly> sr_relations;
    int grading_unit = 1;                 // codimension degree of q (resp. Q)

    std::size_t nvars() const noexcept { return generators.size(); }
    std::string unit_name() const { return space == Space::L ? "q" : "Q"; }
    std::vector<F2Poly> relations() const;
};

/// One relation Σ_k <e_m^*, v_k> X_k (mod 2) per coordinate m = 1..n.
std::vector<F2Poly> linear_relations(const Polytope& p);
/// ∏_{i∈I} X_i for each primitive collection I.
std::vector<F2Poly> classical_sr(const Polytope& p, const std::vector<IndexSet>& primitives);
/// ∏_{i∈I} X_i + ∏_{j∉I} X_j^{|a_j|}·t^{m_I} for each primitive collection.
std::vector<F2Poly> quantum_sr(const Polytope& p, const std::vector<PrimitiveCollection>& collections);

class Ring {
public:
    /// Validates the polytope (Delzant, and Fano for the quantum flavor) and
    /// builds the quotient. Throws the corresponding Error on rejection.
    Ring(const Polytope& p, Space space, Flavor flavor);

    const Polytope& polytope() const noexcept { return polytope_; }
    const Presentation& presentation() const noexcept { return presentation_; }
    const QuotientRing& quotient() const noexcept { return quotient_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<IndexSet>& primitive_sets() const noexcept { return primitive_sets_; }
    /// Batyrev data; empty for the classical flavor.
    const std::vector<PrimitiveCollection>& collections() const noexcept { return collections_; }

    Space space() const noexcept { return presentation_.space; }
    Flavor flavor() const noexcept { return presentation_.flavor; }
    std::size_t nvars() const noexcept { return presentation_.nvars(); }

    /// Display index (0-based) for each variable: the least index in its class
    /// modulo linear relations when the variable survives reduction, -1 when it
    /// is eliminated.
    const std::vector<int>& display_index() const noexcept { return display_; }

    /// Element as text, e.g. "X1*X4 + L*q^-2" (fundamental class "L", or "1"
    /// for M).
    std::string format(const QHElement& e) const;
    /// Polynomial in the standard variables with survivors renamed.
    std::string format_reduced(const F2Poly& f) const;

    /// X_j (0-based j) as an element.
    QHElement generator(std::size_t j) const;
    QHElement fundamental_class() const { return quotient_.one(); }

private:
    Polytope polytope_;
    std::vector<Vertex> vertices_;
    std::vector<IndexSet> primitive_sets_;
    std::vector<PrimitiveCollection> collections_;
    Presentation presentation_;
    QuotientRing quotient_;
    std::vector<int> display_;
};

Ring build_ring(const Polytope& p, Space space, Flavor flavor);

QHElement multiply(const Ring& ring, const QHElement& a, const QHElement& b);
QHElement power(const Ring& ring, const QHElement& a, unsigned k);

/// Inverse via the multiplication matrix over F₂[q]: a is a unit iff its
/// determinant is a monomial. Throws NotInvertible otherwise.
QHElement invert(const Ring& ring, const QHElement& a);

struct SeidelElement {
    QHElement element;
    IntVec combination;  // exponent of each facet half-turn
};

/// S_L(Λ_j^{1/2}) = X_j ⊗ q for facet j (0-based). Requires the quantum
/// flavor; the result is checked to be invertible.
SeidelElement seidel_facet(const Ring& ring, std::size_t j);
/// ∏_j S_L(Λ_j^{1/2})^{c_j}, negative exponents through inverses.
SeidelElement seidel_composite(const Ring& ring, const IntVec& c);

/// ∏_{i∈I} (X_i q) equals ∏_{j∉I} (X_j q)^{|a_j|}.
bool verify_seidel_relation(const Ring& ring, const PrimitiveCollection& pc);

/// True iff both presentations generate the same t-saturated ideal under
/// X_i ↦ Y_i, q ↦ Q, with M codimensions exactly twice those of L.
bool verify_psi(const Presentation& l, const Presentation& m);

struct UniruledCertificate {
    SeidelElement witness;
    std::optional<QHElement> inverse;
    LaurentF2 fundamental_coefficient;
    int min_quantum_degree = 0;
    bool uniruled = false;
    std::string reason;
};

/// Witness S_L(Λ_1^{1/2}): an invertible element with no [L] term rules out
/// the non-uniruled case (minimal quantum degree >= 2 required).
UniruledCertificate uniruled_certificate(const Ring& ring);

struct BettiCrosscheck {
    IntVec xi;
    std::vector<int> betti;      // b_0..b_n from Morse indices
    std::vector<int> hilbert_l;  // classical L quotient, by codimension
    std::vector<int> hilbert_m;  // classical M quotient, by codimension
};

/// Morse-index histogram versus classical Hilbert functions. Throws
/// CrosscheckFailed (message carries both vectors) on mismatch.
BettiCrosscheck betti_crosscheck(const Polytope& p);

}  // namespace toricqh
