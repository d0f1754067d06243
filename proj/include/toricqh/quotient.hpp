#pragma once

// Finite-rank quotients F₂[X_1..X_d][q, q^{-1}] / I for cod-homogeneous I.
//
// The working representation is the dehomogenized ring (t = 1): a reduced
// Gröbner basis in the X-variables and its finite set of standard monomials.
// Because I is homogeneous, the q-power of each term of a normal form is
// recovered exactly from its degree deficit (see rehomogenize). The
// t-saturated homogeneous basis is kept alongside as an independent oracle.

#include "toricqh/f2poly.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace toricqh {

/// Laurent polynomial in q over F₂, stored as its set of exponents.
class LaurentF2 {
public:
    LaurentF2() = default;
    LaurentF2(std::initializer_list<int> exps);

    static LaurentF2 monomial(int e) { return LaurentF2{e}; }

    bool is_zero() const noexcept { return exps_.empty(); }
    const std::set<int>& exponents() const noexcept { return exps_; }
    void toggle(int e);
    LaurentF2 shifted(int k) const;
    bool is_unit() const { return exps_.size() == 1; }

    LaurentF2& operator+=(const LaurentF2& other);
    friend LaurentF2 operator+(LaurentF2 a, const LaurentF2& b) { return a += b; }
    friend LaurentF2 operator*(const LaurentF2& a, const LaurentF2& b);
    friend bool operator==(const LaurentF2&, const LaurentF2&) = default;

private:
    std::set<int> exps_;
};

/// Element of the quotient: standard monomial -> Laurent coefficient.
/// Monomials are pure X-monomials (t = 0). Zero coefficients are never stored.
class QHElement {
public:
    using Map = std::map<Monomial, LaurentF2, MonomialLess>;

    QHElement() = default;
    explicit QHElement(Map coeffs);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    const Map& coeffs() const noexcept { return coeffs_; }
    LaurentF2 coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, int q_exp);
    QHElement& operator+=(const QHElement& other);
    friend QHElement operator+(QHElement a, const QHElement& b) { return a += b; }
    QHElement shifted(int k) const;  // multiply by q^k

    friend bool operator==(const QHElement&, const QHElement&) = default;

private:
    Map coeffs_;
};

class QuotientRing {
public:
    /// `relations` must be homogeneous in X_1..X_nvars, t. `weight` is the
    /// codimension degree of each variable (1 for L, 2 for M).
    QuotientRing(const std::vector<F2Poly>& relations, std::size_t nvars, int weight = 1);

    std::size_t nvars() const noexcept { return nvars_; }
    int weight() const noexcept { return weight_; }

    /// Reduced basis of the t-saturated homogeneous ideal.
    const GroebnerBasis& homogeneous_basis() const noexcept { return homogeneous_; }
    /// Its dehomogenization, a Gröbner basis of the t = 1 ideal.
    const std::vector<F2Poly>& basis() const noexcept { return dehomogenized_; }

    /// Standard monomials sorted by (cod, monomial order).
    const std::vector<Monomial>& standard_basis() const noexcept { return standard_; }
    std::size_t dim() const noexcept { return standard_.size(); }
    std::optional<std::size_t> index_of(const Monomial& m) const;
    int cod(const Monomial& m) const { return weight_ * m.x_degree(); }

    /// dims[c] = number of standard monomials of codimension c.
    std::vector<int> hilbert_function() const;

    /// Remainder of f (t set to 1) modulo the dehomogenized basis.
    F2Poly normal_form(const F2Poly& f) const;
    /// Remainder of f modulo the homogeneous saturated basis (t kept).
    F2Poly homogeneous_normal_form(const F2Poly& f) const;

    /// Assigns each standard monomial m of f the q-exponent
    /// deg(m) - source_degree (unweighted degrees).
    QHElement rehomogenize(const F2Poly& f, int source_degree) const;

    /// Class of X^m·t^{m.t} as an element (X-monomial reduced, t ↦ q^{-1}).
    QHElement element_of(const Monomial& m) const;
    QHElement element_of(const F2Poly& f) const;
    /// Oracle route: homogeneous normal form with t^k read as q^{-k}.
    QHElement element_of_homogeneous(const F2Poly& f) const;

    QHElement one() const;
    QHElement multiply(const QHElement& a, const QHElement& b) const;

    /// Degree (in units of q) shared by all terms: deg(m) - e for each
    /// monomial m with exponent e. nullopt if not homogeneous; 0 for zero.
    std::optional<int> homogeneous_degree(const QHElement& a) const;

private:
    std::size_t nvars_;
    int weight_;
    GroebnerBasis homogeneous_;
    std::vector<F2Poly> dehomogenized_;
    std::vector<Monomial> standard_;
    std::vector<std::vector<QHElement>> table_;  // products of standard monomials
};

}  // namespace toricqh
