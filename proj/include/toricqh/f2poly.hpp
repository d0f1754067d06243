#pragma once

// Polynomials over F₂ in variables X_1..X_d and a grading variable t = q^{-1}.
// Every variable has codimension degree 1, so presentation relations are
// homogeneous and live in an honest polynomial ring. The monomial order is
// graded reverse lexicographic with X_1 > X_2 > ... > X_d > t.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace toricqh {

struct Monomial {
    std::vector<int> x;  // exponents of X_1..X_d
    int t = 0;           // exponent of t

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : x(nvars, 0) {}
    Monomial(std::vector<int> xs, int tdeg) : x(std::move(xs)), t(tdeg) {}

    static Monomial variable(std::size_t nvars, std::size_t i, int power = 1);

    std::size_t nvars() const noexcept { return x.size(); }
    int x_degree() const;
    int degree() const { return x_degree() + t; }
    bool is_one() const { return t == 0 && x_degree() == 0; }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Grevlex with t last: negative, zero or positive like strcmp.
int compare(const Monomial& a, const Monomial& b);

/// Strict-weak-order adaptor for ordered containers (ascending monomial order).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);    // a | b
Monomial quotient(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// Sum of distinct monomials (coefficients are all 1 in F₂).
class F2Poly {
public:
    F2Poly() = default;
    explicit F2Poly(std::size_t nvars) : nvars_(nvars) {}
    F2Poly(std::size_t nvars, std::vector<Monomial> terms);  // duplicates cancel in pairs
    static F2Poly monomial(Monomial m);
    static F2Poly one(std::size_t nvars);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Terms in ascending monomial order; the leading term is the last one.
    const std::vector<Monomial>& terms() const noexcept { return terms_; }
    const Monomial& lead() const { return terms_.back(); }

    bool is_homogeneous() const;
    bool contains(const Monomial& m) const;
    int min_t() const;  // largest k with t^k | f; 0 for the zero polynomial

    F2Poly& operator+=(const F2Poly& other);
    friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
    F2Poly times(const Monomial& m) const;
    F2Poly divide_t(int k) const;
    F2Poly dehomogenize() const;  // t ↦ 1
    void toggle(const Monomial& m);

    friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
    friend bool operator==(const F2Poly&, const F2Poly&) = default;

private:
    std::size_t nvars_ = 0;
    std::vector<Monomial> terms_;
};

struct GroebnerBasis {
    std::vector<F2Poly> generators;  // sorted by leading monomial, ascending
    std::string order;
    bool reduced = false;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b)
    {
        return a.generators == b.generators;
    }
};

std::string order_descriptor(std::size_t nvars);

/// Full reduction of f modulo `basis` (every term, not only the leading one).
F2Poly reduce(F2Poly f, const std::vector<F2Poly>& basis);

/// Reduced Gröbner basis of the ideal generated by `gens`. Every generator
/// must be homogeneous (NonHomogeneousGenerator otherwise); zero generators
/// are dropped.
GroebnerBasis buchberger(const std::vector<F2Poly>& gens, std::size_t nvars);

/// Reduced Gröbner basis of (I : t^∞) for a homogeneous reduced basis.
GroebnerBasis saturate_t(const GroebnerBasis& gb);

/// Text form using the given variable names and t rendered as q^{-1}
/// (unit_name^-k); the leading term comes first.
std::string format_poly(const F2Poly& f, const std::vector<std::string>& names, const std::string& unit_name);
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names, const std::string& unit_name);

}  // namespace toricqh
