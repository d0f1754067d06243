#pragma once

// Univariate polynomials over F₂, bit-packed into a GMP integer (bit k is the
// coefficient of z^k). Used for determinants of multiplication matrices.

#include <gmpxx.h>

#include <cassert>
#include <string>

namespace toricqh {

class F2x {
public:
    F2x() = default;
    static F2x monomial(unsigned long k)
    {
        F2x p;
        mpz_setbit(p.bits_.get_mpz_t(), k);
        return p;
    }

    bool is_zero() const { return bits_ == 0; }
    long degree() const { return is_zero() ? -1 : static_cast<long>(mpz_sizeinbase(bits_.get_mpz_t(), 2)) - 1; }
    unsigned long term_count() const { return mpz_popcount(bits_.get_mpz_t()); }
    bool coefficient(unsigned long k) const { return mpz_tstbit(bits_.get_mpz_t(), k) != 0; }
    bool is_monomial() const { return term_count() == 1; }

    F2x& operator+=(const F2x& o)
    {
        mpz_xor(bits_.get_mpz_t(), bits_.get_mpz_t(), o.bits_.get_mpz_t());
        return *this;
    }
    friend F2x operator+(F2x a, const F2x& b) { return a += b; }

    friend F2x operator*(const F2x& a, const F2x& b)
    {
        F2x out;
        const long da = a.degree();
        for (long k = 0; k <= da; ++k)
            if (a.coefficient(static_cast<unsigned long>(k))) {
                mpz_class shifted;
                mpz_mul_2exp(shifted.get_mpz_t(), b.bits_.get_mpz_t(), static_cast<unsigned long>(k));
                mpz_xor(out.bits_.get_mpz_t(), out.bits_.get_mpz_t(), shifted.get_mpz_t());
            }
        return out;
    }

    /// Quotient and remainder of a by b (b nonzero).
    static void divmod(const F2x& a, const F2x& b, F2x& q, F2x& r)
    {
        assert(!b.is_zero());
        q = F2x();
        r = a;
        const long db = b.degree();
        while (r.degree() >= db) {
            const unsigned long shift = static_cast<unsigned long>(r.degree() - db);
            mpz_setbit(q.bits_.get_mpz_t(), shift);
            mpz_class shifted;
            mpz_mul_2exp(shifted.get_mpz_t(), b.bits_.get_mpz_t(), shift);
            mpz_xor(r.bits_.get_mpz_t(), r.bits_.get_mpz_t(), shifted.get_mpz_t());
        }
    }

    /// Exact division; the remainder must vanish.
    friend F2x exact_div(const F2x& a, const F2x& b)
    {
        F2x q, r;
        divmod(a, b, q, r);
        assert(r.is_zero());
        return q;
    }

    friend bool operator==(const F2x& a, const F2x& b) { return a.bits_ == b.bits_; }

private:
    mpz_class bits_ = 0;
};

}  // namespace toricqh
