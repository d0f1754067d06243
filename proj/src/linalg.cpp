#include "toricqh/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toricqh {

Rat make_rat(const Integer& num, const Integer& den)
{
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r)
{
    return r.get_str();
}

IntMat::IntMat(std::initializer_list<std::initializer_list<long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        assert(r.size() == cols_);
        for (long v : r)
            data_.emplace_back(v);
    }
}

IntMat IntMat::identity(std::size_t n)
{
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<IntVec>& rows, std::size_t cols)
{
    IntMat m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        assert(rows[r].size() == cols);
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntVec IntMat::row(std::size_t r) const
{
    return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<IntVec> IntMat::row_list() const
{
    std::vector<IntVec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row(r));
    return out;
}

IntMat IntMat::transpose() const
{
    IntMat t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

void IntMat::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

IntMat operator*(const IntMat& a, const IntMat& b)
{
    assert(a.cols() == b.rows());
    IntMat out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

IntVec row_times(const IntVec& v, const IntMat& m)
{
    assert(v.size() == m.rows());
    IntVec out(m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[c] += v[r] * m(r, c);
    return out;
}

Integer dot(const IntVec& a, const IntVec& b)
{
    assert(a.size() == b.size());
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

Integer content(const IntVec& v)
{
    Integer g = 0;
    for (const auto& x : v)
        g = gcd(g, x);
    return g;
}

std::string to_string(const IntVec& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i].get_str();
    os << ')';
    return os.str();
}

std::string to_string(const IntMat& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r)
        os << (r ? "," : "") << to_string(m.row(r));
    os << ']';
    return os.str();
}

namespace {

// row_a -= k * row_b, applied to both the working matrix and the transform.
void sub_row(IntMat& m, std::size_t a, std::size_t b, const Integer& k)
{
    if (k == 0)
        return;
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(a, c) -= k * m(b, c);
}

void negate_row(IntMat& m, std::size_t a)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        m(a, c) = -m(a, c);
}

// Floor division for GMP integers with positive divisor.
Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMat& m)
{
    IntMat h = m;
    IntMat u = IntMat::identity(m.rows());
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_cols;

    for (std::size_t c = 0; c < h.cols() && pivot_row < h.rows(); ++c) {
        // Euclid on column c among rows pivot_row.. until one nonzero remains.
        while (true) {
            std::size_t best = h.rows();
            for (std::size_t r = pivot_row; r < h.rows(); ++r)
                if (h(r, c) != 0 && (best == h.rows() || abs(h(r, c)) < abs(h(best, c))))
                    best = r;
            if (best == h.rows())
                break;
            h.swap_rows(pivot_row, best);
            u.swap_rows(pivot_row, best);
            bool done = true;
            for (std::size_t r = pivot_row + 1; r < h.rows(); ++r) {
                if (h(r, c) == 0)
                    continue;
                Integer k = h(r, c) / h(pivot_row, c);  // truncation is fine here
                sub_row(h, r, pivot_row, k);
                sub_row(u, r, pivot_row, k);
                if (h(r, c) != 0)
                    done = false;
            }
            if (done)
                break;
        }
        if (h(pivot_row, c) == 0)
            continue;
        if (h(pivot_row, c) < 0) {
            negate_row(h, pivot_row);
            negate_row(u, pivot_row);
        }
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer k = floor_div(h(r, c), h(pivot_row, c));
            sub_row(h, r, pivot_row, k);
            sub_row(u, r, pivot_row, k);
        }
        pivot_cols.push_back(c);
        ++pivot_row;
    }
    return {std::move(h), std::move(u)};
}

IntMat kernel_lattice_basis(const IntMat& m)
{
    // u·m = h with u unimodular; the rows of u matching zero rows of h span
    // the left kernel, and they span it over Z because u is invertible over Z.
    auto [h, u] = hermite_normal_form(m);
    std::size_t rank = 0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        bool zero = true;
        for (std::size_t c = 0; c < h.cols(); ++c)
            if (h(r, c) != 0) {
                zero = false;
                break;
            }
        if (!zero)
            rank = r + 1;
    }
    std::vector<IntVec> rows;
    for (std::size_t r = rank; r < u.rows(); ++r)
        rows.push_back(u.row(r));
    if (rows.empty())
        return IntMat(0, m.rows());
    return hermite_normal_form(IntMat::from_rows(rows, m.rows())).h;
}

std::optional<std::vector<RatVec>> inverse_rational(const IntMat& m)
{
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    std::vector<RatVec> a(n, RatVec(2 * n));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = m(r, c);
        a[r][n + r] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0)
            ++p;
        if (p == n)
            return std::nullopt;
        std::swap(a[p], a[c]);
        Rat inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            Rat k = a[r][c];
            for (std::size_t j = 0; j < 2 * n; ++j)
                a[r][j] -= k * a[c][j];
        }
    }
    std::vector<RatVec> inv(n, RatVec(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv[r][c] = a[r][n + c];
    return inv;
}

std::optional<RatVec> solve_rational(const IntMat& m, const RatVec& b)
{
    assert(m.rows() == m.cols() && b.size() == m.rows());
    auto inv = inverse_rational(m);
    if (!inv)
        return std::nullopt;
    RatVec x(b.size());
    for (std::size_t r = 0; r < b.size(); ++r)
        for (std::size_t c = 0; c < b.size(); ++c)
            x[r] += (*inv)[r][c] * b[c];
    return x;
}

Integer det(const IntMat& m)
{
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMat a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;  // exact
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

}  // namespace toricqh
