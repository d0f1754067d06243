#pragma once

#include "toricqh/io.hpp"
#include "toricqh/qh.hpp"

#include <random>
#include <string>

namespace testing {

using namespace toricqh;

inline std::string fixture(const std::string& name)
{
    return std::string(TORICQH_FIXTURES) + "/" + name;
}

inline Polytope builtin(const std::string& name)
{
    return *builtin_polytope(name);
}

inline const std::vector<std::string>& all_builtins()
{
    static const std::vector<std::string> names = {"cp1", "cp2", "cp3", "cp4", "cp5", "cp1xcp1", "blowup_cp3"};
    return names;
}

inline IntMat random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound)
{
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMat m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = d(rng);
    return m;
}

/// Random element: a few standard monomials with random q-shifts.
inline QHElement random_element(std::mt19937& rng, const Ring& ring, int terms = 4, int qspread = 3)
{
    const auto& basis = ring.quotient().standard_basis();
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> shift(-qspread, qspread);
    QHElement e;
    for (int i = 0; i < terms; ++i)
        e.add_term(basis[pick(rng)], shift(rng));
    return e;
}

}  // namespace testing
