#include "toricqh/f2poly.hpp"

#include "toricqh/errors.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <tuple>

namespace toricqh {

Monomial Monomial::variable(std::size_t nvars, std::size_t i, int power)
{
    Monomial m(nvars);
    m.x.at(i) = power;
    return m;
}

int Monomial::x_degree() const
{
    return std::accumulate(x.begin(), x.end(), 0);
}

int compare(const Monomial& a, const Monomial& b)
{
    assert(a.nvars() == b.nvars());
    const int da = a.degree(), db = b.degree();
    if (da != db)
        return da < db ? -1 : 1;
    if (a.t != b.t)
        return a.t > b.t ? -1 : 1;
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a.x[i] != b.x[i])
            return a.x[i] > b.x[i] ? -1 : 1;
    return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    assert(a.nvars() == b.nvars());
    Monomial m = a;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        m.x[i] += b.x[i];
    m.t += b.t;
    return m;
}

bool divides(const Monomial& a, const Monomial& b)
{
    if (a.t > b.t)
        return false;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.x[i] > b.x[i])
            return false;
    return true;
}

Monomial quotient(const Monomial& b, const Monomial& a)
{
    assert(divides(a, b));
    Monomial m = b;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        m.x[i] -= a.x[i];
    m.t -= a.t;
    return m;
}

Monomial lcm(const Monomial& a, const Monomial& b)
{
    Monomial m = a;
    for (std::size_t i = 0; i < m.nvars(); ++i)
        m.x[i] = std::max(a.x[i], b.x[i]);
    m.t = std::max(a.t, b.t);
    return m;
}

bool coprime(const Monomial& a, const Monomial& b)
{
    if (a.t && b.t)
        return false;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a.x[i] && b.x[i])
            return false;
    return true;
}

F2Poly::F2Poly(std::size_t nvars, std::vector<Monomial> terms) : nvars_(nvars)
{
    std::sort(terms.begin(), terms.end(), MonomialLess{});
    for (auto& m : terms) {
        assert(m.nvars() == nvars);
        if (!terms_.empty() && terms_.back() == m)
            terms_.pop_back();
        else
            terms_.push_back(std::move(m));
    }
}

F2Poly F2Poly::monomial(Monomial m)
{
    F2Poly f(m.nvars());
    f.terms_.push_back(std::move(m));
    return f;
}

F2Poly F2Poly::one(std::size_t nvars)
{
    return monomial(Monomial(nvars));
}

bool F2Poly::is_homogeneous() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Monomial& m) { return m.degree() == terms_.front().degree(); });
}

bool F2Poly::contains(const Monomial& m) const
{
    return std::binary_search(terms_.begin(), terms_.end(), m, MonomialLess{});
}

int F2Poly::min_t() const
{
    if (terms_.empty())
        return 0;
    int k = terms_.front().t;
    for (const auto& m : terms_)
        k = std::min(k, m.t);
    return k;
}

F2Poly& F2Poly::operator+=(const F2Poly& other)
{
    assert(other.is_zero() || is_zero() || nvars_ == other.nvars_);
    if (is_zero())
        nvars_ = other.nvars_;
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), other.terms_.begin(), other.terms_.end(),
                                  std::back_inserter(merged), MonomialLess{});
    terms_ = std::move(merged);
    return *this;
}

F2Poly F2Poly::times(const Monomial& m) const
{
    F2Poly out(nvars_);
    out.terms_.reserve(terms_.size());
    for (const auto& a : terms_)
        out.terms_.push_back(a * m);  // monomial orders are multiplicative
    return out;
}

F2Poly F2Poly::divide_t(int k) const
{
    F2Poly out(nvars_);
    out.terms_ = terms_;
    for (auto& m : out.terms_) {
        assert(m.t >= k);
        m.t -= k;
    }
    return out;
}

F2Poly F2Poly::dehomogenize() const
{
    std::vector<Monomial> ts = terms_;
    for (auto& m : ts)
        m.t = 0;
    return F2Poly(nvars_, std::move(ts));
}

void F2Poly::toggle(const Monomial& m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, MonomialLess{});
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

F2Poly operator*(const F2Poly& a, const F2Poly& b)
{
    std::vector<Monomial> products;
    products.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_)
            products.push_back(x * y);
    return F2Poly(std::max(a.nvars_, b.nvars_), std::move(products));
}

std::string order_descriptor(std::size_t nvars)
{
    std::string s = "grevlex(";
    for (std::size_t i = 0; i < nvars; ++i)
        s += "X" + std::to_string(i + 1) + ">";
    return s + "t)";
}

F2Poly reduce(F2Poly f, const std::vector<F2Poly>& basis)
{
    std::vector<Monomial> remainder;  // collected in descending order
    while (!f.is_zero()) {
        const Monomial lt = f.lead();
        const F2Poly* divisor = nullptr;
        for (const auto& g : basis)
            if (!g.is_zero() && divides(g.lead(), lt)) {
                divisor = &g;
                break;
            }
        if (divisor)
            f += divisor->times(quotient(lt, divisor->lead()));
        else {
            remainder.push_back(lt);
            f.toggle(lt);
        }
    }
    return F2Poly(f.nvars(), std::move(remainder));
}

namespace {

F2Poly s_polynomial(const F2Poly& f, const F2Poly& g)
{
    const Monomial l = lcm(f.lead(), g.lead());
    return f.times(quotient(l, f.lead())) + g.times(quotient(l, g.lead()));
}

GroebnerBasis interreduce(std::vector<F2Poly> basis, std::size_t nvars)
{
    // Minimalize: drop generators whose leading term is divisible by another
    // (keeping the first among equal leading terms).
    std::vector<F2Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j)
                continue;
            if (divides(basis[j].lead(), basis[i].lead()) &&
                (basis[j].lead() != basis[i].lead() || j < i))
                redundant = true;
        }
        if (!redundant)
            minimal.push_back(basis[i]);
    }
    std::vector<F2Poly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<F2Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i)
                others.push_back(minimal[j]);
        reduced.push_back(reduce(minimal[i], others));
    }
    std::sort(reduced.begin(), reduced.end(),
              [](const F2Poly& a, const F2Poly& b) { return compare(a.lead(), b.lead()) < 0; });
    return {std::move(reduced), order_descriptor(nvars), true};
}

}  // namespace

GroebnerBasis buchberger(const std::vector<F2Poly>& gens, std::size_t nvars)
{
    std::vector<F2Poly> basis;
    for (const auto& g : gens) {
        if (g.is_zero())
            continue;
        if (g.nvars() != nvars)
            throw Error(ErrorCode::NonHomogeneousGenerator, "generator has the wrong number of variables");
        if (!g.is_homogeneous())
            throw Error(ErrorCode::NonHomogeneousGenerator, "generator " + format_poly(g, {}, "q") +
                                                                " is not homogeneous in codimension degree");
        F2Poly r = reduce(g, basis);
        if (!r.is_zero())
            basis.push_back(std::move(r));
    }

    // Pairs are processed by increasing lcm degree, ties by index, so the
    // run is deterministic for a given input sequence.
    using Pair = std::tuple<int, std::size_t, std::size_t>;
    std::vector<Pair> pairs;
    auto add_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (!coprime(basis[i].lead(), basis[j].lead()))
                pairs.emplace_back(lcm(basis[i].lead(), basis[j].lead()).degree(), i, j);
    };
    for (std::size_t j = 1; j < basis.size(); ++j)
        add_pairs(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end());
        auto [deg, i, j] = *it;
        pairs.erase(it);
        F2Poly r = reduce(s_polynomial(basis[i], basis[j]), basis);
        if (r.is_zero())
            continue;
        basis.push_back(std::move(r));
        add_pairs(basis.size() - 1);
    }
    return interreduce(std::move(basis), nvars);
}

GroebnerBasis saturate_t(const GroebnerBasis& gb)
{
    std::vector<F2Poly> divided;
    std::size_t nvars = 0;
    for (const auto& g : gb.generators) {
        divided.push_back(g.divide_t(g.min_t()));
        nvars = g.nvars();
    }
    if (divided.empty())
        return gb;
    return buchberger(divided, nvars);
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names, const std::string& unit_name)
{
    std::string out;
    auto append = [&](const std::string& s) { out += (out.empty() ? "" : "*") + s; };
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.x[i] == 0)
            continue;
        std::string name = i < names.size() ? names[i] : "X" + std::to_string(i + 1);
        append(m.x[i] == 1 ? name : name + "^" + std::to_string(m.x[i]));
    }
    if (m.t)
        append(unit_name + "^-" + std::to_string(m.t));
    return out.empty() ? "1" : out;
}

std::string format_poly(const F2Poly& f, const std::vector<std::string>& names, const std::string& unit_name)
{
    if (f.is_zero())
        return "0";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it)
        out += (out.empty() ? "" : " + ") + format_monomial(*it, names, unit_name);
    return out;
}

}  // namespace toricqh
