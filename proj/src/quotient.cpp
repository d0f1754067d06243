#include "toricqh/quotient.hpp"

#include "toricqh/errors.hpp"

#include <algorithm>
#include <cassert>

namespace toricqh {

LaurentF2::LaurentF2(std::initializer_list<int> exps)
{
    for (int e : exps)
        toggle(e);
}

void LaurentF2::toggle(int e)
{
    auto [it, inserted] = exps_.insert(e);
    if (!inserted)
        exps_.erase(it);
}

LaurentF2 LaurentF2::shifted(int k) const
{
    LaurentF2 out;
    for (int e : exps_)
        out.exps_.insert(e + k);
    return out;
}

LaurentF2& LaurentF2::operator+=(const LaurentF2& other)
{
    for (int e : other.exps_)
        toggle(e);
    return *this;
}

LaurentF2 operator*(const LaurentF2& a, const LaurentF2& b)
{
    LaurentF2 out;
    for (int x : a.exps_)
        for (int y : b.exps_)
            out.toggle(x + y);
    return out;
}

QHElement::QHElement(Map coeffs)
{
    for (auto& [m, c] : coeffs)
        if (!c.is_zero())
            coeffs_.emplace(m, std::move(c));
}

LaurentF2 QHElement::coefficient(const Monomial& m) const
{
    auto it = coeffs_.find(m);
    return it == coeffs_.end() ? LaurentF2{} : it->second;
}

void QHElement::add_term(const Monomial& m, int q_exp)
{
    auto& c = coeffs_[m];
    c.toggle(q_exp);
    if (c.is_zero())
        coeffs_.erase(m);
}

QHElement& QHElement::operator+=(const QHElement& other)
{
    for (const auto& [m, c] : other.coeffs_) {
        auto& mine = coeffs_[m];
        mine += c;
        if (mine.is_zero())
            coeffs_.erase(m);
    }
    return *this;
}

QHElement QHElement::shifted(int k) const
{
    QHElement out;
    for (const auto& [m, c] : coeffs_)
        out.coeffs_.emplace(m, c.shifted(k));
    return out;
}

QuotientRing::QuotientRing(const std::vector<F2Poly>& relations, std::size_t nvars, int weight)
    : nvars_(nvars), weight_(weight)
{
    homogeneous_ = saturate_t(buchberger(relations, nvars));
    homogeneous_.order = order_descriptor(nvars);
    for (const auto& g : homogeneous_.generators) {
        // A saturated homogeneous grevlex basis has t-free leading terms, so
        // dehomogenizing keeps the leading terms and the Gröbner property.
        assert(g.lead().t == 0);
        dehomogenized_.push_back(g.dehomogenize());
    }

    std::vector<int> bound(nvars, -1);
    bool contains_one = false;
    for (const auto& g : dehomogenized_) {
        const Monomial& lt = g.lead();
        if (lt.is_one())
            contains_one = true;
        int support = 0;
        std::size_t var = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (lt.x[i]) {
                ++support;
                var = i;
            }
        if (support == 1 && (bound[var] < 0 || lt.x[var] < bound[var]))
            bound[var] = lt.x[var];
    }
    if (!contains_one) {
        for (std::size_t i = 0; i < nvars; ++i)
            if (bound[i] < 0)
                throw Error(ErrorCode::InfiniteDimensional,
                            "no leading term is a pure power of X" + std::to_string(i + 1));
        Monomial m(nvars);
        while (true) {
            bool standard = std::none_of(dehomogenized_.begin(), dehomogenized_.end(),
                                         [&](const F2Poly& g) { return divides(g.lead(), m); });
            if (standard)
                standard_.push_back(m);
            std::size_t i = 0;
            while (i < nvars && m.x[i] + 1 == bound[i]) {
                m.x[i] = 0;
                ++i;
            }
            if (i == nvars)
                break;
            ++m.x[i];
        }
        std::sort(standard_.begin(), standard_.end(), MonomialLess{});
    }

    const std::size_t n = standard_.size();
    table_.assign(n, std::vector<QHElement>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Monomial prod = standard_[i] * standard_[j];
            table_[i][j] = rehomogenize(normal_form(F2Poly::monomial(prod)), prod.degree());
            table_[j][i] = table_[i][j];
        }
}

std::optional<std::size_t> QuotientRing::index_of(const Monomial& m) const
{
    auto it = std::lower_bound(standard_.begin(), standard_.end(), m, MonomialLess{});
    if (it == standard_.end() || *it != m)
        return std::nullopt;
    return static_cast<std::size_t>(it - standard_.begin());
}

std::vector<int> QuotientRing::hilbert_function() const
{
    int top = 0;
    for (const auto& m : standard_)
        top = std::max(top, cod(m));
    std::vector<int> dims(static_cast<std::size_t>(top + 1), 0);
    for (const auto& m : standard_)
        ++dims[static_cast<std::size_t>(cod(m))];
    return dims;
}

F2Poly QuotientRing::normal_form(const F2Poly& f) const
{
    if (f.is_zero())
        return F2Poly(nvars_);
    return reduce(f.dehomogenize(), dehomogenized_);
}

F2Poly QuotientRing::homogeneous_normal_form(const F2Poly& f) const
{
    if (f.is_zero())
        return F2Poly(nvars_);
    return reduce(f, homogeneous_.generators);
}

QHElement QuotientRing::rehomogenize(const F2Poly& f, int source_degree) const
{
    QHElement out;
    for (const auto& m : f.terms())
        out.add_term(m, m.x_degree() - source_degree);
    return out;
}

QHElement QuotientRing::element_of(const Monomial& m) const
{
    Monomial xs = m;
    xs.t = 0;
    return rehomogenize(normal_form(F2Poly::monomial(xs)), xs.x_degree()).shifted(-m.t);
}

QHElement QuotientRing::element_of(const F2Poly& f) const
{
    QHElement out;
    for (const auto& m : f.terms())
        out += element_of(m);
    return out;
}

QHElement QuotientRing::element_of_homogeneous(const F2Poly& f) const
{
    QHElement out;
    for (const auto& m : f.terms()) {
        const F2Poly nf = homogeneous_normal_form(F2Poly::monomial(m));
        for (const auto& s : nf.terms()) {
            Monomial xs = s;
            xs.t = 0;
            out.add_term(xs, -s.t);
        }
    }
    return out;
}

QHElement QuotientRing::one() const
{
    QHElement e;
    if (!standard_.empty())
        e.add_term(Monomial(nvars_), 0);
    return e;
}

QHElement QuotientRing::multiply(const QHElement& a, const QHElement& b) const
{
    QHElement out;
    for (const auto& [ma, ca] : a.coeffs()) {
        const auto i = index_of(ma);
        assert(i);
        for (const auto& [mb, cb] : b.coeffs()) {
            const auto j = index_of(mb);
            assert(j);
            const LaurentF2 c = ca * cb;
            if (c.is_zero())
                continue;
            for (const auto& [m, tc] : table_[*i][*j].coeffs()) {
                QHElement::Map term;
                term.emplace(m, tc * c);
                out += QHElement(std::move(term));
            }
        }
    }
    return out;
}

std::optional<int> QuotientRing::homogeneous_degree(const QHElement& a) const
{
    std::optional<int> deg;
    for (const auto& [m, c] : a.coeffs())
        for (int e : c.exponents()) {
            int d = m.x_degree() - e;
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
    return deg.value_or(0);
}

}  // namespace toricqh
