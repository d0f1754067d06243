#include "toricqh/qh.hpp"

#include "toricqh/f2x.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace toricqh {

std::string_view to_string(Space s)
{
    return s == Space::L ? "L" : "M";
}

std::string_view to_string(Flavor f)
{
    return f == Flavor::Classical ? "classical" : "quantum";
}

std::vector<F2Poly> Presentation::relations() const
{
    std::vector<F2Poly> all = linear_relations;
    all.insert(all.end(), sr_relations.begin(), sr_relations.end());
    return all;
}

std::vector<F2Poly> linear_relations(const Polytope& p)
{
    const auto d = static_cast<std::size_t>(p.facet_count());
    std::vector<F2Poly> out;
    for (int m = 0; m < p.dim(); ++m) {
        std::vector<Monomial> terms;
        for (std::size_t k = 0; k < d; ++k)
            if (mpz_odd_p(p.facet(static_cast<int>(k)).normal[static_cast<std::size_t>(m)].get_mpz_t()))
                terms.push_back(Monomial::variable(d, k));
        out.emplace_back(d, std::move(terms));
    }
    return out;
}

namespace {

Monomial product_of(std::size_t d, const IndexSet& s)
{
    Monomial m(d);
    for (int i : s)
        m.x[static_cast<std::size_t>(i)] = 1;
    return m;
}

}  // namespace

std::vector<F2Poly> classical_sr(const Polytope& p, const std::vector<IndexSet>& primitives)
{
    const auto d = static_cast<std::size_t>(p.facet_count());
    std::vector<F2Poly> out;
    for (const auto& s : primitives)
        out.push_back(F2Poly::monomial(product_of(d, s)));
    return out;
}

std::vector<F2Poly> quantum_sr(const Polytope& p, const std::vector<PrimitiveCollection>& collections)
{
    const auto d = static_cast<std::size_t>(p.facet_count());
    std::vector<F2Poly> out;
    for (const auto& pc : collections) {
        Monomial rhs(d);
        for (std::size_t k = 0; k < d; ++k)
            if (!std::binary_search(pc.indices.begin(), pc.indices.end(), static_cast<int>(k)))
                rhs.x[k] = static_cast<int>(Integer(abs(pc.batyrev[k])).get_si());
        rhs.t = pc.degree;
        out.emplace_back(d, std::vector<Monomial>{product_of(d, pc.indices), rhs});
    }
    return out;
}

namespace {

Presentation make_presentation(const Polytope& p, Space space, Flavor flavor, const std::vector<IndexSet>& prims,
                               const std::vector<PrimitiveCollection>& collections)
{
    Presentation pr;
    pr.space = space;
    pr.flavor = flavor;
    const int unit = space == Space::L ? 1 : 2;
    for (int i = 0; i < p.facet_count(); ++i) {
        pr.generators.push_back((space == Space::L ? "X" : "Y") + std::to_string(i + 1));
        pr.generator_cods.push_back(unit);
    }
    pr.grading_unit = unit;
    pr.linear_relations = linear_relations(p);
    pr.sr_relations = flavor == Flavor::Classical ? classical_sr(p, prims) : quantum_sr(p, collections);
    return pr;
}

std::vector<int> compute_display(const QuotientRing& q)
{
    const std::size_t d = q.nvars();
    std::vector<int> display(d, -1);
    for (std::size_t i = 0; i < d; ++i) {
        F2Poly nf = q.normal_form(F2Poly::monomial(Monomial::variable(d, i)));
        if (nf.size() != 1 || nf.lead().x_degree() != 1)
            continue;
        const auto& xs = nf.lead().x;
        const auto s = static_cast<std::size_t>(std::find(xs.begin(), xs.end(), 1) - xs.begin());
        if (display[s] < 0)
            display[s] = static_cast<int>(i);  // i ascends, so the first hit is the least
    }
    return display;
}

}  // namespace

Ring::Ring(const Polytope& p, Space space, Flavor flavor)
    : polytope_(p),
      vertices_(delzant_vertices(p)),
      primitive_sets_(primitive_collections(p, vertices_)),
      collections_(flavor == Flavor::Quantum ? primitive_data(p, vertices_) : std::vector<PrimitiveCollection>{}),
      presentation_(make_presentation(p, space, flavor, primitive_sets_, collections_)),
      quotient_(presentation_.relations(), presentation_.nvars(), presentation_.grading_unit),
      display_(compute_display(quotient_))
{
}

Ring build_ring(const Polytope& p, Space space, Flavor flavor)
{
    return Ring(p, space, flavor);
}

namespace {

std::string display_monomial(const Monomial& m, const std::vector<int>& display, const std::string& prefix)
{
    std::vector<int> exps(m.nvars(), 0);
    for (std::size_t i = 0; i < m.nvars(); ++i)
        if (m.x[i]) {
            const int target = display[i] >= 0 ? display[i] : static_cast<int>(i);
            exps[static_cast<std::size_t>(target)] += m.x[i];
        }
    std::string out;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (!exps[i])
            continue;
        out += (out.empty() ? "" : "*") + prefix + std::to_string(i + 1);
        if (exps[i] > 1)
            out += "^" + std::to_string(exps[i]);
    }
    return out;
}

std::string power_text(const std::string& unit, int e)
{
    if (e == 1)
        return unit;
    return unit + "^" + std::to_string(e);
}

}  // namespace

std::string Ring::format(const QHElement& e) const
{
    if (e.is_zero())
        return "0";
    const std::string prefix = space() == Space::L ? "X" : "Y";
    const std::string unit = presentation_.unit_name();
    const std::string fundamental = space() == Space::L ? "L" : "1";
    std::string out;
    for (auto it = e.coeffs().rbegin(); it != e.coeffs().rend(); ++it) {
        std::string mono = display_monomial(it->first, display_, prefix);
        const auto& exps = it->second.exponents();
        for (auto ex = exps.rbegin(); ex != exps.rend(); ++ex) {
            std::string term;
            if (mono.empty())
                term = *ex == 0            ? fundamental
                       : space() == Space::M ? power_text(unit, *ex)
                                             : fundamental + "*" + power_text(unit, *ex);
            else
                term = *ex == 0 ? mono : mono + "*" + power_text(unit, *ex);
            out += (out.empty() ? "" : " + ") + term;
        }
    }
    return out;
}

std::string Ring::format_reduced(const F2Poly& f) const
{
    if (f.is_zero())
        return "0";
    const std::string prefix = space() == Space::L ? "X" : "Y";
    std::string out;
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        std::string mono = display_monomial(*it, display_, prefix);
        if (it->t)
            mono += (mono.empty() ? "" : "*") + power_text(presentation_.unit_name(), -it->t);
        out += (out.empty() ? "" : " + ") + (mono.empty() ? std::string("1") : mono);
    }
    return out;
}

QHElement Ring::generator(std::size_t j) const
{
    return quotient_.element_of(Monomial::variable(nvars(), j));
}

QHElement multiply(const Ring& ring, const QHElement& a, const QHElement& b)
{
    return ring.quotient().multiply(a, b);
}

QHElement power(const Ring& ring, const QHElement& a, unsigned k)
{
    QHElement result = ring.fundamental_class();
    QHElement base = a;
    while (k) {
        if (k & 1u)
            result = multiply(ring, result, base);
        k >>= 1u;
        if (k)
            base = multiply(ring, base, base);
    }
    return result;
}

namespace {

using PolyMatrix = std::vector<std::vector<F2x>>;

// Bareiss elimination over the integral domain F₂[z]; the sign of the
// determinant is irrelevant in characteristic 2.
F2x bareiss_det(PolyMatrix a)
{
    const std::size_t n = a.size();
    if (n == 0)
        return F2x::monomial(0);
    F2x prev = F2x::monomial(0);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero())
                ++p;
            if (p == n)
                return F2x();
            std::swap(a[k], a[p]);
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_div(a[i][j] * a[k][k] + a[i][k] * a[k][j], prev);
        prev = a[k][k];
    }
    return a[n - 1][n - 1];
}

}  // namespace

QHElement invert(const Ring& ring, const QHElement& a)
{
    const QuotientRing& q = ring.quotient();
    const auto& basis = q.standard_basis();
    const std::size_t n = basis.size();
    if (n == 0)
        throw Error(ErrorCode::NotInvertible, "zero ring");

    // Column i holds a ⋆ s_i in the standard basis.
    std::vector<QHElement> columns;
    int min_exp = 0;
    for (const auto& s : basis) {
        QHElement unit_s;
        unit_s.add_term(s, 0);
        columns.push_back(q.multiply(a, unit_s));
        for (const auto& [m, c] : columns.back().coeffs())
            if (!c.is_zero())
                min_exp = std::min(min_exp, *c.exponents().begin());
    }
    // Clear q-denominators: the scaled matrix q^shift·A has entries in F₂[q].
    const int shift = -min_exp;
    PolyMatrix a_mat(n, std::vector<F2x>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : columns[i].coeffs()) {
            const std::size_t row = *q.index_of(m);
            for (int e : c.exponents())
                a_mat[row][i] += F2x::monomial(static_cast<unsigned long>(e + shift));
        }

    const F2x determinant = bareiss_det(a_mat);
    if (!determinant.is_monomial())
        throw Error(ErrorCode::NotInvertible, determinant.is_zero()
                                                  ? "multiplication matrix is singular"
                                                  : "determinant of the multiplication matrix is not a unit");
    const long det_exp = determinant.degree();

    // Cramer: (q^shift A) x = q^shift e_0, x_j = det(A_j) / det.
    const std::size_t unit_row = *q.index_of(Monomial(q.nvars()));
    QHElement x;
    for (std::size_t j = 0; j < n; ++j) {
        PolyMatrix aj = a_mat;
        for (std::size_t r = 0; r < n; ++r)
            aj[r][j] = r == unit_row ? F2x::monomial(static_cast<unsigned long>(shift)) : F2x();
        const F2x dj = bareiss_det(std::move(aj));
        for (long k = 0; k <= dj.degree(); ++k)
            if (dj.coefficient(static_cast<unsigned long>(k)))
                x.add_term(basis[j], static_cast<int>(k - det_exp));
    }
    if (q.multiply(a, x) != q.one())
        throw Error(ErrorCode::NotInvertible, "inverse failed verification");
    return x;
}

namespace {

QHElement facet_element(const Ring& ring, std::size_t j)
{
    return ring.generator(j).shifted(1);
}

}  // namespace

SeidelElement seidel_facet(const Ring& ring, std::size_t j)
{
    if (ring.flavor() != Flavor::Quantum)
        throw Error(ErrorCode::NotInvertible, "Seidel elements live in the quantum ring");
    if (j >= ring.nvars())
        throw Error(ErrorCode::RejectMalformed, "facet index out of range");
    SeidelElement s;
    s.element = facet_element(ring, j);
    s.combination.assign(ring.nvars(), 0);
    s.combination[j] = 1;
    invert(ring, s.element);
    return s;
}

SeidelElement seidel_composite(const Ring& ring, const IntVec& c)
{
    if (c.size() != ring.nvars())
        throw Error(ErrorCode::RejectMalformed, "combination needs " + std::to_string(ring.nvars()) + " entries");
    if (ring.flavor() != Flavor::Quantum)
        throw Error(ErrorCode::NotInvertible, "Seidel elements live in the quantum ring");
    SeidelElement s;
    s.combination = c;
    s.element = ring.fundamental_class();
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0)
            continue;
        QHElement factor = facet_element(ring, j);
        if (c[j] < 0)
            factor = invert(ring, factor);
        s.element = multiply(ring, s.element, power(ring, factor, static_cast<unsigned>(Integer(abs(c[j])).get_ui())));
    }
    return s;
}

bool verify_seidel_relation(const Ring& ring, const PrimitiveCollection& pc)
{
    QHElement lhs = ring.fundamental_class();
    QHElement rhs = ring.fundamental_class();
    for (std::size_t k = 0; k < ring.nvars(); ++k) {
        const bool in_i = std::binary_search(pc.indices.begin(), pc.indices.end(), static_cast<int>(k));
        if (in_i)
            lhs = multiply(ring, lhs, facet_element(ring, k));
        else if (pc.batyrev[k] != 0)
            rhs = multiply(ring, rhs, power(ring, facet_element(ring, k), static_cast<unsigned>(Integer(abs(pc.batyrev[k])).get_ui())));
    }
    return lhs == rhs;
}

bool verify_psi(const Presentation& l, const Presentation& m)
{
    if (l.space != Space::L || m.space != Space::M || l.nvars() != m.nvars())
        return false;
    if (m.grading_unit != 2 * l.grading_unit)
        return false;
    for (std::size_t i = 0; i < l.nvars(); ++i)
        if (m.generator_cods[i] != 2 * l.generator_cods[i])
            return false;
    const GroebnerBasis gl = saturate_t(buchberger(l.relations(), l.nvars()));
    const GroebnerBasis gm = saturate_t(buchberger(m.relations(), m.nvars()));
    return gl == gm;
}

UniruledCertificate uniruled_certificate(const Ring& ring)
{
    UniruledCertificate cert;
    cert.witness.element = facet_element(ring, 0);
    cert.witness.combination.assign(ring.nvars(), 0);
    cert.witness.combination[0] = 1;
    cert.fundamental_coefficient = cert.witness.element.coefficient(Monomial(ring.nvars()));
    cert.min_quantum_degree = 0;
    for (const auto& pc : ring.collections())
        cert.min_quantum_degree =
            cert.min_quantum_degree == 0 ? pc.degree : std::min(cert.min_quantum_degree, pc.degree);

    if (ring.flavor() != Flavor::Quantum) {
        cert.reason = "classical ring: the witness is nilpotent";
        try {
            cert.inverse = invert(ring, cert.witness.element);
        } catch (const Error&) {
        }
        return cert;
    }
    try {
        cert.inverse = invert(ring, cert.witness.element);
    } catch (const Error& e) {
        cert.reason = e.what();
        return cert;
    }
    if (!cert.fundamental_coefficient.is_zero()) {
        cert.reason = "witness has a fundamental-class term";
        return cert;
    }
    if (cert.min_quantum_degree < 2) {
        cert.reason = "minimal quantum degree " + std::to_string(cert.min_quantum_degree) + " is below 2";
        return cert;
    }
    cert.uniruled = true;
    cert.reason = "invertible Seidel element without [L] term";
    return cert;
}

namespace {

std::string vec_text(const std::vector<int>& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

}  // namespace

BettiCrosscheck betti_crosscheck(const Polytope& p)
{
    BettiCrosscheck out;
    const Ring l(p, Space::L, Flavor::Classical);
    const Ring m(p, Space::M, Flavor::Classical);
    out.xi = generic_xi(p, l.vertices());
    out.betti = betti_numbers(p, l.vertices(), out.xi);
    out.hilbert_l = l.quotient().hilbert_function();
    out.hilbert_m = m.quotient().hilbert_function();

    std::vector<int> reversed(out.hilbert_l.rbegin(), out.hilbert_l.rend());
    if (reversed != out.betti)
        throw Error(ErrorCode::CrosscheckFailed,
                    "Hilbert function " + vec_text(out.hilbert_l) + " vs Morse indices " + vec_text(out.betti));
    std::vector<int> doubled(out.hilbert_l.size() * 2 - 1, 0);
    for (std::size_t c = 0; c < out.hilbert_l.size(); ++c)
        doubled[2 * c] = out.hilbert_l[c];
    if (doubled != out.hilbert_m)
        throw Error(ErrorCode::CrosscheckFailed,
                    "M Hilbert function " + vec_text(out.hilbert_m) + " vs doubled L " + vec_text(doubled));
    return out;
}

}  // namespace toricqh
