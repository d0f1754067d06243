// Acceptance criteria 1-10. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. All comparisons are exact.

#include "support.hpp"
#include "toricqh/expr.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace toricqh;
using testing::builtin;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string& what)
{
    if (!ok)
        throw Failure{what};
}

QHElement el(const Ring& ring, const std::string& text)
{
    return evaluate(ring, parse_expr(text, ring.nvars()));
}

Monomial mono(std::size_t n, std::initializer_list<std::pair<int, int>> powers, int t = 0)
{
    Monomial m(n);
    for (auto [i, e] : powers)
        m.x[static_cast<std::size_t>(i)] = e;
    m.t = t;
    return m;
}

// Independent Morse sweep: edges are vertex pairs sharing n - 1 tight facets.
std::vector<int> morse_histogram(const Polytope& p, const std::vector<Vertex>& vs, const IntVec& xi)
{
    std::vector<int> b(static_cast<std::size_t>(p.dim() + 1), 0);
    for (const Vertex& v : vs) {
        int index = 0;
        for (const Vertex& w : vs) {
            std::vector<int> common;
            std::set_intersection(v.tight.begin(), v.tight.end(), w.tight.begin(), w.tight.end(),
                                  std::back_inserter(common));
            if (&v == &w || static_cast<int>(common.size()) != p.dim() - 1)
                continue;
            Rat s = 0;
            for (std::size_t c = 0; c < v.coords.size(); ++c)
                s += (w.coords[c] - v.coords[c]) * Rat(xi[c]);
            expect(s != 0, "covector not generic");
            index += s < 0;
        }
        ++b[static_cast<std::size_t>(index)];
    }
    return b;
}

// All a in [-bound, bound]^d with a = 1 on I, a <= 0 off I, Σ a_k v_k = 0 and
// Σ_{k∉I} |a_k| <= |I| - 1.
std::vector<IntVec> batyrev_search(const Polytope& p, const IndexSet& I, int bound)
{
    const int d = p.facet_count();
    std::vector<int> off;
    for (int k = 0; k < d; ++k)
        if (!std::binary_search(I.begin(), I.end(), k))
            off.push_back(k);
    std::vector<IntVec> found;
    std::vector<int> a(off.size(), -bound);
    while (true) {
        IntVec full(static_cast<std::size_t>(d), 0);
        for (int i : I)
            full[static_cast<std::size_t>(i)] = 1;
        int mass = 0;
        for (std::size_t k = 0; k < off.size(); ++k) {
            full[static_cast<std::size_t>(off[k])] = a[k];
            mass -= a[k];
        }
        bool zero = true;
        for (int c = 0; c < p.dim(); ++c) {
            Integer s = 0;
            for (int k = 0; k < d; ++k)
                s += full[static_cast<std::size_t>(k)] * p.facet(k).normal[static_cast<std::size_t>(c)];
            zero = zero && s == 0;
        }
        if (zero && mass <= static_cast<int>(I.size()) - 1)
            found.push_back(full);
        std::size_t i = 0;
        while (i < a.size() && ++a[i] > 0)
            a[i++] = -bound;
        if (i == a.size())
            break;
    }
    return found;
}

// Bitmask polynomials over F₂.
int bdeg(std::uint64_t a)
{
    int d = -1;
    while (a >> (d + 1))
        ++d;
    return d;
}

std::uint64_t euclid_inverse(std::uint64_t a, std::uint64_t m)
{
    std::uint64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::uint64_t q = 0, r = r0;
        while (bdeg(r) >= bdeg(r1)) {
            const int shift = bdeg(r) - bdeg(r1);
            q |= std::uint64_t{1} << shift;
            r ^= r1 << shift;
        }
        std::uint64_t qs = 0;
        for (int k = 0; k < 32; ++k)
            if (q >> k & 1)
                qs ^= s1 << k;
        r0 = r1;
        r1 = r;
        const std::uint64_t s = s0 ^ qs;
        s0 = s1;
        s1 = s;
    }
    expect(r0 == 1, "not coprime");
    while (bdeg(s0) >= bdeg(m))
        s0 ^= m << (bdeg(s0) - bdeg(m));
    return s0;
}

F2Poly random_order_reduce(F2Poly f, const std::vector<F2Poly>& basis, std::mt19937& rng)
{
    while (true) {
        std::vector<std::pair<Monomial, const F2Poly*>> moves;
        for (const Monomial& m : f.terms())
            for (const F2Poly& g : basis)
                if (divides(g.lead(), m))
                    moves.emplace_back(m, &g);
        if (moves.empty())
            return f;
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        const auto& [m, g] = moves[pick(rng)];
        f += g->times(quotient(m, g->lead()));
    }
}

void criterion1()
{
    const Polytope p = builtin("blowup_cp3");
    const Ring ring(p, Space::L, Flavor::Quantum);
    const std::size_t n = 5;
    // X = X1, Y = X4 together with the linear relations of the normals.
    std::vector<F2Poly> ideal = ring.presentation().linear_relations;
    ideal.push_back(F2Poly(n, {mono(n, {{0, 3}}), mono(n, {{3, 1}}, 2)}));
    ideal.push_back(F2Poly(n, {mono(n, {{3, 2}}), mono(n, {{0, 1}, {3, 1}}), mono(n, {}, 2)}));
    const GroebnerBasis expected = saturate_t(buchberger(ideal, n));
    expect(expected == ring.quotient().homogeneous_basis(), "ideal differs from <X^3+Yq^-2, Y^2+XY+q^-2>");
    expect(ring.quotient().dim() == 6, "rank is not 6");
    std::vector<std::string> shown;
    for (const F2Poly& g : ring.quotient().homogeneous_basis().generators)
        if (g.lead().x_degree() > 1)
            shown.push_back(ring.format_reduced(g));
    expect(shown == std::vector<std::string>{"X4^2 + X1*X4 + q^-2", "X1^3 + X4*q^-2"}, "display of relations");
}

void criterion2()
{
    const Ring ring(builtin("blowup_cp3"), Space::L, Flavor::Quantum);
    const QHElement yy = multiply(ring, el(ring, "X4"), el(ring, "X4"));
    expect(yy == el(ring, "X1*X4 + L*q^-2"), "Y*Y");
    expect(ring.format(yy) == "X1*X4 + L*q^-2", "Y*Y display");
    const QHElement s2 = seidel_composite(ring, IntVec{0, 0, 0, 2, 0}).element;
    expect(s2 == el(ring, "X1*X4*q^2 + L"), "S(Λ_4)");
    const QHElement s3 = seidel_composite(ring, IntVec{1, 1, 0, 1, 0}).element;
    expect(s3 == el(ring, "X1^2*X4*q^3"), "S(Λ_1^½ Λ_2^½ Λ_4^½)");
    expect(ring.format(s3) == "X1^2*X4*q^3", "basis expansion display");
}

void criterion3()
{
    const Polytope p = builtin("blowup_cp3");
    const auto vs = delzant_vertices(p);
    const auto data = primitive_data(p, vs);
    expect(data.size() == 2, "expected two primitive collections");
    const std::vector<std::pair<IndexSet, IntVec>> want = {{{0, 1, 4}, IntVec{1, 1, 0, -1, 1}},
                                                           {{2, 3}, IntVec{0, 0, 1, 1, 0}}};
    for (std::size_t i = 0; i < 2; ++i) {
        expect(data[i].indices == want[i].first, "primitive collection indices");
        expect(data[i].batyrev == want[i].second, "Batyrev vector");
        expect(data[i].degree == 2, "quantum degree");
        const auto found = batyrev_search(p, want[i].first, 4);
        expect(found.size() == 1 && found[0] == want[i].second, "exhaustive search is not unique");
    }
}

void criterion4()
{
    for (int n = 1; n <= 5; ++n) {
        const Polytope p = builtin("cp" + std::to_string(n));
        const Ring ring(p, Space::L, Flavor::Quantum);
        const std::size_t d = static_cast<std::size_t>(n + 1);
        std::vector<F2Poly> rel = ring.presentation().linear_relations;
        Monomial all(d), tpow(d);
        std::fill(all.x.begin(), all.x.end(), 1);
        tpow.t = n + 1;
        rel.push_back(F2Poly(d, {all, tpow}));
        expect(saturate_t(buchberger(rel, d)) == ring.quotient().homogeneous_basis(), "SR formula mismatch");
        expect(ring.quotient().dim() == d, "rank");
        const std::string k = std::to_string(n + 1);
        expect(ring.format_reduced(ring.quotient().homogeneous_basis().generators.back()) == "X1^" + k + " + q^-" + k,
               "display of X^(n+1) + q^-(n+1)");
        const auto vs = delzant_vertices(p);
        IntVec xi(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            xi[static_cast<std::size_t>(i)] = Integer(1) << (3 * i);
        expect(morse_histogram(p, vs, xi) == std::vector<int>(d, 1), "Betti vector not all ones");
        expect(betti_numbers(p, vs, generic_xi(p, vs)) == std::vector<int>(d, 1), "library Betti vector");
    }
}

void criterion5()
{
    for (const char* name : {"cp1", "cp2", "cp3", "cp1xcp1", "blowup_cp3"}) {
        const Polytope p = builtin(name);
        const auto vs = delzant_vertices(p);
        const Ring l(p, Space::L, Flavor::Classical), m(p, Space::M, Flavor::Classical);
        const auto hl = l.quotient().hilbert_function();
        const auto hm = m.quotient().hilbert_function();
        const auto morse = morse_histogram(p, vs, generic_xi(p, vs));
        expect(std::vector<int>(hl.rbegin(), hl.rend()) == morse, std::string(name) + ": Hilbert vs Morse");
        for (std::size_t k = 0; k < hm.size(); ++k)
            expect(hm[k] == (k % 2 ? 0 : hl[k / 2]), std::string(name) + ": degrees not doubled");
        betti_crosscheck(p);
    }
    expect(betti_crosscheck(builtin("blowup_cp3")).betti == std::vector<int>{1, 2, 2, 1}, "blowup Betti");
}

void criterion6()
{
    for (const auto& name : testing::all_builtins())
        for (Flavor f : {Flavor::Classical, Flavor::Quantum}) {
            const Ring l(builtin(name), Space::L, f), m(builtin(name), Space::M, f);
            expect(verify_psi(l.presentation(), m.presentation()), name + ": psi");
        }
    const Polytope p = builtin("blowup_cp3");
    const Ring l(p, Space::L, Flavor::Quantum), m(p, Space::M, Flavor::Quantum);
    Presentation mutated = m.presentation();
    mutated.sr_relations.back() = F2Poly(5, {mono(5, {{2, 1}, {3, 1}}), mono(5, {{4, 1}}, 1)});
    expect(!verify_psi(l.presentation(), mutated), "mutated relation accepted");
}

void criterion7()
{
    for (const auto& name : testing::all_builtins()) {
        const Ring ring(builtin(name), Space::L, Flavor::Quantum);
        for (const auto& pc : ring.collections())
            expect(verify_seidel_relation(ring, pc), name + ": Seidel relation");
    }
    const Ring ring(builtin("blowup_cp3"), Space::L, Flavor::Quantum);
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> d(-2, 2);
    for (int trial = 0; trial < 100; ++trial) {
        IntVec c(5), c2(5), sum(5);
        for (std::size_t k = 0; k < 5; ++k) {
            c[k] = d(rng);
            c2[k] = d(rng);
            sum[k] = c[k] + c2[k];
        }
        expect(multiply(ring, seidel_composite(ring, c).element, seidel_composite(ring, c2).element) ==
                   seidel_composite(ring, sum).element,
               "morphism fails for " + to_string(c) + ", " + to_string(c2));
    }
}

void criterion8()
{
    for (const auto& name : testing::all_builtins()) {
        const Ring ring(builtin(name), Space::L, Flavor::Quantum);
        const UniruledCertificate c = uniruled_certificate(ring);
        expect(c.uniruled, name + ": " + c.reason);
        expect(c.inverse && multiply(ring, c.witness.element, *c.inverse) == ring.fundamental_class(),
               name + ": inverse not verified");
    }
    const Ring ring(builtin("blowup_cp3"), Space::L, Flavor::Quantum);
    const std::uint64_t inv = euclid_inverse(0b10, 0b1010001);  // X in F₂[X]/(X^6+X^4+1)
    expect(inv == 0b101000, "oracle inverse is not X^5 + X^3");
    QHElement expected;
    for (int k = 0; k < 6; ++k)
        if (inv >> k & 1)
            expected += el(ring, "X1^" + std::to_string(k) + "*q^" + std::to_string(k));
    expect(invert(ring, el(ring, "X1*q")) == expected, "inverse of X*q differs from the oracle");
}

void criterion9()
{
    const auto first = [](const std::string& file) {
        DelzantReport r = validate_delzant(load_polytope(testing::fixture(file)));
        expect(!r.passed(), file + " accepted");
        return r.issues.front().code;
    };
    expect(first("square_det2.json") == ErrorCode::RejectNonUnimodular, "det-2 square");
    expect(first("pyramid.json") == ErrorCode::RejectNonSimple, "pyramid");
}

void criterion10()
{
    for (const char* name : {"blowup_cp3", "cp3"}) {
        const Ring ring(builtin(name), Space::L, Flavor::Quantum);
        const QuotientRing& q = ring.quotient();
        const std::size_t n = q.nvars();
        std::vector<int> e(n, 0);
        while (true) {
            int deg = 0;
            for (int v : e)
                deg += v;
            for (int t = 0; deg + t <= 6; ++t) {
                const Monomial m(e, t);
                expect(q.element_of(m) == q.element_of_homogeneous(F2Poly::monomial(m)),
                       std::string(name) + ": normal forms differ");
            }
            std::size_t i = 0;
            while (i < n && ++e[i] > 6)
                e[i++] = 0;
            if (i == n)
                break;
        }
    }
    const Ring ring(builtin("blowup_cp3"), Space::L, Flavor::Quantum);
    const auto& gb = ring.quotient().homogeneous_basis().generators;
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> exp(0, 3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Monomial> terms;
        for (int k = 0; k < 4; ++k) {
            Monomial m(5);
            int deg = 0;
            for (auto& x : m.x)
                deg += (x = exp(rng));
            m.t = 15 - deg;
            terms.push_back(m);
        }
        const F2Poly f(5, terms);
        std::vector<F2Poly> shuffled = gb;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        expect(random_order_reduce(f, shuffled, rng) == reduce(f, gb), "reduction not confluent");
    }
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void()>>> criteria = {
        {"Example 5 presentation", criterion1},
        {"Example 5 products", criterion2},
        {"Batyrev vectors of blowup_cp3", criterion3},
        {"CP^n family", criterion4},
        {"Betti cross-check", criterion5},
        {"psi isomorphism", criterion6},
        {"Seidel relations and morphism", criterion7},
        {"uniruledness certificates", criterion8},
        {"Delzant gatekeeping", criterion9},
        {"oracle equivalence and confluence", criterion10},
    };
    int failed = 0;
    const auto start = std::chrono::steady_clock::now();
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        std::string detail;
        bool ok = true;
        try {
            criteria[i].second();
        } catch (const Failure& f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        failed += !ok;
        std::cout << (ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first;
        if (!ok)
            std::cout << ": " << detail;
        std::cout << "\n";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed in "
              << seconds << " s\n";
    if (seconds >= 10) {
        std::cout << "FAIL time budget of 10 s exceeded\n";
        return 1;
    }
    return failed ? 1 : 0;
}
