#include "toricqh/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace toricqh {

namespace {

std::string one_based(const IndexSet& s)
{
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

Rat pairing(const RatVec& x, const IntVec& v)
{
    Rat s = 0;
    for (std::size_t k = 0; k < x.size(); ++k)
        s += x[k] * v[k];
    return s;
}

Integer lcm_of_denominators(const RatVec& v)
{
    Integer l = 1;
    for (const auto& x : v)
        l = lcm(l, x.get_den());
    return l;
}

IntVec primitive_integer_vector(const RatVec& v)
{
    Integer l = lcm_of_denominators(v);
    IntVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) {
        Rat scaled = v[k] * l;
        out[k] = scaled.get_num();
    }
    Integer g = content(out);
    if (g > 1)
        for (auto& x : out)
            x /= g;
    return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
template <typename F>
void for_each_subset(int n, int k, F&& f)
{
    if (k > n)
        return;
    IndexSet idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i)
            --i;
        if (i < 0)
            return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Integer floor_of(const Rat& r)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rat& r)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

}  // namespace

Polytope::Polytope(std::string name, int dim, const std::vector<Facet>& facets, Convention convention)
    : name_(std::move(name)), dim_(dim)
{
    if (dim < 1)
        throw Error(ErrorCode::RejectMalformed, "dimension must be positive");
    if (static_cast<int>(facets.size()) < dim + 1)
        throw Error(ErrorCode::RejectMalformed, "a compact polytope of dimension " + std::to_string(dim) +
                                                    " needs at least " + std::to_string(dim + 1) + " facets");
    facets_.reserve(facets.size());
    for (std::size_t i = 0; i < facets.size(); ++i) {
        Facet f = facets[i];
        if (static_cast<int>(f.normal.size()) != dim)
            throw Error(ErrorCode::RejectMalformed, "facet " + std::to_string(i + 1) + " normal has wrong length");
        if (content(f.normal) != 1)
            throw Error(ErrorCode::RejectMalformed,
                        "facet " + std::to_string(i + 1) + " normal " + to_string(f.normal) + " is not primitive");
        f.offset.canonicalize();
        if (convention == Convention::Outward) {
            for (auto& x : f.normal)
                x = -x;
            f.offset = -f.offset;
        }
        facets_.push_back(std::move(f));
    }
}

IntMat Polytope::normal_matrix() const
{
    IntMat m(facets_.size(), static_cast<std::size_t>(dim_));
    for (std::size_t i = 0; i < facets_.size(); ++i)
        for (std::size_t k = 0; k < static_cast<std::size_t>(dim_); ++k)
            m(i, k) = facets_[i].normal[k];
    return m;
}

Polytope Polytope::permuted(const std::vector<int>& perm) const
{
    assert(perm.size() == facets_.size());
    std::vector<Facet> f;
    for (int i : perm)
        f.push_back(facets_.at(static_cast<std::size_t>(i)));
    return Polytope(name_, dim_, f, Convention::Inward);
}

void DelzantReport::raise() const
{
    if (!issues.empty())
        throw Error(issues.front().code, issues.front().message);
}

std::vector<Vertex> enumerate_vertices(const Polytope& p)
{
    const int n = p.dim();
    const int d = p.facet_count();
    std::map<RatVec, Vertex> found;

    for_each_subset(d, n, [&](const IndexSet& subset) {
        IntMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
        RatVec b(static_cast<std::size_t>(n));
        for (int r = 0; r < n; ++r) {
            const Facet& f = p.facet(subset[static_cast<std::size_t>(r)]);
            for (int c = 0; c < n; ++c)
                m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = f.normal[static_cast<std::size_t>(c)];
            b[static_cast<std::size_t>(r)] = f.offset;
        }
        auto x = solve_rational(m, b);
        if (!x || found.count(*x))
            return;
        for (const Facet& f : p.facets())
            if (pairing(*x, f.normal) < f.offset)
                return;
        Vertex v;
        v.coords = *x;
        for (int i = 0; i < d; ++i)
            if (pairing(*x, p.facet(i).normal) == p.facet(i).offset)
                v.tight.push_back(i);
        found.emplace(*x, std::move(v));
    });

    std::vector<Vertex> out;
    out.reserve(found.size());
    for (auto& [coords, v] : found) {
        if (v.simple(n)) {
            IntMat m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c)
                    m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) =
                        p.facet(v.tight[static_cast<std::size_t>(r)]).normal[static_cast<std::size_t>(c)];
            v.normal_det = abs(det(m));
            auto inv = inverse_rational(m);
            assert(inv);
            for (int j = 0; j < n; ++j) {
                RatVec col(static_cast<std::size_t>(n));
                for (int r = 0; r < n; ++r)
                    col[static_cast<std::size_t>(r)] = (*inv)[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                v.edge_dirs.push_back(primitive_integer_vector(col));
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

DelzantReport validate_delzant(const Polytope& p)
{
    DelzantReport report;
    report.vertices = enumerate_vertices(p);
    const int n = p.dim();
    if (report.vertices.empty()) {
        report.issues.push_back({ErrorCode::RejectEmpty, "vertex enumeration found no vertices"});
        return report;
    }
    std::vector<bool> used(static_cast<std::size_t>(p.facet_count()), false);
    for (const Vertex& v : report.vertices) {
        std::string where = "vertex (";
        for (std::size_t k = 0; k < v.coords.size(); ++k)
            where += (k ? "," : "") + to_string(v.coords[k]);
        where += ")";
        for (int i : v.tight)
            used[static_cast<std::size_t>(i)] = true;
        if (!v.simple(n)) {
            report.issues.push_back({ErrorCode::RejectNonSimple, where + " lies on " + std::to_string(v.tight.size()) +
                                                                     " facets " + one_based(v.tight) + ", expected " +
                                                                     std::to_string(n)});
            continue;
        }
        if (v.normal_det != 1)
            report.issues.push_back({ErrorCode::RejectNonUnimodular,
                                     where + " has normal determinant " + v.normal_det.get_str() + " on facets " +
                                         one_based(v.tight)});
        for (const IntVec& w : v.edge_dirs) {
            bool bounded = false;
            for (const Facet& f : p.facets())
                if (dot(w, f.normal) < 0) {
                    bounded = true;
                    break;
                }
            if (!bounded)
                report.issues.push_back({ErrorCode::RejectUnbounded, where + " has an unbounded edge " + to_string(w)});
        }
    }
    for (int i = 0; i < p.facet_count(); ++i)
        if (!used[static_cast<std::size_t>(i)])
            report.issues.push_back(
                {ErrorCode::RejectRedundantFacet, "facet " + std::to_string(i + 1) + " contains no vertex"});
    std::stable_sort(report.issues.begin(), report.issues.end(),
                     [](const DelzantIssue& a, const DelzantIssue& b) { return a.code < b.code; });
    return report;
}

std::vector<Vertex> delzant_vertices(const Polytope& p)
{
    DelzantReport r = validate_delzant(p);
    r.raise();
    return std::move(r.vertices);
}

bool face_nonempty(const std::vector<Vertex>& vertices, const IndexSet& face)
{
    if (face.empty())
        return true;
    return std::any_of(vertices.begin(), vertices.end(), [&](const Vertex& v) {
        return std::includes(v.tight.begin(), v.tight.end(), face.begin(), face.end());
    });
}

std::vector<IndexSet> primitive_collections(const Polytope& p, const std::vector<Vertex>& vertices)
{
    const int d = p.facet_count();
    std::vector<IndexSet> out;
    for (int k = 1; k <= d; ++k) {
        for_each_subset(d, k, [&](const IndexSet& s) {
            if (face_nonempty(vertices, s))
                return;
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                IndexSet sub = s;
                sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!face_nonempty(vertices, sub))
                    return;
            }
            out.push_back(s);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

IntVec batyrev_vector(const Polytope& p, const IndexSet& primitive)
{
    const int d = p.facet_count();
    const IntMat kernel = kernel_lattice_basis(p.normal_matrix());  // s × d
    const std::size_t s = kernel.rows();
    const long l = static_cast<long>(primitive.size());
    std::vector<bool> in_i(static_cast<std::size_t>(d), false);
    for (int i : primitive)
        in_i[static_cast<std::size_t>(i)] = true;
    if (s == 0)
        throw Error(ErrorCode::NoBatyrevVector, "normal matrix has trivial kernel");

    // Box for a: a_k = 1 on I, -(l-1) <= a_k <= 0 off I.
    auto lo = [&](std::size_t k) { return in_i[k] ? Rat(1) : Rat(-(l - 1)); };
    auto hi = [&](std::size_t k) { return in_i[k] ? Rat(1) : Rat(0); };

    // Pick s coordinates R where the kernel basis is invertible, so that the
    // lattice parameter t is an affine function of a_R: t = a_R · K_R^{-1}.
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < static_cast<std::size_t>(d) && cols.size() < s; ++c) {
        std::vector<std::size_t> trial = cols;
        trial.push_back(c);
        IntMat sub(s, trial.size());
        for (std::size_t r = 0; r < s; ++r)
            for (std::size_t j = 0; j < trial.size(); ++j)
                sub(r, j) = kernel(r, trial[j]);
        if (hermite_normal_form(sub.transpose()).h.row(trial.size() - 1) != IntVec(s, 0))
            cols = std::move(trial);
    }
    assert(cols.size() == s);
    IntMat kr(s, s);
    for (std::size_t r = 0; r < s; ++r)
        for (std::size_t j = 0; j < s; ++j)
            kr(r, j) = kernel(r, cols[j]);
    auto inv = inverse_rational(kr);
    assert(inv);

    // t_r = Σ_j a_{R_j} · inv[j][r]; interval bounds from the box.
    std::vector<Integer> t_lo(s), t_hi(s);
    for (std::size_t r = 0; r < s; ++r) {
        Rat mn = 0, mx = 0;
        for (std::size_t j = 0; j < s; ++j) {
            const Rat& c = (*inv)[j][r];
            Rat a = c * lo(cols[j]), b = c * hi(cols[j]);
            mn += std::min(a, b);
            mx += std::max(a, b);
        }
        t_lo[r] = ceil_of(mn);
        t_hi[r] = floor_of(mx);
        if (t_lo[r] > t_hi[r])
            throw Error(ErrorCode::NoBatyrevVector, "empty search region for " + one_based(primitive));
    }

    std::vector<IntVec> solutions;
    std::vector<Integer> t = t_lo;
    while (true) {
        IntVec a = row_times(t, kernel);
        bool ok = true;
        Integer negative_mass = 0;
        for (std::size_t k = 0; k < static_cast<std::size_t>(d) && ok; ++k) {
            if (in_i[k])
                ok = a[k] == 1;
            else {
                ok = a[k] <= 0;
                negative_mass -= a[k];
            }
        }
        if (ok && negative_mass <= l - 1)
            solutions.push_back(std::move(a));
        std::size_t r = 0;
        while (r < s && t[r] == t_hi[r]) {
            t[r] = t_lo[r];
            ++r;
        }
        if (r == s)
            break;
        ++t[r];
    }
    if (solutions.empty())
        throw Error(ErrorCode::NoBatyrevVector,
                    "no relation with a_I = 1, a_J <= 0 and positive degree for " + one_based(primitive));
    if (solutions.size() > 1)
        throw Error(ErrorCode::NonUniqueBatyrevVector, std::to_string(solutions.size()) +
                                                           " candidate relations for " + one_based(primitive));
    return solutions.front();
}

int quantum_degree(const IndexSet& primitive, const IntVec& batyrev)
{
    Integer m = static_cast<long>(primitive.size());
    for (std::size_t k = 0; k < batyrev.size(); ++k)
        if (!std::binary_search(primitive.begin(), primitive.end(), static_cast<int>(k)))
            m -= abs(batyrev[k]);
    if (m <= 0)
        throw Error(ErrorCode::FanoViolation,
                    "quantum degree " + m.get_str() + " for collection " + one_based(primitive) + " is not positive");
    return static_cast<int>(m.get_si());
}

std::vector<PrimitiveCollection> primitive_data(const Polytope& p, const std::vector<Vertex>& vertices)
{
    std::vector<PrimitiveCollection> out;
    for (IndexSet& s : primitive_collections(p, vertices)) {
        PrimitiveCollection pc;
        pc.batyrev = batyrev_vector(p, s);
        pc.degree = quantum_degree(s, pc.batyrev);
        pc.indices = std::move(s);
        out.push_back(std::move(pc));
    }
    return out;
}

int morse_index(const Vertex& v, const IntVec& xi)
{
    int index = 0;
    for (const IntVec& w : v.edge_dirs) {
        Integer s = dot(w, xi);
        if (s == 0)
            throw Error(ErrorCode::NonGenericXi, "xi " + to_string(xi) + " is orthogonal to edge " + to_string(w));
        if (s < 0)
            ++index;
    }
    return index;
}

std::vector<int> betti_numbers(const Polytope& p, const std::vector<Vertex>& vertices, const IntVec& xi)
{
    if (static_cast<int>(xi.size()) != p.dim())
        throw Error(ErrorCode::NonGenericXi, "xi has length " + std::to_string(xi.size()) + ", expected " +
                                                 std::to_string(p.dim()));
    std::vector<int> b(static_cast<std::size_t>(p.dim() + 1), 0);
    for (const Vertex& v : vertices)
        ++b.at(static_cast<std::size_t>(morse_index(v, xi)));
    return b;
}

IntVec generic_xi(const Polytope& p, const std::vector<Vertex>& vertices)
{
    Integer base = 1;
    for (const Vertex& v : vertices)
        for (const IntVec& w : v.edge_dirs)
            for (const Integer& x : w)
                base = std::max(base, Integer(abs(x) + 1));
    IntVec xi;
    Integer power = 1;
    for (int k = 0; k < p.dim(); ++k) {
        xi.push_back(power);
        power *= base;
    }
    return xi;
}

}  // namespace toricqh
