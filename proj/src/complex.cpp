// complex.cpp
// Construction, restriction, cohomology and coboundary certificates for
// filtered cochain complexes (see complex.hpp for the lift conventions).

#include "floer/complex.hpp"

#include <algorithm>
#include <set>

#include "floer/errors.hpp"

namespace floer {

namespace {

// The differential lowers the Floer index by one on lifts.  For canonical
// representatives (grading in 0..7, cs in [0,1)) the pair (target b,
// source a) supports a nonzero entry iff grading(b) == grading(a) - 1 mod 8,
// with the additional cs(b) < cs(a) requirement exactly when there is no
// wrap (grading(a) >= 1); across the wrap the paired target lift sits at
// cs(b) - 1 < 0 <= cs(a), so no constraint remains.
bool pair_supports_entry(const Generator& target, const Generator& source) {
    if (((source.grading - target.grading) % 8 + 8) % 8 != 1) return false;
    if (source.grading >= 1) return target.cs_level < source.cs_level;
    return true;
}

void check_dd_zero(const FilteredComplex& c, const char* ctx) {
    size_t n = c.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            i128 acc = 0;
            for (size_t k = 0; k < n; ++k) acc += i128(c.d[i][k]) * c.d[k][j];
            if (acc != 0)
                throw InternalCheckFailure(std::string("d*d != 0 (") + ctx + ") at (" +
                                           c.generators[i].id + ", " + c.generators[j].id + ")");
        }
}

} // namespace

size_t FilteredComplex::index_of(const std::string& id) const {
    for (size_t i = 0; i < generators.size(); ++i)
        if (generators[i].id == id) return i;
    return npos;
}

FilteredComplex make_complex(std::vector<Generator> generators, Mat d,
                             bool differential_incomplete) {
    size_t n = generators.size();
    if (d.empty()) d.assign(n, std::vector<i64>(n, 0));
    if (mat_rows(d) != n || (n > 0 && mat_cols(d) != n))
        throw InternalCheckFailure("differential matrix shape does not match generator count");

    std::set<std::string> seen;
    for (const auto& g : generators) {
        if (!seen.insert(g.id).second)
            throw UnsupportedInput("duplicate generator id: " + g.id);
        if (g.grading < 0 || g.grading > 7)
            throw DegreeMismatch("grading of " + g.id + " not in 0..7");
        if (g.cs_level < Rat(0) || !(g.cs_level < Rat(1)))
            throw UnsupportedInput("cs level of " + g.id + " not in [0,1)");
    }
    for (size_t b = 0; b < n; ++b)
        for (size_t a = 0; a < n; ++a)
            if (d[b][a] != 0 && !pair_supports_entry(generators[b], generators[a]))
                throw DegreeMismatch("differential entry (" + generators[b].id + ", " +
                                     generators[a].id +
                                     ") violates the index/cs lift-pairing rule");

    FilteredComplex c{std::move(generators), std::move(d), differential_incomplete};
    if (!differential_incomplete) check_dd_zero(c, "construction");
    return c;
}

FilteredComplex restrict_complex(const FilteredComplex& c, const RatInf& r) {
    if (r.is_inf()) return c;
    Rat frac = r.finite().mod1();
    for (const auto& g : c.generators)
        if (g.cs_level == frac)
            throw ForbiddenLevel("r = " + r.str() + " hits the cs lift of generator " + g.id);

    std::vector<size_t> keep;
    for (size_t i = 0; i < c.size(); ++i)
        if (c.generators[i].cs_level < r.finite()) keep.push_back(i);

    FilteredComplex out;
    out.differential_incomplete = c.differential_incomplete;
    for (size_t i : keep) out.generators.push_back(c.generators[i]);
    out.d.assign(keep.size(), std::vector<i64>(keep.size(), 0));
    for (size_t bi = 0; bi < keep.size(); ++bi)
        for (size_t ai = 0; ai < keep.size(); ++ai)
            out.d[bi][ai] = c.d[keep[bi]][keep[ai]];
    if (!out.differential_incomplete) check_dd_zero(out, "restriction");
    return out;
}

namespace {

// Coboundary matrix from degree deg to deg+1 of the (already restricted)
// complex: rows = generators of grading deg+1 mod 8, cols = grading deg,
// entry [a][b] = d[b][a] (delta f (a) = f(da)).
Mat coboundary_matrix(const FilteredComplex& c, int deg,
                      std::vector<size_t>* col_gens = nullptr,
                      std::vector<size_t>* row_gens = nullptr) {
    int lo = ((deg % 8) + 8) % 8, hi = (lo + 1) % 8;
    std::vector<size_t> cols, rows;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c.generators[i].grading == lo) cols.push_back(i);
        if (c.generators[i].grading == hi) rows.push_back(i);
    }
    Mat m(rows.size(), std::vector<i64>(cols.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            m[i][j] = c.d[cols[j]][rows[i]];
    if (col_gens) *col_gens = cols;
    if (row_gens) *row_gens = rows;
    return m;
}

size_t snf_rank(const Mat& m) {
    if (mat_rows(m) == 0 || mat_cols(m) == 0) return 0;
    SmithResult s = smith_normal_form(m);
    size_t r = 0, nmin = std::min(mat_rows(m), mat_cols(m));
    while (r < nmin && s.D[r][r] != 0) ++r;
    return r;
}

} // namespace

AbelianGroup cohomology(const FilteredComplex& c0, int i, const RatInf& r) {
    if (c0.differential_incomplete)
        throw DifferentialIncomplete("cohomology needs a complete differential");
    FilteredComplex c = restrict_complex(c0, r);

    // mat_cols(out) would undercount when degree i+1 is empty (the matrix
    // degenerates to 0 x 0), so take the generator count from the column list
    std::vector<size_t> cols_i;
    Mat out = coboundary_matrix(c, i, &cols_i); // delta^i : CF^i -> CF^{i+1}
    Mat in = coboundary_matrix(c, i - 1);       // delta^{i-1} : CF^{i-1} -> CF^i
    size_t ci = cols_i.size();                  // generator count in degree i

    AbelianGroup g;
    size_t rank_out = snf_rank(out);
    if (mat_rows(in) == 0 || mat_cols(in) == 0) {
        g.free_rank = i64(ci - rank_out);
        return g;
    }
    SmithResult s = smith_normal_form(in);
    size_t rank_in = 0, nmin = std::min(mat_rows(in), mat_cols(in));
    while (rank_in < nmin && s.D[rank_in][rank_in] != 0) ++rank_in;
    g.free_rank = i64(ci) - i64(rank_out) - i64(rank_in);
    if (g.free_rank < 0)
        throw InternalCheckFailure("negative cohomology rank: delta^2 != 0?");
    for (size_t k = 0; k < rank_in; ++k)
        if (s.D[k][k] > 1) g.torsion.push_back(s.D[k][k]);
    return g;
}

std::optional<CoChain> is_coboundary(const CoChain& t, const FilteredComplex& c0,
                                     const RatInf& r) {
    if (c0.differential_incomplete)
        throw DifferentialIncomplete("is_coboundary needs a complete differential");
    FilteredComplex c = restrict_complex(c0, r);

    int deg = ((t.degree % 8) + 8) % 8;
    for (const auto& [id, coeff] : t.coefficients) {
        size_t idx = c.index_of(id);
        if (idx == FilteredComplex::npos) {
            if (coeff != 0)
                throw DegreeMismatch("cochain supported on " + id +
                                     " which is absent from the restricted complex");
            continue;
        }
        if (coeff != 0 && c.generators[idx].grading != deg)
            throw DegreeMismatch("cochain coefficient on " + id + " of grading " +
                                 std::to_string(c.generators[idx].grading) +
                                 " but cochain degree is " + std::to_string(deg));
    }

    // delta^{deg-1}(n) = -t: rows of the coboundary matrix are degree-deg
    // generators, columns are degree-(deg-1) generators.
    std::vector<size_t> cols, rows;
    Mat m = coboundary_matrix(c, deg - 1, &cols, &rows);
    if (rows.empty()) {
        // no degree-deg generators survive, so t restricts to zero and the
        // zero cochain is a witness (the 0-row Mat would otherwise forget
        // its column count and desynchronize from cols below)
        CoChain n;
        n.degree = ((deg - 1) % 8 + 8) % 8;
        return n;
    }
    std::vector<i64> rhs(rows.size(), 0);
    for (size_t i = 0; i < rows.size(); ++i) {
        auto it = t.coefficients.find(c.generators[rows[i]].id);
        if (it != t.coefficients.end())
            rhs[i] = checked_i64(-i128(it->second), "is_coboundary rhs");
    }
    auto x = solve_integer(m, rhs);
    if (!x) return std::nullopt;
    CoChain n;
    n.degree = ((deg - 1) % 8 + 8) % 8;
    for (size_t j = 0; j < cols.size(); ++j)
        if ((*x)[j] != 0) n.coefficients[c.generators[cols[j]].id] = (*x)[j];
    return n;
}

std::vector<Rat> admissible_levels(const FilteredComplex& c) {
    std::set<std::pair<i64, i64>> seen;
    std::vector<Rat> out;
    bool has_zero = false;
    for (const auto& g : c.generators) {
        if (seen.insert({g.cs_level.num(), g.cs_level.den()}).second)
            out.push_back(g.cs_level);
        if (g.cs_level == Rat(0)) has_zero = true;
    }
    if (has_zero) out.push_back(Rat(1)); // the lift 0 + 1 also lies in [0,1]
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace floer
