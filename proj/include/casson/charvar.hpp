#pragma once

// Character-variety machinery for Seifert presentations: weight-vector
// lattice enumeration, explicit triangle-group representations built by
// trace-conjugation, and Fox-calculus cocycle dimensions.

#include "casson/mat2.hpp"
#include "casson/seifert.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <numbers>
#include <vector>

namespace casson {

using cd = std::complex<double>;
using Mat2c = Mat2<cd>;

inline Mat2c mat_identity() { return Mat2c::identity(cd(1.0)); }

inline Mat2c mat_diag(double theta) {
    return {std::polar(1.0, theta), cd(0.0), cd(0.0), std::polar(1.0, -theta)};
}

inline Mat2c mat_scale(const Mat2c& m, const cd& s) {
    return {m.a * s, m.b * s, m.c * s, m.d * s};
}

inline Mat2c mat_inverse(const Mat2c& m) {
    cd det = m.det();
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

inline Mat2c mat_pow(Mat2c base, long e) {
    Mat2c out = mat_identity();
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

// largest singular value, closed form for 2x2
inline double mat_norm(const Mat2c& m) {
    double t = std::norm(m.a) + std::norm(m.b) + std::norm(m.c) + std::norm(m.d);
    double d = std::norm(m.det());
    double disc = std::max(0.0, t * t - 4.0 * d);
    return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

inline double mat_defect(const Mat2c& m) { return mat_norm(m - mat_identity()); }

// ---- weight-vector lattice ---------------------------------------------------

// Tuple reordered so a possibly-even entry sits first; the first entry plays
// the doubled role in T(2a_1, a_2, ..., a_n).
inline std::vector<long> doubled_first_order(const SeifertTuple& t) {
    std::vector<long> a = t.a;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] % 2 == 0) {
            std::rotate(a.begin(), a.begin() + static_cast<long>(i), a.begin() + static_cast<long>(i) + 1);
            break;
        }
    }
    return a;
}

struct WeightEnumeration {
    long total = 0;              // all admissible weight vectors
    std::map<int, long> by_m;    // m(alpha) -> count, for m >= 0
};

// Exhaustive enumeration of parabolic weight vectors:
//   alpha_1 = k_1/(2 a_1), 0 <= k_1 <= a_1;  alpha_i = k_i/a_i, 0 <= k_i < a_i/2
// m(alpha) counts entries strictly inside (0, 1/2).
inline WeightEnumeration enumerate_weights(const SeifertTuple& t) {
    std::vector<long> a = doubled_first_order(t);
    WeightEnumeration out;
    size_t n = a.size();
    std::function<void(size_t, int)> rec = [&](size_t i, int m) {
        if (i == n) {
            ++out.total;
            ++out.by_m[m];
            return;
        }
        if (i == 0) {
            for (long k = 0; k <= a[0]; ++k)
                rec(1, m + (k > 0 && k < a[0] ? 1 : 0));
        } else {
            for (long k = 0; 2 * k < a[i]; ++k)
                rec(i + 1, m + (k > 0 ? 1 : 0));
        }
    };
    rec(0, 0);
    return out;
}

// lattice-point oracle for lambda_seifert: weights with m(alpha) = 3
inline long count_isolated_weights(const SeifertTuple& t) {
    auto e = enumerate_weights(t);
    auto it = e.by_m.find(3);
    return it == e.by_m.end() ? 0 : it->second;
}

// counts of weight vectors with m(alpha) = m, keyed by dimension 2m-6
inline std::map<int, long> components_by_dimension(const SeifertTuple& t) {
    auto e = enumerate_weights(t);
    std::map<int, long> out;
    for (const auto& [m, cnt] : e.by_m)
        if (m >= 3) out[2 * m - 6] = cnt;
    return out;
}

// ---- presentation coefficients ----------------------------------------------

inline std::array<long long, 3> ext_gcd(long long x, long long y) {
    // returns (g, u, v) with u*x + v*y = g
    long long r0 = x, r1 = y, u0 = 1, u1 = 0, v0 = 0, v1 = 1;
    while (r1 != 0) {
        long long q = r0 / r1;
        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
        std::tie(u0, u1) = std::make_pair(u1, u0 - q * u1);
        std::tie(v0, v1) = std::make_pair(v1, v0 - q * v1);
    }
    if (r0 < 0) { r0 = -r0; u0 = -u0; v0 = -v0; }
    return {r0, u0, v0};
}

// integers with a*qr + b*pr + c*pq = 1
inline std::array<long long, 3> solve_abc(long p, long q, long r) {
    if (p < 1 || q < 1 || r < 1 || std::gcd(p, q) != 1 || std::gcd(q, r) != 1 ||
        std::gcd(p, r) != 1)
        throw std::domain_error("solve_abc requires positive pairwise-coprime input");
    auto [g1, a, s] = ext_gcd(static_cast<long long>(q) * r, p);
    auto [g2, u, v] = ext_gcd(r, q);
    (void)g1;
    (void)g2;
    return {a, u * s, v * s};
}

// shift (a,b,c) so that b and c are even; requires q, r odd
inline std::array<long long, 3> normalize_abc_parity(long p, long q, long r,
                                                     std::array<long long, 3> abc) {
    auto& [a, b, c] = abc;
    while (b % 2 != 0) { b += q; a -= p; }
    while (c % 2 != 0) { c += r; a -= p; }
    return abc;
}

// ---- triangle-group representations ------------------------------------------

struct TrianglePresentation {
    std::vector<long> orders;    // (2 a_1, a_2, ..., a_n)
    bool product_relation = true;

    static TrianglePresentation for_tuple(const SeifertTuple& t) {
        std::vector<long> a = doubled_first_order(t);
        TrianglePresentation p;
        p.orders = a;
        p.orders[0] = 2 * a[0];
        return p;
    }
};

struct NumericRep {
    std::vector<Mat2c> images;
    double residual = 0.0;   // max relation defect, spectral norm
    double irred_gap = 0.0;  // |tr[A,B] - 2| witness for irreducibility
};

struct Conjugator {
    double u = 0.0, v = 0.0;
    Mat2c P() const { return {cd(u), cd(v), cd(-1.0), cd(1.0)}; }
};

// Solve u+v = 1, u cos(alpha+beta) + v cos(alpha-beta) = cos(gamma); then
// P = [[u, v], [-1, 1]] has det 1 and tr(A P B P^{-1}) = 2 cos(gamma) for
// diagonal A, B with angles alpha, beta.
inline Conjugator lemma_abc_conjugator(double alpha, double beta, double gamma) {
    const double pi = std::numbers::pi;
    if (!(alpha > 0 && alpha < pi && beta > 0 && beta < pi && gamma > 0 && gamma < pi))
        throw std::domain_error("conjugator angles must lie in (0, pi)");
    double cp = std::cos(alpha + beta), cm = std::cos(alpha - beta);
    double den = cp - cm;
    if (std::abs(den) < 1e-12)
        throw std::domain_error("degenerate conjugator system: cos(a+b) = cos(a-b)");
    double u = (std::cos(gamma) - cm) / den;
    return {u, 1.0 - u};
}

namespace detail {

// columns are eigenvectors of m for e^{i phi}, e^{-i phi}; m must not be +-I
inline Mat2c eigenbasis(const Mat2c& m, double phi) {
    cd lp = std::polar(1.0, phi), lm = std::polar(1.0, -phi);
    auto kernel_vec = [&](cd lam) -> std::pair<cd, cd> {
        // a nonzero column of adj(m - lam I)
        double r1 = std::abs(m.b) + std::abs(lam - m.a);
        double r2 = std::abs(lam - m.d) + std::abs(m.c);
        if (r1 >= r2) return {m.b, lam - m.a};
        return {lam - m.d, m.c};
    };
    auto [x1, y1] = kernel_vec(lp);
    auto [x2, y2] = kernel_vec(lm);
    return {x1, x2, y1, y2};
}

} // namespace detail

// Build an explicit representation of the polygon group with the given
// generator orders and generator traces: the first noncentral image is
// diagonal, each following one is conjugated into place so the running
// product keeps a prescribed trace, and the last is forced by the product
// relation.  Traces +-2 request central images (-2 only for the first
// generator); at least three noncentral generators are required.
inline NumericRep build_triangle_rep(const TrianglePresentation& pres,
                                     const std::vector<double>& traces) {
    const double pi = std::numbers::pi;
    size_t n = pres.orders.size();
    if (traces.size() != n)
        throw std::domain_error("one trace per generator required");

    std::vector<int> central_sign(n, 0); // +-1 when central, 0 when not
    std::vector<size_t> nc;
    for (size_t i = 0; i < n; ++i) {
        if (std::abs(traces[i]) > 2.0 - 1e-9) {
            if (traces[i] < 0 && i > 0)
                throw std::domain_error("trace -2 is only admissible for the first generator");
            central_sign[i] = traces[i] > 0 ? 1 : -1;
        } else {
            nc.push_back(i);
        }
    }
    if (nc.size() < 3)
        throw std::domain_error("need at least three noncentral generators for irreducibility");

    int s = 1;
    for (size_t i = 0; i < n; ++i)
        if (central_sign[i] == -1) s = -s;

    std::vector<double> theta(n, 0.0);
    for (size_t i : nc) theta[i] = std::acos(traces[i] / 2.0);

    std::vector<Mat2c> images(n, mat_identity());
    for (size_t i = 0; i < n; ++i)
        if (central_sign[i] == -1) images[i] = mat_scale(mat_identity(), cd(-1.0));

    size_t m = nc.size();
    Mat2c partial = mat_diag(theta[nc[0]]);
    images[nc[0]] = partial;
    double phi = theta[nc[0]];
    for (size_t idx = 1; idx + 1 < m; ++idx) {
        double target;
        if (idx + 2 == m) {
            // close the product: the final partial must be conjugate to
            // s * images[last]^{-1}
            target = (s > 0) ? theta[nc[m - 1]] : pi - theta[nc[m - 1]];
        } else {
            target = 1.2345; // generic intermediate angle
        }
        Conjugator cj = lemma_abc_conjugator(phi, theta[nc[idx]], target);
        Mat2c V = detail::eigenbasis(partial, phi);
        Mat2c inner = cj.P() * mat_diag(theta[nc[idx]]) * mat_inverse(cj.P());
        Mat2c img = V * inner * mat_inverse(V);
        images[nc[idx]] = img;
        partial = partial * img;
        phi = target;
    }
    images[nc[m - 1]] = mat_scale(mat_inverse(partial), cd(static_cast<double>(s)));

    NumericRep rep;
    rep.images = std::move(images);

    double res = 0.0;
    for (size_t i = 0; i < n; ++i)
        res = std::max(res, mat_defect(mat_pow(rep.images[i], pres.orders[i])));
    Mat2c prod = mat_identity();
    for (size_t i = 0; i < n; ++i) prod = prod * rep.images[i];
    res = std::max(res, mat_defect(prod));
    rep.residual = res;

    Mat2c A = rep.images[nc[0]], B = rep.images[nc[1]];
    Mat2c comm = A * B * mat_inverse(A) * mat_inverse(B);
    rep.irred_gap = std::abs(comm.trace() - cd(2.0));
    return rep;
}

struct RelationReport {
    std::vector<double> defects;
    double max_defect = 0.0;
    bool pass = false;
};

inline RelationReport verify_relations(const NumericRep& rep,
                                       const TrianglePresentation& pres, double tol) {
    RelationReport r;
    for (size_t i = 0; i < pres.orders.size(); ++i) {
        if (pres.orders[i] <= 0) continue;
        r.defects.push_back(mat_defect(mat_pow(rep.images[i], pres.orders[i])));
    }
    if (pres.product_relation) {
        Mat2c prod = mat_identity();
        for (const auto& m : rep.images) prod = prod * m;
        r.defects.push_back(mat_defect(prod));
    }
    for (double d : r.defects) r.max_defect = std::max(r.max_defect, d);
    r.pass = r.max_defect < tol;
    return r;
}

// ---- Fox calculus -------------------------------------------------------------

namespace detail {

// Ad action of m on sl2 in the basis {[[1,0],[0,-1]], [[0,1],[0,0]], [[0,0],[1,0]]}
inline std::array<std::array<cd, 3>, 3> ad_matrix(const Mat2c& m) {
    static const std::array<Mat2c, 3> basis = {Mat2c{cd(1), cd(0), cd(0), cd(-1)},
                                               Mat2c{cd(0), cd(1), cd(0), cd(0)},
                                               Mat2c{cd(0), cd(0), cd(1), cd(0)}};
    std::array<std::array<cd, 3>, 3> out{};
    Mat2c mi = mat_inverse(m);
    for (int j = 0; j < 3; ++j) {
        Mat2c v = m * basis[static_cast<size_t>(j)] * mi;
        out[0][static_cast<size_t>(j)] = v.a;
        out[1][static_cast<size_t>(j)] = v.b;
        out[2][static_cast<size_t>(j)] = v.c;
    }
    return out;
}

using Block3 = std::array<std::array<cd, 3>, 3>;

inline Block3 block_zero() { return {}; }
inline Block3 block_eye(double s = 1.0) {
    Block3 b{};
    for (int i = 0; i < 3; ++i) b[static_cast<size_t>(i)][static_cast<size_t>(i)] = cd(s);
    return b;
}
inline Block3 block_add(const Block3& x, const Block3& y) {
    Block3 o{};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) o[i][j] = x[i][j] + y[i][j];
    return o;
}
inline Block3 block_sub(const Block3& x, const Block3& y) {
    Block3 o{};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) o[i][j] = x[i][j] - y[i][j];
    return o;
}
inline Block3 block_mul(const Block3& x, const Block3& y) {
    Block3 o{};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            for (size_t k = 0; k < 3; ++k) o[i][j] += x[i][k] * y[k][j];
    return o;
}
inline Block3 block_scale(const Block3& x, double s) {
    Block3 o{};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) o[i][j] = x[i][j] * s;
    return o;
}

// 1 + Ad(m) + ... + Ad(m)^(k-1)
inline Block3 ad_power_sum(const Block3& ad, long k) {
    Block3 sum{}, pw = block_eye();
    for (long i = 0; i < k; ++i) {
        sum = block_add(sum, pw);
        pw = block_mul(ad, pw);
    }
    return sum;
}

} // namespace detail

// Gaussian elimination with full pivoting.  Pivot magnitudes above 1e-6 count
// toward the rank, below 1e-9 end it; anything between is reported as an
// ambiguous cut rather than silently resolved.
inline int complex_rank(std::vector<std::vector<cd>> m, std::vector<double>* pivots_out = nullptr) {
    const double accept = 1e-6, reject = 1e-9;
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<double> pivots;
    size_t r0 = 0, c0 = 0;
    int rank = 0;
    while (r0 < rows && c0 < cols) {
        size_t pr = r0, pc = c0;
        double best = 0.0;
        for (size_t i = r0; i < rows; ++i)
            for (size_t j = c0; j < cols; ++j)
                if (std::abs(m[i][j]) > best) { best = std::abs(m[i][j]); pr = i; pc = j; }
        if (best < accept) {
            if (best > reject)
                throw indeterminate_error("rank cut is ambiguous: pivot magnitude " +
                                          std::to_string(best));
            break;
        }
        pivots.push_back(best);
        std::swap(m[r0], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);
        for (size_t i = r0 + 1; i < rows; ++i) {
            cd f = m[i][c0] / m[r0][c0];
            for (size_t j = c0; j < cols; ++j) m[i][j] -= f * m[r0][j];
        }
        ++rank;
        ++r0;
        ++c0;
    }
    if (pivots_out) *pivots_out = std::move(pivots);
    return rank;
}

struct CocycleReport {
    int dim_z1 = 0;
    int dim_b1 = 0;
    int dim_h1 = 0;
    std::vector<double> pivots;
    bool irreducible = false; // dim_b1 == 3, i.e. no common fixed vector
};

// Fox-calculus cocycle dimensions for the central extension presentation
//   < x_1..x_n, h | h central, x_i^{a_i} h^{b_i} = 1, x_1...x_n = 1 >
// with rho(h) = +-I.  Unknowns (X_1..X_n, H) in sl2^(n+1).
inline CocycleReport fox_cocycle_dims_general(const std::vector<Mat2c>& images,
                                              const std::vector<long>& a,
                                              const std::vector<long long>& b) {
    using namespace detail;
    size_t n = images.size();
    assert(a.size() == n && b.size() == n);
    std::vector<Block3> ad(n);
    for (size_t i = 0; i < n; ++i) ad[i] = ad_matrix(images[i]);

    size_t cols = 3 * (n + 1);
    std::vector<std::vector<cd>> sys;
    auto add_row_block = [&](const std::vector<std::pair<size_t, Block3>>& blocks) {
        for (size_t r = 0; r < 3; ++r) {
            std::vector<cd> row(cols, cd(0));
            for (const auto& [at, blk] : blocks)
                for (size_t c = 0; c < 3; ++c) row[3 * at + c] = blk[r][c];
            sys.push_back(std::move(row));
        }
    };

    // centrality of h: (1 - Ad x_i) H = 0
    for (size_t i = 0; i < n; ++i)
        add_row_block({{n, block_sub(block_eye(), ad[i])}});
    // torsion relators x_i^{a_i} h^{b_i}: (sum_j Ad x_i^j) X_i + b_i H = 0
    for (size_t i = 0; i < n; ++i)
        add_row_block({{i, ad_power_sum(ad[i], a[i])},
                       {n, block_eye(static_cast<double>(b[i]))}});
    // product relator: sum_i Ad(x_1...x_{i-1}) X_i = 0
    {
        std::vector<std::pair<size_t, Block3>> blocks;
        Mat2c prefix = mat_identity();
        for (size_t i = 0; i < n; ++i) {
            blocks.emplace_back(i, ad_matrix(prefix));
            prefix = prefix * images[i];
        }
        add_row_block(blocks);
    }

    CocycleReport rep;
    rep.dim_z1 = static_cast<int>(cols) - complex_rank(sys, &rep.pivots);

    std::vector<std::vector<cd>> cob;
    for (size_t i = 0; i < n; ++i) {
        Block3 blk = block_sub(ad[i], block_eye());
        for (size_t r = 0; r < 3; ++r)
            cob.push_back({blk[r][0], blk[r][1], blk[r][2]});
    }
    rep.dim_b1 = complex_rank(cob);
    rep.dim_h1 = rep.dim_z1 - rep.dim_b1;
    rep.irreducible = rep.dim_b1 == 3;
    return rep;
}

// Brieskorn case: presentation < x,y,z,h | h central, x^p = h^a, y^q = h^b,
// z^r = h^c, xyz = 1 >; images are the triangle-group images of x, y, z.
inline CocycleReport fox_cocycle_dims(const NumericRep& rep, std::array<long, 3> pqr,
                                      std::array<long long, 3> abc) {
    std::vector<Mat2c> images(rep.images.begin(), rep.images.begin() + 3);
    std::vector<long> a = {pqr[0], pqr[1], pqr[2]};
    std::vector<long long> b = {-abc[0], -abc[1], -abc[2]};
    return fox_cocycle_dims_general(images, a, b);
}

// trace triples (as angles) of all irreducible characters of T(2p, q, r)
inline std::vector<std::array<double, 3>> character_angles(long p, long q, long r) {
    const double pi = std::numbers::pi;
    std::vector<std::array<double, 3>> out;
    for (long k1 = 1; k1 < p; ++k1)
        for (long k2 = 1; 2 * k2 < q; ++k2)
            for (long k3 = 1; 2 * k3 < r; ++k3)
                out.push_back({pi * static_cast<double>(k1) / static_cast<double>(p),
                               2 * pi * static_cast<double>(k2) / static_cast<double>(q),
                               2 * pi * static_cast<double>(k3) / static_cast<double>(r)});
    return out;
}

} // namespace casson
