#include "tsq/geometry.hpp"

#include "tsq/errors.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <cassert>

namespace tsq {

namespace {

Int dot(const IntVector& a, const IntVector& b) {
    Int s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dotRat(const IntVector& a, const RatVector& b) {
    Rat s = 0;
    for (Eigen::Index i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

bool isZeroVec(const IntVector& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

bool ratVecEqual(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) return false;
    for (Eigen::Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

RatMatrix rowsToMatrix(const std::vector<IntVector>& rows, int cols) {
    RatMatrix m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < cols; ++j) m(static_cast<Eigen::Index>(i), j) = Rat(rows[i][j]);
    return m;
}

void sortDedup(std::vector<IntVector>& vecs) {
    std::sort(vecs.begin(), vecs.end(), [](const IntVector& a, const IntVector& b) {
        return lexLess(a, b);
    });
    vecs.erase(std::unique(vecs.begin(), vecs.end()), vecs.end());
}

Int ratFloor(const Rat& x) {
    Int num = numerator(x), den = denominator(x); // den > 0
    Int q = num / den;
    if (num % den != 0 && num < 0) --q;
    return q;
}

Int ratCeil(const Rat& x) { return -ratFloor(-x); }

} // namespace

// ---------------------------------------------------------------------------
// Elimination
// ---------------------------------------------------------------------------

std::vector<int> reducedRowEchelon(RatMatrix& m) {
    std::vector<int> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = row; r < m.rows(); ++r) {
            if (m(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        m.row(row).swap(m.row(pivot));
        Rat inv = Rat(1) / m(row, col);
        for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (Eigen::Index r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col) == 0) continue;
            Rat factor = m(r, col);
            for (Eigen::Index j = col; j < m.cols(); ++j) m(r, j) -= factor * m(row, j);
        }
        pivots.push_back(static_cast<int>(col));
        ++row;
    }
    return pivots;
}

int matrixRank(RatMatrix m) { return static_cast<int>(reducedRowEchelon(m).size()); }

int matrixRank(const std::vector<IntVector>& rows, int cols) {
    if (rows.empty()) return 0;
    return matrixRank(rowsToMatrix(rows, cols));
}

std::vector<IntVector> nullspaceBasis(const RatMatrix& m) {
    RatMatrix r = m;
    std::vector<int> pivots = reducedRowEchelon(r);
    std::vector<bool> isPivot(m.cols(), false);
    for (int p : pivots) isPivot[p] = true;
    std::vector<IntVector> basis;
    for (Eigen::Index free = 0; free < m.cols(); ++free) {
        if (isPivot[free]) continue;
        RatVector x = RatVector::Zero(m.cols());
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -r(static_cast<Eigen::Index>(i), free);
        basis.push_back(primitivePart(x));
    }
    return basis;
}

std::vector<IntVector> nullspaceBasis(const std::vector<IntVector>& rows, int cols) {
    if (rows.empty()) {
        std::vector<IntVector> basis;
        for (int i = 0; i < cols; ++i) {
            IntVector e = IntVector::Zero(cols);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    return nullspaceBasis(rowsToMatrix(rows, cols));
}

RatVector solveLinear(RatMatrix a, RatVector b) {
    Eigen::Index n = a.rows();
    for (Eigen::Index col = 0; col < n; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = col; r < n; ++r) {
            if (a(r, col) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) throw Error(ErrorKind::Infeasible, "singular system");
        a.row(col).swap(a.row(pivot));
        std::swap(b[col], b[pivot]);
        for (Eigen::Index r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rat factor = a(r, col) / a(col, col);
            for (Eigen::Index j = col; j < n; ++j) a(r, j) -= factor * a(col, j);
            b[r] -= factor * b[col];
        }
    }
    RatVector x(n);
    for (Eigen::Index i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
    return x;
}

std::vector<IntVector> rowHermiteNormalForm(std::vector<IntVector> rows, int cols) {
    std::size_t top = 0;
    for (int col = 0; col < cols && top < rows.size(); ++col) {
        // clear the column below `top` by gcd reduction
        while (true) {
            std::size_t best = top;
            bool any = false;
            for (std::size_t r = top; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                if (!any || abs(rows[r][col]) < abs(rows[best][col])) {
                    best = r;
                    any = true;
                }
            }
            if (!any) break;
            std::swap(rows[top], rows[best]);
            bool clean = true;
            for (std::size_t r = top + 1; r < rows.size(); ++r) {
                if (rows[r][col] == 0) continue;
                Int q = rows[r][col] / rows[top][col];
                rows[r] -= q * rows[top];
                if (rows[r][col] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[top][col] == 0) continue;
        if (rows[top][col] < 0) rows[top] = -rows[top];
        for (std::size_t r = 0; r < top; ++r) {
            Int q = rows[r][col] / rows[top][col];
            if (rows[r][col] % rows[top][col] < 0) --q; // floor division
            if (q != 0) rows[r] -= q * rows[top];
        }
        ++top;
    }
    rows.resize(top);
    return rows;
}

std::vector<IntVector> kernelLatticeBasis(const IntMatrix& m) {
    int rows = static_cast<int>(m.rows());
    int cols = static_cast<int>(m.cols());
    // Hermite-reduce [M^T | I]; block rows with zero M^T part carry the kernel.
    std::vector<IntVector> block;
    for (int i = 0; i < cols; ++i) {
        IntVector v = IntVector::Zero(rows + cols);
        for (int j = 0; j < rows; ++j) v[j] = m(j, i);
        v[rows + i] = 1;
        block.push_back(v);
    }
    std::vector<IntVector> hnf = rowHermiteNormalForm(std::move(block), rows + cols);
    std::vector<IntVector> kernel;
    for (const IntVector& v : hnf) {
        bool zeroLeft = true;
        for (int j = 0; j < rows && zeroLeft; ++j) zeroLeft = (v[j] == 0);
        if (!zeroLeft) continue;
        IntVector k(cols);
        for (int j = 0; j < cols; ++j) k[j] = v[rows + j];
        kernel.push_back(k);
    }
    return kernel;
}

// ---------------------------------------------------------------------------
// Double description
// ---------------------------------------------------------------------------

namespace {

struct DDResult {
    std::vector<IntVector> rays;
    std::vector<IntVector> lineality;
};

/// Incremental double description for {x : Ex = 0, Ax >= 0}. Inequalities are
/// inserted in lexicographic order; adjacency of two rays is decided by the
/// exact rank test on the constraints tight at both.
DDResult doubleDescription(int n, std::vector<IntVector> inequalities,
                           const std::vector<IntVector>& equations) {
    for (IntVector& a : inequalities) a = primitivePart(a);
    inequalities.erase(std::remove_if(inequalities.begin(), inequalities.end(),
                                      [](const IntVector& a) { return isZeroVec(a); }),
                       inequalities.end());
    sortDedup(inequalities);

    std::vector<IntVector> lineality = nullspaceBasis(equations, n);
    const int equationRank = n - static_cast<int>(lineality.size());

    std::vector<IntVector> rays;
    std::vector<boost::dynamic_bitset<>> tight; // per ray, over processed inequalities
    std::vector<IntVector> processed;

    auto adjacent = [&](std::size_t p, std::size_t q) {
        const int needed = n - static_cast<int>(lineality.size()) - 2;
        if (needed < 0) return false;
        boost::dynamic_bitset<> common = tight[p] & tight[q];
        if (equationRank + static_cast<int>(common.count()) < needed) return false;
        std::vector<IntVector> rowSet = equations;
        for (std::size_t j = common.find_first(); j != boost::dynamic_bitset<>::npos;
             j = common.find_next(j))
            rowSet.push_back(processed[j]);
        return matrixRank(rowSet, n) == needed;
    };

    for (const IntVector& a : inequalities) {
        int linHit = -1;
        for (std::size_t i = 0; i < lineality.size(); ++i) {
            if (dot(a, lineality[i]) != 0) {
                linHit = static_cast<int>(i);
                break;
            }
        }
        if (linHit >= 0) {
            // Project the lineality space and all rays along b onto {a = 0};
            // b itself survives as a ray on the positive side.
            IntVector b = lineality[static_cast<std::size_t>(linHit)];
            Int s = dot(a, b);
            if (s < 0) {
                b = -b;
                s = -s;
            }
            lineality.erase(lineality.begin() + linHit);
            for (IntVector& l : lineality) {
                Int t = dot(a, l);
                if (t != 0) l = primitivePart(IntVector(s * l - t * b));
            }
            for (IntVector& r : rays) {
                Int t = dot(a, r);
                if (t != 0) r = primitivePart(IntVector(s * r - t * b));
            }
            for (auto& bits : tight) bits.push_back(true); // projected rays lie on {a = 0}
            rays.push_back(primitivePart(b));
            boost::dynamic_bitset<> bBits(processed.size() + 1);
            bBits.set();
            bBits[processed.size()] = false; // <a, b> > 0
            tight.push_back(bBits);
            processed.push_back(a);
            continue;
        }

        std::vector<Int> value(rays.size());
        std::vector<std::size_t> positive, zero, negative;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            value[r] = dot(a, rays[r]);
            if (value[r] > 0)
                positive.push_back(r);
            else if (value[r] < 0)
                negative.push_back(r);
            else
                zero.push_back(r);
        }
        if (negative.empty()) {
            for (std::size_t r = 0; r < rays.size(); ++r) tight[r].push_back(value[r] == 0);
            processed.push_back(a);
            continue;
        }

        std::vector<IntVector> newRays;
        std::vector<boost::dynamic_bitset<>> newTight;
        auto keep = [&](std::size_t r) {
            newRays.push_back(rays[r]);
            boost::dynamic_bitset<> bits = tight[r];
            bits.push_back(value[r] == 0);
            newTight.push_back(bits);
        };
        for (std::size_t r : positive) keep(r);
        for (std::size_t r : zero) keep(r);
        for (std::size_t p : positive) {
            for (std::size_t q : negative) {
                if (!adjacent(p, q)) continue;
                IntVector combo = primitivePart(IntVector(value[p] * rays[q] - value[q] * rays[p]));
                boost::dynamic_bitset<> bits = tight[p] & tight[q];
                bits.push_back(true);
                newRays.push_back(combo);
                newTight.push_back(bits);
            }
        }
        rays = std::move(newRays);
        tight = std::move(newTight);
        processed.push_back(a);
    }

    return {std::move(rays), std::move(lineality)};
}

/// Canonical subspace basis: primitive RREF rows, ordered by pivot.
std::vector<IntVector> canonicalSubspaceBasis(const std::vector<IntVector>& vectors, int n) {
    if (vectors.empty()) return {};
    RatMatrix m = rowsToMatrix(vectors, n);
    reducedRowEchelon(m);
    std::vector<IntVector> basis;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        RatVector row = m.row(r).transpose();
        bool zero = true;
        for (Eigen::Index j = 0; j < row.size() && zero; ++j) zero = (row[j] == 0);
        if (zero) continue;
        basis.push_back(primitivePart(row));
    }
    return basis;
}

RatVector projectOntoSpan(const IntVector& v, const std::vector<IntVector>& spanBasis) {
    int n = static_cast<int>(v.size());
    if (spanBasis.empty()) return RatVector::Zero(n);
    int k = static_cast<int>(spanBasis.size());
    RatMatrix gram(k, k);
    RatVector rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) gram(i, j) = Rat(dot(spanBasis[i], spanBasis[j]));
        rhs[i] = Rat(dot(spanBasis[i], v));
    }
    RatVector y = solveLinear(gram, rhs);
    RatVector out = RatVector::Zero(n);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) out[j] += y[i] * Rat(spanBasis[i][j]);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// Cone
// ---------------------------------------------------------------------------

Cone Cone::fromRays(int ambientDim, const std::vector<IntVector>& rays) {
    if (ambientDim < 1) throw Error(ErrorKind::ZeroAmbientDim, "cone needs a positive ambient dimension");
    std::vector<IntVector> generators;
    for (const IntVector& r : rays) {
        if (static_cast<int>(r.size()) != ambientDim)
            throw Error(ErrorKind::LengthMismatch, "ray dimension does not match ambient dimension");
        IntVector p = primitivePart(r);
        if (!isZeroVec(p)) generators.push_back(p);
    }
    sortDedup(generators);

    // dual side first: lineality of the dual = span equations, dual rays = facets
    DDResult dual = doubleDescription(ambientDim, generators, {});
    Cone c;
    c.ambient_ = ambientDim;
    c.spanEquations_ = canonicalSubspaceBasis(dual.lineality, ambientDim);

    std::vector<IntVector> spanBasis = nullspaceBasis(c.spanEquations_, ambientDim);
    std::vector<IntVector> facets;
    for (const IntVector& d : dual.rays) {
        RatVector proj = projectOntoSpan(d, spanBasis);
        IntVector f = primitivePart(proj);
        if (!isZeroVec(f)) facets.push_back(f);
    }
    sortDedup(facets);
    c.facets_ = std::move(facets);

    DDResult primal = doubleDescription(ambientDim, c.facets_, c.spanEquations_);
    c.rays_ = primal.rays;
    sortDedup(c.rays_);
    c.lineality_ = canonicalSubspaceBasis(primal.lineality, ambientDim);
    c.dim_ = ambientDim - matrixRank(c.spanEquations_, ambientDim);

    for (const IntVector& g : generators)
        assert(c.contains(g) && "double description consistency");
    return c;
}

Cone Cone::fromInequalities(int ambientDim, const std::vector<IntVector>& facets,
                            const std::vector<IntVector>& equations) {
    if (ambientDim < 1) throw Error(ErrorKind::ZeroAmbientDim, "cone needs a positive ambient dimension");
    for (const IntVector& v : facets)
        if (static_cast<int>(v.size()) != ambientDim)
            throw Error(ErrorKind::LengthMismatch, "facet dimension does not match ambient dimension");
    for (const IntVector& v : equations)
        if (static_cast<int>(v.size()) != ambientDim)
            throw Error(ErrorKind::LengthMismatch, "equation dimension does not match ambient dimension");

    DDResult primal = doubleDescription(ambientDim, facets, equations);

    // dualize the generators to obtain the irredundant facet list
    std::vector<IntVector> dualIneqs = primal.rays;
    DDResult dual = doubleDescription(ambientDim, dualIneqs, primal.lineality);

    Cone c;
    c.ambient_ = ambientDim;
    c.rays_ = primal.rays;
    sortDedup(c.rays_);
    c.lineality_ = canonicalSubspaceBasis(primal.lineality, ambientDim);
    c.spanEquations_ = canonicalSubspaceBasis(dual.lineality, ambientDim);

    std::vector<IntVector> spanBasis = nullspaceBasis(c.spanEquations_, ambientDim);
    std::vector<IntVector> outFacets;
    for (const IntVector& d : dual.rays) {
        RatVector proj = projectOntoSpan(d, spanBasis);
        IntVector f = primitivePart(proj);
        if (!isZeroVec(f)) outFacets.push_back(f);
    }
    sortDedup(outFacets);
    c.facets_ = std::move(outFacets);
    c.dim_ = ambientDim - matrixRank(c.spanEquations_, ambientDim);

    for (const IntVector& r : c.rays_)
        assert(c.contains(r) && "double description consistency");
    return c;
}

bool Cone::contains(const RatVector& point, bool strictly) const {
    if (static_cast<int>(point.size()) != ambient_)
        throw Error(ErrorKind::LengthMismatch, "point dimension does not match ambient dimension");
    for (const IntVector& e : spanEquations_)
        if (dotRat(e, point) != 0) return false;
    for (const IntVector& f : facets_) {
        Rat v = dotRat(f, point);
        if (strictly ? (v <= 0) : (v < 0)) return false;
    }
    return true;
}

bool Cone::contains(const IntVector& point, bool strictly) const {
    return contains(toRational(point), strictly);
}

Cone intersectCones(const Cone& a, const Cone& b) {
    if (a.ambientDim() != b.ambientDim())
        throw Error(ErrorKind::LengthMismatch, "cones live in different ambient dimensions");
    std::vector<IntVector> facets = a.facets();
    facets.insert(facets.end(), b.facets().begin(), b.facets().end());
    std::vector<IntVector> equations = a.spanEquations();
    equations.insert(equations.end(), b.spanEquations().begin(), b.spanEquations().end());
    return Cone::fromInequalities(a.ambientDim(), facets, equations);
}

int coneDim(const Cone& c) { return c.dim(); }

bool coneContains(const Cone& c, const RatVector& point, bool strictly) {
    return c.contains(point, strictly);
}

// ---------------------------------------------------------------------------
// Polytope
// ---------------------------------------------------------------------------

Polytope Polytope::convexHull(const std::vector<RatVector>& points) {
    if (points.empty())
        throw Error(ErrorKind::LengthMismatch, "convexHull needs at least one point");
    int n = static_cast<int>(points.front().size());
    for (const RatVector& p : points)
        if (static_cast<int>(p.size()) != n)
            throw Error(ErrorKind::LengthMismatch, "points of mixed dimension");

    Polytope poly;
    poly.ambient_ = n;
    if (n == 0) { // a single point in R^0
        poly.dim_ = 0;
        poly.vertices_.push_back(RatVector(0));
        return poly;
    }

    std::vector<IntVector> lifted;
    for (const RatVector& p : points) {
        RatVector h(n + 1);
        h[0] = 1;
        for (int i = 0; i < n; ++i) h[i + 1] = p[i];
        lifted.push_back(primitivePart(h));
    }
    Cone cone = Cone::fromRays(n + 1, lifted);

    for (const IntVector& r : cone.rays()) {
        // hulls of finitely many points are bounded, so no ray sits at height 0
        if (r[0] <= 0) throw std::logic_error("unbounded direction in a convex hull");
        RatVector v(n);
        for (int i = 0; i < n; ++i) v[i] = Rat(r[i + 1], r[0]);
        poly.vertices_.push_back(v);
    }
    std::sort(poly.vertices_.begin(), poly.vertices_.end(),
              [](const RatVector& a, const RatVector& b) { return lexLess(a, b); });
    poly.dim_ = cone.dim() - 1;

    for (const IntVector& e : cone.spanEquations()) {
        RatVector affine(n + 1); // (normal | rhs), scaled so the normal is primitive
        for (int i = 0; i < n; ++i) affine[i] = Rat(e[i + 1]);
        affine[n] = Rat(-e[0]);
        IntVector joint = primitiveSignNormalized(affine);
        IntVector normal(n);
        bool zero = true;
        for (int i = 0; i < n; ++i) {
            normal[i] = joint[i];
            if (normal[i] != 0) zero = false;
        }
        assert(!zero && "a lifted equation cannot constrain the height alone");
        Int g = 0;
        for (int i = 0; i < n; ++i) g = boost::multiprecision::gcd(g, normal[i]);
        AffineEquation eq;
        eq.normal = IntVector(n);
        for (int i = 0; i < n; ++i) eq.normal[i] = normal[i] / g;
        eq.rhs = Rat(joint[n], g);
        poly.equations_.push_back(std::move(eq));
    }

    if (poly.dim_ >= 1) {
        for (const IntVector& f : cone.facets()) {
            IntVector a(n);
            Int g = 0;
            for (int i = 0; i < n; ++i) {
                a[i] = -f[i + 1];
                g = boost::multiprecision::gcd(g, a[i]);
            }
            if (g == 0) continue; // height-only normal: not a polytope facet
            FacetInequality ineq;
            ineq.normal = IntVector(n);
            for (int i = 0; i < n; ++i) ineq.normal[i] = a[i] / g;
            ineq.rhs = Rat(f[0], g);
            poly.facets_.push_back(std::move(ineq));
        }
        std::sort(poly.facets_.begin(), poly.facets_.end(),
                  [](const FacetInequality& x, const FacetInequality& y) {
                      if (x.normal != y.normal) return lexLess(x.normal, y.normal);
                      return x.rhs < y.rhs;
                  });
    }
    return poly;
}

Polytope convexHull(const std::vector<RatVector>& points) { return Polytope::convexHull(points); }

bool Polytope::contains(const RatVector& point) const {
    if (static_cast<int>(point.size()) != ambient_)
        throw Error(ErrorKind::LengthMismatch, "point dimension does not match ambient dimension");
    for (const AffineEquation& e : equations_)
        if (dotRat(e.normal, point) != e.rhs) return false;
    for (const FacetInequality& f : facets_)
        if (dotRat(f.normal, point) > f.rhs) return false;
    if (dim_ == 0) return ratVecEqual(point, vertices_.front());
    return true;
}

Polytope Polytope::translated(const RatVector& offset) const {
    if (static_cast<int>(offset.size()) != ambient_)
        throw Error(ErrorKind::LengthMismatch, "offset dimension does not match ambient dimension");
    Polytope out = *this;
    for (RatVector& v : out.vertices_) v += offset;
    for (FacetInequality& f : out.facets_) f.rhs += dotRat(f.normal, offset);
    for (AffineEquation& e : out.equations_) e.rhs += dotRat(e.normal, offset);
    return out;
}

// ---------------------------------------------------------------------------
// Lattice data and reflexivity
// ---------------------------------------------------------------------------

namespace {

/// Walks the integer points of the bounding box, calling visit(point, strict)
/// for every lattice point of the polytope (strict = relative interior).
template <typename Visit>
void walkLatticePoints(const Polytope& p, long long candidateCap, Visit&& visit) {
    int n = p.ambientDim();
    if (n == 0) {
        visit(IntVector(0), true);
        return;
    }
    std::vector<Int> lo(n), hi(n);
    for (int i = 0; i < n; ++i) {
        Rat mn = p.vertices().front()[i], mx = mn;
        for (const RatVector& v : p.vertices()) {
            if (v[i] < mn) mn = v[i];
            if (v[i] > mx) mx = v[i];
        }
        lo[i] = ratCeil(mn);
        hi[i] = ratFloor(mx);
    }
    Int candidates = 1;
    for (int i = 0; i < n; ++i) {
        if (hi[i] < lo[i]) return; // box holds no lattice points
        candidates *= hi[i] - lo[i] + 1;
        if (candidates > candidateCap)
            throw Error(ErrorKind::TooLarge, "lattice enumeration box exceeds cap of " +
                                                 std::to_string(candidateCap) + " candidates");
    }

    std::vector<Int> point(lo.begin(), lo.end());
    while (true) {
        RatVector x(n);
        for (int i = 0; i < n; ++i) x[i] = Rat(point[i]);
        bool onSpan = true;
        for (const auto& e : p.equations())
            if (dotRat(e.normal, x) != e.rhs) {
                onSpan = false;
                break;
            }
        if (onSpan) {
            bool inside = true, strict = true;
            for (const auto& f : p.facets()) {
                Rat v = dotRat(f.normal, x);
                if (v > f.rhs) {
                    inside = false;
                    break;
                }
                if (v == f.rhs) strict = false;
            }
            if (p.dim() == 0) inside = inside && ratVecEqual(x, p.vertices().front());
            if (inside) {
                IntVector ipoint(n);
                for (int i = 0; i < n; ++i) ipoint[i] = point[i];
                visit(ipoint, strict);
            }
        }
        int i = 0;
        for (; i < n; ++i) {
            if (point[i] < hi[i]) {
                ++point[i];
                break;
            }
            point[i] = lo[i];
        }
        if (i == n) break;
    }
}

} // namespace

LatticeData latticeData(const Polytope& p, long long candidateCap) {
    LatticeData data;
    data.dim = p.dim();
    data.vertexCount = static_cast<long long>(p.vertices().size());
    walkLatticePoints(p, candidateCap, [&](const IntVector&, bool strict) {
        ++data.latticePointCount;
        if (strict) ++data.interiorLatticePointCount;
    });
    return data;
}

std::vector<IntVector> interiorLatticePoints(const Polytope& p, long long candidateCap) {
    std::vector<IntVector> points;
    walkLatticePoints(p, candidateCap, [&](const IntVector& x, bool strict) {
        if (strict) points.push_back(x);
    });
    std::sort(points.begin(), points.end(),
              [](const IntVector& a, const IntVector& b) { return lexLess(a, b); });
    return points;
}

bool raysAdjacent(const Cone& c, int rayA, int rayB) {
    const auto& rays = c.rays();
    if (rayA < 0 || rayB < 0 || rayA >= static_cast<int>(rays.size()) ||
        rayB >= static_cast<int>(rays.size()) || rayA == rayB)
        throw Error(ErrorKind::IndexOutOfRange, "ray index out of range");
    std::vector<IntVector> rows = c.spanEquations();
    for (const IntVector& f : c.facets())
        if (dot(f, rays[rayA]) == 0 && dot(f, rays[rayB]) == 0) rows.push_back(f);
    int lineality = static_cast<int>(c.lineality().size());
    return matrixRank(rows, c.ambientDim()) == c.ambientDim() - lineality - 2;
}

bool verticesAdjacent(const Polytope& p, int vertexA, int vertexB) {
    const auto& verts = p.vertices();
    if (vertexA < 0 || vertexB < 0 || vertexA >= static_cast<int>(verts.size()) ||
        vertexB >= static_cast<int>(verts.size()) || vertexA == vertexB)
        throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
    std::vector<IntVector> rows;
    for (const auto& e : p.equations()) rows.push_back(e.normal);
    for (const auto& f : p.facets())
        if (dotRat(f.normal, verts[vertexA]) == f.rhs && dotRat(f.normal, verts[vertexB]) == f.rhs)
            rows.push_back(f.normal);
    // the minimal face containing both vertices must be a segment
    return matrixRank(rows, p.ambientDim()) == p.ambientDim() - 1;
}

bool isReflexive(const Polytope& p) {
    if (p.dim() != p.ambientDim())
        throw Error(ErrorKind::NotFullDimensional, "reflexivity needs a full-dimensional polytope");
    for (const auto& f : p.facets())
        if (f.rhs <= 0)
            throw Error(ErrorKind::OriginNotInterior, "the origin is not interior to the polytope");
    for (const auto& f : p.facets())
        if (f.rhs != 1) return false;
    return true;
}

} // namespace tsq
