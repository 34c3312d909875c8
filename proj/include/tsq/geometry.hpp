#ifndef TSQ_GEOMETRY_HPP
#define TSQ_GEOMETRY_HPP

#include "tsq/numeric.hpp"

#include <vector>

namespace tsq {

// ---------------------------------------------------------------------------
// Exact linear algebra
// ---------------------------------------------------------------------------

int matrixRank(RatMatrix m);
int matrixRank(const std::vector<IntVector>& rows, int cols);

/// Reduce in place to reduced row echelon form; returns the pivot columns.
std::vector<int> reducedRowEchelon(RatMatrix& m);

/// Canonical basis of {x : Mx = 0} over the rationals, returned as primitive
/// integer vectors (from the RREF free-column parametrization).
std::vector<IntVector> nullspaceBasis(const RatMatrix& m);
std::vector<IntVector> nullspaceBasis(const std::vector<IntVector>& rows, int cols);

/// Solve Ax = b for square nonsingular A.
RatVector solveLinear(RatMatrix a, RatVector b);

/// Row-style Hermite normal form of the lattice spanned by the given rows:
/// positive pivots, entries above each pivot reduced into [0, pivot), zero
/// rows dropped. Canonical for the row lattice.
std::vector<IntVector> rowHermiteNormalForm(std::vector<IntVector> rows, int cols);

/// Lattice basis of ker(M) over the integers via Hermite reduction of
/// [M^T | I]; any integer kernel vector is an integer combination of the
/// result.
std::vector<IntVector> kernelLatticeBasis(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Cones
// ---------------------------------------------------------------------------

/// A rational polyhedral cone kept in double description form. Rays and facet
/// normals are primitive, deduplicated and lexicographically sorted; the
/// lineality basis and the span equations are reduced-row-echelon canonical.
/// Two cones are equal as sets iff their canonical fields compare equal.
///
/// Cones need not be full-dimensional: spanEquations() lists the functionals
/// vanishing on the cone, and facet normals are the representatives lying in
/// the cone's linear span. Membership and relative-interior tests check the
/// span equations alongside the facet inequalities.
class Cone {
  public:
    Cone() = default; // empty placeholder; use the named constructors

    static Cone fromRays(int ambientDim, const std::vector<IntVector>& rays);
    static Cone fromInequalities(int ambientDim, const std::vector<IntVector>& facets,
                                 const std::vector<IntVector>& equations = {});

    int ambientDim() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    const std::vector<IntVector>& facets() const { return facets_; }
    const std::vector<IntVector>& lineality() const { return lineality_; }
    const std::vector<IntVector>& spanEquations() const { return spanEquations_; }

    bool contains(const RatVector& point, bool strictly = false) const;
    bool contains(const IntVector& point, bool strictly = false) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.ambient_ == b.ambient_ && a.rays_ == b.rays_ && a.lineality_ == b.lineality_;
    }

  private:
    int ambient_ = 0;
    int dim_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IntVector> facets_;
    std::vector<IntVector> lineality_;
    std::vector<IntVector> spanEquations_;
};

Cone intersectCones(const Cone& a, const Cone& b);
int coneDim(const Cone& c);
bool coneContains(const Cone& c, const RatVector& point, bool strictly = false);

// ---------------------------------------------------------------------------
// Polytopes
// ---------------------------------------------------------------------------

class Polytope {
  public:
    struct FacetInequality {
        IntVector normal; // primitive integers
        Rat rhs;          // <normal, x> <= rhs

        friend bool operator==(const FacetInequality& a, const FacetInequality& b) {
            return a.normal == b.normal && a.rhs == b.rhs;
        }
    };
    struct AffineEquation {
        IntVector normal;
        Rat rhs; // <normal, x> = rhs everywhere on the polytope
    };

    /// Vertex and facet descriptions computed together by lifting the points
    /// to rays (1, p) and dualizing the cone. Interior points of the input are
    /// dropped; vertices come out sorted.
    static Polytope convexHull(const std::vector<RatVector>& points);

    int ambientDim() const { return ambient_; }
    int dim() const { return dim_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    const std::vector<FacetInequality>& facets() const { return facets_; }
    const std::vector<AffineEquation>& equations() const { return equations_; }

    bool contains(const RatVector& point) const;
    Polytope translated(const RatVector& offset) const;

  private:
    Polytope() = default;

    int ambient_ = 0;
    int dim_ = 0;
    std::vector<RatVector> vertices_;
    std::vector<FacetInequality> facets_;
    std::vector<AffineEquation> equations_;
};

Polytope convexHull(const std::vector<RatVector>& points);

struct LatticeData {
    int dim = 0;
    long long vertexCount = 0;
    long long latticePointCount = 0;
    long long interiorLatticePointCount = 0;

    friend bool operator==(const LatticeData& a, const LatticeData& b) {
        return a.dim == b.dim && a.vertexCount == b.vertexCount &&
               a.latticePointCount == b.latticePointCount &&
               a.interiorLatticePointCount == b.interiorLatticePointCount;
    }
};

/// Exact lattice-point counts by bounding-box enumeration with facet
/// filtering; interior means relative interior (strict on every facet).
/// Throws TooLarge when the candidate box exceeds the cap.
LatticeData latticeData(const Polytope& p, long long candidateCap = 10000000);

/// The lattice points in the relative interior of p, lexicographically sorted.
std::vector<IntVector> interiorLatticePoints(const Polytope& p, long long candidateCap = 10000000);

/// True iff every facet inequality, written with a primitive integer normal,
/// has right-hand side exactly 1. Requires a full-dimensional polytope with
/// the origin in its interior.
bool isReflexive(const Polytope& p);

/// Two extreme rays span a common two-dimensional face (rank test on the
/// constraints tight at both).
bool raysAdjacent(const Cone& c, int rayA, int rayB);

/// Two vertices span an edge of the polytope.
bool verticesAdjacent(const Polytope& p, int vertexA, int vertexB);

} // namespace tsq

#endif
