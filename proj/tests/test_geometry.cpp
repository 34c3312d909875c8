#include "doctest.h"

#include "tsq/errors.hpp"
#include "tsq/geometry.hpp"
#include "tsq/quiver.hpp"

using namespace tsq;

namespace {

IntVector iv(std::initializer_list<long long> values) {
    IntVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (long long x : values) v[i++] = x;
    return v;
}

RatVector rv(std::initializer_list<Rat> values) {
    RatVector v(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const Rat& x : values) v[i++] = x;
    return v;
}

} // namespace

TEST_CASE("kernelLatticeBasis ranks") {
    CHECK(kernelLatticeBasis(bipartiteQuiver(2, 3).incidenceMatrix()).size() == 2);
    CHECK(kernelLatticeBasis(completeGraphQuiver(4).incidenceMatrix()).size() == 3);

    IntMatrix id = IntMatrix::Identity(3, 3);
    CHECK(kernelLatticeBasis(id).empty());

    // every basis vector is an integral circulation
    IntMatrix inc = completeGraphQuiver(4).incidenceMatrix();
    for (const IntVector& k : kernelLatticeBasis(inc)) {
        IntVector image = inc * k;
        for (Eigen::Index i = 0; i < image.size(); ++i) CHECK(image[i] == 0);
    }
}

TEST_CASE("kernel basis generates every integer kernel vector") {
    // circulation on the triangle quiver: (1,1,-1) spans the kernel
    ToricQuiver tri = threeVertexQuiver(1, 1, 1);
    auto basis = kernelLatticeBasis(tri.incidenceMatrix());
    REQUIRE(basis.size() == 1);
    IntVector b = basis[0];
    bool matches = (b == iv({1, 1, -1})) || (b == iv({-1, -1, 1}));
    CHECK(matches);
}

TEST_CASE("cone from rays: orthant") {
    Cone c = Cone::fromRays(2, {iv({1, 0}), iv({0, 1})});
    CHECK(c.dim() == 2);
    CHECK(c.rays() == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
    CHECK(c.facets() == std::vector<IntVector>{iv({0, 1}), iv({1, 0})});
    CHECK(c.lineality().empty());
    CHECK(c.spanEquations().empty());
}

TEST_CASE("cone from inequalities: hand dualization") {
    Cone c = Cone::fromInequalities(2, {iv({1, 1}), iv({1, -1})});
    CHECK(c.dim() == 2);
    CHECK(c.rays() == std::vector<IntVector>{iv({1, -1}), iv({1, 1})});
}

TEST_CASE("duality round trip on the K4 primitive cone") {
    ToricQuiver k4 = completeGraphQuiver(4);
    IntMatrix inc = k4.incidenceMatrix();
    std::vector<IntVector> cols;
    for (int j : {0, 3, 5}) cols.push_back(inc.col(j));
    Cone c = Cone::fromRays(4, cols);
    CHECK(c.dim() == 3);
    CHECK(c.rays().size() == 3);
    CHECK(c.spanEquations().size() == 1);
    CHECK(c.spanEquations()[0] == iv({1, 1, 1, 1}));

    Cone back = Cone::fromInequalities(4, c.facets(), c.spanEquations());
    CHECK(back == c);
}

TEST_CASE("intersectCones") {
    Cone orthant = Cone::fromRays(2, {iv({1, 0}), iv({0, 1})});
    CHECK(intersectCones(orthant, orthant) == orthant);

    Cone halfplane = Cone::fromInequalities(2, {iv({-1, 1})}); // x <= y
    Cone wedge = intersectCones(orthant, halfplane);
    CHECK(wedge.rays() == std::vector<IntVector>{iv({0, 1}), iv({1, 1})});

    Cone opposite = Cone::fromInequalities(2, {iv({-1, 0}), iv({0, -1})});
    Cone apex = intersectCones(orthant, opposite);
    CHECK(apex.dim() == 0);
    CHECK(apex.rays().empty());
}

TEST_CASE("cone membership, strict and lineality") {
    Cone orthant = Cone::fromRays(2, {iv({1, 0}), iv({0, 1})});
    CHECK(orthant.contains(rv({1, 1}), true));
    CHECK(orthant.contains(rv({0, 0})));
    CHECK_FALSE(orthant.contains(rv({0, 0}), true));
    CHECK_FALSE(orthant.contains(rv({-1, 2})));

    Cone line = Cone::fromRays(2, {iv({1, 0}), iv({-1, 0})});
    CHECK(line.dim() == 1);
    CHECK(line.rays().empty());
    CHECK(line.lineality().size() == 1);
    CHECK(line.contains(rv({-5, 0}), true));
    CHECK_FALSE(line.contains(rv({0, 1})));

    CHECK_THROWS_AS(Cone::fromRays(0, {}), Error);
}

TEST_CASE("convex hull drops interior points") {
    Polytope p = Polytope::convexHull(
        {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({Rat(1, 4), Rat(1, 4)})});
    CHECK(p.dim() == 2);
    CHECK(p.vertices().size() == 3);
    CHECK(p.facets().size() == 3);
}

TEST_CASE("hexagon hull") {
    std::vector<RatVector> pts = {rv({0, 1}),  rv({1, 1}),   rv({1, 0}),
                                  rv({0, -1}), rv({-1, -1}), rv({-1, 0})};
    Polytope hex = Polytope::convexHull(pts);
    CHECK(hex.dim() == 2);
    CHECK(hex.vertices().size() == 6);
    CHECK(hex.facets().size() == 6);
    for (const auto& f : hex.facets()) CHECK(f.rhs == 1);
    CHECK(isReflexive(hex));

    LatticeData data = latticeData(hex);
    CHECK(data.dim == 2);
    CHECK(data.vertexCount == 6);
    CHECK(data.latticePointCount == 7);
    CHECK(data.interiorLatticePointCount == 1);
}

TEST_CASE("K4 flow polytope simplex in tree coordinates") {
    std::vector<RatVector> pts = {rv({0, 0, 0}), rv({0, 0, -1}), rv({-1, 0, 0}),
                                  rv({-1, 1, 0})};
    Polytope simplex = Polytope::convexHull(pts);
    CHECK(simplex.dim() == 3);
    CHECK(simplex.vertices().size() == 4);
    LatticeData data = latticeData(simplex);
    CHECK(data.latticePointCount == 4);
    CHECK(data.interiorLatticePointCount == 0);
}

TEST_CASE("lattice data of segments and embedded polytopes") {
    Polytope segment = Polytope::convexHull({rv({0}), rv({1})});
    LatticeData data = latticeData(segment);
    CHECK(data.dim == 1);
    CHECK(data.latticePointCount == 2);
    CHECK(data.interiorLatticePointCount == 0);

    // diagonal segment embedded in the plane: relative interior point (1,1)
    Polytope diag = Polytope::convexHull({rv({0, 0}), rv({2, 2})});
    CHECK(diag.dim() == 1);
    LatticeData diagData = latticeData(diag);
    CHECK(diagData.latticePointCount == 3);
    CHECK(diagData.interiorLatticePointCount == 1);

    Polytope point = Polytope::convexHull({rv({Rat(1, 2), Rat(1, 2)})});
    CHECK(point.dim() == 0);
    LatticeData pointData = latticeData(point);
    CHECK(pointData.latticePointCount == 0);
}

TEST_CASE("isReflexive error paths") {
    Polytope big = Polytope::convexHull(
        {rv({2, 2}), rv({2, -2}), rv({-2, 2}), rv({-2, -2})});
    CHECK_FALSE(isReflexive(big)); // facet rhs 2

    Polytope shifted = Polytope::convexHull({rv({1, 1}), rv({2, 1}), rv({1, 2})});
    CHECK_THROWS_AS(isReflexive(shifted), Error); // origin outside

    Polytope segment = Polytope::convexHull({rv({0, 0}), rv({1, 1})});
    CHECK_THROWS_AS(isReflexive(segment), Error); // not full-dimensional
}

TEST_CASE("interior lattice points") {
    std::vector<RatVector> pts = {rv({0, 1}),  rv({1, 1}),   rv({1, 0}),
                                  rv({0, -1}), rv({-1, -1}), rv({-1, 0})};
    auto interior = interiorLatticePoints(Polytope::convexHull(pts));
    REQUIRE(interior.size() == 1);
    CHECK(interior[0] == iv({0, 0}));
}

TEST_CASE("lattice enumeration cap") {
    Polytope big = Polytope::convexHull({rv({0, 0}), rv({10000, 0}), rv({0, 10000})});
    CHECK_THROWS_AS(latticeData(big, 1000), Error);
}

TEST_CASE("ray and vertex adjacency") {
    Cone orthant3 = Cone::fromRays(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1})});
    CHECK(raysAdjacent(orthant3, 0, 1));
    CHECK(raysAdjacent(orthant3, 0, 2));

    std::vector<RatVector> square = {rv({0, 0}), rv({1, 0}), rv({0, 1}), rv({1, 1})};
    Polytope p = Polytope::convexHull(square);
    int edges = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (verticesAdjacent(p, i, j)) ++edges;
    CHECK(edges == 4); // the two diagonals are not edges
}

TEST_CASE("hermite normal form is canonical for the row lattice") {
    std::vector<IntVector> rows = {iv({2, 4, 6}), iv({1, 2, 3})};
    auto hnf = rowHermiteNormalForm(rows, 3);
    REQUIRE(hnf.size() == 1);
    CHECK(hnf[0] == iv({1, 2, 3}));

    std::vector<IntVector> swapped = {iv({1, 2, 3}), iv({2, 4, 6})};
    CHECK(rowHermiteNormalForm(swapped, 3) == hnf);
}
