#include "doctest.h"

#include "tsq/errors.hpp"
#include "tsq/quiver.hpp"

#include <numeric>

using namespace tsq;

namespace {

std::vector<Arrow> bipartite23Edges() {
    return {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}};
}

} // namespace

TEST_CASE("buildQuiver stores arrows in order and derives the weight") {
    ToricQuiver q = buildQuiver(bipartite23Edges(), OnesFlow{});
    CHECK(q.vertexCount() == 5);
    CHECK(q.arrowCount() == 6);
    CHECK(q.weight() == Weight{-3, -3, 2, 2, 2});

    IntMatrix inc = q.incidenceMatrix();
    long long expected[5][6] = {{-1, -1, -1, 0, 0, 0},
                                {0, 0, 0, -1, -1, -1},
                                {1, 0, 0, 1, 0, 0},
                                {0, 1, 0, 0, 1, 0},
                                {0, 0, 1, 0, 0, 1}};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 6; ++j) CHECK(inc(i, j) == expected[i][j]);
}

TEST_CASE("buildQuiver error paths") {
    CHECK_THROWS_AS(buildQuiver({}, OnesFlow{}), Error);
    CHECK_THROWS_AS(buildQuiver({{0, 2}}, OnesFlow{}), Error); // vertex 1 missing
    CHECK_THROWS_AS(buildQuiver({{0, 0}}, OnesFlow{}), Error); // self loop
    CHECK_THROWS_AS(buildQuiver({{0, 1}}, Flow{1, 2}), Error); // wrong flow length
    try {
        buildQuiver({{0, 2}}, OnesFlow{});
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::VertexGap);
    }
}

TEST_CASE("single arrow quiver") {
    ToricQuiver q = buildQuiver({{0, 1}}, OnesFlow{});
    CHECK(q.weight() == Weight{-1, 1});
}

TEST_CASE("random flow is reproducible and in range") {
    Flow a = makeFlow(6, RandomFlow{0});
    Flow b = makeFlow(6, RandomFlow{0});
    Flow c = makeFlow(6, RandomFlow{7});
    CHECK(a == b);
    CHECK(a != c);
    for (long long x : a) {
        CHECK(x >= 0);
        CHECK(x < 100);
    }
}

TEST_CASE("replaceFlow recomputes the weight") {
    ToricQuiver q = bipartiteQuiver(2, 3);
    CHECK(replaceFlow(q, {1, 1, 1, 1, 1, 1}).weight() == Weight{-3, -3, 2, 2, 2});
    CHECK(replaceFlow(q, {1, 2, 2, 1, 0, 0}).weight() == Weight{-5, -1, 2, 2, 2});
    CHECK(replaceFlow(q, q.flow()).weight() == q.weight());
    CHECK_THROWS_AS(replaceFlow(q, {1, 2}), Error);
}

TEST_CASE("fromUndirectedGraph orients edges by label") {
    ToricQuiver k4 = completeGraphQuiver(4);
    std::vector<Arrow> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(k4.arrows() == expected);

    ToricQuiver path = fromUndirectedGraph({{1, 0}}, OnesFlow{});
    CHECK(path.arrows() == std::vector<Arrow>{{0, 1}});

    ToricQuiver star = fromUndirectedGraph({{0, 1}, {0, 2}, {0, 3}}, OnesFlow{});
    CHECK(star.weight() == Weight{-3, 1, 1, 1});
}

TEST_CASE("bipartiteQuiver layout") {
    ToricQuiver q = bipartiteQuiver(2, 3);
    CHECK(q.arrows() == bipartite23Edges());
    CHECK(bipartiteQuiver(1, 1).arrows() == std::vector<Arrow>{{0, 1}});
    CHECK(bipartiteQuiver(2, 2).weight() == Weight{-2, -2, 2, 2});
    CHECK_THROWS_AS(bipartiteQuiver(0, 3), Error);
}

TEST_CASE("threeVertexQuiver block order and counts") {
    ToricQuiver q = threeVertexQuiver(1, 2, 3);
    CHECK(q.arrowCount() == 6);
    int outDegree0 = 0;
    for (const Arrow& a : q.arrows())
        if (a.tail == 0) ++outDegree0;
    CHECK(outDegree0 == 4);
    std::vector<Arrow> expected = {{0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}, {0, 2}};
    CHECK(q.arrows() == expected);

    CHECK(threeVertexQuiver(1, 1, 1).weight() == Weight{-2, 0, 2});
    // same arrow multiset as the oriented triangle
    ToricQuiver triangle = fromUndirectedGraph({{0, 1}, {1, 2}, {0, 2}}, OnesFlow{});
    auto sorted = [](std::vector<Arrow> v) {
        std::sort(v.begin(), v.end(), [](const Arrow& a, const Arrow& b) {
            return std::pair(a.tail, a.head) < std::pair(b.tail, b.head);
        });
        return v;
    };
    CHECK(sorted(threeVertexQuiver(1, 1, 1).arrows()) == sorted(triangle.arrows()));
    CHECK_THROWS_AS(threeVertexQuiver(1, 0, 1), Error);
}

TEST_CASE("chainQuiver") {
    CHECK(chainQuiver({1, 1}).arrows() == std::vector<Arrow>{{0, 1}, {1, 2}});
    CHECK(chainQuiver({1, 1}).weight() == Weight{-1, 0, 1});
    CHECK(chainQuiver({1}).arrowCount() == 1);
    CHECK(chainQuiver({2, 3}).weight() == Weight{-2, -1, 3});
    CHECK_THROWS_AS(chainQuiver({1, 0}), Error);
}

TEST_CASE("mergeOnVertex") {
    ToricQuiver chain1 = chainQuiver({1});
    ToricQuiver merged = mergeOnVertex(chain1, 1, chain1, 0);
    CHECK(merged.arrows() == chainQuiver({1, 1}).arrows());

    ToricQuiver single(1, {}, {});
    ToricQuiver same = mergeOnVertex(chain1, 0, single, 0);
    CHECK(same.arrows() == chain1.arrows());
    CHECK(same.vertexCount() == 2);

    ToricQuiver b = mergeOnVertex(bipartiteQuiver(1, 1), 1, bipartiteQuiver(1, 1), 0);
    CHECK(b.vertexCount() == 3);
    CHECK(b.arrowCount() == 2);
    CHECK(b.weight() == Weight{-1, 0, 1});

    CHECK_THROWS_AS(mergeOnVertex(chain1, 5, chain1, 0), Error);
}

TEST_CASE("mergeOnArrow") {
    ToricQuiver chain1 = chainQuiver({1});
    CHECK(mergeOnArrow(chain1, 0, chain1, 0).arrows() == chain1.arrows());

    ToricQuiver twoArrows = chainQuiver({2});
    ToricQuiver fused = mergeOnArrow(twoArrows, 0, twoArrows, 0);
    CHECK(fused.vertexCount() == 2);
    CHECK(fused.arrowCount() == 3);

    ToricQuiver b = mergeOnArrow(bipartiteQuiver(1, 2), 0, bipartiteQuiver(1, 2), 0);
    CHECK(b.vertexCount() == 4);
    CHECK(b.arrowCount() == 3);
}

TEST_CASE("incMap and canonicalWeight") {
    ToricQuiver q = bipartiteQuiver(2, 3);
    CHECK(incMap(q, {1, 1, 1, 1, 1, 1}) == Weight{-3, -3, 2, 2, 2});
    CHECK(incMap(q, {0, 0, 0, 0, 0, 0}) == Weight{0, 0, 0, 0, 0});
    CHECK(canonicalWeight(completeGraphQuiver(4)) == Weight{-3, -1, 1, 3});
    CHECK(canonicalWeight(buildQuiver({{0, 1}})) == Weight{-1, 1});
    CHECK(canonicalWeight(q) == Weight{-3, -3, 2, 2, 2});
}

TEST_CASE("incInverse solves on the lex-smallest spanning tree") {
    ToricQuiver q = bipartiteQuiver(2, 3);
    CHECK(incInverse({-5, -1, 2, 2, 2}, q) == Flow{1, 2, 2, 1, 0, 0});
    CHECK(incInverse({0, 0, 0, 0, 0}, q) == Flow{0, 0, 0, 0, 0, 0});

    ToricQuiver k4 = completeGraphQuiver(4);
    CHECK(incInverse({-2, 1, -1, 2}, k4, {0, 4, 5}) == Flow{2, 0, 0, 0, 1, 1});

    CHECK_THROWS_AS(incInverse({1, 0, 0, 0, 0}, q), Error);          // unbalanced
    CHECK_THROWS_AS(incInverse({-2, 1, -1, 2}, k4, {0}), Error);     // infeasible support
}

TEST_CASE("incMap round-trips incInverse") {
    ToricQuiver k4 = completeGraphQuiver(4);
    for (Weight theta : {Weight{-3, -1, 1, 3}, Weight{-2, 1, -1, 2}, Weight{0, 0, 0, 0}}) {
        CHECK(incMap(k4, incInverse(theta, k4)) == theta);
    }
}

TEST_CASE("isAcyclic") {
    CHECK(isAcyclic(completeGraphQuiver(4)));
    CHECK(isAcyclic(bipartiteQuiver(2, 3)));
    CHECK_FALSE(isAcyclic(ToricQuiver(2, {{0, 1}, {1, 0}}, {1, 1})));
}

TEST_CASE("allSpanningTrees counts and contents") {
    CHECK(allSpanningTrees(completeGraphQuiver(4)).size() == 16); // Cayley: 4^2
    CHECK(allSpanningTrees(bipartiteQuiver(2, 3)).size() == 12);  // matrix-tree: 2^2 * 3
    CHECK(allSpanningTrees(chainQuiver({1, 1})) == std::vector<ArrowSubset>{{0, 1}});

    auto trees = allSpanningTrees(completeGraphQuiver(4));
    CHECK(std::is_sorted(trees.begin(), trees.end()));
    for (const ArrowSubset& t : trees) CHECK(isSpanningTree(completeGraphQuiver(4), t));

    ToricQuiver disconnected(4, {{0, 1}, {2, 3}}, {1, 1});
    CHECK_THROWS_AS(allSpanningTrees(disconnected), Error);
}

TEST_CASE("subquiver iterator is lexicographic and complete") {
    ToricQuiver q = threeVertexQuiver(1, 1, 1);
    std::vector<ArrowSubset> seen;
    for (const ArrowSubset& s : subquivers(q)) seen.push_back(s);
    std::vector<ArrowSubset> expected = {{}, {0}, {0, 1}, {0, 1, 2}, {0, 2}, {1}, {1, 2}, {2}};
    CHECK(seen == expected);
}

TEST_CASE("zeroedView and restrictedView") {
    ToricQuiver q = bipartiteQuiver(2, 3);
    ToricQuiver zeroed = zeroedView(q, {0, 1, 2, 4});
    CHECK(zeroed.flow() == Flow{1, 1, 1, 0, 1, 0});
    CHECK(zeroed.vertexCount() == 5);

    ArrowSubset all(6);
    std::iota(all.begin(), all.end(), 0);
    CHECK(zeroedView(q, all).flow() == q.flow());

    ToricQuiver restricted = restrictedView(completeGraphQuiver(4), {0});
    CHECK(restricted.vertexCount() == 2);
    CHECK(restricted.arrowCount() == 1);
    CHECK(restricted.arrows() == std::vector<Arrow>{{0, 1}});

    CHECK_THROWS_AS(zeroedView(q, {0, 9}), Error);
}
