#include "tsq/flow_polytope.hpp"

#include "tsq/chambers.hpp"
#include "tsq/errors.hpp"
#include "tsq/stability.hpp"

#include <algorithm>

namespace tsq {

namespace {

// Signed path in the tree from `from` to `to`: pairs (arrow index, +1 forward
// / -1 backward). The tree is connected and acyclic, so the path is unique.
std::vector<std::pair<int, int>> treePath(const ToricQuiver& q, const ArrowSubset& tree,
                                          int from, int to) {
    struct Step {
        int vertex;
        int arrow;
        int sign;
    };
    std::vector<std::vector<Step>> adjacency(q.vertexCount());
    for (int j : tree) {
        adjacency[q.arrow(j).tail].push_back({q.arrow(j).head, j, +1});
        adjacency[q.arrow(j).head].push_back({q.arrow(j).tail, j, -1});
    }
    std::vector<int> prevVertex(q.vertexCount(), -1), prevArrow(q.vertexCount(), -1),
        prevSign(q.vertexCount(), 0);
    std::vector<bool> seen(q.vertexCount(), false);
    std::vector<int> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == to) break;
        for (const Step& s : adjacency[v]) {
            if (seen[s.vertex]) continue;
            seen[s.vertex] = true;
            prevVertex[s.vertex] = v;
            prevArrow[s.vertex] = s.arrow;
            prevSign[s.vertex] = s.sign;
            stack.push_back(s.vertex);
        }
    }
    std::vector<std::pair<int, int>> path;
    for (int v = to; v != from; v = prevVertex[v]) path.emplace_back(prevArrow[v], prevSign[v]);
    std::reverse(path.begin(), path.end());
    return path;
}

bool isRegular(const Flow& w) {
    return std::all_of(w.begin(), w.end(), [](long long x) { return x >= 0; });
}

} // namespace

CycleBasis basisForFlowPolytope(const ArrowSubset& tree, const ToricQuiver& q) {
    if (!isSpanningTree(q, tree))
        throw Error(ErrorKind::NotSpanningTree, "arrow subset is not a spanning tree");
    CycleBasis basis;
    basis.tree = tree;
    std::vector<bool> inTree(q.arrowCount(), false);
    for (int j : tree) inTree[j] = true;
    for (int a = 0; a < q.arrowCount(); ++a) {
        if (inTree[a]) continue;
        IntVector col = IntVector::Zero(q.arrowCount());
        col[a] = -1;
        for (auto [arrow, sign] : treePath(q, tree, q.arrow(a).tail, q.arrow(a).head))
            col[arrow] += sign;
        basis.columns.push_back(std::move(col));
    }
    return basis;
}

CycleBasis basisForFlowPolytope(const ToricQuiver& q) {
    return basisForFlowPolytope(lexSmallestSpanningTree(q), q);
}

std::vector<Flow> flowPolytopeVertices(const Weight& theta, const ToricQuiver& q) {
    validateWeight(q, theta);
    std::vector<Flow> vertices;
    for (const ArrowSubset& tree : allSpanningTrees(q)) {
        Flow w = incInverse(theta, q, tree);
        if (isRegular(w)) vertices.push_back(std::move(w));
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

std::vector<std::vector<long long>> flowPolytopeInTreeBasis(const Weight& theta,
                                                            const ToricQuiver& q,
                                                            const ArrowSubset& tree) {
    std::vector<Flow> ambient = flowPolytopeVertices(theta, q);
    if (ambient.empty())
        throw Error(ErrorKind::WeightNotInCone, "the flow polytope of the weight is empty");
    CycleBasis basis = basisForFlowPolytope(tree, q);

    Flow base = (theta == q.weight()) ? q.flow() : ambient.front();
    std::vector<int> nonTree;
    {
        std::vector<bool> inTree(q.arrowCount(), false);
        for (int j : basis.tree) inTree[j] = true;
        for (int a = 0; a < q.arrowCount(); ++a)
            if (!inTree[a]) nonTree.push_back(a);
    }

    std::vector<std::vector<long long>> points;
    for (const Flow& v : ambient) {
        // the basis is -identity on the non-tree rows, so coordinates read off
        // directly; the full product is then checked exactly
        std::vector<long long> coords(nonTree.size());
        for (std::size_t k = 0; k < nonTree.size(); ++k) coords[k] = base[nonTree[k]] - v[nonTree[k]];
        for (int row = 0; row < q.arrowCount(); ++row) {
            Int reconstructed = 0;
            for (std::size_t k = 0; k < nonTree.size(); ++k)
                reconstructed += basis.columns[k][row] * Int(coords[k]);
            if (reconstructed != Int(v[row]) - Int(base[row]))
                throw std::logic_error("cycle-basis coordinates failed verification");
        }
        points.push_back(std::move(coords));
    }
    return points;
}

std::vector<std::vector<long long>> flowPolytopeInTreeBasis(const Weight& theta,
                                                            const ToricQuiver& q) {
    return flowPolytopeInTreeBasis(theta, q, lexSmallestSpanningTree(q));
}

Polytope flowPolytopeHull(const Weight& theta, const ToricQuiver& q, const ArrowSubset& tree) {
    std::vector<std::vector<long long>> points = flowPolytopeInTreeBasis(theta, q, tree);
    std::vector<RatVector> ratPoints;
    for (const auto& p : points) {
        RatVector v(static_cast<Eigen::Index>(p.size()));
        for (std::size_t i = 0; i < p.size(); ++i) v[static_cast<Eigen::Index>(i)] = Rat(p[i]);
        ratPoints.push_back(std::move(v));
    }
    return Polytope::convexHull(ratPoints);
}

Polytope flowPolytopeHull(const Weight& theta, const ToricQuiver& q) {
    return flowPolytopeHull(theta, q, lexSmallestSpanningTree(q));
}

bool isFlowPolytopeReflexive(const Weight& theta, const ToricQuiver& q) {
    validateWeight(q, theta);
    RatVector point(q.vertexCount());
    for (int v = 0; v < q.vertexCount(); ++v) point[v] = Rat(theta[v]);
    if (!coneOfWeights(q).contains(point, /*strictly=*/true))
        throw Error(ErrorKind::WeightNotInCone,
                    "the weight is not strictly interior to the cone of weights");
    Polytope hull = flowPolytopeHull(theta, q);
    std::vector<IntVector> interior = interiorLatticePoints(hull);
    if (interior.size() != 1)
        throw Error(ErrorKind::NoUniqueInteriorPoint,
                    "expected exactly one interior lattice point, found " +
                        std::to_string(interior.size()));
    RatVector shift(hull.ambientDim());
    for (int i = 0; i < hull.ambientDim(); ++i) shift[i] = Rat(-interior.front()[i]);
    return isReflexive(hull.translated(shift));
}

} // namespace tsq
