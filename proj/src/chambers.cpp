#include "tsq/chambers.hpp"

#include "tsq/errors.hpp"
#include "tsq/stability.hpp"

#include <algorithm>
#include <numeric>

namespace tsq {

namespace {

IntVector incColumn(const ToricQuiver& q, int arrowIndex) {
    IntVector col = IntVector::Zero(q.vertexCount());
    col[q.arrow(arrowIndex).head] += 1;
    col[q.arrow(arrowIndex).tail] -= 1;
    return col;
}

std::vector<std::vector<bool>> reachability(const ToricQuiver& q) {
    int n = q.vertexCount();
    std::vector<std::vector<int>> out(n);
    for (const Arrow& a : q.arrows()) out[a.tail].push_back(a.head);
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int s = 0; s < n; ++s) {
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : out[v])
                if (!reach[s][w]) {
                    reach[s][w] = true;
                    stack.push_back(w);
                }
        }
    }
    return reach;
}

bool inducedConnected(const ToricQuiver& q, const std::vector<bool>& side) {
    int n = q.vertexCount();
    int root = -1, count = 0;
    for (int v = 0; v < n; ++v)
        if (side[v]) {
            if (root < 0) root = v;
            ++count;
        }
    if (count == 0) return false;
    std::vector<bool> seen(n, false);
    seen[root] = true;
    std::vector<int> stack{root};
    int visited = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const Arrow& a : q.arrows()) {
            if (!side[a.tail] || !side[a.head]) continue;
            int next = -1;
            if (a.tail == v && !seen[a.head]) next = a.head;
            if (a.head == v && !seen[a.tail]) next = a.tail;
            if (next >= 0) {
                seen[next] = true;
                ++visited;
                stack.push_back(next);
            }
        }
    }
    return visited == count;
}

long long toLongLongChecked(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw Error(ErrorKind::TooLarge, "integer exceeds 64-bit range");
    return static_cast<long long>(x);
}

} // namespace

ArrowSubset primitiveArrows(const ToricQuiver& q) {
    if (!isConnected(q)) throw Error(ErrorKind::Disconnected, "quiver is not connected");
    auto reach = reachability(q);
    ArrowSubset primitive;
    for (int j = 0; j < q.arrowCount(); ++j) {
        const Arrow& a = q.arrow(j);
        bool detour = false;
        for (const Arrow& first : q.arrows()) {
            if (first.tail != a.tail || first.head == a.head) continue;
            if (reach[first.head][a.head]) {
                detour = true;
                break;
            }
        }
        if (!detour) primitive.push_back(j);
    }
    return primitive;
}

Cone coneOfWeights(const ToricQuiver& q) {
    std::vector<IntVector> rays;
    for (int j : primitiveArrows(q)) rays.push_back(incColumn(q, j));
    return Cone::fromRays(q.vertexCount(), rays);
}

std::vector<Wall> potentialWalls(const ToricQuiver& q, int vertexCap) {
    int n = q.vertexCount();
    if (n > vertexCap)
        throw Error(ErrorKind::TooManyVertices,
                    "wall enumeration is exponential in the vertex count; cap is " +
                        std::to_string(vertexCap));
    std::vector<Wall> walls;
    if (n < 2) return walls;
    // vertex 0 stays on the minus side, so each bipartition appears once
    for (std::uint64_t mask = 1; mask < (1ull << (n - 1)); ++mask) {
        std::vector<bool> plus(n, false);
        for (int v = 1; v < n; ++v)
            if (mask >> (v - 1) & 1u) plus[v] = true;
        std::vector<bool> minus(n);
        for (int v = 0; v < n; ++v) minus[v] = !plus[v];
        if (!inducedConnected(q, plus) || !inducedConnected(q, minus)) continue;
        Wall w;
        for (int v = 1; v < n; ++v)
            if (plus[v]) w.qPlus.push_back(v);
        for (const Arrow& a : q.arrows()) {
            if (plus[a.tail] && !plus[a.head]) ++w.tPlus;
            if (!plus[a.tail] && plus[a.head]) ++w.tMinus;
        }
        walls.push_back(std::move(w));
    }
    std::sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
        if (a.qPlus.size() != b.qPlus.size()) return a.qPlus.size() < b.qPlus.size();
        return a.qPlus < b.qPlus;
    });
    return walls;
}

Cone treeChamber(const ArrowSubset& tree, const ToricQuiver& q) {
    if (!isSpanningTree(q, tree))
        throw Error(ErrorKind::NotSpanningTree, "arrow subset is not a spanning tree");
    std::vector<IntVector> rays;
    for (int j : tree) rays.push_back(incColumn(q, j));
    return Cone::fromRays(q.vertexCount(), rays);
}

ChamberSystem coneSystem(const ToricQuiver& q, std::size_t treeCap) {
    ChamberSystem cs;
    cs.ambient = coneOfWeights(q);
    cs.trees = allSpanningTrees(q);
    if (cs.trees.size() > treeCap)
        throw Error(ErrorKind::TooManyTrees, "spanning tree count " + std::to_string(cs.trees.size()) +
                                                 " exceeds cap " + std::to_string(treeCap));

    std::vector<Cone> treeCones;
    treeCones.reserve(cs.trees.size());
    std::vector<IntVector> hyperplanes;
    for (const ArrowSubset& tree : cs.trees) {
        Cone ct = treeChamber(tree, q);
        for (const IntVector& f : ct.facets())
            hyperplanes.push_back(primitiveSignNormalized(toRational(f)));
        treeCones.push_back(std::move(ct));
    }
    std::sort(hyperplanes.begin(), hyperplanes.end(),
              [](const IntVector& a, const IntVector& b) { return lexLess(a, b); });
    hyperplanes.erase(std::unique(hyperplanes.begin(), hyperplanes.end()), hyperplanes.end());

    const int fullDim = cs.ambient.dim();
    std::vector<Cone> cells{cs.ambient};
    for (const IntVector& h : hyperplanes) {
        std::vector<Cone> next;
        for (Cone& cell : cells) {
            bool hasPos = false, hasNeg = false;
            for (const IntVector& r : cell.rays()) {
                Int v = 0;
                for (Eigen::Index i = 0; i < r.size(); ++i) v += h[i] * r[i];
                if (v > 0) hasPos = true;
                if (v < 0) hasNeg = true;
            }
            if (!hasPos || !hasNeg) {
                next.push_back(std::move(cell));
                continue;
            }
            std::vector<IntVector> base = cell.facets();
            base.push_back(h);
            Cone plus = Cone::fromInequalities(cell.ambientDim(), base, cell.spanEquations());
            base.back() = -h;
            Cone minus = Cone::fromInequalities(cell.ambientDim(), base, cell.spanEquations());
            if (plus.dim() == fullDim) next.push_back(std::move(plus));
            if (minus.dim() == fullDim) next.push_back(std::move(minus));
        }
        cells = std::move(next);
    }
    std::sort(cells.begin(), cells.end(), [](const Cone& a, const Cone& b) {
        return std::lexicographical_compare(a.rays().begin(), a.rays().end(), b.rays().begin(),
                                            b.rays().end(),
                                            [](const IntVector& x, const IntVector& y) {
                                                return lexLess(x, y);
                                            });
    });
    cs.chambers = std::move(cells);

    cs.treeConeIndex.resize(cs.chambers.size());
    for (std::size_t c = 0; c < cs.chambers.size(); ++c) {
        for (std::size_t t = 0; t < treeCones.size(); ++t) {
            bool inside = true;
            for (const IntVector& r : cs.chambers[c].rays())
                if (!treeCones[t].contains(r)) {
                    inside = false;
                    break;
                }
            if (inside) cs.treeConeIndex[c].push_back(static_cast<int>(t));
        }
    }
    return cs;
}

std::vector<Weight> referenceThetas(const ChamberSystem& cs) {
    std::vector<Weight> thetas;
    for (const Cone& chamber : cs.chambers) {
        IntVector sum = IntVector::Zero(chamber.ambientDim());
        for (const IntVector& r : chamber.rays()) sum += r;
        IntVector rep = primitivePart(sum);
        Weight w;
        for (Eigen::Index i = 0; i < rep.size(); ++i) w.push_back(toLongLongChecked(rep[i]));
        thetas.push_back(std::move(w));
    }
    return thetas;
}

bool sameChamber(const Weight& theta1, const Weight& theta2, const ToricQuiver& q) {
    validateWeight(q, theta1);
    validateWeight(q, theta2);
    if (stableTrees(theta1, q).empty() || stableTrees(theta2, q).empty())
        throw Error(ErrorKind::Indeterminate, "cannot be determined. stableTrees are empty");
    for (const ArrowSubset& subset : subquivers(q)) {
        StabilityVerdict v1 = checkStability(subset, q, theta1);
        StabilityVerdict v2 = checkStability(subset, q, theta2);
        if (v1.stable != v2.stable || v1.semistable != v2.semistable) return false;
    }
    return true;
}

} // namespace tsq
