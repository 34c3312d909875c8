#include "tsq/quiver.hpp"

#include "tsq/errors.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace tsq {

namespace {

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

} // namespace

ToricQuiver::ToricQuiver(int vertexCount, std::vector<Arrow> arrows, Flow flow)
    : vertexCount_(vertexCount), arrows_(std::move(arrows)), flow_(std::move(flow)) {
    if (vertexCount_ < 1)
        throw Error(ErrorKind::EmptyQuiver, "a quiver needs at least one vertex");
    if (flow_.size() != arrows_.size())
        throw Error(ErrorKind::LengthMismatch,
                    "flow has " + std::to_string(flow_.size()) + " entries for " +
                        std::to_string(arrows_.size()) + " arrows");
    for (const Arrow& a : arrows_) {
        if (a.tail < 0 || a.head < 0 || a.tail >= vertexCount_ || a.head >= vertexCount_)
            throw Error(ErrorKind::IndexOutOfRange, "arrow endpoint outside vertex range");
        if (a.tail == a.head)
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a.tail));
    }
    weight_.assign(vertexCount_, 0);
    for (std::size_t j = 0; j < arrows_.size(); ++j) {
        weight_[arrows_[j].head] += flow_[j];
        weight_[arrows_[j].tail] -= flow_[j];
    }
}

const Arrow& ToricQuiver::arrow(int i) const {
    if (i < 0 || i >= arrowCount())
        throw Error(ErrorKind::IndexOutOfRange, "arrow index " + std::to_string(i));
    return arrows_[static_cast<std::size_t>(i)];
}

IntMatrix ToricQuiver::incidenceMatrix() const {
    IntMatrix m = IntMatrix::Zero(vertexCount_, arrowCount());
    for (int j = 0; j < arrowCount(); ++j) {
        m(arrows_[j].head, j) += 1;
        m(arrows_[j].tail, j) -= 1;
    }
    return m;
}

Flow makeFlow(std::size_t arrowCount, const FlowSpec& spec) {
    if (std::holds_alternative<OnesFlow>(spec)) return Flow(arrowCount, 1);
    if (const auto* rnd = std::get_if<RandomFlow>(&spec)) {
        std::mt19937 gen(rnd->seed);
        Flow f(arrowCount);
        // gen() % 100 rather than a distribution: identical across platforms
        for (auto& x : f) x = static_cast<long long>(gen() % 100u);
        return f;
    }
    return std::get<Flow>(spec);
}

ToricQuiver buildQuiver(const std::vector<Arrow>& edges, const FlowSpec& spec) {
    if (edges.empty()) throw Error(ErrorKind::EmptyQuiver, "no edges given");
    int maxVertex = 0;
    for (const Arrow& a : edges) maxVertex = std::max({maxVertex, a.tail, a.head});
    std::vector<bool> seen(static_cast<std::size_t>(maxVertex) + 1, false);
    for (const Arrow& a : edges) {
        if (a.tail < 0 || a.head < 0)
            throw Error(ErrorKind::IndexOutOfRange, "negative vertex index");
        seen[a.tail] = seen[a.head] = true;
    }
    for (int v = 0; v <= maxVertex; ++v)
        if (!seen[v])
            throw Error(ErrorKind::VertexGap, "vertex " + std::to_string(v) + " unused");
    Flow f = makeFlow(edges.size(), spec);
    if (f.size() != edges.size())
        throw Error(ErrorKind::LengthMismatch, "explicit flow length does not match edge count");
    return ToricQuiver(maxVertex + 1, edges, std::move(f));
}

ToricQuiver replaceFlow(const ToricQuiver& q, const Flow& w) {
    if (w.size() != static_cast<std::size_t>(q.arrowCount()))
        throw Error(ErrorKind::LengthMismatch, "flow length does not match arrow count");
    return ToricQuiver(q.vertexCount(), q.arrows(), w);
}

ToricQuiver fromUndirectedGraph(const std::vector<std::pair<int, int>>& edges,
                                const FlowSpec& spec) {
    std::vector<Arrow> arrows;
    arrows.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
        arrows.push_back(a < b ? Arrow{a, b} : Arrow{b, a});
    }
    return buildQuiver(arrows, spec);
}

ToricQuiver bipartiteQuiver(int sources, int sinks) {
    if (sources < 1 || sinks < 1)
        throw Error(ErrorKind::NonPositiveArgument, "bipartiteQuiver needs positive part sizes");
    std::vector<Arrow> arrows;
    arrows.reserve(static_cast<std::size_t>(sources) * sinks);
    for (int i = 0; i < sources; ++i)
        for (int j = 0; j < sinks; ++j) arrows.push_back({i, sources + j});
    return buildQuiver(arrows, OnesFlow{});
}

ToricQuiver threeVertexQuiver(int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1)
        throw Error(ErrorKind::NonPositiveArgument, "threeVertexQuiver needs positive multiplicities");
    std::vector<Arrow> arrows;
    for (int i = 0; i < a; ++i) arrows.push_back({0, 1});
    for (int i = 0; i < b; ++i) arrows.push_back({1, 2});
    for (int i = 0; i < c; ++i) arrows.push_back({0, 2});
    return buildQuiver(arrows, OnesFlow{});
}

ToricQuiver chainQuiver(const std::vector<int>& multiplicities) {
    if (multiplicities.empty())
        throw Error(ErrorKind::NonPositiveArgument, "chainQuiver needs at least one segment");
    std::vector<Arrow> arrows;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        if (multiplicities[i] < 1)
            throw Error(ErrorKind::NonPositiveArgument, "chainQuiver multiplicities must be >= 1");
        for (int k = 0; k < multiplicities[i]; ++k)
            arrows.push_back({static_cast<int>(i), static_cast<int>(i) + 1});
    }
    return buildQuiver(arrows, OnesFlow{});
}

ToricQuiver completeGraphQuiver(int n) {
    if (n < 2) throw Error(ErrorKind::NonPositiveArgument, "completeGraphQuiver needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return fromUndirectedGraph(edges, OnesFlow{});
}

ToricQuiver mergeOnVertex(const ToricQuiver& q1, int v1, const ToricQuiver& q2, int v2) {
    if (v1 < 0 || v1 >= q1.vertexCount() || v2 < 0 || v2 >= q2.vertexCount())
        throw Error(ErrorKind::IndexOutOfRange, "merge vertex out of range");
    // q2's surviving vertices are appended after q1's in increasing order
    std::vector<int> map2(q2.vertexCount());
    int next = q1.vertexCount();
    for (int v = 0; v < q2.vertexCount(); ++v) map2[v] = (v == v2) ? v1 : next++;

    std::vector<Arrow> arrows = q1.arrows();
    Flow flow = q1.flow();
    for (int j = 0; j < q2.arrowCount(); ++j) {
        const Arrow& a = q2.arrow(j);
        arrows.push_back({map2[a.tail], map2[a.head]});
        flow.push_back(q2.flow()[j]);
    }
    return ToricQuiver(q1.vertexCount() + q2.vertexCount() - 1, std::move(arrows), std::move(flow));
}

ToricQuiver mergeOnArrow(const ToricQuiver& q1, int a1, const ToricQuiver& q2, int a2) {
    if (a1 < 0 || a1 >= q1.arrowCount() || a2 < 0 || a2 >= q2.arrowCount())
        throw Error(ErrorKind::IndexOutOfRange, "merge arrow out of range");
    const Arrow& keep = q1.arrow(a1);
    const Arrow& drop = q2.arrow(a2);
    std::vector<int> map2(q2.vertexCount(), -1);
    map2[drop.tail] = keep.tail;
    map2[drop.head] = keep.head;
    int next = q1.vertexCount();
    for (int v = 0; v < q2.vertexCount(); ++v)
        if (map2[v] < 0) map2[v] = next++;

    std::vector<Arrow> arrows = q1.arrows();
    Flow flow = q1.flow(); // the fused arrow keeps q1's flow value
    for (int j = 0; j < q2.arrowCount(); ++j) {
        if (j == a2) continue;
        const Arrow& a = q2.arrow(j);
        arrows.push_back({map2[a.tail], map2[a.head]});
        flow.push_back(q2.flow()[j]);
    }
    return ToricQuiver(q1.vertexCount() + q2.vertexCount() - 2, std::move(arrows), std::move(flow));
}

Weight incMap(const ToricQuiver& q, const Flow& w) {
    if (w.size() != static_cast<std::size_t>(q.arrowCount()))
        throw Error(ErrorKind::LengthMismatch, "flow length does not match arrow count");
    Weight theta(q.vertexCount(), 0);
    for (int j = 0; j < q.arrowCount(); ++j) {
        theta[q.arrow(j).head] += w[j];
        theta[q.arrow(j).tail] -= w[j];
    }
    return theta;
}

Weight canonicalWeight(const ToricQuiver& q) {
    return incMap(q, Flow(q.arrowCount(), 1));
}

void validateArrowSubset(const ToricQuiver& q, const ArrowSubset& arrows) {
    int prev = -1;
    for (int i : arrows) {
        if (i <= prev)
            throw Error(ErrorKind::IndexOutOfRange, "arrow subset must be strictly increasing");
        if (i >= q.arrowCount())
            throw Error(ErrorKind::IndexOutOfRange, "arrow index " + std::to_string(i));
        prev = i;
    }
}

void validateWeight(const ToricQuiver& q, const Weight& theta) {
    if (theta.size() != static_cast<std::size_t>(q.vertexCount()))
        throw Error(ErrorKind::LengthMismatch, "weight length does not match vertex count");
    long long sum = 0;
    for (long long x : theta) sum += x;
    if (sum != 0)
        throw Error(ErrorKind::WeightNotBalanced, "weight entries sum to " + std::to_string(sum));
}

ArrowSubset lexSmallestSpanningForest(const ToricQuiver& q, const ArrowSubset& support) {
    validateArrowSubset(q, support);
    UnionFind uf(q.vertexCount());
    ArrowSubset forest;
    for (int j : support) {
        const Arrow& a = q.arrow(j);
        if (uf.unite(a.tail, a.head)) forest.push_back(j);
    }
    return forest;
}

ArrowSubset lexSmallestSpanningTree(const ToricQuiver& q) {
    ArrowSubset all(q.arrowCount());
    std::iota(all.begin(), all.end(), 0);
    ArrowSubset forest = lexSmallestSpanningForest(q, all);
    if (forest.size() != static_cast<std::size_t>(q.vertexCount() - 1))
        throw Error(ErrorKind::Disconnected, "quiver is not connected");
    return forest;
}

Flow incInverse(const Weight& theta, const ToricQuiver& q) {
    ArrowSubset all(q.arrowCount());
    std::iota(all.begin(), all.end(), 0);
    return incInverse(theta, q, all);
}

Flow incInverse(const Weight& theta, const ToricQuiver& q, const ArrowSubset& support) {
    validateWeight(q, theta);
    ArrowSubset forest = lexSmallestSpanningForest(q, support);

    // Peel leaves of the forest; each leaf's incident arrow is forced by the
    // remaining demand at that leaf.
    std::vector<long long> demand(theta.begin(), theta.end());
    std::vector<std::vector<int>> incident(q.vertexCount());
    for (int j : forest) {
        incident[q.arrow(j).tail].push_back(j);
        incident[q.arrow(j).head].push_back(j);
    }
    std::vector<int> degree(q.vertexCount());
    for (int v = 0; v < q.vertexCount(); ++v) degree[v] = static_cast<int>(incident[v].size());
    std::vector<bool> arrowDone(q.arrowCount(), false);
    std::vector<bool> vertexDone(q.vertexCount(), false);

    Flow result(q.arrowCount(), 0);
    std::vector<int> queue;
    for (int v = 0; v < q.vertexCount(); ++v)
        if (degree[v] == 1) queue.push_back(v);
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        if (vertexDone[v] || degree[v] != 1) continue;
        int j = -1;
        for (int cand : incident[v])
            if (!arrowDone[cand]) j = cand;
        const Arrow& a = q.arrow(j);
        long long f = (a.head == v) ? demand[v] : -demand[v];
        result[j] = f;
        arrowDone[j] = true;
        vertexDone[v] = true;
        int u = (a.head == v) ? a.tail : a.head;
        if (a.head == u)
            demand[u] -= f;
        else
            demand[u] += f;
        demand[v] = 0;
        if (--degree[u] == 1) queue.push_back(u);
        degree[v] = 0;
    }
    for (int v = 0; v < q.vertexCount(); ++v)
        if (demand[v] != 0)
            throw Error(ErrorKind::Infeasible,
                        "no flow on the given support realizes the weight (vertex " +
                            std::to_string(v) + " has unmet demand)");
    return result;
}

bool isAcyclic(const ToricQuiver& q) {
    std::vector<int> indegree(q.vertexCount(), 0);
    for (const Arrow& a : q.arrows()) ++indegree[a.head];
    std::vector<int> stack;
    for (int v = 0; v < q.vertexCount(); ++v)
        if (indegree[v] == 0) stack.push_back(v);
    int removed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++removed;
        for (const Arrow& a : q.arrows())
            if (a.tail == v && --indegree[a.head] == 0) stack.push_back(a.head);
    }
    return removed == q.vertexCount();
}

bool isConnected(const ToricQuiver& q) {
    UnionFind uf(q.vertexCount());
    int components = q.vertexCount();
    for (const Arrow& a : q.arrows())
        if (uf.unite(a.tail, a.head)) --components;
    return components == 1;
}

bool isSpanningTree(const ToricQuiver& q, const ArrowSubset& arrows) {
    validateArrowSubset(q, arrows);
    if (arrows.size() != static_cast<std::size_t>(q.vertexCount() - 1)) return false;
    UnionFind uf(q.vertexCount());
    for (int j : arrows) {
        const Arrow& a = q.arrow(j);
        if (!uf.unite(a.tail, a.head)) return false;
    }
    return true;
}

std::vector<ArrowSubset> allSpanningTrees(const ToricQuiver& q) {
    if (!isConnected(q)) throw Error(ErrorKind::Disconnected, "quiver is not connected");
    int m = q.arrowCount();
    int k = q.vertexCount() - 1;
    std::vector<ArrowSubset> trees;
    if (k == 0) {
        trees.push_back({});
        return trees;
    }
    // combinations in lexicographic order, filtered by the tree test
    ArrowSubset pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    if (k > m) return trees;
    while (true) {
        if (isSpanningTree(q, pick)) trees.push_back(pick);
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    return trees;
}

SubquiverRange::iterator::iterator(int arrowCount, bool atEnd)
    : arrowCount_(arrowCount), done_(atEnd) {}

SubquiverRange::iterator& SubquiverRange::iterator::operator++() {
    if (done_) return *this;
    if (!current_.empty() && current_.back() + 1 < arrowCount_) {
        current_.push_back(current_.back() + 1);
        return *this;
    }
    if (current_.empty()) {
        if (arrowCount_ > 0) {
            current_.push_back(0);
        } else {
            done_ = true;
        }
        return *this;
    }
    // back element is maximal: pop it and advance the new last element
    current_.pop_back();
    if (current_.empty()) {
        done_ = true; // popped the leading element at its maximum
        return *this;
    }
    ++current_.back();
    return *this;
}

SubquiverRange subquivers(const ToricQuiver& q) { return SubquiverRange(q.arrowCount()); }

ToricQuiver zeroedView(const ToricQuiver& q, const ArrowSubset& arrows) {
    validateArrowSubset(q, arrows);
    Flow f(q.arrowCount(), 0);
    for (int j : arrows) f[j] = q.flow()[j];
    return ToricQuiver(q.vertexCount(), q.arrows(), std::move(f));
}

ToricQuiver restrictedView(const ToricQuiver& q, const ArrowSubset& arrows) {
    validateArrowSubset(q, arrows);
    std::set<int> used;
    for (int j : arrows) {
        used.insert(q.arrow(j).tail);
        used.insert(q.arrow(j).head);
    }
    std::vector<int> map(q.vertexCount(), -1);
    int next = 0;
    for (int v : used) map[v] = next++;
    std::vector<Arrow> newArrows;
    Flow f;
    for (int j : arrows) {
        newArrows.push_back({map[q.arrow(j).tail], map[q.arrow(j).head]});
        f.push_back(q.flow()[j]);
    }
    if (used.empty()) return ToricQuiver(1, {}, {});
    return ToricQuiver(next, std::move(newArrows), std::move(f));
}

} // namespace tsq
