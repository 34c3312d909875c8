#ifndef TSQ_QUIVER_HPP
#define TSQ_QUIVER_HPP

#include "tsq/numeric.hpp"

#include <utility>
#include <variant>
#include <vector>

namespace tsq {

struct Arrow {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arrow& a, const Arrow& b) {
        return a.tail == b.tail && a.head == b.head;
    }
};

using Flow = std::vector<long long>;        // one integer per arrow
using Weight = std::vector<long long>;      // one integer per vertex, sums to 0
using ArrowSubset = std::vector<int>;       // strictly increasing arrow indices

/// An acyclic quiver with an ordered arrow list and an integer flow.
/// The weight inc(flow) and the {-1,0,+1} incidence matrix are derived data;
/// instances are immutable, so they stay consistent by construction.
class ToricQuiver {
  public:
    ToricQuiver(int vertexCount, std::vector<Arrow> arrows, Flow flow);

    int vertexCount() const { return vertexCount_; }
    int arrowCount() const { return static_cast<int>(arrows_.size()); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(int i) const;
    const Flow& flow() const { return flow_; }
    const Weight& weight() const { return weight_; }
    IntMatrix incidenceMatrix() const;

  private:
    int vertexCount_;
    std::vector<Arrow> arrows_;
    Flow flow_;
    Weight weight_;
};

struct OnesFlow {};
struct RandomFlow {
    unsigned seed = 0; // fixed default keeps outputs reproducible
};
using FlowSpec = std::variant<OnesFlow, RandomFlow, Flow>;

Flow makeFlow(std::size_t arrowCount, const FlowSpec& spec);

ToricQuiver buildQuiver(const std::vector<Arrow>& edges, const FlowSpec& spec = OnesFlow{});
ToricQuiver replaceFlow(const ToricQuiver& q, const Flow& w);

/// Orients every undirected edge {i,j} from min to max label; the result is
/// acyclic because labels increase along arrows.
ToricQuiver fromUndirectedGraph(const std::vector<std::pair<int, int>>& edges,
                                const FlowSpec& spec = OnesFlow{});

ToricQuiver bipartiteQuiver(int sources, int sinks);
/// a arrows v0->v1, then b arrows v1->v2, then c arrows v0->v2.
ToricQuiver threeVertexQuiver(int a, int b, int c);
ToricQuiver chainQuiver(const std::vector<int>& multiplicities);
ToricQuiver completeGraphQuiver(int n);

ToricQuiver mergeOnVertex(const ToricQuiver& q1, int v1, const ToricQuiver& q2, int v2);
ToricQuiver mergeOnArrow(const ToricQuiver& q1, int a1, const ToricQuiver& q2, int a2);

/// weight[i] = sum of w over arrows with head i minus sum over arrows with tail i.
Weight incMap(const ToricQuiver& q, const Flow& w);
Weight canonicalWeight(const ToricQuiver& q); // incMap with the all-ones flow

/// A flow with incMap = theta, zero outside the support (default: all arrows).
/// Deterministic: solves on the lexicographically smallest spanning forest of
/// the support and is zero elsewhere; tree solutions are integral.
Flow incInverse(const Weight& theta, const ToricQuiver& q);
Flow incInverse(const Weight& theta, const ToricQuiver& q, const ArrowSubset& support);

bool isAcyclic(const ToricQuiver& q);
bool isConnected(const ToricQuiver& q);

/// All arrow subsets of size |Q0|-1 whose underlying edges form a spanning
/// tree, each sorted, listed in lexicographic order.
std::vector<ArrowSubset> allSpanningTrees(const ToricQuiver& q);

bool isSpanningTree(const ToricQuiver& q, const ArrowSubset& arrows);

/// Lexicographically smallest spanning forest of the support (greedy by arrow
/// index); equals the lex-smallest spanning tree when the support is connected
/// and spanning.
ArrowSubset lexSmallestSpanningForest(const ToricQuiver& q, const ArrowSubset& support);
ArrowSubset lexSmallestSpanningTree(const ToricQuiver& q);

/// Streams all 2^|Q1| arrow subsets in lexicographic order (as sorted tuples:
/// {}, {0}, {0,1}, ..., {m-1}). Never materialized.
class SubquiverRange {
  public:
    explicit SubquiverRange(int arrowCount) : arrowCount_(arrowCount) {}

    class iterator {
      public:
        iterator() = default;
        iterator(int arrowCount, bool atEnd);
        const ArrowSubset& operator*() const { return current_; }
        iterator& operator++();
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_);
        }

      private:
        int arrowCount_ = 0;
        bool done_ = true;
        ArrowSubset current_;
    };

    iterator begin() const { return iterator(arrowCount_, false); }
    iterator end() const { return iterator(arrowCount_, true); }

  private:
    int arrowCount_;
};

SubquiverRange subquivers(const ToricQuiver& q);

/// Q^I: same vertices and arrows, flow zeroed outside I.
ToricQuiver zeroedView(const ToricQuiver& q, const ArrowSubset& arrows);
/// Q_I: only the arrows in I and their incident vertices, renumbered in
/// increasing order of original label.
ToricQuiver restrictedView(const ToricQuiver& q, const ArrowSubset& arrows);

void validateArrowSubset(const ToricQuiver& q, const ArrowSubset& arrows);
void validateWeight(const ToricQuiver& q, const Weight& theta);

} // namespace tsq

#endif
