#include "tsq/cli.hpp"

#include "tsq/chambers.hpp"
#include "tsq/errors.hpp"
#include "tsq/flow_polytope.hpp"
#include "tsq/geometry.hpp"
#include "tsq/io.hpp"
#include "tsq/quiver.hpp"
#include "tsq/stability.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tsq {

namespace {

using Json = nlohmann::ordered_json;

long long jsonInt(const Int& x) {
    if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
        throw Error(ErrorKind::TooLarge, "value exceeds 64-bit JSON integer range");
    return static_cast<long long>(x);
}

Json vectorToJson(const IntVector& v) {
    Json arr = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(jsonInt(v[i]));
    return arr;
}

std::vector<long long> parseIntList(const std::string& text, const std::string& what) {
    std::vector<long long> out;
    std::stringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        try {
            out.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw Error(ErrorKind::UsageError, "cannot parse " + what + ": '" + token + "'");
        }
    }
    if (out.empty()) throw Error(ErrorKind::UsageError, what + " must not be empty");
    return out;
}

ArrowSubset parseIndexList(const std::string& text, const std::string& what) {
    ArrowSubset out;
    for (long long x : parseIntList(text, what)) {
        if (x < 0 || x > std::numeric_limits<int>::max())
            throw Error(ErrorKind::UsageError, what + " entries must be nonnegative");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

ToricQuiver buildFamily(const std::string& spec, const FlowSpec& flowSpec) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::vector<long long> args;
    if (colon != std::string::npos) args = parseIntList(spec.substr(colon + 1), "family arguments");
    auto arg = [&](std::size_t i) {
        if (i >= args.size())
            throw Error(ErrorKind::UsageError, "family " + name + " needs more arguments");
        return static_cast<int>(args[i]);
    };
    ToricQuiver base = [&] {
        if (name == "bipartite") return bipartiteQuiver(arg(0), arg(1));
        if (name == "threevertex") return threeVertexQuiver(arg(0), arg(1), arg(2));
        if (name == "chain") {
            std::vector<int> mult(args.begin(), args.end());
            return chainQuiver(mult);
        }
        if (name == "complete") return completeGraphQuiver(arg(0));
        throw Error(ErrorKind::UsageError,
                    "unknown family '" + name + "' (bipartite, threevertex, chain, complete)");
    }();
    if (std::holds_alternative<OnesFlow>(flowSpec)) return base;
    return replaceFlow(base, makeFlow(base.arrowCount(), flowSpec));
}

/// Options shared by every verb that consumes a quiver.
struct QuiverInput {
    std::string file;
    std::string family;
    std::string flow;
    bool random = false;
    unsigned seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--quiver", file, "quiver JSON file");
        cmd->add_option("--family", family, "built-in family, e.g. bipartite:2,3 or complete:4");
        cmd->add_option("--flow", flow, "explicit integer flow, e.g. 1,1,1,1");
        cmd->add_flag("--random", random, "use a random flow in [0,100)");
        cmd->add_option("--seed", seed, "seed for --random (default 0)");
    }

    ToricQuiver resolve() const {
        if (file.empty() == family.empty())
            throw Error(ErrorKind::UsageError, "give exactly one of --quiver or --family");
        if (!flow.empty() && random)
            throw Error(ErrorKind::UsageError, "--flow and --random are mutually exclusive");
        FlowSpec spec = OnesFlow{};
        if (random) spec = RandomFlow{seed};
        if (!flow.empty()) spec = Flow(parseIntList(flow, "flow"));
        if (!family.empty()) return buildFamily(family, spec);
        ToricQuiver q = loadQuiverFile(file);
        if (std::holds_alternative<OnesFlow>(spec)) return q;
        return replaceFlow(q, makeFlow(q.arrowCount(), spec));
    }
};

Weight parseTheta(const std::string& text) {
    return parseIntList(text, "theta");
}

Weight thetaOrStored(const std::string& text, const ToricQuiver& q) {
    if (text.empty()) return q.weight();
    return parseTheta(text);
}

Json subsetListToJson(const std::vector<ArrowSubset>& subsets) {
    Json arr = Json::array();
    for (const ArrowSubset& s : subsets) arr.push_back(s);
    return arr;
}

Json coneToJson(const Cone& c) {
    Json doc;
    Json rays = Json::array();
    for (const IntVector& r : c.rays()) rays.push_back(vectorToJson(r));
    Json facets = Json::array();
    for (const IntVector& f : c.facets()) facets.push_back(vectorToJson(f));
    doc["rays"] = std::move(rays);
    doc["facets"] = std::move(facets);
    return doc;
}

Json polytopeToJson(const Polytope& p) {
    Json doc;
    Json vertices = Json::array();
    for (const RatVector& v : p.vertices()) {
        Json row = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(rationalToString(v[i]));
        vertices.push_back(std::move(row));
    }
    Json inequalities = Json::array();
    for (const auto& f : p.facets()) {
        Json entry;
        entry["a"] = vectorToJson(f.normal);
        entry["b"] = rationalToString(f.rhs);
        inequalities.push_back(std::move(entry));
    }
    doc["vertices"] = std::move(vertices);
    doc["inequalities"] = std::move(inequalities );
    return doc;
}

Json latticeDataToJson(const LatticeData& d) {
    Json doc;
    doc["dim"] = d.dim;
    doc["vertexCount"] = d.vertexCount;
    doc["latticePointCount"] = d.latticePointCount;
    doc["interiorLatticePointCount"] = d.interiorLatticePointCount;
    return doc;
}

Json maximalToJson(const MaximalSubquivers& m) {
    Json doc;
    doc["nonSingletons"] = subsetListToJson(m.nonSingletons);
    doc["singletons"] = m.singletonVertices;
    return doc;
}

/// Coordinates of a sum-zero weight-space vector in the basis e_i - e_{i+1}:
/// partial sums of the entries.
std::vector<long long> projectWeightSpace(const IntVector& v) {
    std::vector<long long> coords;
    Int acc = 0;
    for (Eigen::Index i = 0; i + 1 < v.size(); ++i) {
        acc += v[i];
        coords.push_back(jsonInt(acc));
    }
    return coords;
}

Json plotCone(const Cone& c) {
    Json doc;
    doc["dim"] = c.ambientDim() - 1;
    Json points = Json::array();
    for (const IntVector& r : c.rays()) points.push_back(projectWeightSpace(r));
    Json edges = Json::array();
    for (std::size_t i = 0; i < c.rays().size(); ++i)
        for (std::size_t j = i + 1; j < c.rays().size(); ++j)
            if (raysAdjacent(c, static_cast<int>(i), static_cast<int>(j)))
                edges.push_back({i, j});
    doc["points"] = std::move(points);
    doc["edges"] = std::move(edges);
    return doc;
}

Json runVerb(CLI::App& app, const QuiverInput& input, const std::string& thetaText,
             const std::string& theta2Text, const std::string& arrowsText,
             const std::string& verticesText, const std::string& supportText,
             const std::string& treeText, const std::string& formatText,
             const std::string& edgesText, bool undirected, const std::string& kindText) {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string verb = sub->get_name();

    if (verb == "family" || verb == "build") {
        ToricQuiver q = [&] {
            if (verb == "family") return input.resolve();
            if (edgesText.empty())
                throw Error(ErrorKind::UsageError, "build needs --edges, e.g. 0-1,1-2");
            std::vector<std::pair<int, int>> pairs;
            std::stringstream in(edgesText);
            std::string token;
            while (std::getline(in, token, ',')) {
                auto dash = token.find('-');
                if (dash == std::string::npos)
                    throw Error(ErrorKind::UsageError, "edge '" + token + "' is not t-h");
                try {
                    pairs.emplace_back(std::stoi(token.substr(0, dash)),
                                       std::stoi(token.substr(dash + 1)));
                } catch (const std::exception&) {
                    throw Error(ErrorKind::UsageError, "edge '" + token + "' is not t-h");
                }
            }
            FlowSpec spec = OnesFlow{};
            if (input.random) spec = RandomFlow{input.seed};
            if (!input.flow.empty()) spec = Flow(parseIntList(input.flow, "flow"));
            if (undirected) return fromUndirectedGraph(pairs, spec);
            std::vector<Arrow> arrows;
            for (auto [t, h] : pairs) arrows.push_back({t, h});
            return buildQuiver(arrows, spec);
        }();
        Json payload;
        payload["quiver"] = quiverToJson(q);
        return payload;
    }

    ToricQuiver q = input.resolve();
    Json payload;

    if (verb == "inc") {
        payload["weight"] = q.weight();
    } else if (verb == "inc-inverse") {
        Weight theta = parseTheta(thetaText);
        Flow flow = supportText.empty()
                        ? incInverse(theta, q)
                        : incInverse(theta, q, parseIndexList(supportText, "support"));
        payload["flow"] = flow;
    } else if (verb == "spanning-trees") {
        payload["trees"] = subsetListToJson(allSpanningTrees(q));
    } else if (verb == "subquivers") {
        if (q.arrowCount() > 20)
            throw Error(ErrorKind::UsageError,
                        "refusing to materialize 2^" + std::to_string(q.arrowCount()) + " subsets");
        Json arr = Json::array();
        for (const ArrowSubset& s : subquivers(q)) arr.push_back(s);
        payload["subquivers"] = std::move(arr);
    } else if (verb == "closed-under-arrows") {
        if (verticesText.empty())
            throw Error(ErrorKind::UsageError, "closed-under-arrows needs --vertices");
        std::vector<int> vertices = parseIndexList(verticesText, "vertices");
        bool closed = arrowsText.empty()
                          ? isClosedUnderArrows(vertices, q)
                          : isClosedUnderArrows(vertices, q, parseIndexList(arrowsText, "arrows"));
        payload["closed"] = closed;
    } else if (verb == "stable" || verb == "semistable") {
        if (arrowsText.empty())
            throw Error(ErrorKind::UsageError, verb + " needs --arrows (the subquiver)");
        StabilityVerdict v = checkStability(parseIndexList(arrowsText, "arrows"), q,
                                            thetaOrStored(thetaText, q));
        payload[verb] = (verb == "stable") ? v.stable : v.semistable;
        bool failed = (verb == "stable") ? !v.stable : !v.semistable;
        if (failed && v.witness) payload["witness"] = *v.witness;
    } else if (verb == "max-unstable") {
        payload = maximalToJson(maximalUnstableSubquivers(q, thetaOrStored(thetaText, q)));
    } else if (verb == "max-nonstable") {
        payload = maximalToJson(maximalNonstableSubquivers(q, thetaOrStored(thetaText, q)));
    } else if (verb == "tight") {
        const CLI::App* mode = sub->get_subcommands().front();
        if (mode->get_name() == "check") {
            payload["tight"] = isTight(q, thetaOrStored(thetaText, q));
        } else {
            ToricQuiver tightened = makeTight(thetaOrStored(thetaText, q), q);
            payload["quiver"] = quiverToJson(tightened);
            payload["weight"] = tightened.weight();
        }
    } else if (verb == "stable-trees") {
        Weight theta = thetaOrStored(thetaText, q);
        std::vector<ArrowSubset> trees = stableTrees(theta, q);
        Json flows = Json::array();
        for (const ArrowSubset& t : trees) flows.push_back(treeFlow(theta, q, t));
        payload["trees"] = subsetListToJson(trees);
        payload["flows"] = std::move(flows);
    } else if (verb == "cone") {
        payload = coneToJson(coneOfWeights(q));
    } else if (verb == "walls") {
        Json arr = Json::array();
        for (const Wall& w : potentialWalls(q)) {
            Json entry;
            entry["qplus"] = w.qPlus;
            entry["type"] = {w.tPlus, w.tMinus};
            arr.push_back(std::move(entry));
        }
        payload["walls"] = std::move(arr);
    } else if (verb == "chambers") {
        ChamberSystem cs = coneSystem(q);
        payload["count"] = cs.chambers.size();
        Json arr = Json::array();
        for (std::size_t i = 0; i < cs.chambers.size(); ++i) {
            Json entry = coneToJson(cs.chambers[i]);
            entry["trees"] = cs.treeConeIndex[i];
            arr.push_back(std::move(entry));
        }
        payload["chambers"] = std::move(arr);
    } else if (verb == "reference-thetas") {
        Json arr = Json::array();
        for (const Weight& w : referenceThetas(coneSystem(q))) arr.push_back(w);
        payload["thetas"] = std::move(arr);
    } else if (verb == "same-chamber") {
        if (thetaText.empty() || theta2Text.empty())
            throw Error(ErrorKind::UsageError, "same-chamber needs --theta and --theta2");
        payload["same"] = sameChamber(parseTheta(thetaText), parseTheta(theta2Text), q);
    } else if (verb == "flow-polytope") {
        Weight theta = thetaOrStored(thetaText, q);
        std::string format = formatText.empty() ? "ambient" : formatText;
        if (format == "ambient") {
            Json arr = Json::array();
            for (const Flow& v : flowPolytopeVertices(theta, q)) arr.push_back(v);
            payload["format"] = "ambient";
            payload["vertices"] = std::move(arr);
        } else if (format == "tree" || format.rfind("tree:", 0) == 0) {
            ArrowSubset tree = (format == "tree")
                                   ? lexSmallestSpanningTree(q)
                                   : parseIndexList(format.substr(5), "tree");
            payload["format"] = "tree";
            payload["tree"] = tree;
            Json arr = Json::array();
            for (const auto& pt : flowPolytopeInTreeBasis(theta, q, tree)) arr.push_back(pt);
            payload["vertices"] = std::move(arr);
            Polytope hull = flowPolytopeHull(theta, q, tree);
            payload["polytope"] = polytopeToJson(hull);
            payload["latticeData"] = latticeDataToJson(latticeData(hull));
        } else {
            throw Error(ErrorKind::UsageError, "--format must be ambient, tree or tree:<indices>");
        }
    } else if (verb == "basis") {
        CycleBasis basis = treeText.empty()
                               ? basisForFlowPolytope(q)
                               : basisForFlowPolytope(parseIndexList(treeText, "tree"), q);
        payload["tree"] = basis.tree;
        Json cols = Json::array();
        for (const IntVector& c : basis.columns) cols.push_back(vectorToJson(c));
        payload["columns"] = std::move(cols);
    } else if (verb == "reflexive") {
        payload["reflexive"] = isFlowPolytopeReflexive(thetaOrStored(thetaText, q), q);
    } else if (verb == "dot") {
        payload["dot"] = exportDot(q);
    } else if (verb == "plot-data") {
        if (kindText == "cone") {
            if (q.vertexCount() - 1 > 3)
                throw Error(ErrorKind::DimensionTooHigh,
                            "weight-space projection has more than 3 dimensions");
            payload = plotCone(coneOfWeights(q));
        } else if (kindText == "chambers") {
            if (q.vertexCount() - 1 > 3)
                throw Error(ErrorKind::DimensionTooHigh,
                            "weight-space projection has more than 3 dimensions");
            ChamberSystem cs = coneSystem(q);
            Json cells = Json::array();
            for (const Cone& chamber : cs.chambers) {
                Json cell;
                Json rays = Json::array();
                for (const IntVector& r : chamber.rays()) rays.push_back(projectWeightSpace(r));
                cell["rays"] = std::move(rays);
                cells.push_back(std::move(cell));
            }
            payload["dim"] = q.vertexCount() - 1;
            payload["cells"] = std::move(cells);
        } else if (kindText == "polytope") {
            Weight theta = thetaOrStored(thetaText, q);
            if (q.arrowCount() - q.vertexCount() + 1 > 3)
                throw Error(ErrorKind::DimensionTooHigh,
                            "flow polytope has more than 3 coordinate dimensions");
            Polytope hull = flowPolytopeHull(theta, q);
            Json points = Json::array();
            for (const RatVector& v : hull.vertices()) {
                Json row = Json::array();
                for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(rationalToString(v[i]));
                points.push_back(std::move(row));
            }
            Json edges = Json::array();
            for (std::size_t i = 0; i < hull.vertices().size(); ++i)
                for (std::size_t j = i + 1; j < hull.vertices().size(); ++j)
                    if (verticesAdjacent(hull, static_cast<int>(i), static_cast<int>(j)))
                        edges.push_back({i, j});
            payload["dim"] = hull.dim();
            payload["points"] = std::move(points);
            payload["edges"] = std::move(edges);
        } else {
            throw Error(ErrorKind::UsageError, "--kind must be cone, polytope or chambers");
        }
    } else {
        throw Error(ErrorKind::UsageError, "unknown subcommand " + verb);
    }
    return payload;
}

} // namespace

CommandResult runCli(const std::vector<std::string>& args) {
    CLI::App app{"toric quiver and flow polytope toolkit"};
    app.require_subcommand(1);

    QuiverInput input;
    std::string thetaText, theta2Text, arrowsText, verticesText, supportText, treeText,
        formatText, edgesText, kindText;
    bool undirected = false;

    const std::vector<std::string> verbs = {
        "family", "build", "inc", "inc-inverse", "spanning-trees", "subquivers",
        "closed-under-arrows", "stable", "semistable", "max-unstable", "max-nonstable",
        "tight", "stable-trees", "cone", "walls", "chambers", "reference-thetas",
        "same-chamber", "flow-polytope", "basis", "reflexive", "dot", "plot-data"};
    for (const std::string& verb : verbs) {
        CLI::App* sub = app.add_subcommand(verb);
        input.attach(sub);
        sub->add_option("--theta", thetaText, "weight, e.g. -3,-1,1,3");
        if (verb == "same-chamber") sub->add_option("--theta2", theta2Text, "second weight");
        if (verb == "stable" || verb == "semistable" || verb == "closed-under-arrows")
            sub->add_option("--arrows", arrowsText, "arrow subset, e.g. 0,1,4,5");
        if (verb == "closed-under-arrows")
            sub->add_option("--vertices", verticesText, "vertex subset");
        if (verb == "inc-inverse") sub->add_option("--support", supportText, "support arrows");
        if (verb == "basis") sub->add_option("--tree", treeText, "spanning tree arrows");
        if (verb == "flow-polytope")
            sub->add_option("--format", formatText, "ambient | tree | tree:<indices>");
        if (verb == "build") {
            sub->add_option("--edges", edgesText, "edge list t-h,t-h,...");
            sub->add_flag("--undirected", undirected, "orient each edge from min to max label");
        }
        if (verb == "plot-data") sub->add_option("--kind", kindText, "cone | polytope | chambers");
        if (verb == "tight") {
            sub->require_subcommand(1);
            sub->add_subcommand("check", "test tightness");
            sub->add_subcommand("make", "contract until tight");
        }
    }

    CommandResult result;
    std::vector<const char*> argv;
    argv.push_back("tsq");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        Json payload = runVerb(app, input, thetaText, theta2Text, arrowsText, verticesText,
                               supportText, treeText, formatText, edgesText, undirected, kindText);
        result.document["status"] = "ok";
        result.document["payload"] = std::move(payload);
        result.exitCode = 0;
    } catch (const CLI::ParseError& e) {
        result.document["status"] = "error";
        result.document["errorKind"] = "UsageError";
        result.document["message"] = e.what();
        result.exitCode = 2;
    } catch (const Error& e) {
        result.document["status"] = "error";
        result.document["errorKind"] = e.kindName();
        result.document["message"] = e.what();
        result.exitCode = (e.kind() == ErrorKind::UsageError) ? 2 : 1;
    } catch (const std::exception& e) {
        result.document["status"] = "error";
        result.document["errorKind"] = "Internal";
        result.document["message"] = e.what();
        result.exitCode = 1;
    }
    return result;
}

} // namespace tsq
