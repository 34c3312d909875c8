#include "tsq/io.hpp"

#include "tsq/errors.hpp"

#include <fstream>
#include <sstream>

namespace tsq {

nlohmann::ordered_json quiverToJson(const ToricQuiver& q) {
    nlohmann::ordered_json doc;
    doc["vertices"] = q.vertexCount();
    auto arrows = nlohmann::ordered_json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.tail, a.head});
    doc["arrows"] = std::move(arrows);
    doc["flow"] = q.flow();
    return doc;
}

ToricQuiver quiverFromJson(const nlohmann::ordered_json& doc) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("arrows") ||
        !doc.contains("flow"))
        throw Error(ErrorKind::UsageError,
                    "quiver document needs the keys vertices, arrows and flow");
    int n = doc["vertices"].get<int>();
    std::vector<Arrow> arrows;
    for (const auto& pair : doc["arrows"]) {
        if (!pair.is_array() || pair.size() != 2)
            throw Error(ErrorKind::UsageError, "each arrow must be a [tail, head] pair");
        arrows.push_back({pair[0].get<int>(), pair[1].get<int>()});
    }
    Flow flow = doc["flow"].get<Flow>();
    return ToricQuiver(n, std::move(arrows), std::move(flow));
}

std::string saveQuiver(const ToricQuiver& q) { return quiverToJson(q).dump(); }

ToricQuiver parseQuiver(const std::string& text) {
    nlohmann::ordered_json doc;
    try {
        doc = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::UsageError, std::string("invalid quiver JSON: ") + e.what());
    }
    return quiverFromJson(doc);
}

ToricQuiver loadQuiverFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::UsageError, "cannot open quiver file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parseQuiver(buffer.str());
}

std::string exportDot(const ToricQuiver& q) {
    std::ostringstream out;
    out << "digraph {\n";
    std::vector<bool> incident(q.vertexCount(), false);
    for (const Arrow& a : q.arrows()) incident[a.tail] = incident[a.head] = true;
    for (int v = 0; v < q.vertexCount(); ++v)
        if (!incident[v]) out << "  " << v << ";\n";
    for (int j = 0; j < q.arrowCount(); ++j)
        out << "  " << q.arrow(j).tail << " -> " << q.arrow(j).head << " [label=\""
            << q.flow()[j] << "\"];\n";
    out << "}\n";
    return out.str();
}

} // namespace tsq
