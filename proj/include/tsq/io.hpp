#ifndef TSQ_IO_HPP
#define TSQ_IO_HPP

#include "tsq/quiver.hpp"

#include "json.hpp"

#include <string>

namespace tsq {

/// Canonical quiver document: {"vertices": n, "arrows": [[t,h],...], "flow": [...]}
/// with keys in that order. Arrows are order-significant.
nlohmann::ordered_json quiverToJson(const ToricQuiver& q);
ToricQuiver quiverFromJson(const nlohmann::ordered_json& doc);

std::string saveQuiver(const ToricQuiver& q); // compact, round-trips byte-identically
ToricQuiver parseQuiver(const std::string& text);
ToricQuiver loadQuiverFile(const std::string& path);

/// One digraph; every arrow becomes an edge labeled with its flow value.
std::string exportDot(const ToricQuiver& q);

} // namespace tsq

#endif
