#pragma once

#include <json.hpp>

#include "pc/certificate.hpp"
#include "pc/graph.hpp"

namespace pc {

using Json = nlohmann::ordered_json;

// Coloring: {"n": N, "k": K, "edges": [[u, v], ...], "colors": [c, ...]}
// Certificate: the coloring object plus
//   "certificate": {"k": K, "strategy": "...", "strong": bool, "verified": bool}

Json coloring_to_json(const EdgeColoring& c);
Json certificate_to_json(const PcCertificate& cert);

/// Reads a coloring of `g`. "edges" is optional; when present it must be the
/// edge set of g (any order) and colors follow it. Throws MalformedInput or
/// ColoringGraphMismatch.
EdgeColoring coloring_from_json(const Json& j, const Graph& g);

/// Rebuilds and re-verifies a certificate; the stored "verified" flag is ignored.
PcCertificate certificate_from_json(const Json& j);

}  // namespace pc
