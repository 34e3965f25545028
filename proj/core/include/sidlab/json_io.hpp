#pragma once

#include <nlohmann/json.hpp>

#include "sidlab/bigraph.hpp"
#include "sidlab/density.hpp"
#include "sidlab/folds.hpp"
#include "sidlab/fractional.hpp"
#include "sidlab/percolation.hpp"

namespace sidlab {

using Json = nlohmann::json;

// Every parser throws std::invalid_argument with the offending field named.

/// {"v1":[ids],"v2":[ids],"edges":[[l,r],...]}
Json bigraph_to_json(const Bigraph& g);
Bigraph bigraph_from_json(const Json& j);

/// Bigraph form plus "edge_colors", parallel to "edges".
Json colored_to_json(const ColoredBigraph& h);
/// A missing "edge_colors" means the constant coloring 1.
ColoredBigraph colored_from_json(const Json& j);

/// {"phi":{id:id,...},"left":[ids]}
Json fold_to_json(const Bigraph& g, const Fold& f);
Fold fold_from_json(const Bigraph& g, const Json& j);

/// {"mode":"left"|"edge","folds":[...],"trajectory":[[ids]...]}; edge-mode
/// sets list [l, r] pairs.
Json certificate_to_json(const Bigraph& g, const PercolationCertificate& c);
PercolationCertificate certificate_from_json(const Bigraph& g, const Json& j);

/// {"mu":[...],"nu":[...],"w":[[...],...]}
Json bigraphon_to_json(const StepBigraphon& w);
StepBigraphon bigraphon_from_json(const Json& j);

/// {"<color>": bigraphon, ...}
Json tuple_to_json(const BigraphonTuple& ws);
BigraphonTuple tuple_from_json(const Json& j);

/// {"vertices":[ids],"colors":[...],"weights":[{"subset":[ids],"color":c,"weight":x},...]}
Json fractional_to_json(const ColoredFractionalBigraph& h);
ColoredFractionalBigraph fractional_from_json(const Json& j);

}  // namespace sidlab
