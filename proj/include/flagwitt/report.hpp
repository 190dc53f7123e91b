#pragma once

#include <string>

#include "flagwitt/enumeration.hpp"

namespace flagwitt {

/// "{1,4}" or "{}".
std::string format_vertex_set(const VertexSet& s);

/// Numbering legend, e.g. "[A3: vertices 1-3; B2: vertices 4-5]".
std::string numbering_legend(const DynkinDiagram& d);

/// Human-readable classification report, ending with the char(k) caveat.
std::string classify_report_text(const LineBundleClass& l, const VanishingVerdict& v);

/// One line-delimited record with fields
/// {diagram, theta, lambda, status, rule, witness, caveat}, newline-terminated.
std::string classify_record(const ParabolicSubset& p, const LambdaSet& lam,
                            const VanishingVerdict& v);

std::string enumerate_text(const ClassificationTable& t);

/// One record per row plus a final totals record.
std::string enumerate_records(const ClassificationTable& t);

/// DOT rendering of a decorated diagram: Theta filled black, Lambda double
/// circles, witness (least criterion witness, if any) marked with an alpha
/// label. Nodes ascending, newline-terminated, byte-stable.
std::string render_dot(const DynkinDiagram& d, const VertexSet& theta,
                       const VertexSet& lambda);

}  // namespace flagwitt
