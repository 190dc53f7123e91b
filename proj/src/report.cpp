#include "flagwitt/report.hpp"

#include <sstream>

#include "json.hpp"

namespace flagwitt {

namespace {

const char* status_name(Status s) {
  return s == Status::VanishesAllDegrees ? "vanishes" : "inconclusive";
}

std::string rule_name(const VanishingVerdict& v) {
  if (!v.rule) return "none";
  return std::holds_alternative<MainTheoremRule>(*v.rule) ? "main_theorem"
                                                          : "grassmannian_odd_odd";
}

nlohmann::ordered_json record_json(const ParabolicSubset& p, const LambdaSet& lam,
                                   const VanishingVerdict& v) {
  nlohmann::ordered_json rec;
  rec["diagram"] = p.diagram->name();
  rec["theta"] = p.theta;
  rec["lambda"] = lam.lambda;
  rec["status"] = status_name(v.status);
  rec["rule"] = v.rule ? nlohmann::ordered_json(rule_name(v)) : nullptr;
  if (v.rule && std::holds_alternative<MainTheoremRule>(*v.rule))
    rec["witness"] = std::get<MainTheoremRule>(*v.rule).witness;
  else
    rec["witness"] = nullptr;
  rec["caveat"] = VanishingVerdict::caveat;
  return rec;
}

}  // namespace

std::string format_vertex_set(const VertexSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string numbering_legend(const DynkinDiagram& d) {
  std::string out = "[";
  for (size_t c = 0; c < d.components().size(); ++c) {
    if (c) out += "; ";
    const SimpleType& t = d.components()[c];
    const int lo = d.component_offset(static_cast<int>(c));
    const int hi = lo + t.rank - 1;
    out += static_cast<char>(t.letter);
    out += std::to_string(t.rank);
    out += ": ";
    out += (lo == hi) ? "vertex " + std::to_string(lo)
                      : "vertices " + std::to_string(lo) + "-" + std::to_string(hi);
  }
  return out + "]";
}

std::string classify_report_text(const LineBundleClass& l, const VanishingVerdict& v) {
  const ParabolicSubset& p = l.parabolic;
  std::ostringstream out;
  out << "diagram: " << p.diagram->name() << "  " << numbering_legend(*p.diagram)
      << "\n";
  out << "theta:   " << format_vertex_set(p.theta) << "\n";
  out << "lambda:  " << format_vertex_set(lambda_of(l).lambda) << "\n";
  if (v.vanishes()) {
    out << "verdict: W^i = 0 for all i\n";
    out << "rule:    " << rule_name(v);
    if (const auto* mt = std::get_if<MainTheoremRule>(&*v.rule)) {
      out << " (witness vertex " << mt->witness << ")\n";
      out << "theta':  " << format_vertex_set(v.reduction->theta_prime)
          << "  (P^1-bundle over X_theta')\n";
    } else {
      const auto& gr = std::get<GrassmannianOddOddRule>(*v.rule);
      out << " (Gr(" << gr.d << "," << gr.d + gr.e << "), d=" << gr.d
          << " e=" << gr.e << " both odd)\n";
    }
  } else {
    out << "verdict: inconclusive (no vanishing certified)\n";
  }
  out << "note:    " << VanishingVerdict::caveat << "\n";
  return out.str();
}

std::string classify_record(const ParabolicSubset& p, const LambdaSet& lam,
                            const VanishingVerdict& v) {
  return record_json(p, lam, v).dump() + "\n";
}

std::string enumerate_text(const ClassificationTable& t) {
  std::ostringstream out;
  out << "diagram: " << t.diagram->name() << "  " << numbering_legend(*t.diagram)
      << "\n";
  for (const auto& row : t.rows) {
    out << "theta=" << format_vertex_set(row.theta)
        << " lambda=" << format_vertex_set(row.lambda) << " "
        << status_name(row.verdict.status);
    if (row.verdict.rule) {
      out << " rule=" << rule_name(row.verdict);
      if (const auto* mt = std::get_if<MainTheoremRule>(&*row.verdict.rule))
        out << " witness=" << mt->witness;
    }
    out << "\n";
  }
  const auto& tot = t.totals;
  out << "totals: rows=" << t.rows.size() << " vanishes=" << tot.at("vanishes")
      << " inconclusive=" << tot.at("inconclusive")
      << " main_theorem=" << tot.at("main_theorem")
      << " grassmannian_odd_odd=" << tot.at("grassmannian_odd_odd") << "\n";
  out << "note: " << VanishingVerdict::caveat << "\n";
  return out.str();
}

std::string enumerate_records(const ClassificationTable& t) {
  std::string out;
  for (const auto& row : t.rows) {
    ParabolicSubset p = make_parabolic(t.diagram, row.theta);
    out += classify_record(p, LambdaSet{row.lambda}, row.verdict);
  }
  nlohmann::ordered_json totals;
  totals["diagram"] = t.diagram->name();
  totals["rows"] = t.rows.size();
  totals["totals"] = t.totals;
  out += totals.dump() + "\n";
  return out;
}

std::string render_dot(const DynkinDiagram& d, const VertexSet& theta,
                       const VertexSet& lambda) {
  VertexSet th = normalize_vertex_set(d, theta);
  VertexSet lam = normalize_vertex_set(d, lambda);
  VertexSet witnesses = criterion_witnesses(d, th, lam);
  const int witness = witnesses.empty() ? 0 : witnesses.front();
  std::ostringstream out;
  out << "graph dynkin {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= d.rank(); ++v) {
    out << "  " << v;
    std::vector<std::string> attrs;
    if (contains(th, v)) {
      attrs.push_back("style=filled");
      attrs.push_back("fillcolor=black");
      attrs.push_back("fontcolor=white");
    }
    if (contains(lam, v)) attrs.push_back("shape=doublecircle");
    if (v == witness) attrs.push_back("xlabel=\"α\"");
    if (!attrs.empty()) {
      out << " [";
      for (size_t i = 0; i < attrs.size(); ++i) {
        if (i) out << ", ";
        out << attrs[i];
      }
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& [i, j] : d.edges()) {
    out << "  " << i << " -- " << j;
    if (const int m = d.edge_multiplicity(i, j); m > 1)
      out << " [label=\"" << m << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace flagwitt
