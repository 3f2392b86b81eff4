#include "aniso/mesh.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace aniso {

namespace {

constexpr double kRadToDeg = 57.295779513082320877;

struct Tokenized {
  int line = 0;  // 1-based
  std::vector<std::string> tokens;
};

std::vector<Tokenized> tokenize(const std::string& text) {
  std::vector<Tokenized> rows;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Tokenized row;
    row.line = line;
    std::string tok;
    while (ls >> tok) row.tokens.push_back(tok);
    if (!row.tokens.empty()) rows.push_back(std::move(row));
  }
  return rows;
}

int parse_int(const Tokenized& row, std::size_t idx, const char* what) {
  const std::string& t = row.tokens[idx];
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(t, &used);
  } catch (const std::exception&) {
    throw ParseError(row.line, std::string("expected integer ") + what + ", got '" + t + "'");
  }
  if (used != t.size())
    throw ParseError(row.line, std::string("expected integer ") + what + ", got '" + t + "'");
  return v;
}

double parse_real(const Tokenized& row, std::size_t idx, const char* what) {
  const std::string& t = row.tokens[idx];
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw ParseError(row.line, std::string("expected number ") + what + ", got '" + t + "'");
  }
  if (used != t.size())
    throw ParseError(row.line, std::string("expected number ") + what + ", got '" + t + "'");
  return v;
}

}  // namespace

Simplex Mesh::element(int e) const {
  Simplex s;
  s.dim = dim;
  for (int n = 0; n <= dim; ++n) s.vertices[n] = nodes[elements[e][n]];
  return s;
}

Mesh parse_mesh(const std::string& text) {
  const auto rows = tokenize(text);
  std::size_t r = 0;
  const int eof_line = rows.empty() ? 1 : rows.back().line;
  auto next = [&](const char* what) -> const Tokenized& {
    if (r >= rows.size()) throw ParseError(eof_line, std::string("missing ") + what);
    return rows[r++];
  };

  Mesh mesh;
  {
    const Tokenized& row = next("dimension line");
    if (row.tokens.size() != 1) throw ParseError(row.line, "dimension line must hold one value");
    mesh.dim = parse_int(row, 0, "dimension");
    if (mesh.dim != 2 && mesh.dim != 3) throw ParseError(row.line, "dimension must be 2 or 3");
  }
  int n_nodes = 0, n_elems = 0;
  {
    const Tokenized& row = next("count line");
    if (row.tokens.size() != 2) throw ParseError(row.line, "count line must hold two values");
    n_nodes = parse_int(row, 0, "node count");
    n_elems = parse_int(row, 1, "element count");
    if (n_nodes < 0 || n_elems < 0) throw ParseError(row.line, "counts must be non-negative");
  }
  for (int i = 0; i < n_nodes; ++i) {
    const Tokenized& row = next("node line");
    if (static_cast<int>(row.tokens.size()) != mesh.dim)
      throw ParseError(row.line, "node line must hold " + std::to_string(mesh.dim) + " coordinates");
    Point p;
    p.dim = mesh.dim;
    for (int c = 0; c < mesh.dim; ++c) p.x[c] = parse_real(row, c, "coordinate");
    mesh.nodes.push_back(p);
  }
  for (int e = 0; e < n_elems; ++e) {
    const Tokenized& row = next("element line");
    if (static_cast<int>(row.tokens.size()) != mesh.dim + 1)
      throw ParseError(row.line,
                       "element line must hold " + std::to_string(mesh.dim + 1) + " indices");
    std::array<int, 4> ids{};
    for (int c = 0; c <= mesh.dim; ++c) {
      ids[c] = parse_int(row, c, "node index");
      if (ids[c] < 0 || ids[c] >= n_nodes)
        throw ParseError(row.line, "node index " + std::to_string(ids[c]) + " out of range");
    }
    mesh.elements.push_back(ids);
  }
  if (r < rows.size()) throw ParseError(rows[r].line, "unexpected trailing content");
  return mesh;
}

void AuditConfig::validate() const {
  if (!(gamma0 > 0.0)) throw Error("gamma0 must be positive");
}

AuditResult audit(const Mesh& mesh, const AuditConfig& cfg) {
  cfg.validate();
  AuditResult result;
  result.dim = mesh.dim;
  result.summary.element_count = static_cast<int>(mesh.elements.size());
  for (std::size_t e = 0; e < mesh.elements.size(); ++e) {
    ElementReport row;
    row.elem_id = static_cast<int>(e);
    try {
      row.geo = full_report(mesh.element(static_cast<int>(e)));
      row.good = row.geo.H_over_h <= cfg.gamma0;
    } catch (const Degenerate&) {
      row.degenerate = true;
    }
    if (row.degenerate) {
      ++result.summary.degenerate_count;
    } else {
      if (!row.good) ++result.summary.flagged_count;
      result.summary.H_h = std::max(result.summary.H_h, row.geo.H_T0);
      result.summary.theta_max = std::max(result.summary.theta_max, row.geo.theta_max);
      if (row.geo.psi_max)
        result.summary.psi_max = std::max(result.summary.psi_max, *row.geo.psi_max);
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4e", v);
  return buf;
}

void write_audit_csv(const AuditResult& result, std::ostream& os) {
  os << "elem_id,h,measure,H_T0,H_over_h,alpha_ratio,circumradius,theta_max_deg,"
        "psi_max_deg,assumption1_M,good\n";
  for (const ElementReport& row : result.rows) {
    os << row.elem_id << ',';
    if (row.degenerate) {
      os << ",,,,,,,,,degenerate\n";
      continue;
    }
    const GeometricReport& g = row.geo;
    os << format_sci(g.h) << ',' << format_sci(g.measure) << ',' << format_sci(g.H_T0) << ','
       << format_sci(g.H_over_h) << ',' << format_sci(g.alpha_ratio) << ','
       << format_sci(g.circumradius) << ',' << format_sci(g.theta_max * kRadToDeg) << ',';
    if (g.psi_max) os << format_sci(*g.psi_max * kRadToDeg);
    os << ',';
    if (g.assumption1_M) os << format_sci(*g.assumption1_M);
    os << ',' << (row.good ? "true" : "false") << '\n';
  }
  const AuditSummary& s = result.summary;
  os << "# summary elements=" << s.element_count << " degenerate=" << s.degenerate_count
     << " flagged=" << s.flagged_count << " H_h=" << format_sci(s.H_h)
     << " theta_max_deg=" << format_sci(s.theta_max * kRadToDeg);
  if (result.dim == 3) os << " psi_max_deg=" << format_sci(s.psi_max * kRadToDeg);
  os << '\n';
}

void write_audit_json(const AuditResult& result, std::ostream& os) {
  nlohmann::json root;
  root["dim"] = result.dim;
  root["elements"] = nlohmann::json::array();
  for (const ElementReport& row : result.rows) {
    nlohmann::json e;
    e["elem_id"] = row.elem_id;
    if (row.degenerate) {
      e["status"] = "degenerate";
    } else {
      const GeometricReport& g = row.geo;
      e["status"] = "ok";
      e["h"] = g.h;
      e["measure"] = g.measure;
      e["H_T0"] = g.H_T0;
      e["H_over_h"] = g.H_over_h;
      e["alpha_ratio"] = g.alpha_ratio;
      e["circumradius"] = g.circumradius;
      e["theta_max_deg"] = g.theta_max * kRadToDeg;
      if (g.psi_max) e["psi_max_deg"] = *g.psi_max * kRadToDeg;
      if (g.assumption1_M) e["assumption1_M"] = *g.assumption1_M;
      e["good"] = row.good;
    }
    root["elements"].push_back(std::move(e));
  }
  const AuditSummary& s = result.summary;
  root["summary"]["elements"] = s.element_count;
  root["summary"]["degenerate"] = s.degenerate_count;
  root["summary"]["flagged"] = s.flagged_count;
  root["summary"]["H_h"] = s.H_h;
  root["summary"]["theta_max_deg"] = s.theta_max * kRadToDeg;
  if (result.dim == 3) root["summary"]["psi_max_deg"] = s.psi_max * kRadToDeg;
  os << root.dump(2) << '\n';
}

}  // namespace aniso
