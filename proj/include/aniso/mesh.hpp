#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "aniso/errors.hpp"
#include "aniso/geometry.hpp"

namespace aniso {

struct Mesh {
  int dim = 2;
  std::vector<Point> nodes;
  std::vector<std::array<int, 4>> elements;  // first dim+1 entries used

  Simplex element(int e) const;
};

// Plain-text format: line 1 dim; line 2 "n_nodes n_elems"; then n_nodes
// coordinate lines and n_elems lines of d+1 zero-based node indices.
// '#' starts a comment; blank lines are skipped. Throws ParseError with the
// offending 1-based line number.
Mesh parse_mesh(const std::string& text);

enum class OutputFormat { csv, json };

struct AuditConfig {
  double gamma0 = 10.0;  // threshold on H_T0/h
  OutputFormat format = OutputFormat::csv;

  void validate() const;
};

struct ElementReport {
  int elem_id = 0;
  bool degenerate = false;
  GeometricReport geo;  // valid only when !degenerate
  bool good = false;    // H_T0/h <= gamma0
};

struct AuditSummary {
  int element_count = 0;
  int degenerate_count = 0;
  int flagged_count = 0;  // non-degenerate with H_T0/h > gamma0
  double H_h = 0.0;       // max H_T0 over non-degenerate elements
  double theta_max = 0.0; // radians
  double psi_max = 0.0;   // radians; 3-D only
};

struct AuditResult {
  int dim = 2;
  std::vector<ElementReport> rows;
  AuditSummary summary;
};

// Degenerate elements are reported, excluded from summary maxima, not fatal.
AuditResult audit(const Mesh& mesh, const AuditConfig& cfg);

// Lowercase scientific, 5 significant digits (printf %.4e).
std::string format_sci(double v);

// Columns: elem_id,h,measure,H_T0,H_over_h,alpha_ratio,circumradius,
// theta_max_deg,psi_max_deg,assumption1_M,good. 2-D leaves psi_max_deg and
// assumption1_M empty; degenerate rows leave numerics empty and set the good
// column to "degenerate". A '#'-prefixed summary line closes the file.
void write_audit_csv(const AuditResult& result, std::ostream& os);

void write_audit_json(const AuditResult& result, std::ostream& os);

}  // namespace aniso
