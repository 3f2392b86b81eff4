#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aniso/errors.hpp"
#include "aniso/mesh.hpp"
#include "aniso/norms.hpp"
#include "aniso/studies.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw aniso::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw aniso::Error("cannot write '" + out_path + "'");
  f << content;
}

int parse_exponent(const std::string& s) {
  if (s == "inf") return aniso::kExpInf;
  if (s == "1") return 1;
  if (s == "2") return 2;
  throw CLI::ValidationError("exponent must be 1, 2, or inf");
}

aniso::Simplex parse_vertices(int dim, const std::string& text) {
  std::vector<aniso::Point> pts;
  std::istringstream ss(text);
  std::string chunk;
  while (std::getline(ss, chunk, ';')) {
    std::istringstream cs(chunk);
    std::string coord;
    aniso::Point p;
    p.dim = dim;
    int c = 0;
    while (std::getline(cs, coord, ',')) {
      if (c >= dim) throw CLI::ValidationError("too many coordinates in '" + chunk + "'");
      std::size_t used = 0;
      p.x[c++] = std::stod(coord, &used);
      if (used != coord.size()) throw CLI::ValidationError("bad coordinate '" + coord + "'");
    }
    if (c != dim) throw CLI::ValidationError("expected " + std::to_string(dim) + " coordinates");
    pts.push_back(p);
  }
  if (static_cast<int>(pts.size()) != dim + 1)
    throw CLI::ValidationError("expected " + std::to_string(dim + 1) + " vertices");
  aniso::Simplex s;
  s.dim = dim;
  for (int n = 0; n <= dim; ++n) s.vertices[n] = pts[n];
  return s;
}

std::string study_rows_csv(const std::vector<aniso::StudyRow>& rows,
                           const std::vector<std::string>& columns) {
  std::ostringstream os;
  os << "N";
  for (const auto& c : columns) os << ',' << c;
  os << '\n';
  for (const auto& row : rows) {
    os << row.N;
    for (const auto& c : columns) {
      os << ',';
      const auto it = row.quantities.find(c);
      if (it != row.quantities.end()) os << aniso::format_sci(it->second);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anisotropic simplex quality audit and interpolation studies"};
  app.require_subcommand(1);

  // audit
  auto* cmd_audit = app.add_subcommand("audit", "per-element quality report for a mesh file");
  std::string audit_mesh, audit_format = "csv", audit_out;
  double audit_gamma0 = 10.0;
  cmd_audit->add_option("--mesh", audit_mesh, "mesh file")->required();
  cmd_audit->add_option("--gamma0", audit_gamma0, "threshold on H/h (default 10)");
  cmd_audit->add_option("--format", audit_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_audit->add_option("--out", audit_out, "output file (default stdout)");

  // element
  auto* cmd_element = app.add_subcommand("element", "quality report for one simplex");
  int elem_dim = 2;
  std::string elem_vertices, elem_format = "csv", elem_out;
  double elem_gamma0 = 10.0;
  cmd_element->add_option("--dim", elem_dim, "2 or 3")->required()->check(CLI::IsMember({2, 3}));
  cmd_element->add_option("--vertices", elem_vertices, "\"x1,y1[,z1];x2,y2[,z2];...\"")
      ->required();
  cmd_element->add_option("--gamma0", elem_gamma0, "threshold on H/h (default 10)");
  cmd_element->add_option("--format", elem_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd_element->add_option("--out", elem_out, "output file (default stdout)");

  // sliver-table
  auto* cmd_sliver = app.add_subcommand("sliver-table", "sliver family geometry table");
  double sl_eps1 = 0.0, sl_eps2 = 0.0;
  std::vector<int> sl_levels;
  std::string sl_out;
  cmd_sliver->add_option("--eps1", sl_eps1, "height exponent")->required();
  cmd_sliver->add_option("--eps2", sl_eps2, "width exponent")->required();
  cmd_sliver->add_option("--levels", sl_levels, "N values")->required()->delimiter(',');
  cmd_sliver->add_option("--out", sl_out, "output file (default stdout)");

  // convergence
  auto* cmd_conv = app.add_subcommand("convergence", "interpolation error study");
  std::string conv_example, conv_operator = "lagrange", conv_out;
  double conv_eps = 0.0, conv_delta = 0.0;
  std::vector<int> conv_levels;
  int conv_k = 1;
  cmd_conv->add_option("--example", conv_example, "I or II")
      ->required()
      ->check(CLI::IsMember({"I", "II"}));
  cmd_conv->add_option("--eps", conv_eps, "eps exponent")->required();
  cmd_conv->add_option("--delta", conv_delta, "delta exponent (example I)");
  cmd_conv->add_option("--levels", conv_levels, "doubling N values")->required()->delimiter(',');
  cmd_conv->add_option("--k", conv_k, "polynomial degree")->check(CLI::IsMember({1, 2}));
  cmd_conv->add_option("--operator", conv_operator, "lagrange or cr")
      ->check(CLI::IsMember({"lagrange", "cr"}));
  cmd_conv->add_option("--out", conv_out, "output file (default stdout)");

  // bound
  auto* cmd_bound = app.add_subcommand("bound", "measured bound quotients across a family");
  std::string bound_theorem, bound_p = "2", bound_q = "2", bound_out;
  aniso::FamilyId bound_family = aniso::FamilyId::RightAngled2D;
  int bound_ell = 2, bound_m = 1;
  double b_eps = 0.0, b_delta = 0.0, b_gamma = 0.0, b_eps1 = 0.0, b_eps2 = 0.0;
  std::vector<int> bound_levels;
  const std::map<std::string, aniso::FamilyId> family_names{
      {"RightAngled2D", aniso::FamilyId::RightAngled2D},
      {"Dagger2D", aniso::FamilyId::Dagger2D},
      {"Blade2D", aniso::FamilyId::Blade2D},
      {"Tetra7_1_3", aniso::FamilyId::Tetra7_1_3},
      {"Sliver", aniso::FamilyId::Sliver},
      {"ConvI", aniso::FamilyId::ConvI},
      {"ConvII", aniso::FamilyId::ConvII}};
  cmd_bound->add_option("--family", bound_family, "element family")
      ->required()
      ->transform(CLI::CheckedTransformer(family_names, CLI::ignore_case));
  cmd_bound->add_option("--theorem", bound_theorem, "A, B-h, or B-dir")
      ->required()
      ->check(CLI::IsMember({"A", "B-h", "B-dir"}));
  cmd_bound->add_option("--ell", bound_ell, "source smoothness order")->required();
  cmd_bound->add_option("--m", bound_m, "target derivative order")->required();
  cmd_bound->add_option("--p", bound_p, "source exponent: 1, 2, or inf");
  cmd_bound->add_option("--q", bound_q, "target exponent: 1, 2, or inf");
  cmd_bound->add_option("--levels", bound_levels, "N values (s = 1/N)")
      ->required()
      ->delimiter(',');
  cmd_bound->add_option("--eps", b_eps, "family exponent eps");
  cmd_bound->add_option("--delta", b_delta, "family exponent delta");
  cmd_bound->add_option("--gamma", b_gamma, "family exponent gamma");
  cmd_bound->add_option("--eps1", b_eps1, "family exponent eps1");
  cmd_bound->add_option("--eps2", b_eps2, "family exponent eps2");
  cmd_bound->add_option("--out", bound_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  const bool element_mode = cmd_element->parsed();
  try {
    if (cmd_audit->parsed()) {
      const aniso::Mesh mesh = aniso::parse_mesh(read_file(audit_mesh));
      aniso::AuditConfig cfg;
      cfg.gamma0 = audit_gamma0;
      cfg.format = audit_format == "json" ? aniso::OutputFormat::json : aniso::OutputFormat::csv;
      const aniso::AuditResult result = aniso::audit(mesh, cfg);
      std::ostringstream os;
      if (cfg.format == aniso::OutputFormat::json)
        aniso::write_audit_json(result, os);
      else
        aniso::write_audit_csv(result, os);
      write_output(audit_out, os.str());
    } else if (element_mode) {
      const aniso::Simplex s = parse_vertices(elem_dim, elem_vertices);
      aniso::AuditResult result;
      result.dim = elem_dim;
      aniso::ElementReport row;
      row.geo = aniso::full_report(s);  // Degenerate propagates (exit 2)
      row.good = row.geo.H_over_h <= elem_gamma0;
      result.summary.element_count = 1;
      result.summary.flagged_count = row.good ? 0 : 1;
      result.summary.H_h = row.geo.H_T0;
      result.summary.theta_max = row.geo.theta_max;
      if (row.geo.psi_max) result.summary.psi_max = *row.geo.psi_max;
      result.rows.push_back(std::move(row));
      std::ostringstream os;
      if (elem_format == "json")
        aniso::write_audit_json(result, os);
      else
        aniso::write_audit_csv(result, os);
      write_output(elem_out, os.str());
    } else if (cmd_sliver->parsed()) {
      const auto rows = aniso::sliver_table(sl_eps1, sl_eps2, sl_levels);
      write_output(sl_out, study_rows_csv(
                               rows, {"L6_over_L1", "h3_over_measure", "H_over_h", "R3_over_h"}));
    } else if (cmd_conv->parsed()) {
      aniso::OperatorSpec op;
      op.kind = conv_operator == "cr" ? aniso::ElementKind::CrouzeixRaviart
                                      : aniso::ElementKind::Lagrange;
      op.k = conv_k;
      aniso::NormSpec norm;  // H1 seminorm of the error
      norm.m = 1;
      norm.q = 2;
      norm.ell = 2;
      norm.p = 2;
      const auto family = conv_example == "I" ? aniso::FamilyId::ConvI : aniso::FamilyId::ConvII;
      const auto rows = aniso::run_convergence(family, conv_eps, conv_delta, conv_levels, op, norm);
      write_output(conv_out, study_rows_csv(rows, {"Err", "r"}));
    } else if (cmd_bound->parsed()) {
      aniso::FamilySpec fam;
      fam.family_id = bound_family;
      fam.eps = b_eps;
      fam.delta = b_delta;
      fam.gamma = b_gamma;
      fam.eps1 = b_eps1;
      fam.eps2 = b_eps2;
      aniso::NormSpec norm;
      norm.ell = bound_ell;
      norm.m = bound_m;
      norm.p = parse_exponent(bound_p);
      norm.q = parse_exponent(bound_q);
      const aniso::BoundKind kind = bound_theorem == "A" ? aniso::BoundKind::TheoremA
                                    : bound_theorem == "B-h" ? aniso::BoundKind::TheoremB_H
                                                             : aniso::BoundKind::TheoremB_dir;
      std::vector<double> s_levels;
      for (int n : bound_levels) s_levels.push_back(1.0 / n);
      const int dim =
          (bound_family == aniso::FamilyId::RightAngled2D ||
           bound_family == aniso::FamilyId::Dagger2D || bound_family == aniso::FamilyId::Blade2D)
              ? 2
              : 3;
      const aniso::Polynomial field = aniso::default_bound_field(dim);
      const auto report = aniso::measure_bound_constant(fam, field, kind, norm, s_levels);
      std::ostringstream os;
      os << "s,lhs,rhs,ratio\n";
      for (std::size_t i = 0; i < report.levels.size(); ++i) {
        os << aniso::format_sci(report.levels[i]) << ',' << aniso::format_sci(report.lhs[i])
           << ',' << aniso::format_sci(report.rhs[i]) << ',' << aniso::format_sci(report.ratio[i])
           << '\n';
      }
      os << "# ratio_max=" << aniso::format_sci(report.ratio_max)
         << " zero_rhs=" << (report.zero_rhs ? 1 : 0) << '\n';
      write_output(bound_out, os.str());
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const aniso::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const aniso::Degenerate& e) {
    std::cerr << "error: degenerate element: " << e.what() << '\n';
    return element_mode ? 2 : 1;
  } catch (const aniso::InvalidFamilyParams& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const aniso::UnsupportedDegree& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const aniso::InvalidDimension& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
