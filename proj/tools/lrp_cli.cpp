#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lrp/json_io.hpp"

namespace {

// 0 ok, 1 identity check failed, 2 input/flag error, 3 not LDP, 4 not l-reflexive
int exit_code(const lrp::error& e) {
  switch (e.code) {
    case lrp::errc::parse_error:
    case lrp::errc::restriction_violated:
      return 2;
    case lrp::errc::not_ldp:
      return 3;
    case lrp::errc::not_l_reflexive:
      return 4;
    default:
      return 2;
  }
}

lrp::LatticePolygon read_polygon(const std::string& text, const std::string& path) {
  if (!text.empty()) return lrp::polygon_from_text(text);
  std::ifstream in(path);
  if (!in) throw lrp::error(lrp::errc::parse_error, "cannot open " + path);
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  while (!data.empty() && (data.back() == '\n' || data.back() == '\r' || data.back() == ' '))
    data.pop_back();
  if (!data.empty() && data.front() == '{')
    return lrp::polygon_from_json(nlohmann::json::parse(data));
  return lrp::polygon_from_text(data);
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants and classification of l-reflexive lattice polygons"};
  app.require_subcommand(1);

  std::string polygon_text, input_path, format = "text", output_path, family_name;
  long long ell = 1, max_ell = 25;
  int jobs = 0;
  bool tmp_only = false;

  CLI::App* analyze = app.add_subcommand("analyze", "full invariant report for one polygon");
  analyze->add_option("--polygon", polygon_text, "vertices as 'x1,y1;x2,y2;...'");
  analyze->add_option("--input", input_path, "file with polygon text or JSON");
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  analyze->add_option("--output", output_path);

  CLI::App* classify = app.add_subcommand("classify", "enumerate classes for one index");
  classify->add_option("--ell", ell, "reflexivity index")->required();
  classify->add_option("--format", format)->check(CLI::IsMember({"json"}));
  classify->add_option("--jobs", jobs, "worker threads (0 = default)");
  classify->add_option("--output", output_path);

  CLI::App* tables = app.add_subcommand("tables", "class count table for odd indices");
  tables->add_option("--max-ell", max_ell)->required();
  tables->add_flag("--tmp", tmp_only, "count only mirror-property classes");
  tables->add_option("--jobs", jobs, "worker threads (0 = default)");
  tables->add_option("--output", output_path);

  CLI::App* graph = app.add_subcommand("graph", "weighted cyclic graph of a polygon");
  graph->add_option("--polygon", polygon_text)->required();
  graph->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  graph->add_option("--output", output_path);

  CLI::App* family = app.add_subcommand("family", "named parametrized polygon family");
  family->add_option("--name", family_name)->required();
  family->add_option("--ell", ell)->required();
  family->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
  family->add_option("--output", output_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (polygon_text.empty() == input_path.empty()) {
        std::cerr << "analyze: exactly one of --polygon/--input required\n";
        return 2;
      }
      lrp::InvariantReport r = lrp::analyze(read_polygon(polygon_text, input_path));
      write_out(format == "json" ? lrp::to_json(r).dump(2) + "\n" : lrp::report_text(r),
                output_path);
      return r.all_ok() ? 0 : 1;
    }
    if (classify->parsed()) {
      lrp::ClassTable t = lrp::enumerate_l_reflexive(lrp::Int(ell), jobs);
      write_out(lrp::to_json(t).dump(2) + "\n", output_path);
      return 0;
    }
    if (tables->parsed()) {
      std::vector<lrp::CountRow> rows = tmp_only ? lrp::tmp_counts(lrp::Int(max_ell), jobs)
                                                 : lrp::rp_counts(lrp::Int(max_ell), jobs);
      write_out(lrp::to_json(rows, tmp_only).dump(2) + "\n", output_path);
      return 0;
    }
    if (graph->parsed()) {
      lrp::LatticePolygon q = lrp::polygon_from_text(polygon_text);
      write_out(lrp::graph_to_dot(lrp::wve2c_graph(q)), output_path);
      return 0;
    }
    if (family->parsed()) {
      std::optional<lrp::Family> f = lrp::family_from_name(family_name);
      if (!f) {
        std::cerr << "unknown family '" << family_name << "'; known:";
        for (lrp::Family g : lrp::all_families()) std::cerr << " " << lrp::family_name(g);
        std::cerr << "\n";
        return 2;
      }
      lrp::LatticePolygon q = lrp::family_polygon(*f, lrp::Int(ell));
      write_out(format == "json" ? lrp::polygon_json(q).dump(2) + "\n"
                                 : lrp::polygon_to_text(q) + "\n",
                output_path);
      return 0;
    }
  } catch (const lrp::error& e) {
    std::cerr << e.what() << "\n";
    return exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
