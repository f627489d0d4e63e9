#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "arq/classify.hpp"
#include "arq/mesh.hpp"
#include "arq/ppa.hpp"
#include "arq/zquiver.hpp"

namespace {

constexpr const char* kSchema = "\"schema_version\":\"1\"";

arq::DynkinTree tree_from(const std::string& family, int rank) {
  return arq::build_tree(arq::family_from_string(family), rank);
}

arq::ZVertex parse_vertex(const std::string& text) {
  size_t comma = text.find(',');
  if (comma == std::string::npos)
    throw arq::Error(arq::ErrorCode::ParseError,
                     "vertex must be written as p,q");
  try {
    long p = std::stol(text.substr(0, comma));
    int q = std::stoi(text.substr(comma + 1));
    return {p, q};
  } catch (const std::exception&) {
    throw arq::Error(arq::ErrorCode::ParseError,
                     "vertex must be written as p,q");
  }
}

std::string json_wrap(const std::string& body) {
  // body is a JSON object; splice the schema version in front.
  return "{" + std::string(kSchema) + "," + body.substr(1);
}

struct Options {
  std::string family;
  int rank = 0;
  std::string gen;
  std::string format;
  std::string from;
  std::string to;
  std::string batch;
  std::string f_text = "0";
  long characteristic = 32003;
  int jobs = 0;
  int enumerate = 0;
  bool oracle = false;
};

int run_dynkin(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  if (o.format == "dot") {
    std::cout << arq::tree_to_dot(t);
  } else if (o.format == "json") {
    std::cout << json_wrap(arq::tree_to_json(t)) << "\n";
  } else {
    std::cout << arq::family_name(t.family) << "_" << t.rank << "\n";
    for (const auto& a : t.arrows)
      std::cout << "  " << a.src << " -> " << a.dst << "\n";
    for (int v : t.loop_vertices) std::cout << "  loop at " << v << "\n";
    if (t.family != arq::Family::L) {
      std::cout << "coxeter_number\t" << arq::coxeter_number(t) << "\n";
      std::cout << "positive_roots\t" << arq::positive_root_count(t) << "\n";
    }
  }
  return 0;
}

int run_auto(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  if (o.enumerate > 0) {
    auto gens = arq::enumerate_weakly_admissible(t, o.enumerate);
    if (o.format == "json") {
      std::ostringstream os;
      os << "{\"generators\":[";
      for (size_t i = 0; i < gens.size(); ++i) {
        if (i) os << ",";
        os << "\"" << gens[i].describe() << "\"";
      }
      os << "]}";
      std::cout << json_wrap(os.str()) << "\n";
    } else {
      for (const auto& g : gens) std::cout << g.describe() << "\n";
    }
    return 0;
  }
  arq::SlicedAutomorphism g = arq::parse_automorphism(t, o.gen);
  bool weak = arq::is_weakly_admissible(g);
  bool adm = weak && arq::is_admissible(g);
  if (o.format == "json") {
    std::ostringstream os;
    os << "{\"action\":\"" << g.describe() << "\",\"weakly_admissible\":"
       << (weak ? "true" : "false")
       << ",\"admissible\":" << (adm ? "true" : "false") << "}";
    std::cout << json_wrap(os.str()) << "\n";
  } else {
    std::cout << g.describe() << "\n";
    std::cout << "weakly_admissible\t" << (weak ? "true" : "false") << "\n";
    std::cout << "admissible\t" << (adm ? "true" : "false") << "\n";
  }
  return 0;
}

int run_orbit(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  arq::SlicedAutomorphism g = arq::parse_automorphism(t, o.gen);
  arq::OrbitQuiver q = arq::orbit_quotient(t, g);
  if (o.format == "json")
    std::cout << json_wrap(arq::orbit_to_json(q)) << "\n";
  else
    std::cout << arq::orbit_to_dot(q);
  return 0;
}

int run_mesh_hom(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  if (!o.batch.empty()) {
    std::ifstream in(o.batch);
    if (!in)
      throw arq::Error(arq::ErrorCode::ParseError,
                       "cannot open batch file " + o.batch);
    std::vector<arq::ZVertex> sources;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      sources.push_back(parse_vertex(line));
    }
#ifdef _OPENMP
    if (o.jobs > 0) omp_set_num_threads(o.jobs);
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < sources.size(); ++i)
      arq::hom_knit(t, sources[i]);  // warm the memo in parallel
    for (const auto& x : sources) {
      arq::DimensionFunction d = arq::hom_knit(t, x);
      for (const auto& [v, n] : d.values)
        std::cout << x.p << "\t" << x.q << "\t" << v.p << "\t" << v.q << "\t"
                  << n << "\n";
    }
    return 0;
  }
  arq::ZVertex x = parse_vertex(o.from);
  if (!o.to.empty()) {
    arq::ZVertex y = parse_vertex(o.to);
    long value = o.oracle ? arq::hom_oracle(t, x, y)
                          : arq::hom_knit(t, x).at(y);
    std::cout << value << "\n";
    return 0;
  }
  arq::DimensionFunction d = arq::hom_knit(t, x);
  if (o.format == "dot")
    std::cout << arq::dimension_to_dot(d);
  else
    std::cout << arq::dimension_to_tsv(d);
  return 0;
}

int run_mesh_total(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  arq::SlicedAutomorphism g = arq::parse_automorphism(t, o.gen);
#ifdef _OPENMP
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
#endif
  arq::TotalHom th =
      o.jobs == 1 ? arq::total_hom_serial(t, g) : arq::total_hom(t, g);
  if (o.format == "json") {
    std::ostringstream os;
    os << "{\"vertices\":[";
    for (size_t i = 0; i < th.quiver.vertices.size(); ++i) {
      if (i) os << ",";
      os << "[" << th.quiver.vertices[i].p << "," << th.quiver.vertices[i].q
         << "]";
    }
    os << "],\"dims\":[";
    for (size_t i = 0; i < th.dims.size(); ++i) {
      if (i) os << ",";
      os << "[";
      for (size_t j = 0; j < th.dims[i].size(); ++j) {
        if (j) os << ",";
        os << th.dims[i][j];
      }
      os << "]";
    }
    os << "],\"l\":[";
    auto l = arq::l_function(th);
    for (size_t j = 0; j < l.size(); ++j) {
      if (j) os << ",";
      os << l[j];
    }
    os << "]}";
    std::cout << json_wrap(os.str()) << "\n";
  } else {
    for (size_t i = 0; i < th.dims.size(); ++i)
      for (size_t j = 0; j < th.dims[i].size(); ++j)
        std::cout << i << "\t" << j << "\t" << th.dims[i][j] << "\n";
  }
  return 0;
}

int run_classify(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  arq::SlicedAutomorphism g = arq::parse_automorphism(t, o.gen);
  std::string by_table = "null";
  try {
    by_table = arq::standard_by_table(t, g) ? "true" : "false";
  } catch (const arq::Error& err) {
    if (err.code() != arq::ErrorCode::UnrecognizedGenerator) throw;
  }
  auto [hom_ok, checks] = arq::standard_by_hom_condition(t, g);
  bool vc = arq::vertex_count_criterion(t, g);
  auto cy = arq::cy_dimension(t, g);
  arq::OrbitQuiver q = arq::orbit_quotient(t, g);
  std::ostringstream os;
  os << "{\"by_table\":" << by_table
     << ",\"by_hom_condition\":" << (hom_ok ? "true" : "false")
     << ",\"by_vertex_count\":" << (vc ? "true" : "false")
     << ",\"cy_dimension\":";
  if (cy)
    os << *cy;
  else
    os << "null";
  os << ",\"vertex_count\":" << q.vertices.size()
     << ",\"root_count\":" << arq::positive_root_count(t) << "}";
  std::cout << json_wrap(os.str()) << "\n";
  return 0;
}

int run_ppa(const Options& o) {
  arq::DynkinTree t = tree_from(o.family, o.rank);
  arq::NCPolynomial f;
  if (o.f_text != "0") f = arq::parse_nc_polynomial(o.f_text);
  if (o.format == "tsv") {
    arq::PathQuotientAlgebra a =
        arq::build_algebra(t, f, o.characteristic);
    for (const auto& b : a.basis) {
      std::cout << b.src << "\t" << b.dst << "\t" << b.word.size() << "\t";
      if (b.word.empty()) {
        std::cout << "e" << b.src;
      } else {
        for (size_t i = 0; i < b.word.size(); ++i) {
          if (i) std::cout << "*";
          std::cout << a.quiver.arrows[b.word[i]].name;
        }
      }
      std::cout << "\n";
    }
    return 0;
  }
  arq::InvariantReport rep = arq::invariant_report(t, f, o.characteristic);
  std::ostringstream os;
  os << "{\"dim\":" << rep.dim << ",\"cartan\":[";
  for (size_t i = 0; i < rep.cartan.size(); ++i) {
    if (i) os << ",";
    os << "[";
    for (size_t j = 0; j < rep.cartan[i].size(); ++j) {
      if (j) os << ",";
      os << rep.cartan[i][j];
    }
    os << "]";
  }
  os << "],\"nakayama\":[";
  for (size_t i = 0; i < rep.nakayama.size(); ++i) {
    if (i) os << ",";
    os << rep.nakayama[i];
  }
  os << "],\"socle_dims\":[";
  for (size_t i = 0; i < rep.socle_dims.size(); ++i) {
    if (i) os << ",";
    os << rep.socle_dims[i];
  }
  os << "],\"center_dim\":" << rep.center_dim << ",\"reduced_f\":\""
     << rep.reduced_f << "\",\"matches_undeformed\":"
     << (rep.matches_undeformed ? "true" : "false") << "}";
  std::cout << json_wrap(os.str()) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorics of repetition quivers, orbit categories, and "
               "deformed preprojective algebras"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool need_gen) {
    cmd->add_option("--family", o.family, "A, D, E, or L")->required();
    cmd->add_option("--rank", o.rank, "rank n")->required();
    if (need_gen)
      cmd->add_option("--gen", o.gen,
                      "automorphism, e.g. tau^2, phi*tau^3, rho");
    cmd->add_option("--format", o.format, "output format");
  };

  CLI::App* dynkin = app.add_subcommand("dynkin", "print a Dynkin tree");
  add_common(dynkin, false);

  CLI::App* aut = app.add_subcommand("auto", "inspect an automorphism");
  add_common(aut, true);
  aut->add_option("--enumerate", o.enumerate,
                  "list weakly admissible generators up to this exponent");

  CLI::App* orbit = app.add_subcommand("orbit", "orbit quotient quiver");
  add_common(orbit, true);

  CLI::App* mesh = app.add_subcommand("mesh", "mesh category Hom dimensions");
  mesh->require_subcommand(1);
  CLI::App* mesh_hom = mesh->add_subcommand("hom", "dim Hom(x, -)");
  add_common(mesh_hom, false);
  mesh_hom->add_option("--from", o.from, "source vertex p,q");
  mesh_hom->add_option("--to", o.to, "target vertex p,q (single value)");
  mesh_hom->add_option("--batch", o.batch, "file with one source p,q per line");
  mesh_hom->add_option("--jobs", o.jobs, "parallel batch workers");
  mesh_hom->add_flag("--oracle", o.oracle,
                     "use the path-space oracle for --to");
  CLI::App* mesh_total = mesh->add_subcommand("total", "orbit Hom matrix");
  add_common(mesh_total, true);
  mesh_total->add_option("--jobs", o.jobs, "worker threads (1 = serial)");

  CLI::App* classify = app.add_subcommand("classify", "standardness and CY");
  add_common(classify, true);

  CLI::App* ppa = app.add_subcommand("ppa", "deformed preprojective algebras");
  ppa->require_subcommand(1);
  CLI::App* ppa_build = ppa->add_subcommand("build", "build and report");
  add_common(ppa_build, false);
  ppa_build->add_option("--char", o.characteristic, "prime characteristic");
  ppa_build->add_option("--f", o.f_text, "deformation polynomial");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    if (*dynkin) {
      if (o.format.empty()) o.format = "text";
      return run_dynkin(o);
    }
    if (*aut) {
      if (o.format.empty()) o.format = "text";
      if (o.gen.empty() && o.enumerate == 0)
        throw arq::Error(arq::ErrorCode::ParseError,
                         "auto needs --gen or --enumerate");
      return run_auto(o);
    }
    if (*orbit) {
      if (o.format.empty()) o.format = "dot";
      if (o.gen.empty())
        throw arq::Error(arq::ErrorCode::ParseError, "orbit needs --gen");
      return run_orbit(o);
    }
    if (*mesh_hom) {
      if (o.format.empty()) o.format = "tsv";
      if (o.from.empty() && o.batch.empty())
        throw arq::Error(arq::ErrorCode::ParseError,
                         "mesh hom needs --from or --batch");
      return run_mesh_hom(o);
    }
    if (*mesh_total) {
      if (o.format.empty()) o.format = "tsv";
      if (o.gen.empty())
        throw arq::Error(arq::ErrorCode::ParseError, "mesh total needs --gen");
      return run_mesh_total(o);
    }
    if (*classify) {
      if (o.format.empty()) o.format = "json";
      if (o.gen.empty())
        throw arq::Error(arq::ErrorCode::ParseError, "classify needs --gen");
      return run_classify(o);
    }
    if (*ppa_build) {
      if (o.format.empty()) o.format = "json";
      return run_ppa(o);
    }
  } catch (const arq::Error& err) {
    std::cerr << "{" << kSchema << ",\"error\":\""
              << arq::error_code_name(err.code()) << "\",\"message\":\""
              << err.what() << "\"}\n";
    return 2;
  }
  return 1;
}
