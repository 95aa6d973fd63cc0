// funtopo: command-line front end for the library.
//
// Exit codes: 0 success, 1 invalid input or arguments, 2 precondition
// violation (for example a diagram point born at -inf in `morse`).

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "funtopo/bottleneck.hpp"
#include "funtopo/cover.hpp"
#include "funtopo/diagram.hpp"
#include "funtopo/douglas.hpp"
#include "funtopo/errors.hpp"
#include "funtopo/gallery.hpp"
#include "funtopo/homology.hpp"
#include "funtopo/io.hpp"
#include "funtopo/morse.hpp"
#include "funtopo/persistence.hpp"

using namespace funtopo;

namespace {

template <class Write>
void write_to(const std::string& path, Write&& write) {
  if (path.empty() || path == "-") {
    write(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  write(out);
  if (!out) throw ValidationError("failed writing '" + path + "'");
}

PersistenceDiagram load_diagram(const std::string& path) {
  auto in = open_input(path);
  return read_diagram(in);
}

void print_ranks(const char* label, const std::vector<std::size_t>& ranks) {
  std::cout << label;
  for (auto r : ranks) std::cout << ' ' << r;
  std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sublevel-set persistence, Morse inequalities and diagram distances"};
  app.require_subcommand(1);

  auto* compute = app.add_subcommand("compute", "Persistence diagram of a filtered complex");
  std::string flt_path, dgm_out;
  std::int64_t field = 2;
  compute->add_option("--input", flt_path, "Filtration file (.flt)")->required();
  compute->add_option("--field", field, "Prime field characteristic")->capture_default_str();
  compute->add_option("--output", dgm_out, "Diagram file (.dgm); stdout if omitted");

  auto* caps = app.add_subcommand("caps", "Cap numbers of a diagram");
  std::string caps_dgm;
  double caps_eps = 0;
  std::optional<double> caps_at;
  std::optional<int> caps_degree;
  caps->add_option("--dgm", caps_dgm, "Diagram file")->required();
  caps->add_option("--epsilon", caps_eps, "Persistence threshold")->required();
  caps->add_option("--at", caps_at, "Count only events straddling this level");
  caps->add_option("--degree", caps_degree, "Single degree; all degrees present if omitted");

  auto* morse = app.add_subcommand("morse", "Morse inequality report");
  std::string morse_dgm;
  double morse_eps = 0;
  int morse_max = 0;
  morse->add_option("--dgm", morse_dgm, "Diagram file")->required();
  morse->add_option("--epsilon", morse_eps, "Persistence threshold")->required();
  morse->add_option("--max-degree", morse_max, "Highest degree reported")->required();

  auto* bn = app.add_subcommand("bottleneck", "Bottleneck distance between two diagrams");
  std::string bn_a, bn_b;
  int bn_degree = 0;
  bn->add_option("a", bn_a, "First diagram")->required();
  bn->add_option("b", bn_b, "Second diagram")->required();
  bn->add_option("--degree", bn_degree, "Homological degree")->capture_default_str();

  auto* rad = app.add_subcommand("radical", "Open the attained left endpoints of a barcode");
  std::string bar_in, bar_out;
  rad->add_option("--barcode", bar_in, "Barcode file (.bar)")->required();
  rad->add_option("--output", bar_out, "Output barcode; stdout if omitted");

  auto* dowker = app.add_subcommand("dowker", "Compare nerve and Vietoris homology of a cover");
  std::string cov_path, dist_path;
  std::int64_t dowker_field = 2;
  double delta = 0;
  auto* cov_opt = dowker->add_option("--cover", cov_path, "Cover file (.cov)");
  auto* dist_opt =
      dowker->add_option("--distances", dist_path, "Distance matrix; covers by open balls");
  dowker->add_option("--delta", delta, "Ball radius for --distances")->needs(dist_opt);
  dowker->add_option("--field", dowker_field, "Prime field characteristic")->capture_default_str();
  cov_opt->excludes(dist_opt);

  auto* hawaiian = app.add_subcommand("hawaiian", "Truncated Hawaiian earring");
  int hawaiian_k = 1, hawaiian_dim = 1;
  std::optional<int> sweep;
  hawaiian->add_option("--k", hawaiian_k, "Truncation index")->capture_default_str();
  hawaiian->add_option("--sweep", sweep, "Report ranks for k = 1..kmax");
  hawaiian->add_option("--dimension", hawaiian_dim, "Sphere dimension")->capture_default_str();

  auto* product = app.add_subcommand("product", "Barcode {[0,1/n) : n = 1..N}");
  int product_n = 1;
  product->add_option("--n", product_n, "Number of bars")->required();

  auto* douglas = app.add_subcommand("douglas", "Evaluate the Douglas functional");
  std::string curve_path, phi_arg;
  int quadrature = 64;
  douglas->add_option("--curve", curve_path, "Curve samples (.csv)")->required();
  douglas->add_option("--phi", phi_arg, "Reparametrization samples (.csv) or 'id'")->required();
  douglas->add_option("--n", quadrature, "Quadrature grid size")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*compute) {
      auto in = open_input(flt_path);
      const auto complex = read_filtration(in);
      const auto diagram = diagram_of(compute_persistence(complex, PrimeField(field)));
      write_to(dgm_out, [&](std::ostream& out) { write_diagram(out, diagram); });
    } else if (*caps) {
      const auto d = load_diagram(caps_dgm);
      std::vector<int> degrees = caps_degree ? std::vector<int>{*caps_degree} : d.degrees();
      for (int deg : degrees) {
        const auto m = caps_at ? cap_number_at(d, deg, *caps_at, caps_eps)
                               : cap_number(d, deg, caps_eps);
        std::cout << "degree " << deg << ": " << m << '\n';
      }
    } else if (*morse) {
      const auto report = morse_check(load_diagram(morse_dgm), morse_eps, morse_max);
      write_report(std::cout, report);
    } else if (*bn) {
      std::cout << to_string(bottleneck(load_diagram(bn_a), load_diagram(bn_b), bn_degree))
                << '\n';
    } else if (*rad) {
      auto in = open_input(bar_in);
      const auto r = radical(read_barcode(in));
      write_to(bar_out, [&](std::ostream& out) { write_barcode(out, r); });
    } else if (*dowker) {
      Cover cover;
      if (!cov_path.empty()) {
        auto in = open_input(cov_path);
        cover = read_cover(in);
      } else if (!dist_path.empty()) {
        auto in = open_input(dist_path);
        cover = balls_cover(read_distance_matrix(in), delta);
      } else {
        throw ValidationError("dowker: one of --cover or --distances is required");
      }
      const auto r = dowker_check(cover, PrimeField(dowker_field));
      print_ranks("nerve:", r.nerve_ranks);
      print_ranks("vietoris:", r.vietoris_ranks);
      std::cout << "agree: " << (r.agrees ? "yes" : "no") << '\n';
    } else if (*hawaiian) {
      if (sweep) {
        std::cout << std::setw(4) << "k" << std::setw(8) << "rank" << '\n';
        for (const auto& [k, rank] : hawaiian_rank_sweep(hawaiian_dim, *sweep))
          std::cout << std::setw(4) << k << std::setw(8) << rank << '\n';
        std::cout << "rank of H_" << hawaiian_dim
                  << "(f<=1 -> f<=2) grows without bound in k: finite evidence of divergence\n";
      } else {
        const auto k = hawaiian_complex({hawaiian_dim, hawaiian_k});
        write_diagram(std::cout, diagram_of(compute_persistence(k)));
        std::cout << "# rank H_" << hawaiian_dim << " at t=1: "
                  << betti_at(k, 1.0, hawaiian_dim) << '\n';
      }
    } else if (*product) {
      write_barcode(std::cout, product_family(product_n));
    } else if (*douglas) {
      auto cin = open_input(curve_path);
      DouglasInput input;
      input.curve = read_csv(cin);
      input.quadrature_n = quadrature;
      if (phi_arg == "id") {
        input.phi = identity_phi(static_cast<int>(input.curve.size()));
      } else {
        auto pin = open_input(phi_arg);
        for (const auto& row : read_csv(pin)) {
          if (row.size() != 1) throw ValidationError("phi samples must have one column");
          input.phi.push_back(row[0]);
        }
      }
      std::cout << format_double(douglas_eval(input)) << '\n';
    }
  } catch (const PreconditionError& e) {
    std::cerr << "funtopo: precondition violated: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "funtopo: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
