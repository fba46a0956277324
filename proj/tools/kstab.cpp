// kstab: K-stability invariants of toric Fano varieties.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "kstab/document.hpp"
#include "kstab/error.hpp"
#include "kstab/report.hpp"

using namespace kstab;

namespace {

struct Source {
  std::string input;
  std::string catalog;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "Input document (JSON), '-' for stdin");
  auto* cat = cmd->add_option("--catalog", src.catalog, "Use a built-in catalog entry instead of --input");
  in->excludes(cat);
}

ToricFano load(const Source& src) {
  if (!src.catalog.empty()) return realize(catalog_entry(src.catalog));
  if (src.input.empty()) throw Error(ErrorCode::InvalidArgument, "one of --input or --catalog is required");
  std::string text;
  if (src.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(src.input);
    if (!f) throw Error(ErrorCode::MalformedInput, "cannot read " + src.input);
    text.assign(std::istreambuf_iterator<char>(f), {});
  }
  return realize(parse_input_text(text));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact K-stability invariants of toric Fano varieties"};
  app.require_subcommand(1);

  Source src;
  std::string format = "json";
  int radius = 8;
  bool with_oracle = false;

  auto* report = app.add_subcommand("report", "Stability report: delta, alpha bound, margin, verdict");
  add_source(report, src);
  report->add_option("--format", format, "json, text or csv")->capture_default_str();
  report->add_option("--search-radius", radius, "Box radius for sampled directions")->capture_default_str();
  report->add_flag("--oracle", with_oracle, "Run brute-force cross-checks inline");

  std::string k_list = "1,2,3,4";
  std::string dk_format = "csv";
  auto* deltak = app.add_subcommand("deltak", "Convergence table of delta_k");
  add_source(deltak, src);
  deltak->add_option("--k-list", k_list, "Comma-separated levels k")->capture_default_str();
  deltak->add_option("--search-radius", radius, "Box radius for the delta_k search")->capture_default_str();
  deltak->add_option("--format", dk_format, "csv or json")->capture_default_str();

  std::string name;
  auto* catalog = app.add_subcommand("catalog", "List built-in varieties or emit one as an input document");
  catalog->add_option("name", name, "Catalog entry");
  catalog->add_option("--format", format, "json or text (listing only)")->capture_default_str();

  std::string u_text;
  std::string eps_text = "0";
  std::string plot_path;
  int samples = 100;
  auto* curve = app.add_subcommand("curve", "Exact volume curve along a valuation with the Okounkov check");
  add_source(curve, src);
  curve->add_option("--u", u_text, "Primitive direction, e.g. 1,0")->required();
  curve->add_option("--eps", eps_text, "Slice parameter for the barycenter check (p/q)")->capture_default_str();
  curve->add_option("--plot", plot_path, "Also write float samples x,vol to this CSV file");
  curve->add_option("--samples", samples, "Number of plot intervals")->capture_default_str();

  oracle::CorpusSpec spec;
  int gate_radius = 4;
  spec.count = 100;
  auto* gate = app.add_subcommand("oracle", "Run the oracle gate over a seeded random corpus");
  gate->add_option("--seed", spec.seed, "Corpus seed")->capture_default_str();
  gate->add_option("--count", spec.count, "Number of instances")->capture_default_str();
  gate->add_option("--dim", spec.dim, "Dimension (2 or 3)")->capture_default_str();
  gate->add_option("--min-rays", spec.min_rays)->capture_default_str();
  gate->add_option("--max-rays", spec.max_rays)->capture_default_str();
  gate->add_option("--coordinate-bound", spec.coordinate_bound)->capture_default_str();
  gate->add_option("--search-radius", gate_radius, "Box radius for sampling")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (report->parsed()) {
      const Format f = parse_format(format);
      const ToricFano x = load(src);
      OracleSection o;
      const ojson doc = report_json(x, {radius, with_oracle}, &o);
      std::cout << render(doc, f);
      if (o.counterexample) {
        std::cerr << "oracle mismatch; counterexample:\n" << o.counterexample->dump(2) << "\n";
        return exit_code(ErrorCode::OracleMismatch);
      }
    } else if (deltak->parsed()) {
      const Format f = parse_format(dk_format);
      if (f == Format::Text) throw Error(ErrorCode::InvalidArgument, "deltak supports csv or json");
      const ToricFano x = load(src);
      const auto rows = deltak_table(x, parse_int_list(k_list), radius);
      for (const auto& r : rows) {
        if (r.index_warning) {
          std::cerr << "warning: k=" << r.k << " is not a multiple of the Cartier index " << x.cartier_index()
                    << "; vanishing orders are floored\n";
        }
      }
      std::cout << (f == Format::Csv ? deltak_csv(rows) : render(deltak_json(rows), Format::Json));
    } else if (catalog->parsed()) {
      if (name.empty()) {
        std::cout << render(catalog_listing(), parse_format(format));
      } else {
        std::cout << render(to_json(catalog_entry(name)), Format::Json);
      }
    } else if (curve->parsed()) {
      const ToricFano x = load(src);
      const LatticeVec u = parse_int_list(u_text);
      if (u.size() != x.dim()) throw Error(ErrorCode::InvalidArgument, "--u must have " + std::to_string(x.dim()) + " entries");
      std::cout << render(curve_json(x, u, parse_rational(eps_text)), Format::Json);
      if (!plot_path.empty()) {
        std::ofstream f(plot_path);
        if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + plot_path);
        f << curve_samples_csv(x, u, samples);
      }
    } else if (gate->parsed()) {
      const CorpusGate g = corpus_gate(spec, gate_radius);
      std::cout << render(g.json, Format::Json);
      if (!g.counterexamples.empty()) {
        for (const auto& c : g.counterexamples) std::cerr << c.dump() << "\n";
        return exit_code(ErrorCode::OracleMismatch);
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
