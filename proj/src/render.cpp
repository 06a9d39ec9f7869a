#include "msv/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "msv/diagrams.hpp"
#include "msv/graph_cone.hpp"

namespace msv {

namespace {

struct RegionLayer {
  Layer layer;
  char marker;         // ascii fill
  const char* color;   // tikz fill
};

// Canonical drawing order: big regions first so small ones stay visible.
constexpr RegionLayer kRegions[] = {
    {Layer::southwest, '~', "yellow!25"},
    {Layer::l, 'L', "green!25"},
    {Layer::l_prime, 'P', "orange!30"},
    {Layer::opposite_rothe, '#', "cyan!20"},
    {Layer::dominant, 'D', "blue!30"},
    {Layer::essential, 'E', "red!30"},
};

bool wants(const RenderSpec& spec, Layer layer) {
  return std::find(spec.show.begin(), spec.show.end(), layer) !=
         spec.show.end();
}

CellSet layer_cells(const DiagramBundle& b, Layer layer) {
  switch (layer) {
    case Layer::opposite_rothe: return b.opposite_rothe;
    case Layer::essential: return b.essential;
    case Layer::dominant: return b.dominant;
    case Layer::southwest: return b.southwest;
    case Layer::l: return b.l_diagram;
    case Layer::l_prime: return b.l_prime;
    default: return CellSet(b.w.size());
  }
}

std::string cell_list(const CellSet& cells) {
  std::ostringstream out;
  bool first = true;
  for (Cell c : cells.cells()) {
    if (!first) out << ' ';
    out << '(' << c.row << ',' << c.col << ')';
    first = false;
  }
  return out.str();
}

std::string render_graph_ascii(const DiagramBundle& b) {
  const BipartiteGraph g = graph_of(b.l_diagram);
  std::ostringstream out;
  out << "G(w): " << g.rows.size() << " + " << g.cols.size() << " vertices, "
      << g.edges.size() << " edges, " << component_count(g)
      << " component(s)\n";
  out << "rows:";
  for (int r : g.rows) out << ' ' << r;
  out << "\ncols:";
  for (int c : g.cols) out << ' ' << c << '\'';
  out << "\nedges:";
  for (const Cell& e : g.edges) out << ' ' << e.row << "->" << e.col << '\'';
  out << '\n';
  return out.str();
}

std::string render_ascii(const DiagramBundle& b, const RenderSpec& spec) {
  const int n = b.w.size();
  const CellSet dots = b.w.dots();
  const bool show_dots = wants(spec, Layer::dots);
  const bool show_lasers = wants(spec, Layer::lasers);

  // laser masks: a dot fires north and east
  CellSet vertical(n), horizontal(n);
  if (show_lasers) {
    for (int j = 1; j <= n; ++j) {
      const int r = b.w(j);
      for (int i = 1; i < r; ++i) vertical.insert(i, j);
      for (int c = j + 1; c <= n; ++c) horizontal.insert(r, c);
    }
  }

  std::ostringstream out;
  out << "w = " << b.w.to_string() << "  (n = " << n << ")\n";
  const std::string rule = [n] {
    std::string s;
    for (int c = 0; c < n; ++c) s += "+---";
    s += "+\n";
    return s;
  }();
  for (int r = 1; r <= n; ++r) {
    out << rule << '|';
    for (int c = 1; c <= n; ++c) {
      std::string body = "   ";
      if (show_lasers) {
        const bool v = vertical.contains(r, c);
        const bool h = horizontal.contains(r, c);
        if (v && h) {
          body = "-|-";
        } else if (v) {
          body = " | ";
        } else if (h) {
          body = "---";
        }
      }
      for (const RegionLayer& region : kRegions) {
        if (wants(spec, region.layer) &&
            layer_cells(b, region.layer).contains(r, c)) {
          body = std::string(3, region.marker);
        }
      }
      if (show_dots && dots.contains(r, c)) body = " \u25CF ";
      out << body << '|';
    }
    out << '\n';
  }
  out << rule;

  for (const RegionLayer& region : kRegions) {
    if (!wants(spec, region.layer)) continue;
    const CellSet cells = layer_cells(b, region.layer);
    out << "  " << region.marker << "  " << layer_name(region.layer) << " ("
        << cells.size() << " cells)";
    if (spec.cell_labels) out << ": " << cell_list(cells);
    out << '\n';
  }
  if (wants(spec, Layer::graph)) out << render_graph_ascii(b);
  return out.str();
}

std::string render_tikz(const DiagramBundle& b, const RenderSpec& spec) {
  const int n = b.w.size();
  std::ostringstream out;
  out << "\\documentclass[tikz]{standalone}\n\\begin{document}\n";
  out << "\\begin{tikzpicture}[scale=0.55]\n";

  for (const RegionLayer& region : kRegions) {
    if (!wants(spec, region.layer)) continue;
    for (Cell c : layer_cells(b, region.layer).cells()) {
      out << "\\fill[" << region.color << "] (" << c.col - 1 << ", "
          << n - c.row << ") rectangle (" << c.col << ", " << n - c.row + 1
          << ");\n";
    }
  }
  out << "\\draw[step=1] (0, 0) grid (" << n << ", " << n << ");\n";

  const bool show_dots = wants(spec, Layer::dots);
  const bool show_lasers = wants(spec, Layer::lasers);
  if (show_dots || show_lasers) {
    for (int j = 1; j <= n; ++j) {
      const int r = b.w(j);
      const double cx = j - 0.5;
      const double cy = n - r + 0.5;
      if (show_lasers) {
        out << "\\draw[red] (" << cx << ", " << n << ") -- (" << cx << ", "
            << cy << ") node {$\\bullet$} -- (" << n << ", " << cy << ");\n";
      } else {
        out << "\\node at (" << cx << ", " << cy << ") {$\\bullet$};\n";
      }
    }
  }

  if (spec.cell_labels) {
    for (const RegionLayer& region : kRegions) {
      if (!wants(spec, region.layer)) continue;
      for (Cell c : layer_cells(b, region.layer).cells()) {
        out << "\\node[red] at (" << c.col - 0.5 << ", " << n - c.row + 0.5
            << ") {\\scriptsize $(" << c.row << "," << c.col << ")$};\n";
      }
    }
  }

  if (wants(spec, Layer::graph)) {
    const BipartiteGraph g = graph_of(b.l_diagram);
    for (size_t i = 0; i < g.rows.size(); ++i) {
      out << "\\node (r" << g.rows[i] << ") at (" << n + 2 << ", "
          << -static_cast<double>(i) << ") {$" << g.rows[i] << "$};\n";
    }
    for (size_t i = 0; i < g.cols.size(); ++i) {
      out << "\\node (c" << g.cols[i] << ") at (" << n + 5 << ", "
          << -static_cast<double>(i) << ") {$\\overline{" << g.cols[i]
          << "}$};\n";
    }
    for (const Cell& e : g.edges) {
      out << "\\draw[->] (r" << e.row << ") -- (c" << e.col << ");\n";
    }
  }

  out << "\\end{tikzpicture}\n\\end{document}\n";
  return out.str();
}

}  // namespace

std::string render(const Permutation& w, const RenderSpec& spec) {
  if (spec.show.empty()) {
    throw std::invalid_argument("render needs at least one layer");
  }
  const DiagramBundle b = bundle(w);
  return spec.target == RenderTarget::ascii ? render_ascii(b, spec)
                                            : render_tikz(b, spec);
}

std::optional<Layer> layer_from_name(std::string_view name) {
  if (name == "dots") return Layer::dots;
  if (name == "lasers") return Layer::lasers;
  if (name == "opposite_rothe") return Layer::opposite_rothe;
  if (name == "essential") return Layer::essential;
  if (name == "dominant") return Layer::dominant;
  if (name == "southwest") return Layer::southwest;
  if (name == "l") return Layer::l;
  if (name == "l_prime") return Layer::l_prime;
  if (name == "graph") return Layer::graph;
  return std::nullopt;
}

const char* layer_name(Layer layer) {
  switch (layer) {
    case Layer::dots: return "dots";
    case Layer::lasers: return "lasers";
    case Layer::opposite_rothe: return "opposite_rothe";
    case Layer::essential: return "essential";
    case Layer::dominant: return "dominant";
    case Layer::southwest: return "southwest";
    case Layer::l: return "l";
    case Layer::l_prime: return "l_prime";
    case Layer::graph: return "graph";
  }
  return "?";
}

}  // namespace msv
