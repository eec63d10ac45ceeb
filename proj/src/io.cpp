#include "trilow/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace trilow {

std::string full_precision(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, w] : g.edges()) out << u << ' ' << w << '\n';
}

Graph read_graph(std::istream& in) {
  int n = 0;
  int64_t m = 0;
  if (!(in >> n >> m)) throw std::invalid_argument("read_graph: missing header");
  Graph g(n);
  for (int64_t i = 0; i < m; ++i) {
    int u = 0, w = 0;
    if (!(in >> u >> w)) throw std::invalid_argument("read_graph: truncated edge list");
    g.add_edge(u, w);
  }
  return g;
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("write_graph_file: cannot open " + path);
  write_graph(out, g);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("read_graph_file: cannot open " + path);
  return read_graph(in);
}

void write_fsplit(std::ostream& out, const FSplit& split) {
  out << "fsplit " << split.f_minus.order() << '\n';
  out << "median_synergy " << full_precision(split.median_synergy) << '\n';
  out << "p_used " << full_precision(split.p_used) << '\n';
  out << "ties " << split.ties_to_minus << ' ' << split.ties_to_plus << '\n';
  out << "f_minus " << split.f_minus.size() << '\n';
  for (const auto& [u, w] : split.f_minus.edges()) out << u << ' ' << w << '\n';
  out << "f_plus " << split.f_plus.size() << '\n';
  for (const auto& [u, w] : split.f_plus.edges()) out << u << ' ' << w << '\n';
}

namespace {

void expect_token(std::istream& in, const char* token) {
  std::string got;
  if (!(in >> got) || got != token)
    throw std::invalid_argument(std::string("read_fsplit: expected token ") + token);
}

}  // namespace

FSplit read_fsplit(std::istream& in) {
  expect_token(in, "fsplit");
  int n = 0;
  if (!(in >> n)) throw std::invalid_argument("read_fsplit: missing order");
  FSplit split;
  expect_token(in, "median_synergy");
  in >> split.median_synergy;
  expect_token(in, "p_used");
  in >> split.p_used;
  expect_token(in, "ties");
  in >> split.ties_to_minus >> split.ties_to_plus;
  for (int section = 0; section < 2; ++section) {
    expect_token(in, section == 0 ? "f_minus" : "f_plus");
    int64_t count = 0;
    if (!(in >> count)) throw std::invalid_argument("read_fsplit: missing section size");
    Graph g(n);
    for (int64_t i = 0; i < count; ++i) {
      int u = 0, w = 0;
      if (!(in >> u >> w)) throw std::invalid_argument("read_fsplit: truncated section");
      g.add_edge(u, w);
    }
    (section == 0 ? split.f_minus : split.f_plus) = std::move(g);
  }
  if (!in) throw std::invalid_argument("read_fsplit: malformed header");
  return split;
}

std::string ks_csv_header() { return "vertex,n_points,distance,eps,verdict"; }

std::string ks_csv_row(int vertex, const KSReport& r) {
  std::ostringstream out;
  out << vertex << ',' << r.n_points << ',' << full_precision(r.distance) << ','
      << full_precision(r.eps) << ',' << r.verdict();
  return out.str();
}

std::string verify_csv_header() { return "lemma_id,n,m,eta,alpha,statistic,bound,pass"; }

std::string verify_csv_row(const std::string& lemma_id, int n, int64_t m, double eta, double alpha,
                           double statistic, double bound, bool pass) {
  std::ostringstream out;
  out << lemma_id << ',' << n << ',' << m << ',' << full_precision(eta) << ','
      << full_precision(alpha) << ',' << full_precision(statistic) << ',' << full_precision(bound)
      << ',' << (pass ? "true" : "false");
  return out.str();
}

}  // namespace trilow
