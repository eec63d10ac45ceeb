#pragma once
// Text formats: graphs as a "n m" header plus one 0-indexed "u w" line per
// edge, splits as two edge-list sections under a header carrying the cut
// synergy at 17 significant digits, and the CSV row layouts shared by the
// command line tool.

#include <iosfwd>
#include <string>

#include "trilow/graph.hpp"
#include "trilow/ks.hpp"
#include "trilow/synergy.hpp"

namespace trilow {

void write_graph(std::ostream& out, const Graph& g);
Graph read_graph(std::istream& in);
void write_graph_file(const std::string& path, const Graph& g);
Graph read_graph_file(const std::string& path);

void write_fsplit(std::ostream& out, const FSplit& split);
FSplit read_fsplit(std::istream& in);

std::string ks_csv_header();
std::string ks_csv_row(int vertex, const KSReport& r);

std::string verify_csv_header();
std::string verify_csv_row(const std::string& lemma_id, int n, int64_t m, double eta, double alpha,
                           double statistic, double bound, bool pass);

// Shortest decimal that round-trips a double (17 significant digits).
std::string full_precision(double v);

}  // namespace trilow
