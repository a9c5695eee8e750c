#include "psk/io.hpp"

#include <cstdio>

#include "psk/errors.hpp"

namespace psk::io {

std::string format_double(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string gram_to_csv(const GramMatrix& gram) {
  std::string out;
  for (const auto& p : gram.points) out += "," + p.to_string();
  out += "\n";
  for (Eigen::Index i = 0; i < gram.values.rows(); ++i) {
    out += gram.points[static_cast<std::size_t>(i)].to_string();
    for (Eigen::Index j = 0; j < gram.values.cols(); ++j) out += "," + format_double(gram.values(i, j));
    out += "\n";
  }
  return out;
}

std::string samples_to_csv(const std::vector<Permutation>& points, const Eigen::MatrixXd& draws) {
  if (static_cast<Eigen::Index>(points.size()) != draws.rows()) throw InvalidArgument("samples_to_csv: point count mismatch");
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) out += (i ? "," : "") + points[i].to_string();
  out += "\n";
  for (Eigen::Index d = 0; d < draws.cols(); ++d) {
    for (Eigen::Index i = 0; i < draws.rows(); ++i) out += (i ? "," : "") + format_double(draws(i, d));
    out += "\n";
  }
  return out;
}

std::string class_table_to_csv(const ClassKernelTable& table) {
  std::string out = "partition,kernel_value\n";
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    out += "\"" + table.classes[i].to_string() + "\"," + format_double(table.values[i]) + "\n";
  return out;
}

std::string class_graph_to_dot(const std::vector<ClassKernelTable>& tables, int n) {
  if (tables.empty()) throw InvalidArgument("class_graph_to_dot: no tables");
  const auto& classes = tables.front().classes;
  std::string out = "graph S" + std::to_string(n) + "_classes {\n";
  for (std::size_t i = 0; i < classes.size(); ++i) {
    out += "  v" + std::to_string(i) + " [label=\"" + classes[i].to_string() + "\"";
    for (std::size_t t = 0; t < tables.size(); ++t)
      out += ", k" + std::to_string(t) + "=\"" + format_double(tables[t].values[i]) + "\"";
    out += "];\n";
  }
  for (const auto& [a, b] : tables.front().edges)
    out += "  v" + std::to_string(a) + " -- v" + std::to_string(b) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace psk::io
