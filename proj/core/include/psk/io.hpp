#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "psk/kernel.hpp"
#include "psk/permutation.hpp"

namespace psk::io {

/// 17 significant digits: parses back to the same double.
std::string format_double(double value);

/// Dense row-major CSV. Header: empty corner cell, then the points; each row starts with its point.
std::string gram_to_csv(const GramMatrix& gram);

/// One row per draw; `draws` holds draws as columns (dim × count). Header lists the points.
std::string samples_to_csv(const std::vector<Permutation>& points, const Eigen::MatrixXd& draws);

/// Columns (partition, kernel_value). Partitions are quoted since they contain commas.
std::string class_table_to_csv(const ClassKernelTable& table);

/// Undirected DOT graph of the conjugacy-class quotient. Each vertex carries its partition as
/// label, plus one attribute k<i> per entry of `tables` holding that table's kernel value.
std::string class_graph_to_dot(const std::vector<ClassKernelTable>& tables, int n);

}  // namespace psk::io
