#include "doctest.h"
#include "psk/io.hpp"

using namespace psk;

TEST_CASE("format_double round trips") {
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(io::format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("gram csv") {
  const auto g = gram(KernelParams({0.5, 0.5}, 2), enumerate_group(2));
  CHECK(io::gram_to_csv(g) == ",1 2,2 1\n1 2,1,0.5\n2 1,0.5,1\n");
}

TEST_CASE("samples csv") {
  Eigen::MatrixXd draws(2, 2);
  draws << 1.0, 3.0, 2.0, 4.0;
  CHECK(io::samples_to_csv(enumerate_group(2), draws) == "1 2,2 1\n1,2\n3,4\n");
}

TEST_CASE("class table csv and dot") {
  const auto t = class_kernel_table(KernelParams({0.5, 0.5}, 3));
  CHECK(io::class_table_to_csv(t) == "partition,kernel_value\n\"3\",0.25\n\"2,1\",0.5\n\"1,1,1\",1\n");
  const auto dot = io::class_graph_to_dot({t}, 3);
  CHECK(dot ==
        "graph S3_classes {\n"
        "  v0 [label=\"3\", k0=\"0.25\"];\n"
        "  v1 [label=\"2,1\", k0=\"0.5\"];\n"
        "  v2 [label=\"1,1,1\", k0=\"1\"];\n"
        "  v0 -- v1;\n"
        "  v1 -- v2;\n"
        "}\n");
}
