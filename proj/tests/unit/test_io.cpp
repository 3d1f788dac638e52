#include <filesystem>
#include <string>

#include "doctest.h"
#include "netmet/error.hpp"
#include "netmet/generators.hpp"
#include "netmet/io.hpp"

using namespace netmet;

namespace {

std::string parse_error_of(std::string_view text) {
  try {
    parse_network(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_SUITE("cli-io") {
  TEST_CASE("parse canonical document") {
    const Network x = parse_network(
        "# two nodes\n"
        "netmet-network 1\n"
        "labels p q\n"
        "weights\n"
        "1 2\n"
        "3 4  # trailing comment\n");
    CHECK(x == Network({"p", "q"}, Matrix(2, std::vector<double>{1, 2, 3, 4})));
    CHECK(parse_network("netmet-network 1 labels a weights -2.5e-3") == Network({"a"}, Matrix(1, -2.5e-3)));
  }

  TEST_CASE("parse errors carry a location") {
    CHECK(parse_error_of("netmet-network 1\nlabels a b\nweights\n1 2 3\n") ==
          "line 5, column 1: expected 4 weights, found 3");
    CHECK(parse_error_of("netmet-network 1\nlabels a a\nweights\n1 2 3 4\n").starts_with("line 2, column 10:"));
    CHECK(parse_error_of("netmet-network 1\nlabels a\nweights\nnan\n") ==
          "line 4, column 1: weight must be finite, got 'nan'");
    CHECK(parse_error_of("netmet-network 1\nlabels a\nweights\ninf\n").starts_with("line 4, column 1:"));
    CHECK(parse_error_of("netmet-network 1\nlabels a\nweights\n1x\n").starts_with("line 4, column 1:"));
    CHECK(parse_error_of("netmet-network 2\n").starts_with("line 1, column 16:"));
    CHECK(parse_error_of("network 1\n").starts_with("line 1, column 1:"));
    CHECK(parse_error_of("netmet-network 1\nlabels\nweights\n") != "");
    CHECK(parse_error_of("netmet-network 1\nlabels a\nweights\n1 2\n") != "");
    CHECK(parse_error_of("") != "");
  }

  TEST_CASE("serialize") {
    const Network x({"p", "q"}, Matrix(2, std::vector<double>{1, 2, 3, 0.1}));
    CHECK(serialize_network(x) == "netmet-network 1\nlabels p q\nweights\n1 2\n3 0.1\n");
    CHECK_THROWS_AS(serialize_network(Network({"a b"}, Matrix(1))), std::invalid_argument);
    CHECK_THROWS_AS(serialize_network(Network({"weights"}, Matrix(1))), std::invalid_argument);
    CHECK_THROWS_AS(serialize_network(Network({"#x"}, Matrix(1))), std::invalid_argument);
  }

  TEST_CASE("round trip is bit-exact") {
    SplitMix64 rng(61);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const Network x = random_network(1 + rng.next_below(6), -1e6, 1e6, seed);
      CHECK(parse_network(serialize_network(x)) == x);
    }
    const Network tiny = from_rows({{5e-324, -0.0}, {1.7976931348623157e308, 0.1 + 0.2}});
    CHECK(parse_network(serialize_network(tiny)) == tiny);
  }

  TEST_CASE("file round trip") {
    const auto path = (std::filesystem::temp_directory_path() / "netmet_io_test.net").string();
    const Network x = random_network(3, 0, 1, 3);
    write_network_file(x, path);
    CHECK(read_network_file(path) == x);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_network_file(path), std::runtime_error);
  }

  TEST_CASE("motif and report formats") {
    const Network omega = from_rows({{1, 2}, {3, 4}});
    CHECK(format_motif_set(motif_set(omega, 1)) == "netmet-motifs 1\norder = 1\ncount = 2\nmotif.0 = 1\nmotif.1 = 4\n");

    const auto rep = distance_report(single_node(2), single_node(5));
    const std::string text = format_report(rep, single_node(2), single_node(5));
    CHECK(text.starts_with("netmet-report 1\n"));
    CHECK(text.find("\nexact = 1.5\n") != std::string::npos);
    const auto body = text.substr(0, text.find("[timings]"));
    CHECK(body == format_report(distance_report(single_node(2), single_node(5)), single_node(2), single_node(5))
                      .substr(0, body.size()));
  }
}
