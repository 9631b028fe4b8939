#include "platonic/format.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace platonic;
using K = PlatonicKind;

TEST_CASE("representation JSON fields", "[format]") {
  const Json j = Json::parse(render(represent_tetrahedral(1), OutputFormat::Json));
  CHECK(j["kind"] == "tetrahedral");
  CHECK(j["base_index"] == "1");
  CHECK(j["coefficients"] == Json::array({3, -8, 7, -2}));
  CHECK(j["indices"] == Json::array({"1", "2", "3", "4"}));
  CHECK(j["values"] == Json::array({"1", "4", "10", "20"}));
  CHECK(j["target"] == "1");
  CHECK(j["includes_index_zero"] == false);

  const Json zero = to_json(represent_tetrahedral(0));
  CHECK(zero["includes_index_zero"] == true);

  // Integers survive serialization beyond 64 bits.
  const Integer big("-340282366920938463463374607431768211457");
  CHECK(Integer(to_json(represent_tetrahedral(big))["target"].get<std::string>()) == big);
}

TEST_CASE("period rows", "[format]") {
  const auto report = check_period_claim(K::Tetrahedral, 2);
  CHECK(period_row(report, OutputFormat::Csv) == "tetrahedral,2,4,4,true\n");
  CHECK(period_csv_header() == "kind,d,closed_form,empirical,agrees\n");
  CHECK(period_row(report, OutputFormat::Json) ==
        R"({"kind":"tetrahedral","d":2,"closed_form":4,"empirical":4,"agrees":true})"
        "\n");
}

TEST_CASE("scan report renderings", "[format]") {
  ScanOptions options;
  options.keep_witnesses = true;
  const ScanReport report = scan_conjecture(6, options);
  const Json j = to_json(report);
  CHECK(j["N"] == 6);
  CHECK(j["policy"] == "repetition");
  CHECK(j["min_terms_histogram"]["1"] == 3);
  CHECK(j["min_terms_histogram"]["2"] == 2);
  CHECK(j["min_terms_histogram"]["3"] == 1);
  CHECK(j["failures"].empty());
  CHECK(j["witnesses"][2]["terms"][0]["value"] == "1");
  CHECK(j["witnesses"][2]["terms"][0]["provenance"].size() == 5);

  const std::string csv = render(report, OutputFormat::Csv);
  CHECK(csv.rfind("record,key,value\nhistogram,1,3\nhistogram,2,2\nhistogram,3,1\n", 0) == 0);
  CHECK(csv.find("witness,3,1+1+1\n") != std::string::npos);
  CHECK(csv.find("witness,5,4+1\n") != std::string::npos);
}

TEST_CASE("difference table renderings", "[format]") {
  const DiffTable t = difference_table(K::Tetrahedral, 5);
  CHECK(render(t, OutputFormat::Csv) ==
        "index,value,delta1,delta2,delta3,delta4\n"
        "1,1,3,3,1,0\n"
        "2,4,6,4,1,\n"
        "3,10,10,5,,\n"
        "4,20,15,,,\n"
        "5,35,,,,\n");
  const Json j = to_json(t);
  CHECK(j["columns"][4] == Json::array({"0"}));
}

TEST_CASE("sequence table line", "[format]") {
  CHECK(render(platonic_range(K::Icosahedral, 7, 8), OutputFormat::Table) ==
        "i_n: 742, 1128\n");
}

TEST_CASE("parsers", "[format]") {
  CHECK(parse_kind("dodecahedral") == K::Dodecahedral);
  CHECK(parse_kind("cubes") == K::Cube);
  CHECK(parse_kind("o") == K::Octahedral);
  CHECK_FALSE(parse_kind("square"));
  CHECK(parse_format("csv") == OutputFormat::Csv);
  CHECK_FALSE(parse_format("xml"));
  CHECK(parse_integer("-00123") == -123);
  CHECK(parse_integer("+7") == 7);
  CHECK_THROWS_AS(parse_integer(""), DomainError);
  CHECK_THROWS_AS(parse_integer("-"), DomainError);
  CHECK_THROWS_AS(parse_integer("12a"), DomainError);
  CHECK_THROWS_AS(parse_integer(" 1"), DomainError);
}
