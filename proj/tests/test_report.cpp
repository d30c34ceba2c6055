#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "zpe/error.hpp"
#include "zpe/report.hpp"

using namespace zpe;

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(NAN) == "nan");
  CHECK(format_double(-INFINITY) == "-inf");
  CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("csv quoting") {
  Table t{{"name", "value"}, {}};
  t.add_row({std::string("a,b"), 1.5});
  t.add_row({std::string("say \"hi\""), std::int64_t{3}});
  t.add_row({std::string("plain"), true});
  std::ostringstream out;
  write_csv(t, out);
  CHECK(out.str() == "name,value\r\n\"a,b\",1.5\r\n\"say \"\"hi\"\"\",3\r\nplain,true\r\n");
}

TEST_CASE("row width must match the header") {
  Table t{{"a", "b"}, {}};
  CHECK_THROWS_AS(t.add_row({1.0}), DomainError);
}

TEST_CASE("json layout") {
  Table t{{"beta", "U"}, {}};
  t.add_row({1.0, NAN});
  nlohmann::ordered_json meta;
  meta["seed"] = 7;
  std::ostringstream out;
  write_json(t, meta, out);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["meta"]["seed"] == 7);
  CHECK(j["rows"].size() == 1);
  CHECK(j["rows"][0]["beta"] == 1.0);
  CHECK(j["rows"][0]["U"].is_null());
}

TEST_CASE("file output") {
  Table t{{"x"}, {}};
  t.add_row({2.0});
  const auto path = std::filesystem::temp_directory_path() / "zpe_report_test.csv";
  std::ostringstream unused;
  emit_report(t, OutputFormat::csv, path.string(), {}, unused);
  std::ifstream in(path, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == "x\r\n2\r\n");
  CHECK(unused.str().empty());
  std::filesystem::remove(path);

  CHECK_THROWS_AS(emit_report(t, OutputFormat::csv, "/nonexistent-dir/x.csv", {}, unused), IoError);
  CHECK_THROWS_AS(emit_report(Table{{"x"}, {}}, OutputFormat::csv, "-", {}, unused), DomainError);
}
