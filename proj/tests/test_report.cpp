#include <gtest/gtest.h>

#include <cstdlib>
#include <limits>

#include "qwalk/report.hpp"

using namespace qwalk;

TEST(JsonNumber, RoundTripsAndNullsNonFinite) {
  EXPECT_EQ(json_number(1.0), "1");
  EXPECT_EQ(json_number(0.5), "0.5");
  EXPECT_EQ(json_number(std::numeric_limits<double>::quiet_NaN()), "null");
  EXPECT_EQ(json_number(std::numeric_limits<double>::infinity()), "null");
  for (double x : {3.141592653589793, 1e-300, -2.5e17, 0.1, 1.0 / 3.0})
    EXPECT_EQ(std::strtod(json_number(x).c_str(), nullptr), x);
}

TEST(JsonString, Escapes) {
  EXPECT_EQ(json_string("a\"b\\c"), R"("a\"b\\c")");
  EXPECT_EQ(json_string("line\nnext\t"), R"("line\nnext\t")");
  EXPECT_EQ(json_string(std::string("\x01", 1)), R"("\u0001")");
}

TEST(JsonObject, InsertionOrder) {
  JsonObject o;
  o.str("z", "x").num("a", 2.0).integer("n", -3).boolean("ok", true).null("none").raw("list", json_array({"1", "2"}));
  EXPECT_EQ(o.dump(), R"({"z":"x","a":2,"n":-3,"ok":true,"none":null,"list":[1,2]})");
  EXPECT_EQ(JsonObject().dump(), "{}");
}

TEST(Csv, QuotesWhenNeeded) {
  EXPECT_EQ(csv_field("plain"), "plain");
  EXPECT_EQ(csv_field("join(a,b)"), "\"join(a,b)\"");
  EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
  const Table t{{"graph", "x"}, {{"cart(a,b)", "1"}, {"k2", "2"}}};
  EXPECT_EQ(to_csv(t), "graph,x\n\"cart(a,b)\",1\nk2,2\n");
}

TEST(Plain, AlignsColumns) {
  const Table t{{"a", "long"}, {{"xyz", "1"}}};
  const std::string out = to_plain(t);
  EXPECT_NE(out.find("a    long"), std::string::npos);
  EXPECT_NE(out.find("xyz  1"), std::string::npos);
}

TEST(Verdict, JsonSchema) {
  PstVerdict v;
  v.found = true;
  v.a = {0};
  v.b = {4};
  v.t_star = 1.5;
  v.fidelity = 1.0;
  v.antipodal = false;
  const std::string j = verdict_json("icg:8:1,4", v, "cli");
  for (const char* key : {"\"graph\":", "\"a\":0", "\"b\":4", "\"tStar\":1.5", "\"fidelity\":1", "\"antipodal\":false",
                          "\"source\":\"cli\""})
    EXPECT_NE(j.find(key), std::string::npos) << key;
  v.found = false;
  EXPECT_NE(verdict_json("g", v, "s").find("\"tStar\":null"), std::string::npos);
  const Table t = verdict_table("g", {v}, "s");
  ASSERT_EQ(t.rows.size(), 1u);
  EXPECT_EQ(t.columns.size(), t.rows[0].size());
  EXPECT_EQ(t.columns[0], "graph");
}

TEST(Format, Parse) {
  EXPECT_EQ(parse_format("json"), OutputFormat::Json);
  EXPECT_EQ(parse_format("csv"), OutputFormat::Csv);
  EXPECT_EQ(parse_format("plain"), OutputFormat::Plain);
  EXPECT_FALSE(parse_format("xml").has_value());
  EXPECT_EQ(format_double(0.25), "0.25");
}
