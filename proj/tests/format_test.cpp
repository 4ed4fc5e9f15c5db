#include "merchant/format.hpp"

#include <gtest/gtest.h>

#include <charconv>
#include <random>
#include <string>

namespace merchant::io {
namespace {

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.75), "0.75");
  EXPECT_EQ(format_double(12.0), "12");
  EXPECT_EQ(format_double(0.1), "0.1");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(-1e6, 1e6);
  for (int i = 0; i < 2000; ++i) {
    const double v = dist(rng);
    const std::string text = format_double(v);
    double back = 0;
    std::from_chars(text.data(), text.data() + text.size(), back);
    EXPECT_EQ(back, v) << text;
  }
}

TEST(Csv, QuotesOnlyWhenNeeded) {
  CsvTable t{{"a", "b"}, {{"1", "x,y"}, {"say \"hi\"", "line\nbreak"}}};
  EXPECT_EQ(write_csv(t), "a,b\n1,\"x,y\"\n\"say \"\"hi\"\"\",\"line\nbreak\"\n");
}

TEST(Csv, ParseInvertsWrite) {
  CsvTable t{{"r", "q"}, {{"3/16", "0.7868852459016393"}, {"", "\"\r\n,"}}};
  const CsvTable back = parse_csv(write_csv(t));
  EXPECT_EQ(back.header, t.header);
  EXPECT_EQ(back.rows, t.rows);
}

// parse then write is byte-identical for anything write_csv produced.
TEST(Csv, ByteIdenticalRoundTrip) {
  std::mt19937_64 rng(11);
  const std::string alphabet = "ab1/.,\"\n\r -";
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> len(0, 6);
  for (int i = 0; i < 500; ++i) {
    CsvTable t;
    const int cols = std::uniform_int_distribution<int>(1, 4)(rng);
    auto field = [&] {
      std::string f;
      for (int k = len(rng); k > 0; --k) f += alphabet[pick(rng)];
      return f;
    };
    for (int c = 0; c < cols; ++c) t.header.push_back("h" + field());
    for (int r = std::uniform_int_distribution<int>(0, 4)(rng); r > 0; --r) {
      std::vector<std::string> row;
      for (int c = 0; c < cols; ++c) row.push_back(field());
      t.rows.push_back(row);
    }
    const std::string text = write_csv(t);
    EXPECT_EQ(write_csv(parse_csv(text)), text);
  }
}

TEST(Csv, RejectsMalformed) {
  EXPECT_ANY_THROW(parse_csv("a,b\n\"open,1\n"));
  EXPECT_ANY_THROW(parse_csv("a,b\n\"x\"y,1\n"));
}

TEST(Markdown, PipeTable) {
  EXPECT_EQ(write_markdown({"c", "1"}, {{"0", "**3**"}}), "| c | 1 |\n|---|---|\n| 0 | **3** |\n");
}

}  // namespace
}  // namespace merchant::io
