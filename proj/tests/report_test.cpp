#include <gtest/gtest.h>

#include <string>

#include "hdgap/commands.hpp"

using hdgap::CommandOptions;
using hdgap::Format;
using hdgap::IntRange;

namespace {

CommandOptions verify_all(IntRange ranks, IntRange ks) {
  CommandOptions o;
  o.all = true;
  o.ranks = ranks;
  o.ks = ks;
  o.fit_ranks = IntRange{2, 20};
  o.fit_ks = IntRange{1, 6};
  return o;
}

}  // namespace

TEST(Report, VerifyIsDeterministic) {
  const auto a = hdgap::run_verify(verify_all({2, 25}, {1, 4}));
  const auto b = hdgap::run_verify(verify_all({2, 25}, {1, 4}));
  for (Format f : {Format::Json, Format::Csv, Format::Markdown}) EXPECT_EQ(hdgap::render(a.doc, f), hdgap::render(b.doc, f));
  EXPECT_EQ(a.exit_code, 0);
}

TEST(Report, JsonRoundTripIsIdentity) {
  const auto res = hdgap::run_verify(verify_all({2, 12}, {1, 3}));
  const std::string text = hdgap::render(res.doc, Format::Json);
  EXPECT_EQ(hdgap::render(hdgap::parse_json_report(text), Format::Json), text);

  CommandOptions o;
  o.ranks = IntRange{2, 5};
  const std::string bounds = hdgap::render(hdgap::run_bounds(o).doc, Format::Json);
  EXPECT_EQ(hdgap::render(hdgap::parse_json_report(bounds), Format::Json), bounds);
}

TEST(Report, RationalsAreExactStrings) {
  CommandOptions o;
  o.family = "SpR";
  o.ranks = IntRange{2, 2};
  const auto doc = hdgap::run_bounds(o).doc;
  ASSERT_EQ(doc.rows.size(), 1u);
  EXPECT_EQ(doc.rows[0]["k_closed"], "19/3");
  EXPECT_EQ(doc.rows[0]["k_direct"], 6);
  EXPECT_EQ(doc.rows[0]["theta_pairing"], "4");
  EXPECT_FALSE(doc.rows[0].contains("k_closed_approx"));
  o.decimal = true;
  const auto dec = hdgap::run_bounds(o).doc;
  EXPECT_NEAR(dec.rows[0]["k_closed_approx"].get<double>(), 19.0 / 3.0, 1e-12);
}

TEST(Report, CsvAndMarkdownCarryTheJsonValues) {
  CommandOptions o;
  o.ranks = IntRange{2, 4};
  o.ks = IntRange{1, 2};
  const auto doc = hdgap::run_bounds(o).doc;
  const std::string csv = hdgap::render(doc, Format::Csv);
  const std::string md = hdgap::render(doc, Format::Markdown);
  for (const auto& row : doc.rows) {
    for (const char* key : {"group", "theta_pairing", "ell", "k_closed", "margin", "hd_strict_upper"}) {
      const std::string v = row[key].get<std::string>();
      EXPECT_NE(csv.find(v), std::string::npos) << key << "=" << v;
      EXPECT_NE(md.find(v), std::string::npos) << key << "=" << v;
    }
  }
}

TEST(Report, CanonicalRowOrder) {
  CommandOptions o;
  o.ranks = IntRange{2, 5};
  o.ks = IntRange{1, 3};
  const auto doc = hdgap::run_bounds(o).doc;
  std::vector<std::string> seen_families;
  for (const auto& row : doc.rows) {
    const std::string f = row["family"];
    if (seen_families.empty() || seen_families.back() != f) seen_families.push_back(f);
  }
  std::vector<std::string> expected;
  for (auto id : hdgap::kAllFamilies) expected.emplace_back(hdgap::family_info(id).key);
  EXPECT_EQ(seen_families, expected);
}

TEST(Commands, TableExamples) {
  CommandOptions o;
  o.family = "B";
  o.ranks = IntRange{3, 3};
  const auto root = hdgap::run_table_root_data(o).doc;
  ASSERT_EQ(root.rows.size(), 1u);
  EXPECT_EQ(root.rows[0]["two_rho_expr"], "5e1 + 3e2 + e3");

  o.family = "SpC";
  const auto b = hdgap::run_bounds(o, "table bounds").doc;
  EXPECT_EQ(b.rows[0]["theta_pairing"], "21");
  EXPECT_EQ(b.rows[0]["ell"], "22");

  o.family = "SLR";
  o.ranks = IntRange{2, 2};
  EXPECT_EQ(hdgap::run_bounds(o).doc.rows[0]["k_closed"], "11/2");
}

TEST(Commands, OracleExamples) {
  CommandOptions o;
  o.family = "B";
  o.ranks = IntRange{3, 3};
  auto res = hdgap::run_oracle(o);
  EXPECT_EQ(res.exit_code, 0);
  EXPECT_EQ(res.doc.sections[0].second[0]["dominant"], "e1 + 1/2e2");

  o.family = "C";
  o.ranks = IntRange{2, 2};
  res = hdgap::run_oracle(o);
  EXPECT_EQ(res.doc.sections[0].second[0]["dominant"], "e1 + e2");

  o.family = "A";
  o.ranks = IntRange{1, 1};
  res = hdgap::run_oracle(o);
  EXPECT_EQ(res.doc.sections[0].second[0]["dominant"], "1/2e1 - 1/2e2");

  o.family = "B";
  o.ranks = IntRange{7, 7};
  try {
    (void)hdgap::run_oracle(o);
    FAIL();
  } catch (const hdgap::Error& e) {
    EXPECT_EQ(e.kind(), hdgap::ErrorKind::SearchCap);
    EXPECT_EQ(hdgap::exit_code_for(e.kind()), 2);
  }
}

TEST(Commands, ListHasCatalogAndStubs) {
  const auto doc = hdgap::run_list({}).doc;
  EXPECT_EQ(doc.rows.size(), 13u);
  bool so_star = false, so_rs = false;
  for (const auto& row : doc.rows) {
    if (row["family"] == "SOstar_4r") so_star = row["c"] == "1/4";
    if (row["family"] == "SO_rk") so_rs = row["c"] == "3/16";
  }
  EXPECT_TRUE(so_star);
  EXPECT_TRUE(so_rs);
  const auto& stubs = doc.sections[0].second;
  EXPECT_EQ(stubs.size(), 4u);
  for (const auto& s : stubs) EXPECT_EQ(s["status"], "rank-trivial (r <= 8)");
}

TEST(Commands, VerifyRequiresExactlyOneScope) {
  CommandOptions o;
  EXPECT_THROW((void)hdgap::run_verify(o), hdgap::Error);
  o.all = true;
  o.family = "A";
  EXPECT_THROW((void)hdgap::run_verify(o), hdgap::Error);
}

TEST(Commands, RangeParsing) {
  EXPECT_EQ(hdgap::parse_range("2..40"), (IntRange{2, 40}));
  EXPECT_EQ(hdgap::parse_range("7"), (IntRange{7, 7}));
  EXPECT_THROW((void)hdgap::parse_range("5..2"), hdgap::Error);
  EXPECT_THROW((void)hdgap::parse_range("a..b"), hdgap::Error);
}
