#include <gtest/gtest.h>

#include <sstream>

#include "contact_tori/cli.hpp"

using namespace contact_tori;

namespace {

struct Run {
  int code;
  std::string out, err;
  json value() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(CONTACT_TORI_SAMPLES) + "/" + name; }

}  // namespace

TEST(Cli, LinkH0) {
  auto r = run({"link", "h0", "--w", "1,1,1", "--d", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
  r = run({"--format", "json", "link", "h0", "--w", "6,10,15,15,15", "--d", "30"});
  EXPECT_EQ(r.value()["h0"], 8);
}

TEST(Cli, LinkFamily) {
  auto r = run({"link", "brieskorn", "--exponents", "5,3,2,2,2"});
  EXPECT_EQ(r.value()["degree"], 30);
  EXPECT_EQ(r.value()["weights"], json({6, 10, 15, 15, 15}));
  r = run({"link", "moduli", "--w", "6,10,15,15,15", "--d", "30", "--dim-aut", "3"});
  EXPECT_EQ(r.out, "0\n");
  r = run({"link", "dimj", "--w", "6,22,33,33,33", "--d", "66"});
  EXPECT_EQ(r.out, "3\n");
  r = run({"link", "sylvester", "--len", "7"});
  EXPECT_EQ(r.out, "2,3,7,43,1807,3263443,10650056950807\n");
  r = run({"link", "hypothesis", "--w", "6,10,15,15,15", "--d", "30"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, BundleGysin) {
  auto r = run({"bundle", "gysin", "--base", "1,7,15,7,1", "--ranks", "1,7", "--duality"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1,0,6,0,8,8,0,6,0,1\n");
  r = run({"bundle", "ranks", "--base", "1,7,15,7,1", "--prefix", "1,7,5"});
  EXPECT_EQ(r.code, 2);
  r = run({"bundle", "c1", "--class", "5,2,2,2,2,2,2", "--omega", "9,2,2,4,4,6,6"});
  EXPECT_EQ(r.value()["representative"], json({-4, 0, 0, -2, -2, -4, -4}));
  EXPECT_EQ(r.value()["zero"], false);
  EXPECT_EQ(r.value()["even"], true);
}

TEST(Cli, Cone) {
  auto r = run({"cone", "invariants", sample("sphere_join_2_3.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.value()["pi1"], "trivial");
  EXPECT_EQ(r.value()["pi2_rank"], 1);
  r = run({"cone", "invariants", sample("lens_3.json")});
  EXPECT_EQ(r.value()["pi1_order"], 3);
  r = run({"cone", "check", sample("bad_face.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.value()["good"], false);
  r = run({"cone", "equiv", sample("sphere_join_2_3.json"), sample("sphere_join_3_2.json"), "--witness"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.value().contains("witness"));
  r = run({"cone", "equiv", sample("sphere_join_7_2.json"), sample("sphere_join_5_2.json")});
  EXPECT_EQ(r.code, 1);
  r = run({"cone", "slice", sample("orthant_3.json"), "--xi", "1,1,1"});
  EXPECT_EQ(r.value()["vertices"].size(), 3u);
  r = run({"cone", "dual", sample("orthant_3.json")});
  EXPECT_EQ(r.value()["facet_normals"].size(), 3u);
  r = run({"cone", "from-polytope", sample("rectangle_2_3.json")});
  EXPECT_EQ(r.value(), json::parse(R"({"ambient_rank":3,"facet_normals":[[1,0,0],[-1,0,2],[0,1,0],[0,-1,3]],
                                       "smooth":true,"non_primitive":[]})"));
  r = run({"cone", "from-polytope", sample("triangle_labelled.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.value()["smooth"], false);
}

TEST(Cli, JoinAndPolygon) {
  auto r = run({"join", "cone", "--k1", "2", "--k2", "3"});
  EXPECT_EQ(r.value(), read_json_file(sample("sphere_join_2_3.json")));
  r = run({"join", "family", "--type", "D", "--params", "7,2"});
  EXPECT_EQ(r.value()["bouquet_size"], 4);
  r = run({"join", "family", "--type", "tilde", "--params", "5,3"});
  EXPECT_EQ(r.value()["manifold"], "X_infinity");
  EXPECT_EQ(run({"join", "smooth", "--k1", "2", "--k2", "2"}).code, 1);
  EXPECT_EQ(run({"join", "bound", "--n1", "2", "--n2", "3"}).out, "6\n");
  EXPECT_EQ(run({"join", "cone", "--k1", "2", "--k2", "4"}).code, 2);
  r = run({"polygon", "check", "--alpha", "1,1,2,2,3,3,3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.value()["dimension"], 8);
  EXPECT_EQ(run({"polygon", "check", "--alpha", "1,1,2"}).code, 1);
  EXPECT_EQ(run({"polygon", "tower", "--m", "21"}).code, 3);
  EXPECT_EQ(run({"polygon", "dim", "--m", "7"}).out, "8\n");
}

TEST(Cli, CheckStructure) {
  auto r = run({"check", "structure", "--id", "t3", "--k", "2", "--samples", "50"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.value()["all_pass"], true);
  r = run({"check", "structure", "--id", "unit_sphere_bundle", "--n", "2", "--samples", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"check", "structure", "--id", "nope"}).code, 2);
}

TEST(Cli, Census) {
  auto r = run({"census", "check"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.value()["all_consistent"], true);
  r = run({"--format", "table", "census", "list"});
  EXPECT_NE(r.out.find("M9"), std::string::npos);
  EXPECT_EQ(run({"census", "list", "--file", "/nonexistent.json"}).code, 2);
}

TEST(Cli, FormatAnywhere) {
  EXPECT_EQ(run({"link", "h0", "--format", "json", "--w", "1,1,1", "--d", "2"}).value()["h0"], 6);
  const auto r = run({"census", "check", "--format", "table"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("M9  consistent"), std::string::npos);
}

TEST(Cli, Errors) {
  auto r = run({});
  EXPECT_EQ(r.code, 2);
  r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("usage"), std::string::npos);
  EXPECT_EQ(run({"link", "h0", "--w", "1,x", "--d", "2"}).code, 2);
  EXPECT_EQ(run({"cone", "check", sample("missing.json")}).code, 2);
  r = run({"cone", "check", sample("half_space.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("lineality"), std::string::npos);
  EXPECT_EQ(run({"--format", "xml", "link", "h0", "--w", "1", "--d", "1"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"check", "structure", "--id", "overtwisted_s3", "--k", "1", "--samples", "30"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> c{"cone", "dual", sample("sphere_join_7_2.json")};
  EXPECT_EQ(run(c).out, run(c).out);
}
