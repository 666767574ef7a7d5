#include <gtest/gtest.h>

#include <string>

#include "hopfint/io.hpp"
#include "test_util.hpp"

using namespace hopfint;
using hopfint::test_support::data_file;

namespace {

json load(const std::string& name) { return load_json_file(data_file(name)); }

}  // namespace

TEST(Io, RMatrixRoundTrip) {
  for (const char* f : {"manin_q3.json", "flip2.json", "superflip11.json", "identity_q3.json"}) {
    const json j = load(f);
    const auto h = rmatrix_from_json(j);
    EXPECT_EQ(to_json(h), j) << f;
    EXPECT_EQ(rmatrix_from_json(to_json(h)), h) << f;
  }
  EXPECT_EQ(rmatrix_from_json(load("manin_q3.json")), manin_standard(3));
}

TEST(Io, RMatrixCanonicalisesEntries) {
  // unsorted, non-reduced, integer-valued and duplicated entries
  const json messy = json::parse(R"({"dim": 1, "q": "6/2", "entries": [[0, 0, "2/4"], [0, 0, 1]]})");
  const auto h = rmatrix_from_json(messy);
  EXPECT_EQ(h.q, 3);
  EXPECT_EQ(to_json(h), json::parse(R"({"dim": 1, "q": "3/1", "entries": [[0, 0, "3/2"]]})"));
}

TEST(Io, HopfRoundTrip) {
  for (const char* f : {"kc2.json", "kc3.json", "kc4.json", "sweedler4.json", "sweedler4_bad_antipode.json"}) {
    const json j = load(f);
    const auto h = hopf_from_json(j);
    EXPECT_EQ(to_json(h), j) << f;
    EXPECT_EQ(hopf_from_json(to_json(h)), h) << f;
  }
}

TEST(Io, ComoduleRoundTrip) {
  const std::pair<const char*, std::size_t> files[] = {{"kc2_trivial.json", 2},         {"kc2_character.json", 2},
                                                       {"kc2_regular.json", 2},         {"sweedler4_trivial.json", 4},
                                                       {"sweedler4_character_g.json", 4}, {"sweedler4_regular.json", 4}};
  for (const auto& [f, n] : files) {
    const json j = load(f);
    const auto m = comodule_from_json(j, n);
    EXPECT_EQ(to_json(m), j) << f;
    EXPECT_EQ(comodule_from_json(to_json(m), n), m) << f;
  }
}

TEST(Io, RejectsMalformedRMatrix) {
  const char* bad[] = {
      R"([])",
      R"({"q": "1", "entries": []})",
      R"({"dim": 0, "q": "1", "entries": []})",
      R"({"dim": 2, "entries": []})",
      R"({"dim": 2, "q": 1.5, "entries": []})",
      R"({"dim": 2, "q": "1/0", "entries": []})",
      R"({"dim": 2, "q": "1", "entries": [[4, 0, "1"]]})",
      R"({"dim": 2, "q": "1", "entries": [[-1, 0, "1"]]})",
      R"({"dim": 2, "q": "1", "entries": [[0, 0]]})",
      R"({"dim": 2, "q": "1", "entries": [[0, 0, 0.5]]})",
      R"({"dim": 2, "q": "1", "entries": {}})",
  };
  for (const char* text : bad) EXPECT_THROW(rmatrix_from_json(json::parse(text)), ParseError) << text;
}

TEST(Io, RejectsMalformedHopf) {
  json j = load("kc2.json");
  j.erase("unit");
  EXPECT_THROW(hopf_from_json(j), ParseError);
  j = load("kc2.json");
  j["counit"] = json::array({"1/1"});
  EXPECT_THROW(hopf_from_json(j), ParseError);
  j = load("kc2.json");
  j["mult"].push_back({0, 0, 2, "1/1"});
  EXPECT_THROW(hopf_from_json(j), ParseError);
  j = load("kc2.json");
  j["basis"] = json::array({1, 2});
  EXPECT_THROW(hopf_from_json(j), ParseError);
  j = load("kc2.json");
  j["antipode"].erase(0);
  EXPECT_THROW(hopf_from_json(j), ParseError);
}

TEST(Io, RejectsMalformedComodule) {
  json j = load("kc2_regular.json");
  EXPECT_THROW(comodule_from_json(j, 1), ParseError);  // h index out of range
  j["coaction"].erase(0);
  EXPECT_THROW(comodule_from_json(j, 2), ParseError);
  EXPECT_THROW(comodule_from_json(json::parse(R"({"dim": 1, "coaction": [[[0, 0]]]})"), 2), ParseError);
}

TEST(Io, MissingFileAndBadSyntax) {
  EXPECT_THROW(load_json_file("/nonexistent/file.json"), ParseError);
  const std::string path = ::testing::TempDir() + "hopfint_bad.json";
  {
    std::ofstream out(path);
    out << "{ \"dim\": 2, ";
  }
  EXPECT_THROW(load_json_file(path), ParseError);
}
