#include "fixtures.hpp"

#include <gtest/gtest.h>

using namespace srank;
using io::json;

TEST(Io, Fields) {
    EXPECT_EQ(io::parse_field_string("rationals").kind, FieldSpec::Kind::Rationals);
    EXPECT_EQ(io::parse_field_string("splitting").kind, FieldSpec::Kind::SplittingField);
    auto f = io::parse_field_string("fixed:8:1,3");
    EXPECT_EQ(f.modulus, 8u);
    EXPECT_EQ(f.exponents, (std::vector<std::size_t>{1, 3}));
    EXPECT_THROW(io::parse_field_string("reals"), ParseError);
    EXPECT_THROW(io::parse_field_string("fixed:8"), ParseError);
    EXPECT_THROW(io::parse_field_string("fixed:8:1,x"), ParseError);
    auto g = io::read_field(json::parse(R"({"type": {"modulus": 4, "exponents": [1, 3]}})"));
    EXPECT_EQ(g.kind, FieldSpec::Kind::FixedField);
    EXPECT_EQ(io::read_field(json::parse(R"({"type": "splitting"})")).kind, FieldSpec::Kind::SplittingField);
    EXPECT_THROW(io::read_field(json::parse(R"({"type": "complex"})")), ParseError);
}

TEST(Io, Module) {
    auto j = json::parse(R"({"group": {"degree": 2, "generators": [[2, 1]]},
                             "dimension": 2, "action": [[["0", 1], ["1", "0"]]]})");
    auto r = io::read_module(j);
    EXPECT_EQ(r.dimension(), 2u);
    EXPECT_TRUE(validate(r).ok);
    EXPECT_EQ(special_rank(r).rank, 1u);
}

TEST(Io, ModuleErrors) {
    EXPECT_THROW(io::parse_json_text("{not json"), ParseError);
    EXPECT_THROW(io::read_module(json::parse(R"({"dimension": 1, "action": []})")), ParseError);
    EXPECT_THROW(io::read_module(json::parse(R"({"group": {"degree": 2, "generators": [[2, 1]]},
                                                 "dimension": 2, "action": [[["0", "1"]]]})")),
                 ValidationError);
    EXPECT_THROW(io::read_module(json::parse(R"({"group": {"degree": 2, "generators": [[2, 1]]},
                                                 "dimension": 1, "action": [[["1.5"]]]})")),
                 ParseError);
    EXPECT_THROW(io::read_group(json::parse(R"({"degree": 2, "generators": [[1, 1]]})")), ValidationError);
    EXPECT_THROW(io::read_lattice(json::parse(R"({"group": {"degree": 2, "generators": [[2, 1]]},
                                                  "dimension": 1, "action": [[["1/2"]]]})")),
                 ParseError);
}

TEST(Io, DxModule) {
    auto m = io::read_dx_module(io::read_json_file(std::string(SRANK_CATALOG_DIR) + "/../data/theorem3_example.json"));
    EXPECT_TRUE(validate_dx(m).ok);
    EXPECT_EQ(special_rank_dedekind(m).rank, 2u);
}

TEST(Io, OutputIsDeterministic) {
    auto a = io::to_json(isotypic_decomposition(fixture::rep("A4", "regular"))).dump();
    auto b = io::to_json(isotypic_decomposition(fixture::rep("A4", "regular"))).dump();
    EXPECT_EQ(a, b);
    EXPECT_EQ(io::to_json(make_rational(-3, 6)), json("-1/2"));
}

TEST(Catalog, Entries) {
    auto s3 = load_catalog("S3");
    EXPECT_EQ(s3.group->order(), 6u);
    for (const char *n : {"regular", "permutation", "trivial", "sign", "standard"})
        EXPECT_NO_THROW(s3.representation(n)) << n;
    auto q8 = load_catalog("Q8");
    EXPECT_EQ(q8.group->order(), 8u);
    EXPECT_EQ(q8.representation("regular").dimension(), 8u);
    EXPECT_EQ(catalog_names(), (std::vector<std::string>{"A4", "C2", "C4", "D4", "Q8", "S3"}));
    try {
        load_catalog("S4");
        FAIL() << "expected an error";
    } catch (const ValidationError &e) {
        EXPECT_NE(std::string(e.what()).find("A4, C2, C4, D4, Q8, S3"), std::string::npos);
    }
    EXPECT_THROW(s3.representation("nope"), ValidationError);
}
