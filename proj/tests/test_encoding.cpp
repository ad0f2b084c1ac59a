#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>

#include <doctest.h>

#include "aqpnn/encoding.hpp"

using namespace aqpnn;

namespace {

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string& name)
        : path(std::filesystem::temp_directory_path() / name) {}
    ~TempFile() { std::error_code ec; std::filesystem::remove(path, ec); }
};

} // namespace

TEST_CASE("encode_scalar") {
    CHECK(approx_eq(encode_scalar(0.1), {0.1, 0.9950}, 5e-5));
    CHECK(approx_eq(encode_scalar(0.0), {0, 1}, 0));
    CHECK(approx_eq(encode_scalar(1.0), {1, 0}, 0));
    CHECK_THROWS_AS(encode_scalar(1.5), OutOfRange);
    CHECK_THROWS_AS(encode_scalar(-1.0001), OutOfRange);

    std::mt19937 rng(3);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const Qubit q = encode_scalar(dist(rng));
        CHECK(std::abs(q.norm_sq() - 1.0) <= 1e-12);
    }
}

TEST_CASE("builtin datasets") {
    SUBCASE("xor") {
        const Dataset ds = builtin_dataset("xor");
        REQUIRE(ds.patterns.size() == 4);
        CHECK(ds.n() == 2);
        CHECK(approx_eq(ds.patterns[2].inputs[0], {1, 0}, 0));
        CHECK(approx_eq(ds.patterns[2].inputs[1], {0, 1}, 0));
        CHECK(approx_eq(ds.patterns[2].target, {0, 1}, 0));
    }
    SUBCASE("overlap") {
        const Dataset ds = builtin_dataset("overlap");
        REQUIRE(ds.patterns.size() == 15);
        CHECK(ds.n() == 2);
        CHECK(approx_eq(ds.patterns[0].inputs[0], {0.1, 0.9950}, 5e-5));
        CHECK(ds.label_for(ds.patterns[0].target) == "oval");
        CHECK(ds.label_for(ds.patterns[14].target) == "square");
        for (const auto& p : ds.patterns) {
            for (const auto& q : p.inputs) CHECK(q.is_normalized());
            CHECK(p.target.is_normalized());
        }
    }
    SUBCASE("not-gate") {
        const Dataset ds = builtin_dataset("not-gate");
        REQUIRE(ds.patterns.size() == 2);
        CHECK(approx_eq(ds.patterns[0].inputs[0], {1, 0}, 0));
        CHECK(approx_eq(ds.patterns[0].target, {0, 1}, 0));
    }
    SUBCASE("builtins are stable across calls") {
        const std::string a = dataset_to_json(builtin_dataset("overlap"));
        const std::string b = dataset_to_json(builtin_dataset("overlap"));
        CHECK(a == b);
    }
    SUBCASE("unknown name") {
        CHECK_THROWS_AS(builtin_dataset("nand"), UnknownDataset);
    }
}

TEST_CASE("csv round trip equals the builtin") {
    const Dataset builtin = builtin_dataset("overlap");
    TempFile tmp("aqpnn_overlap_roundtrip.csv");
    save_csv(builtin, tmp.path);
    const Dataset loaded = load_csv(tmp.path, 2, "label");
    REQUIRE(loaded.patterns.size() == builtin.patterns.size());
    for (std::size_t p = 0; p < builtin.patterns.size(); ++p) {
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(approx_eq(loaded.patterns[p].inputs[i], builtin.patterns[p].inputs[i], 1e-9));
        CHECK(approx_eq(loaded.patterns[p].target, builtin.patterns[p].target, 1e-9));
    }
    REQUIRE(loaded.class_labels.size() == 2);
    CHECK(loaded.class_labels[0].second == "oval");
    CHECK(loaded.class_labels[1].second == "square");
}

TEST_CASE("csv error paths") {
    SUBCASE("empty file") {
        TempFile tmp("aqpnn_empty.csv");
        std::ofstream(tmp.path).close();
        CHECK_THROWS_AS(load_csv(tmp.path, 2, "label"), ParseError);
    }
    SUBCASE("missing file") {
        CHECK_THROWS_AS(load_csv("/nonexistent/x.csv", 2, "label"), IOError);
    }
    SUBCASE("feature out of range") {
        TempFile tmp("aqpnn_oor.csv");
        std::ofstream(tmp.path) << "x1,x2,label\n1.5,0,a\n";
        CHECK_THROWS_AS(load_csv(tmp.path, 2, "label"), OutOfRange);
    }
    SUBCASE("non-numeric feature names row and column") {
        TempFile tmp("aqpnn_junk.csv");
        std::ofstream(tmp.path) << "x1,x2,label\n0.1,zebra,a\n";
        try {
            load_csv(tmp.path, 2, "label");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            const std::string msg = e.what();
            CHECK(msg.find("row 2") != std::string::npos);
            CHECK(msg.find("x2") != std::string::npos);
        }
    }
    SUBCASE("three classes") {
        TempFile tmp("aqpnn_3cls.csv");
        std::ofstream(tmp.path) << "x1,x2,label\n0,0,a\n0.1,0,b\n0.2,0,c\n";
        CHECK_THROWS_AS(load_csv(tmp.path, 2, "label"), TooManyClasses);
    }
    SUBCASE("wrong feature count") {
        TempFile tmp("aqpnn_cols.csv");
        std::ofstream(tmp.path) << "x1,label\n0,a\n";
        CHECK_THROWS_AS(load_csv(tmp.path, 2, "label"), ParseError);
    }
}

TEST_CASE("dataset json export shape") {
    const std::string j = dataset_to_json(builtin_dataset("xor"));
    CHECK(j.find("\"name\": \"xor\"") != std::string::npos);
    CHECK(j.find("\"n\": 2") != std::string::npos);
    CHECK(j.find("\"patterns\"") != std::string::npos);
}
