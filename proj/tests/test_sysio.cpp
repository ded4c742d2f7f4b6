#include <gtest/gtest.h>

#include <filesystem>

#include "invsub/sysio.hpp"

using namespace invsub;

TEST(SysIo, RoundTrip) {
    const System s = System::jordan_block(PrimeField(3), 3, 3, 1, 2);
    const std::string text = system_to_json(s);
    EXPECT_EQ(text,
              "{\"T\":[[0,1,0],[0,0,1],[0,0,0]],\"U1\":[[1,0,0]],\"U2\":[[1,0,0],[0,1,0]],\"dim\":3,\"field\":3,"
              "\"n\":3}\n");
    EXPECT_EQ(parse_system(text), s);
}

TEST(SysIo, KeepsRowsAsWritten) {
    const System s = parse_system(R"({"field": 2, "n": 1, "dim": 2, "T": [[0,0],[0,0]],
                                      "U1": [[1,0],[1,0]], "U2": [[1,0],[0,1]]})");
    EXPECT_EQ(s.u1().rows(), 2u);
    EXPECT_EQ(validate(s), std::vector<std::string>{"U1 rows dependent"});
}

TEST(SysIo, ZeroDimensional) {
    const System s = parse_system(R"({"field": 5, "n": 2, "dim": 0, "T": [], "U1": [], "U2": []})");
    EXPECT_EQ(s.dim(), 0u);
    EXPECT_TRUE(s.valid());
}

TEST(SysIo, MalformedInput) {
    const char* bad[] = {
        "not json",
        "[1, 2]",
        R"({"n": 1, "dim": 1, "T": [[0]], "U1": [], "U2": []})",
        R"({"field": 4, "n": 1, "dim": 1, "T": [[0]], "U1": [], "U2": []})",
        R"({"field": 2, "n": -1, "dim": 1, "T": [[0]], "U1": [], "U2": []})",
        R"({"field": 2, "n": 1, "dim": 2, "T": [[0, 0]], "U1": [], "U2": []})",
        R"({"field": 2, "n": 1, "dim": 1, "T": [[2]], "U1": [], "U2": []})",
        R"({"field": 2, "n": 1, "dim": 1, "T": [[0]], "U1": [[0, 1]], "U2": []})",
        R"({"field": 2, "n": 1, "dim": 1, "T": [[0.5]], "U1": [], "U2": []})",
        R"({"field": 2, "n": 1, "dim": 1, "T": [[0]], "U1": {}, "U2": []})",
        R"({"field": 2147483659, "n": 1, "dim": 1, "T": [[0]], "U1": [], "U2": []})",
    };
    for (const char* text : bad) EXPECT_THROW(parse_system(text), FormatError) << text;
}

TEST(SysIo, Files) {
    const auto dir = std::filesystem::temp_directory_path() / "invsub_sysio_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "s.json").string();
    const System s = System::jordan_block(PrimeField(2), 2, 2, 0, 1);
    save_system(s, path);
    EXPECT_EQ(load_system(path), s);
    EXPECT_THROW(load_system((dir / "missing.json").string()), FormatError);
    EXPECT_THROW(save_system(s, (dir / "no/such/dir/x.json").string()), FormatError);
    std::filesystem::remove_all(dir);
}
