#include <doctest.h>

#include <algorithm>
#include <filesystem>

#include "archrec/rsf.hpp"
#include "archrec/tokenize.hpp"

using namespace archrec;

TEST_CASE("porter stems the classic families") {
    CHECK(porter_stem("caresses") == "caress");
    CHECK(porter_stem("ponies") == "poni");
    CHECK(porter_stem("relational") == "relat");
    CHECK(porter_stem("conditional") == "condit");
    CHECK(porter_stem("triplicate") == "triplic");
    CHECK(porter_stem("hopeful") == "hope");
    CHECK(porter_stem("goodness") == "good");
    CHECK(porter_stem("generalization") == "gener");
    CHECK(porter_stem("controll") == "control");
    CHECK(porter_stem("probate") == "probat");
    CHECK(porter_stem("cease") == "ceas");
}

TEST_CASE("porter reproduces the license-vocabulary stems") {
    CHECK(porter_stem("apache") == "apach");
    CHECK(porter_stem("software") == "softwar");
    CHECK(porter_stem("notice") == "notic");
    CHECK(porter_stem("foundation") == "foundat");
    CHECK(porter_stem("agree") == "agre");
    CHECK(porter_stem("permissions") == "permiss");
    CHECK(porter_stem("compliance") == "complianc");
    CHECK(porter_stem("expressed") == "express");
    CHECK(porter_stem("specific") == "specif");
    CHECK(porter_stem("configuration") == "configur");
    CHECK(porter_stem("contributor") == "contributor");
}

TEST_CASE("porter leaves one- and two-letter words alone") {
    CHECK(porter_stem("is") == "is");
    CHECK(porter_stem("as") == "as");
    CHECK(porter_stem("a") == "a");
}

TEST_CASE("split_words honors camel case and drops noise") {
    CHECK(split_words("parseExpression") ==
          std::vector<std::string>{"parse", "expression"});
    CHECK(split_words("XMLHttpRequest") ==
          std::vector<std::string>{"xml", "http", "request"});
    CHECK(split_words("a1 b2c3 42 x") == std::vector<std::string>{"a1", "b2c3"});
    CHECK(split_words("tree_node-count") ==
          std::vector<std::string>{"tree", "node", "count"});
    CHECK(split_words("HTML") == std::vector<std::string>{"html"});
}

TEST_CASE("comment stripping respects string literals") {
    std::string code =
        "int a; // trailing\n"
        "char* s = \"no // comment /* here */\";\n"
        "/* block\n spans */ int b;\n"
        "char c = '\\''; // after escape\n";
    std::string stripped = strip_code_comments(code);
    CHECK(stripped.find("trailing") == std::string::npos);
    CHECK(stripped.find("spans") == std::string::npos);
    CHECK(stripped.find("no // comment /* here */") != std::string::npos);
    CHECK(stripped.find("int a;") != std::string::npos);
    CHECK(stripped.find("int b;") != std::string::npos);
    // newlines survive so line numbers stay meaningful
    CHECK(std::count(stripped.begin(), stripped.end(), '\n') ==
          std::count(code.begin(), code.end(), '\n'));
}

TEST_CASE("license headers are dropped only on strong evidence") {
    std::string header =
        "/*\n"
        " * Licensed to the Apache Software Foundation (ASF) under one\n"
        " * or more contributor license agreements.\n"
        " */\n";
    std::string body = "package p;\nclass A {}\n";
    CHECK(strip_license_header_block(header + body).find("Apache") ==
          std::string::npos);
    CHECK(strip_license_header_block(header + body).find("class A") !=
          std::string::npos);

    std::string ordinary = "/* utility helpers for tree walking */\n" + body;
    CHECK(strip_license_header_block(ordinary) == ordinary);

    // comments after code never count as a header
    std::string trailing = body + header;
    CHECK(strip_license_header_block(trailing) == trailing);
}

TEST_CASE("tokenize pipeline applies stops before stemming") {
    StopWordSet stops;
    stops.general = {"the", "of", "licensed"};
    TokenizeOptions options;
    options.stem = true;
    auto bag = tokenize_document("the Licensed parsing of trees", stops, options);
    CHECK(bag.count("licens") == 0);  // removed pre-stem
    CHECK(bag.at("pars") == 1);
    CHECK(bag.at("tree") == 1);
    CHECK(bag.count("the") == 0);
}

TEST_CASE("tokenize honors comment and header switches") {
    std::string text =
        "/*\n * Licensed to the Apache Software Foundation under one or more\n"
        " * contributor license agreements. See the NOTICE file.\n */\n"
        "// helper for parsing\n"
        "class Parser {}\n";
    StopWordSet stops;
    TokenizeOptions keep_all;
    keep_all.stem = false;
    auto full = tokenize_document(text, stops, keep_all);
    CHECK(full.count("apache") == 1);
    CHECK(full.count("helper") == 1);

    TokenizeOptions no_header = keep_all;
    no_header.strip_license_header = true;
    auto trimmed = tokenize_document(text, stops, no_header);
    CHECK(trimmed.count("apache") == 0);
    CHECK(trimmed.count("helper") == 1);

    TokenizeOptions no_comments = keep_all;
    no_comments.strip_comments = true;
    auto bare = tokenize_document(text, stops, no_comments);
    CHECK(bare.count("apache") == 0);
    CHECK(bare.count("helper") == 0);
    CHECK(bare.count("parser") == 1);
}

TEST_CASE("stopword sets merge general, domain, and name tokens") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "archrec-stops-test";
    fs::create_directories(dir);
    write_text_file((dir / "domain.txt").string(),
                    "# domain nouns\nwidget\n  gadget  \n\n");
    StopWordSet stops = build_stopword_set(default_general_stopwords(),
                                           (dir / "domain.txt").string(), "MyTool");
    CHECK(stops.contains("the"));
    CHECK(stops.contains("widget"));
    CHECK(stops.contains("gadget"));
    CHECK(stops.auto_tokens.count("my") == 1);
    CHECK(stops.auto_tokens.count("tool") == 1);
    CHECK_FALSE(stops.contains("parser"));
    fs::remove_all(dir);

    CHECK_THROWS_AS(build_stopword_set({}), Error);
    CHECK_THROWS_AS(build_stopword_set(default_general_stopwords(),
                                       "/nonexistent/stops.txt"),
                    Error);
}

TEST_CASE("the license lexicon covers raw words and their stems") {
    const auto& lex = license_lexicon();
    CHECK(lex.count("license"));
    CHECK(lex.count("licens"));
    CHECK(lex.count("apache"));
    CHECK(lex.count("apach"));
    CHECK(lex.count("softwar"));
    CHECK(lex.count("foundat"));
}
