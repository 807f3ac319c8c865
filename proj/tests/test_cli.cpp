#include <doctest.h>

#include "treekit/cli.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef TEST_DATA_DIR
#define TEST_DATA_DIR "."
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = treekit::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("treekit_test_" + name);
}

std::string students_path() { return std::string(TEST_DATA_DIR) + "/students.arff"; }

} // namespace

TEST_CASE("compare produces the pinned summary for the embedded dataset") {
    const RunResult r = run_cli({"compare", "@embedded", "--format", "csv"});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 4);
    CHECK(lines[0] == "algorithm,correct_pct,incorrect_pct,unclassified_pct,build_time_s,k,seed");

    struct Expect {
        const char* algorithm, *correct, *incorrect, *unclassified;
    };
    const Expect expect[] = {
        {"id3", "45.83333333333333", "37.5", "16.666666666666664"},
        {"c45", "41.66666666666667", "43.75", "14.583333333333334"},
        {"cart", "60.416666666666664", "39.58333333333333", "0"},
    };
    for (int i = 0; i < 3; ++i) {
        const std::vector<std::string> f = split_csv(lines[i + 1]);
        REQUIRE(f.size() == 7);
        CHECK(f[0] == expect[i].algorithm);
        CHECK(f[1] == expect[i].correct);
        CHECK(f[2] == expect[i].incorrect);
        CHECK(f[3] == expect[i].unclassified);
        // build time is wall clock; only its format is stable
        CHECK(f[4].find('.') != std::string::npos);
        CHECK(f[4].size() - f[4].find('.') == 4); // three decimals
        CHECK(f[5] == "10");
        CHECK(f[6] == "1");
    }
}

TEST_CASE("compare respects --algorithms, --seed and --pruning") {
    const RunResult r = run_cli({"compare", "@embedded", "--algorithms", "cart,id3", "--seed",
                                 "3", "--pruning", "on", "--format", "csv"});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 3);
    // canonical algorithm order, duplicates collapsed
    CHECK(split_csv(lines[1])[0] == "id3");
    CHECK(split_csv(lines[2])[0] == "cart");
    CHECK(split_csv(lines[2])[1] == "35.41666666666667");
    CHECK(split_csv(lines[1])[6] == "3");
}

TEST_CASE("compare renders text, json and svg") {
    const RunResult text = run_cli({"compare", "@embedded"});
    REQUIRE(text.code == 0);
    CHECK(text.out.find("Stratified 10-fold cross-validation (seed 1, pruning off)") !=
          std::string::npos);
    CHECK(text.out.find("confusion matrix") != std::string::npos);
    CHECK(text.out.find("unclassified") != std::string::npos);

    const RunResult json = run_cli({"compare", "@embedded", "--format", "json"});
    REQUIRE(json.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(json.out);
    CHECK(doc["k"] == 10);
    CHECK(doc["seed"] == 1);
    CHECK(doc["pruning"] == false);
    REQUIRE(doc["reports"].size() == 3);
    CHECK(doc["reports"][0]["algorithm"] == "id3");
    CHECK(doc["reports"][0]["correct"] == 22);
    CHECK(doc["reports"][2]["algorithm"] == "cart");
    CHECK(doc["reports"][2]["matrix"]["labels"].size() == 4);

    const RunResult svg = run_cli({"compare", "@embedded", "--format", "svg"});
    REQUIRE(svg.code == 0);
    CHECK(svg.out.find("<svg") == 0);
    CHECK(svg.out.find("id3") != std::string::npos);

    // identical configuration renders identical bytes
    const RunResult svg2 = run_cli({"compare", "@embedded", "--format", "svg"});
    CHECK(svg.out == svg2.out);
}

TEST_CASE("train writes a model document and prints the tree") {
    const fs::path model = temp_file("model.json");
    fs::remove(model);
    const RunResult r = run_cli({"train", "@embedded", "--algorithm", "cart", "--pruning",
                                 "on", "--output", model.string()});
    REQUIRE(r.code == 0);
    REQUIRE(fs::exists(model));
    CHECK_FALSE(fs::exists(model.string() + ".tmp"));
    CHECK(r.out.find("PSM IN {'First'}") == 0); // tree text goes to stdout

    std::ifstream in(model);
    const nlohmann::json doc = nlohmann::json::parse(in);
    CHECK(doc["format"] == "treekit-model");
    CHECK(doc["version"] == 1);
    CHECK(doc["algorithm"] == "cart");
    CHECK(doc["params"]["pruning"] == true);
    CHECK(doc["schema"]["class_index"] == 6);
    CHECK(doc["schema"]["attributes"].size() == 7);
    CHECK(doc["tree"]["kind"] == "subset_split");
    fs::remove(model);
}

TEST_CASE("predict scores ARFF files against a trained model") {
    const fs::path model = temp_file("predict_model.json");
    REQUIRE(run_cli({"train", "@embedded", "--algorithm", "cart", "--pruning", "on",
                     "--output", model.string()})
                .code == 0);

    const RunResult r = run_cli({"predict", students_path(), "--model", model.string()});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 48);
    CHECK(lines[0] == "First [0.8, 0.1, 0.1, 0]");
    CHECK(lines[47].find("UNCLASSIFIED") == std::string::npos);

    const RunResult csv =
        run_cli({"predict", students_path(), "--model", model.string(), "--format", "csv"});
    REQUIRE(csv.code == 0);
    const std::vector<std::string> csv_lines = split_lines(csv.out);
    REQUIRE(csv_lines.size() == 49);
    CHECK(csv_lines[0] == "prediction,First,Second,Third,Fail");
    CHECK(split_csv(csv_lines[1])[0] == "First");

    const RunResult js =
        run_cli({"predict", students_path(), "--model", model.string(), "--format", "json"});
    REQUIRE(js.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.size() == 48);
    CHECK(doc[0]["label"] == "First");
    fs::remove(model);
}

TEST_CASE("predict scores headered CSV rows") {
    const fs::path model = temp_file("csv_model.json");
    REQUIRE(run_cli({"train", "@embedded", "--algorithm", "cart", "--pruning", "on",
                     "--output", model.string()})
                .code == 0);
    const fs::path rows = temp_file("rows.csv");
    {
        std::ofstream f(rows);
        f << "PSM,CTG,SEM,ASS,ATT,LW,ESM\n"
          << "First,Good,Good,Yes,Good,Yes,?\n"
          << "Fail,Poor,Poor,No,Poor,Yes,?\n";
    }
    const RunResult r = run_cli({"predict", rows.string(), "--model", model.string()});
    REQUIRE(r.code == 0);
    const std::vector<std::string> lines = split_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].find("First") == 0);
    CHECK(lines[1].find("Fail") == 0);

    // a value the schema does not declare is a usage error with a position
    {
        std::ofstream f(rows);
        f << "PSM,CTG,SEM,ASS,ATT,LW,ESM\nFirst,Good,Good,Maybe,Good,Yes,?\n";
    }
    const RunResult bad = run_cli({"predict", rows.string(), "--model", model.string()});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("Maybe") != std::string::npos);
    CHECK(bad.err.find(":2:") != std::string::npos);
    fs::remove(rows);
    fs::remove(model);
}

TEST_CASE("predict rejects schema mismatches and missing predictor values") {
    const fs::path model = temp_file("mismatch_model.json");
    REQUIRE(run_cli({"train", "@embedded", "--algorithm", "id3", "--output", model.string()})
                .code == 0);

    const fs::path other = temp_file("other.arff");
    {
        std::ofstream f(other);
        f << "@relation other\n@attribute A {x,y}\n@attribute C {p,q}\n@data\nx,p\n";
    }
    const RunResult r = run_cli({"predict", other.string(), "--model", model.string()});
    CHECK(r.code == 1);
    CHECK(r.err.find("does not match the model") != std::string::npos);

    const fs::path holes = temp_file("holes.arff");
    {
        std::ofstream f(holes);
        std::ifstream src(students_path());
        std::string line;
        int row = 0;
        while (std::getline(src, line)) {
            if (line == "First,Good,Good,Yes,Good,Yes,First" && row++ == 0)
                line = "?,Good,Good,Yes,Good,Yes,First";
            f << line << "\n";
        }
    }
    const RunResult hole = run_cli({"predict", holes.string(), "--model", model.string()});
    CHECK(hole.code == 1);
    CHECK(hole.err.find("instance 1") != std::string::npos);
    fs::remove(other);
    fs::remove(holes);
    fs::remove(model);
}

TEST_CASE("rules subcommand renders text, csv and json") {
    const RunResult text =
        run_cli({"rules", "@embedded", "--algorithm", "cart", "--pruning", "on"});
    REQUIRE(text.code == 0);
    CHECK(text.out ==
          "IF PSM IN {'First'} THEN ESM = 'First'\n"
          "IF PSM IN {'Second', 'Third', 'Fail'} AND ASS IN {'Yes'} THEN ESM = 'Second'\n"
          "IF PSM IN {'Second', 'Third', 'Fail'} AND ASS IN {'No'} AND ATT IN {'Poor'} "
          "THEN ESM = 'Fail'\n"
          "IF PSM IN {'Second', 'Third', 'Fail'} AND ASS IN {'No'} AND ATT IN {'Average', "
          "'Good'} THEN ESM = 'Third'\n");

    const RunResult csv = run_cli(
        {"rules", "@embedded", "--algorithm", "cart", "--pruning", "on", "--format", "csv"});
    REQUIRE(csv.code == 0);
    CHECK(split_lines(csv.out)[0] == "antecedent,consequent");

    const RunResult js = run_cli(
        {"rules", "@embedded", "--algorithm", "cart", "--pruning", "on", "--format", "json"});
    REQUIRE(js.code == 0);
    const nlohmann::json doc = nlohmann::json::parse(js.out);
    REQUIRE(doc.size() == 4);
    CHECK(doc[0]["antecedent"] == "PSM IN {'First'}");
    CHECK(doc[0]["consequent"] == "First");
}

TEST_CASE("training data can come from an ARFF file instead of @embedded") {
    const RunResult file_run =
        run_cli({"compare", students_path(), "--format", "csv", "--seed", "2"});
    const RunResult embedded_run =
        run_cli({"compare", "@embedded", "--format", "csv", "--seed", "2"});
    REQUIRE(file_run.code == 0);
    // identical except for wall-clock timing
    const auto a = split_lines(file_run.out);
    const auto b = split_lines(embedded_run.out);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 1; i < a.size(); ++i) {
        auto fa = split_csv(a[i]);
        auto fb = split_csv(b[i]);
        fa[4] = fb[4] = "";
        CHECK(fa == fb);
    }
}

TEST_CASE("usage errors exit with code 1") {
    CHECK(run_cli({"train", "@embedded", "--algorithm", "c4.5"}).code == 1);
    CHECK(run_cli({"compare", "@embedded", "--k", "1"}).code == 1);
    CHECK(run_cli({"compare", "@embedded", "--k", "49"}).code == 1);
    CHECK(run_cli({"compare", "@embedded", "--format", "yaml"}).code == 1);
    CHECK(run_cli({"predict", students_path(), "--model", "m.json", "--format", "svg"}).code ==
          1);
    CHECK(run_cli({"train", "@embedded"}).code == 1);      // missing --algorithm
    CHECK(run_cli({"train", "@embedded", "--algorithm", "id3", "--format", "svg"}).code == 1);
    CHECK(run_cli({}).code == 1);                          // missing subcommand
    CHECK(run_cli({"bogus"}).code == 1);
    CHECK(run_cli({"compare", "@embedded", "--bogus"}).code == 1);
}

TEST_CASE("data errors exit with code 2") {
    CHECK(run_cli({"compare", "/nonexistent/nothing.arff"}).code == 2);

    const fs::path bad = temp_file("bad.arff");
    {
        std::ofstream f(bad);
        f << "@relation r\n@attribute a {x,x}\n@data\n";
    }
    const RunResult r = run_cli({"compare", bad.string()});
    CHECK(r.code == 2);
    CHECK(r.err.find(":2:") != std::string::npos); // positioned diagnostic

    const fs::path not_model = temp_file("not_model.json");
    {
        std::ofstream f(not_model);
        f << "{\"hello\": 1}";
    }
    CHECK(run_cli({"predict", students_path(), "--model", not_model.string()}).code == 2);

    const fs::path garbage = temp_file("garbage.json");
    {
        std::ofstream f(garbage);
        f << "not json at all";
    }
    CHECK(run_cli({"predict", students_path(), "--model", garbage.string()}).code == 2);
    fs::remove(bad);
    fs::remove(not_model);
    fs::remove(garbage);
}

TEST_CASE("help exits cleanly") {
    const RunResult top = run_cli({"--help"});
    CHECK(top.code == 0);
    const RunResult sub = run_cli({"train", "--help"});
    CHECK(sub.code == 0);
}
