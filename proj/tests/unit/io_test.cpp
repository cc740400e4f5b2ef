#include <icol/constructors.hpp>
#include <icol/io.hpp>

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

using namespace icol;

TEST_CASE("certificate layout")
{
    auto c = widest_even_cycle_coloring(2);
    auto text = to_json_text(make_certificate(c.coloring, c.claimed_t));
    CHECK(text == "{\"n\":4,\"edges\":[[0,1],[0,3],[1,2],[2,3]],\"t\":3,\"colors\":[1,2,2,3],"
                  "\"verdict\":\"valid\",\"reason\":null}\n");

    auto bad = make_certificate(c.coloring, 4);
    CHECK_FALSE(bad.valid);
    REQUIRE(bad.reason.has_value());
    CHECK(to_json_text(bad).find("\"verdict\":\"invalid\"") != std::string::npos);
}

TEST_CASE("round trip is lossless and verdict-stable")
{
    std::vector<Construction> cs{grid_widest(3, 4), cylinder_minimal(3, 5), torus_widest(6, 3), hypercube_widest(4)};
    for (auto & c : cs) {
        auto cert = make_certificate(c.coloring, c.claimed_t);
        auto text = to_json_text(cert);
        auto back = parse_certificate(text);
        CHECK(back == cert);
        CHECK(to_json_text(back) == text);
        CHECK(make_certificate(back.coloring, back.t).valid == cert.valid);
    }
}

TEST_CASE("certificates are byte-stable across runs")
{
    CHECK(to_json_text(make_certificate(grid_widest(5, 6).coloring, 12))
            == to_json_text(make_certificate(grid_widest(5, 6).coloring, 12)));
}

TEST_CASE("parse errors name the field")
{
    auto error = [] (const std::string & text) {
        try {
            parse_certificate(text);
        }
        catch (const ParseError & e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    const std::string good = "{\"n\":2,\"edges\":[[0,1]],\"t\":1,\"colors\":[1],\"verdict\":\"valid\",\"reason\":null}";
    CHECK(error(good) == "no error");
    CHECK(error(good.substr(0, 20)).find("malformed JSON") != std::string::npos);
    CHECK(error("[]").find("object") != std::string::npos);
    CHECK(error("{\"edges\":[],\"t\":1,\"colors\":[],\"verdict\":\"valid\",\"reason\":null}").find("\"n\"") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[1,0]],\"t\":1,\"colors\":[1],\"verdict\":\"valid\",\"reason\":null}").find("\"edges\"[0]") != std::string::npos);
    CHECK(error("{\"n\":3,\"edges\":[[1,2],[0,1]],\"t\":1,\"colors\":[1,2],\"verdict\":\"valid\",\"reason\":null}").find("canonical") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[0,1]],\"t\":1,\"colors\":[1,2],\"verdict\":\"valid\",\"reason\":null}").find("\"colors\"") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[0,1]],\"t\":1,\"colors\":[0],\"verdict\":\"valid\",\"reason\":null}").find("\"colors\"[0]") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[0,1]],\"t\":\"1\",\"colors\":[1],\"verdict\":\"valid\",\"reason\":null}").find("\"t\"") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[0,1]],\"t\":1,\"colors\":[1],\"verdict\":\"ok\",\"reason\":null}").find("\"verdict\"") != std::string::npos);
    CHECK(error("{\"n\":2,\"edges\":[[0,1]],\"t\":1,\"colors\":[1],\"verdict\":\"valid\"}").find("\"reason\"") != std::string::npos);
}

TEST_CASE("DOT export has one labelled edge statement per edge")
{
    auto c = torus_widest(4, 5);
    std::ostringstream s;
    write_dot(s, c.coloring);
    auto dot = s.str();
    std::regex edge_re(R"re((\d+) -- (\d+) \[label="(\d+)"\];)re");
    int count = 0;
    for (auto it = std::sregex_iterator(dot.begin(), dot.end(), edge_re) ; it != std::sregex_iterator() ; ++it) {
        int u = std::stoi((*it)[1]), v = std::stoi((*it)[2]), label = std::stoi((*it)[3]);
        CHECK(c.coloring.color(u, v) == label);
        ++count;
    }
    CHECK(count == c.coloring.graph.edge_count());
    CHECK(dot.rfind("graph G {", 0) == 0);
}

TEST_CASE("outcome record")
{
    SearchOutcome o;
    o.status = SearchStatus::BudgetExceeded;
    o.t = 7;
    o.nodes = 100;
    o.seconds = 0.5;
    CHECK(outcome_record(o) == "{\"status\":\"budget_exceeded\",\"t\":7,\"nodes\":100,\"seconds\":0.5}");
}

TEST_CASE("atomic writes replace the target")
{
    auto dir = std::filesystem::temp_directory_path() / "icol-io-test";
    std::filesystem::create_directories(dir);
    auto path = (dir / "out.json").string();
    write_file_atomically(path, "first\n");
    write_file_atomically(path, "second\n");
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "second");
    CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
    std::filesystem::remove_all(dir);
}
