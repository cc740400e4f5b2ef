#include <icol/io.hpp>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>

namespace icol
{
    using ordered_json = nlohmann::ordered_json;

    auto make_certificate(EdgeColoring coloring, int t) -> Certificate
    {
        auto report = verify_interval(coloring, t);
        Certificate cert{std::move(coloring), t, report.valid(), std::nullopt};
        if (! report.valid())
            cert.reason = report.reason();
        return cert;
    }

    auto to_json_text(const Certificate & cert) -> std::string
    {
        ordered_json doc;
        doc["n"] = cert.coloring.graph.vertex_count();
        auto edges = ordered_json::array();
        for (auto & [u, v] : cert.coloring.graph.edges())
            edges.push_back({u, v});
        doc["edges"] = std::move(edges);
        doc["t"] = cert.t;
        doc["colors"] = cert.coloring.colors;
        doc["verdict"] = cert.valid ? "valid" : "invalid";
        if (cert.reason)
            doc["reason"] = *cert.reason;
        else
            doc["reason"] = nullptr;
        return doc.dump() + "\n";
    }

    auto write_certificate(std::ostream & out, const Certificate & cert) -> void
    {
        out << to_json_text(cert);
    }

    namespace
    {
        auto field(const ordered_json & doc, const char * name) -> const ordered_json &
        {
            auto it = doc.find(name);
            if (it == doc.end())
                throw ParseError(std::string("certificate: missing field \"") + name + "\"");
            return *it;
        }

        auto as_int(const ordered_json & j, const std::string & where) -> int
        {
            if (! j.is_number_integer())
                throw ParseError("certificate: field " + where + " must be an integer");
            auto v = j.get<long long>();
            if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
                throw ParseError("certificate: field " + where + " out of range");
            return static_cast<int>(v);
        }
    }

    auto parse_certificate(const std::string & text) -> Certificate
    {
        ordered_json doc;
        try {
            doc = ordered_json::parse(text);
        }
        catch (const nlohmann::json::parse_error & e) {
            throw ParseError(std::string("certificate: malformed JSON: ") + e.what());
        }
        if (! doc.is_object())
            throw ParseError("certificate: top level must be an object");

        const int n = as_int(field(doc, "n"), "\"n\"");
        if (n < 0)
            throw ParseError("certificate: field \"n\" must be nonnegative");

        auto & edges_json = field(doc, "edges");
        if (! edges_json.is_array())
            throw ParseError("certificate: field \"edges\" must be an array");
        std::vector<Edge> edges;
        for (std::size_t i = 0 ; i < edges_json.size() ; ++i) {
            auto where = "\"edges\"[" + std::to_string(i) + "]";
            auto & e = edges_json[i];
            if (! e.is_array() || e.size() != 2)
                throw ParseError("certificate: field " + where + " must be a pair [u,v]");
            int u = as_int(e[0], where + "[0]"), v = as_int(e[1], where + "[1]");
            if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
                throw ParseError("certificate: field " + where + " must satisfy 0 <= u < v < n");
            if (! edges.empty() && ! (edges.back() < Edge{u, v}))
                throw ParseError("certificate: field " + where + " breaks canonical edge order");
            edges.push_back({u, v});
        }

        const int t = as_int(field(doc, "t"), "\"t\"");

        auto & colors_json = field(doc, "colors");
        if (! colors_json.is_array())
            throw ParseError("certificate: field \"colors\" must be an array");
        if (colors_json.size() != edges.size())
            throw ParseError("certificate: field \"colors\" has " + std::to_string(colors_json.size())
                    + " entries for " + std::to_string(edges.size()) + " edges");
        std::vector<Color> colors;
        for (std::size_t i = 0 ; i < colors_json.size() ; ++i) {
            auto where = "\"colors\"[" + std::to_string(i) + "]";
            int c = as_int(colors_json[i], where);
            if (c < 1)
                throw ParseError("certificate: field " + where + " must be >= 1");
            colors.push_back(c);
        }

        auto & verdict = field(doc, "verdict");
        if (! verdict.is_string() || (verdict != "valid" && verdict != "invalid"))
            throw ParseError("certificate: field \"verdict\" must be \"valid\" or \"invalid\"");

        auto & reason = field(doc, "reason");
        if (! reason.is_null() && ! reason.is_string())
            throw ParseError("certificate: field \"reason\" must be a string or null");

        Certificate cert{EdgeColoring(Graph(n, std::move(edges)), std::move(colors)), t, verdict == "valid",
            std::nullopt};
        if (reason.is_string())
            cert.reason = reason.get<std::string>();
        return cert;
    }

    auto read_certificate(std::istream & in) -> Certificate
    {
        std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
        return parse_certificate(text);
    }

    auto write_dot(std::ostream & out, const EdgeColoring & c, const std::string & name) -> void
    {
        out << "graph " << name << " {\n";
        for (Vertex v = 0 ; v < c.graph.vertex_count() ; ++v)
            out << "  " << v << ";\n";
        for (EdgeId e = 0 ; e < c.graph.edge_count() ; ++e)
            out << "  " << c.graph.edge(e).u << " -- " << c.graph.edge(e).v
                << " [label=\"" << c.colors[e] << "\"];\n";
        out << "}\n";
    }

    auto outcome_record(const SearchOutcome & out) -> std::string
    {
        ordered_json doc;
        doc["status"] = to_string(out.status);
        doc["t"] = out.t;
        doc["nodes"] = out.nodes;
        doc["seconds"] = out.seconds;
        return doc.dump();
    }

    auto write_file_atomically(const std::string & path, const std::string & contents) -> void
    {
        namespace fs = std::filesystem;
        fs::path target(path);
        fs::path tmp = target;
        tmp += ".tmp";
        {
            std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
            if (! f)
                throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            f << contents;
            if (! f.flush())
                throw std::runtime_error("cannot write " + tmp.string());
        }
        fs::rename(tmp, target);
    }
}
