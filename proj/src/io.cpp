#include "msf/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace msf {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    int n_vertices = -1;
    long long n_edges = -1;
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<mpq_class> exact_labels;
    std::vector<double> float_labels;
    bool any_label = false, any_rational = false;

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        std::istringstream ls(body);
        if (n_vertices < 0) {
            std::string kw1, kw2;
            if (!(ls >> kw1 >> n_vertices >> kw2 >> n_edges) ||
                kw1 != "vertices" || kw2 != "edges" || n_vertices < 0 ||
                n_edges < 0)
                throw ParseError("expected header 'vertices N edges M'", line_no);
            continue;
        }
        long long u, v;
        if (!(ls >> u >> v))
            throw ParseError("expected edge line 'u v [label]'", line_no);
        if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices)
            throw ParseError("edge endpoint out of range", line_no);
        std::string label;
        if (ls >> label) {
            any_label = true;
            if (label.find('/') != std::string::npos) {
                any_rational = true;
                mpq_class q;
                if (q.set_str(label, 10) != 0)
                    throw ParseError("bad rational label", line_no);
                q.canonicalize();
                if (q < 0 || q > 1)
                    throw ParseError("label outside [0,1]", line_no);
                exact_labels.push_back(q);
                float_labels.push_back(q.get_d());
            } else {
                double d;
                auto [ptr, ec] =
                    std::from_chars(label.data(), label.data() + label.size(), d);
                if (ec != std::errc{} || ptr != label.data() + label.size())
                    throw ParseError("bad numeric label", line_no);
                if (d < 0.0 || d > 1.0)
                    throw ParseError("label outside [0,1]", line_no);
                exact_labels.push_back(mpq_class(d));
                float_labels.push_back(d);
            }
        } else if (any_label) {
            throw ParseError("missing label column", line_no);
        }
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens on edge line", line_no);
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    if (n_vertices < 0) throw ParseError("missing header", line_no);
    if (static_cast<long long>(edges.size()) != n_edges)
        throw ParseError("edge count does not match header", line_no);
    if (any_label && edges.size() != float_labels.size())
        throw ParseError("labels must cover all edges or none", line_no);

    GraphFile gf;
    gf.graph = build_graph(n_vertices, edges);
    if (any_label) {
        gf.labels = any_rational ? labels_from_rationals(exact_labels)
                                 : labels_from_values(float_labels);
    }
    return gf;
}

GraphFile read_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_label(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string format_graph(const MultiGraph& g, const Labeling* labels) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count << " edges " << g.edge_count() << "\n";
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        out << g.endpoints[e].first << " " << g.endpoints[e].second;
        if (labels) {
            out << " ";
            if (labels->mode == LabelMode::Exact)
                out << labels->exact[e].get_str();
            else
                out << format_label(labels->vals[e]);
        }
        out << "\n";
    }
    return out.str();
}

void write_graph(const MultiGraph& g, const std::string& path,
                 const Labeling* labels) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write graph file: " + path);
    out << format_graph(g, labels);
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file for digest: " + path);
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

std::string RunManifest::to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["args"] = args;
    j["seeds"] = seeds;
    nlohmann::json outs = nlohmann::json::object();
    for (auto& [path, digest] : outputs) outs[path] = digest;
    j["outputs"] = outs;
    j["schema_version"] = 1;
    return j.dump(2);
}

void RunManifest::write(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write manifest: " + path);
    out << to_json() << "\n";
}

}  // namespace msf
