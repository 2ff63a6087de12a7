#include "chordless/instances.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace chordless {

namespace {

struct Line {
    int number;
    std::string text;
};

std::vector<Line> split_lines(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string s;
    int no = 0;
    while (std::getline(in, s)) {
        ++no;
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
        std::size_t start = s.find_first_not_of(" \t");
        if (start == std::string::npos) continue;
        lines.push_back({no, s.substr(start)});
    }
    return lines;
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

bool parse_two_ints(const std::string& s, long& a, long& b) {
    std::istringstream in(s);
    std::string rest;
    if (!(in >> a >> b)) return false;
    if (in >> rest) return false;
    return true;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
    auto lines = split_lines(text);
    std::vector<std::pair<long, long>> pairs;
    pairs.reserve(lines.size());
    for (const auto& ln : lines) {
        if (ln.text[0] == 'c' || ln.text[0] == '#' || ln.text[0] == '%') continue;
        long a, b;
        if (!parse_two_ints(ln.text, a, b)) fail(ln.number, "expected two integers");
        pairs.push_back({a, b});
    }
    if (pairs.empty()) return Graph(0, {});

    // Header detection: the first line is "n m" when m matches the number of
    // remaining lines and no remaining vertex id exceeds n.
    long max_rest = 0;
    for (std::size_t i = 1; i < pairs.size(); ++i)
        max_rest = std::max({max_rest, pairs[i].first, pairs[i].second});
    bool header = pairs[0].second == static_cast<long>(pairs.size()) - 1 &&
                  pairs[0].first >= max_rest && pairs[0].first >= 1;

    long n = header ? pairs[0].first : 0;
    std::size_t first = header ? 1 : 0;
    if (!header)
        for (const auto& p : pairs) n = std::max({n, p.first, p.second});

    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = first; i < pairs.size(); ++i) {
        auto [a, b] = pairs[i];
        if (a < 1 || a > n || b < 1 || b > n)
            throw ParseError("edge " + std::to_string(a) + " " + std::to_string(b) +
                             " out of range 1.." + std::to_string(n));
        edges.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return Graph(static_cast<int>(n), edges);
}

Graph parse_dimacs(const std::string& text) {
    auto lines = split_lines(text);
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    for (const auto& ln : lines) {
        std::istringstream in(ln.text);
        std::string tag;
        in >> tag;
        if (tag == "c") continue;
        if (tag == "p") {
            std::string kind;
            if (!(in >> kind >> n >> m) || (kind != "edge" && kind != "col" && kind != "edges"))
                fail(ln.number, "bad problem line");
            continue;
        }
        if (tag == "e") {
            long a, b;
            if (!(in >> a >> b)) fail(ln.number, "bad edge line");
            if (n < 0) fail(ln.number, "edge before problem line");
            if (a < 1 || a > n || b < 1 || b > n) fail(ln.number, "vertex out of range");
            edges.push_back({static_cast<int>(a), static_cast<int>(b)});
            continue;
        }
        fail(ln.number, "unknown record '" + tag + "'");
    }
    if (n < 0) throw ParseError("missing problem line");
    return Graph(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << " " << g.edge_count() << "\n";
    for (auto [i, j] : g.edges()) out << i << " " << j << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    for (const auto& ln : split_lines(text)) {
        if (ln.text[0] == 'p' || ln.text[0] == 'e') return parse_dimacs(text);
        if (std::isdigit(static_cast<unsigned char>(ln.text[0]))) return parse_edge_list(text);
    }
    return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_graph(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

Graph gen_random(int n, double density, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("gen_random: negative n");
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("gen_random: density outside [0,1]");
    std::vector<std::pair<int, int>> edges;
    std::uint64_t t = 0;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j, ++t) {
            std::uint64_t h = splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * (t + 1)));
            double r = static_cast<double>(h >> 11) * 0x1.0p-53;
            if (r < density) edges.push_back({i, j});
        }
    return Graph(n, edges);
}

const std::vector<InstanceRecord>& rwc_catalog() {
    static const std::vector<InstanceRecord> table = {
        {"high-tech", 33, 91, 10, 5, InstanceSource::RWC},
        {"karate", 34, 78, 6, 5, InstanceSource::RWC},
        {"mexican", 35, 117, 13, 7, InstanceSource::RWC},
        {"sawmill", 36, 62, 6, 5, InstanceSource::RWC},
        {"tailorS1", 39, 158, 12, 7, InstanceSource::RWC},
        {"chesapeake", 39, 170, 15, 5, InstanceSource::RWC},
        {"tailorS2", 39, 223, 12, 5, InstanceSource::RWC},
        {"attiro", 59, 128, 28, 9, InstanceSource::RWC},
        {"krebs", 62, 153, 8, 7, InstanceSource::RWC},
        {"dolphins", 62, 159, 20, 7, InstanceSource::RWC},
        {"prison", 67, 142, 28, 9, InstanceSource::RWC},
        {"huck", 69, 297, 5, 5, InstanceSource::RWC},
        {"sanjuansur", 75, 144, 35, 11, InstanceSource::RWC},
        {"jean", 77, 254, 7, 5, InstanceSource::RWC},
        {"david", 87, 406, 15, 8, InstanceSource::RWC},
        {"ieeebus", 118, 179, 32, 13, InstanceSource::RWC},
        {"sfi", 118, 200, 3, 3, InstanceSource::RWC},
        {"anna", 138, 493, 15, std::nullopt, InstanceSource::RWC},
        {"494bus", 494, 586, 116, std::nullopt, InstanceSource::RWC},
    };
    return table;
}

std::optional<InstanceRecord> catalog_lookup(const std::string& name) {
    for (const auto& rec : rwc_catalog())
        if (rec.name == name) return rec;
    return std::nullopt;
}

std::string csv_header(bool with_connectivity) {
    std::string h = "instance,model,strategy,warm_start,length,status,nodes,cuts,seconds";
    if (with_connectivity) h += ",connected";
    return h;
}

}  // namespace chordless
